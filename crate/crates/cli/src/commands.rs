use std::io::Write;

use serde::Serialize;
use serde_json::{json, Map, Value};
use strongclique::codec::to_graph6;
use strongclique::generators::enumerate_graphs;
use strongclique::verifier::{
    audit_matching_decomposition, batch_verify, write_evidence, BatchOptions, BatchSummary,
    BoundId, BoundSpec, DecompositionAudit, Status,
};
use strongclique::witness::{
    check_minimal_properties, find_xm_path, is_x_special, matching_cycle, matching_path,
    s_minimal_reduce,
};
use strongclique::{
    edge_distance, find_cycle_of_length, maximum_matching, strong_clique_number, EdgeId, Graph,
    Matching,
};

use crate::args::{
    Command, Common, Construction, DistanceArgs, EnumerateArgs, FreeArgs, GenerateArgs, ScArgs,
    VerifyArgs, WitnessArgs,
};
use crate::error::{CliError, CliResult};
use crate::input::{build_all, family_requested, generator_specs, read_graphs};

/// Runs one subcommand, writing its report to `out`; returns the exit code.
pub fn run(command: Command, out: &mut dyn Write) -> CliResult<u8> {
    match command {
        Command::Sc(a) => sc(a, out),
        Command::Distance(a) => distance(a, out),
        Command::Free(a) => free(a, out),
        Command::Generate(a) => generate(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Witness(a) => witness(a, out),
        Command::Enumerate(a) => enumerate(a, out),
    }
}

fn config(command: &str, common: Option<&Common>, extra: Value) -> CliResult<Value> {
    let mut map = Map::new();
    map.insert("command".into(), command.into());
    if let Some(c) = common {
        if let Value::Object(fields) = serde_json::to_value(c)? {
            map.extend(fields);
        }
    }
    if let Value::Object(fields) = extra {
        map.extend(fields);
    }
    Ok(Value::Object(map))
}

fn header(out: &mut dyn Write, config: &Value) -> CliResult<()> {
    writeln!(out, "# config {}", serde_json::to_string(config)?)?;
    Ok(())
}

fn document(out: &mut dyn Write, config: Value, body: Value) -> CliResult<()> {
    let mut map = Map::new();
    map.insert("config".into(), config);
    if let Value::Object(fields) = body {
        map.extend(fields);
    }
    serde_json::to_writer_pretty(&mut *out, &Value::Object(map))?;
    writeln!(out)?;
    Ok(())
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn edge_ids(raw: &[usize]) -> Vec<EdgeId> {
    raw.iter().map(|&e| EdgeId(e)).collect()
}

#[derive(Serialize)]
struct ScEntry {
    index: usize,
    graph6: String,
    n: usize,
    edges: usize,
    max_degree: usize,
    sc: usize,
    witness: Vec<EdgeId>,
    pairs: Vec<(usize, usize)>,
}

fn sc(a: ScArgs, out: &mut dyn Write) -> CliResult<u8> {
    let graphs = read_graphs(&a.common)?;
    let cfg = config("sc", Some(&a.common), json!({}))?;
    let entries: Vec<ScEntry> = graphs
        .iter()
        .enumerate()
        .map(|(index, g)| {
            let w = strong_clique_number(g);
            ScEntry {
                index,
                graph6: to_graph6(g),
                n: g.vertex_count(),
                edges: g.edge_count(),
                max_degree: g.max_degree(),
                sc: w.size,
                pairs: w.edges.iter().map(|&e| g.endpoints(e)).collect(),
                witness: w.edges,
            }
        })
        .collect();
    if a.common.json {
        document(out, cfg, json!({ "graphs": entries }))?;
    } else {
        header(out, &cfg)?;
        for e in &entries {
            writeln!(
                out,
                "graph {}: n={} m={} max_degree={} sc={} witness=[{}] pairs=[{}]",
                e.index,
                e.n,
                e.edges,
                e.max_degree,
                e.sc,
                join(e.witness.iter().map(|x| x.0), ","),
                join(e.pairs.iter().map(|(u, v)| format!("{u}-{v}")), ",")
            )?;
        }
    }
    Ok(0)
}

fn distance(a: DistanceArgs, out: &mut dyn Write) -> CliResult<u8> {
    if a.edges.len() != 2 {
        return Err(CliError::Usage(format!(
            "--edges takes exactly two edge ids, got {}",
            a.edges.len()
        )));
    }
    let graphs = read_graphs(&a.common)?;
    let cfg = config("distance", Some(&a.common), json!({ "edges": a.edges }))?;
    let (e, f) = (EdgeId(a.edges[0]), EdgeId(a.edges[1]));
    let mut rows = Vec::new();
    for (index, g) in graphs.iter().enumerate() {
        let d = edge_distance(g, e, f)?;
        rows.push(json!({
            "index": index,
            "edges": [g.endpoints(e), g.endpoints(f)],
            "distance": d,
            "within_two": d.is_within(2),
        }));
    }
    if a.common.json {
        document(out, cfg, json!({ "graphs": rows }))?;
    } else {
        header(out, &cfg)?;
        for r in &rows {
            writeln!(
                out,
                "graph {}: distance(e{}, e{}) = {}",
                r["index"],
                e.0,
                f.0,
                match &r["distance"] {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                }
            )?;
        }
    }
    Ok(0)
}

fn free(a: FreeArgs, out: &mut dyn Write) -> CliResult<u8> {
    let graphs = read_graphs(&a.common)?;
    let cfg = config("free", Some(&a.common), json!({ "lengths": a.lengths }))?;
    let mut rows = Vec::new();
    let mut text = Vec::new();
    for (index, g) in graphs.iter().enumerate() {
        let mut per_len = Vec::new();
        for &len in &a.lengths {
            let found = find_cycle_of_length(g, len)?;
            text.push(match &found {
                Some(c) => format!("graph {index}: C{len} found [{}]", join(&c.vertices, ",")),
                None => format!("graph {index}: C{len} free"),
            });
            per_len.push(json!({
                "length": len,
                "found": found.is_some(),
                "witness": found.map(|c| c.vertices),
            }));
        }
        rows.push(json!({
            "index": index,
            "free": per_len.iter().all(|r| r["found"] == false),
            "lengths": per_len,
        }));
    }
    if a.common.json {
        document(out, cfg, json!({ "graphs": rows }))?;
    } else {
        header(out, &cfg)?;
        for line in text {
            writeln!(out, "{line}")?;
        }
    }
    Ok(0)
}

fn generate(a: GenerateArgs, out: &mut dyn Write) -> CliResult<u8> {
    let specs = generator_specs(&a.family, a.k, a.seed)?;
    let graphs = build_all(&specs)?;
    let cfg = config(
        "generate",
        None,
        json!({ "seed": a.seed, "generators": specs }),
    )?;
    if a.json {
        let rows: Vec<Value> = specs
            .iter()
            .zip(&graphs)
            .map(|(s, g)| {
                json!({
                    "label": s.label(),
                    "graph6": to_graph6(g),
                    "n": g.vertex_count(),
                    "edges": g.edge_count(),
                })
            })
            .collect();
        document(out, cfg, json!({ "graphs": rows }))?;
    } else {
        header(out, &cfg)?;
        for g in &graphs {
            writeln!(out, "{}", to_graph6(g))?;
        }
    }
    Ok(0)
}

/// Turns `--spec` tokens and `--k` values into bound specs. Identifiers
/// named explicitly must have at least one `k` in their domain (and with a
/// single `k`, that one must be); those pulled in by `theorems` or `all`
/// just skip values outside their domain.
pub fn expand_specs(tokens: &[String], ks: &[usize]) -> CliResult<Vec<BoundSpec>> {
    let mut ids: Vec<(BoundId, bool)> = Vec::new();
    for t in tokens {
        match t.to_ascii_lowercase().as_str() {
            "all" => ids.extend(BoundId::ALL.into_iter().map(|id| (id, false))),
            "theorems" => ids.extend(
                BoundId::ALL
                    .into_iter()
                    .filter(|id| !id.is_conjecture())
                    .map(|id| (id, false)),
            ),
            _ => ids.push((t.parse::<BoundId>()?, true)),
        }
    }
    let mut specs: Vec<BoundSpec> = Vec::new();
    let mut push = |s: BoundSpec| {
        if !specs.contains(&s) {
            specs.push(s);
        }
    };
    for (id, explicit) in ids {
        if !id.takes_k() {
            push(BoundSpec::new(id, None)?);
            continue;
        }
        if ks.is_empty() {
            if explicit {
                return Err(CliError::Usage(format!("{id} needs --k")));
            }
            continue;
        }
        let mut any = false;
        for &k in ks {
            match BoundSpec::new(id, Some(k)) {
                Ok(s) => {
                    push(s);
                    any = true;
                }
                Err(e) if explicit && ks.len() == 1 => return Err(e.into()),
                Err(_) => {}
            }
        }
        if explicit && !any {
            return Err(CliError::Usage(format!(
                "no --k value is in the domain of {id}"
            )));
        }
    }
    if specs.is_empty() {
        return Err(CliError::Usage("no bound left to check".into()));
    }
    Ok(specs)
}

enum Source {
    Graphs(Vec<Graph>),
    Enumerate { n: usize, dedup: bool },
}

impl Source {
    fn graphs(&self) -> CliResult<Box<dyn Iterator<Item = Graph> + '_>> {
        Ok(match self {
            Source::Graphs(v) => Box::new(v.iter().cloned()),
            Source::Enumerate { n, dedup } => Box::new(enumerate_graphs(*n, *dedup)?),
        })
    }
}

#[derive(Serialize)]
struct AuditFailure {
    index: usize,
    graph6: String,
    audit: DecompositionAudit,
}

#[derive(Serialize)]
struct AuditSummary {
    audited: usize,
    /// Graphs without edges, where the decomposition is undefined.
    skipped: usize,
    passed: usize,
    failures: Vec<AuditFailure>,
}

fn audit_source(source: &Source) -> CliResult<AuditSummary> {
    let mut s = AuditSummary {
        audited: 0,
        skipped: 0,
        passed: 0,
        failures: Vec::new(),
    };
    for (index, g) in source.graphs()?.enumerate() {
        if g.max_degree() == 0 {
            s.skipped += 1;
            continue;
        }
        let audit = audit_matching_decomposition(&g)?;
        s.audited += 1;
        if audit.passed() {
            s.passed += 1;
        } else {
            s.failures.push(AuditFailure {
                index,
                graph6: to_graph6(&g),
                audit,
            });
        }
    }
    Ok(s)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> CliResult<u8> {
    let specs = expand_specs(&a.spec, &a.k)?;
    if a.workers == 0 {
        return Err(CliError::Usage("--workers must be at least 1".into()));
    }
    let mut extra = Map::new();
    let source = if family_requested(&a.family) {
        let family_k = match a.k.as_slice() {
            [k] => Some(*k),
            _ => None,
        };
        let gens = generator_specs(&a.family, family_k, a.common.seed)?;
        let graphs = build_all(&gens)?;
        extra.insert("source".into(), "family".into());
        extra.insert("generators".into(), serde_json::to_value(&gens)?);
        Source::Graphs(graphs)
    } else if let Some(n) = a.enumerate {
        // fail on the cap before any work
        let _ = enumerate_graphs(n, false)?;
        extra.insert("source".into(), "enumerate".into());
        extra.insert("enumerate".into(), n.into());
        extra.insert("dedup".into(), a.dedup.into());
        Source::Enumerate { n, dedup: a.dedup }
    } else {
        let graphs = read_graphs(&a.common)?;
        extra.insert("source".into(), "input".into());
        Source::Graphs(graphs)
    };
    extra.insert("specs".into(), serde_json::to_value(&specs)?);
    extra.insert("k".into(), serde_json::to_value(&a.k)?);
    extra.insert("workers".into(), a.workers.into());
    extra.insert("reports".into(), a.reports.into());
    extra.insert("timing".into(), a.timing.into());
    extra.insert("audit".into(), a.audit.into());
    extra.insert(
        "evidence_dir".into(),
        serde_json::to_value(a.evidence_dir.as_ref().map(|p| p.display().to_string()))?,
    );
    let cfg = config("verify", Some(&a.common), Value::Object(extra))?;

    let options = BatchOptions {
        workers: a.workers,
        include_reports: a.reports,
        timing: a.timing,
    };
    let summary = batch_verify(source.graphs()?, &specs, options)?;
    let audit = if a.audit {
        Some(audit_source(&source)?)
    } else {
        None
    };
    if let Some(dir) = &a.evidence_dir {
        write_evidence(dir, &summary)?;
    }

    if a.common.json {
        let mut body = serde_json::to_value(&summary)?;
        if let (Value::Object(map), Some(audit)) = (&mut body, &audit) {
            map.insert("audit".into(), serde_json::to_value(audit)?);
        }
        document(out, cfg, body)?;
    } else {
        header(out, &cfg)?;
        write_verify_text(out, &summary, audit.as_ref())?;
    }
    let audit_failed = audit.as_ref().is_some_and(|s| !s.failures.is_empty());
    Ok(if audit_failed {
        2
    } else {
        summary.exit_code() as u8
    })
}

fn write_verify_text(
    out: &mut dyn Write,
    s: &BatchSummary,
    audit: Option<&AuditSummary>,
) -> CliResult<()> {
    writeln!(out, "graphs: {}", s.graphs)?;
    for agg in &s.aggregates {
        let ratio = agg.max_ratio.map_or("-".to_string(), |r| format!("{r:.4}"));
        writeln!(
            out,
            "{}: applicable={} holds={} tight={} counterexamples={} not_applicable={} max_ratio={}",
            agg.spec,
            agg.applicable,
            agg.holds,
            agg.tight,
            agg.counterexamples,
            agg.not_applicable,
            ratio
        )?;
    }
    if let Some(reports) = &s.reports {
        for gr in reports {
            for r in &gr.reports {
                let status = match r.status {
                    Status::Holds if r.tight => "holds (tight)",
                    Status::Holds => "holds",
                    Status::Counterexample => "COUNTEREXAMPLE",
                    Status::NotApplicable => "not applicable",
                };
                let bound = r.bound.map_or("-".to_string(), |b| b.to_string());
                let failed = join(
                    r.preconditions
                        .iter()
                        .filter(|p| !p.passed)
                        .map(|p| p.condition.as_str()),
                    "; ",
                );
                write!(
                    out,
                    "graph {} {} {}: max_degree={} sc={} bound={} {}",
                    gr.index, gr.graph6, r.spec, r.max_degree, r.sc, bound, status
                )?;
                if failed.is_empty() {
                    writeln!(out)?;
                } else {
                    writeln!(out, " (fails: {failed})")?;
                }
            }
        }
    }
    for gr in &s.counterexamples {
        for r in gr
            .reports
            .iter()
            .filter(|r| r.status == Status::Counterexample)
        {
            writeln!(
                out,
                "counterexample: graph {} {} {}: sc={} > bound={} witness=[{}]",
                gr.index,
                gr.graph6,
                r.spec,
                r.sc,
                r.bound.unwrap_or_default(),
                join(r.witness.iter().map(|e| e.0), ",")
            )?;
        }
    }
    if let Some(a) = audit {
        writeln!(
            out,
            "audit: audited={} passed={} skipped={} failures={}",
            a.audited,
            a.passed,
            a.skipped,
            a.failures.len()
        )?;
        for f in &a.failures {
            writeln!(
                out,
                "audit failure: graph {} {}: 2|E(H)|={} first={} second={}",
                f.index,
                f.graph6,
                f.audit.twice_edges,
                f.audit.twice_first_bound,
                f.audit.twice_second_bound
            )?;
        }
    }
    Ok(())
}

/// A maximum matching of the subgraph spanned by a maximum strong clique,
/// in host edge ids.
fn default_matching(g: &Graph) -> CliResult<Matching> {
    let sc = strong_clique_number(g);
    let sub = g.edge_induced_subgraph(&sc.edges)?;
    let local = maximum_matching(&sub.graph);
    let host: Vec<EdgeId> = local.edges().iter().map(|&e| sub.parent_edge(e)).collect();
    Ok(Matching::from_edges(g, &host)?)
}

fn witness_one(a: &WitnessArgs, g: &Graph) -> CliResult<(Value, String)> {
    let matching = || -> CliResult<Matching> {
        match &a.edges {
            Some(ids) => Ok(Matching::from_edges(g, &edge_ids(ids))?),
            None => default_matching(g),
        }
    };
    Ok(match a.construction {
        Construction::Lemma21Path => {
            let m = matching()?;
            let p = matching_path(g, &m)?;
            let all_used = m.edges().iter().all(|e| p.edges.contains(e));
            let text = format!(
                "path [{}] length={} matching=[{}] uses_all_matching_edges={}",
                join(&p.vertices, ","),
                p.len(),
                join(m.edges().iter().map(|e| e.0), ","),
                all_used
            );
            let v = json!({
                "matching": m.edges(),
                "path": p,
                "length": p.len(),
                "uses_all_matching_edges": all_used,
                "valid": p.is_valid_in(g),
            });
            (v, text)
        }
        Construction::Lemma21Cycle => {
            let m = matching()?;
            let c = matching_cycle(g, &m)?;
            let text = format!(
                "cycle [{}] length={} matching=[{}] matching_edges_used={}",
                join(&c.cycle.vertices, ","),
                c.cycle.len(),
                join(m.edges().iter().map(|e| e.0), ","),
                c.matching_edges_used
            );
            let v = json!({
                "matching": m.edges(),
                "cycle": c.cycle.vertices,
                "length": c.cycle.len(),
                "matching_edges_used": c.matching_edges_used,
                "valid": c.cycle.is_valid_in(g),
            });
            (v, text)
        }
        Construction::SMinimal => {
            let sc = strong_clique_number(g);
            let s = match &a.edges {
                Some(ids) => edge_ids(ids),
                None => sc.edges.clone(),
            };
            let red = s_minimal_reduce(g, &s)?;
            let s_is_maximum = red.s.len() == sc.size;
            let props = check_minimal_properties(red.graph(), &red.s, s_is_maximum)?;
            let vertices = red.subgraph.vertex_map.clone();
            let edges = red.subgraph.edge_map.clone();
            let text = format!(
                "reduced n={} m={} vertices=[{}] edges=[{}] s_is_maximum={} properties={}",
                vertices.len(),
                edges.len(),
                join(&vertices, ","),
                join(edges.iter().map(|e| e.0), ","),
                s_is_maximum,
                if props.all_pass() { "pass" } else { "FAIL" }
            );
            let v = json!({
                "s": s,
                "s_is_maximum": s_is_maximum,
                "reduced": { "vertices": vertices, "edges": edges },
                "properties": props,
                "all_pass": props.all_pass(),
            });
            (v, text)
        }
        Construction::XmPath => {
            let x =
                a.x.ok_or_else(|| CliError::Usage("xm-path needs --x".into()))?;
            let len = a
                .length
                .ok_or_else(|| CliError::Usage("xm-path needs --length".into()))?;
            let m = matching()?;
            let special = is_x_special(g, &m, x)?;
            let p = find_xm_path(g, &m, x, len)?;
            let text = match &p {
                Some(p) => format!(
                    "xm-path [{}] length={len} x_special={special}",
                    join(&p.vertices, ",")
                ),
                None => format!("xm-path none of length {len} x_special={special}"),
            };
            let v = json!({
                "matching": m.edges(),
                "x": x,
                "length": len,
                "x_special": special,
                "found": p.is_some(),
                "path": p,
            });
            (v, text)
        }
    })
}

fn witness(a: WitnessArgs, out: &mut dyn Write) -> CliResult<u8> {
    let graphs = read_graphs(&a.common)?;
    let cfg = config(
        "witness",
        Some(&a.common),
        json!({
            "construction": a.construction,
            "edges": a.edges,
            "x": a.x,
            "length": a.length,
        }),
    )?;
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    for (index, g) in graphs.iter().enumerate() {
        let (mut v, text) = witness_one(&a, g)?;
        if let Value::Object(map) = &mut v {
            map.shift_insert(0, "index".into(), index.into());
        }
        rows.push(v);
        lines.push(format!("graph {index}: {text}"));
    }
    if a.common.json {
        document(
            out,
            cfg,
            json!({ "construction": a.construction, "graphs": rows }),
        )?;
    } else {
        header(out, &cfg)?;
        for l in lines {
            writeln!(out, "{l}")?;
        }
    }
    Ok(0)
}

fn enumerate(a: EnumerateArgs, out: &mut dyn Write) -> CliResult<u8> {
    let graphs = enumerate_graphs(a.n, a.dedup)?;
    let cfg = config("enumerate", None, json!({ "n": a.n, "dedup": a.dedup }))?;
    if a.json {
        let all: Vec<String> = graphs.map(|g| to_graph6(&g)).collect();
        document(out, cfg, json!({ "count": all.len(), "graphs": all }))?;
    } else {
        header(out, &cfg)?;
        for g in graphs {
            writeln!(out, "{}", to_graph6(&g))?;
        }
    }
    Ok(0)
}
