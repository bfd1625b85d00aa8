use std::fs;
use std::io::{self, Read};
use std::str::FromStr;

use serde::Deserialize;
use strongclique::codec::{parse_edge_lists, parse_graph6_lines};
use strongclique::generators::{Family, GeneratorSpec};
use strongclique::Graph;

use crate::args::{Common, FamilyArgs, Format};
use crate::error::{CliError, CliResult};

/// Reads and parses every graph before anything is written, so malformed
/// input never leaves partial output behind.
pub fn read_graphs(common: &Common) -> CliResult<Vec<Graph>> {
    let source_name = if common.input == "-" {
        "<stdin>".to_string()
    } else {
        common.input.clone()
    };
    let text = if common.input == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(&common.input).map_err(|e| CliError::Input {
            source_name: source_name.clone(),
            error: e.into(),
        })?
    };
    let parsed = match common.format {
        Format::Graph6 => parse_graph6_lines(&text),
        Format::Edgelist => parse_edge_lists(&text),
    };
    parsed.map_err(|error| CliError::Input { source_name, error })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JobFile {
    One(GeneratorSpec),
    Many(Vec<GeneratorSpec>),
}

fn is_random(f: Family) -> bool {
    matches!(f, Family::Random | Family::RandomBipartite)
}

/// Expands `count` copies of a random spec with consecutive seeds.
fn expand(spec: GeneratorSpec, count: u64, seed: u64) -> CliResult<Vec<GeneratorSpec>> {
    if !is_random(spec.family) {
        if count != 1 {
            return Err(CliError::Usage(format!(
                "--count needs a random family, got {}",
                spec.family
            )));
        }
        return Ok(vec![spec]);
    }
    let base = spec.seed.unwrap_or(seed);
    Ok((0..count)
        .map(|i| GeneratorSpec {
            seed: Some(base.wrapping_add(i)),
            ..spec.clone()
        })
        .collect())
}

/// True when any family flag or a job file was given.
pub fn family_requested(f: &FamilyArgs) -> bool {
    f.family.is_some() || f.job.is_some()
}

/// Resolves family flags (or a JSON job file) into concrete generator specs.
/// Parameters the family does not read are rejected.
pub fn generator_specs(
    f: &FamilyArgs,
    k: Option<usize>,
    seed: u64,
) -> CliResult<Vec<GeneratorSpec>> {
    if let Some(path) = &f.job {
        if f.family.is_some() {
            return Err(CliError::Usage(
                "--job and --family are mutually exclusive".into(),
            ));
        }
        let text = fs::read_to_string(path)?;
        let job: JobFile = serde_json::from_str(&text).map_err(|e| CliError::Job {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        let entries = match job {
            JobFile::One(s) => vec![s],
            JobFile::Many(v) => v,
        };
        let mut out = Vec::new();
        for s in entries {
            out.extend(expand(s, f.count, seed)?);
        }
        return Ok(out);
    }
    let name = f
        .family
        .as_deref()
        .ok_or_else(|| CliError::Usage("--family or --job is required".into()))?;
    let family = Family::from_str(name)?;
    let given: [(&str, Option<String>); 9] = [
        ("t", f.t.map(|v| v.to_string())),
        ("q", f.q.map(|v| v.to_string())),
        ("p", f.p.map(|v| v.to_string())),
        ("k", k.map(|v| v.to_string())),
        ("a", f.a.map(|v| v.to_string())),
        ("b", f.b.map(|v| v.to_string())),
        ("n", f.n.map(|v| v.to_string())),
        ("m", f.m.map(|v| v.to_string())),
        ("prob", f.prob.map(|v| v.to_string())),
    ];
    for (param, value) in &given {
        if value.is_some() && !family.parameters().contains(param) {
            return Err(CliError::Usage(format!(
                "family {family} does not take --{param}"
            )));
        }
    }
    let spec = GeneratorSpec {
        t: f.t,
        q: f.q,
        p: f.p,
        k,
        a: f.a,
        b: f.b,
        n: f.n,
        m: f.m,
        prob: f.prob,
        seed: is_random(family).then_some(seed),
        ..GeneratorSpec::new(family)
    };
    expand(spec, f.count, seed)
}

pub fn build_all(specs: &[GeneratorSpec]) -> CliResult<Vec<Graph>> {
    specs
        .iter()
        .map(|s| s.build().map_err(CliError::from))
        .collect()
}
