//! Named graph families, seeded random graphs and exhaustive enumeration.
//!
//! Core vertices are numbered first, in construction order; pendant leaves
//! come after them. Random graphs use ChaCha8 seeded through
//! `SeedableRng::seed_from_u64`, deciding each vertex pair `(i, j)`, `i < j`,
//! in lexicographic order with one `gen_bool(p)` draw, so a seed gives the
//! same graph on every platform.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn domain(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}

fn build(n: usize, pairs: Vec<(usize, usize)>) -> Graph {
    Graph::new(n, pairs).expect("generator pairs are valid")
}

/// Replaces each vertex of `C_5` by `t` independent vertices and each edge
/// by a complete bipartite join. Part `i` is `i*t .. (i+1)*t`.
pub fn c5_blowup(t: usize) -> Result<Graph> {
    domain(t >= 1, || format!("c5_blowup needs t >= 1, got {t}"))?;
    let mut pairs = Vec::with_capacity(5 * t * t);
    for i in 0..5 {
        let j = (i + 1) % 5;
        for a in 0..t {
            for b in 0..t {
                pairs.push((i * t + a, j * t + b));
            }
        }
    }
    Ok(build(5 * t, pairs))
}

/// `K_q` with `p` pendant leaves on every clique vertex; leaf `j` of clique
/// vertex `i` is `q + i*p + j`.
pub fn complete_plus_pendants(q: usize, p: usize) -> Result<Graph> {
    domain(q >= 2, || {
        format!("complete_plus_pendants needs q >= 2, got {q}")
    })?;
    domain(p >= 1, || {
        format!("complete_plus_pendants needs p >= 1, got {p}")
    })?;
    let mut pairs = complete_pairs(q);
    for i in 0..q {
        for j in 0..p {
            pairs.push((i, q + i * p + j));
        }
    }
    Ok(build(q + q * p, pairs))
}

/// `K_{k-1, p+k-1}` with `p` pendant leaves on the first vertex of the
/// larger side. The small side is `0..k-1`, the large side follows.
pub fn bipartite_pendant_extremal(k: usize, p: usize) -> Result<Graph> {
    domain(k >= 2, || {
        format!("bipartite_pendant_extremal needs k >= 2, got {k}")
    })?;
    domain(p >= 1, || {
        format!("bipartite_pendant_extremal needs p >= 1, got {p}")
    })?;
    let small = k - 1;
    let big = p + k - 1;
    let mut pairs = complete_bipartite_pairs(small, big);
    let core = small + big;
    for j in 0..p {
        pairs.push((small, core + j));
    }
    Ok(build(core + p, pairs))
}

fn complete_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn complete_bipartite_pairs(a: usize, b: usize) -> Vec<(usize, usize)> {
    (0..a)
        .flat_map(|i| (0..b).map(move |j| (i, a + j)))
        .collect()
}

pub fn complete(n: usize) -> Result<Graph> {
    domain(n >= 1, || format!("complete needs n >= 1, got {n}"))?;
    Ok(build(n, complete_pairs(n)))
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    domain(a >= 1 && b >= 1, || {
        format!("complete_bipartite needs a, b >= 1, got {a}, {b}")
    })?;
    Ok(build(a + b, complete_bipartite_pairs(a, b)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    domain(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

/// `P_n`: `n` vertices, `n - 1` edges.
pub fn path(n: usize) -> Result<Graph> {
    domain(n >= 1, || format!("path needs n >= 1, got {n}"))?;
    Ok(build(n, (1..n).map(|i| (i - 1, i)).collect()))
}

/// `K_{1,n}` with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    domain(n >= 1, || format!("star needs n >= 1, got {n}"))?;
    Ok(build(n + 1, (1..=n).map(|i| (0, i)).collect()))
}

/// Outer 5-cycle `0..5`, spokes `i -- i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut pairs = Vec::with_capacity(15);
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, pairs)
}

/// A graph whose perfect matching `{2i, 2i+1}` is `0`-special: vertex 0 is
/// joined to every `2i` (`i >= 1`) and the odd vertices `2i+1` (`i >= 1`)
/// form a clique. Matching edges have ids `0..m`.
pub fn special_matching_graph(m: usize) -> Result<Graph> {
    domain(m >= 1, || format!("special_matching needs m >= 1, got {m}"))?;
    let mut pairs: Vec<(usize, usize)> = (0..m).map(|i| (2 * i, 2 * i + 1)).collect();
    pairs.extend((1..m).map(|i| (0, 2 * i)));
    for i in 1..m {
        for j in i + 1..m {
            pairs.push((2 * i + 1, 2 * j + 1));
        }
    }
    Ok(build(2 * m, pairs))
}

fn check_probability(p: f64) -> Result<()> {
    domain((0.0..=1.0).contains(&p), || {
        format!("edge probability must lie in [0, 1], got {p}")
    })
}

/// `G(n, p)` from a ChaCha8 stream seeded with `seed`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = complete_pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Ok(build(n, pairs))
}

/// Random bipartite graph with sides `0..a` and `a..a+b`; pairs are drawn in
/// the order `(0, a), (0, a+1), ...`.
pub fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = complete_bipartite_pairs(a, b)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Ok(build(a + b, pairs))
}

/// Largest vertex count accepted by [`enumerate_graphs`].
pub const ENUMERATION_MAX_VERTICES: usize = 8;

/// All labelled graphs on `n` vertices indexed by edge bitmask: bit `i` of
/// the mask is the `i`-th pair `(u, v)`, `u < v`, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Enumeration {
    n: usize,
    pairs: Vec<(usize, usize)>,
    // for each vertex permutation, where each pair index goes
    relabel: Vec<Vec<u8>>,
}

impl Enumeration {
    pub fn new(n: usize) -> Result<Enumeration> {
        if n > ENUMERATION_MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "enumeration cap",
                detail: format!("n = {n} exceeds {ENUMERATION_MAX_VERTICES}"),
            });
        }
        let pairs = complete_pairs(n);
        Ok(Enumeration {
            n,
            pairs,
            relabel: Vec::new(),
        })
    }

    fn with_permutations(mut self) -> Enumeration {
        let mut index = vec![vec![0u8; self.n]; self.n];
        for (k, &(u, v)) in self.pairs.iter().enumerate() {
            index[u][v] = k as u8;
            index[v][u] = k as u8;
        }
        let mut perm: Vec<usize> = (0..self.n).collect();
        let mut all = Vec::new();
        loop {
            all.push(
                self.pairs
                    .iter()
                    .map(|&(u, v)| index[perm[u]][perm[v]])
                    .collect(),
            );
            if !next_permutation(&mut perm) {
                break;
            }
        }
        self.relabel = all;
        self
    }

    /// Number of labelled graphs, `2^(n choose 2)`.
    pub fn len(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn graph(&self, mask: u64) -> Graph {
        let pairs = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        build(self.n, pairs)
    }

    /// Whether `mask` is the least mask among all relabellings of its graph.
    pub fn is_canonical(&self, mask: u64) -> bool {
        self.relabel.iter().all(|map| {
            let mut image = 0u64;
            let mut bits = mask;
            while bits != 0 {
                let k = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                image |= 1 << map[k];
            }
            image >= mask
        })
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Streams every labelled graph on `n <= 8` vertices in mask order; with
/// `dedup`, only the canonical representative of each isomorphism class.
pub fn enumerate_graphs(n: usize, dedup: bool) -> Result<impl Iterator<Item = Graph>> {
    let e = Enumeration::new(n)?;
    let e = if dedup { e.with_permutations() } else { e };
    Ok((0..e.len()).filter_map(move |mask| {
        if !dedup || e.is_canonical(mask) {
            Some(e.graph(mask))
        } else {
            None
        }
    }))
}

/// The families [`GeneratorSpec`] can build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    C5Blowup,
    CompletePlusPendants,
    BipartitePendantExtremal,
    Complete,
    CompleteBipartite,
    Cycle,
    Path,
    Star,
    Petersen,
    SpecialMatching,
    Random,
    RandomBipartite,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::C5Blowup,
        Family::CompletePlusPendants,
        Family::BipartitePendantExtremal,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Cycle,
        Family::Path,
        Family::Star,
        Family::Petersen,
        Family::SpecialMatching,
        Family::Random,
        Family::RandomBipartite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::C5Blowup => "c5_blowup",
            Family::CompletePlusPendants => "complete_plus_pendants",
            Family::BipartitePendantExtremal => "bipartite_pendant_extremal",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Star => "star",
            Family::Petersen => "petersen",
            Family::SpecialMatching => "special_matching",
            Family::Random => "random",
            Family::RandomBipartite => "random_bipartite",
        }
    }

    /// Parameter names the family reads.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            Family::C5Blowup => &["t"],
            Family::CompletePlusPendants => &["q", "p"],
            Family::BipartitePendantExtremal => &["k", "p"],
            Family::Complete | Family::Cycle | Family::Path | Family::Star => &["n"],
            Family::CompleteBipartite => &["a", "b"],
            Family::Petersen => &[],
            Family::SpecialMatching => &["m"],
            Family::Random => &["n", "prob", "seed"],
            Family::RandomBipartite => &["a", "b", "prob", "seed"],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let key = s.replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::Domain(format!("unknown family {s:?}")))
    }
}

/// A family with its parameters, as given on the command line or in a JSON
/// job file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Edge probability for the random families.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prob: Option<f64>,
}

impl GeneratorSpec {
    pub fn new(family: Family) -> GeneratorSpec {
        GeneratorSpec {
            family,
            t: None,
            q: None,
            p: None,
            k: None,
            a: None,
            b: None,
            n: None,
            m: None,
            seed: None,
            prob: None,
        }
    }

    fn need<T: Copy>(&self, name: &str, value: Option<T>) -> Result<T> {
        value.ok_or_else(|| Error::Domain(format!("{} needs parameter {name}", self.family)))
    }

    pub fn build(&self) -> Result<Graph> {
        match self.family {
            Family::C5Blowup => c5_blowup(self.need("t", self.t)?),
            Family::CompletePlusPendants => {
                complete_plus_pendants(self.need("q", self.q)?, self.need("p", self.p)?)
            }
            Family::BipartitePendantExtremal => {
                bipartite_pendant_extremal(self.need("k", self.k)?, self.need("p", self.p)?)
            }
            Family::Complete => complete(self.need("n", self.n)?),
            Family::CompleteBipartite => {
                complete_bipartite(self.need("a", self.a)?, self.need("b", self.b)?)
            }
            Family::Cycle => cycle(self.need("n", self.n)?),
            Family::Path => path(self.need("n", self.n)?),
            Family::Star => star(self.need("n", self.n)?),
            Family::Petersen => Ok(petersen()),
            Family::SpecialMatching => special_matching_graph(self.need("m", self.m)?),
            Family::Random => random_graph(
                self.need("n", self.n)?,
                self.need("prob", self.prob)?,
                self.need("seed", self.seed)?,
            ),
            Family::RandomBipartite => random_bipartite(
                self.need("a", self.a)?,
                self.need("b", self.b)?,
                self.need("prob", self.prob)?,
                self.need("seed", self.seed)?,
            ),
        }
    }

    /// A short human-readable name such as `c5_blowup(t=2)`.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        for &name in self.family.parameters() {
            let value = match name {
                "t" => self.t.map(|v| v.to_string()),
                "q" => self.q.map(|v| v.to_string()),
                "p" => self.p.map(|v| v.to_string()),
                "k" => self.k.map(|v| v.to_string()),
                "a" => self.a.map(|v| v.to_string()),
                "b" => self.b.map(|v| v.to_string()),
                "n" => self.n.map(|v| v.to_string()),
                "m" => self.m.map(|v| v.to_string()),
                "seed" => self.seed.map(|v| v.to_string()),
                "prob" => self.prob.map(|v| v.to_string()),
                _ => None,
            };
            if let Some(v) = value {
                parts.push(format!("{name}={v}"));
            }
        }
        format!("{}({})", self.family, parts.join(","))
    }
}
