use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Identifiers of the known bounds and conjectures on `SC(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundId {
    /// `C_4`-free with `Δ >= 4`: `3Δ - 3`.
    #[serde(rename = "THM16i")]
    Thm16i,
    /// `C_{2k}`-free, `k >= 3`: `10k²Δ - 10k²`.
    #[serde(rename = "THM16ii")]
    Thm16ii,
    /// `{C_{2k}, C_{2k+1}, C_{2k+2}}`-free, `k >= 2`: `(2k-1)Δ - (2k-3)`.
    #[serde(rename = "THM16iii")]
    Thm16iii,
    /// `{C_3, C_5, C_{2k}, C_{2k+2}}`-free, `k >= 2`: `max(kΔ, 2k(k-1))`.
    #[serde(rename = "THM18")]
    Thm18,
    /// Bipartite and `C_{2k}`-free, `k >= 2`: `kΔ - (k-1)`.
    #[serde(rename = "THM19")]
    Thm19,
    /// `{C_5, C_{2k}}`-free, `k >= 4`: `kΔ - (k-1)`.
    #[serde(rename = "THM110i")]
    Thm110i,
    /// `{C_3, C_5, C_{2k}}`-free, `k` in `{2, 3}`: `kΔ - (k-1)`.
    #[serde(rename = "THM110ii")]
    Thm110ii,
    /// `C_{2k}`-free, `k >= 3`: `(2k-1)Δ + (2k-1)²`.
    #[serde(rename = "THM111")]
    Thm111,
    /// Bipartite: `Δ²`.
    #[serde(rename = "THM23")]
    Thm23,
    /// `C_5`-free and the maximum strong clique found contains a triangle:
    /// `4Δ - 3`.
    #[serde(rename = "LEM32")]
    Lem32,
    /// `C_{2k}`-free, `k >= 3`: `floor((2k-1)(4Δ+1)/3)`.
    #[serde(rename = "REMARK")]
    Remark,
    /// Any graph: `5Δ²/4` for even `Δ`, `(5Δ² - 2Δ + 1)/4` for odd `Δ`.
    #[serde(rename = "CONJ14")]
    Conj14,
    /// `C_{2k}`-free, `k >= 2`: `(2k-1)Δ - C(2k-1, 2)`.
    #[serde(rename = "CONJ15")]
    Conj15,
    /// Bipartite and `C_{2k}`-free, `k >= 2`: `kΔ - (k-1)`.
    #[serde(rename = "CONJ17")]
    Conj17,
}

impl BoundId {
    pub const ALL: [BoundId; 14] = [
        BoundId::Thm16i,
        BoundId::Thm16ii,
        BoundId::Thm16iii,
        BoundId::Thm18,
        BoundId::Thm19,
        BoundId::Thm110i,
        BoundId::Thm110ii,
        BoundId::Thm111,
        BoundId::Thm23,
        BoundId::Lem32,
        BoundId::Remark,
        BoundId::Conj14,
        BoundId::Conj15,
        BoundId::Conj17,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Thm16i => "THM16i",
            BoundId::Thm16ii => "THM16ii",
            BoundId::Thm16iii => "THM16iii",
            BoundId::Thm18 => "THM18",
            BoundId::Thm19 => "THM19",
            BoundId::Thm110i => "THM110i",
            BoundId::Thm110ii => "THM110ii",
            BoundId::Thm111 => "THM111",
            BoundId::Thm23 => "THM23",
            BoundId::Lem32 => "LEM32",
            BoundId::Remark => "REMARK",
            BoundId::Conj14 => "CONJ14",
            BoundId::Conj15 => "CONJ15",
            BoundId::Conj17 => "CONJ17",
        }
    }

    /// Conjectures may legitimately produce counterexamples.
    pub fn is_conjecture(self) -> bool {
        matches!(self, BoundId::Conj14 | BoundId::Conj15 | BoundId::Conj17)
    }

    pub fn takes_k(self) -> bool {
        !matches!(
            self,
            BoundId::Thm16i | BoundId::Thm23 | BoundId::Lem32 | BoundId::Conj14
        )
    }

    fn k_allowed(self, k: usize) -> bool {
        match self {
            BoundId::Thm16ii | BoundId::Thm111 | BoundId::Remark => k >= 3,
            BoundId::Thm110i => k >= 4,
            BoundId::Thm110ii => k == 2 || k == 3,
            BoundId::Thm16iii
            | BoundId::Thm18
            | BoundId::Thm19
            | BoundId::Conj15
            | BoundId::Conj17 => k >= 2,
            BoundId::Thm16i | BoundId::Thm23 | BoundId::Lem32 | BoundId::Conj14 => false,
        }
    }

    fn k_domain(self) -> &'static str {
        match self {
            BoundId::Thm16ii | BoundId::Thm111 | BoundId::Remark => "k >= 3",
            BoundId::Thm110i => "k >= 4",
            BoundId::Thm110ii => "k in {2, 3}",
            _ => "k >= 2",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<BoundId> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown bound {s:?}")))
    }
}

/// A bound identifier with its parameter `k`, checked against the
/// identifier's domain on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BoundSpec {
    pub id: BoundId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl BoundSpec {
    pub fn new(id: BoundId, k: Option<usize>) -> Result<BoundSpec> {
        match (id.takes_k(), k) {
            (false, None) => Ok(BoundSpec { id, k }),
            (false, Some(_)) => Err(Error::Domain(format!("{id} takes no k"))),
            (true, None) => Err(Error::Domain(format!("{id} needs k ({})", id.k_domain()))),
            (true, Some(k)) if id.k_allowed(k) => Ok(BoundSpec { id, k: Some(k) }),
            (true, Some(k)) => Err(Error::Domain(format!(
                "{id} needs {}, got k = {k}",
                id.k_domain()
            ))),
        }
    }

    /// `new` for identifiers without `k`, ignoring `k` for those that take
    /// none. Handy when sweeping one `k` over several identifiers.
    pub fn with_k(id: BoundId, k: usize) -> Result<BoundSpec> {
        BoundSpec::new(id, id.takes_k().then_some(k))
    }

    /// Smallest maximum degree the hypothesis allows.
    pub fn min_degree(&self) -> usize {
        if self.id == BoundId::Thm16i {
            4
        } else {
            1
        }
    }

    pub fn requires_bipartite(&self) -> bool {
        matches!(self.id, BoundId::Thm19 | BoundId::Thm23 | BoundId::Conj17)
    }

    /// Cycle lengths that must be absent, in ascending order.
    pub fn forbidden_cycles(&self) -> Vec<usize> {
        let k = self.k.unwrap_or(0);
        let mut lengths = match self.id {
            BoundId::Thm16i => vec![4],
            BoundId::Thm16ii
            | BoundId::Thm19
            | BoundId::Thm111
            | BoundId::Remark
            | BoundId::Conj15
            | BoundId::Conj17 => vec![2 * k],
            BoundId::Thm16iii => vec![2 * k, 2 * k + 1, 2 * k + 2],
            BoundId::Thm18 => vec![3, 5, 2 * k, 2 * k + 2],
            BoundId::Thm110i => vec![5, 2 * k],
            BoundId::Thm110ii => vec![3, 5, 2 * k],
            BoundId::Lem32 => vec![5],
            BoundId::Thm23 | BoundId::Conj14 => vec![],
        };
        lengths.sort_unstable();
        lengths.dedup();
        lengths
    }

    /// The lemma-only hypothesis that the maximum strong clique found
    /// spans a triangle.
    pub fn requires_triangle_in_clique(&self) -> bool {
        self.id == BoundId::Lem32
    }
}

impl fmt::Display for BoundSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "{}(k={k})", self.id),
            None => write!(f, "{}", self.id),
        }
    }
}

/// The bound at maximum degree `delta >= 1`. Values may be zero or negative
/// for small `delta`.
pub fn bound_value(spec: &BoundSpec, delta: usize) -> Result<i64> {
    if delta < 1 {
        return Err(Error::Domain(
            "bounds need maximum degree at least 1".into(),
        ));
    }
    let d = delta as i64;
    let k = spec.k.unwrap_or(0) as i64;
    let v = match spec.id {
        BoundId::Thm16i => 3 * d - 3,
        BoundId::Thm16ii => 10 * k * k * d - 10 * k * k,
        BoundId::Thm16iii => (2 * k - 1) * d - (2 * k - 3),
        BoundId::Thm18 => (k * d).max(2 * k * (k - 1)),
        BoundId::Thm19 | BoundId::Thm110i | BoundId::Thm110ii | BoundId::Conj17 => k * d - (k - 1),
        BoundId::Thm111 => (2 * k - 1) * d + (2 * k - 1) * (2 * k - 1),
        BoundId::Thm23 => d * d,
        BoundId::Lem32 => 4 * d - 3,
        BoundId::Remark => ((2 * k - 1) * (4 * d + 1)).div_euclid(3),
        BoundId::Conj14 => {
            if d % 2 == 0 {
                5 * d * d / 4
            } else {
                (5 * d * d - 2 * d + 1) / 4
            }
        }
        BoundId::Conj15 => (2 * k - 1) * d - (2 * k - 1) * (2 * k - 2) / 2,
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(id: BoundId, k: Option<usize>) -> BoundSpec {
        BoundSpec::new(id, k).unwrap()
    }

    #[test]
    fn formula_examples() {
        assert_eq!(bound_value(&spec(BoundId::Thm19, Some(3)), 5).unwrap(), 13);
        assert_eq!(bound_value(&spec(BoundId::Thm111, Some(3)), 5).unwrap(), 50);
        assert_eq!(bound_value(&spec(BoundId::Remark, Some(3)), 5).unwrap(), 35);
        assert_eq!(bound_value(&spec(BoundId::Conj15, Some(3)), 6).unwrap(), 20);
        assert_eq!(bound_value(&spec(BoundId::Thm23, None), 3).unwrap(), 9);
        assert_eq!(bound_value(&spec(BoundId::Conj14, None), 4).unwrap(), 20);
        assert_eq!(bound_value(&spec(BoundId::Conj14, None), 3).unwrap(), 10);
        assert_eq!(bound_value(&spec(BoundId::Thm18, Some(3)), 2).unwrap(), 12);
        assert!(bound_value(&spec(BoundId::Thm23, None), 0).is_err());
    }

    #[test]
    fn domains() {
        assert!(BoundSpec::new(BoundId::Thm19, Some(1)).is_err());
        assert!(BoundSpec::new(BoundId::Thm111, Some(2)).is_err());
        assert!(BoundSpec::new(BoundId::Thm110i, Some(3)).is_err());
        assert!(BoundSpec::new(BoundId::Thm110ii, Some(4)).is_err());
        assert!(BoundSpec::new(BoundId::Thm23, Some(2)).is_err());
        assert!(BoundSpec::new(BoundId::Thm19, None).is_err());
        assert_eq!(BoundSpec::with_k(BoundId::Thm23, 3).unwrap().k, None);
        assert_eq!("thm110ii".parse::<BoundId>().unwrap(), BoundId::Thm110ii);
    }

    #[test]
    fn forbidden_lengths() {
        assert_eq!(
            spec(BoundId::Thm18, Some(2)).forbidden_cycles(),
            vec![3, 4, 5, 6]
        );
        assert_eq!(
            spec(BoundId::Thm110ii, Some(2)).forbidden_cycles(),
            vec![3, 4, 5]
        );
        assert_eq!(spec(BoundId::Thm16i, None).forbidden_cycles(), vec![4]);
    }
}
