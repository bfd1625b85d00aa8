use std::collections::HashSet;

use crate::error::{Error, Result};

/// Largest digraph handed to the exhaustive cycle and path searches.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 24;

/// A digraph with at least one arc between every two distinct vertices.
/// Both directions may be present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiCompleteDigraph {
    m: usize,
    arcs: Vec<Vec<bool>>,
}

impl SemiCompleteDigraph {
    pub fn new<I>(m: usize, arcs: I) -> Result<SemiCompleteDigraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut matrix = vec![vec![false; m]; m];
        for (i, j) in arcs {
            if i >= m || j >= m {
                return Err(Error::VertexOutOfRange {
                    vertex: i.max(j),
                    n: m,
                });
            }
            if i == j {
                return Err(Error::Loop(i));
            }
            matrix[i][j] = true;
        }
        for i in 0..m {
            for j in i + 1..m {
                if !matrix[i][j] && !matrix[j][i] {
                    return Err(Error::Precondition(format!(
                        "digraph is not semicomplete: no arc between {i} and {j}"
                    )));
                }
            }
        }
        Ok(SemiCompleteDigraph { m, arcs: matrix })
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.arcs[i][j]
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in 0..self.m {
                if self.arcs[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_hamiltonian_path(&self, path: &[usize]) -> bool {
        let mut seen = vec![false; self.m];
        path.len() == self.m
            && path
                .iter()
                .all(|&v| v < self.m && !std::mem::replace(&mut seen[v], true))
            && path.windows(2).all(|w| self.has_arc(w[0], w[1]))
    }

    fn reach(&self, from: usize, forward: bool) -> Vec<bool> {
        let mut seen = vec![false; self.m];
        seen[from] = true;
        let mut stack = vec![from];
        while let Some(u) = stack.pop() {
            for w in 0..self.m {
                let arc = if forward {
                    self.arcs[u][w]
                } else {
                    self.arcs[w][u]
                };
                if arc && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Strong components in the order of the condensation: every arc between
    /// two different components points from the earlier to the later one.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.m];
        let mut comps: Vec<(usize, Vec<usize>)> = Vec::new();
        for v in 0..self.m {
            if assigned[v] {
                continue;
            }
            let fwd = self.reach(v, true);
            let back = self.reach(v, false);
            let comp: Vec<usize> = (0..self.m).filter(|&w| fwd[w] && back[w]).collect();
            for &w in &comp {
                assigned[w] = true;
            }
            let reach_count = fwd.iter().filter(|&&b| b).count();
            comps.push((reach_count, comp));
        }
        // in a semicomplete digraph earlier components reach strictly more
        comps.sort_by_key(|c| std::cmp::Reverse(c.0));
        comps.into_iter().map(|(_, c)| c).collect()
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.m <= 1 || self.strong_components().len() == 1
    }

    fn check_exhaustive_size(&self) -> Result<()> {
        if self.m > EXHAUSTIVE_MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "too large for exhaustive digraph search",
                detail: format!(
                    "{} vertices exceed the cap of {EXHAUSTIVE_MAX_VERTICES}",
                    self.m
                ),
            });
        }
        Ok(())
    }

    /// A directed cycle on exactly `len` vertices (`len >= 2`), listed from
    /// its smallest vertex, by exhaustive search.
    pub fn find_cycle(&self, len: usize) -> Result<Option<Vec<usize>>> {
        self.check_exhaustive_size()?;
        if len < 2 || len > self.m {
            return Ok(None);
        }
        for anchor in 0..self.m {
            let mut search = PathSearch::new(self, anchor, len, Goal::CloseTo(anchor), anchor + 1);
            if let Some(p) = search.run() {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    /// A directed path on exactly `len` vertices from `start` to `end`.
    pub fn find_path(&self, start: usize, end: usize, len: usize) -> Result<Option<Vec<usize>>> {
        self.check_exhaustive_size()?;
        if len == 0 || len > self.m || start >= self.m || end >= self.m {
            return Ok(None);
        }
        let mut search = PathSearch::new(self, start, len, Goal::EndAt(end), 0);
        Ok(search.run())
    }
}

/// Directed Hamiltonian path by insertion: vertices are taken in id order
/// and each is placed at the first slot whose neighbours accept it.
pub fn semicomplete_hamiltonian_path(d: &SemiCompleteDigraph) -> Vec<usize> {
    let mut path: Vec<usize> = Vec::with_capacity(d.m);
    for v in 0..d.m {
        let slot = (0..=path.len())
            .find(|&p| {
                (p == 0 || d.has_arc(path[p - 1], v)) && (p == path.len() || d.has_arc(v, path[p]))
            })
            .expect("a semicomplete digraph always admits an insertion slot");
        path.insert(slot, v);
    }
    path
}

enum Goal {
    CloseTo(usize),
    EndAt(usize),
}

struct PathSearch<'d> {
    d: &'d SemiCompleteDigraph,
    len: usize,
    goal: Goal,
    min_vertex: usize,
    path: Vec<usize>,
    used: u32,
    dead: HashSet<(u32, usize)>,
}

impl<'d> PathSearch<'d> {
    fn new(
        d: &'d SemiCompleteDigraph,
        start: usize,
        len: usize,
        goal: Goal,
        min_vertex: usize,
    ) -> Self {
        PathSearch {
            d,
            len,
            goal,
            min_vertex,
            path: vec![start],
            used: 1 << start,
            dead: HashSet::new(),
        }
    }

    fn run(&mut self) -> Option<Vec<usize>> {
        if self.extend() {
            Some(std::mem::take(&mut self.path))
        } else {
            None
        }
    }

    fn extend(&mut self) -> bool {
        let end = *self.path.last().unwrap();
        if self.path.len() == self.len {
            return match self.goal {
                Goal::CloseTo(a) => self.d.has_arc(end, a),
                Goal::EndAt(t) => end == t,
            };
        }
        if let Goal::EndAt(t) = self.goal {
            if end == t {
                return false;
            }
        }
        if self.dead.contains(&(self.used, end)) {
            return false;
        }
        for w in self.min_vertex..self.d.m {
            if self.used & (1 << w) != 0 || !self.d.has_arc(end, w) {
                continue;
            }
            self.path.push(w);
            self.used |= 1 << w;
            if self.extend() {
                return true;
            }
            self.used &= !(1 << w);
            self.path.pop();
        }
        self.dead.insert((self.used, end));
        false
    }
}
