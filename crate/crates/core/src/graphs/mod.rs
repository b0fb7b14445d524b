//! Graphs on `[n]` attached to subsets of `L_n`, maximal cliques, interval
//! recognition, chordality and the clique-overlap criteria.

mod count;
mod io;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{PairIndex, Sublattice};

pub use count::{
    count_gorenstein_brute_force, count_gorenstein_closed_form, count_gorenstein_perfect,
    count_gorenstein_recurrence, gorenstein_counts, gorenstein_recurrence, GorensteinCounts, QSqrt5,
};
pub use io::{parse_graph, write_graph};

/// Simple undirected graph on the vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<PairIndex>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = PairIndex>) -> Result<Self> {
        let edges: BTreeSet<PairIndex> = edges.into_iter().collect();
        if let Some(e) = edges.iter().find(|e| e.j > n) {
            return Err(Error::InvalidGraph(format!("edge {e} outside [1,{n}]")));
        }
        Ok(Graph { n, edges })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let edges = edges
            .iter()
            .map(|&(a, b)| PairIndex::new(a.min(b), a.max(b)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }

    pub fn complete(n: usize) -> Self {
        Graph { n, edges: crate::lattice::all_pairs(n).into_iter().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<PairIndex> {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.contains(&PairIndex { i: a.min(b), j: a.max(b) })
    }

    pub fn neighbours(&self, v: usize) -> BTreeSet<usize> {
        (1..=self.n).filter(|&w| self.has_edge(v, w)).collect()
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.neighbours(v).is_empty()).collect()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        !self.isolated_vertices().is_empty()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = BTreeSet::from([1usize]);
        let mut stack = vec![1usize];
        while let Some(v) = stack.pop() {
            for w in self.neighbours(v) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }

    pub fn as_sublattice(&self) -> Sublattice {
        Sublattice::new(self.n, self.edges.iter().copied()).expect("edges lie inside [1,n]")
    }
}

/// The graph whose edges are the members of `s`.
pub fn graph_of(s: &Sublattice) -> Graph {
    Graph { n: s.n(), edges: s.members().clone() }
}

/// All maximal cliques (Bron–Kerbosch with pivoting), each sorted, listed in
/// lexicographic order. Isolated vertices appear as singleton cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<BTreeSet<usize>> {
    fn expand(
        g: &Graph,
        r: &mut BTreeSet<usize>,
        mut p: BTreeSet<usize>,
        mut x: BTreeSet<usize>,
        out: &mut Vec<BTreeSet<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = *p
            .union(&x)
            .max_by_key(|&&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
            .expect("p or x nonempty");
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        for v in candidates {
            let nv = g.neighbours(v);
            r.insert(v);
            expand(g, r, p.intersection(&nv).copied().collect(), x.intersection(&nv).copied().collect(), out);
            r.remove(&v);
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    expand(g, &mut BTreeSet::new(), (1..=g.n).collect(), BTreeSet::new(), &mut out);
    out.sort();
    out
}

fn as_interval(c: &BTreeSet<usize>) -> Option<(usize, usize)> {
    let a = *c.first()?;
    let b = *c.last()?;
    (b - a + 1 == c.len()).then_some((a, b))
}

/// Maximal cliques as intervals sorted by left endpoint, provided every
/// maximal clique with at least two vertices is a run of consecutive
/// integers. Isolated vertices are ignored.
pub fn interval_cliques(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for c in maximal_cliques(g) {
        if c.len() < 2 {
            continue;
        }
        out.push(as_interval(&c)?);
    }
    out.sort();
    Some(out)
}

/// Interval recognition for graphs without isolated vertices.
pub fn interval_system(g: &Graph) -> Result<CliqueIntervalSystem> {
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::InvalidGraph(format!("vertex {v} is isolated")));
    }
    match interval_cliques(g) {
        Some(iv) => CliqueIntervalSystem::new(iv),
        None => {
            let bad = maximal_cliques(g).into_iter().find(|c| as_interval(c).is_none()).unwrap_or_default();
            Err(Error::NotInterval(format!("maximal clique {bad:?} is not an interval")))
        }
    }
}

pub fn is_interval_graph(g: &Graph) -> bool {
    interval_system(g).is_ok()
}

/// The closure condition: two edges sharing their smaller endpoint force an
/// edge between the larger ones, and two edges sharing their larger endpoint
/// force an edge between the smaller ones.
pub fn condition_star(g: &Graph) -> bool {
    condition_star_witness(g).is_none()
}

pub fn condition_star_witness(g: &Graph) -> Option<(PairIndex, PairIndex)> {
    for &e in &g.edges {
        for &f in &g.edges {
            if e >= f {
                continue;
            }
            if e.i == f.i && !g.has_edge(e.j, f.j) {
                return Some((e, f));
            }
            if e.j == f.j && !g.has_edge(e.i, f.i) {
                return Some((e, f));
            }
        }
    }
    None
}

/// Chordality via a perfect elimination ordering found by repeatedly
/// deleting a simplicial vertex.
pub fn is_chordal(g: &Graph) -> bool {
    let mut alive: BTreeSet<usize> = (1..=g.n).collect();
    while !alive.is_empty() {
        let simplicial = alive.iter().copied().find(|&v| {
            let nb: Vec<usize> = alive.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            nb.iter().enumerate().all(|(k, &a)| nb[k + 1..].iter().all(|&b| g.has_edge(a, b)))
        });
        match simplicial {
            Some(v) => {
                alive.remove(&v);
            }
            None => return false,
        }
    }
    true
}

/// Maximal cliques `[a_1,b_1], ..., [a_s,b_s]` of an interval graph on `[n]`
/// without isolated vertices: `1 = a_1 < ... < a_s`, `b_1 < ... < b_s = n`,
/// `a_t < b_t`, and `a_{t+1} <= b_t + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CliqueIntervalSystem {
    intervals: Vec<(usize, usize)>,
}

impl CliqueIntervalSystem {
    pub fn new(intervals: Vec<(usize, usize)>) -> Result<Self> {
        let err = |m: String| Err(Error::InvalidSystem(m));
        let Some(&(a1, _)) = intervals.first() else {
            return err("no cliques".into());
        };
        if a1 != 1 {
            return err(format!("first clique starts at {a1}, not 1"));
        }
        for &(a, b) in &intervals {
            if a >= b {
                return err(format!("[{a},{b}] has fewer than two vertices"));
            }
        }
        for w in intervals.windows(2) {
            let ((a, b), (c, d)) = (w[0], w[1]);
            if a >= c {
                return err(format!("left endpoints {a}, {c} not strictly increasing"));
            }
            if b >= d {
                return err(format!("right endpoints {b}, {d} not strictly increasing"));
            }
            if c > b + 1 {
                return err(format!("vertices between {b} and {c} are isolated"));
            }
        }
        Ok(CliqueIntervalSystem { intervals })
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    /// Number of vertices, the right endpoint of the last clique.
    pub fn n(&self) -> usize {
        self.intervals.last().expect("nonempty").1
    }

    pub fn graph(&self) -> Graph {
        graph_of(&self.sublattice())
    }

    pub fn sublattice(&self) -> Sublattice {
        Sublattice::from_intervals(self.n(), &self.intervals).expect("validated system")
    }

    /// `|C_t ∩ C_{t+1}|` for consecutive cliques.
    pub fn overlaps(&self) -> Vec<usize> {
        self.intervals.windows(2).map(|w| (w[0].1 + 1).saturating_sub(w[1].0)).collect()
    }

    /// Consecutive cliques always share a vertex.
    pub fn is_connected(&self) -> bool {
        self.overlaps().iter().all(|&o| o > 0)
    }

    /// All overlaps at least two.
    pub fn perfect_criterion(&self) -> bool {
        self.overlaps().iter().all(|&o| o >= 2)
    }

    /// All overlaps at most three.
    pub fn gorenstein_criterion(&self) -> bool {
        self.overlaps().iter().all(|&o| o <= 3)
    }

    /// Overlaps between two and three.
    pub fn gorenstein_perfect_criterion(&self) -> bool {
        self.perfect_criterion() && self.gorenstein_criterion()
    }
}

impl fmt::Display for CliqueIntervalSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.intervals {
            write!(f, "[{a},{b}]")?;
        }
        Ok(())
    }
}

impl FromStr for CliqueIntervalSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut out = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('[')
                .and_then(|r| r.split_once(']'))
                .ok_or_else(|| Error::Parse(format!("expected '[a,b]' in '{s}'")))?;
            let (body, tail) = inner;
            let (a, b) = body.split_once(',').ok_or_else(|| Error::Parse(format!("bad interval '[{body}]'")))?;
            let num = |t: &str| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("'{t}': {e}")));
            out.push((num(a)?, num(b)?));
            rest = tail.trim_start();
        }
        CliqueIntervalSystem::new(out)
    }
}

/// Every antichain of `Π_n` read as a list of intervals `(a, b)`, `a < b`,
/// with left and right endpoints both strictly increasing. Includes the
/// empty list.
pub fn interval_antichains(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn grow(n: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        out.push(cur.clone());
        let (la, lb) = cur.last().copied().unwrap_or((0, 1));
        for a in la + 1..n {
            for b in (lb + 1).max(a + 1)..=n {
                cur.push((a, b));
                grow(n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(n, &mut Vec::new(), &mut out);
    out
}

/// All valid clique interval systems on `[n]`, connected or not.
pub fn admissible_systems(n: usize) -> Vec<CliqueIntervalSystem> {
    interval_antichains(n)
        .into_iter()
        .filter_map(|iv| CliqueIntervalSystem::new(iv).ok())
        .filter(|s| s.n() == n)
        .collect()
}
