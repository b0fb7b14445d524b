//! The distributive lattice `L_n` of index pairs `(i, j)`, `1 <= i < j <= n`,
//! with its companion poset `Π_n`, sublattices, compatibility, perfection,
//! join-irreducibles, purity and enumeration.

mod io;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::Variable;
use crate::graphs::{interval_antichains, CliqueIntervalSystem};

pub use io::{parse_sublattice, write_sublattice};

/// Largest `n` accepted by the sublattice enumerators.
pub const MAX_ENUMERATION_N: usize = 9;

/// An index pair `(i, j)` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairIndex {
    pub i: usize,
    pub j: usize,
}

impl PairIndex {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::InvalidIndices(format!("({i},{j})")));
        }
        Ok(PairIndex { i, j })
    }

    pub fn variable(self) -> Variable {
        Variable::Plucker(self.i, self.j)
    }

    pub fn from_variable(v: Variable) -> Option<Self> {
        v.pair().map(|(i, j)| PairIndex { i, j })
    }

    /// Number of points spanned minus one.
    pub fn length(self) -> usize {
        self.j - self.i
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i < 10 && self.j < 10 {
            write!(f, "{}{}", self.i, self.j)
        } else {
            write!(f, "({},{})", self.i, self.j)
        }
    }
}

/// Shorthand used throughout the tests.
pub fn pi(i: usize, j: usize) -> PairIndex {
    PairIndex::new(i, j).expect("valid index pair")
}

/// Order of `L_n`: componentwise.
pub fn leq_l(a: PairIndex, b: PairIndex) -> bool {
    a.i <= b.i && a.j <= b.j
}

/// Order of `Π_n`: `(i,j) <= (k,l)` iff `i <= k` and `j >= l`, i.e. interval
/// containment reversed.
pub fn leq_pi(a: PairIndex, b: PairIndex) -> bool {
    a.i <= b.i && a.j >= b.j
}

pub fn meet(a: PairIndex, b: PairIndex) -> PairIndex {
    let m = PairIndex { i: a.i.min(b.i), j: a.j.min(b.j) };
    assert!(m.i < m.j);
    m
}

pub fn join(a: PairIndex, b: PairIndex) -> PairIndex {
    let m = PairIndex { i: a.i.max(b.i), j: a.j.max(b.j) };
    assert!(m.i < m.j);
    m
}

/// All pairs of `L_n` in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<PairIndex> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| PairIndex { i, j })).collect()
}

/// The two partial orders on index pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairOrder {
    L,
    Pi,
}

impl PairOrder {
    pub fn leq(self, a: PairIndex, b: PairIndex) -> bool {
        match self {
            PairOrder::L => leq_l(a, b),
            PairOrder::Pi => leq_pi(a, b),
        }
    }
}

/// Canonical linear extension (ascending): lexicographic for `L_n`,
/// `i` ascending then `j` descending for `Π_n`.
pub fn canonical_extension(n: usize, order: PairOrder) -> Vec<PairIndex> {
    let mut pairs = all_pairs(n);
    if order == PairOrder::Pi {
        pairs.sort_by_key(|p| (p.i, std::cmp::Reverse(p.j)));
    }
    pairs
}

/// Uniformly chosen minimal element at every step; ascending.
pub fn random_extension<R: Rng>(n: usize, order: PairOrder, rng: &mut R) -> Vec<PairIndex> {
    extension_of(all_pairs(n), order, rng)
}

/// Random ascending linear extension of `order` restricted to `elements`.
pub fn extension_of<R: Rng>(mut rest: Vec<PairIndex>, order: PairOrder, rng: &mut R) -> Vec<PairIndex> {
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let minimal: Vec<usize> = (0..rest.len())
            .filter(|&k| !rest.iter().any(|&b| b != rest[k] && order.leq(b, rest[k])))
            .collect();
        let k = *minimal.choose(rng).expect("finite posets have minimal elements");
        out.push(rest.swap_remove(k));
    }
    out
}

pub fn is_linear_extension(ext: &[PairIndex], order: PairOrder) -> bool {
    ext.iter()
        .enumerate()
        .all(|(k, &a)| ext[..k].iter().all(|&b| !(order.leq(a, b) && a != b)))
}

/// How the rank clause of compatibility is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RankClause {
    /// `rank >= n`.
    #[default]
    AtLeastN,
    /// `rank == n`.
    ExactlyN,
    /// No rank condition.
    Omitted,
}

impl RankClause {
    pub fn accepts(self, rank: usize, n: usize) -> bool {
        match self {
            RankClause::AtLeastN => rank >= n,
            RankClause::ExactlyN => rank == n,
            RankClause::Omitted => true,
        }
    }
}

/// A chain of `L_n`, strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chain {
    elements: Vec<PairIndex>,
}

impl Chain {
    pub fn new(elements: Vec<PairIndex>) -> Result<Self> {
        if elements.windows(2).any(|w| !(leq_l(w[0], w[1]) && w[0] != w[1])) {
            return Err(Error::InvalidIndices("chain is not strictly increasing".into()));
        }
        Ok(Chain { elements })
    }

    pub fn elements(&self) -> &[PairIndex] {
        &self.elements
    }

    pub fn length(&self) -> usize {
        self.elements.len().saturating_sub(1)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A finite subset of `L_n` carrying the induced order of `L_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subposet {
    elements: Vec<PairIndex>,
}

impl Subposet {
    pub fn new(elements: impl IntoIterator<Item = PairIndex>) -> Self {
        let set: BTreeSet<PairIndex> = elements.into_iter().collect();
        Subposet { elements: set.into_iter().collect() }
    }

    pub fn elements(&self) -> &[PairIndex] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn less(a: PairIndex, b: PairIndex) -> bool {
        a != b && leq_l(a, b)
    }

    /// Covering relations `(a, b)` with `a < b` and nothing strictly between.
    pub fn hasse(&self) -> Vec<(PairIndex, PairIndex)> {
        let e = &self.elements;
        let mut out = Vec::new();
        for &a in e {
            for &b in e {
                if Self::less(a, b) && !e.iter().any(|&c| Self::less(a, c) && Self::less(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Length of the longest chain.
    pub fn rank(&self) -> Result<usize> {
        if self.elements.is_empty() {
            return Err(Error::EmptyPoset);
        }
        // Lexicographic sort is a linear extension of L_n.
        let e = &self.elements;
        let mut height = vec![0usize; e.len()];
        for k in 0..e.len() {
            for m in 0..k {
                if Self::less(e[m], e[k]) {
                    height[k] = height[k].max(height[m] + 1);
                }
            }
        }
        Ok(height.into_iter().max().unwrap_or(0))
    }

    /// Set of lengths of all maximal chains, by depth-first search over the
    /// Hasse diagram from every minimal element.
    pub fn maximal_chain_lengths(&self) -> Result<BTreeSet<usize>> {
        if self.elements.is_empty() {
            return Err(Error::EmptyPoset);
        }
        let mut up: BTreeMap<PairIndex, Vec<PairIndex>> = BTreeMap::new();
        let mut has_lower = BTreeSet::new();
        for (a, b) in self.hasse() {
            up.entry(a).or_default().push(b);
            has_lower.insert(b);
        }
        let mut memo: BTreeMap<PairIndex, BTreeSet<usize>> = BTreeMap::new();
        fn lengths(
            a: PairIndex,
            up: &BTreeMap<PairIndex, Vec<PairIndex>>,
            memo: &mut BTreeMap<PairIndex, BTreeSet<usize>>,
        ) -> BTreeSet<usize> {
            if let Some(s) = memo.get(&a) {
                return s.clone();
            }
            let mut out = BTreeSet::new();
            match up.get(&a) {
                None => {
                    out.insert(0);
                }
                Some(next) => {
                    for &b in next {
                        out.extend(lengths(b, up, memo).into_iter().map(|l| l + 1));
                    }
                }
            }
            memo.insert(a, out.clone());
            out
        }
        let mut all = BTreeSet::new();
        for &a in &self.elements {
            if !has_lower.contains(&a) {
                all.extend(lengths(a, &up, &mut memo));
            }
        }
        Ok(all)
    }

    /// All maximal chains have the same length. The empty poset is pure.
    pub fn is_pure(&self) -> bool {
        self.elements.is_empty() || self.maximal_chain_lengths().map(|s| s.len() == 1).unwrap_or(true)
    }

    /// Two maximal chains of different lengths, if any.
    pub fn impurity_witness(&self) -> Option<(Chain, Chain)> {
        let mut chains: Vec<Vec<PairIndex>> = Vec::new();
        let hasse = self.hasse();
        let minimal: Vec<PairIndex> = self
            .elements
            .iter()
            .copied()
            .filter(|&a| !hasse.iter().any(|&(_, b)| b == a))
            .collect();
        fn walk(path: &mut Vec<PairIndex>, hasse: &[(PairIndex, PairIndex)], out: &mut Vec<Vec<PairIndex>>) {
            let last = *path.last().unwrap();
            let next: Vec<PairIndex> = hasse.iter().filter(|&&(a, _)| a == last).map(|&(_, b)| b).collect();
            if next.is_empty() {
                out.push(path.clone());
            }
            for b in next {
                path.push(b);
                walk(path, hasse, out);
                path.pop();
            }
        }
        for m in minimal {
            walk(&mut vec![m], &hasse, &mut chains);
        }
        let first = chains.first()?.clone();
        let other = chains.iter().find(|c| c.len() != first.len())?.clone();
        Some((Chain { elements: first }, Chain { elements: other }))
    }
}

/// A subset of `L_n`, with lattice-theoretic predicates relative to `L_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sublattice {
    n: usize,
    members: BTreeSet<PairIndex>,
}

impl Sublattice {
    pub fn new(n: usize, members: impl IntoIterator<Item = PairIndex>) -> Result<Self> {
        let members: BTreeSet<PairIndex> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|p| p.j > n) {
            return Err(Error::InvalidIndices(format!("{bad} exceeds n = {n}")));
        }
        Ok(Sublattice { n, members })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let members = pairs.iter().map(|&(i, j)| PairIndex::new(i, j)).collect::<Result<Vec<_>>>()?;
        Self::new(n, members)
    }

    /// `L_n` itself.
    pub fn full(n: usize) -> Self {
        Sublattice { n, members: all_pairs(n).into_iter().collect() }
    }

    /// Pairs contained in some clique interval of the system.
    pub fn from_system(n: usize, system: &CliqueIntervalSystem) -> Result<Self> {
        Self::from_intervals(n, system.intervals())
    }

    /// Pairs `(i, j)` with `[i, j]` inside one of the given intervals.
    pub fn from_intervals(n: usize, intervals: &[(usize, usize)]) -> Result<Self> {
        let mut members = BTreeSet::new();
        for &(a, b) in intervals {
            if a == 0 || a >= b || b > n {
                return Err(Error::InvalidSystem(format!("bad interval [{a},{b}] for n = {n}")));
            }
            for i in a..=b {
                for j in i + 1..=b {
                    members.insert(PairIndex { i, j });
                }
            }
        }
        Ok(Sublattice { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &BTreeSet<PairIndex> {
        &self.members
    }

    pub fn contains(&self, p: PairIndex) -> bool {
        self.members.contains(&p)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.members.iter().map(|p| p.variable()).collect()
    }

    pub fn complement(&self) -> Vec<PairIndex> {
        all_pairs(self.n).into_iter().filter(|p| !self.members.contains(p)).collect()
    }

    pub fn as_subposet(&self) -> Subposet {
        Subposet::new(self.members.iter().copied())
    }

    /// A pair of members whose meet or join is missing, if any.
    pub fn closure_witness(&self) -> Option<(PairIndex, PairIndex)> {
        for &a in &self.members {
            for &b in &self.members {
                if a < b && !(self.contains(meet(a, b)) && self.contains(join(a, b))) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Closed under meet and join of `L_n`.
    pub fn is_sublattice(&self) -> bool {
        self.closure_witness().is_none()
    }

    /// A pair `(outside, inside)` with `outside` not a member, `inside` a
    /// member and `inside < outside` in `Π_n`, if any.
    pub fn ideal_witness(&self) -> Option<(PairIndex, PairIndex)> {
        for a in self.complement() {
            for &b in &self.members {
                if leq_pi(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// `L_n \ S` is downward closed in `Π_n`.
    pub fn complement_is_poset_ideal(&self) -> bool {
        self.ideal_witness().is_none()
    }

    pub fn rank(&self) -> Result<usize> {
        self.as_subposet().rank()
    }

    pub fn is_compatible(&self) -> bool {
        self.is_compatible_with(RankClause::default())
    }

    pub fn is_compatible_with(&self, clause: RankClause) -> bool {
        self.is_sublattice()
            && self.complement_is_poset_ideal()
            && self.rank().map(|r| clause.accepts(r, self.n)).unwrap_or(false)
    }

    /// Contains every `(i, i+1)` and `(i, i+2)`, is a sublattice, and has a
    /// `Π_n`-ideal complement. No rank clause is imposed: at `n = 3` the
    /// only candidate, `L_3`, has rank 2.
    pub fn is_perfect(&self) -> bool {
        let n = self.n;
        n >= 2
            && (1..n).all(|i| self.contains(PairIndex { i, j: i + 1 }))
            && (1..n.saturating_sub(1)).all(|i| self.contains(PairIndex { i, j: i + 2 }))
            && self.is_sublattice()
            && self.complement_is_poset_ideal()
    }

    fn minimum(&self) -> Option<PairIndex> {
        let mut it = self.members.iter().copied();
        let first = it.next()?;
        Some(it.fold(first, meet))
    }

    /// Members that are not the minimum and are not the join of two strictly
    /// smaller members.
    pub fn join_irreducibles(&self) -> Result<Subposet> {
        if self.members.is_empty() {
            return Err(Error::EmptyPoset);
        }
        if let Some((a, b)) = self.closure_witness() {
            return Err(Error::NotALattice(format!("meet or join of {a} and {b} missing")));
        }
        let min = self.minimum().expect("nonempty");
        let irreducible = self.members.iter().copied().filter(|&a| {
            if a == min {
                return false;
            }
            let below: Vec<PairIndex> =
                self.members.iter().copied().filter(|&b| b != a && leq_l(b, a)).collect();
            !below.iter().any(|&b| below.iter().any(|&c| join(b, c) == a))
        });
        Ok(Subposet::new(irreducible))
    }

    /// Chain from `(1,2)` stepping to `(i,j+1)` when it is a member and to
    /// `(i+1,j)` otherwise, ending at `(n-1,n)`.
    pub fn fundamental_chain(&self) -> Result<Chain> {
        if !self.is_perfect() {
            return Err(Error::NotPerfect("fundamental chain needs a perfect compatible sublattice".into()));
        }
        let n = self.n;
        let mut cur = PairIndex { i: 1, j: 2 };
        let mut out = vec![cur];
        while cur != (PairIndex { i: n - 1, j: n }) {
            let right = PairIndex { i: cur.i, j: cur.j + 1 };
            cur = if cur.j < n && self.contains(right) { right } else { PairIndex { i: cur.i + 1, j: cur.j } };
            if cur.i >= cur.j || !self.contains(cur) {
                return Err(Error::NotPerfect(format!("step rule left the sublattice at {cur}")));
            }
            out.push(cur);
        }
        Chain::new(out)
    }

    /// The system of maximal cliques of the graph on `[n]` with edge set `S`,
    /// read as intervals: the `Π_n`-minimal members.
    pub fn generating_intervals(&self) -> Vec<(usize, usize)> {
        self.members
            .iter()
            .copied()
            .filter(|&a| !self.members.iter().any(|&b| b != a && leq_pi(b, a)))
            .map(|p| (p.i, p.j))
            .collect()
    }
}

fn check_budget(n: usize) -> Result<()> {
    if !(3..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::OutOfBudget { n, range: "3..=9" });
    }
    Ok(())
}

/// All nonempty subsets of `L_n` with `Π_n`-ideal complement, each given by
/// its generating interval antichain.
pub fn enumerate_pi_filters(n: usize) -> Result<Vec<Sublattice>> {
    interval_antichains(n)
        .into_iter()
        .filter(|a| !a.is_empty())
        .map(|a| Sublattice::from_intervals(n, &a))
        .collect()
}

/// Compatible sublattices under the default rank clause.
pub fn enumerate_compatible(n: usize) -> Result<Vec<Sublattice>> {
    enumerate_compatible_with(n, RankClause::default())
}

pub fn enumerate_compatible_with(n: usize, clause: RankClause) -> Result<Vec<Sublattice>> {
    check_budget(n)?;
    let mut out: Vec<Sublattice> =
        enumerate_pi_filters(n)?.into_iter().filter(|s| s.is_compatible_with(clause)).collect();
    out.sort();
    Ok(out)
}

/// Perfect compatible sublattices, one per admissible clique system whose
/// consecutive overlaps are all at least two.
pub fn enumerate_perfect_compatible(n: usize) -> Result<Vec<Sublattice>> {
    check_budget(n)?;
    let mut out: Vec<Sublattice> = enumerate_pi_filters(n)?.into_iter().filter(|s| s.is_perfect()).collect();
    out.sort();
    Ok(out)
}

/// Exhaustive subset search; independent of the interval machinery.
pub fn brute_force_compatible(n: usize, clause: RankClause) -> Result<Vec<Sublattice>> {
    if !(2..=5).contains(&n) {
        return Err(Error::OutOfBudget { n, range: "2..=5" });
    }
    let pairs = all_pairs(n);
    let mut out = Vec::new();
    for mask in 1u32..(1 << pairs.len()) {
        let s = Sublattice {
            n,
            members: pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect(),
        };
        if s.is_compatible_with(clause) {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

pub fn brute_force_perfect(n: usize) -> Result<Vec<Sublattice>> {
    if !(2..=5).contains(&n) {
        return Err(Error::OutOfBudget { n, range: "2..=5" });
    }
    let pairs = all_pairs(n);
    let mut out = Vec::new();
    for mask in 1u32..(1 << pairs.len()) {
        let s = Sublattice {
            n,
            members: pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect(),
        };
        if s.is_perfect() {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests;
