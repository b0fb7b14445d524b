//! Arc arrangements on `n` collinear points avoiding three forbidden
//! patterns, their maximal members, and the bijection with full binary
//! trees.

mod tree;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::PairIndex;

pub use tree::{full_binary_shapes, FullBinaryTree};

/// Largest `n` accepted by [`enumerate_maximal`].
pub const MAX_ARC_N: usize = 10;

/// A set of arcs `(a, b)`, `1 <= a < b <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcArrangement {
    n: usize,
    arcs: BTreeSet<PairIndex>,
}

/// An occurrence of a forbidden pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ForbiddenPattern {
    /// `(i,j), (k,l)` with `i < j < k < l`.
    Disjoint(PairIndex, PairIndex),
    /// `(i,k), (j,l), (k,m)` with `i < j < k < l < m`.
    Chain3(PairIndex, PairIndex, PairIndex),
    /// `(i,l), (j,m), (k,s)` with `i < j < k < l < m < s`.
    Cross3(PairIndex, PairIndex, PairIndex),
}

impl ArcArrangement {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = PairIndex>) -> Result<Self> {
        let arcs: BTreeSet<PairIndex> = arcs.into_iter().collect();
        if let Some(a) = arcs.iter().find(|a| a.j > n) {
            return Err(Error::InvalidIndices(format!("arc {a} outside [1,{n}]")));
        }
        Ok(ArcArrangement { n, arcs })
    }

    pub fn from_pairs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let arcs = arcs.iter().map(|&(a, b)| PairIndex::new(a, b)).collect::<Result<Vec<_>>>()?;
        Self::new(n, arcs)
    }

    pub fn empty(n: usize) -> Self {
        ArcArrangement { n, arcs: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &BTreeSet<PairIndex> {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, a: PairIndex) -> bool {
        self.arcs.contains(&a)
    }

    pub fn forbidden_pattern(&self) -> Option<ForbiddenPattern> {
        let v: Vec<PairIndex> = self.arcs.iter().copied().collect();
        find_pattern(&v, None)
    }

    pub fn is_allowed(&self) -> bool {
        self.forbidden_pattern().is_none()
    }

    pub fn is_maximal(&self) -> bool {
        self.is_allowed() && self.len() == max_arcs(self.n)
    }

    /// Number of arcs of each length `1..n`, indexed by length.
    pub fn length_profile(&self) -> Vec<usize> {
        let mut out = vec![0; self.n.max(1)];
        for a in &self.arcs {
            out[a.length()] += 1;
        }
        out
    }
}

fn pattern_of(arcs: [PairIndex; 3]) -> Option<ForbiddenPattern> {
    let mut s = arcs;
    s.sort();
    let [x, y, z] = s;
    if x.i < y.i && y.i < x.j && x.j == z.i && x.j < y.j && y.j < z.j {
        return Some(ForbiddenPattern::Chain3(x, y, z));
    }
    if x.i < y.i && y.i < z.i && z.i < x.j && x.j < y.j && y.j < z.j {
        return Some(ForbiddenPattern::Cross3(x, y, z));
    }
    None
}

/// First forbidden pattern among `arcs`, restricted to occurrences that use
/// `arcs[focus]` when `focus` is given.
fn find_pattern(arcs: &[PairIndex], focus: Option<usize>) -> Option<ForbiddenPattern> {
    let m = arcs.len();
    let uses = |t: &[usize]| focus.is_none_or(|f| t.contains(&f));
    for a in 0..m {
        for b in a + 1..m {
            if !uses(&[a, b]) {
                continue;
            }
            let (x, y) = if arcs[a] < arcs[b] { (arcs[a], arcs[b]) } else { (arcs[b], arcs[a]) };
            if x.j < y.i {
                return Some(ForbiddenPattern::Disjoint(x, y));
            }
        }
    }
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                if uses(&[a, b, c]) {
                    if let Some(p) = pattern_of([arcs[a], arcs[b], arcs[c]]) {
                        return Some(p);
                    }
                }
            }
        }
    }
    None
}

/// `2n - 3` for `n >= 2`.
pub fn max_arcs(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        2 * n - 3
    }
}

/// Arcs allowed per length in a maximal arrangement: one of length `n-1`,
/// two of every shorter length.
fn cap(n: usize, len: usize) -> usize {
    if len == n - 1 {
        1
    } else {
        2
    }
}

/// Depth-first search over lengths `n-1, n-2, ..., 1`, picking exactly
/// `cap` arcs of each length, containing `required`. Stops after `limit`
/// results.
fn search_maximal(n: usize, required: &BTreeSet<PairIndex>, limit: usize) -> Vec<ArcArrangement> {
    struct Ctx<'a> {
        n: usize,
        required: &'a BTreeSet<PairIndex>,
        limit: usize,
        chosen: Vec<PairIndex>,
        out: Vec<ArcArrangement>,
    }
    fn by_length(ctx: &mut Ctx<'_>, len: usize) {
        if ctx.out.len() >= ctx.limit {
            return;
        }
        if len == 0 {
            ctx.out.push(ArcArrangement { n: ctx.n, arcs: ctx.chosen.iter().copied().collect() });
            return;
        }
        let n = ctx.n;
        let candidates: Vec<PairIndex> = (1..=n - len).map(|i| PairIndex { i, j: i + len }).collect();
        pick(ctx, len, &candidates, 0, cap(n, len));
    }
    fn pick(ctx: &mut Ctx<'_>, len: usize, cands: &[PairIndex], start: usize, left: usize) {
        if left == 0 {
            // every required arc of this length must have been taken
            let missing = cands.iter().any(|c| ctx.required.contains(c) && !ctx.chosen.contains(c));
            if !missing {
                by_length(ctx, len - 1);
            }
            return;
        }
        for t in start..cands.len() {
            if cands[..t].iter().skip(start).any(|c| ctx.required.contains(c)) {
                // skipped a required arc
                break;
            }
            ctx.chosen.push(cands[t]);
            let focus = ctx.chosen.len() - 1;
            if find_pattern(&ctx.chosen, Some(focus)).is_none() {
                pick(ctx, len, cands, t + 1, left - 1);
            }
            ctx.chosen.pop();
            if ctx.out.len() >= ctx.limit {
                return;
            }
        }
    }
    if n < 2 {
        return Vec::new();
    }
    let mut ctx = Ctx { n, required, limit, chosen: Vec::new(), out: Vec::new() };
    by_length(&mut ctx, n - 1);
    ctx.out
}

/// All allowed arrangements with `2n - 3` arcs.
pub fn enumerate_maximal(n: usize) -> Result<Vec<ArcArrangement>> {
    if !(2..=MAX_ARC_N).contains(&n) {
        return Err(Error::OutOfBudget { n, range: "2..=10" });
    }
    let mut out = search_maximal(n, &BTreeSet::new(), usize::MAX);
    out.sort();
    Ok(out)
}

/// Every allowed subset of arcs, by filtering all `2^(n choose 2)` subsets.
pub fn enumerate_allowed_naive(n: usize) -> Result<Vec<ArcArrangement>> {
    if !(2..=5).contains(&n) {
        return Err(Error::OutOfBudget { n, range: "2..=5" });
    }
    let all = crate::lattice::all_pairs(n);
    let mut out = Vec::new();
    for mask in 0u32..(1 << all.len()) {
        let a = ArcArrangement {
            n,
            arcs: all.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect(),
        };
        if a.is_allowed() {
            out.push(a);
        }
    }
    Ok(out)
}

/// Maximal arrangements among [`enumerate_allowed_naive`]: those with the
/// most arcs.
pub fn enumerate_maximal_naive(n: usize) -> Result<Vec<ArcArrangement>> {
    let all = enumerate_allowed_naive(n)?;
    let best = all.iter().map(|a| a.len()).max().unwrap_or(0);
    let mut out: Vec<ArcArrangement> = all.into_iter().filter(|a| a.len() == best).collect();
    out.sort();
    Ok(out)
}

/// An allowed arrangement with `2n - 3` arcs containing `a`. The search
/// tries `(1,n)`, then `(1,n-1)` and `(2,n)`, then shorter arcs left to
/// right, backtracking as needed.
pub fn extend_to_maximal(a: &ArcArrangement) -> Result<ArcArrangement> {
    if let Some(p) = a.forbidden_pattern() {
        return Err(Error::NotAllowed(format!("{p:?}")));
    }
    if a.len() >= max_arcs(a.n) {
        return Err(Error::AlreadyMaximal);
    }
    search_maximal(a.n, &a.arcs, 1)
        .pop()
        .ok_or_else(|| Error::NotMaximalArrangement(format!("no maximal extension of {a}")))
}

impl fmt::Display for ArcArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs.iter().map(|a| format!("({},{})", a.i, a.j)).collect();
        write!(f, "n={}; arcs={}", self.n, arcs.join(","))
    }
}

impl FromStr for ArcArrangement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected 'n=<int>; arcs=(a,b),...', got '{s}'"));
        let (head, tail) = s.trim().split_once(';').ok_or_else(bad)?;
        let n: usize = head.trim().strip_prefix("n=").ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let body = tail.trim().strip_prefix("arcs=").ok_or_else(bad)?.trim();
        let mut arcs = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let inner = rest.strip_prefix('(').ok_or_else(bad)?;
            let (pair, after) = inner.split_once(')').ok_or_else(bad)?;
            let (a, b) = pair.split_once(',').ok_or_else(bad)?;
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            arcs.push(PairIndex::new(a, b)?);
            rest = after.trim_start();
            rest = rest.strip_prefix(',').map(str::trim_start).unwrap_or(rest);
        }
        ArcArrangement::new(n, arcs)
    }
}
