//! Full binary trees labelled by arcs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::ArcArrangement;
use crate::error::{Error, Result};
use crate::lattice::PairIndex;

/// A full binary tree whose nodes carry arcs. Printed as `()@[a,b]` for a
/// leaf and `(LR)@[a,b]` for an internal node with subtrees `L` and `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FullBinaryTree {
    Leaf(PairIndex),
    Node(PairIndex, Box<FullBinaryTree>, Box<FullBinaryTree>),
}

impl FullBinaryTree {
    pub fn label(&self) -> PairIndex {
        match self {
            FullBinaryTree::Leaf(a) | FullBinaryTree::Node(a, _, _) => *a,
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            FullBinaryTree::Leaf(_) => 1,
            FullBinaryTree::Node(_, l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn nodes(&self) -> usize {
        match self {
            FullBinaryTree::Leaf(_) => 1,
            FullBinaryTree::Node(_, l, r) => 1 + l.nodes() + r.nodes(),
        }
    }

    pub fn labels(&self) -> Vec<PairIndex> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<PairIndex>) {
        out.push(self.label());
        if let FullBinaryTree::Node(_, l, r) = self {
            l.collect(out);
            r.collect(out);
        }
    }

    /// The unlabelled shape, written with `.` for leaves.
    pub fn shape(&self) -> String {
        match self {
            FullBinaryTree::Leaf(_) => ".".into(),
            FullBinaryTree::Node(_, l, r) => format!("({}{})", l.shape(), r.shape()),
        }
    }

    /// Builds the tree of a maximal allowed arrangement from the root
    /// `(1,n)`: node `(a,b)` has children the longest arcs `(a,j)` with
    /// `j < b` and `(i,b)` with `i > a` when both exist, and is a leaf
    /// otherwise.
    pub fn from_arrangement(arr: &ArcArrangement) -> Result<Self> {
        let n = arr.n();
        let fail = |m: String| Error::NotMaximalArrangement(m);
        if !arr.is_maximal() {
            return Err(fail(format!("{arr} is not allowed with 2n-3 arcs")));
        }
        fn build(arr: &ArcArrangement, a: PairIndex, depth: usize) -> Result<FullBinaryTree> {
            if depth > arr.len() {
                return Err(Error::NotMaximalArrangement("child rule does not terminate".into()));
            }
            let left = arr.arcs().iter().filter(|x| x.i == a.i && x.j < a.j).max_by_key(|x| x.j).copied();
            let right = arr.arcs().iter().filter(|x| x.j == a.j && x.i > a.i).min_by_key(|x| x.i).copied();
            match (left, right) {
                (Some(l), Some(r)) => {
                    if r.i > l.j {
                        return Err(Error::NotMaximalArrangement(format!("children {l} and {r} of {a} are disjoint")));
                    }
                    Ok(FullBinaryTree::Node(
                        a,
                        Box::new(build(arr, l, depth + 1)?),
                        Box::new(build(arr, r, depth + 1)?),
                    ))
                }
                _ => Ok(FullBinaryTree::Leaf(a)),
            }
        }
        let tree = build(arr, PairIndex { i: 1, j: n }, 0)?;
        let labels = tree.labels();
        let distinct: BTreeSet<PairIndex> = labels.iter().copied().collect();
        if distinct.len() != labels.len() || &distinct != arr.arcs() {
            return Err(fail(format!("child rule does not visit every arc of {arr} exactly once")));
        }
        Ok(tree)
    }

    /// The set of node labels, on `n` points where `(1,n)` labels the root.
    pub fn to_arrangement(&self) -> Result<ArcArrangement> {
        let labels = self.labels();
        let distinct: BTreeSet<PairIndex> = labels.iter().copied().collect();
        if distinct.len() != labels.len() {
            return Err(Error::InvalidTree("repeated arc label".into()));
        }
        let root = self.label();
        if root.i != 1 {
            return Err(Error::InvalidTree(format!("root {root} does not start at 1")));
        }
        ArcArrangement::new(root.j, distinct)
    }
}

impl fmt::Display for FullBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FullBinaryTree::Leaf(a) => write!(f, "()@[{},{}]", a.i, a.j),
            FullBinaryTree::Node(a, l, r) => write!(f, "({l}{r})@[{},{}]", a.i, a.j),
        }
    }
}

impl FromStr for FullBinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn parse(s: &[u8], pos: &mut usize) -> Result<FullBinaryTree> {
            let err = |m: &str, p: usize| Error::Parse(format!("{m} at byte {p}"));
            if s.get(*pos) != Some(&b'(') {
                return Err(err("expected '('", *pos));
            }
            *pos += 1;
            let children = if s.get(*pos) == Some(&b')') {
                None
            } else {
                let l = parse(s, pos)?;
                let r = parse(s, pos)?;
                Some((l, r))
            };
            if s.get(*pos) != Some(&b')') {
                return Err(err("expected ')'", *pos));
            }
            *pos += 1;
            if s.get(*pos..*pos + 2) != Some(b"@[") {
                return Err(err("expected '@['", *pos));
            }
            *pos += 2;
            let close = s[*pos..].iter().position(|&c| c == b']').ok_or_else(|| err("missing ']'", *pos))?;
            let body = std::str::from_utf8(&s[*pos..*pos + close]).map_err(|_| err("bad utf-8", *pos))?;
            *pos += close + 1;
            let (a, b) = body.split_once(',').ok_or_else(|| err("expected 'a,b'", *pos))?;
            let a: usize = a.trim().parse().map_err(|_| err("bad number", *pos))?;
            let b: usize = b.trim().parse().map_err(|_| err("bad number", *pos))?;
            let label = PairIndex::new(a, b)?;
            Ok(match children {
                None => FullBinaryTree::Leaf(label),
                Some((l, r)) => FullBinaryTree::Node(label, Box::new(l), Box::new(r)),
            })
        }
        let bytes: Vec<u8> = s.bytes().filter(|c| !c.is_ascii_whitespace()).collect();
        let mut pos = 0;
        let t = parse(&bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("trailing input after byte {pos}")));
        }
        Ok(t)
    }
}

/// All unlabelled full binary tree shapes with `leaves` leaves.
pub fn full_binary_shapes(leaves: usize) -> Vec<String> {
    if leaves == 0 {
        return Vec::new();
    }
    if leaves == 1 {
        return vec![".".into()];
    }
    let mut out = Vec::new();
    for k in 1..leaves {
        for l in full_binary_shapes(k) {
            for r in full_binary_shapes(leaves - k) {
                out.push(format!("({l}{r})"));
            }
        }
    }
    out
}
