//! Sublattice files: `n: <int>` followed by one `i j` pair per line.

use std::fmt::Write as _;

use super::{PairIndex, Sublattice};
use crate::error::{Error, Result};

pub fn parse_sublattice(text: &str) -> Result<Sublattice> {
    let mut n = None;
    let mut pairs = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if n.is_none() {
            let v = line
                .strip_prefix("n:")
                .ok_or_else(|| Error::Parse("expected 'n: <int>' header".into()))?;
            n = Some(v.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad n: {e}")))?);
            continue;
        }
        let nums: Vec<usize> = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("bad index '{t}': {e}"))))
            .collect::<Result<_>>()?;
        let [i, j] = nums[..] else {
            return Err(Error::Parse(format!("expected 'i j', got '{line}'")));
        };
        pairs.push(PairIndex::new(i, j)?);
    }
    let n = n.ok_or_else(|| Error::Parse("missing 'n:' header".into()))?;
    Sublattice::new(n, pairs)
}

/// Canonical form: pairs sorted lexicographically.
pub fn write_sublattice(s: &Sublattice) -> String {
    let mut out = format!("n: {}\n", s.n());
    for p in s.members() {
        let _ = writeln!(out, "{} {}", p.i, p.j);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_errors() {
        let s = Sublattice::from_pairs(4, &[(2, 3), (1, 2), (1, 3)]).unwrap();
        let text = write_sublattice(&s);
        assert_eq!(text, "n: 4\n1 2\n1 3\n2 3\n");
        assert_eq!(parse_sublattice(&text).unwrap(), s);
        assert_eq!(parse_sublattice("# c\nn: 3\n\n1 2 # edge\n").unwrap().len(), 1);
        assert!(parse_sublattice("1 2\n").is_err());
        assert!(parse_sublattice("n: 3\n2 1\n").is_err());
        assert!(parse_sublattice("n: 3\n1 4\n").is_err());
        assert!(parse_sublattice("n: 3\n1 2 3\n").is_err());
    }
}
