//! Graph files: `n: <int>` followed by one edge `i j` per line.

use super::Graph;
use crate::error::Result;
use crate::lattice::{parse_sublattice, write_sublattice};

pub fn parse_graph(text: &str) -> Result<Graph> {
    let s = parse_sublattice(text)?;
    Graph::new(s.n(), s.members().iter().copied())
}

pub fn write_graph(g: &Graph) -> String {
    write_sublattice(&g.as_sublattice())
}
