//! Squarefree monomial ideals, their Stanley–Reisner complexes, and the
//! initial ideal `M_{L_n}` of the lexicographic basis.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{appendix_basis, appendix_order};
use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Variable};

/// A squarefree monomial ideal with a minimal generating set, inside the
/// polynomial ring on `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeMonomialIdeal {
    vertices: Vec<Variable>,
    generators: Vec<Monomial>,
}

impl SquarefreeMonomialIdeal {
    /// Drops redundant generators; rejects non-squarefree ones and
    /// generators outside the ring.
    pub fn new(vertices: Vec<Variable>, generators: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let vset: BTreeSet<Variable> = vertices.iter().copied().collect();
        let all: BTreeSet<Monomial> = generators.into_iter().collect();
        for g in &all {
            if !g.is_squarefree() {
                return Err(Error::InvalidIdeal(format!("{g} is not squarefree")));
            }
            if g.variables().any(|v| !vset.contains(&v)) {
                return Err(Error::InvalidIdeal(format!("{g} leaves the ring")));
            }
        }
        let generators = all
            .iter()
            .filter(|g| !all.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        Ok(SquarefreeMonomialIdeal { vertices, generators })
    }

    pub fn vertices(&self) -> &[Variable] {
        &self.vertices
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Facets of the Stanley–Reisner complex: maximal vertex sets containing
    /// the support of no generator.
    pub fn stanley_reisner_complex(&self) -> SimplicialComplex {
        let nv = self.vertices.len();
        let idx = |v: Variable| self.vertices.iter().position(|&w| w == v).expect("validated");
        let gens: Vec<Vec<usize>> = self.generators.iter().map(|g| g.variables().map(idx).collect()).collect();
        let by_vertex: Vec<Vec<usize>> =
            (0..nv).map(|v| (0..gens.len()).filter(|&g| gens[g].contains(&v)).collect()).collect();

        // state: 1 = in, 2 = out, 0 = undecided
        struct Search<'a> {
            gens: &'a [Vec<usize>],
            by_vertex: &'a [Vec<usize>],
            state: Vec<u8>,
            facets: Vec<Vec<usize>>,
        }
        impl Search<'_> {
            fn creates_generator(&self, v: usize) -> bool {
                self.by_vertex[v].iter().any(|&g| self.gens[g].iter().all(|&u| u == v || self.state[u] == 1))
            }
            // An excluded vertex must eventually be blocked by a generator
            // whose other vertices all end up in the face.
            fn blockable(&self, v: usize) -> bool {
                self.by_vertex[v].iter().any(|&g| self.gens[g].iter().all(|&u| u == v || self.state[u] != 2))
            }
            fn go(&mut self, v: usize) {
                let nv = self.state.len();
                if v == nv {
                    if (0..nv).all(|u| self.state[u] == 1 || self.creates_generator(u)) {
                        self.facets.push((0..nv).filter(|&u| self.state[u] == 1).collect());
                    }
                    return;
                }
                if !self.creates_generator(v) {
                    self.state[v] = 1;
                    let ok = (0..v).all(|u| self.state[u] == 1 || self.blockable(u));
                    if ok {
                        self.go(v + 1);
                    }
                }
                self.state[v] = 2;
                if self.blockable(v) && (0..v).all(|u| self.state[u] == 1 || self.blockable(u)) {
                    self.go(v + 1);
                }
                self.state[v] = 0;
            }
        }
        let mut search = Search { gens: &gens, by_vertex: &by_vertex, state: vec![0; nv], facets: Vec::new() };
        search.go(0);
        let facets = search
            .facets
            .into_iter()
            .map(|f| f.into_iter().map(|u| self.vertices[u]).collect())
            .collect();
        SimplicialComplex { vertices: self.vertices.clone(), facets }
    }
}

/// A simplicial complex given by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<Variable>,
    facets: Vec<BTreeSet<Variable>>,
}

impl SimplicialComplex {
    pub fn vertices(&self) -> &[Variable] {
        &self.vertices
    }

    pub fn facets(&self) -> &[BTreeSet<Variable>] {
        &self.facets
    }

    pub fn facets_pairwise_incomparable(&self) -> bool {
        self.facets
            .iter()
            .enumerate()
            .all(|(a, f)| self.facets.iter().enumerate().all(|(b, g)| a == b || !f.is_subset(g)))
    }
}

/// Dimension (largest facet size, i.e. Krull dimension of the face ring),
/// degree (number of largest facets) and equidimensionality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StanleyReisnerSummary {
    pub dimension: usize,
    pub degree: usize,
    pub equidimensional: bool,
    pub facets: usize,
}

pub fn stanley_reisner_analysis(m: &SquarefreeMonomialIdeal) -> StanleyReisnerSummary {
    let complex = m.stanley_reisner_complex();
    let sizes: Vec<usize> = complex.facets.iter().map(|f| f.len()).collect();
    let dimension = sizes.iter().copied().max().unwrap_or(0);
    StanleyReisnerSummary {
        dimension,
        degree: sizes.iter().filter(|&&s| s == dimension).count(),
        equidimensional: sizes.iter().all(|&s| s == dimension),
        facets: sizes.len(),
    }
}

/// Leading monomials of the quadrics and cubics of the lexicographic basis
/// under `p12 > p13 > ... > p(n-1)n`.
pub fn appendix_leading_monomials(n: usize) -> Vec<Monomial> {
    let ord = appendix_order(n);
    appendix_basis(n).iter().map(|f| ord.leading_monomial(f).expect("nonzero")).collect()
}

/// `M_{L_n}`, generated by [`appendix_leading_monomials`].
pub fn m_ideal(n: usize) -> SquarefreeMonomialIdeal {
    SquarefreeMonomialIdeal::new(super::appendix_variables(n), appendix_leading_monomials(n))
        .expect("leading monomials are squarefree")
}
