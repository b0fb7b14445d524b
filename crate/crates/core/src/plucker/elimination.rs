//! Elimination ideals of the Plücker ideal versus their quadratic
//! generators.

use std::collections::BTreeSet;

use super::{appendix_order, appendix_variables, elimination_order, plucker_ideal, quadric};
use crate::error::{Error, Result};
use crate::exactalg::{MonomialOrder, Polynomial, Variable};
use crate::graphs::Graph;
use crate::groebner::{eliminate, ideal_equal, Ideal};
use crate::lattice::{PairIndex, Sublattice};

/// Quadrics `Q_ijkl` all six of whose variables lie in `vars`.
pub fn quadrics_supported_on(n: usize, vars: &BTreeSet<Variable>) -> Vec<Polynomial> {
    super::tuples(n, 4)
        .into_iter()
        .map(|t| quadric(t[0], t[1], t[2], t[3]).expect("sorted"))
        .filter(|q| q.uses_only(vars))
        .collect()
}

/// `(Q_ijkl : p_il ∈ L)` in the ring `K[p : p ∈ L]`.
pub fn quadric_ideal_of(l: &Sublattice) -> Result<Ideal> {
    let gens = super::tuples(l.n(), 4)
        .into_iter()
        .filter(|t| l.contains(PairIndex { i: t[0], j: t[3] }))
        .map(|t| quadric(t[0], t[1], t[2], t[3]))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(gens, l.variables())
}

fn kept_order(full: &MonomialOrder, keep: &BTreeSet<Variable>) -> Result<MonomialOrder> {
    let vars: Vec<Variable> = full.variables().iter().filter(|v| keep.contains(v)).copied().collect();
    MonomialOrder::lex(vars)
}

/// The elimination ideal `I_{L_n} ∩ K[L]` equals the ideal generated by the
/// quadrics `Q_ijkl` with `p_il ∈ L`. Needs `L` to be a sublattice whose
/// complement is a `Π_n` poset ideal; no rank condition is imposed.
pub fn elimination_vs_quadrics(l: &Sublattice) -> Result<bool> {
    if !l.is_sublattice() || !l.complement_is_poset_ideal() {
        return Err(Error::NotCompatible(
            "needs a sublattice whose complement is a poset ideal of Π_n".into(),
        ));
    }
    let ord = elimination_order(l, None)?;
    let keep = l.variables();
    let elim = eliminate(&plucker_ideal(l.n()), &keep, &ord)?;
    let expected = quadric_ideal_of(l)?;
    ideal_equal(&elim, &expected, &kept_order(&ord, &keep)?)
}

/// The missing edges of `g` are an initial segment of
/// `p12 > p13 > ... > p(n-1)n`. Returns that segment.
pub fn is_elimination_compatible(g: &Graph) -> Option<Vec<Variable>> {
    let vars = appendix_variables(g.n());
    let missing: Vec<Variable> = vars
        .iter()
        .copied()
        .filter(|v| {
            let (i, j) = v.pair().expect("Plücker");
            !g.has_edge(i, j)
        })
        .collect();
    (vars[..missing.len()] == missing[..]).then_some(missing)
}

/// `I_G = I_{L_n} ∩ K[p_ij : ij ∈ E(G)]` is generated by the quadrics whose
/// six variables are edges of `G`. Only the canonical labeling is handled:
/// the complement of `G` must be an initial segment of the order.
pub fn elim_order_graph_corollary(g: &Graph) -> Result<bool> {
    let deleted = is_elimination_compatible(g).ok_or_else(|| {
        Error::NotEliminationCompatible("missing edges are not an initial segment of p12 > p13 > ...".into())
    })?;
    let n = g.n();
    let keep: BTreeSet<Variable> = g.edges().iter().map(|e| e.variable()).collect();
    let ord = MonomialOrder::block_elim_lex(appendix_variables(n), deleted.into_iter().collect())?;
    let elim = eliminate(&plucker_ideal(n), &keep, &ord)?;
    let expected = Ideal::new(quadrics_supported_on(n, &keep), keep.clone())?;
    ideal_equal(&elim, &expected, &kept_order(&appendix_order(n), &keep)?)
}
