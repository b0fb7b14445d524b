//! Multivariate division, S-polynomials, Buchberger's algorithm with the
//! coprime-leading-term criterion, reduced bases, Gröbner certification and
//! elimination ideals.

mod dense;
pub mod io;

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{Monomial, MonomialOrder, OrderScheme, Polynomial, Variable};
use dense::{coprime, divides, DPoly, Ring};

/// Default cap on the number of S-pair reductions performed by one
/// Buchberger run.
pub const DEFAULT_SPAIR_BUDGET: usize = 200_000;

/// An ideal given by generators inside a polynomial ring on `ambient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    generators: Vec<Polynomial>,
    ambient: BTreeSet<Variable>,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>, ambient: BTreeSet<Variable>) -> Result<Self> {
        for g in &generators {
            if g.is_zero() {
                return Err(Error::InvalidIdeal("zero generator".into()));
            }
            if !g.uses_only(&ambient) {
                return Err(Error::InvalidIdeal(format!("generator {g} leaves the ambient ring")));
            }
        }
        Ok(Ideal { generators, ambient })
    }

    /// Ideal whose ambient ring is exactly the variables of its generators
    /// plus `extra`.
    pub fn spanning(generators: Vec<Polynomial>, extra: impl IntoIterator<Item = Variable>) -> Result<Self> {
        let mut ambient: BTreeSet<Variable> = extra.into_iter().collect();
        for g in &generators {
            ambient.extend(g.variables());
        }
        Self::new(generators, ambient)
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn ambient(&self) -> &BTreeSet<Variable> {
        &self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }
}

/// A Gröbner basis together with the order it was computed for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: MonomialOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| self.order.leading_monomial(g).expect("basis elements are nonzero"))
            .collect()
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if self.elements.is_empty() {
            return Ok(f.clone());
        }
        normal_form(f, &self.elements, &self.order)
    }

    /// Ideal membership via the normal form.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }
}

static BUDGET: AtomicUsize = AtomicUsize::new(DEFAULT_SPAIR_BUDGET);

/// Changes the S-pair budget used by [`BuchbergerConfig::default`] for the
/// rest of the process.
pub fn set_default_budget(limit: usize) {
    BUDGET.store(limit, Ordering::SeqCst);
}

pub fn default_budget() -> usize {
    BUDGET.load(Ordering::SeqCst)
}

/// Resource limits for [`buchberger_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerConfig {
    /// Maximum number of S-pairs that may be reduced. Exceeding it is an
    /// error, never a silent truncation.
    pub max_reductions: usize,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig { max_reductions: default_budget() }
    }
}

fn to_dense(ring: &Ring<'_>, polys: &[Polynomial]) -> Result<Vec<DPoly>> {
    polys
        .iter()
        .map(|g| {
            if g.is_zero() {
                Err(Error::ZeroPolynomial)
            } else {
                ring.dense_of(g)
            }
        })
        .collect()
}

/// Remainder of `f` on division by `divisors` (full reduction).
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], ord: &MonomialOrder) -> Result<Polynomial> {
    let ring = Ring::new(ord);
    let fd = ring.dense_of(f)?;
    let gs = to_dense(&ring, divisors)?;
    let refs: Vec<&DPoly> = gs.iter().collect();
    Ok(ring.to_poly(&ring.normal_form(&fd, &refs)))
}

/// The S-polynomial `lcm/lt(f) * f - lcm/lt(g) * g`, leading coefficients
/// normalised to one.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Result<Polynomial> {
    let ring = Ring::new(ord);
    let d = to_dense(&ring, &[f.clone(), g.clone()])?;
    Ok(ring.to_poly(&ring.s_polynomial(&d[0], &d[1])))
}

/// Reduced Gröbner basis with the default S-pair budget.
pub fn buchberger(ideal: &Ideal, ord: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(ideal, ord, &BuchbergerConfig::default())
}

/// Buchberger's algorithm: normal selection strategy (smallest lcm degree,
/// ties broken by index pair), coprime criterion only, then minimisation and
/// inter-reduction.
pub fn buchberger_with(ideal: &Ideal, ord: &MonomialOrder, config: &BuchbergerConfig) -> Result<GroebnerBasis> {
    let ring = Ring::new(ord);
    let mut basis: Vec<DPoly> = Vec::new();
    for g in to_dense(&ring, ideal.generators())? {
        let g = g.monic();
        if !basis.contains(&g) {
            basis.push(g);
        }
    }

    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((ring.lcm_degree(&basis[i], &basis[j]), i, j));
        }
    }

    let mut reductions = 0usize;
    while let Some(pair) = pairs.pop_first() {
        let (_, i, j) = pair;
        if coprime(basis[i].lm(), basis[j].lm()) {
            continue;
        }
        reductions += 1;
        if reductions > config.max_reductions {
            return Err(Error::BudgetExceeded { limit: config.max_reductions });
        }
        let s = ring.s_polynomial(&basis[i], &basis[j]);
        let refs: Vec<&DPoly> = basis.iter().collect();
        let r = ring.normal_form(&s, &refs);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        let k = basis.len();
        for (idx, b) in basis.iter().enumerate() {
            pairs.insert((ring.lcm_degree(b, &r), idx, k));
        }
        basis.push(r);
    }

    let elements = reduce_basis(&ring, basis);
    Ok(GroebnerBasis { elements, order: ord.clone(), reduced: true })
}

/// Minimises and inter-reduces a Gröbner basis, returns it monic and sorted
/// by leading monomial, largest first.
fn reduce_basis(ring: &Ring<'_>, basis: Vec<DPoly>) -> Vec<Polynomial> {
    let mut keep: Vec<&DPoly> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            j != i && divides(h.lm(), g.lm()) && (h.lm() != g.lm() || j < i)
        });
        if !redundant {
            keep.push(g);
        }
    }
    let mut reduced: Vec<DPoly> = keep
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let others: Vec<&DPoly> =
                keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| *h).collect();
            ring.normal_form(g, &others)
        })
        .map(DPoly::monic)
        .collect();
    reduced.sort_by(|a, b| ring.cmp(b.lm(), a.lm()));
    reduced.iter().map(|g| ring.to_poly(g)).collect()
}

/// Minimises and inter-reduces `g` without forming S-polynomials. When `g`
/// is a Gröbner basis the result is the reduced Gröbner basis.
pub fn interreduce(g: &[Polynomial], ord: &MonomialOrder) -> Result<Vec<Polynomial>> {
    let ring = Ring::new(ord);
    let d = to_dense(&ring, g)?.into_iter().map(DPoly::monic).collect();
    Ok(reduce_basis(&ring, d))
}

/// First pair `(i, j)` (in index order) whose S-polynomial does not reduce to
/// zero, skipping pairs with coprime leading monomials.
pub fn groebner_witness(g: &[Polynomial], ord: &MonomialOrder) -> Result<Option<(usize, usize, Polynomial)>> {
    let ring = Ring::new(ord);
    let d = to_dense(&ring, g)?;
    let refs: Vec<&DPoly> = d.iter().collect();
    let pairs: Vec<(usize, usize)> =
        (0..d.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let found = pairs.par_iter().find_map_first(|&(i, j)| {
        if coprime(d[i].lm(), d[j].lm()) {
            return None;
        }
        let r = ring.normal_form(&ring.s_polynomial(&d[i], &d[j]), &refs);
        (!r.is_zero()).then(|| (i, j, ring.to_poly(&r)))
    });
    Ok(found)
}

/// Buchberger's criterion.
pub fn is_groebner(g: &[Polynomial], ord: &MonomialOrder) -> Result<bool> {
    Ok(groebner_witness(g, ord)?.is_none())
}

/// Checks that a reduced basis is reduced: monic elements, and no term of any
/// element divisible by another element's leading monomial.
pub fn is_reduced(g: &[Polynomial], ord: &MonomialOrder) -> Result<bool> {
    let ring = Ring::new(ord);
    let d = to_dense(&ring, g)?;
    for (i, f) in d.iter().enumerate() {
        if !num_traits::One::is_one(f.lc()) {
            return Ok(false);
        }
        for (j, h) in d.iter().enumerate() {
            if i != j && f.terms.iter().any(|(m, _)| divides(h.lm(), m)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Elimination ideal `I ∩ K[keep]` read off a Gröbner basis for a block order
/// that eliminates exactly the complement of `keep`.
pub fn eliminate(ideal: &Ideal, keep: &BTreeSet<Variable>, ord: &MonomialOrder) -> Result<Ideal> {
    if !keep.is_subset(ideal.ambient()) {
        return Err(Error::InvalidIdeal("kept variables are not a subset of the ambient ring".into()));
    }
    if ord.scheme() != OrderScheme::BlockElimLex {
        return Err(Error::InvalidOrder("elimination needs a block elimination order".into()));
    }
    let ordered: BTreeSet<Variable> = ord.variables().iter().copied().collect();
    if &ordered != ideal.ambient() || &ord.kept() != keep {
        return Err(Error::InvalidOrder(
            "order must eliminate exactly the complement of the kept variables".into(),
        ));
    }
    let gb = buchberger(ideal, ord)?;
    let generators = gb.into_elements().into_iter().filter(|g| g.uses_only(keep)).collect();
    Ideal::new(generators, keep.clone())
}

/// Ideal equality by two-sided containment of generators in the other
/// ideal's Gröbner basis.
pub fn ideal_equal(a: &Ideal, b: &Ideal, ord: &MonomialOrder) -> Result<bool> {
    if a.ambient() != b.ambient() {
        return Err(Error::InvalidIdeal("ideals live in different rings".into()));
    }
    let ga = buchberger(a, ord)?;
    let gb = buchberger(b, ord)?;
    for f in b.generators() {
        if !ga.contains(f)? {
            return Ok(false);
        }
    }
    for f in a.generators() {
        if !gb.contains(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Set of leading monomials of a list of polynomials.
pub fn leading_monomial_set(g: &[Polynomial], ord: &MonomialOrder) -> Result<HashSet<Monomial>> {
    g.iter().map(|f| ord.leading_monomial(f)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{p, Rational};

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn vars(list: &[(usize, usize)]) -> Vec<Variable> {
        list.iter().map(|&(i, j)| p(i, j)).collect()
    }

    #[test]
    fn self_reduction_is_zero() {
        let q = poly("p[1,4]*p[2,3] - p[1,3]*p[2,4] + p[1,2]*p[3,4]");
        let ord = MonomialOrder::lex(vars(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])).unwrap();
        assert!(normal_form(&q, std::slice::from_ref(&q), &ord).unwrap().is_zero());
        assert!(s_polynomial(&q, &q, &ord).unwrap().is_zero());
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let q = poly("2*p[1,4]*p[2,3] - 2*p[1,3]*p[2,4] + 2*p[1,2]*p[3,4]");
        let ord = MonomialOrder::revlex(vars(&[(3, 4), (2, 4), (1, 4), (2, 3), (1, 3), (1, 2)])).unwrap();
        let ideal = Ideal::spanning(vec![q.clone()], []).unwrap();
        let gb = buchberger(&ideal, &ord).unwrap();
        assert_eq!(gb.elements(), &[q.scale(&Rational::new(1.into(), 2.into()))]);
        assert!(gb.is_reduced());
    }

    #[test]
    fn textbook_twisted_cubic() {
        // y - x^2, z - x^3 under lex z > y > x: reduced basis {z - x^3, y - x^2}
        // written with auxiliary variables x[1] = x, x[2] = y, x[3] = z.
        use crate::exactalg::Variable::X;
        let ord = MonomialOrder::lex(vec![X(3), X(2), X(1)]).unwrap();
        let ideal = Ideal::spanning(vec![poly("x[2] - x[1]^2"), poly("x[3] - x[1]^3")], []).unwrap();
        let gb = buchberger(&ideal, &ord).unwrap();
        assert_eq!(gb.elements(), &[poly("x[3] - x[1]^3"), poly("x[2] - x[1]^2")]);
        // grevlex x > y > z on the same ideal needs more elements
        let ord = MonomialOrder::revlex(vec![X(1), X(2), X(3)]).unwrap();
        let gb = buchberger(&ideal, &ord).unwrap();
        assert!(is_groebner(gb.elements(), &ord).unwrap());
        assert!(is_reduced(gb.elements(), &ord).unwrap());
        assert_eq!(gb.len(), 3);
    }

    #[test]
    fn budget_is_enforced() {
        use crate::exactalg::Variable::X;
        let ord = MonomialOrder::revlex(vec![X(1), X(2), X(3)]).unwrap();
        let ideal = Ideal::spanning(vec![poly("x[2] - x[1]^2"), poly("x[3] - x[1]^3")], []).unwrap();
        let err = buchberger_with(&ideal, &ord, &BuchbergerConfig { max_reductions: 1 }).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { limit: 1 });
    }

    #[test]
    fn ideal_validation() {
        let amb: BTreeSet<_> = [p(1, 2)].into_iter().collect();
        assert!(Ideal::new(vec![Polynomial::zero()], amb.clone()).is_err());
        assert!(Ideal::new(vec![poly("p[1,3]")], amb.clone()).is_err());
        let zero_ideal = Ideal::new(vec![], amb.clone()).unwrap();
        let ord = MonomialOrder::lex(vec![p(1, 2)]).unwrap();
        assert!(buchberger(&zero_ideal, &ord).unwrap().is_empty());
        assert!(ideal_equal(&zero_ideal, &zero_ideal, &ord).unwrap());
    }

    #[test]
    fn eliminate_rejects_bad_keep() {
        let q = poly("p[1,4]*p[2,3] - p[1,3]*p[2,4] + p[1,2]*p[3,4]");
        let ideal = Ideal::spanning(vec![q], []).unwrap();
        let keep: BTreeSet<_> = [p(5, 6)].into_iter().collect();
        let ord = MonomialOrder::lex(vars(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])).unwrap();
        assert!(eliminate(&ideal, &keep, &ord).is_err());
    }
}
