//! Straightening into standard monomials and the standard-monomial basis
//! check.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{plucker_image, quadrics};
use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Polynomial, Rational, Variable};
use crate::groebner::{buchberger, normal_form, Ideal};
use crate::lattice::{all_pairs, canonical_extension, leq_l, PairIndex, PairOrder};

use super::orders::revlex_order_from_l;

/// A product of Plücker variables whose indices form a weakly increasing
/// chain of `L_n`, stored in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StandardMonomial(Vec<PairIndex>);

impl StandardMonomial {
    pub fn new(mut factors: Vec<PairIndex>) -> Result<Self> {
        factors.sort();
        if !is_chain(&factors) {
            return Err(Error::InvalidIndices(format!("{factors:?} is not a chain of L_n")));
        }
        Ok(StandardMonomial(factors))
    }

    pub fn factors(&self) -> &[PairIndex] {
        &self.0
    }

    pub fn to_monomial(&self) -> Monomial {
        Monomial::product(self.0.iter().map(|p| p.variable()))
    }
}

impl fmt::Display for StandardMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_monomial())
    }
}

fn is_chain(sorted: &[PairIndex]) -> bool {
    sorted.windows(2).all(|w| leq_l(w[0], w[1]))
}

fn factors_of(m: &Monomial) -> Result<Vec<PairIndex>> {
    let mut out = Vec::new();
    for (v, e) in m.iter() {
        let pair = PairIndex::from_variable(v)
            .ok_or_else(|| Error::InvalidVariable(format!("{v} is not a Plücker variable")))?;
        out.extend(std::iter::repeat_n(pair, e as usize));
    }
    out.sort();
    Ok(out)
}

/// Whether the factors of `m` form a chain of `L_n`.
pub fn is_standard(m: &Monomial) -> Result<bool> {
    Ok(is_chain(&factors_of(m)?))
}

fn ambient_n(f: &Polynomial) -> Result<usize> {
    let mut n = 2;
    for v in f.variables() {
        let (_, j) = v.pair().ok_or_else(|| Error::InvalidVariable(format!("{v} is not a Plücker variable")))?;
        n = n.max(j);
    }
    Ok(n)
}

/// Normal form of `f` modulo the quadrics, which form a Gröbner basis for
/// the reverse lexicographic order from `L_n`, written in standard monomials.
pub fn straighten(f: &Polynomial) -> Result<Vec<(Rational, StandardMonomial)>> {
    let n = ambient_n(f)?;
    let ord = revlex_order_from_l(&canonical_extension(n, PairOrder::L))?;
    let gens = quadrics(n);
    let r = if gens.is_empty() { f.clone() } else { normal_form(f, &gens, &ord)? };
    r.terms()
        .map(|(m, c)| Ok((c.clone(), StandardMonomial::new(factors_of(m)?)?)))
        .collect()
}

/// One application of `p_il p_jk -> p_ik p_jl - p_ij p_kl`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RewriteStep {
    /// The incomparable factors `p_il` and `p_jk`.
    pub alpha: PairIndex,
    pub beta: PairIndex,
    /// `(p_ik, p_jl)` and `(p_ij, p_kl)`, smaller factor first.
    pub replacements: [(PairIndex, PairIndex); 2],
}

impl RewriteStep {
    /// Both replacement products start with a factor below `alpha` and `beta`.
    pub fn dominated(&self) -> bool {
        self.replacements
            .iter()
            .all(|&(g1, g2)| leq_l(g1, g2) && leq_l(g1, self.alpha) && leq_l(g1, self.beta))
    }
}

fn incomparable_pair(factors: &[PairIndex]) -> Option<(usize, usize)> {
    for a in 0..factors.len() {
        for b in a + 1..factors.len() {
            let (x, y) = (factors[a], factors[b]);
            if !leq_l(x, y) && !leq_l(y, x) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Straightening by repeated rewriting of incomparable factor pairs, with
/// the list of rewrites performed.
pub fn straighten_by_rewriting(f: &Polynomial) -> Result<(Polynomial, Vec<RewriteStep>)> {
    let mut done = Polynomial::zero();
    let mut todo: BTreeMap<Vec<PairIndex>, Rational> = BTreeMap::new();
    for (m, c) in f.terms() {
        *todo.entry(factors_of(m)?).or_default() += c;
    }
    let mut steps = Vec::new();
    while let Some((factors, c)) = todo.pop_last() {
        if num_traits::Zero::is_zero(&c) {
            continue;
        }
        let Some((a, b)) = incomparable_pair(&factors) else {
            done.add_term(Monomial::product(factors.iter().map(|p| p.variable())), c);
            continue;
        };
        let (x, y) = (factors[a], factors[b]);
        let (il, jk) = if x.i < y.i { (x, y) } else { (y, x) };
        let (i, j, k, l) = (il.i, jk.i, jk.j, il.j);
        let step = RewriteStep {
            alpha: il,
            beta: jk,
            replacements: [(PairIndex { i, j: k }, PairIndex { i: j, j: l }), (PairIndex { i, j }, PairIndex { i: k, j: l })],
        };
        let rest: Vec<PairIndex> =
            factors.iter().enumerate().filter(|&(t, _)| t != a && t != b).map(|(_, &q)| q).collect();
        for (sign, (g1, g2)) in [(1, step.replacements[0]), (-1, step.replacements[1])] {
            let mut next = rest.clone();
            next.push(g1);
            next.push(g2);
            next.sort();
            *todo.entry(next).or_default() += &c * Rational::from_integer(sign.into());
        }
        steps.push(step);
    }
    Ok((done, steps))
}

/// For every incomparable pair `α, β` of `L_n`, every standard monomial in
/// the straightened form of `αβ` starts with a factor below both. Returns
/// the first violation.
pub fn asl_dominance_holds(n: usize) -> Result<Option<(PairIndex, PairIndex, StandardMonomial)>> {
    let pairs = all_pairs(n);
    for (t, &a) in pairs.iter().enumerate() {
        for &b in &pairs[t + 1..] {
            if leq_l(a, b) || leq_l(b, a) {
                continue;
            }
            let f = Polynomial::monomial(Monomial::product([a.variable(), b.variable()]), Rational::from_integer(1.into()));
            for (_, sm) in straighten(&f)? {
                let g1 = sm.factors()[0];
                if !(leq_l(g1, a) && leq_l(g1, b)) {
                    return Ok(Some((a, b, sm)));
                }
            }
        }
    }
    Ok(None)
}

/// All degree-`d` standard monomials on `L_n`.
pub fn standard_monomials(n: usize, d: usize) -> Vec<StandardMonomial> {
    fn grow(pairs: &[PairIndex], start: usize, d: usize, cur: &mut Vec<PairIndex>, out: &mut Vec<StandardMonomial>) {
        if cur.len() == d {
            out.push(StandardMonomial(cur.clone()));
            return;
        }
        for t in start..pairs.len() {
            if cur.last().is_none_or(|&last| leq_l(last, pairs[t])) {
                cur.push(pairs[t]);
                grow(pairs, t, d, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(&all_pairs(n), 0, d, &mut Vec::new(), &mut out);
    out
}

fn all_monomials(vars: &[Variable], d: usize) -> Vec<Monomial> {
    fn grow(vars: &[Variable], start: usize, d: usize, cur: &mut Vec<Variable>, out: &mut Vec<Monomial>) {
        if cur.len() == d {
            out.push(Monomial::product(cur.iter().copied()));
            return;
        }
        for t in start..vars.len() {
            cur.push(vars[t]);
            grow(vars, t, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    grow(vars, 0, d, &mut Vec::new(), &mut out);
    out
}

/// Rank of a list of polynomials viewed as coefficient vectors, by exact
/// row reduction.
pub(crate) fn rank(rows: impl IntoIterator<Item = Polynomial>) -> usize {
    let mut pivots: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
    for mut row in rows {
        loop {
            let Some((lead, c)) = row.terms().next_back().map(|(m, c)| (m.clone(), c.clone())) else { break };
            match pivots.get(&lead) {
                Some(p) => {
                    let pc = p.coefficient(&lead);
                    row = &row - &p.scale(&(c / pc));
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Outcome of [`standard_monomial_basis_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisCheck {
    pub n: usize,
    pub d: usize,
    pub standard: usize,
    pub rank_of_images: usize,
    pub outside_initial_ideal: usize,
    pub passed: bool,
}

/// Images of the degree-`d` standard monomials under the parametrisation
/// are linearly independent, and their number equals the number of degree-`d`
/// monomials outside the reverse lexicographic initial ideal.
pub fn standard_monomial_basis_check(n: usize, d: usize) -> Result<BasisCheck> {
    if !(2..=6).contains(&n) || d > 3 {
        return Err(Error::OutOfBudget { n, range: "2 <= n <= 6, d <= 3" });
    }
    let std = standard_monomials(n, d);
    let images = std
        .iter()
        .map(|s| plucker_image(&Polynomial::monomial(s.to_monomial(), Rational::from_integer(1.into()))))
        .collect::<Result<Vec<_>>>()?;
    let r = rank(images);

    let vars: Vec<Variable> = all_pairs(n).into_iter().map(|p| p.variable()).collect();
    let ord = revlex_order_from_l(&canonical_extension(n, PairOrder::L))?;
    let leading = if n >= 4 {
        let ideal = Ideal::new(quadrics(n), vars.iter().copied().collect())?;
        buchberger(&ideal, &ord)?.leading_monomials()
    } else {
        Vec::new()
    };
    let outside = all_monomials(&vars, d)
        .into_iter()
        .filter(|m| !leading.iter().any(|lm| lm.divides(m)))
        .count();
    Ok(BasisCheck {
        n,
        d,
        standard: std.len(),
        rank_of_images: r,
        outside_initial_ideal: outside,
        passed: r == std.len() && outside == std.len(),
    })
}
