//! The polynomials of the Plücker ideal of lines: quadratic relations,
//! the extra cubics of the lexicographic basis, the parametrisation used as
//! a membership oracle, monomial orders built from `L_n` and `Π_n`,
//! straightening, and Stanley–Reisner analysis.

mod elimination;
mod orders;
mod stanley_reisner;
mod straighten;

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, Ordering};

use crate::error::{Error, Result};
use crate::exactalg::{p, Monomial, Polynomial, Rational, Variable};
use crate::groebner::Ideal;

pub use elimination::{
    elim_order_graph_corollary, elimination_vs_quadrics, is_elimination_compatible, quadric_ideal_of,
    quadrics_supported_on,
};
pub use orders::{
    appendix_order, appendix_variables, elimination_order, lex_order_from_pi, revlex_order_from_l,
    seeded_extensions,
};
pub use stanley_reisner::{
    appendix_leading_monomials, m_ideal, stanley_reisner_analysis, SimplicialComplex, SquarefreeMonomialIdeal,
    StanleyReisnerSummary,
};
pub use straighten::{
    asl_dominance_holds, is_standard, standard_monomial_basis_check, standard_monomials, straighten,
    straighten_by_rewriting, BasisCheck, RewriteStep, StandardMonomial,
};

static FLIP_QUADRIC_SIGN: AtomicBool = AtomicBool::new(false);

/// Test hook: when set, [`quadric`] returns `p_il p_jk - p_ik p_jl - p_ij p_kl`
/// instead of the Plücker relation. Used to check that the verifications
/// notice a wrong generator.
pub fn set_quadric_sign_mutation(on: bool) {
    FLIP_QUADRIC_SIGN.store(on, Ordering::SeqCst);
}

pub fn quadric_sign_mutation() -> bool {
    FLIP_QUADRIC_SIGN.load(Ordering::SeqCst)
}

fn increasing(idx: &[usize]) -> Result<()> {
    if idx[0] == 0 || idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidIndices(format!("{idx:?} must be strictly increasing and positive")));
    }
    Ok(())
}

fn mono(vars: &[Variable]) -> Monomial {
    Monomial::product(vars.iter().copied())
}

/// `Q_ijkl = p_il p_jk - p_ik p_jl + p_ij p_kl` for `i < j < k < l`.
pub fn quadric(i: usize, j: usize, k: usize, l: usize) -> Result<Polynomial> {
    increasing(&[i, j, k, l])?;
    let last = if quadric_sign_mutation() { -1 } else { 1 };
    Ok(Polynomial::from_int_terms([
        (1, mono(&[p(i, l), p(j, k)])),
        (-1, mono(&[p(i, k), p(j, l)])),
        (last, mono(&[p(i, j), p(k, l)])),
    ]))
}

/// `C5_ijklm = p_ik p_jl p_km - p_ik p_jm p_kl - p_il p_jk p_km + p_im p_jk p_kl`
/// for `i < j < k < l < m`.
pub fn cubic5(i: usize, j: usize, k: usize, l: usize, m: usize) -> Result<Polynomial> {
    increasing(&[i, j, k, l, m])?;
    cubic5_signed(i, j, k, l, m)
}

/// `C6_ijklms = p_il p_jm p_ks - p_il p_js p_km - p_im p_jk p_ls + p_is p_jk p_lm`
/// for `i < j < k < l < m < s`.
pub fn cubic6(i: usize, j: usize, k: usize, l: usize, m: usize, s: usize) -> Result<Polynomial> {
    increasing(&[i, j, k, l, m, s])?;
    cubic6_signed(i, j, k, l, m, s)
}

/// `p_ab` for `a < b`, `-p_ba` for `a > b`.
pub fn signed_variable(a: usize, b: usize) -> Result<Polynomial> {
    match a.cmp(&b) {
        std::cmp::Ordering::Less => Ok(Polynomial::var(Variable::plucker(a, b)?)),
        std::cmp::Ordering::Greater => Ok(-Polynomial::var(Variable::plucker(b, a)?)),
        std::cmp::Ordering::Equal => Err(Error::InvalidIndices(format!("p[{a},{a}]"))),
    }
}

fn distinct(idx: &[usize]) -> Result<()> {
    for (k, a) in idx.iter().enumerate() {
        if *a == 0 || idx[k + 1..].contains(a) {
            return Err(Error::InvalidIndices(format!("{idx:?} must be distinct and positive")));
        }
    }
    Ok(())
}

fn signed_product(pairs: &[(usize, usize)]) -> Result<Polynomial> {
    let mut out = Polynomial::one();
    for &(a, b) in pairs {
        out = &out * &signed_variable(a, b)?;
    }
    Ok(out)
}

/// The `C5` formula on arbitrary distinct indices, reading `p_ab = -p_ba`.
pub fn cubic5_signed(i: usize, j: usize, k: usize, l: usize, m: usize) -> Result<Polynomial> {
    distinct(&[i, j, k, l, m])?;
    Ok(signed_product(&[(i, k), (j, l), (k, m)])? - signed_product(&[(i, k), (j, m), (k, l)])?
        - signed_product(&[(i, l), (j, k), (k, m)])?
        + signed_product(&[(i, m), (j, k), (k, l)])?)
}

/// The `C6` formula on arbitrary distinct indices, reading `p_ab = -p_ba`.
pub fn cubic6_signed(i: usize, j: usize, k: usize, l: usize, m: usize, s: usize) -> Result<Polynomial> {
    distinct(&[i, j, k, l, m, s])?;
    Ok(signed_product(&[(i, l), (j, m), (k, s)])? - signed_product(&[(i, l), (j, s), (k, m)])?
        - signed_product(&[(i, m), (j, k), (l, s)])?
        + signed_product(&[(i, s), (j, k), (l, m)])?)
}

/// Increasing `k`-tuples from `1..=n`.
pub(crate) fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::combinat::subsets(n, k)
        .into_iter()
        .map(|t| t.into_iter().map(|x| x + 1).collect())
        .collect()
}

/// All `Q_ijkl` with `l <= n`, in lexicographic order of `(i,j,k,l)`.
pub fn quadrics(n: usize) -> Vec<Polynomial> {
    tuples(n, 4).into_iter().map(|t| quadric(t[0], t[1], t[2], t[3]).expect("sorted")).collect()
}

pub fn cubics5(n: usize) -> Vec<Polynomial> {
    tuples(n, 5).into_iter().map(|t| cubic5(t[0], t[1], t[2], t[3], t[4]).expect("sorted")).collect()
}

pub fn cubics6(n: usize) -> Vec<Polynomial> {
    tuples(n, 6).into_iter().map(|t| cubic6(t[0], t[1], t[2], t[3], t[4], t[5]).expect("sorted")).collect()
}

/// Quadrics, five-index cubics and six-index cubics: the claimed reduced
/// basis for the order `p12 > p13 > ... > p(n-1)n`.
pub fn appendix_basis(n: usize) -> Vec<Polynomial> {
    let mut out = quadrics(n);
    out.extend(cubics5(n));
    out.extend(cubics6(n));
    out
}

/// The Plücker ideal `I_{L_n}` generated by the quadrics, in the ring of all
/// `p_ij`, `1 <= i < j <= n`.
pub fn plucker_ideal(n: usize) -> Ideal {
    Ideal::new(quadrics(n), crate::exactalg::plucker_variables(n).into_iter().collect())
        .expect("quadrics are nonzero and use only Plücker variables")
}

/// The assignment `p_ij -> x_i y_j - x_j y_i` for every `p_ij` occurring in `f`.
pub fn plucker_assignment<'a>(vars: impl IntoIterator<Item = &'a Variable>) -> Result<BTreeMap<Variable, Polynomial>> {
    let mut out = BTreeMap::new();
    for v in vars {
        let (i, j) = v
            .pair()
            .ok_or_else(|| Error::InvalidVariable(format!("{v} is not a Plücker variable")))?;
        let xy = |a: usize, b: usize| Polynomial::monomial(mono(&[Variable::X(a), Variable::Y(b)]), Rational::from_integer(1.into()));
        out.insert(*v, xy(i, j) - xy(j, i));
    }
    Ok(out)
}

/// Image of `f` in `K[x, y]` under `p_ij -> x_i y_j - x_j y_i`.
pub fn plucker_image(f: &Polynomial) -> Result<Polynomial> {
    let vars = f.variables();
    f.substitute(&plucker_assignment(&vars)?)
}

/// Membership in the Plücker ideal: the kernel of the parametrisation.
pub fn plucker_map_oracle(f: &Polynomial) -> Result<bool> {
    Ok(plucker_image(f)?.is_zero())
}

#[cfg(test)]
mod tests;
