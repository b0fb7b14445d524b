//! Monomial orders on the Plücker variables.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactalg::{plucker_variables, MonomialOrder, Variable};
use crate::lattice::{extension_of, is_linear_extension, PairIndex, PairOrder, Sublattice};

fn vars(pairs: &[PairIndex]) -> Vec<Variable> {
    pairs.iter().map(|p| p.variable()).collect()
}

/// Reverse lexicographic order whose variable order follows a linear
/// extension of `L_n`: `L_n`-larger pairs are larger variables.
/// `extension` is listed ascending.
pub fn revlex_order_from_l(extension: &[PairIndex]) -> Result<MonomialOrder> {
    if !is_linear_extension(extension, PairOrder::L) {
        return Err(Error::InvalidOrder("not a linear extension of L_n".into()));
    }
    let mut v = vars(extension);
    v.reverse();
    MonomialOrder::revlex(v)
}

/// Lexicographic order in which `Π_n`-smaller pairs are larger variables.
/// `extension` is an ascending linear extension of `Π_n`.
pub fn lex_order_from_pi(extension: &[PairIndex]) -> Result<MonomialOrder> {
    if !is_linear_extension(extension, PairOrder::Pi) {
        return Err(Error::InvalidOrder("not a linear extension of Π_n".into()));
    }
    MonomialOrder::lex(vars(extension))
}

/// `p12 > p13 > ... > p1n > p23 > ... > p(n-1)n`.
pub fn appendix_variables(n: usize) -> Vec<Variable> {
    plucker_variables(n)
}

/// Lexicographic order on [`appendix_variables`].
pub fn appendix_order(n: usize) -> MonomialOrder {
    MonomialOrder::lex(appendix_variables(n)).expect("distinct variables")
}

/// Block order eliminating the complement of `l`: every variable outside `l`
/// beats every variable in `l`, and inside each block `Π_n`-smaller pairs
/// are larger. Needs the complement to be a `Π_n` poset ideal.
pub fn elimination_order(l: &Sublattice, seed: Option<u64>) -> Result<MonomialOrder> {
    if !l.complement_is_poset_ideal() {
        return Err(Error::NotCompatible("complement is not a poset ideal of Π_n".into()));
    }
    let outside = l.complement();
    let inside: Vec<PairIndex> = l.members().iter().copied().collect();
    let (outside, inside) = match seed {
        None => {
            let key = |p: &PairIndex| (p.i, std::cmp::Reverse(p.j));
            let mut o = outside;
            let mut i = inside;
            o.sort_by_key(key);
            i.sort_by_key(key);
            (o, i)
        }
        Some(s) => {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            (extension_of(outside, PairOrder::Pi, &mut rng), extension_of(inside, PairOrder::Pi, &mut rng))
        }
    };
    let mut order = outside.clone();
    order.extend(inside);
    debug_assert!(is_linear_extension(&order, PairOrder::Pi));
    let eliminated: BTreeSet<Variable> = outside.iter().map(|p| p.variable()).collect();
    MonomialOrder::block_elim_lex(vars(&order), eliminated)
}

/// The canonical linear extension followed by `count` pseudo-random ones
/// drawn from `seed`.
pub fn seeded_extensions(n: usize, order: PairOrder, count: usize, seed: u64) -> Vec<Vec<PairIndex>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![crate::lattice::canonical_extension(n, order)];
    for _ in 0..count {
        out.push(crate::lattice::random_extension(n, order, &mut rng));
    }
    out
}
