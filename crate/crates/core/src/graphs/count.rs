//! Counting perfect compatible sublattices with Gorenstein rings, three ways.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::enumerate_pi_filters;

/// Largest `n` for which the brute-force count is attempted.
pub const BRUTE_FORCE_MAX_N: usize = 10;

/// Exact element `a + b·√5` of the quadratic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSqrt5 {
    pub a: BigRational,
    pub b: BigRational,
}

impl QSqrt5 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QSqrt5 { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QSqrt5::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn one() -> Self {
        QSqrt5::from_ints(1, 0)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        QSqrt5::new(&self.a * c, &self.b * c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(QSqrt5::one(), |acc, _| &acc * self)
    }

    /// The value as an integer, when the irrational part vanishes and the
    /// rational part is integral.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.b.is_zero() && self.a.is_integer()).then(|| self.a.to_integer())
    }
}

impl Add for &QSqrt5 {
    type Output = QSqrt5;
    fn add(self, o: &QSqrt5) -> QSqrt5 {
        QSqrt5::new(&self.a + &o.a, &self.b + &o.b)
    }
}

impl Mul for &QSqrt5 {
    type Output = QSqrt5;
    fn mul(self, o: &QSqrt5) -> QSqrt5 {
        let five = BigRational::from_integer(5.into());
        QSqrt5::new(&self.a * &o.a + five * &self.b * &o.b, &self.a * &o.b + &self.b * &o.a)
    }
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt(5)", self.a, self.b)
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::OutOfBudget { n, range: "n >= 4" });
    }
    Ok(())
}

/// `(p_k, q_k)` from `p_{k+1} = 2p_k + q_k`, `q_{k+1} = p_k + q_k`,
/// `p_0 = q_0 = 1`.
pub fn gorenstein_recurrence(k: usize) -> (BigInt, BigInt) {
    let (mut p, mut q) = (BigInt::one(), BigInt::one());
    for _ in 0..k {
        let np = BigInt::from(2) * &p + &q;
        q = &p + &q;
        p = np;
    }
    (p, q)
}

/// `p_{n-4} + q_{n-4}`.
pub fn count_gorenstein_recurrence(n: usize) -> Result<BigInt> {
    check_n(n)?;
    let (p, q) = gorenstein_recurrence(n - 4);
    Ok(p + q)
}

/// `((5+2√5)·φ^{n-4} + (5-2√5)·ψ^{n-4}) / 5` with `φ, ψ = (3 ± √5)/2`,
/// evaluated exactly.
pub fn count_gorenstein_closed_form(n: usize) -> Result<QSqrt5> {
    check_n(n)?;
    let half = BigRational::new(1.into(), 2.into());
    let fifth = BigRational::new(1.into(), 5.into());
    let phi = QSqrt5::from_ints(3, 1).scale(&half);
    let psi = QSqrt5::from_ints(3, -1).scale(&half);
    let k = (n - 4) as u32;
    let left = &QSqrt5::from_ints(5, 2) * &phi.pow(k);
    let right = &QSqrt5::from_ints(5, -2) * &psi.pow(k);
    Ok((&left + &right).scale(&fifth))
}

/// Perfect compatible sublattices whose join-irreducibles form a pure
/// poset, found by enumerating all `Π_n`-filters. No clique overlaps are
/// consulted.
pub fn count_gorenstein_brute_force(n: usize) -> Result<u64> {
    check_n(n)?;
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::OutOfBudget { n, range: "4..=10" });
    }
    let mut count = 0;
    for s in enumerate_pi_filters(n)? {
        if s.is_perfect() && s.join_irreducibles()?.is_pure() {
            count += 1;
        }
    }
    Ok(count)
}

/// Results of the three counting methods.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinCounts {
    pub n: usize,
    pub recurrence: String,
    pub closed_form: String,
    pub brute_force: Option<u64>,
    pub agree: bool,
}

pub fn gorenstein_counts(n: usize) -> Result<GorensteinCounts> {
    let rec = count_gorenstein_recurrence(n)?;
    let closed = count_gorenstein_closed_form(n)?;
    let brute = if n <= BRUTE_FORCE_MAX_N { Some(count_gorenstein_brute_force(n)?) } else { None };
    let agree = closed.to_integer().as_ref() == Some(&rec) && brute.is_none_or(|b| BigInt::from(b) == rec);
    Ok(GorensteinCounts {
        n,
        recurrence: rec.to_string(),
        closed_form: closed.to_string(),
        brute_force: brute,
        agree,
    })
}

/// The count from the recurrence, after checking that the closed form agrees.
pub fn count_gorenstein_perfect(n: usize) -> Result<BigInt> {
    let rec = count_gorenstein_recurrence(n)?;
    let closed = count_gorenstein_closed_form(n)?;
    if closed.to_integer().as_ref() != Some(&rec) {
        return Err(Error::InvalidSystem(format!("closed form {closed} disagrees with recurrence {rec}")));
    }
    Ok(rec)
}
