use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Monomial, Rational, Variable};
use crate::error::{Error, Result};

/// A polynomial with exact rational coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn var(v: Variable) -> Self {
        Self::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut f = Self::zero();
        f.add_term(m, c);
        f
    }

    /// Sums the given terms; repeated monomials accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut f = Self::zero();
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    /// Integer-coefficient shorthand used heavily by the Plücker constructors.
    pub fn from_int_terms(terms: impl IntoIterator<Item = (i64, Monomial)>) -> Self {
        Self::from_terms(terms.into_iter().map(|(c, m)| (m, Rational::from_integer(c.into()))))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending structural monomial order (not a monomial order).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms.keys().flat_map(|m| m.variables()).collect()
    }

    pub fn uses_only(&self, allowed: &BTreeSet<Variable>) -> bool {
        self.terms.keys().all(|m| m.variables().all(|v| allowed.contains(&v)))
    }

    /// Largest total degree of a term; zero for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, t: &Monomial) -> Self {
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.mul(t), a.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Ring homomorphism sending each variable to the assigned polynomial.
    pub fn substitute(&self, assignment: &BTreeMap<Variable, Polynomial>) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(c.clone());
            for (v, e) in m.iter() {
                let image = assignment.get(&v).ok_or(Error::MissingAssignment(v))?;
                term = &term * &image.pow(e);
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Scales by a positive or negative rational so that the term with the
    /// structurally largest monomial gets coefficient `+1`. Use
    /// [`MonomialOrder::leading_term`](super::MonomialOrder::leading_term) for
    /// order-aware normalisation.
    pub fn normalize_sign(&self) -> Self {
        match self.terms.iter().next_back() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

impl fmt::Display for Polynomial {
    /// Terms are printed in descending structural order; coefficients `±1`
    /// are omitted on non-constant terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::p;

    fn q1234() -> Polynomial {
        Polynomial::from_int_terms([
            (1, Monomial::product([p(1, 4), p(2, 3)])),
            (-1, Monomial::product([p(1, 3), p(2, 4)])),
            (1, Monomial::product([p(1, 2), p(3, 4)])),
        ])
    }

    #[test]
    fn display_matches_canonical_text() {
        assert_eq!(q1234().to_string(), "p[1,4]*p[2,3] - p[1,3]*p[2,4] + p[1,2]*p[3,4]");
        let f = Polynomial::from_terms([
            (Monomial::var(p(1, 2)), Rational::new((-3).into(), 2.into())),
            (Monomial::one(), Rational::from_integer(5.into())),
        ]);
        assert_eq!(f.to_string(), "-3/2*p[1,2] + 5");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_removes_terms() {
        let f = q1234();
        assert!((&f - &f).is_zero());
        assert_eq!((&(&f + &f) - &f), f);
    }

    #[test]
    fn substitution_requires_every_variable() {
        let mut map = BTreeMap::new();
        map.insert(p(1, 2), Polynomial::one());
        assert_eq!(
            q1234().substitute(&map).unwrap_err(),
            Error::MissingAssignment(p(3, 4))
        );
    }
}
