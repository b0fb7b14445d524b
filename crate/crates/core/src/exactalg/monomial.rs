use std::collections::BTreeMap;
use std::fmt;

use super::Variable;

/// A monomial stored as a sparse exponent map. Zero exponents are never
/// stored, so structural equality is monomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(BTreeMap<Variable, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(v: Variable) -> Self {
        Self::from_powers([(v, 1)])
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated variables
    /// accumulate and zero exponents are dropped.
    pub fn from_powers(powers: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in powers {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial(map)
    }

    /// Product of the given variables, each counted once per occurrence.
    pub fn product(vars: impl IntoIterator<Item = Variable>) -> Self {
        Self::from_powers(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn exponent(&self, v: &Variable) -> u32 {
        self.0.get(v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Variable, u32)> + '_ {
        self.0.iter().map(|(v, e)| (*v, *e))
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.0.keys().copied()
    }

    /// True when every exponent is at most one.
    pub fn is_squarefree(&self) -> bool {
        self.0.values().all(|&e| e == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut map = self.0.clone();
        for (v, e) in &other.0 {
            *map.entry(*v).or_insert(0) += e;
        }
        Monomial(map)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(v, e)| other.exponent(v) >= *e)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut map = other.0.clone();
        for (v, e) in &self.0 {
            let slot = map.get_mut(v).expect("divisibility checked");
            *slot -= e;
            if *slot == 0 {
                map.remove(v);
            }
        }
        Some(Monomial(map))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut map = self.0.clone();
        for (v, e) in &other.0 {
            let slot = map.entry(*v).or_insert(0);
            *slot = (*slot).max(*e);
        }
        Monomial(map)
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.0.keys().all(|v| !other.0.contains_key(v))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::p;

    #[test]
    fn division_and_lcm() {
        let a = Monomial::product([p(1, 2), p(3, 4)]);
        let b = Monomial::product([p(1, 2), p(1, 2), p(2, 3)]);
        assert_eq!(a.lcm(&b).degree(), 4);
        assert!(!a.divides(&b));
        let q = Monomial::var(p(1, 2)).quotient_of(&b).unwrap();
        assert_eq!(q, Monomial::product([p(1, 2), p(2, 3)]));
        assert!(Monomial::one().divides(&a));
        assert!(!a.gcd_is_one(&b));
        assert!(Monomial::var(p(3, 4)).gcd_is_one(&b));
        assert_eq!(b.to_string(), "p[1,2]^2*p[2,3]");
    }
}
