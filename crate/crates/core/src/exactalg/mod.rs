//! Exact rational arithmetic, sparse monomials and polynomials, and the
//! monomial orders every other module consumes.
//!
//! Coefficients are arbitrary-precision rationals; nothing in this crate ever
//! rounds.

mod monomial;
mod order;
mod polynomial;
mod text;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use monomial::Monomial;
pub use num_rational::BigRational as Rational;
pub use order::{MonomialOrder, OrderScheme};
pub use polynomial::Polynomial;

pub(crate) use order::compare_exponents;

use crate::error::{Error, Result};

/// A polynomial-ring variable: a Plücker coordinate `p[i,j]` with `i < j`, or
/// one of the auxiliary coordinates `x[i]`, `y[i]` of the parametrisation
/// `p[i,j] = x[i]*y[j] - x[j]*y[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variable {
    Plucker(usize, usize),
    X(usize),
    Y(usize),
}

impl Variable {
    /// Checked constructor for `p[i,j]`.
    pub fn plucker(i: usize, j: usize) -> Result<Self> {
        if i == 0 || i >= j {
            return Err(Error::InvalidVariable(format!("p[{i},{j}] needs 1 <= i < j")));
        }
        Ok(Variable::Plucker(i, j))
    }

    /// Checks the index constraints against an ambient size `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            Variable::Plucker(i, j) => 1 <= i && i < j && j <= n,
            Variable::X(i) | Variable::Y(i) => 1 <= i && i <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidVariable(format!("{self} is not a variable for n = {n}")))
        }
    }

    pub fn is_plucker(&self) -> bool {
        matches!(self, Variable::Plucker(..))
    }

    /// The index pair of a Plücker variable.
    pub fn pair(&self) -> Option<(usize, usize)> {
        match *self {
            Variable::Plucker(i, j) => Some((i, j)),
            _ => None,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Plucker(i, j) => write!(f, "p[{i},{j}]"),
            Variable::X(i) => write!(f, "x[{i}]"),
            Variable::Y(i) => write!(f, "y[{i}]"),
        }
    }
}

/// Shorthand for `Variable::Plucker(i, j)`; panics unless `1 <= i < j`.
pub fn p(i: usize, j: usize) -> Variable {
    Variable::plucker(i, j).expect("p(i, j) needs 1 <= i < j")
}

/// All Plücker variables of `L_n` in lexicographic index order.
pub fn plucker_variables(n: usize) -> Vec<Variable> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Variable::Plucker(i, j));
        }
    }
    out
}

/// Parses a single variable such as `p[1,2]`, `x[3]` or `y[3]`.
pub fn parse_variable(s: &str) -> Result<Variable> {
    text::parse_variable(s.trim())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_validation() {
        assert!(Variable::plucker(2, 2).is_err());
        assert!(Variable::plucker(0, 2).is_err());
        assert!(p(1, 5).validate(4).is_err());
        assert!(p(1, 4).validate(4).is_ok());
        assert!(Variable::X(0).validate(3).is_err());
        assert_eq!(plucker_variables(5).len(), 10);
    }

    #[test]
    fn variable_text() {
        for v in [p(1, 2), p(3, 11), Variable::X(4), Variable::Y(1)] {
            assert_eq!(parse_variable(&v.to_string()).unwrap(), v);
        }
        assert!(parse_variable("p[2,1]").is_err());
        assert!(parse_variable("q[1]").is_err());
    }
}
