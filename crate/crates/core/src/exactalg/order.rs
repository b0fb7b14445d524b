use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{Monomial, Polynomial, Rational, Variable};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderScheme {
    /// Pure lexicographic order on the variable list.
    Lex,
    /// Degree-graded reverse lexicographic order: higher degree first, then
    /// the monomial with the smaller exponent on the smallest differing
    /// variable is larger.
    RevLex,
    /// Lexicographic order whose variable list starts with the eliminated
    /// block, so every eliminated variable beats every kept one.
    BlockElimLex,
}

/// A total monomial order determined by a scheme and a variable order listed
/// largest first.
#[derive(Clone, Debug)]
pub struct MonomialOrder {
    scheme: OrderScheme,
    variables: Vec<Variable>,
    rank: HashMap<Variable, usize>,
    eliminated: BTreeSet<Variable>,
}

impl PartialEq for MonomialOrder {
    fn eq(&self, other: &Self) -> bool {
        self.scheme == other.scheme
            && self.variables == other.variables
            && self.eliminated == other.eliminated
    }
}

impl Eq for MonomialOrder {}

impl MonomialOrder {
    pub fn lex(variables: Vec<Variable>) -> Result<Self> {
        Self::build(OrderScheme::Lex, variables, BTreeSet::new())
    }

    pub fn revlex(variables: Vec<Variable>) -> Result<Self> {
        Self::build(OrderScheme::RevLex, variables, BTreeSet::new())
    }

    /// Block elimination order. `variables` (largest first) must list every
    /// eliminated variable before every kept one.
    pub fn block_elim_lex(variables: Vec<Variable>, eliminated: BTreeSet<Variable>) -> Result<Self> {
        let k = eliminated.len();
        if k > variables.len() || variables[..k].iter().any(|v| !eliminated.contains(v)) {
            return Err(Error::InvalidOrder(
                "eliminated variables must form the leading block of the variable order".into(),
            ));
        }
        Self::build(OrderScheme::BlockElimLex, variables, eliminated)
    }

    fn build(
        scheme: OrderScheme,
        variables: Vec<Variable>,
        eliminated: BTreeSet<Variable>,
    ) -> Result<Self> {
        let mut rank = HashMap::with_capacity(variables.len());
        for (idx, v) in variables.iter().enumerate() {
            if rank.insert(*v, idx).is_some() {
                return Err(Error::InvalidOrder(format!("variable {v} listed twice")));
            }
        }
        Ok(MonomialOrder { scheme, variables, rank, eliminated })
    }

    pub fn scheme(&self) -> OrderScheme {
        self.scheme
    }

    /// Variables, largest first.
    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn eliminated(&self) -> &BTreeSet<Variable> {
        &self.eliminated
    }

    /// Variables not in the eliminated block.
    pub fn kept(&self) -> BTreeSet<Variable> {
        self.variables.iter().filter(|v| !self.eliminated.contains(v)).copied().collect()
    }

    /// Position of `v` in the variable list (0 is the largest variable).
    pub fn position(&self, v: &Variable) -> Result<usize> {
        self.rank.get(v).copied().ok_or(Error::VariableNotInOrder(*v))
    }

    pub fn contains(&self, v: &Variable) -> bool {
        self.rank.contains_key(v)
    }

    /// Dense exponent vector indexed by variable position.
    pub fn exponent_vector(&self, m: &Monomial) -> Result<Vec<u32>> {
        let mut exps = vec![0u32; self.variables.len()];
        for (v, e) in m.iter() {
            exps[self.position(&v)?] = e;
        }
        Ok(exps)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        let ea = self.exponent_vector(a)?;
        let eb = self.exponent_vector(b)?;
        Ok(compare_exponents(self.scheme, &ea, &eb))
    }

    /// The largest monomial of `f` together with its coefficient.
    pub fn leading_term(&self, f: &Polynomial) -> Result<(Monomial, Rational)> {
        let mut best: Option<(Vec<u32>, &Monomial, &Rational)> = None;
        for (m, c) in f.terms() {
            let e = self.exponent_vector(m)?;
            let better = match &best {
                None => true,
                Some((be, _, _)) => compare_exponents(self.scheme, &e, be) == Ordering::Greater,
            };
            if better {
                best = Some((e, m, c));
            }
        }
        best.map(|(_, m, c)| (m.clone(), c.clone())).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, f: &Polynomial) -> Result<Monomial> {
        self.leading_term(f).map(|(m, _)| m)
    }

    /// The same order with the variable list restricted to `keep`.
    pub fn restrict(&self, keep: &BTreeSet<Variable>) -> Result<Self> {
        let vars: Vec<Variable> = self.variables.iter().filter(|v| keep.contains(v)).copied().collect();
        match self.scheme {
            OrderScheme::Lex => Self::lex(vars),
            OrderScheme::RevLex => Self::revlex(vars),
            OrderScheme::BlockElimLex => {
                let elim = self.eliminated.intersection(keep).copied().collect();
                Self::block_elim_lex(vars, elim)
            }
        }
    }
}

/// Compares dense exponent vectors (position 0 = largest variable).
pub(crate) fn compare_exponents(scheme: OrderScheme, a: &[u32], b: &[u32]) -> Ordering {
    match scheme {
        OrderScheme::Lex | OrderScheme::BlockElimLex => a.cmp(b),
        OrderScheme::RevLex => {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            })
        }
    }
}
