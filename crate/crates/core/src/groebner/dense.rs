//! Dense working representation for the Gröbner engine: exponent vectors
//! indexed by variable position in a fixed [`MonomialOrder`], terms kept in
//! ascending order so the leading term is the last element.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::exactalg::{compare_exponents, Monomial, MonomialOrder, OrderScheme, Polynomial, Rational};

pub(crate) type Exps = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DPoly {
    pub terms: Vec<(Exps, Rational)>,
}

pub(crate) struct Ring<'a> {
    pub order: &'a MonomialOrder,
    scheme: OrderScheme,
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn diff(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl DPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Exps {
        &self.terms.last().expect("nonzero polynomial").0
    }

    pub fn lc(&self) -> &Rational {
        &self.terms.last().expect("nonzero polynomial").1
    }

    pub fn monic(mut self) -> DPoly {
        if let Some((_, lc)) = self.terms.last() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in &mut self.terms {
                    *c *= &inv;
                }
            }
        }
        self
    }
}

impl<'a> Ring<'a> {
    pub fn new(order: &'a MonomialOrder) -> Self {
        Ring { order, scheme: order.scheme() }
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        compare_exponents(self.scheme, a, b)
    }

    pub fn dense_of(&self, f: &Polynomial) -> Result<DPoly> {
        let mut terms = Vec::with_capacity(f.len());
        for (m, c) in f.terms() {
            terms.push((self.order.exponent_vector(m)?, c.clone()));
        }
        terms.sort_by(|a, b| self.cmp(&a.0, &b.0));
        Ok(DPoly { terms })
    }

    pub fn to_poly(&self, f: &DPoly) -> Polynomial {
        let vars = self.order.variables();
        Polynomial::from_terms(f.terms.iter().map(|(e, c)| {
            let m = Monomial::from_powers(e.iter().enumerate().map(|(k, &x)| (vars[k], x)));
            (m, c.clone())
        }))
    }

    /// `f - coef * x^shift * g`, merging two ascending term lists.
    fn sub_scaled(&self, f: &DPoly, coef: &Rational, shift: &[u32], g: &DPoly) -> DPoly {
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut fi = f.terms.iter().peekable();
        let mut gi = g
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect::<Exps>(), c * coef))
            .peekable();
        loop {
            let ord = match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(a), Some(b)) => self.cmp(&a.0, &b.0),
            };
            match ord {
                Ordering::Less => out.push(fi.next().expect("peeked").clone()),
                Ordering::Greater => {
                    let (e, c) = gi.next().expect("peeked");
                    out.push((e, -c));
                }
                Ordering::Equal => {
                    let (e, a) = fi.next().expect("peeked");
                    let (_, b) = gi.next().expect("peeked");
                    let c = a - b;
                    if !c.is_zero() {
                        out.push((e.clone(), c));
                    }
                }
            }
        }
        DPoly { terms: out }
    }

    /// Full reduction of `f` modulo `divisors`; the remainder has no term
    /// divisible by any divisor's leading monomial.
    pub fn normal_form(&self, f: &DPoly, divisors: &[&DPoly]) -> DPoly {
        let mut p = f.clone();
        let mut rem: Vec<(Exps, Rational)> = Vec::new();
        while let Some((m, c)) = p.terms.last() {
            match divisors.iter().find(|g| divides(g.lm(), m)) {
                Some(g) => {
                    let shift = diff(m, g.lm());
                    let coef = c / g.lc();
                    p = self.sub_scaled(&p, &coef, &shift, g);
                }
                None => rem.push(p.terms.pop().expect("nonempty")),
            }
        }
        rem.reverse();
        DPoly { terms: rem }
    }

    pub fn s_polynomial(&self, f: &DPoly, g: &DPoly) -> DPoly {
        let l = lcm(f.lm(), g.lm());
        let sf = diff(&l, f.lm());
        let sg = diff(&l, g.lm());
        let zero = DPoly { terms: Vec::new() };
        let a = self.sub_scaled(&zero, &-f.lc().recip(), &sf, f);
        self.sub_scaled(&a, &g.lc().recip(), &sg, g)
    }

    pub fn lcm_degree(&self, f: &DPoly, g: &DPoly) -> u32 {
        lcm(f.lm(), g.lm()).iter().sum()
    }
}
