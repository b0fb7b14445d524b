//! Textual polynomial format: terms joined by ` + ` / ` - `, variables
//! `p[i,j]`, `x[i]`, `y[i]`, coefficients `num/den` with `/1` omitted.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Polynomial, Rational, Variable};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at byte {} in {:?}", self.pos, self.src))
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn index(&mut self) -> Result<usize> {
        let d = self.digits()?;
        d.parse().map_err(|_| self.error("index out of range"))
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn variable(&mut self) -> Result<Variable> {
        self.skip_ws();
        let kind = self.peek().ok_or_else(|| self.error("expected variable"))?;
        self.pos += 1;
        self.expect('[')?;
        let v = match kind {
            'p' => {
                let i = self.index()?;
                self.expect(',')?;
                let j = self.index()?;
                Variable::plucker(i, j)?
            }
            'x' | 'y' => {
                let i = self.index()?;
                if i == 0 {
                    return Err(Error::InvalidVariable(format!("{kind}[0]")));
                }
                if kind == 'x' {
                    Variable::X(i)
                } else {
                    Variable::Y(i)
                }
            }
            other => return Err(self.error(&format!("unknown variable kind '{other}'"))),
        };
        self.expect(']')?;
        Ok(v)
    }

    /// factor := int ['/' int] | var ['^' int]
    fn factor(&mut self, coeff: &mut Rational, mono: &mut Vec<(Variable, u32)>) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits()?.parse().expect("digits");
                let den: BigInt = if self.eat('/') {
                    self.digits()?.parse().expect("digits")
                } else {
                    BigInt::one()
                };
                if den.is_zero() {
                    return Err(self.error("zero denominator"));
                }
                *coeff *= Rational::new(num, den);
            }
            Some(_) => {
                let v = self.variable()?;
                let e = if self.eat('^') { self.index()? as u32 } else { 1 };
                mono.push((v, e));
            }
            None => return Err(self.error("unexpected end of input")),
        }
        Ok(())
    }

    fn term(&mut self, sign: i64) -> Result<(Monomial, Rational)> {
        let mut coeff = Rational::from_integer(sign.into());
        let mut mono = Vec::new();
        self.factor(&mut coeff, &mut mono)?;
        while self.eat('*') {
            self.factor(&mut coeff, &mut mono)?;
        }
        Ok((Monomial::from_powers(mono), coeff))
    }
}

pub(super) fn parse_variable(s: &str) -> Result<Variable> {
    let mut cur = Cursor::new(s);
    let v = cur.variable()?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(v)
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new(s);
        let mut f = Polynomial::zero();
        let mut sign = if cur.eat('-') {
            -1
        } else {
            cur.eat('+');
            1
        };
        loop {
            let (m, c) = cur.term(sign)?;
            f.add_term(m, c);
            if cur.at_end() {
                break;
            }
            sign = if cur.eat('+') {
                1
            } else if cur.eat('-') {
                -1
            } else {
                return Err(cur.error("expected '+' or '-'"));
            };
        }
        Ok(f)
    }
}
