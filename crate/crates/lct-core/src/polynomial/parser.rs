//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor (['*'] factor)*          (juxtaposition multiplies)
//! factor   := base ['^' uint]
//! base     := rational | variable | '(' expr ')'
//! rational := uint ['/' uint]
//! ```
//!
//! Whitespace is ignored everywhere. Errors report the byte offset of the
//! offending character. The parser enforces resource limits (exponent size,
//! literal length, intermediate term count) so that hostile input cannot
//! blow up memory; the limits are far above anything a sensible polynomial
//! needs.

use super::{validate_vars, Polynomial};
use crate::{Error, Result};
use num::{BigInt, BigRational, One, Zero};

/// Largest exponent the parser will accept or produce.
const EXP_CAP: u32 = 10_000;
/// Longest digit run in a single integer literal.
const DIGITS_CAP: usize = 1_000;
/// Largest number of terms any intermediate value may have.
const TERMS_CAP: usize = 4_096;

pub(super) fn parse(text: &str, vars: &str) -> Result<Polynomial> {
    let var_list = validate_vars(vars)?;
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        vars: var_list,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.err("empty input"));
    }
    let poly = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(poly),
        Some(c) => Err(p.err(&format!("unexpected character {:?}", c as char))),
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    vars: Vec<char>,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    /// True when the next character can begin a `base`.
    fn at_base(&self) -> bool {
        match self.peek() {
            Some(b'(') => true,
            Some(c) if c.is_ascii_digit() => true,
            Some(c) => self.vars.contains(&(c as char)),
            None => false,
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            negate = true;
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                let f = self.factor()?;
                acc = self.checked_mul(&acc, &f)?;
            } else if self.at_base() {
                let f = self.factor()?;
                acc = self.checked_mul(&acc, &f)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let exp_offset = self.pos;
        let n = self.uint()?;
        let n: u32 = n.try_into().map_err(|_| Error::Parse {
            offset: exp_offset,
            message: format!("exponent exceeds {EXP_CAP}"),
        })?;
        if n > EXP_CAP {
            return Err(Error::Parse {
                offset: exp_offset,
                message: format!("exponent exceeds {EXP_CAP}"),
            });
        }
        // Exponentiate by repeated checked multiplication so the caps apply.
        let mut acc = Polynomial::zero_with(base.vars().to_vec());
        acc.add_term(vec![0; base.arity()], BigRational::one());
        for _ in 0..n {
            acc = self.checked_mul(&acc, &base)?;
        }
        Ok(acc)
    }

    fn base(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() == Some(b')') {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    Err(self.err("expected ')'"))
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let numer = self.uint()?;
                self.skip_ws();
                let value = if self.peek() == Some(b'/') {
                    // Only treat '/' as a fraction bar when a digit follows;
                    // otherwise leave it for the caller to reject.
                    let save = self.pos;
                    self.pos += 1;
                    self.skip_ws();
                    if matches!(self.peek(), Some(d) if d.is_ascii_digit()) {
                        let denom_offset = self.pos;
                        let denom = self.uint()?;
                        if denom.is_zero() {
                            return Err(Error::Parse {
                                offset: denom_offset,
                                message: "zero denominator".to_string(),
                            });
                        }
                        BigRational::new(numer, denom)
                    } else {
                        self.pos = save;
                        BigRational::from_integer(numer)
                    }
                } else {
                    BigRational::from_integer(numer)
                };
                let mut p = Polynomial::zero_with(self.vars.clone());
                p.add_term(vec![0; self.vars.len()], value);
                Ok(p)
            }
            Some(c) if self.vars.contains(&(c as char)) => {
                self.pos += 1;
                let mut p = Polynomial::zero_with(self.vars.clone());
                let idx = self.vars.iter().position(|&v| v == c as char).unwrap();
                let mut exps = vec![0; self.vars.len()];
                exps[idx] = 1;
                p.add_term(exps, BigRational::one());
                Ok(p)
            }
            Some(c) if (c as char).is_ascii_alphabetic() => {
                Err(self.err(&format!("unknown variable {:?}", c as char)))
            }
            Some(c) => Err(self.err(&format!("unexpected character {:?}", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        if self.pos - start > DIGITS_CAP {
            return Err(Error::Parse {
                offset: start,
                message: format!("literal longer than {DIGITS_CAP} digits"),
            });
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(digits.parse::<BigInt>().expect("digit run parses"))
    }

    /// Product with the resource caps enforced.
    fn checked_mul(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        if a.term_count().saturating_mul(b.term_count()) > TERMS_CAP {
            return Err(self.err("expression too large"));
        }
        for (ea, _) in a.terms() {
            for (eb, _) in b.terms() {
                for (x, y) in ea.iter().zip(eb.iter()) {
                    if x + y > EXP_CAP {
                        return Err(self.err(&format!("exponent exceeds {EXP_CAP}")));
                    }
                }
            }
        }
        let prod = a * b;
        if prod.term_count() > TERMS_CAP {
            return Err(self.err("expression too large"));
        }
        Ok(prod)
    }
}
