//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! A polynomial carries its own ordered variable list (single ASCII letters),
//! and terms are stored as exponent vector -> nonzero coefficient. The
//! `Display` form is canonical: terms in graded-lex descending order, so
//! `parse(p.to_string())` returns `p` exactly.

mod factor;
mod parser;
pub(crate) mod univariate;

pub use factor::{binary_form_max_multiplicity, ternary_cubic_repeated_factor, CubicFactor};

use crate::{Error, Result};
use num::{BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A sparse polynomial over `BigRational` in named variables.
///
/// Invariants: the variable list is nonempty with distinct ASCII letters, and
/// no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: Vec<char>,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

/// Checks a variable declaration like `"xyz"`: distinct ASCII letters only.
pub(crate) fn validate_vars(vars: &str) -> Result<Vec<char>> {
    let list: Vec<char> = vars.chars().collect();
    let ok = !list.is_empty()
        && list.iter().all(|c| c.is_ascii_alphabetic())
        && (1..list.len()).all(|i| !list[..i].contains(&list[i]));
    if ok {
        Ok(list)
    } else {
        Err(Error::InvalidVariables(vars.to_string()))
    }
}

impl Polynomial {
    /// The zero polynomial in the given variables.
    pub fn zero(vars: &str) -> Result<Self> {
        Ok(Self {
            vars: validate_vars(vars)?,
            terms: BTreeMap::new(),
        })
    }

    /// Parses polynomial text in the given variables.
    ///
    /// Grammar: sums of terms, terms are products of factors (explicit `*`
    /// or juxtaposition), factors are integers, rationals `p/q`, variables,
    /// or parenthesized expressions, optionally raised with `^`. Whitespace
    /// is ignored. Errors carry the byte offset of the offending character.
    pub fn parse(text: &str, vars: &str) -> Result<Self> {
        parser::parse(text, vars)
    }

    pub(crate) fn zero_with(vars: Vec<char>) -> Self {
        Self {
            vars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `value` as a polynomial in the given variables.
    pub fn constant(vars: &str, value: BigRational) -> Result<Self> {
        let mut p = Self::zero(vars)?;
        p.add_term(vec![0; p.vars.len()], value);
        Ok(p)
    }

    /// The ordered variable list.
    pub fn vars(&self) -> &[char] {
        &self.vars
    }

    /// Number of variables (which is fixed by the variable list, not by
    /// which variables actually occur).
    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms with nonzero coefficient.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates over `(exponent vector, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// The set of exponent vectors with nonzero coefficient.
    pub fn support(&self) -> Vec<Vec<u32>> {
        self.terms.keys().cloned().collect()
    }

    /// Coefficient of the given exponent vector (zero if absent).
    pub fn coefficient(&self, exponents: &[u32]) -> BigRational {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    /// Adds `coeff * x^exponents`, dropping the term if the sum cancels.
    pub(crate) fn add_term(&mut self, exponents: Vec<u32>, coeff: BigRational) {
        debug_assert_eq!(exponents.len(), self.vars.len());
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_same_vars(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "polynomial arithmetic requires identical variable lists"
        );
    }

    /// `self * c`.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero_with(self.vars.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.clone(), v * c))
            .collect();
        Self {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// `self^n` by repeated multiplication.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::zero_with(self.vars.clone());
        acc.add_term(vec![0; self.vars.len()], BigRational::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Total degree of the highest term, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Total degree of the lowest term (the multiplicity at the origin),
    /// `None` for the zero polynomial.
    pub fn multiplicity(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// The sum of all terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<u32>() == d)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Self {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// `Some(d)` when the polynomial is nonzero and homogeneous of total
    /// degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.total_degree()?;
        if self.multiplicity() == Some(d) {
            Some(d)
        } else {
            None
        }
    }

    /// Largest exponent of variable `var` appearing in any term, `None` for
    /// the zero polynomial.
    pub fn max_exponent(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Smallest exponent of variable `var` over all terms, `None` for the
    /// zero polynomial. This is the multiplicity of the coordinate
    /// hyperplane `var = 0` as a factor.
    pub fn min_exponent(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).min()
    }

    /// Evaluates at a rational point (one value per variable).
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.vars.len() {
            return Err(Error::ArityMismatch {
                expected: self.vars.len(),
                found: point.len(),
            });
        }
        let mut acc = BigRational::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (value, &e) in point.iter().zip(exps.iter()) {
                // pow on Ratio takes i32; parser caps exponents well below that.
                term *= value.pow(e as i32);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Reinterprets the polynomial in `vars` with variable `var` removed.
    /// Errors if `var` actually occurs in any term.
    pub fn without_var(&self, var: usize) -> Result<Self> {
        assert!(var < self.vars.len());
        if self.max_exponent(var).unwrap_or(0) > 0 {
            return Err(Error::ArityMismatch {
                expected: self.vars.len() - 1,
                found: self.vars.len(),
            });
        }
        let vars: Vec<char> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != var)
            .map(|(_, c)| *c)
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.remove(var);
                (e, c.clone())
            })
            .collect();
        Ok(Self { vars, terms })
    }

    /// Extends the variable list with a fresh variable (exponent zero in
    /// every existing term). Errors if the letter is already in use.
    pub fn with_added_var(&self, var: char) -> Result<Self> {
        if self.vars.contains(&var) || !var.is_ascii_alphabetic() {
            let mut s: String = self.vars.iter().collect();
            s.push(var);
            return Err(Error::InvalidVariables(s));
        }
        let mut vars = self.vars.clone();
        vars.push(var);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.push(0);
                (e, c.clone())
            })
            .collect();
        Ok(Self { vars, terms })
    }

    /// Applies `exponents -> map(exponents)` to every term, summing any
    /// collisions. The image keeps the same variable list.
    pub(crate) fn map_exponents<F>(&self, mut map: F) -> Self
    where
        F: FnMut(&[u32]) -> Vec<u32>,
    {
        let mut out = Self::zero_with(self.vars.clone());
        for (exps, coeff) in &self.terms {
            out.add_term(map(exps), coeff.clone());
        }
        out
    }

    /// Index of variable `ch` in the variable list.
    pub fn var_index(&self, ch: char) -> Option<usize> {
        self.vars.iter().position(|&v| v == ch)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_vars(rhs);
        let mut out = Polynomial::zero_with(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea
                    .iter()
                    .zip(eb.iter())
                    .map(|(a, b)| a.checked_add(*b).expect("exponent overflow in product"))
                    .collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

/// Graded-lex comparison of exponent vectors: higher total degree first,
/// ties broken by lexicographic order on the exponents.
fn graded_lex_desc(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut order: Vec<&Vec<u32>> = self.terms.keys().collect();
        order.sort_by(|a, b| graded_lex_desc(a, b));
        for (i, exps) in order.iter().enumerate() {
            let coeff = &self.terms[*exps];
            if i == 0 {
                if coeff.is_negative() {
                    f.write_str("-")?;
                }
            } else if coeff.is_negative() {
                f.write_str("-")?;
            } else {
                f.write_str("+")?;
            }
            let mag = coeff.abs();
            let is_constant = exps.iter().all(|&e| e == 0);
            if is_constant {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                for (var, &e) in self.vars.iter().zip(exps.iter()) {
                    match e {
                        0 => {}
                        1 => write!(f, "{var}")?,
                        _ => write!(f, "{var}^{e}")?,
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn p(text: &str, vars: &str) -> Polynomial {
        Polynomial::parse(text, vars).expect("parse")
    }

    #[test]
    fn display_is_graded_lex_descending() {
        let f = p("y^3 + x^7 + z^2", "xyz");
        assert_eq!(f.to_string(), "x^7+y^3+z^2");
        let g = p("y*x + x^2 + y^2", "xy");
        assert_eq!(g.to_string(), "x^2+xy+y^2");
    }

    #[test]
    fn display_coefficients() {
        let f = p("-2yz + 5/3 x^2 y - 1", "xyz");
        assert_eq!(f.to_string(), "5/3*x^2y-2*yz-1");
        assert_eq!(Polynomial::zero("xyz").unwrap().to_string(), "0");
        let g = p("-x + y", "xy");
        assert_eq!(g.to_string(), "-x+y");
    }

    #[test]
    fn arithmetic_cancels_cleanly() {
        let a = p("x^2+2xy+y^2", "xy");
        let b = p("(x+y)^2", "xy");
        assert_eq!(a, b);
        let diff = &a - &b;
        assert!(diff.is_zero());
        let prod = &p("x+y", "xy") * &p("x-y", "xy");
        assert_eq!(prod, p("x^2-y^2", "xy"));
    }

    #[test]
    fn degree_and_multiplicity() {
        let f = p("z^2 + x^5 + x y^3", "xyz");
        assert_eq!(f.total_degree(), Some(5));
        assert_eq!(f.multiplicity(), Some(2));
        assert_eq!(f.homogeneous_part(2), p("z^2", "xyz"));
        assert_eq!(f.homogeneous_degree(), None);
        assert_eq!(p("x^3+y^3", "xy").homogeneous_degree(), Some(3));
        assert!(Polynomial::zero("x").unwrap().total_degree().is_none());
    }

    #[test]
    fn evaluate_exactly() {
        let f = p("x^2 y - 1/2 z", "xyz");
        let v = f.evaluate(&[q(1, 2), q(3, 1), q(1, 3)]).unwrap();
        assert_eq!(v, q(7, 12));
    }

    #[test]
    fn var_management() {
        let f = p("x^2 + y", "xyz");
        let g = f.without_var(2).unwrap();
        assert_eq!(g.vars(), &['x', 'y']);
        assert!(f.without_var(0).is_err());
        let h = p("x+y", "xy").with_added_var('t').unwrap();
        assert_eq!(h.vars(), &['x', 'y', 't']);
        assert!(p("x", "xy").with_added_var('x').is_err());
    }

    #[test]
    fn rejects_bad_variable_lists() {
        assert!(Polynomial::zero("").is_err());
        assert!(Polynomial::zero("xx").is_err());
        assert!(Polynomial::zero("x1").is_err());
    }
}
