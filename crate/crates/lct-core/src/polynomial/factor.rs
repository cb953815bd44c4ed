//! Linear-factor analysis of small forms: maximal multiplicity of a linear
//! factor of a binary form, and the repeated-factor class of a ternary
//! cubic. Both are exact over the algebraic closure, computed with rational
//! arithmetic only.

use super::univariate::UniPoly;
use super::Polynomial;
use crate::{Error, Result};
use num::{BigRational, One, Zero};

/// Largest multiplicity of a linear factor of a nonzero homogeneous binary
/// form, counted over the algebraic closure. Constants give 0.
///
/// Coordinate factors are read off exponent minima; for the rest, a linear
/// factor of multiplicity `i` corresponds to a root of multiplicity `i` of
/// the dehomogenization, so the squarefree decomposition indices carry the
/// answer without any root-finding.
pub fn binary_form_max_multiplicity(f: &Polynomial) -> Result<u32> {
    if f.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: f.arity(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("linear-factor multiplicity"));
    }
    if f.homogeneous_degree().is_none() {
        return Err(Error::NotHomogeneous);
    }
    let kx = f.min_exponent(0).unwrap();
    let ky = f.min_exponent(1).unwrap();
    let core = f.map_exponents(|e| vec![e[0] - kx, e[1] - ky]);
    let mut best = kx.max(ky);
    let c = dehomogenize_binary(&core);
    if !c.is_constant() {
        for (_, i) in c.squarefree_decomposition() {
            best = best.max(i);
        }
    }
    Ok(best)
}

/// `B(u, 1)` for a binary form `B(x, y)`, as a dense univariate polynomial.
fn dehomogenize_binary(b: &Polynomial) -> UniPoly {
    let deg = b.max_exponent(0).unwrap_or(0) as usize;
    let mut coeffs = vec![BigRational::zero(); deg + 1];
    for (exps, coeff) in b.terms() {
        coeffs[exps[0] as usize] += coeff;
    }
    UniPoly::new(coeffs)
}

/// Repeated-factor class of a ternary cubic form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CubicFactor {
    /// The cubic is a constant times the cube of the given linear form.
    Triple(Polynomial),
    /// Exactly one repeated linear factor, of multiplicity two.
    Double(Polynomial),
    /// No repeated linear factor over the algebraic closure.
    Squarefree,
}

/// Classifies a nonzero ternary cubic by its repeated linear factors over
/// the algebraic closure. Reported factors are monic in their leading
/// variable.
///
/// Any repeated factor of a cubic is defined over the rationals: a
/// conjugate pair of repeated factors would contribute degree at least four.
/// Candidates are harvested from the coordinate exponent minima and from
/// repeated roots of the three axis restrictions: if `l^2` divides the
/// stripped core `G` then the restriction of `l` to each coordinate plane
/// divides the (nonzero) restriction of `G` with multiplicity at least two.
pub fn ternary_cubic_repeated_factor(f: &Polynomial) -> Result<CubicFactor> {
    if f.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: f.arity(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("cubic classification"));
    }
    match f.homogeneous_degree() {
        Some(3) => {}
        Some(d) => {
            return Err(Error::DegreeMismatch {
                expected: 3,
                found: d,
            })
        }
        None => return Err(Error::NotHomogeneous),
    }

    let k: Vec<u32> = (0..3).map(|i| f.min_exponent(i).unwrap()).collect();
    let core = f.map_exponents(|e| e.iter().zip(&k).map(|(a, b)| a - b).collect());

    let mut best_mult = 0u32;
    let mut best_factor: Option<Polynomial> = None;
    for i in 0..3 {
        if k[i] > best_mult {
            best_mult = k[i];
            best_factor = Some(coordinate(f, i));
        }
    }

    // Candidate non-coordinate factors of the core, each checked by exact
    // division. The core has no coordinate factor, so all three axis
    // restrictions are nonzero forms.
    if core.total_degree().unwrap() >= 2 {
        let b_set = squared_root_candidates(&restrict(&core, 2)); // z = 0, factors x + b*y
        let c_set = squared_root_candidates(&restrict(&core, 1)); // y = 0, factors x + c*z
        let d_set = squared_root_candidates(&restrict(&core, 0)); // x = 0, factors y + d*z
        let mut candidates = Vec::new();
        for b in &b_set {
            for c in &c_set {
                candidates.push(linear_form(f, &[BigRational::one(), b.clone(), c.clone()]));
            }
        }
        for d in &d_set {
            candidates.push(linear_form(
                f,
                &[BigRational::zero(), BigRational::one(), d.clone()],
            ));
        }
        for l in candidates {
            let mut m = 0u32;
            let mut rest = core.clone();
            while let Some(q) = divide_by_linear(&rest, &l) {
                m += 1;
                rest = q;
            }
            if m > best_mult {
                best_mult = m;
                best_factor = Some(l);
            }
        }
    }

    Ok(match best_mult {
        0 | 1 => CubicFactor::Squarefree,
        2 => CubicFactor::Double(best_factor.unwrap()),
        _ => CubicFactor::Triple(best_factor.unwrap()),
    })
}

/// The coordinate `vars[i]` as a polynomial.
fn coordinate(model: &Polynomial, i: usize) -> Polynomial {
    let mut p = Polynomial::zero_with(model.vars().to_vec());
    let mut exps = vec![0; model.arity()];
    exps[i] = 1;
    p.add_term(exps, BigRational::one());
    p
}

/// `sum(coeffs[i] * vars[i])` as a polynomial.
fn linear_form(model: &Polynomial, coeffs: &[BigRational]) -> Polynomial {
    let mut p = Polynomial::zero_with(model.vars().to_vec());
    for (i, c) in coeffs.iter().enumerate() {
        let mut exps = vec![0; model.arity()];
        exps[i] = 1;
        p.add_term(exps, c.clone());
    }
    p
}

/// Sets variable `dropped` to zero and returns the surviving binary form in
/// the remaining two variables (order preserved).
fn restrict(f: &Polynomial, dropped: usize) -> Polynomial {
    let keep: Vec<usize> = (0..3).filter(|&i| i != dropped).collect();
    let vars: Vec<char> = keep.iter().map(|&i| f.vars()[i]).collect();
    let mut out = Polynomial::zero_with(vars);
    for (exps, coeff) in f.terms() {
        if exps[dropped] == 0 {
            out.add_term(vec![exps[keep[0]], exps[keep[1]]], coeff.clone());
        }
    }
    out
}

/// Values `b` such that `(v0 + b*v1)^2` divides the given nonzero binary
/// form. A form of degree at most three has at most one squared linear
/// factor, and its rational root comes straight out of the (linear, index
/// at least two) squarefree parts; `b = 0` is the pure-`v0` case.
fn squared_root_candidates(b: &Polynomial) -> Vec<BigRational> {
    let mut out = Vec::new();
    if b.is_zero() {
        return out;
    }
    let kx = b.min_exponent(0).unwrap();
    let ky = b.min_exponent(1).unwrap();
    if kx >= 2 {
        out.push(BigRational::zero());
    }
    let core = b.map_exponents(|e| vec![e[0] - kx, e[1] - ky]);
    let c = dehomogenize_binary(&core);
    if !c.is_constant() {
        for (part, i) in c.squarefree_decomposition() {
            if i >= 2 && part.degree() == Some(1) {
                // Monic part u + beta vanishes at u = -beta, giving the
                // factor (v0 + beta*v1).
                out.push(part.coeff(0));
            }
        }
    }
    out
}

/// Exact division of `f` by a nonzero linear form, if the form divides.
///
/// Reduction on the leading variable of `l`: each step eliminates the
/// lexicographically largest term containing that variable and only
/// introduces lexicographically smaller ones, so the loop terminates. The
/// final remainder is free of the leading variable, and no nonzero multiple
/// of `l` is, so divisibility is exactly `remainder == 0`.
pub(crate) fn divide_by_linear(f: &Polynomial, l: &Polynomial) -> Option<Polynomial> {
    debug_assert_eq!(f.vars(), l.vars());
    debug_assert_eq!(l.homogeneous_degree(), Some(1));
    let n = f.arity();
    let lead = (0..n)
        .find(|&i| {
            let mut e = vec![0; n];
            e[i] = 1;
            !l.coefficient(&e).is_zero()
        })
        .expect("nonzero linear form");
    let mut unit = vec![0; n];
    unit[lead] = 1;
    let alpha = l.coefficient(&unit);

    let mut rem = f.clone();
    let mut quo = Polynomial::zero_with(f.vars().to_vec());
    loop {
        let target = rem
            .terms()
            .filter(|(e, _)| e[lead] >= 1)
            .map(|(e, c)| (e.to_vec(), c.clone()))
            .max_by(|a, b| a.0.cmp(&b.0));
        let Some((exps, coeff)) = target else { break };
        let scale = &coeff / &alpha;
        let mut qe = exps.clone();
        qe[lead] -= 1;
        let mut mono = Polynomial::zero_with(f.vars().to_vec());
        mono.add_term(qe, scale);
        quo = &quo + &mono;
        rem = &rem - &(&mono * l);
    }
    if rem.is_zero() {
        Some(quo)
    } else {
        None
    }
}
