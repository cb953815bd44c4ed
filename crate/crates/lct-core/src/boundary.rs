//! Boundary data on the exceptional plane of a weighted blowup: strict
//! transform charts, the residual curve in well-formed coordinates, Diff
//! coefficients along the coordinate lines, and the numerical-triviality
//! balance that ties them together.

use crate::polynomial::Polynomial;
use crate::threshold::{lct_candidate, weighted_part};
use crate::weights::{well_form, WellFormedPlane, Weight};
use crate::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Strict transform of `f` in the `chart`-th coordinate chart of the
/// `w`-weighted blowup.
///
/// Substituting `x_j -> x_j * x_chart^(w_j)` multiplies each term's
/// `x_chart`-exponent by the term's `w`-degree; dividing by
/// `x_chart^ord_w(f)` then leaves exponent `sum_j(w_j a_j) - ord` on the
/// chart variable and every other exponent unchanged.
pub fn strict_transform_chart(f: &Polynomial, w: &Weight, chart: usize) -> Result<Polynomial> {
    if w.len() != f.arity() {
        return Err(Error::WeightLengthMismatch {
            weight_len: w.len(),
            arity: f.arity(),
        });
    }
    assert!(chart < f.arity(), "chart index out of range");
    let ord = crate::threshold::weighted_order(f, w)?;
    let wdeg = |exps: &[u32]| -> u64 {
        exps.iter()
            .zip(w.entries())
            .map(|(&a, &wi)| a as u64 * wi as u64)
            .sum()
    };
    for (exps, _) in f.terms() {
        if u32::try_from(wdeg(exps) - ord).is_err() {
            return Err(Error::OutOfRange {
                context: "chart exponent",
                value: (wdeg(exps) - ord).to_string(),
                interval: "u32",
            });
        }
    }
    Ok(f.map_exponents(|exps| {
        let mut out = exps.to_vec();
        out[chart] = (wdeg(exps) - ord) as u32;
        out
    }))
}

/// Splits off the coordinate factors: returns `(core, k)` with
/// `f = x^k1 * y^k2 * ... * core` and `core` divisible by no variable.
pub fn divide_out_coordinate_factors(f: &Polynomial) -> Result<(Polynomial, Vec<u32>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("coordinate factorization"));
    }
    let k: Vec<u32> = (0..f.arity())
        .map(|i| f.min_exponent(i).unwrap())
        .collect();
    let core = f.map_exponents(|exps| exps.iter().zip(&k).map(|(a, b)| a - b).collect());
    Ok((core, k))
}

/// Rewrites a `w`-homogeneous form on `P(w)` into coordinates of the
/// well-formed plane: the exponent of variable `i` divides by `m_i`, and
/// the degree divides by `m1*m2*m3`.
///
/// Errors if some exponent is not divisible by its `m_i` (the form then
/// does not descend) or if `f` is not `w`-homogeneous. Returns the
/// rewritten form and its degree for the well-formed weights.
pub fn rewrite_form(f: &Polynomial, plane: &WellFormedPlane) -> Result<(Polynomial, u64)> {
    if f.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: f.arity(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("form rewriting"));
    }
    let w = &plane.original;
    let degrees: Vec<u64> = f
        .terms()
        .map(|(exps, _)| {
            exps.iter()
                .zip(w.entries())
                .map(|(&a, &wi)| a as u64 * wi as u64)
                .sum()
        })
        .collect();
    if degrees.windows(2).any(|pair| pair[0] != pair[1]) {
        return Err(Error::NotHomogeneous);
    }

    for (exps, _) in f.terms() {
        for (i, &m) in plane.pair_gcds.iter().enumerate() {
            if exps[i] % m != 0 {
                return Err(Error::NonExactExponent {
                    variable: f.vars()[i],
                    exponent: exps[i],
                    modulus: m,
                });
            }
        }
    }
    let rewritten = f.map_exponents(|exps| {
        exps.iter()
            .zip(&plane.pair_gcds)
            .map(|(a, m)| a / m)
            .collect()
    });
    let new_degree: u64 = rewritten
        .terms()
        .next()
        .map(|(exps, _)| {
            exps.iter()
                .zip(&plane.well_formed)
                .map(|(&a, &wi)| a as u64 * wi as u64)
                .sum()
        })
        .unwrap();
    debug_assert!(
        rewritten.terms().all(|(exps, _)| {
            exps.iter()
                .zip(&plane.well_formed)
                .map(|(&a, &wi)| a as u64 * wi as u64)
                .sum::<u64>()
                == new_degree
        }),
        "rewritten form is homogeneous for the well-formed weights"
    );
    debug_assert_eq!(new_degree * plane.degree_divisor as u64, degrees[0]);
    Ok((rewritten, new_degree))
}

/// The boundary record of one weighted blowup: the exceptional plane in
/// well-formed coordinates, the residual curve, and the Diff coefficients
/// along the three coordinate lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LogEnriquesRecord {
    /// The blowup weight.
    pub weight: Weight,
    /// Pairwise gcds `(m1,m2,m3)` of the weight.
    pub pair_gcds: [u32; 3],
    /// Well-formed weights of the exceptional plane.
    pub well_formed: [u32; 3],
    /// Threshold candidate of the weight.
    #[serde(with = "crate::rat")]
    pub c: BigRational,
    /// Diff coefficient along each coordinate line:
    /// `1 - 1/m_i + c*k_i/m_i`, where `k_i` is the multiplicity of the
    /// line in the weighted part.
    #[serde(with = "crate::rat::array3")]
    pub delta: [BigRational; 3],
    /// Multiplicity `k_i` of each coordinate line in the weighted part.
    pub line_multiplicity: [u32; 3],
    /// The residual curve: the coordinate-factor-free part of the weighted
    /// tangent cone, rewritten to the well-formed plane. Canonical text.
    pub ell: String,
    /// Degree of the residual curve for the well-formed weights.
    pub residual_degree: u64,
    /// `c*residual_degree + sum(delta_i*w'_i) - sum(w'_i)`; zero exactly
    /// when the boundary is numerically trivial against the plane.
    #[serde(with = "crate::rat")]
    pub balance_defect: BigRational,
    /// Non-fatal observations (a line of multiplicity above 1, say).
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
}

impl LogEnriquesRecord {
    /// The residual curve as a polynomial (reparse of the canonical text).
    pub fn ell_polynomial(&self, vars: &str) -> Result<Polynomial> {
        Polynomial::parse(&self.ell, vars)
    }
}

/// Builds the boundary record of the `w`-weighted blowup of `f = 0`.
///
/// The weighted part of `f` splits as coordinate factors times a core; the
/// core descends to the residual curve on the well-formed plane, and each
/// coordinate line `i` receives Diff coefficient `1 - 1/m_i + c*k_i/m_i`.
/// Errors if some coefficient lands outside `[0, 1)`: the boundary is then
/// not a log Enriques boundary and the blowup does not compute a threshold
/// of the expected shape.
pub fn build_record(f: &Polynomial, w: &Weight) -> Result<LogEnriquesRecord> {
    if f.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: f.arity(),
        });
    }
    let report = lct_candidate(f, w)?;
    let c = report.candidate.clone();
    let plane = well_form(w)?;
    let fw = weighted_part(f, w)?;
    let (core, k) = divide_out_coordinate_factors(&fw)?;

    let mut warnings = Vec::new();
    let mut delta_arr = [(); 3].map(|_| BigRational::zero());
    for i in 0..3 {
        let m = BigRational::from_integer(BigInt::from(plane.pair_gcds[i]));
        let ki = BigRational::from_integer(BigInt::from(k[i]));
        let delta = BigRational::one() - m.recip() + &c * ki / &m;
        if delta >= BigRational::one() || delta.is_negative() {
            return Err(Error::DeltaOutOfRange {
                index: i + 1,
                value: delta.to_string(),
            });
        }
        if k[i] > 1 {
            warnings.push(format!(
                "coordinate line {} appears with multiplicity {} in the weighted part",
                f.vars()[i],
                k[i]
            ));
        }
        delta_arr[i] = delta;
    }

    if core.total_degree() == Some(0) {
        // A purely monomial weighted part leaves no residual curve; the
        // record would be degenerate.
        return Err(Error::ZeroPolynomial("residual curve"));
    }

    // The core inherits w-homogeneity from the weighted part, and every
    // exponent of it is divisible by the matching m_i: each m_i is
    // invertible modulo the other weights, so all terms of the weighted
    // part share one exponent residue mod m_i, and stripping the minimum
    // zeroes that residue.
    let (ell, residual_degree) = rewrite_form(&core, &plane)?;

    let wf_sum: BigRational = plane
        .well_formed
        .iter()
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .sum();
    let weighted_delta: BigRational = delta_arr
        .iter()
        .zip(&plane.well_formed)
        .map(|(d, &wi)| d * BigRational::from_integer(BigInt::from(wi)))
        .sum();
    let balance_defect =
        &c * BigRational::from_integer(BigInt::from(residual_degree)) + weighted_delta - wf_sum;

    Ok(LogEnriquesRecord {
        weight: w.clone(),
        pair_gcds: plane.pair_gcds,
        well_formed: plane.well_formed,
        c,
        delta: delta_arr,
        line_multiplicity: [k[0], k[1], k[2]],
        ell: ell.to_string(),
        residual_degree,
        balance_defect,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn p(text: &str) -> Polynomial {
        Polynomial::parse(text, "xyz").expect("parse")
    }

    fn w(entries: &[u32]) -> Weight {
        Weight::new(entries).expect("weight")
    }

    fn q(text: &str) -> BigRational {
        BigRational::from_str(text).expect("rational")
    }

    #[test]
    fn chart_examples() {
        let f = p("z^3+y^4+x^2y^2+x^3z");
        let t = strict_transform_chart(&f, &w(&[1, 1, 1]), 0).unwrap();
        assert_eq!(t, p("z^3+xy^4+xy^2+xz"));

        let g = p("x^7+y^3+z^2");
        let t = strict_transform_chart(&g, &w(&[6, 14, 21]), 2).unwrap();
        assert_eq!(t, p("x^7+y^3+1"));
        assert_eq!(t.multiplicity(), Some(0));
    }

    #[test]
    fn chart_matches_symbolic_substitution() {
        // Substituting x_j -> x_j * u^(w_j) (j != chart) and
        // x_chart -> u^(w_chart) turns each term into u^(w-degree) times a
        // chart-free monomial; dividing by u^ord must reproduce the chart
        // transform with u read as the chart variable.
        let f = p("z^2+x^5+xy^3");
        let wt = w(&[6, 8, 15]);
        let ord = crate::threshold::weighted_order(&f, &wt).unwrap();
        let chart = 2usize;
        let direct = strict_transform_chart(&f, &wt, chart).unwrap();
        let substituted = f.map_exponents(|exps| {
            let wdeg: u64 = exps
                .iter()
                .zip(wt.entries())
                .map(|(&a, &wi)| a as u64 * wi as u64)
                .sum();
            let mut out = exps.to_vec();
            out[chart] = u32::try_from(wdeg).unwrap();
            out
        });
        let rebuilt = substituted.map_exponents(|exps| {
            let mut out = exps.to_vec();
            out[chart] -= u32::try_from(ord).unwrap();
            out
        });
        assert_eq!(direct, rebuilt);
    }

    #[test]
    fn coordinate_factor_stripping() {
        let (core, k) = divide_out_coordinate_factors(&p("x^2y^3z+x^3y^2z")).unwrap();
        assert_eq!(k, vec![2, 2, 1]);
        assert_eq!(core, p("y+x"));
        let (core, k) = divide_out_coordinate_factors(&p("x^2+yz")).unwrap();
        assert_eq!(k, vec![0, 0, 0]);
        assert_eq!(core, p("x^2+yz"));
    }

    #[test]
    fn rewrite_examples() {
        let plane = well_form(&w(&[3, 3, 4])).unwrap();
        let (g, d) = rewrite_form(&p("z^3+y^4+x^2y^2"), &plane).unwrap();
        assert_eq!(g, p("z+y^4+x^2y^2"));
        assert_eq!(d, 4);

        let plane = well_form(&w(&[6, 8, 15])).unwrap();
        let (g, d) = rewrite_form(&p("z^2+x^5+xy^3"), &plane).unwrap();
        assert_eq!(g, p("z+x^5+xy"));
        assert_eq!(d, 5);

        // x^2 is not divisible by m1 = 3 for weight (3,3,4).
        let plane = well_form(&w(&[3, 3, 4])).unwrap();
        let err = rewrite_form(&p("x^2yz"), &plane);
        assert!(matches!(err, Err(Error::NonExactExponent { .. })), "{err:?}");
        assert!(rewrite_form(&p("x+y^2"), &plane).is_err());
    }

    #[test]
    fn record_for_plain_cusp() {
        let rec = build_record(&p("x^7+y^3+z^2"), &w(&[6, 14, 21])).unwrap();
        assert_eq!(rec.c, q("41/42"));
        assert_eq!(rec.pair_gcds, [7, 3, 2]);
        assert_eq!(rec.well_formed, [1, 1, 1]);
        assert_eq!(rec.delta[0], q("6/7"));
        assert_eq!(rec.delta[1], q("2/3"));
        assert_eq!(rec.delta[2], q("1/2"));
        assert_eq!(rec.ell, "x+y+z");
        assert_eq!(rec.residual_degree, 1);
        assert!(rec.balance_defect.is_zero());
        assert!(rec.warnings.is_empty());
    }

    #[test]
    fn record_without_lines() {
        let rec = build_record(&p("x^5y+y^3+z^2"), &w(&[4, 10, 15])).unwrap();
        assert_eq!(rec.c, q("29/30"));
        assert_eq!(rec.pair_gcds, [5, 1, 2]);
        assert_eq!(rec.well_formed, [2, 1, 3]);
        assert_eq!(rec.line_multiplicity, [0, 0, 0]);
        assert_eq!(rec.delta[0], q("4/5"));
        assert!(rec.delta[1].is_zero());
        assert_eq!(rec.delta[2], q("1/2"));
        assert_eq!(rec.ell, "y^3+xy+z");
        assert_eq!(rec.residual_degree, 3);
        assert!(rec.balance_defect.is_zero());
    }

    #[test]
    fn record_with_a_line() {
        // The y-line appears once in the weighted part and absorbs c into
        // its Diff coefficient.
        let rec = build_record(&p("yz^2+y^4+x^3y+x^2z^2"), &w(&[2, 2, 3])).unwrap();
        assert_eq!(rec.c, q("7/8"));
        assert_eq!(rec.pair_gcds, [1, 1, 2]);
        assert_eq!(rec.well_formed, [1, 1, 3]);
        assert_eq!(rec.line_multiplicity, [0, 1, 0]);
        assert!(rec.delta[0].is_zero());
        assert_eq!(rec.delta[1], q("7/8"));
        assert_eq!(rec.delta[2], q("1/2"));
        assert_eq!(rec.ell, "x^3+y^3+z");
        assert_eq!(rec.residual_degree, 3);
        assert!(rec.balance_defect.is_zero());
        assert!(rec.warnings.is_empty());
    }

    #[test]
    fn delta_out_of_range_is_an_error() {
        // Candidate 3 at (1,1,1) for f = x pushes the Diff coefficient of
        // the x-line to 3.
        let err = build_record(&p("x"), &w(&[1, 1, 1]));
        assert!(matches!(err, Err(Error::DeltaOutOfRange { .. })), "{err:?}");
    }
}
