//! Cyclic-cover data for thresholds of the form `1 - 1/m`: adjoining
//! `t^m = -f` produces a degree-`d` quasihomogeneous hypersurface in four
//! variables whose weights sum to `d`, the simple-K3 condition.

use crate::polynomial::Polynomial;
use crate::threshold::{lct_candidate, standard_form};
use crate::weights::Weight;
use crate::{Error, Result};
use num::{BigInt, BigRational, One};
use serde::{Deserialize, Serialize};

/// Upper bound on the cover exponent `m`; matches the parser's exponent cap
/// so the cover polynomial can always round-trip through text.
const COVER_EXP_CAP: u64 = 10_000;

/// The `m`-th cyclic cover branched over `f = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct K3CoverRecord {
    /// Cover degree: the threshold is `1 - 1/m`.
    pub m: u64,
    /// The cover equation `f + t^m` in four variables. Canonical text.
    pub cover: String,
    /// Weights of the four variables; the last is the weight of `t`.
    pub weight4: Weight,
    /// Common weighted degree of the cover equation.
    pub degree: u64,
    /// `sum(weight4) / degree`; equal to 1 exactly in the simple-K3 case.
    #[serde(with = "crate::rat")]
    pub normalized_sum: BigRational,
    /// Catalogue number of the quadruple in the standard ninety-five-entry
    /// list of weighted K3 hypersurfaces, when the corpus assigns one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub yonemura: Option<u32>,
}

/// Builds the cyclic cover record for a three-variable polynomial whose
/// threshold candidate at `w` has the form `1 - 1/m`.
///
/// The `t`-weight is `d - sum(w) = d/m`, so `t^m` has weighted degree
/// exactly `d` and the four weights sum to `d`. Errors if the candidate is
/// not of standard form or the variable `t` is already taken.
pub fn k3_cover(f: &Polynomial, w: &Weight) -> Result<K3CoverRecord> {
    if f.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: f.arity(),
        });
    }
    let report = lct_candidate(f, w)?;
    let m = standard_form(&report.candidate)?
        .ok_or_else(|| Error::NotStandardForm(report.candidate.to_string()))?;
    if m > COVER_EXP_CAP {
        return Err(Error::OutOfRange {
            context: "cover exponent",
            value: m.to_string(),
            interval: "1..=10000",
        });
    }
    let d = report.order;
    let sum_w = w.total();
    // c = sum(w)/d < 1 forces d > sum(w); the gap is d*(1 - c) = d/m.
    let w_t = d - sum_w;
    assert_eq!(d, m * w_t, "t-weight divides the degree with quotient m");
    let w_t = u32::try_from(w_t).map_err(|_| Error::OutOfRange {
        context: "t-weight",
        value: (d - sum_w).to_string(),
        interval: "u32",
    })?;

    let mut cover = f.with_added_var('t')?;
    let mut t_power = vec![0u32; 4];
    t_power[3] = m as u32;
    cover.add_term(t_power, BigRational::one());

    let mut entries = [0u32; 4];
    entries[..3].copy_from_slice(w.entries());
    entries[3] = w_t;
    let weight4 = Weight::new(&entries)?;
    assert_eq!(
        weight4.entries(),
        entries,
        "appending the t-weight keeps the weight primitive"
    );

    let normalized_sum = BigRational::new(BigInt::from(weight4.total()), BigInt::from(d));
    assert!(normalized_sum.is_one(), "simple-K3 weights sum to the degree");

    Ok(K3CoverRecord {
        m,
        cover: cover.to_string(),
        weight4,
        degree: d,
        normalized_sum,
        yonemura: None,
    })
}
