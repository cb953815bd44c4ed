//! Weight vectors for weighted blowups and the well-forming of the
//! resulting weighted projective plane.

use crate::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize};
use std::fmt;

/// A primitive vector of positive integer weights.
///
/// Construction divides out the common gcd, so two inputs that are scalar
/// multiples of each other build the same `Weight`; every weighted-blowup
/// quantity in this crate is invariant under that rescaling.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Weight(Vec<u32>);

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<u32>::deserialize(de)?;
        Weight::new(&entries).map_err(serde::de::Error::custom)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Weight {
    /// Builds a weight from positive entries, normalizing to a primitive
    /// vector. Errors on an empty list or a zero entry.
    pub fn new(entries: &[u32]) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidWeight("empty weight vector".to_string()));
        }
        if let Some(pos) = entries.iter().position(|&w| w == 0) {
            return Err(Error::InvalidWeight(format!("entry {pos} is zero")));
        }
        let g = entries.iter().copied().fold(0, gcd);
        Ok(Self(entries.iter().map(|&w| w / g).collect()))
    }

    /// Parses a comma-separated list like `"6,14,21"`.
    pub fn parse(text: &str) -> Result<Self> {
        let entries = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::InvalidWeight(format!("bad entry {:?}: {e}", part.trim())))
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::new(&entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the entries.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&w| w as u64).sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

/// For a length-3 weight `(w1,w2,w3)` returns `(m1,m2,m3)` where `mi` is
/// the gcd of the two entries other than `wi`. The `mi` are pairwise
/// coprime for a primitive weight.
pub fn pair_gcds(w: &Weight) -> Result<[u32; 3]> {
    let e = w.entries();
    if e.len() != 3 {
        return Err(Error::WeightLengthMismatch {
            weight_len: e.len(),
            arity: 3,
        });
    }
    Ok([gcd(e[1], e[2]), gcd(e[0], e[2]), gcd(e[0], e[1])])
}

/// The weighted projective plane of a length-3 weight in well-formed
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WellFormedPlane {
    /// The weight as given (already primitive).
    pub original: Weight,
    /// Pairwise gcds `(m1,m2,m3)`; `mi` omits the `i`-th entry.
    pub pair_gcds: [u32; 3],
    /// Well-formed weights `wi / (mj * mk)`.
    pub well_formed: [u32; 3],
    /// Product `m1*m2*m3`; degrees divide by this under well-forming.
    pub degree_divisor: u32,
}

/// Computes the well-formed model of `P(w1,w2,w3)`.
///
/// Each `mi = gcd(wj, wk)` divides the other two entries' product structure:
/// for a primitive weight the `mi` are pairwise coprime, `mj*mk` divides
/// `wi`, and `P(w) = P(w1/m2m3, w2/m1m3, w3/m1m2)`.
pub fn well_form(w: &Weight) -> Result<WellFormedPlane> {
    let m = pair_gcds(w)?;
    let e = w.entries();
    debug_assert!(
        gcd(m[0], m[1]) == 1 && gcd(m[0], m[2]) == 1 && gcd(m[1], m[2]) == 1,
        "pairwise gcds of a primitive weight are pairwise coprime"
    );
    let mut well_formed = [0u32; 3];
    for i in 0..3 {
        let divisor = m[(i + 1) % 3] * m[(i + 2) % 3];
        debug_assert_eq!(e[i] % divisor, 0);
        well_formed[i] = e[i] / divisor;
    }
    Ok(WellFormedPlane {
        original: w.clone(),
        pair_gcds: m,
        well_formed,
        degree_divisor: m[0] * m[1] * m[2],
    })
}

impl fmt::Display for WellFormedPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.well_formed;
        if a == 1 && b == 1 && c == 1 {
            write!(f, "P^2")
        } else {
            write!(f, "P({a},{b},{c})")
        }
    }
}
