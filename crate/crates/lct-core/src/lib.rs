//! Exact-arithmetic toolkit for log canonical threshold data of hypersurface
//! elliptic singularities under weighted blowups.
//!
//! Everything is computed over arbitrary-precision rationals; there are no
//! floating-point numbers anywhere in this crate and no tolerances in any
//! comparison. The pieces fit together like this:
//!
//! * [`polynomial`] -- sparse multivariate polynomials over `BigRational`,
//!   a text parser for them, and linear-factor analysis of binary/ternary
//!   forms.
//! * [`weights`] -- primitive weight vectors and the well-forming of a
//!   weighted projective plane.
//! * [`threshold`] -- weighted multiplicities, log canonical threshold
//!   candidates, toric discrepancies, exhaustive weight searches, and the
//!   exceptionality trichotomy.
//! * [`boundary`] -- the induced boundary data on the exceptional plane of a
//!   weighted blowup: strict transforms, residual curves, Diff coefficients,
//!   and the numerical-triviality balance.
//! * [`k3cover`] -- cyclic-cover data attached to thresholds of the form
//!   `1 - 1/m`.
//! * [`dualgraph`] -- resolution dual graphs: intersection matrices,
//!   fundamental cycles, and boundary discrepancy systems.
//! * [`corpus`] -- the shipped reference tables and the row-by-row
//!   verification harness that recomputes every cell.

pub mod boundary;
pub mod corpus;
pub mod dualgraph;
pub mod error;
pub mod k3cover;
pub mod polynomial;
pub mod threshold;
pub mod weights;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

pub(crate) mod rat {
    //! Serde helpers for `BigRational` fields rendered as `"p/q"` strings.

    use num::BigRational;
    use serde::{de, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(value: &BigRational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(de)?;
        BigRational::from_str(&text)
            .map_err(|e| de::Error::custom(format!("invalid rational {text:?}: {e}")))
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(
            value: &[BigRational],
            ser: S,
        ) -> Result<S::Ok, S::Error> {
            let mut seq = ser.serialize_seq(Some(value.len()))?;
            for v in value {
                seq.serialize_element(&v.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            de: D,
        ) -> Result<Vec<BigRational>, D::Error> {
            let raw = Vec::<String>::deserialize(de)?;
            raw.iter()
                .map(|text| {
                    BigRational::from_str(text)
                        .map_err(|e| de::Error::custom(format!("invalid rational {text:?}: {e}")))
                })
                .collect()
        }
    }

    pub mod array3 {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(
            value: &[BigRational; 3],
            ser: S,
        ) -> Result<S::Ok, S::Error> {
            let mut seq = ser.serialize_seq(Some(3))?;
            for v in value {
                seq.serialize_element(&v.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<[BigRational; 3], D::Error> {
            let raw = <[String; 3]>::deserialize(de)?;
            let mut out = [(); 3].map(|_| <BigRational as num::Zero>::zero());
            for (slot, text) in out.iter_mut().zip(raw.iter()) {
                *slot = BigRational::from_str(text)
                    .map_err(|e| de::Error::custom(format!("invalid rational {text:?}: {e}")))?;
            }
            Ok(out)
        }
    }
}
