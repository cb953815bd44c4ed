//! Dense univariate polynomials over `BigRational`, just enough for exact
//! squarefree decomposition of the small forms the classifiers look at.

use num::{BigRational, Zero};

/// Coefficient list `coeffs[i] * u^i` with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    fn leading(&self) -> &BigRational {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lead = self.leading().clone();
        Self::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(i.into()))
            .collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Self::new(coeffs)
    }

    #[cfg(test)]
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return (Self::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRational::zero(); rem.len() - dd + 1];
        let lead = divisor.leading().clone();
        for k in (0..quo.len()).rev() {
            let q = &rem[k + dd - 1] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let prod = &q * b;
                rem[k + j] -= prod;
            }
            quo[k] = q;
        }
        (Self::new(quo), Self::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder. Callers
    /// only divide by known factors.
    fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's squarefree decomposition over characteristic zero:
    /// `self = const * prod(part_i ^ i)` with the parts pairwise coprime and
    /// squarefree. Only nonconstant parts are returned, as `(part, i)`.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        if self.is_constant() {
            return Vec::new();
        }
        let f = self.monic();
        let fp = f.derivative();
        let g = f.gcd(&fp);
        if g.is_constant() {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut c = f.div_exact(&g);
        let mut d = fp.div_exact(&g).sub(&c.derivative());
        let mut i = 1u32;
        while !c.is_constant() {
            let a = c.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            c = c.div_exact(&a);
            d = d.div_exact(&a).sub(&c.derivative());
            i += 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    #[test]
    fn div_rem_satisfies_identity() {
        let a = poly(&[1, 0, -3, 4, 2]);
        let b = poly(&[2, 1]);
        let (quo, rem) = a.div_rem(&b);
        assert_eq!(quo.mul(&b).sub(&a.sub(&rem)), UniPoly::zero());
        assert!(rem.degree() < b.degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (u+1)^2 (u-2)  and  (u+1)(u+3)
        let a = poly(&[1, 1]).mul(&poly(&[1, 1])).mul(&poly(&[-2, 1]));
        let b = poly(&[1, 1]).mul(&poly(&[3, 1]));
        assert_eq!(a.gcd(&b), poly(&[1, 1]));
        assert!(poly(&[1, 1]).gcd(&poly(&[1, 0, 1])).is_constant());
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // (u-1)^3 (u+2)^2 (u-5)
        let f = poly(&[-1, 1])
            .mul(&poly(&[-1, 1]))
            .mul(&poly(&[-1, 1]))
            .mul(&poly(&[2, 1]))
            .mul(&poly(&[2, 1]))
            .mul(&poly(&[-5, 1]));
        let parts = f.squarefree_decomposition();
        assert_eq!(
            parts,
            vec![
                (poly(&[-5, 1]), 1),
                (poly(&[2, 1]), 2),
                (poly(&[-1, 1]), 3),
            ]
        );
        // A squarefree input comes back whole.
        let g = poly(&[6, 5, 1]); // (u+2)(u+3)
        assert_eq!(g.squarefree_decomposition(), vec![(g.monic(), 1)]);
        // Constants decompose into nothing.
        assert!(poly(&[7]).squarefree_decomposition().is_empty());
    }
}
