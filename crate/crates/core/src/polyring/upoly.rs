//! Univariate polynomials over `K` with exact Euclidean arithmetic.

use std::fmt;

use crate::numfield::{KElem, Rat};
use crate::{Error, Result};

/// Dense univariate polynomial, coefficients ascending; the zero polynomial
/// has an empty coefficient list.
#[derive(Clone, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<KElem>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<KElem>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::new(vec![KElem::one()])
    }

    pub fn x() -> Self {
        UPoly::new(vec![KElem::zero(), KElem::one()])
    }

    pub fn from_rats(coeffs: &[Rat]) -> Self {
        UPoly::new(coeffs.iter().map(|r| KElem::from_rat(r.clone())).collect())
    }

    pub fn coeffs(&self) -> &[KElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&KElem> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &KElem) -> KElem {
        let mut acc = KElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![KElem::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c.clone();
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c.clone();
        }
        UPoly::new(out)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![KElem::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c.clone();
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c.clone();
        }
        UPoly::new(out)
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![KElem::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, k: &KElem) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Euclidean division: `self = q * g + r` with `deg r < deg g`.
    pub fn divrem(&self, g: &UPoly) -> Result<(UPoly, UPoly)> {
        let gd = g.degree().ok_or(Error::ZeroPolynomial)?;
        let lead_inv = g.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![KElem::zero(); self.coeffs.len().saturating_sub(gd)];
        while rem.len() > gd {
            let d = rem.len() - 1;
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                quot[d - gd] = factor.clone();
                for (k, gc) in g.coeffs.iter().enumerate() {
                    let t = gc * &factor;
                    rem[d - gd + k] -= t;
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() <= gd {
                break;
            }
        }
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &UPoly) -> Result<UPoly> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Result<UPoly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let inv = self.leading().unwrap().inv()?;
        Ok(self.scale(&inv))
    }

    pub fn derivative(&self) -> UPoly {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.clone() * KElem::from_int(i as i64 + 1))
                .collect(),
        )
    }

    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        let g = self.gcd(&self.derivative())?;
        Ok(g.degree() == Some(0))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "UPoly(0)");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({})*u^{}", c, i))
            .collect();
        write!(f, "UPoly({})", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rat_i64;

    fn k(n: i64) -> KElem {
        KElem::from_int(n)
    }

    #[test]
    fn gcd_examples() {
        // gcd(x^2 - 1, x - 1) = x - 1
        let f = UPoly::new(vec![k(-1), k(0), k(1)]);
        let g = UPoly::new(vec![k(-1), k(1)]);
        assert_eq!(f.gcd(&g).unwrap(), g);
    }

    #[test]
    fn squarefree_checks() {
        // The actual order-2 parameter polynomial is squarefree...
        let p = UPoly::from_rats(&[1, -3, 60, -115, 60, -3, 1].map(|n: i64| rat_i64(n, 1)));
        assert!(p.is_squarefree().unwrap());
        // ...and so is x^6-3x^5+5x^3-3x+1.
        let q = UPoly::from_rats(&[1, -3, 0, 5, 0, -3, 1].map(|n: i64| rat_i64(n, 1)));
        assert!(q.is_squarefree().unwrap());
        let square = p.mul(&p);
        assert!(!square.is_squarefree().unwrap());
    }

    #[test]
    fn divrem_roundtrip() {
        let f = UPoly::new(vec![KElem::eps(), k(2), KElem::b()]);
        let g = UPoly::new(vec![k(1), KElem::b2()]);
        let r = UPoly::new(vec![KElem::eps2()]);
        let h = f.mul(&g).add(&r);
        let (q, rem) = h.divrem(&g).unwrap();
        assert_eq!(q, f);
        assert_eq!(rem, r);
        assert!(matches!(
            h.divrem(&UPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }
}
