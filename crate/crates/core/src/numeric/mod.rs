//! Arbitrary-precision numerics: fixed-point reals, complex arithmetic, the
//! Weierstrass engine for the hexagonal lattice, and the complex embedding
//! of the exact coefficient field.

mod complex;
mod fixed;
mod wp;

pub use complex::Cx;
pub use fixed::Fx;
pub use wp::{TorusCoord, WeierstrassEngine};

use num_traits::Zero;

use crate::numfield::KElem;

/// Complex embedding of `K`: `e` goes to `exp(2 pi i / 3)` and `b` to the
/// real cube root of 2, correct to roughly the requested decimal precision.
pub fn embed_kelem(a: &KElem, digits: u32) -> Cx {
    let bits = (digits as f64 * 3.33).ceil() as u32 + 48;
    let half = Fx::from_int(1, bits).div_int(2);
    let eps = Cx::new(half.neg(), Fx::sqrt_int(3, bits).div_int(2));
    let b = Cx::new(Fx::cbrt_int(2, bits), Fx::zero(bits));
    let mut basis = Vec::with_capacity(6);
    for j in 0..3u32 {
        for i in 0..2u32 {
            let mut v = Cx::from_int(1, bits);
            for _ in 0..i {
                v = v.mul(&eps);
            }
            for _ in 0..j {
                v = v.mul(&b);
            }
            basis.push(v);
        }
    }
    let mut acc = Cx::zero(bits);
    for (c, base) in a.coords().iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        let scale = Fx::from_rat(c, bits);
        acc = acc.add(&Cx::new(base.re.mul(&scale), base.im.mul(&scale)));
    }
    acc
}

impl KElem {
    /// See [`embed_kelem`].
    pub fn embed_complex(&self, digits: u32) -> Cx {
        embed_kelem(self, digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rat_i64;

    #[test]
    fn embedding_of_generators() {
        let b = KElem::b().embed_complex(40);
        assert!(b
            .re
            .to_decimal(31)
            .starts_with("1.2599210498948731647672106072782"));
        assert!(b.im.is_zero());
        let e = KElem::eps().embed_complex(40);
        assert!(e.re.to_decimal(10).starts_with("-0.50000000"));
        assert!(e
            .im
            .to_decimal(31)
            .starts_with("0.8660254037844386467637231707529"));
        let zero = (KElem::one() + KElem::eps() + KElem::eps2()).embed_complex(40);
        assert!(zero.is_zero());
    }

    #[test]
    fn embedding_is_multiplicative() {
        let digits = 45;
        let a = KElem::b() + KElem::eps().scale(&rat_i64(3, 7));
        let c = KElem::b2() - KElem::one().scale(&rat_i64(1, 2));
        let lhs = (a.clone() * c.clone()).embed_complex(digits);
        let rhs = a.embed_complex(digits).mul(&c.embed_complex(digits));
        let tol = Fx::pow10_neg(digits - 2, lhs.bits());
        assert!(lhs.dist(&rhs) < tol);
    }

    #[test]
    fn torsion_parameters_match_exact_sets() {
        let eng = WeierstrassEngine::new(45).unwrap();
        for m in [1u32, 2] {
            let numeric = eng.p1_torsion_numeric(m).unwrap();
            let exact = crate::torsion::p1_torsion_exact(m).unwrap();
            assert_eq!(numeric.len(), exact.values.len());
            let tol = eng.tolerance(10);
            for u in &exact.values {
                let eu = u.embed_complex(45).with_bits(eng.bits());
                assert!(
                    numeric.iter().any(|v| v.dist(&eu) < tol),
                    "missing exact parameter in numeric set (m = {m})"
                );
            }
            assert!(eng.s3_closed(&numeric, &tol));
        }
    }

    #[test]
    fn order_three_torsion_has_26_values() {
        let eng = WeierstrassEngine::new(45).unwrap();
        let vals = eng.p1_torsion_numeric(3).unwrap();
        assert_eq!(vals.len(), 26);
        let tol = eng.tolerance(10);
        assert!(eng.s3_closed(&vals, &tol));
    }

    #[test]
    fn higher_order_cluster_counts() {
        // 3m^2 - 1 values, closed under the marked-line symmetries, up to
        // order 5.
        let eng = WeierstrassEngine::new(35).unwrap();
        let tol = eng.tolerance(8);
        for m in [4u32, 5] {
            let vals = eng.p1_torsion_numeric(m).unwrap();
            assert_eq!(vals.len(), (3 * m * m - 1) as usize);
            assert!(eng.s3_closed(&vals, &tol));
        }
    }
}
