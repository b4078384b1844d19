//! Arbitrary-precision evaluation of the Weierstrass functions of the
//! hexagonal lattice `Z[zeta]`, `zeta = e^(i pi / 3)`, and the numeric
//! equianharmonic torsion parameters for any order.
//!
//! The invariant `g_3` comes from the `E_6` q-series at the lattice's period
//! ratio; `g_2` vanishes by the lattice symmetry, which the engine verifies
//! through the `E_4` series. Evaluation reduces the argument to the Voronoi
//! cell around the origin and sums the Laurent series, whose coefficients
//! satisfy the classical quadratic recursion.

use num_bigint::BigInt;
use num_traits::Zero;

use super::complex::Cx;
use super::fixed::Fx;
use crate::numfield::Rat;
use crate::{Error, Result};

/// A point of the torus with exact rational coordinates in the `(1, zeta)`
/// basis.
pub type TorusCoord = (Rat, Rat);

pub struct WeierstrassEngine {
    pub digits: u32,
    bits: u32,
    /// Nonzero Laurent coefficients `(k, c_k)` of `wp = z^-2 + sum c_k z^(2k-2)`.
    coeffs: Vec<(u32, Fx)>,
    g3: Fx,
    /// `|E_4|` at the period ratio; a self-check that must be tiny.
    pub e4_residual: Fx,
    zeta: Cx,
}

impl WeierstrassEngine {
    pub fn new(digits: u32) -> Result<WeierstrassEngine> {
        let bits = (digits as f64 * 3.33).ceil() as u32 + 96;
        let pi = Fx::pi(bits);
        let sqrt3 = Fx::sqrt_int(3, bits);
        // q = exp(2 pi i zeta) = -exp(-pi sqrt(3)).
        let q = pi.mul(&sqrt3).neg().exp().neg();
        // E6 = 1 - 504 sum sigma_5(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n.
        let terms = (bits as f64 * std::f64::consts::LN_2 / 5.441).ceil() as u64 + 12;
        let mut e6 = Fx::one(bits);
        let mut e4 = Fx::one(bits);
        let mut qn = Fx::one(bits);
        for n in 1..=terms {
            qn = qn.mul(&q);
            let (s3, s5) = sigma35(n);
            e6 = e6.sub(&qn.mul(&sigma_fx(&s5, bits)).mul_int(504));
            e4 = e4.add(&qn.mul(&sigma_fx(&s3, bits)).mul_int(240));
        }
        let e4_residual = e4.abs();
        if e4_residual > Fx::pow10_neg(digits.saturating_sub(6).max(4), bits) {
            return Err(Error::InsufficientPrecision(digits * 2));
        }
        // g3 = (8/27) pi^6 E6.
        let pi2 = pi.mul(&pi);
        let pi6 = pi2.mul(&pi2).mul(&pi2);
        let g3 = pi6.mul(&e6).mul_int(8).div_int(27);
        // Laurent coefficients: c_2 = 0 (g2 = 0), c_3 = g3 / 28,
        // c_k = 3 / ((2k+1)(k-3)) * sum_{m=2}^{k-2} c_m c_{k-m}; only
        // k = 0 mod 3 survives. Compute until the tail is below one ulp at
        // the covering radius |z| = 1/sqrt(3).
        let kmax = (bits as f64 / 1.5).ceil() as usize + 24;
        let mut dense: Vec<Fx> = vec![Fx::zero(bits); kmax + 1];
        if kmax >= 3 {
            dense[3] = g3.div_int(28);
        }
        for k in 4..=kmax {
            if k % 3 != 0 {
                continue;
            }
            let mut acc = Fx::zero(bits);
            for m in 2..=(k - 2) {
                if m % 3 == 0 && (k - m) % 3 == 0 {
                    acc = acc.add(&dense[m].mul(&dense[k - m]));
                }
            }
            dense[k] = acc.mul_int(3).div_int(((2 * k + 1) * (k - 3)) as i64);
        }
        let coeffs: Vec<(u32, Fx)> = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c))
            .collect();
        let half = Fx::from_rat(&Rat::new(BigInt::from(1), BigInt::from(2)), bits);
        let zeta = Cx::new(half, sqrt3.div_int(2));
        Ok(WeierstrassEngine {
            digits,
            bits,
            coeffs,
            g3,
            e4_residual,
            zeta,
        })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn g3(&self) -> &Fx {
        &self.g3
    }

    /// Exact reduction to the Voronoi cell: subtracts the lattice point
    /// minimizing the hexagonal norm `u^2 + uv + v^2`.
    pub fn reduce(&self, p: &TorusCoord) -> TorusCoord {
        let norm = |u: &Rat, v: &Rat| -> Rat { u * u + u * v + v * v };
        let floor = |r: &Rat| -> BigInt { r.floor().to_integer() };
        let mut best: Option<(Rat, TorusCoord)> = None;
        for du in -1..=2i64 {
            for dv in -1..=2i64 {
                let pu = Rat::from_integer(floor(&p.0) + BigInt::from(du));
                let pv = Rat::from_integer(floor(&p.1) + BigInt::from(dv));
                let ru = &p.0 - &pu;
                let rv = &p.1 - &pv;
                let n = norm(&ru, &rv);
                if best.as_ref().map_or(true, |(bn, _)| n < *bn) {
                    best = Some((n, (ru, rv)));
                }
            }
        }
        best.expect("candidate set nonempty").1
    }

    fn to_cx(&self, p: &TorusCoord) -> Cx {
        let re = Fx::from_rat(&p.0, self.bits).add(&Fx::from_rat(&p.1, self.bits).div_int(2));
        let im = self.zeta.im.mul(&Fx::from_rat(&p.1, self.bits));
        Cx::new(re, im)
    }

    /// `wp(z)` and `wp'(z)` at an exact torus point.
    pub fn wp_pair(&self, p: &TorusCoord) -> Result<(Cx, Cx)> {
        let reduced = self.reduce(p);
        if num_traits::Zero::is_zero(&reduced.0) && num_traits::Zero::is_zero(&reduced.1) {
            return Err(Error::LatticePoint);
        }
        let z = self.to_cx(&reduced);
        let z2 = z.square();
        let one = Cx::from_int(1, self.bits);
        let inv_z2 = one.div(&z2);
        let inv_z3 = inv_z2.div(&z);
        let mut wp = inv_z2;
        let mut wpp = inv_z3.mul_int(-2);
        // Powers of z^2 on demand: z^(2k-2) and z^(2k-3).
        let mut pow = Cx::from_int(1, self.bits); // z^(2k-2) running, starts at k = 1
        let mut prev_k = 1u32;
        let z_inv = one.div(&z);
        for (k, c) in &self.coeffs {
            for _ in prev_k..*k {
                pow = pow.mul(&z2);
            }
            prev_k = *k;
            let term = Cx::new(pow.re.mul(c), pow.im.mul(c));
            wp = wp.add(&term);
            // derivative term: (2k-2) c z^(2k-3)
            let dterm = term.mul(&z_inv).mul_int((2 * k - 2) as i64);
            wpp = wpp.add(&dterm);
        }
        Ok((wp, wpp))
    }

    /// The two finite branch values of `wp'`, at the fixed points
    /// `(1+zeta)/3` and `(2+2 zeta)/3`; they are conjugate purely imaginary.
    pub fn branch_values(&self) -> Result<(Cx, Cx, Fx)> {
        let third = Rat::new(BigInt::from(1), BigInt::from(3));
        let p1 = (third.clone(), third);
        let (_, w1) = self.wp_pair(&p1)?;
        let two_thirds = Rat::new(BigInt::from(2), BigInt::from(3));
        let p2 = (two_thirds.clone(), two_thirds);
        let (_, w2) = self.wp_pair(&p2)?;
        // Purely imaginary, conjugate pair.
        let tol = self.tolerance(10);
        if w1.re.abs() > tol || w2.re.abs() > tol || w1.im.add(&w2.im).abs() > tol {
            return Err(Error::InsufficientPrecision(self.digits * 2));
        }
        let scale = w1.im.abs();
        Ok((w1, w2, scale))
    }

    pub fn tolerance(&self, lost_digits: u32) -> Fx {
        Fx::pow10_neg(self.digits.saturating_sub(lost_digits), self.bits)
    }

    /// Numeric equianharmonic `3m`-torsion parameters: values of the
    /// Moebius-normalized `wp'` at the `3m`-torsion points, clustered.
    pub fn p1_torsion_numeric(&self, m: u32) -> Result<Vec<Cx>> {
        let n = 3 * m as i64;
        let (w1, w2, _) = self.branch_values()?;
        let radius = Fx::pow10_neg(self.digits / 2, self.bits);
        let mut clusters: Vec<(Cx, usize)> = Vec::new();
        for a in 0..n {
            for c in 0..n {
                if a == 0 && c == 0 {
                    continue;
                }
                // Skip the two finite ramification points.
                if 3 * a == n && 3 * c == n {
                    continue;
                }
                if 3 * a == 2 * n && 3 * c == 2 * n {
                    continue;
                }
                let p = (
                    Rat::new(BigInt::from(a), BigInt::from(n)),
                    Rat::new(BigInt::from(c), BigInt::from(n)),
                );
                let (_, wp) = self.wp_pair(&p)?;
                // u = (w - w1) / (w - w2): sends the branch set to 0, inf, 1.
                let u = wp.sub(&w1).div(&wp.sub(&w2));
                match clusters.iter_mut().find(|(c0, _)| c0.dist(&u) < radius) {
                    Some((_, count)) => *count += 1,
                    None => clusters.push((u, 1)),
                }
            }
        }
        let expected = (3 * m * m - 1) as usize;
        if clusters.len() != expected || clusters.iter().any(|(_, c)| *c != 3) {
            return Err(Error::InsufficientPrecision(self.digits * 2));
        }
        // Separation sanity: distinct clusters must be far apart.
        let sep = self.tolerance(self.digits / 2);
        for i in 0..clusters.len() {
            for j in i + 1..clusters.len() {
                if clusters[i].0.dist(&clusters[j].0) < sep {
                    return Err(Error::InsufficientPrecision(self.digits * 2));
                }
            }
        }
        Ok(clusters.into_iter().map(|(c, _)| c).collect())
    }

    /// Checks the set is closed under `u -> 1 - u` and `u -> 1/u` within
    /// tolerance.
    pub fn s3_closed(&self, values: &[Cx], tol: &Fx) -> bool {
        let one = Cx::from_int(1, self.bits);
        values.iter().all(|u| {
            let a = one.sub(u);
            let b = one.div(u);
            values.iter().any(|v| v.dist(&a) < *tol) && values.iter().any(|v| v.dist(&b) < *tol)
        })
    }
}

/// `(sigma_3(n), sigma_5(n))` as big integers.
fn sigma35(n: u64) -> (BigInt, BigInt) {
    let mut s3 = BigInt::zero();
    let mut s5 = BigInt::zero();
    for d in 1..=n {
        if n % d == 0 {
            let b = BigInt::from(d);
            let d3 = &b * &b * &b;
            s5 += &d3 * &b * &b;
            s3 += d3;
        }
    }
    (s3, s5)
}

fn sigma_fx(s: &BigInt, bits: u32) -> Fx {
    Fx::from_rat(&Rat::from_integer(s.clone()), bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn engine_self_checks() {
        let eng = WeierstrassEngine::new(50).unwrap();
        // E4 at the hexagonal period ratio vanishes.
        assert!(eng.e4_residual < eng.tolerance(8));
        // g3 is real positive here and wp' is odd.
        assert!(!eng.g3().is_negative());
        let p = (rat(1, 5), rat(2, 7));
        let q = (rat(-1, 5), rat(-2, 7));
        let (wp_p, wpp_p) = eng.wp_pair(&p).unwrap();
        let (wp_q, wpp_q) = eng.wp_pair(&q).unwrap();
        let tol = eng.tolerance(10);
        assert!(wp_p.dist(&wp_q) < tol);
        assert!(wpp_p.add(&wpp_q).abs().mul(&Fx::one(eng.bits())) < tol.mul_int(2));
        assert!(matches!(
            eng.wp_pair(&(rat(2, 1), rat(-3, 1))),
            Err(Error::LatticePoint)
        ));
    }

    #[test]
    fn differential_identity() {
        let eng = WeierstrassEngine::new(50).unwrap();
        let tol = eng.tolerance(12);
        // 20 seeded non-lattice points.
        let mut state = 0x9e37u64;
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            state >> 17
        };
        let mut checked = 0;
        while checked < 20 {
            let d = 5 + (next() % 9) as i64;
            let p = (rat((next() % 23) as i64, d), rat((next() % 23) as i64, d));
            let Ok((wp, wpp)) = eng.wp_pair(&p) else {
                continue;
            };
            // wp'^2 = 4 wp^3 - g3 (g2 = 0 for this lattice).
            let lhs = wpp.square();
            let rhs = wp
                .square()
                .mul(&wp)
                .mul_int(4)
                .sub(&Cx::new(eng.g3().clone(), Fx::zero(eng.bits())));
            assert!(lhs.dist(&rhs) < tol, "residual too large at {p:?}");
            checked += 1;
        }
    }

    #[test]
    fn lattice_rotation_equivariance() {
        // With s = zeta^2 a lattice unit: wp(sz) = s^-2 wp(z) = zeta^2 wp(z)
        // and wp'(sz) = s^-3 wp'(z) = wp'(z), since zeta^6 = 1.
        let eng = WeierstrassEngine::new(50).unwrap();
        let p = (rat(1, 5), rat(1, 7));
        // (a + c zeta) * zeta^2 = (-a - c) + a zeta.
        let rotated = (-(rat(1, 5)) - rat(1, 7), rat(1, 5));
        let (wp_p, wpp_p) = eng.wp_pair(&p).unwrap();
        let (wp_r, wpp_r) = eng.wp_pair(&rotated).unwrap();
        let tol = eng.tolerance(10);
        let zeta2 = eng.zeta.mul(&eng.zeta);
        assert!(wp_r.dist(&wp_p.mul(&zeta2)) < tol);
        assert!(wpp_r.dist(&wpp_p) < tol);
    }

    #[test]
    fn branch_values_are_conjugate_imaginary() {
        let eng = WeierstrassEngine::new(50).unwrap();
        let (w1, w2, scale) = eng.branch_values().unwrap();
        assert!(!scale.is_negative());
        assert!(w1.re.abs() < eng.tolerance(10));
        assert!(w1.im.add(&w2.im).abs() < eng.tolerance(10));
    }
}
