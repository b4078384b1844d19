//! Exact arithmetic in the degree-6 field `K = Q(e, b)` where `e^2 + e + 1 = 0`
//! (so `e` is a primitive cube root of unity) and `b^3 = 2`.
//!
//! Elements are stored as six reduced big rationals, the coordinates in the
//! fixed basis `(1, e, b, e*b, b^2, e*b^2)`. Two elements are equal iff all
//! six coordinates are equal, so equality is structural and exact.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Exact rational scalar.
pub type Rat = BigRational;

/// Element of `K = Q(e, b)` in the basis `(1, e, b, e*b, b^2, e*b^2)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct KElem {
    coords: [Rat; 6],
}

/// Basis index of `e^i * b^j` for `i < 2`, `j < 3`.
#[inline]
fn idx(i: usize, j: usize) -> usize {
    2 * j + i
}

pub fn rat_i64(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

impl KElem {
    pub fn new(coords: [Rat; 6]) -> Self {
        KElem { coords }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The primitive cube root of unity `e`.
    pub fn eps() -> Self {
        let mut k = Self::zero();
        k.coords[idx(1, 0)] = Rat::one();
        k
    }

    /// `e^2 = -1 - e`.
    pub fn eps2() -> Self {
        let mut k = Self::zero();
        k.coords[idx(0, 0)] = -Rat::one();
        k.coords[idx(1, 0)] = -Rat::one();
        k
    }

    /// The real cube root of 2.
    pub fn b() -> Self {
        let mut k = Self::zero();
        k.coords[idx(0, 1)] = Rat::one();
        k
    }

    /// `b^2`.
    pub fn b2() -> Self {
        let mut k = Self::zero();
        k.coords[idx(0, 2)] = Rat::one();
        k
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    pub fn from_rat(r: Rat) -> Self {
        let mut k = Self::zero();
        k.coords[0] = r;
        k
    }

    /// Convenience constructor for `n/d` as an element of `K`.
    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rat(rat_i64(n, d))
    }

    pub fn coords(&self) -> &[Rat; 6] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// True when the element lies in `Q`.
    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut out = self.clone();
        for c in out.coords.iter_mut() {
            *c *= r;
        }
        out
    }

    /// Exact multiplicative inverse. Rational, quadratic-subfield and
    /// monomial elements take closed-form paths; everything else solves the
    /// 6x6 system "multiply by self = 1".
    pub fn inv(&self) -> Result<KElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(fast) = self.inv_fast() {
            return Ok(fast);
        }
        // Column k of the matrix is self * basis_k in coordinates.
        let mut m: [[Rat; 6]; 6] = std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()));
        for (k, col) in basis_elems().iter().enumerate() {
            let prod = self.clone() * col.clone();
            for r in 0..6 {
                m[r][k] = prod.coords[r].clone();
            }
        }
        let mut rhs = [
            Rat::one(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
        ];
        solve6(&mut m, &mut rhs).ok_or(Error::DivisionByZero)?;
        Ok(KElem::new(rhs))
    }

    /// Closed-form inverses for the shapes that dominate in practice.
    fn inv_fast(&self) -> Option<KElem> {
        let c = &self.coords;
        let b_free = c[2].is_zero() && c[3].is_zero() && c[4].is_zero() && c[5].is_zero();
        if b_free {
            // x + y*e: conjugate over Q is x + y*e^2 = (x - y) - y*e;
            // norm = x^2 - xy + y^2.
            let (x, y) = (&c[0], &c[1]);
            let norm = x * x - x * y + y * y;
            if norm.is_zero() {
                return None;
            }
            let mut out = KElem::zero();
            out.coords[0] = (x - y) / &norm;
            out.coords[1] = -y / &norm;
            return Some(out);
        }
        // Monomial r * e^i * b^j (with i encoded as a pure 1 or e slot).
        let nonzero: Vec<usize> = (0..6).filter(|&k| !c[k].is_zero()).collect();
        if nonzero.len() == 1 {
            let k = nonzero[0];
            let (i, j) = (k % 2, k / 2);
            // (e^i b^j)^{-1} = e^{-i} b^{-j} = e^{(3-i) mod 3} * b^{3-j}/2.
            let r_inv = c[k].recip();
            let mut out = if i == 0 { KElem::one() } else { KElem::eps2() };
            if j > 0 {
                let bpow = KElem::b().pow((3 - j) as u32);
                out = out * bpow.scale(&Rat::new(BigInt::one(), BigInt::from(2)));
            }
            return Some(out.scale(&r_inv));
        }
        None
    }

    pub fn div(&self, other: &KElem) -> Result<KElem> {
        Ok(self.clone() * other.inv()?)
    }

    pub fn pow(&self, mut n: u32) -> KElem {
        let mut base = self.clone();
        let mut acc = KElem::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            n >>= 1;
        }
        acc
    }

    /// Monic minimal polynomial over `Q`, as coefficients in ascending order.
    ///
    /// The degree divides 6; it is found as the first linear dependence among
    /// the powers `1, a, a^2, ...` by exact Gaussian elimination.
    pub fn minimal_polynomial(&self) -> Vec<Rat> {
        let mut powers: Vec<KElem> = vec![KElem::one()];
        for _ in 0..6 {
            powers.push(powers.last().unwrap().clone() * self.clone());
        }
        for d in 1..=6usize {
            // Try to write a^d as a rational combination of 1, a, ..., a^(d-1).
            if let Some(sol) = solve_rectangular(&powers[..d], &powers[d]) {
                let mut coeffs: Vec<Rat> = sol.into_iter().map(|c| -c).collect();
                coeffs.push(Rat::one());
                return coeffs;
            }
        }
        unreachable!("every element of K has degree at most 6");
    }

    /// Evaluates a rational polynomial (ascending coefficients) at this element.
    pub fn eval_rat_poly(&self, coeffs: &[Rat]) -> KElem {
        let mut acc = KElem::zero();
        for c in coeffs.iter().rev() {
            acc = acc * self.clone() + KElem::from_rat(c.clone());
        }
        acc
    }

    /// The orbit of this element under the six field automorphisms, with
    /// duplicates removed. Ordering of automorphisms is the fixed one of
    /// [`automorphisms`].
    pub fn galois_conjugates(&self) -> Vec<KElem> {
        let mut out: Vec<KElem> = Vec::new();
        for auto in automorphisms() {
            let im = auto.apply(self);
            if !out.contains(&im) {
                out.push(im);
            }
        }
        out
    }

    /// Common denominator of all six coordinates.
    pub fn denom_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for c in &self.coords {
            l = num_integer::lcm(l, c.denom().clone());
        }
        l
    }

    /// Gcd of the numerators once coordinates share the denominator `den`.
    pub fn numer_gcd_scaled(&self, den: &BigInt) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coords {
            let scaled = c * Rat::from_integer(den.clone());
            debug_assert!(scaled.denom().is_one());
            g = num_integer::gcd(g, scaled.numer().clone());
        }
        g
    }
}

fn basis_elems() -> [KElem; 6] {
    let mut out: [KElem; 6] = Default::default();
    for (k, slot) in out.iter_mut().enumerate() {
        let mut e = KElem::zero();
        e.coords[k] = Rat::one();
        *slot = e;
    }
    out
}

/// Gaussian elimination for the square 6x6 system `m * x = rhs`.
fn solve6(m: &mut [[Rat; 6]; 6], rhs: &mut [Rat; 6]) -> Option<()> {
    for col in 0..6 {
        let pivot = (col..6).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = m[col][col].recip();
        for c in col..6 {
            m[col][c] = &m[col][c] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..6 {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..6 {
                    let t = &m[col][c] * &f;
                    m[r][c] = &m[r][c] - t;
                }
                let t = &rhs[col] * &f;
                rhs[r] = &rhs[r] - t;
            }
        }
    }
    Some(())
}

/// Solves `sum_k x_k * cols[k] = target` over `Q` if consistent, where the
/// columns are elements of `K` viewed as vectors in `Q^6`.
fn solve_rectangular(cols: &[KElem], target: &KElem) -> Option<Vec<Rat>> {
    let n = cols.len();
    // Augmented 6 x (n+1) matrix.
    let mut m: Vec<Vec<Rat>> = (0..6)
        .map(|r| {
            let mut row: Vec<Rat> = cols.iter().map(|c| c.coords[r].clone()).collect();
            row.push(target.coords[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if let Some(p) = (row..6).find(|&r| !m[r][col].is_zero()) {
            m.swap(row, p);
            let inv = m[row][col].recip();
            for c in col..=n {
                m[row][c] = &m[row][c] * &inv;
            }
            for r in 0..6 {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=n {
                        let t = &m[row][c] * &f;
                        m[r][c] = &m[r][c] - t;
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
        }
    }
    // Inconsistent if a zero row has nonzero rhs.
    for r in row..6 {
        if !m[r][n].is_zero() {
            return None;
        }
    }
    // Free columns would make the powers dependent before target; with powers
    // of a single element the leading columns are independent, so every column
    // must have a pivot for a unique solution.
    if pivots.len() < n {
        return None;
    }
    let mut sol = vec![Rat::zero(); n];
    for (r, c) in pivots {
        sol[c] = m[r][n].clone();
    }
    Some(sol)
}

// ---------------------------------------------------------------------------
// Galois action
// ---------------------------------------------------------------------------

/// A field automorphism of `K`, determined by the images of `e` and `b`.
#[derive(Clone, Debug)]
pub struct Automorphism {
    /// Images of the six basis elements.
    basis_images: [KElem; 6],
    /// (exponent of e in image of e, exponent of e in image of b).
    pub label: (u8, u8),
}

impl Automorphism {
    fn new(eps_pow: u8, b_twist: u8) -> Self {
        let eps_im = if eps_pow == 1 {
            KElem::eps()
        } else {
            KElem::eps2()
        };
        let b_im = KElem::eps().pow(b_twist as u32) * KElem::b();
        let mut basis_images: [KElem; 6] = Default::default();
        for j in 0..3 {
            for i in 0..2 {
                basis_images[idx(i, j)] = eps_im.pow(i as u32) * b_im.pow(j as u32);
            }
        }
        Automorphism {
            basis_images,
            label: (eps_pow, b_twist),
        }
    }

    pub fn apply(&self, a: &KElem) -> KElem {
        let mut out = KElem::zero();
        for k in 0..6 {
            if !a.coords[k].is_zero() {
                out += self.basis_images[k].scale(&a.coords[k]);
            }
        }
        out
    }
}

/// The six automorphisms of `K/Q`, in the fixed order
/// `(e -> e^i, b -> e^j b)` for `i = 1, 2` and `j = 0, 1, 2`.
pub fn automorphisms() -> Vec<Automorphism> {
    let mut out = Vec::with_capacity(6);
    for i in 1..=2 {
        for j in 0..3 {
            out.push(Automorphism::new(i, j));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Ring operators
// ---------------------------------------------------------------------------

impl Add for KElem {
    type Output = KElem;
    fn add(mut self, rhs: KElem) -> KElem {
        self += rhs;
        self
    }
}

impl AddAssign for KElem {
    fn add_assign(&mut self, rhs: KElem) {
        for (a, b) in self.coords.iter_mut().zip(rhs.coords) {
            *a += b;
        }
    }
}

impl Sub for KElem {
    type Output = KElem;
    fn sub(mut self, rhs: KElem) -> KElem {
        self -= rhs;
        self
    }
}

impl SubAssign for KElem {
    fn sub_assign(&mut self, rhs: KElem) {
        for (a, b) in self.coords.iter_mut().zip(rhs.coords) {
            *a -= b;
        }
    }
}

impl Neg for KElem {
    type Output = KElem;
    fn neg(mut self) -> KElem {
        for c in self.coords.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for KElem {
    type Output = KElem;
    fn mul(self, rhs: KElem) -> KElem {
        let mut out = KElem::zero();
        for j1 in 0..3 {
            for i1 in 0..2 {
                let a = &self.coords[idx(i1, j1)];
                if a.is_zero() {
                    continue;
                }
                for j2 in 0..3 {
                    for i2 in 0..2 {
                        let b = &rhs.coords[idx(i2, j2)];
                        if b.is_zero() {
                            continue;
                        }
                        let mut coeff = a * b;
                        let mut j = j1 + j2;
                        if j >= 3 {
                            // b^3 = 2
                            j -= 3;
                            coeff *= Rat::from_integer(BigInt::from(2));
                        }
                        let i = i1 + i2;
                        if i < 2 {
                            out.coords[idx(i, j)] += coeff;
                        } else {
                            // e^2 = -1 - e
                            out.coords[idx(0, j)] -= coeff.clone();
                            out.coords[idx(1, j)] -= coeff;
                        }
                    }
                }
            }
        }
        out
    }
}

impl MulAssign for KElem {
    fn mul_assign(&mut self, rhs: KElem) {
        *self = self.clone() * rhs;
    }
}

impl<'a> Mul<&'a KElem> for &'a KElem {
    type Output = KElem;
    fn mul(self, rhs: &'a KElem) -> KElem {
        self.clone() * rhs.clone()
    }
}

// ---------------------------------------------------------------------------
// Display and serialization
// ---------------------------------------------------------------------------

const DISPLAY_NAMES: [&str; 9] = [
    "", "e", "e^2", "b", "e*b", "e^2*b", "b^2", "e*b^2", "e^2*b^2",
];
const DISPLAY_NAMES_TEX: [&str; 9] = [
    "",
    "\\eps",
    "\\eps^2",
    "b",
    "\\eps b",
    "\\eps^2 b",
    "b^2",
    "\\eps b^2",
    "\\eps^2 b^2",
];

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl KElem {
    /// Terms for display: per power of `b`, the pair `(x + y e)` is shown in
    /// whichever of the spanning pairs `{1, e}` or `{1, e^2}` uses fewer
    /// terms, so e.g. `-1 - e` prints as `e^2`. Yields `(coefficient, name
    /// index)` with name indices into [`DISPLAY_NAMES`].
    fn display_terms(&self) -> Vec<(Rat, usize)> {
        let mut out = Vec::new();
        for j in 0..3usize {
            let x = &self.coords[idx(0, j)];
            let y = &self.coords[idx(1, j)];
            // x + y e = (x - y) - y e^2.
            let alt0 = x - y;
            let alt2 = -y.clone();
            let count_std = usize::from(!x.is_zero()) + usize::from(!y.is_zero());
            let count_alt = usize::from(!alt0.is_zero()) + usize::from(!alt2.is_zero());
            if count_alt < count_std {
                if !alt0.is_zero() {
                    out.push((alt0, 3 * j));
                }
                if !alt2.is_zero() {
                    out.push((alt2, 3 * j + 2));
                }
            } else {
                if !x.is_zero() {
                    out.push((x.clone(), 3 * j));
                }
                if !y.is_zero() {
                    out.push((y.clone(), 3 * j + 1));
                }
            }
        }
        out
    }

    fn render(&self, names: &[&str; 9], mul: &str) -> String {
        let terms = self.display_terms();
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (c, k) in terms {
            let mag = c.abs();
            let mut piece = String::new();
            if mag.is_one() && !names[k].is_empty() {
                piece.push_str(names[k]);
            } else {
                piece.push_str(&fmt_rat(&mag));
                if !names[k].is_empty() {
                    piece.push_str(mul);
                    piece.push_str(names[k]);
                }
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push('-');
            } else {
                out.push('+');
            }
            out.push_str(&piece);
        }
        out
    }

    /// Plain-text rendering, e.g. `1-e*b`.
    pub fn render_plain(&self) -> String {
        self.render(&DISPLAY_NAMES, "*")
    }

    /// LaTeX rendering using `\eps` for the cube root of unity.
    pub fn render_latex(&self) -> String {
        self.render(&DISPLAY_NAMES_TEX, " ")
    }

    /// The number of displayed terms.
    pub fn term_count(&self) -> usize {
        self.display_terms().len()
    }

    /// For an element displayed as a single term, whether that term is
    /// negative.
    pub fn single_term_negative(&self) -> Option<bool> {
        let terms = self.display_terms();
        match terms.as_slice() {
            [(c, _)] => Some(c.is_negative()),
            _ => None,
        }
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_plain())
    }
}

impl fmt::Debug for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({})", self.render_plain())
    }
}

impl Serialize for KElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coords.iter().map(fmt_rat).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for KElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strings: Vec<String> = Vec::deserialize(d)?;
        if strings.len() != 6 {
            return Err(D::Error::custom("expected 6 coordinates"));
        }
        let mut coords: [Rat; 6] = Default::default();
        for (slot, s) in coords.iter_mut().zip(&strings) {
            *slot = parse_rat(s).map_err(D::Error::custom)?;
        }
        Ok(KElem::new(coords))
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Check(format!("bad rational literal: {s}")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Check("zero denominator".into()));
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau() -> KElem {
        // -e * (b*e^2 - 1) / (b*e - 1)
        let num = -KElem::eps() * (KElem::b() * KElem::eps2() - KElem::one());
        let den = KElem::b() * KElem::eps() - KElem::one();
        num.div(&den).unwrap()
    }

    #[test]
    fn defining_relations() {
        assert_eq!(KElem::eps() * KElem::eps2(), KElem::one());
        assert_eq!(KElem::b() * KElem::b2(), KElem::from_int(2));
        let one_plus_e = KElem::one() + KElem::eps();
        let one_plus_e2 = KElem::one() + KElem::eps2();
        assert_eq!(one_plus_e * one_plus_e2, KElem::one());
        assert_eq!(KElem::one() + KElem::eps() + KElem::eps2(), KElem::zero());
    }

    #[test]
    fn inverse_of_b() {
        let inv = KElem::b().inv().unwrap();
        assert_eq!(inv, KElem::b2().scale(&rat_i64(1, 2)));
        assert_eq!(inv * KElem::b(), KElem::one());
    }

    #[test]
    fn inverse_paths_agree_across_shapes() {
        let samples = [
            KElem::from_frac(-7, 3),
            KElem::eps().scale(&rat_i64(5, 2)) + KElem::from_int(1),
            KElem::b2().scale(&rat_i64(-3, 4)),
            KElem::eps() * KElem::b(),
            KElem::b() + KElem::eps2().scale(&rat_i64(2, 7)),
            tau(),
        ];
        for a in samples {
            let inv = a.inv().unwrap();
            assert!((a * inv).is_one());
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(KElem::one().div(&KElem::zero()), Err(Error::DivisionByZero));
        assert_eq!(KElem::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn minimal_polynomials_of_generators() {
        let p = KElem::eps().minimal_polynomial();
        assert_eq!(p, vec![rat_i64(1, 1), rat_i64(1, 1), rat_i64(1, 1)]);
        let q = KElem::b().minimal_polynomial();
        assert_eq!(
            q,
            vec![rat_i64(-2, 1), rat_i64(0, 1), rat_i64(0, 1), rat_i64(1, 1)]
        );
        assert_eq!(KElem::from_int(5).minimal_polynomial().len(), 2);
    }

    #[test]
    fn minimal_polynomial_of_tau() {
        // x^6 - 3x^5 + 60x^4 - 115x^3 + 60x^2 - 3x + 1, which also equals
        // (x^2 - x - 1)^3 + 60x^2(x - 1)^2 + 2.
        let p = tau().minimal_polynomial();
        let expect: Vec<Rat> = [1, -3, 60, -115, 60, -3, 1]
            .iter()
            .map(|&n| rat_i64(n, 1))
            .collect();
        assert_eq!(p, expect);
        for n in -4i64..=4 {
            let x = rat_i64(n, 1);
            let direct: Rat = expect
                .iter()
                .enumerate()
                .map(|(k, c)| c * num_traits::pow(x.clone(), k))
                .sum();
            let inner = &x * &x - &x - Rat::one();
            let corr = rat_i64(60, 1) * &x * &x * num_traits::pow(&x - Rat::one(), 2);
            let via = num_traits::pow(inner, 3) + corr + rat_i64(2, 1);
            assert_eq!(direct, via);
        }
    }

    #[test]
    fn minimal_polynomial_vanishes_on_element() {
        for a in [
            KElem::eps(),
            KElem::b(),
            tau(),
            KElem::b() + KElem::eps(),
            KElem::from_frac(7, 3),
        ] {
            let p = a.minimal_polynomial();
            assert!(a.eval_rat_poly(&p).is_zero());
        }
    }

    #[test]
    fn conjugate_orbits() {
        assert_eq!(KElem::one().galois_conjugates(), vec![KElem::one()]);
        let orbit = KElem::eps().galois_conjugates();
        assert_eq!(orbit.len(), 2);
        assert!(orbit.contains(&KElem::eps()) && orbit.contains(&KElem::eps2()));
        let b_orbit = KElem::b().galois_conjugates();
        assert_eq!(b_orbit.len(), 3);
    }

    #[test]
    fn conjugates_of_tau_match_its_minimal_polynomial() {
        let t = tau();
        let orbit = t.galois_conjugates();
        assert_eq!(orbit.len(), 6);
        // Expand prod (x - t_i) in K[x] and compare with the minimal polynomial.
        let mut poly = vec![KElem::one()];
        for root in &orbit {
            let mut next = vec![KElem::zero(); poly.len() + 1];
            for (k, c) in poly.iter().enumerate() {
                next[k + 1] += c.clone();
                next[k] -= c.clone() * root.clone();
            }
            poly = next;
        }
        let minpoly = t.minimal_polynomial();
        assert_eq!(poly.len(), minpoly.len());
        for (c, m) in poly.iter().zip(&minpoly) {
            assert_eq!(c, &KElem::from_rat(m.clone()));
        }
    }

    #[test]
    fn automorphisms_respect_products() {
        let pairs = [
            (KElem::eps() + KElem::b(), KElem::b2() - KElem::one()),
            (tau(), KElem::eps() * KElem::b()),
        ];
        for auto in automorphisms() {
            for (a, c) in &pairs {
                assert_eq!(
                    auto.apply(&(a.clone() * c.clone())),
                    auto.apply(a) * auto.apply(c)
                );
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let a = tau().scale(&rat_i64(-3, 7)) + KElem::b();
        let json = serde_json::to_string(&a).unwrap();
        let back: KElem = serde_json::from_str(&json).unwrap();
        assert_eq!(a, back);
        // Denominators positive and reduced comes with BigRational's invariants.
        for c in back.coords() {
            assert!(c.denom() > &BigInt::zero());
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(KElem::zero().render_plain(), "0");
        assert_eq!(
            (KElem::one() - KElem::eps() * KElem::b()).render_plain(),
            "1-e*b"
        );
        assert_eq!(KElem::b2().scale(&rat_i64(1, 2)).render_plain(), "1/2*b^2");
    }
}
