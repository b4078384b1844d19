//! Ternary cubic forms in `x, y, z` over `K`, together with the linear and
//! quadratic forms that show up around them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::numfield::{KElem, Rat};
use crate::{Error, Result};

/// Exponent triples of the ten cubic monomials, in the fixed serialization
/// order `[x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3]`.
pub const MONOMIALS: [(u8, u8, u8); 10] = [
    (3, 0, 0),
    (2, 1, 0),
    (2, 0, 1),
    (1, 2, 0),
    (1, 1, 1),
    (1, 0, 2),
    (0, 3, 0),
    (0, 2, 1),
    (0, 1, 2),
    (0, 0, 3),
];

/// Monomial indices by name, for readable constant tables.
pub mod mono {
    pub const X3: usize = 0;
    pub const X2Y: usize = 1;
    pub const X2Z: usize = 2;
    pub const XY2: usize = 3;
    pub const XYZ: usize = 4;
    pub const XZ2: usize = 5;
    pub const Y3: usize = 6;
    pub const Y2Z: usize = 7;
    pub const YZ2: usize = 8;
    pub const Z3: usize = 9;
}

/// A linear form `a*x + b*y + c*z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinForm(pub [KElem; 3]);

/// A quadratic form with coefficients in the order
/// `[x^2, xy, xz, y^2, yz, z^2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadForm(pub [KElem; 6]);

/// Homogeneous cubic form in `x, y, z` with ten `K` coefficients in the
/// order of [`MONOMIALS`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TernaryCubic {
    coeffs: [KElem; 10],
}

impl LinForm {
    pub fn eval(&self, p: &[KElem; 3]) -> KElem {
        let mut acc = KElem::zero();
        for (c, x) in self.0.iter().zip(p) {
            acc += c * x;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, k: &KElem) -> LinForm {
        LinForm([&self.0[0] * k, &self.0[1] * k, &self.0[2] * k])
    }

    pub fn mul_lin(&self, other: &LinForm) -> QuadForm {
        let a = &self.0;
        let b = &other.0;
        QuadForm([
            &a[0] * &b[0],
            &a[0] * &b[1] + &a[1] * &b[0],
            &a[0] * &b[2] + &a[2] * &b[0],
            &a[1] * &b[1],
            &a[1] * &b[2] + &a[2] * &b[1],
            &a[2] * &b[2],
        ])
    }
}

impl QuadForm {
    pub fn zero() -> Self {
        QuadForm(Default::default())
    }

    pub fn eval(&self, p: &[KElem; 3]) -> KElem {
        let [x, y, z] = p;
        let m = [x * x, x * y, x * z, y * y, y * z, z * z];
        let mut acc = KElem::zero();
        for (c, v) in self.0.iter().zip(m) {
            acc += c.clone() * v;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &QuadForm) -> QuadForm {
        let mut out = self.clone();
        for (a, b) in out.0.iter_mut().zip(&other.0) {
            *a += b.clone();
        }
        out
    }

    pub fn scale(&self, k: &KElem) -> QuadForm {
        let mut out = self.clone();
        for c in out.0.iter_mut() {
            *c = c.clone() * k.clone();
        }
        out
    }

    pub fn mul_lin(&self, l: &LinForm) -> TernaryCubic {
        // Quadratic monomial exponents in coefficient order.
        const QM: [(u8, u8, u8); 6] = [
            (2, 0, 0),
            (1, 1, 0),
            (1, 0, 1),
            (0, 2, 0),
            (0, 1, 1),
            (0, 0, 2),
        ];
        let mut out = TernaryCubic::zero();
        for (qi, qc) in self.0.iter().enumerate() {
            if qc.is_zero() {
                continue;
            }
            for (li, lc) in l.0.iter().enumerate() {
                if lc.is_zero() {
                    continue;
                }
                let (mut a, mut b, mut c) = QM[qi];
                match li {
                    0 => a += 1,
                    1 => b += 1,
                    _ => c += 1,
                }
                let idx = monomial_index(a, b, c);
                out.coeffs[idx] += qc * lc;
            }
        }
        out
    }

    /// Determinant of the associated symmetric 3x3 matrix; nonzero iff the
    /// conic is irreducible (rank 3).
    pub fn sym_det(&self) -> KElem {
        let half = KElem::from_frac(1, 2);
        let a = self.0[0].clone();
        let b = self.0[3].clone();
        let c = self.0[5].clone();
        let d = &self.0[1] * &half;
        let e = &self.0[2] * &half;
        let f = &self.0[4] * &half;
        // | a d e |
        // | d b f |
        // | e f c |
        a * (&b * &c - &f * &f) - d.clone() * (&d * &c - &f * &e) + e.clone() * (&d * &f - &b * &e)
    }

    /// Exact division by a linear form; `None` when the form is not a factor.
    pub fn div_lin(&self, l: &LinForm) -> Option<LinForm> {
        // Solve self = l * q for q by linear algebra on the 6 coefficients.
        // Pick the first nonzero coefficient of l and eliminate.
        let pivot = l.0.iter().position(|c| !c.is_zero())?;
        let pinv = l.0[pivot].inv().ok()?;
        // q = (q0, q1, q2); expand l*q and match coefficients, solving in the
        // order that each q component first appears.
        let mut q: [KElem; 3] = Default::default();
        // Coefficient of x_pivot^2 in product is l[pivot]*q[pivot].
        let sq_idx = [0usize, 3, 5][pivot];
        q[pivot] = &self.0[sq_idx] * &pinv;
        for j in 0..3 {
            if j == pivot {
                continue;
            }
            // coefficient of x_pivot * x_j is l[pivot]*q[j] + l[j]*q[pivot]
            let mixed = mixed_index(pivot, j);
            let val = self.0[mixed].clone() - &l.0[j] * &q[pivot];
            q[j] = val * pinv.clone();
        }
        let cand = LinForm(q);
        if l.mul_lin(&cand) == *self {
            Some(cand)
        } else {
            None
        }
    }
}

fn mixed_index(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 1,
        (0, 2) => 2,
        (1, 2) => 4,
        _ => unreachable!(),
    }
}

pub fn monomial_index(a: u8, b: u8, c: u8) -> usize {
    MONOMIALS
        .iter()
        .position(|&m| m == (a, b, c))
        .expect("exponents must sum to 3")
}

impl TernaryCubic {
    pub fn zero() -> Self {
        TernaryCubic {
            coeffs: Default::default(),
        }
    }

    pub fn new(coeffs: [KElem; 10]) -> Self {
        TernaryCubic { coeffs }
    }

    /// Builds a cubic from `(monomial index, coefficient)` pairs.
    pub fn from_terms(terms: &[(usize, KElem)]) -> Self {
        let mut c = Self::zero();
        for (idx, coeff) in terms {
            c.coeffs[*idx] += coeff.clone();
        }
        c
    }

    pub fn coeffs(&self) -> &[KElem; 10] {
        &self.coeffs
    }

    pub fn coeff(&self, idx: usize) -> &KElem {
        &self.coeffs[idx]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &TernaryCubic) -> TernaryCubic {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b.clone();
        }
        out
    }

    pub fn sub(&self, other: &TernaryCubic) -> TernaryCubic {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b.clone();
        }
        out
    }

    pub fn scale(&self, k: &KElem) -> TernaryCubic {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = c.clone() * k.clone();
        }
        out
    }

    pub fn eval(&self, p: &[KElem; 3]) -> KElem {
        let [x, y, z] = p;
        let mut acc = KElem::zero();
        for (k, &(a, b, c)) in MONOMIALS.iter().enumerate() {
            if self.coeffs[k].is_zero() {
                continue;
            }
            let m = x.pow(a as u32) * y.pow(b as u32) * z.pow(c as u32);
            acc += self.coeffs[k].clone() * m;
        }
        acc
    }

    /// The three partial derivatives as quadratic forms.
    pub fn partials(&self) -> [QuadForm; 3] {
        let mut out = [QuadForm::zero(), QuadForm::zero(), QuadForm::zero()];
        const QM: [(u8, u8, u8); 6] = [
            (2, 0, 0),
            (1, 1, 0),
            (1, 0, 1),
            (0, 2, 0),
            (0, 1, 1),
            (0, 0, 2),
        ];
        for (k, &(a, b, c)) in MONOMIALS.iter().enumerate() {
            if self.coeffs[k].is_zero() {
                continue;
            }
            let exps = [a, b, c];
            for v in 0..3 {
                if exps[v] == 0 {
                    continue;
                }
                let mut e = exps;
                e[v] -= 1;
                let qi = QM.iter().position(|&m| m == (e[0], e[1], e[2])).unwrap();
                let factor = KElem::from_int(exps[v] as i64);
                out[v].0[qi] += self.coeffs[k].clone() * factor;
            }
        }
        out
    }

    pub fn gradient(&self, p: &[KElem; 3]) -> [KElem; 3] {
        let parts = self.partials();
        [parts[0].eval(p), parts[1].eval(p), parts[2].eval(p)]
    }

    /// Second partial `d^2 C / dx_i dx_j` as a linear form.
    fn second_partial(&self, i: usize, j: usize) -> LinForm {
        let mut out = LinForm(Default::default());
        for (k, &(a, b, c)) in MONOMIALS.iter().enumerate() {
            if self.coeffs[k].is_zero() {
                continue;
            }
            let mut e = [a as i8, b as i8, c as i8];
            let mut factor = 1i64;
            for v in [i, j] {
                if e[v] == 0 {
                    factor = 0;
                    break;
                }
                factor *= e[v] as i64;
                e[v] -= 1;
            }
            if factor == 0 {
                continue;
            }
            let v = e.iter().position(|&x| x == 1).unwrap();
            out.0[v] += self.coeffs[k].clone() * KElem::from_int(factor);
        }
        out
    }

    /// Determinant of the matrix of second partials, a ternary cubic.
    pub fn hessian_det(&self) -> TernaryCubic {
        let h: Vec<Vec<LinForm>> = (0..3)
            .map(|i| (0..3).map(|j| self.second_partial(i, j)).collect())
            .collect();
        let mut out = TernaryCubic::zero();
        const PERMS: [([usize; 3], i64); 6] = [
            ([0, 1, 2], 1),
            ([0, 2, 1], -1),
            ([1, 0, 2], -1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
            ([2, 1, 0], -1),
        ];
        for (perm, sign) in PERMS {
            let prod = h[0][perm[0]]
                .mul_lin(&h[1][perm[1]])
                .mul_lin(&h[2][perm[2]]);
            let signed = prod.scale(&KElem::from_int(sign));
            out = out.add(&signed);
        }
        out
    }

    /// Restriction to the line `s*P + t*R` as a binary cubic
    /// `[s^3, s^2 t, s t^2, t^3]` via polarization.
    pub fn restrict(&self, p: &[KElem; 3], r: &[KElem; 3]) -> [KElem; 4] {
        let gp = self.gradient(p);
        let gr = self.gradient(r);
        let dot = |g: &[KElem; 3], v: &[KElem; 3]| -> KElem {
            let mut acc = KElem::zero();
            for (a, b) in g.iter().zip(v) {
                acc += a * b;
            }
            acc
        };
        [self.eval(p), dot(&gp, r), dot(&gr, p), self.eval(r)]
    }

    /// Substitution `x -> x + a z`, `y -> y + c z`.
    pub fn shear(&self, a: &KElem, c: &KElem) -> TernaryCubic {
        let mut out = TernaryCubic::zero();
        for (k, &(ex, ey, ez)) in MONOMIALS.iter().enumerate() {
            if self.coeffs[k].is_zero() {
                continue;
            }
            // (x + a z)^ex * (y + c z)^ey * z^ez
            for i in 0..=ex {
                for j in 0..=ey {
                    let bin = binomial(ex, i) * binomial(ey, j);
                    let coeff = self.coeffs[k].clone()
                        * a.pow((ex - i) as u32)
                        * c.pow((ey - j) as u32)
                        * KElem::from_int(bin);
                    let idx = monomial_index(i, j, ez + (ex - i) + (ey - j));
                    out.coeffs[idx] += coeff;
                }
            }
        }
        out
    }

    /// Canonical scalar multiple: first nonzero coefficient (in monomial
    /// order) rescaled to 1.
    pub fn normalize(&self) -> Result<TernaryCubic> {
        let lead = self
            .coeffs
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(Error::ZeroPolynomial)?;
        let inv = lead.inv()?;
        Ok(self.scale(&inv))
    }

    /// True if the two cubics agree up to a nonzero scalar.
    pub fn proportional(&self, other: &TernaryCubic) -> bool {
        match (self.normalize(), other.normalize()) {
            (Ok(a), Ok(b)) => a == b,
            _ => self.is_zero() && other.is_zero(),
        }
    }

    /// Rescales so that all coordinates of all coefficients are integers with
    /// overall content 1, preferring a positive leading rational part.
    pub fn integer_model(&self) -> TernaryCubic {
        let norm = match self.normalize() {
            Ok(n) => n,
            Err(_) => return self.clone(),
        };
        let mut den = BigInt::one();
        for c in norm.coeffs.iter() {
            den = num_integer::lcm(den, c.denom_lcm());
        }
        let scaled = norm.scale(&KElem::from_rat(Rat::from_integer(den)));
        let mut content = BigInt::zero();
        for c in scaled.coeffs.iter() {
            let d = c.denom_lcm();
            content = num_integer::gcd(content, c.numer_gcd_scaled(&d));
        }
        if content.is_zero() || content.is_one() {
            scaled
        } else {
            scaled.scale(&KElem::from_rat(Rat::new(BigInt::one(), content)))
        }
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, &(a, b, c)) in MONOMIALS.iter().enumerate() {
            let coeff = &self.coeffs[k];
            if coeff.is_zero() {
                continue;
            }
            let mono = {
                let mut m = String::new();
                for (e, name) in [(a, "x"), (b, "y"), (c, "z")] {
                    if e == 0 {
                        continue;
                    }
                    if !m.is_empty() && !latex {
                        m.push('*');
                    }
                    m.push_str(name);
                    if e > 1 {
                        m.push_str(&format!("^{e}"));
                    }
                }
                m
            };
            let (sign, body) = render_coeff(coeff, latex);
            if out.is_empty() {
                if sign {
                    out.push('-');
                }
            } else {
                out.push(if sign { '-' } else { '+' });
            }
            if body.is_empty() {
                out.push_str(&mono);
            } else {
                out.push_str(&body);
                if !latex {
                    out.push('*');
                }
                out.push_str(&mono);
            }
        }
        out
    }

    pub fn render_plain(&self) -> String {
        self.render(false)
    }

    pub fn render_latex(&self) -> String {
        self.render(true)
    }
}

/// Splits a coefficient into (negated?, rendered magnitude); the magnitude is
/// empty for plain 1 and parenthesized when it has several terms.
fn render_coeff(coeff: &KElem, latex: bool) -> (bool, String) {
    if coeff.term_count() > 1 {
        let inner = if latex {
            coeff.render_latex()
        } else {
            coeff.render_plain()
        };
        return (false, format!("({inner})"));
    }
    // Single displayed term: pull the sign out.
    let neg = coeff.single_term_negative().unwrap_or(false);
    let mag = if neg { -coeff.clone() } else { coeff.clone() };
    if mag.is_one() {
        (neg, String::new())
    } else {
        let s = if latex {
            mag.render_latex()
        } else {
            mag.render_plain()
        };
        (neg, s)
    }
}

fn binomial(n: u8, k: u8) -> i64 {
    let mut out = 1i64;
    for i in 0..k {
        out = out * (n - i) as i64 / (i + 1) as i64;
    }
    out
}

impl fmt::Debug for TernaryCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cubic({})", self.render_plain())
    }
}

impl fmt::Display for TernaryCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_plain())
    }
}

// ---------------------------------------------------------------------------
// Aronhold quartic invariant
// ---------------------------------------------------------------------------

/// The degree-4 Aronhold invariant `S`, normalized so that
/// `S(a x^3 + b y^3 + c z^3 + 6m xyz) = abcm - m^4`.
///
/// `S` vanishes exactly on the equianharmonic (j = 0) smooth cubics. It is
/// computed as the full tensor contraction of four copies of the symmetric
/// coefficient tensor against four Levi-Civita symbols.
pub fn aronhold_s(cubic: &TernaryCubic) -> KElem {
    // Symmetric tensor: F[i][j][k] = coeff(monomial) * i!j!k!/3! for exponent
    // multiplicities.
    let mut f = vec![vec![vec![KElem::zero(); 3]; 3]; 3];
    for (m, &(a, b, c)) in MONOMIALS.iter().enumerate() {
        if cubic.coeffs[m].is_zero() {
            continue;
        }
        let fact = |n: u8| -> i64 { [1, 1, 2, 6][n as usize] };
        let scale = Rat::new(BigInt::from(fact(a) * fact(b) * fact(c)), BigInt::from(6));
        let val = cubic.coeffs[m].scale(&scale);
        // Fill all index positions with the right exponent pattern.
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let mut e = [0u8; 3];
                    e[i] += 1;
                    e[j] += 1;
                    e[k] += 1;
                    if e == [a, b, c] {
                        f[i][j][k] = val.clone();
                    }
                }
            }
        }
    }
    const PERMS: [([usize; 3], i64); 6] = [
        ([0, 1, 2], 1),
        ([0, 2, 1], -1),
        ([1, 0, 2], -1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([2, 1, 0], -1),
    ];
    let mut total = KElem::zero();
    for (p1, s1) in PERMS {
        for (p2, s2) in PERMS {
            for (p3, s3) in PERMS {
                for (p4, s4) in PERMS {
                    // Four symbolic letters, three index slots each:
                    // (abc)(abd)(acd)(bcd).
                    let a = [p1[0], p2[0], p3[0]];
                    let b = [p1[1], p2[1], p4[0]];
                    let c = [p1[2], p3[1], p4[1]];
                    let d = [p2[2], p3[2], p4[2]];
                    let term = f[a[0]][a[1]][a[2]].clone()
                        * f[b[0]][b[1]][b[2]].clone()
                        * f[c[0]][c[1]][c[2]].clone()
                        * f[d[0]][d[1]][d[2]].clone();
                    if s1 * s2 * s3 * s4 == 1 {
                        total += term;
                    } else {
                        total -= term;
                    }
                }
            }
        }
    }
    // Calibration constant for the classical normalization; fixed by the
    // diagonal family in the unit tests below.
    total.scale(&Rat::new(BigInt::from(-1), BigInt::from(24)))
}

#[cfg(test)]
mod tests {
    use super::mono::*;
    use super::*;
    use crate::numfield::rat_i64;

    fn k(n: i64) -> KElem {
        KElem::from_int(n)
    }

    pub fn fermat() -> TernaryCubic {
        TernaryCubic::from_terms(&[(X3, k(1)), (Y3, k(1)), (Z3, k(1))])
    }

    fn hesse_member(m: Rat) -> TernaryCubic {
        let mut c = fermat();
        c.coeffs[XYZ] = KElem::from_rat(m * rat_i64(6, 1));
        c
    }

    #[test]
    fn evaluation_examples() {
        let f = fermat();
        let minus1 = [k(-1), k(1), k(0)];
        assert!(f.eval(&minus1).is_zero());
        assert_eq!(f.eval(&[k(1), k(1), k(1)]), k(3));
        let zy = TernaryCubic::from_terms(&[(Z3, k(1)), (Y3, k(-1))]);
        assert!(zy.eval(&[k(1), k(0), k(0)]).is_zero());
    }

    #[test]
    fn gradient_examples() {
        let c = TernaryCubic::from_terms(&[(X3, k(1)), (Y3, k(1)), (Z3, k(-1))]);
        assert_eq!(c.gradient(&[k(1), k(0), k(1)]), [k(3), k(0), k(-3)]);
        let zy = TernaryCubic::from_terms(&[(Z3, k(1)), (Y3, k(-1))]);
        assert_eq!(zy.gradient(&[k(1), k(0), k(0)]), [k(0), k(0), k(0)]);
        assert_eq!(fermat().gradient(&[k(-1), k(1), k(0)]), [k(3), k(3), k(0)]);
    }

    #[test]
    fn hessian_of_fermat() {
        let h = fermat().hessian_det();
        let expect = TernaryCubic::from_terms(&[(XYZ, k(216))]);
        assert_eq!(h, expect);
        // All nine flexes lie on the Hessian.
        let e = KElem::eps();
        let e2 = KElem::eps2();
        for om in [k(1), e, e2] {
            for p in [
                [k(-1), om.clone(), k(0)],
                [k(0), k(-1), om.clone()],
                [om.clone(), k(0), k(-1)],
            ] {
                assert!(fermat().eval(&p).is_zero());
                assert!(h.eval(&p).is_zero());
            }
        }
    }

    #[test]
    fn hessian_of_triangle_vanishes_at_vertices() {
        let t = TernaryCubic::from_terms(&[(XYZ, k(1))]);
        let h = t.hessian_det();
        assert!(!h.is_zero());
        for p in [[k(1), k(0), k(0)], [k(0), k(1), k(0)], [k(0), k(0), k(1)]] {
            assert!(h.eval(&p).is_zero());
        }
    }

    #[test]
    fn aronhold_on_diagonal_family() {
        // S(x^3+y^3+z^3+6m*xyz) = m - m^4 in the classical normalization.
        for m in [rat_i64(0, 1), rat_i64(1, 1), rat_i64(2, 1), rat_i64(-3, 2)] {
            let s = aronhold_s(&hesse_member(m.clone()));
            let expect = m.clone() - num_traits::pow(m, 4);
            assert_eq!(s, KElem::from_rat(expect));
        }
        assert!(aronhold_s(&fermat()).is_zero());
        // x^3+y^3+z^3 + xyz corresponds to m = 1/6: S nonzero.
        let mut gen = fermat();
        gen.coeffs[XYZ] = k(1);
        assert!(!aronhold_s(&gen).is_zero());
    }

    #[test]
    fn aronhold_weight_under_monomial_substitutions() {
        // Swapping two coordinates has determinant -1; S has even weight, so
        // it is invariant. Scaling z by eps has determinant eps and scales S
        // by eps^4 = eps.
        let mut c = hesse_member(rat_i64(2, 1));
        c.coeffs[X2Y] = KElem::eps();
        let s = aronhold_s(&c);
        // swap x and y
        let mut swapped = TernaryCubic::zero();
        for (k_idx, &(a, b, cc)) in MONOMIALS.iter().enumerate() {
            swapped.coeffs[monomial_index(b, a, cc)] = c.coeffs[k_idx].clone();
        }
        assert_eq!(aronhold_s(&swapped), s);
        // z -> eps z
        let mut scaled = TernaryCubic::zero();
        for (k_idx, &(a, b, cc)) in MONOMIALS.iter().enumerate() {
            scaled.coeffs[k_idx] = c.coeffs[k_idx].clone() * KElem::eps().pow(cc as u32);
        }
        assert_eq!(aronhold_s(&scaled), s * KElem::eps());
    }

    #[test]
    fn restriction_via_polarization() {
        let c = TernaryCubic::from_terms(&[(X3, k(1)), (Y3, k(1)), (Z3, k(-1))]);
        // Line y = 0 through (1,0,1) and (1,0,eps): binary cubic in s, t.
        let p = [k(1), k(0), k(1)];
        let r = [k(1), k(0), KElem::eps()];
        let bin = c.restrict(&p, &r);
        // Roots at (1:0) and (0:1) since both points lie on the curve.
        assert!(bin[0].is_zero());
        assert!(bin[3].is_zero());
        // Direct check at s = t = 1 against evaluation.
        let sum = [k(2), k(0), k(1) + KElem::eps()];
        let direct = c.eval(&sum);
        let via = bin[0].clone() + bin[1].clone() + bin[2].clone() + bin[3].clone();
        assert_eq!(direct, via);
    }

    #[test]
    fn shear_moves_points_correctly() {
        let c = fermat();
        let a = KElem::from_frac(1, 2);
        let b = KElem::from_int(3);
        let sheared = c.shear(&a, &b);
        // If (x,y,z) on sheared then (x + a z, y + b z, z) on c.
        let p = [k(1), k(-1), k(0)];
        assert!(sheared.eval(&p).is_zero());
        let q = [k(2) - a.clone(), k(1) - b.clone(), k(1)];
        let on_orig = [k(2), k(1), k(1)];
        assert_eq!(sheared.eval(&q), c.eval(&on_orig));
    }

    #[test]
    fn polar_style_division() {
        // 3(y - x)(y + x) as a quadratic, divided by (y - x).
        let l1 = LinForm([k(-1), k(1), k(0)]);
        let l2 = LinForm([k(3), k(3), k(0)]);
        let q = l1.mul_lin(&l2);
        let quotient = q.div_lin(&l1).unwrap();
        assert_eq!(quotient, l2);
        let not_factor = LinForm([k(1), k(1), k(1)]);
        assert!(q.div_lin(&not_factor).is_none());
    }

    #[test]
    fn normalization_and_display() {
        let c = TernaryCubic::from_terms(&[(Z3, k(3)), (Y3, k(-3))]);
        let n = c.normalize().unwrap();
        assert_eq!(n.coeffs[Y3], k(1));
        assert!(c.proportional(&TernaryCubic::from_terms(&[(Z3, k(-1)), (Y3, k(1))])));
        let h = TernaryCubic::from_terms(&[(X2Y, k(1)), (Y2Z, k(1)), (XZ2, k(1))]);
        assert_eq!(h.render_plain(), "x^2*y+x*z^2+y^2*z");
    }
}
