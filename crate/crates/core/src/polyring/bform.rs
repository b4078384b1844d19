//! Binary forms over `K` and exact Sylvester resultants of ternary cubics.

use std::fmt;

use crate::numfield::KElem;
use crate::polyring::{TernaryCubic, UPoly, MONOMIALS};
use crate::{Error, Result};

/// Coordinate axis to eliminate in a resultant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    /// The two surviving coordinates, in increasing index order.
    fn others(self) -> (usize, usize) {
        match self {
            Axis::X => (1, 2),
            Axis::Y => (0, 2),
            Axis::Z => (0, 1),
        }
    }
}

/// Homogeneous binary form of fixed degree `d`; `coeffs[i]` multiplies
/// `s^(d-i) t^i`. The length is always `d + 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct BForm {
    coeffs: Vec<KElem>,
}

impl BForm {
    pub fn new(coeffs: Vec<KElem>) -> Self {
        assert!(!coeffs.is_empty());
        BForm { coeffs }
    }

    pub fn constant(k: KElem) -> Self {
        BForm { coeffs: vec![k] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[KElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, s: &KElem, t: &KElem) -> KElem {
        let d = self.degree();
        let mut acc = KElem::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += c.clone() * s.pow((d - i) as u32) * t.pow(i as u32);
        }
        acc
    }

    pub fn mul(&self, other: &BForm) -> BForm {
        let mut out = vec![KElem::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BForm::new(out)
    }

    /// Sum of two forms of the same degree.
    pub fn add(&self, other: &BForm) -> BForm {
        assert_eq!(self.degree(), other.degree());
        BForm::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    /// Difference of two forms of the same degree.
    pub fn sub(&self, other: &BForm) -> BForm {
        assert_eq!(self.degree(), other.degree());
        BForm::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, k: &KElem) -> BForm {
        BForm::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Canonical scalar multiple with first nonzero coefficient 1.
    pub fn normalize(&self) -> Result<BForm> {
        let lead = self
            .coeffs
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lead.inv()?))
    }

    pub fn proportional(&self, other: &BForm) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.degree() == other.degree() && self.normalize().unwrap() == other.normalize().unwrap()
    }

    /// Writes the form as `t^a * s^b * core` with the core having nonzero
    /// first and last coefficients; the core is returned dehomogenized in
    /// `u = t/s`.
    fn split(&self) -> Option<(usize, usize, UPoly)> {
        if self.is_zero() {
            return None;
        }
        let first = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        let core = UPoly::new(self.coeffs[first..=last].to_vec());
        // coeff index i corresponds to s^(d-i) t^i: leading t-power = first,
        // trailing s-power = d - last.
        Some((first, self.degree() - last, core))
    }

    fn assemble(t_pow: usize, s_pow: usize, core: &UPoly) -> BForm {
        let mut coeffs = vec![KElem::zero(); t_pow];
        coeffs.extend(core.coeffs().iter().cloned());
        coeffs.extend(std::iter::repeat(KElem::zero()).take(s_pow));
        BForm::new(coeffs)
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn exact_div(&self, other: &BForm) -> Option<BForm> {
        let (ta, sa, ca) = self.split()?;
        let (tb, sb, cb) = other.split()?;
        if ta < tb || sa < sb {
            return None;
        }
        let (q, r) = ca.divrem(&cb).ok()?;
        if !r.is_zero() {
            return None;
        }
        Some(BForm::assemble(ta - tb, sa - sb, &q))
    }

    pub fn divides(&self, other: &BForm) -> bool {
        other.exact_div(self).is_some()
    }

    /// Gcd as a binary form (monic core, correct powers of `s` and `t`).
    pub fn gcd(&self, other: &BForm) -> Result<BForm> {
        match (self.split(), other.split()) {
            (None, None) => Err(Error::ZeroPolynomial),
            (None, Some(_)) => other.normalize(),
            (Some(_), None) => self.normalize(),
            (Some((ta, sa, ca)), Some((tb, sb, cb))) => {
                let g = ca.gcd(&cb)?;
                Ok(BForm::assemble(ta.min(tb), sa.min(sb), &g))
            }
        }
    }

    /// A form is squarefree iff its core is and neither `s` nor `t` divides
    /// it twice.
    pub fn is_squarefree(&self) -> Result<bool> {
        match self.split() {
            None => Ok(false),
            Some((t_pow, s_pow, core)) => Ok(t_pow <= 1 && s_pow <= 1 && core.is_squarefree()?),
        }
    }

    /// Squarefreeness with a fast modular certificate: a squarefree image
    /// modulo a good prime certifies the exact statement (the discriminant
    /// resultant has a nonzero image); inconclusive images fall back to the
    /// exact Euclidean computation.
    pub fn certified_squarefree(&self) -> Result<bool> {
        let Some((t_pow, s_pow, core)) = self.split() else {
            return Ok(false);
        };
        if t_pow > 1 || s_pow > 1 {
            return Ok(false);
        }
        for img in modp::images() {
            if let Some(c) = img.upoly_image(&core) {
                if c.len() == core.coeffs().len() && !c.is_empty() && c[0] != 0 {
                    let der = modp::derivative(&c, img.p);
                    if modp::gcd_is_constant(&c, &der, img.p) {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(core.is_squarefree()?)
    }

    /// Coprimality with the same modular certificate and exact fallback.
    pub fn certified_coprime(&self, other: &BForm) -> Result<bool> {
        let (Some((ta, sa, ca)), Some((tb, sb, cb))) = (self.split(), other.split()) else {
            return Err(Error::ZeroPolynomial);
        };
        if (ta >= 1 && tb >= 1) || (sa >= 1 && sb >= 1) {
            return Ok(false);
        }
        if ca.degree() == Some(0) || cb.degree() == Some(0) {
            return Ok(true);
        }
        for img in modp::images() {
            if let (Some(fa), Some(fb)) = (img.upoly_image(&ca), img.upoly_image(&cb)) {
                if fa.len() == ca.coeffs().len() && fb.len() == cb.coeffs().len() {
                    if modp::gcd_is_constant(&fa, &fb, img.p) {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(ca.gcd(&cb)?.degree() == Some(0))
    }
}

/// Reduction of `K = Q(e, b)` coefficients modulo rational primes `p` with
/// `p = 1 mod 3` and `2` a cubic residue, so both generators have images.
mod modp {
    use num_bigint::BigInt;
    use num_traits::{Signed, ToPrimitive, Zero};

    use crate::numfield::KElem;
    use crate::polyring::UPoly;

    pub struct Image {
        pub p: u64,
        eps: u64,
        b: u64,
    }

    fn mulmod(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a, p);
            }
            a = mulmod(a, a, p);
            e >>= 1;
        }
        acc
    }

    fn invmod(a: u64, p: u64) -> u64 {
        powmod(a, p - 2, p)
    }

    /// Good primes with precomputed images of `e` (order 3) and `b`
    /// (cube root of 2).
    pub fn images() -> &'static [Image] {
        use std::sync::OnceLock;
        static IMAGES: OnceLock<Vec<Image>> = OnceLock::new();
        IMAGES.get_or_init(|| {
            let mut out = Vec::new();
            // Small primes keep the root search trivial; a false "gcd not
            // constant" at one prime just moves on to the next, and the
            // exact path remains as the last resort.
            for p in [31u64, 43, 109, 127, 139, 157, 223] {
                if let Some(img) = find_image(p) {
                    out.push(img);
                }
            }
            out
        })
    }

    fn find_image(p: u64) -> Option<Image> {
        if p < 5 || (p - 1) % 3 != 0 {
            return None;
        }
        // An element of multiplicative order 3.
        let mut eps = 0;
        for g in 2..200u64 {
            let cand = powmod(g, (p - 1) / 3, p);
            if cand != 1 && powmod(cand, 3, p) == 1 {
                eps = cand;
                break;
            }
        }
        if eps == 0 {
            return None;
        }
        // A cube root of 2, if one exists.
        if powmod(2, (p - 1) / 3, p) != 1 {
            return None;
        }
        let mut b = 0;
        for x in 2..p.min(2_000_000) {
            if powmod(x, 3, p) == 2 {
                b = x;
                break;
            }
        }
        if b == 0 {
            None
        } else {
            Some(Image { p, eps, b })
        }
    }

    impl Image {
        fn bigint_mod(&self, n: &BigInt) -> u64 {
            let p = BigInt::from(self.p);
            let mut r = n % &p;
            if r.is_negative() {
                r += &p;
            }
            r.to_u64().expect("reduced residue fits")
        }

        /// Image of a field element, unless a denominator vanishes mod p.
        pub fn kelem_image(&self, a: &KElem) -> Option<u64> {
            let mut acc = 0u64;
            for (k, c) in a.coords().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let den = self.bigint_mod(c.denom());
                if den == 0 {
                    return None;
                }
                let num = self.bigint_mod(c.numer());
                let val = mulmod(num, invmod(den, self.p), self.p);
                let (i, j) = (k % 2, k / 2);
                let basis = mulmod(
                    powmod(self.eps, i as u64, self.p),
                    powmod(self.b, j as u64, self.p),
                    self.p,
                );
                acc = (acc + mulmod(val, basis, self.p)) % self.p;
            }
            Some(acc)
        }

        pub fn upoly_image(&self, f: &UPoly) -> Option<Vec<u64>> {
            f.coeffs().iter().map(|c| self.kelem_image(c)).collect()
        }
    }

    pub fn derivative(f: &[u64], p: u64) -> Vec<u64> {
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, i as u64 % p, p))
            .collect()
    }

    fn trim(f: &mut Vec<u64>) {
        while f.last() == Some(&0) {
            f.pop();
        }
    }

    /// True when gcd(f, g) over F_p is a nonzero constant.
    pub fn gcd_is_constant(f: &[u64], g: &[u64], p: u64) -> bool {
        let mut a = f.to_vec();
        let mut b = g.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            // a mod b
            let lead_inv = invmod(*b.last().unwrap(), p);
            while a.len() >= b.len() && !a.is_empty() {
                let shift = a.len() - b.len();
                let q = mulmod(*a.last().unwrap(), lead_inv, p);
                if q != 0 {
                    for (k, &bc) in b.iter().enumerate() {
                        let t = mulmod(q, bc, p);
                        let idx = shift + k;
                        a[idx] = (a[idx] + p - t) % p;
                    }
                }
                a.pop();
                trim(&mut a);
            }
            std::mem::swap(&mut a, &mut b);
        }
        a.len() == 1
    }
}

impl fmt::Debug for BForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({})s^{}t^{}", c, self.degree() - i, i))
            .collect();
        write!(f, "BForm[{}]", terms.join(" + "))
    }
}

/// Coefficients of a cubic as a univariate polynomial in the eliminated
/// axis: entry `k` is the binary form (degree `3 - k`) multiplying `v^k`.
fn cubic_as_poly_in(cubic: &TernaryCubic, axis: Axis) -> [BForm; 4] {
    let v = axis.index();
    let (w1, w2) = axis.others();
    let mut out: [Vec<KElem>; 4] = [
        vec![KElem::zero(); 4],
        vec![KElem::zero(); 3],
        vec![KElem::zero(); 2],
        vec![KElem::zero(); 1],
    ];
    for (idx, &m) in MONOMIALS.iter().enumerate() {
        let e = [m.0 as usize, m.1 as usize, m.2 as usize];
        let k = e[v];
        // within degree 3 - k, coefficient index = exponent of the second
        // surviving coordinate.
        let t_exp = e[w2];
        debug_assert_eq!(e[w1] + t_exp, 3 - k);
        out[k][t_exp] += cubic.coeff(idx).clone();
    }
    out.map(BForm::new)
}

/// Resultant of two ternary cubics with respect to one axis: a binary form
/// of degree 9 in the remaining coordinates (in increasing index order),
/// computed as the determinant of the 3x3 Bezout matrix (equal to the
/// Sylvester determinant up to a universal sign). Errors when the resultant
/// vanishes identically, i.e. the curves share a component.
pub fn resultant_cubics(c1: &TernaryCubic, c2: &TernaryCubic, axis: Axis) -> Result<BForm> {
    let a = cubic_as_poly_in(c1, axis);
    let b = cubic_as_poly_in(c2, axis);
    // Pad everything to a common shape: entry [i][j] is the degree-(6-i-j)
    // bracket a_i b_j - a_j b_i.
    let bracket = |i: usize, j: usize| -> BForm {
        let d = 6 - i - j;
        let mut prod = a[i].mul(&b[j]);
        let other = a[j].mul(&b[i]);
        debug_assert_eq!(prod.degree(), d);
        prod = prod.sub(&other);
        prod
    };
    // Bezout matrix entries B[r][c] = sum_{j <= min(r, c)} bracket(r+c+1-j, j)
    // restricted to first index <= 3.
    let mut bez: Vec<Vec<BForm>> = Vec::with_capacity(3);
    for r in 0..3usize {
        let mut row = Vec::with_capacity(3);
        for c in 0..3usize {
            let mut acc: Option<BForm> = None;
            for j in 0..=r.min(c) {
                let i = r + c + 1 - j;
                if i > 3 {
                    continue;
                }
                let term = bracket(i, j);
                acc = Some(match acc {
                    None => term,
                    Some(f) => f.add(&term),
                });
            }
            row.push(acc.expect("bezout entries are nonempty for n = 3"));
        }
        bez.push(row);
    }
    let det = det3_forms(&bez);
    if det.is_zero() {
        return Err(Error::CommonComponent);
    }
    debug_assert_eq!(det.degree(), 9);
    Ok(det)
}

fn det3_forms(m: &[Vec<BForm>]) -> BForm {
    let term = |p: [usize; 3]| m[0][p[0]].mul(&m[1][p[1]]).mul(&m[2][p[2]]);
    let mut acc = term([0, 1, 2]);
    acc = acc.add(&term([1, 2, 0]));
    acc = acc.add(&term([2, 0, 1]));
    acc = acc.sub(&term([0, 2, 1]));
    acc = acc.sub(&term([1, 0, 2]));
    acc = acc.sub(&term([2, 1, 0]));
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::cubic::mono::*;

    fn k(n: i64) -> KElem {
        KElem::from_int(n)
    }

    #[test]
    fn resultant_of_two_pencil_triangles() {
        // Res_z(z^3 - y^3, y^3 - x^3) = (y^3 - x^3)^3 up to scalar.
        let c1 = TernaryCubic::from_terms(&[(Z3, k(1)), (Y3, k(-1))]);
        let c2 = TernaryCubic::from_terms(&[(Y3, k(1)), (X3, k(-1))]);
        let r = resultant_cubics(&c1, &c2, Axis::Z).unwrap();
        assert_eq!(r.degree(), 9);
        let lin = BForm::new(vec![k(-1), k(0), k(0), k(1)]); // y^3 - x^3 in (x, y)
        let cube = lin.mul(&lin).mul(&lin);
        assert!(r.proportional(&cube));
    }

    #[test]
    fn resultant_detects_common_component() {
        let c1 = TernaryCubic::from_terms(&[(Z3, k(1)), (Y3, k(-1))]);
        assert!(matches!(
            resultant_cubics(&c1, &c1, Axis::Z),
            Err(Error::CommonComponent)
        ));
    }

    #[test]
    fn degree_is_always_nine() {
        let c1 = TernaryCubic::from_terms(&[(X3, k(1)), (Y3, k(1)), (Z3, k(1))]);
        let c2 = TernaryCubic::from_terms(&[(X3, k(2)), (Y3, k(-1)), (XYZ, k(5))]);
        let r = resultant_cubics(&c1, &c2, Axis::X).unwrap();
        assert_eq!(r.degree(), 9);
    }

    #[test]
    fn fermat_meets_its_hessian_in_nine_points_by_degree() {
        // The Hessian of the Fermat cubic is the coordinate triangle; the
        // resultant has full degree 9 and factors into the nine common
        // directions with multiplicity.
        let fermat = TernaryCubic::from_terms(&[(X3, k(1)), (Y3, k(1)), (Z3, k(1))]);
        let hess = fermat.hessian_det();
        let r = resultant_cubics(&fermat, &hess, Axis::Z).unwrap();
        assert_eq!(r.degree(), 9);
        assert!(!r.is_zero());
        // Each flex direction (x : y) with x^3 + y^3 = 0 or a coordinate
        // fiber divides the resultant.
        let xy_sum = BForm::new(vec![k(1), k(0), k(0), k(1)]); // x^3 + y^3
        assert!(xy_sum.divides(&r));
    }

    #[test]
    fn exact_division_and_gcd() {
        let a = BForm::new(vec![k(1), k(-1)]); // s - t
        let b = BForm::new(vec![k(2), k(1)]); // 2s + t
        let prod = a.mul(&b).mul(&a);
        let q = prod.exact_div(&a).unwrap();
        assert!(q.proportional(&a.mul(&b)));
        assert!(a.divides(&prod));
        assert!(!BForm::new(vec![k(1), k(1)]).divides(&prod));
        let g = prod.gcd(&a.mul(&a).mul(&a)).unwrap();
        assert!(g.proportional(&a.mul(&a)));
        assert!(!prod.is_squarefree().unwrap());
        assert!(a.mul(&b).is_squarefree().unwrap());
    }
}
