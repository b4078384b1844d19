//! Local intersection multiplicity of two plane curves at a `K`-rational
//! point, by the recursive reduction on local equations: restrict both
//! curves to the line `v = 0` through the point, strip factors of `v`, and
//! reduce degrees Euclid-style, each step preserving the multiplicity.

use crate::numfield::KElem;
use crate::plane::PPoint;
use crate::polyring::{TernaryCubic, UPoly, MONOMIALS};
use crate::{Error, Result};

/// Dense bivariate polynomial over `K`; `coeffs[i][j]` multiplies `u^i v^j`.
#[derive(Clone, PartialEq, Eq, Debug)]
struct BiPoly {
    coeffs: Vec<Vec<KElem>>,
}

impl BiPoly {
    fn new(mut coeffs: Vec<Vec<KElem>>) -> Self {
        for row in coeffs.iter_mut() {
            while row.last().map_or(false, |c| c.is_zero()) {
                row.pop();
            }
        }
        while coeffs.last().map_or(false, |r| r.is_empty()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn constant_term(&self) -> KElem {
        self.coeffs
            .first()
            .and_then(|r| r.first())
            .cloned()
            .unwrap_or_else(KElem::zero)
    }

    /// Restriction to `v = 0` as a univariate polynomial in `u`.
    fn restrict_v0(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .map(|r| r.first().cloned().unwrap_or_else(KElem::zero))
                .collect(),
        )
    }

    fn div_v(&self) -> BiPoly {
        BiPoly::new(
            self.coeffs
                .iter()
                .map(|r| {
                    if r.is_empty() {
                        Vec::new()
                    } else {
                        r[1..].to_vec()
                    }
                })
                .collect(),
        )
    }

    /// `self - factor * u^shift * other`.
    fn reduce_by(&self, other: &BiPoly, factor: &KElem, shift: usize) -> BiPoly {
        let rows = self.coeffs.len().max(other.coeffs.len() + shift);
        let mut out: Vec<Vec<KElem>> = vec![Vec::new(); rows];
        for (i, row) in self.coeffs.iter().enumerate() {
            out[i] = row.clone();
        }
        for (i, row) in other.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let target = &mut out[i + shift];
                if target.len() <= j {
                    target.resize(j + 1, KElem::zero());
                }
                target[j] -= c * factor;
            }
        }
        BiPoly::new(out)
    }
}

/// Dehomogenizes a cubic in the affine chart centred at `p`: the coordinate
/// of the first nonzero entry of `p` is set to 1 and the other two become
/// `p_j + u`, `p_k + v`.
fn localize(curve: &TernaryCubic, p: &PPoint) -> BiPoly {
    let axis = p
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .expect("canonical point");
    let others: Vec<usize> = (0..3).filter(|&i| i != axis).collect();
    let (ju, jv) = (others[0], others[1]);
    let mut out = BiPoly::zero();
    let mut rows: Vec<Vec<KElem>> = vec![vec![KElem::zero(); 4]; 4];
    for (idx, &m) in MONOMIALS.iter().enumerate() {
        let c = curve.coeff(idx);
        if c.is_zero() {
            continue;
        }
        let e = [m.0 as usize, m.1 as usize, m.2 as usize];
        // (p_u + u)^e_u (p_v + v)^e_v expanded binomially.
        for i in 0..=e[ju] {
            for j in 0..=e[jv] {
                let bin = binom(e[ju], i) * binom(e[jv], j);
                let coeff = c.clone()
                    * p.coords()[ju].pow((e[ju] - i) as u32)
                    * p.coords()[jv].pow((e[jv] - j) as u32)
                    * KElem::from_int(bin);
                rows[i][j] += coeff;
            }
        }
    }
    out.coeffs = rows;
    BiPoly::new(out.coeffs)
}

fn binom(n: usize, k: usize) -> i64 {
    let mut out = 1i64;
    for i in 0..k {
        out = out * (n - i) as i64 / (i + 1) as i64;
    }
    out
}

/// Local intersection number of two cubics at a common `K`-rational point.
///
/// Errors when `p` is not on both curves or the curves share a component
/// through `p` (infinite multiplicity). The common-component case is
/// detected through the Bezout bound: two cubics without a shared component
/// meet with total multiplicity 9, so an accumulated local count above 9
/// certifies a shared component.
pub fn intersection_multiplicity(c1: &TernaryCubic, c2: &TernaryCubic, p: &PPoint) -> Result<u32> {
    let f = localize(c1, p);
    let g = localize(c2, p);
    if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
        return Err(Error::PointNotOnCurve);
    }
    imult(f, g, 9)
}

fn imult(mut f: BiPoly, mut g: BiPoly, budget: u32) -> Result<u32> {
    let mut total = 0u32;
    loop {
        if f.is_zero() || g.is_zero() {
            return Err(Error::CommonComponent);
        }
        if !f.constant_term().is_zero() || !g.constant_term().is_zero() {
            return Ok(total);
        }
        let fu = f.restrict_v0();
        let gu = g.restrict_v0();
        match (fu.is_zero(), gu.is_zero()) {
            (true, true) => return Err(Error::CommonComponent),
            (true, false) => {
                // f = v * h; I(v, g) is the order of u in g(u, 0).
                total += order_at_zero(&gu);
                if total > budget {
                    return Err(Error::CommonComponent);
                }
                f = f.div_v();
            }
            (false, true) => {
                total += order_at_zero(&fu);
                if total > budget {
                    return Err(Error::CommonComponent);
                }
                g = g.div_v();
            }
            (false, false) => {
                let (df, dg) = (fu.degree().unwrap(), gu.degree().unwrap());
                if df > dg {
                    std::mem::swap(&mut f, &mut g);
                    continue;
                }
                // Kill the leading u-term of g(u, 0); the restriction degree
                // strictly drops, so this phase always reaches a v-divisible
                // polynomial.
                let factor = gu.leading().unwrap().div(fu.leading().unwrap())?;
                g = g.reduce_by(&f, &factor, dg - df);
            }
        }
    }
}

fn order_at_zero(p: &UPoly) -> u32 {
    p.coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial") as u32
}
