//! Projective-plane primitives over `K`: points, lines, tangent directions,
//! marked-line coordinates, and local intersection multiplicities.

mod mult;

pub use mult::intersection_multiplicity;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::numfield::KElem;
use crate::polyring::{LinForm, TernaryCubic};
use crate::{Error, Result};

/// Point of `P^2(K)`. The stored representative is canonical: the first
/// nonzero coordinate is 1, so equality and ordering are structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PPoint {
    coords: [KElem; 3],
}

/// Line of `P^2(K)`, stored dually as its canonical coefficient triple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Line {
    coeffs: [KElem; 3],
}

/// A point of the pencil of lines through `base`, in the chart given by the
/// first coordinate line missing `base`; `chart` is a canonical homogeneous
/// pair on that reference line.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Direction {
    pub base: PPoint,
    chart: [KElem; 2],
}

/// A value of `P^1(K)`: a finite field element or infinity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum ProjParam {
    Finite(KElem),
    Infinity,
}

impl ProjParam {
    pub fn finite(&self) -> Option<&KElem> {
        match self {
            ProjParam::Finite(k) => Some(k),
            ProjParam::Infinity => None,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjParam::Infinity)
    }

    pub fn render(&self) -> String {
        match self {
            ProjParam::Finite(k) => k.render_plain(),
            ProjParam::Infinity => "inf".into(),
        }
    }
}

fn canonicalize(mut v: [KElem; 3]) -> Result<[KElem; 3]> {
    let lead = v
        .iter()
        .find(|c| !c.is_zero())
        .ok_or(Error::ZeroPolynomial)?;
    let inv = lead.inv()?;
    for c in v.iter_mut() {
        *c = c.clone() * inv.clone();
    }
    Ok(v)
}

impl PPoint {
    pub fn new(coords: [KElem; 3]) -> Result<Self> {
        Ok(PPoint {
            coords: canonicalize(coords)?,
        })
    }

    pub fn from_ints(v: [i64; 3]) -> Self {
        PPoint::new(v.map(KElem::from_int)).expect("nonzero integer triple")
    }

    pub fn coords(&self) -> &[KElem; 3] {
        &self.coords
    }

    pub fn on_line(&self, line: &Line) -> bool {
        let mut acc = KElem::zero();
        for (a, b) in self.coords.iter().zip(&line.coeffs) {
            acc += a * b;
        }
        acc.is_zero()
    }

    pub fn on_curve(&self, curve: &TernaryCubic) -> bool {
        curve.eval(&self.coords).is_zero()
    }
}

impl Line {
    pub fn new(coeffs: [KElem; 3]) -> Result<Self> {
        Ok(Line {
            coeffs: canonicalize(coeffs)?,
        })
    }

    pub fn coeffs(&self) -> &[KElem; 3] {
        &self.coeffs
    }

    pub fn as_lin_form(&self) -> LinForm {
        LinForm(self.coeffs.clone())
    }

    pub fn contains(&self, p: &PPoint) -> bool {
        p.on_line(self)
    }

    /// The intersection point of two distinct lines.
    pub fn meet(&self, other: &Line) -> Result<PPoint> {
        PPoint::new(cross(&self.coeffs, &other.coeffs)).map_err(|_| Error::CoincidentPoints)
    }

    /// Two distinct deterministic points spanning the line.
    pub fn span_points(&self) -> Result<(PPoint, PPoint)> {
        let mut found: Vec<PPoint> = Vec::new();
        for axis in 0..3 {
            let mut e: [KElem; 3] = Default::default();
            e[axis] = KElem::one();
            if let Ok(p) = PPoint::new(cross(&self.coeffs, &e)) {
                if !found.contains(&p) {
                    found.push(p);
                    if found.len() == 2 {
                        let second = found.pop().unwrap();
                        let first = found.pop().unwrap();
                        return Ok((first, second));
                    }
                }
            }
        }
        Err(Error::CoincidentPoints)
    }
}

fn cross(a: &[KElem; 3], b: &[KElem; 3]) -> [KElem; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// The unique line through two distinct points.
pub fn line_through(p: &PPoint, q: &PPoint) -> Result<Line> {
    if p == q {
        return Err(Error::CoincidentPoints);
    }
    Line::new(cross(&p.coords, &q.coords))
}

impl Direction {
    /// The direction of `line` in the pencil of lines through `p`; the line
    /// must pass through `p`.
    pub fn of_line(p: &PPoint, line: &Line) -> Result<Direction> {
        if !line.contains(p) {
            return Err(Error::LineMissesPoint);
        }
        // Reference line: the first coordinate line not through p, i.e. the
        // first axis with a nonzero coordinate of p.
        let axis = p
            .coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("canonical point");
        let mut e: [KElem; 3] = Default::default();
        e[axis] = KElem::one();
        // Intersection of `line` with the reference line, as a homogeneous
        // pair in the two coordinates of the reference line.
        let pt = cross(&line.coeffs, &e);
        let rest: Vec<KElem> = (0..3)
            .filter(|&i| i != axis)
            .map(|i| pt[i].clone())
            .collect();
        let chart = canonical_pair([rest[0].clone(), rest[1].clone()])?;
        Ok(Direction {
            base: p.clone(),
            chart,
        })
    }

    pub fn chart(&self) -> &[KElem; 2] {
        &self.chart
    }

    /// The actual line this direction stands for.
    pub fn line(&self) -> Line {
        let axis = self
            .base
            .coords
            .iter()
            .position(|c| !c.is_zero())
            .expect("canonical point");
        let mut pt: [KElem; 3] = Default::default();
        let mut it = self.chart.iter();
        for (i, slot) in pt.iter_mut().enumerate() {
            if i != axis {
                *slot = it.next().unwrap().clone();
            }
        }
        line_through(&self.base, &PPoint::new(pt).expect("chart pair nonzero"))
            .expect("chart point differs from base")
    }
}

fn canonical_pair(mut v: [KElem; 2]) -> Result<[KElem; 2]> {
    let lead = v
        .iter()
        .find(|c| !c.is_zero())
        .ok_or(Error::ZeroPolynomial)?;
    let inv = lead.inv()?;
    for c in v.iter_mut() {
        *c = c.clone() * inv.clone();
    }
    Ok(v)
}

/// Tangent direction of a curve at a smooth point of it.
pub fn tangent_direction(curve: &TernaryCubic, p: &PPoint) -> Result<Direction> {
    if !p.on_curve(curve) {
        return Err(Error::PointNotOnCurve);
    }
    let g = curve.gradient(&p.coords);
    if g.iter().all(|c| c.is_zero()) {
        return Err(Error::SingularPoint);
    }
    let line = Line::new(g)?;
    Direction::of_line(p, &line)
}

/// The projective coordinate on a pencil of lines sending a marking to
/// `(0, 1, infinity)`.
#[derive(Clone, Debug)]
pub struct MobiusMap {
    base: PPoint,
    // u(x) = (n0 x_s + n1 x_t) / (d0 x_s + d1 x_t)
    num: [KElem; 2],
    den: [KElem; 2],
}

/// Builds the unique coordinate with `u(m0) = 0`, `u(m1) = 1`,
/// `u(m_inf) = infinity` on the pencil through the common base point.
pub fn mobius_from_marking(m0: &Direction, m1: &Direction, minf: &Direction) -> Result<MobiusMap> {
    if m0.base != m1.base || m1.base != minf.base {
        return Err(Error::BaseMismatch);
    }
    if m0.chart == m1.chart || m0.chart == minf.chart || m1.chart == minf.chart {
        return Err(Error::DegenerateMarking);
    }
    let det2 = |a: &[KElem; 2], b: &[KElem; 2]| -> KElem { &a[0] * &b[1] - &a[1] * &b[0] };
    // u(x) = det(x, m0) * det(m1, minf) / (det(x, minf) * det(m1, m0))
    let k_num = det2(m1.chart(), minf.chart());
    let k_den = det2(m1.chart(), m0.chart());
    let num = [
        m0.chart[1].clone() * k_num.clone(),
        -(m0.chart[0].clone() * k_num),
    ];
    let den = [
        minf.chart[1].clone() * k_den.clone(),
        -(minf.chart[0].clone() * k_den),
    ];
    Ok(MobiusMap {
        base: m0.base.clone(),
        num,
        den,
    })
}

impl MobiusMap {
    pub fn apply(&self, d: &Direction) -> Result<ProjParam> {
        if d.base != self.base {
            return Err(Error::BaseMismatch);
        }
        let n = &self.num[0] * &d.chart[0] + &self.num[1] * &d.chart[1];
        let de = &self.den[0] * &d.chart[0] + &self.den[1] * &d.chart[1];
        if de.is_zero() {
            if n.is_zero() {
                return Err(Error::DegenerateMarking);
            }
            Ok(ProjParam::Infinity)
        } else {
            Ok(ProjParam::Finite(n.div(&de)?))
        }
    }
}

impl fmt::Debug for PPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} : {} : {})",
            self.coords[0], self.coords[1], self.coords[2]
        )
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Line({} : {} : {})",
            self.coeffs[0], self.coeffs[1], self.coeffs[2]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::mono::*;

    fn k(n: i64) -> KElem {
        KElem::from_int(n)
    }

    #[test]
    fn line_through_vertices() {
        // Through (1:0:0) and (1:1:1): z - y.
        let l = line_through(&PPoint::from_ints([1, 0, 0]), &PPoint::from_ints([1, 1, 1])).unwrap();
        let zy = Line::new([k(0), k(-1), k(1)]).unwrap();
        assert_eq!(l, zy);
        // Through (0:1:0) and (0:0:1): x.
        let l2 =
            line_through(&PPoint::from_ints([0, 1, 0]), &PPoint::from_ints([0, 0, 1])).unwrap();
        assert_eq!(l2, Line::new([k(1), k(0), k(0)]).unwrap());
        assert!(matches!(
            line_through(&PPoint::from_ints([1, 2, 3]), &PPoint::from_ints([2, 4, 6])),
            Err(Error::CoincidentPoints)
        ));
    }

    #[test]
    fn line_table_contains_v0_and_h1() {
        // z - e*y passes through (1:0:0) and (1:e:e^2).
        let l = Line::new([k(0), -KElem::eps(), k(1)]).unwrap();
        assert!(l.contains(&PPoint::from_ints([1, 0, 0])));
        let h1 = PPoint::new([k(1), KElem::eps(), KElem::eps2()]).unwrap();
        assert!(l.contains(&h1));
        let cross_line = line_through(&h1, &PPoint::from_ints([1, 0, 0])).unwrap();
        assert_eq!(cross_line, l);
    }

    #[test]
    fn tangent_direction_examples() {
        let c = TernaryCubic::from_terms(&[(X3, k(1)), (Y3, k(1)), (Z3, k(-1))]);
        let p = PPoint::from_ints([1, 0, 1]);
        let d = tangent_direction(&c, &p).unwrap();
        // Tangent is x - z.
        assert_eq!(d.line(), Line::new([k(1), k(0), k(-1)]).unwrap());
        // Singular point error.
        let zy = TernaryCubic::from_terms(&[(Z3, k(1)), (Y3, k(-1))]);
        assert!(matches!(
            tangent_direction(&zy, &PPoint::from_ints([1, 0, 0])),
            Err(Error::SingularPoint)
        ));
        // Not on curve.
        assert!(matches!(
            tangent_direction(&c, &PPoint::from_ints([1, 1, 1])),
            Err(Error::PointNotOnCurve)
        ));
    }

    #[test]
    fn mobius_sends_marking_to_0_1_inf() {
        let base = PPoint::from_ints([1, 0, 0]);
        let mk = |a: KElem, b: KElem| {
            Direction::of_line(&base, &Line::new([KElem::zero(), a, b]).unwrap()).unwrap()
        };
        // Three lines through (1:0:0): z - y, z - e*y, e*z - y.
        let d0 = mk(k(-1), k(1));
        let d1 = mk(-KElem::eps(), k(1));
        let dinf = mk(k(-1), KElem::eps());
        let mob = mobius_from_marking(&d0, &d1, &dinf).unwrap();
        assert_eq!(mob.apply(&d0).unwrap(), ProjParam::Finite(KElem::zero()));
        assert_eq!(mob.apply(&d1).unwrap(), ProjParam::Finite(KElem::one()));
        assert_eq!(mob.apply(&dinf).unwrap(), ProjParam::Infinity);
        // A fourth direction lands somewhere finite and definite.
        let d = mk(k(1), k(1));
        let val = mob.apply(&d).unwrap();
        assert!(val.finite().is_some());
    }

    #[test]
    fn mobius_reordering_is_an_s3_action() {
        // Changing the marking order applies u -> 1 - u, u -> 1/u, etc.;
        // check one transposition of the marking explicitly.
        let base = PPoint::from_ints([1, 0, 0]);
        let mk = |a: KElem, b: KElem| {
            Direction::of_line(&base, &Line::new([KElem::zero(), a, b]).unwrap()).unwrap()
        };
        let d0 = mk(k(-1), k(1));
        let d1 = mk(-KElem::eps(), k(1));
        let dinf = mk(k(-1), KElem::eps());
        let probe = mk(k(3), k(5));
        let u = mobius_from_marking(&d0, &d1, &dinf)
            .unwrap()
            .apply(&probe)
            .unwrap();
        let swapped = mobius_from_marking(&d1, &d0, &dinf)
            .unwrap()
            .apply(&probe)
            .unwrap();
        // Swapping m0 and m1 sends u to 1 - u.
        let u_val = u.finite().unwrap().clone();
        assert_eq!(swapped, ProjParam::Finite(KElem::one() - u_val.clone()));
        let inverted = mobius_from_marking(&dinf, &d1, &d0)
            .unwrap()
            .apply(&probe)
            .unwrap();
        // Swapping m0 and minf sends u to 1/u.
        assert_eq!(inverted, ProjParam::Finite(u_val.inv().unwrap()));
    }
}
