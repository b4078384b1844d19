//! Equianharmonic `3m`-torsion parameters on a marked line: the images of
//! the `3m`-torsion of `x^3 + y^3 - z^3` under projection from the vertex
//! `v_1 = (0 : 1 : 0)`, in the coordinate where the three flex lines through
//! `v_1` sit at `{0, 1, infinity}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::elliptic::{six_torsion, torsion_curve_flexes};
use crate::numfield::KElem;
use crate::plane::{line_through, PPoint, ProjParam};
use crate::{Error, Result};

/// An exact set of equianharmonic torsion parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSet {
    pub order: u32,
    pub values: BTreeSet<KElem>,
}

impl ParamSet {
    /// `3 m^2 - 1`, the expected number of parameters.
    pub fn expected_len(m: u32) -> usize {
        (3 * m * m - 1) as usize
    }

    pub fn is_s3_closed(&self) -> bool {
        self.values.iter().all(|u| {
            s3_orbit(u)
                .map(|orb| orb.iter().all(|v| self.values.contains(v)))
                .unwrap_or(false)
        })
    }
}

/// Projection parameter of `p` from the vertex `v_1 = (0:1:0)`: the line
/// through `p` and `v_1` written as `alpha*L0 + beta*L_inf` with
/// `L0 = e*z - x`, `L_inf = z - e*x`, returning `beta/alpha`.
pub fn project_from_vertex(p: &PPoint) -> Result<ProjParam> {
    let v1 = PPoint::from_ints([0, 1, 0]);
    if *p == v1 {
        return Err(Error::CoincidentPoints);
    }
    let line = line_through(p, &v1)?;
    // Lines through v1 have zero y-coefficient: a*x + c*z.
    let [a, _, c] = line.coeffs().clone();
    // Solve the 2x2 system
    //   [ -1  -e ] [alpha]   [a]
    //   [  e   1 ] [beta ] = [c]
    // whose columns are the (x, z) coefficients of L0 and L_inf.
    let e = KElem::eps();
    let det = -KElem::one() + e.pow(2);
    let alpha = (a.clone() + e.clone() * c.clone()).div(&det)?;
    let beta = (-(c.clone()) - e * a).div(&det)?;
    if alpha.is_zero() {
        Ok(ProjParam::Infinity)
    } else {
        Ok(ProjParam::Finite(beta.div(&alpha)?))
    }
}

/// The orbit of `u` under the marked-line symmetries generated by
/// `u -> 1/u` and `u -> 1 - u`.
pub fn s3_orbit(u: &KElem) -> Result<BTreeSet<KElem>> {
    if u.is_zero() || u.is_one() {
        return Err(Error::BranchParameter);
    }
    let one = KElem::one();
    let mut orbit = BTreeSet::new();
    orbit.insert(u.clone());
    orbit.insert(u.inv()?);
    let om = one.clone() - u.clone();
    orbit.insert(om.clone());
    orbit.insert(om.inv()?);
    let ratio = (u.clone() - one.clone()).div(u)?;
    orbit.insert(ratio.clone());
    orbit.insert(ratio.inv()?);
    Ok(orbit)
}

/// The parameter `tau` attached to the order-2 torsion construction.
pub fn tau() -> KElem {
    let num = -KElem::eps() * (KElem::b() * KElem::eps2() - KElem::one());
    let den = KElem::b() * KElem::eps() - KElem::one();
    num.div(&den).unwrap()
}

/// Exact equianharmonic `3m`-torsion parameters for `m = 1, 2`, computed by
/// projecting the torsion points of `x^3 + y^3 - z^3` from `v_1` and
/// discarding the branch values `{0, 1, infinity}`.
pub fn p1_torsion_exact(m: u32) -> Result<ParamSet> {
    let points: Vec<PPoint> = match m {
        1 => torsion_curve_flexes(),
        2 => six_torsion()?,
        _ => return Err(Error::UnsupportedOrder(m)),
    };
    let mut values = BTreeSet::new();
    for p in &points {
        match project_from_vertex(p)? {
            ProjParam::Infinity => {}
            ProjParam::Finite(u) => {
                if !u.is_zero() && !u.is_one() {
                    values.insert(u);
                }
            }
        }
    }
    let set = ParamSet { order: m, values };
    if set.values.len() != ParamSet::expected_len(m) {
        return Err(Error::Check(format!(
            "expected {} torsion parameters for m = {m}, found {}",
            ParamSet::expected_len(m),
            set.values.len()
        )));
    }
    Ok(set)
}
