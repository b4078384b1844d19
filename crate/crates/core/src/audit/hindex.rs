//! Harbourne index of the union of all Halphen cubics of order `n/3`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::numfield::Rat;
use crate::{Error, Result};

/// The singularity census of the degree-`4(n^2-3)` union for `n = 3m`:
/// 12 vertices of multiplicity `n^2 - 3`, `12(n^2/3 - 1)` infinitely-near
/// triple points, and `(n^2 - 3)(n^2/3 - 3)` quadruple points.
pub struct SingularityCensus {
    pub degree: BigInt,
    pub vertex_mult: BigInt,
    pub triple_points: BigInt,
    pub quadruple_points: BigInt,
}

pub fn singularity_census(n: u64) -> Result<SingularityCensus> {
    if n == 0 || n % 3 != 0 {
        return Err(Error::BadIndexArgument);
    }
    let n = BigInt::from(n);
    let n2 = &n * &n;
    let vertex_mult = &n2 - 3;
    Ok(SingularityCensus {
        degree: 4 * &vertex_mult,
        triple_points: 12 * (&n2 / 3 - 1),
        quadruple_points: &vertex_mult * (&n2 / 3 - 3),
        vertex_mult,
    })
}

/// Exact Harbourne index `h = (d^2 - sum m_p^2) / s`, counting
/// infinitely-near points in both the numerator and the point count.
pub fn harbourne_index(n: u64) -> Result<Rat> {
    let c = singularity_census(n)?;
    let d2 = &c.degree * &c.degree;
    let sum_sq =
        12 * &c.vertex_mult * &c.vertex_mult + 9 * &c.triple_points + 16 * &c.quadruple_points;
    let s = BigInt::from(12) + &c.triple_points + &c.quadruple_points;
    if s.is_zero() {
        return Err(Error::BadIndexArgument);
    }
    Ok(Rat::new(d2 - sum_sq, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rat_i64;

    #[test]
    fn small_values() {
        assert_eq!(harbourne_index(3).unwrap(), rat_i64(-2, 1));
        assert_eq!(harbourne_index(6).unwrap(), rat_i64(-176, 49));
        assert!(matches!(harbourne_index(4), Err(Error::BadIndexArgument)));
        assert!(matches!(harbourne_index(0), Err(Error::BadIndexArgument)));
    }

    #[test]
    fn decreasing_toward_minus_four() {
        let mut prev = harbourne_index(3).unwrap();
        for k in 2..=100u64 {
            let h = harbourne_index(3 * k).unwrap();
            assert!(h < prev, "not strictly decreasing at n = {}", 3 * k);
            assert!(h > rat_i64(-4, 1));
            prev = h;
        }
        let h300 = harbourne_index(300).unwrap();
        assert!(h300 > rat_i64(-4, 1) && h300 < rat_i64(-395, 100));
    }
}
