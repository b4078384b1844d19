//! Fixed-point arbitrary-precision reals: an integer mantissa scaled by
//! `2^-bits`. All values in one computation share the same scale, which
//! keeps the arithmetic simple and the error analysis absolute.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numfield::Rat;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fx {
    m: BigInt,
    bits: u32,
}

impl Fx {
    pub fn zero(bits: u32) -> Fx {
        Fx {
            m: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Fx {
        Fx::from_int(1, bits)
    }

    pub fn from_int(n: i64, bits: u32) -> Fx {
        Fx {
            m: BigInt::from(n) << bits,
            bits,
        }
    }

    pub fn from_rat(r: &Rat, bits: u32) -> Fx {
        Fx {
            m: div_round(&(r.numer() << bits), r.denom()),
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.m.is_negative()
    }

    pub fn add(&self, o: &Fx) -> Fx {
        debug_assert_eq!(self.bits, o.bits);
        Fx {
            m: &self.m + &o.m,
            bits: self.bits,
        }
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        debug_assert_eq!(self.bits, o.bits);
        Fx {
            m: &self.m - &o.m,
            bits: self.bits,
        }
    }

    pub fn neg(&self) -> Fx {
        Fx {
            m: -&self.m,
            bits: self.bits,
        }
    }

    pub fn abs(&self) -> Fx {
        Fx {
            m: self.m.abs(),
            bits: self.bits,
        }
    }

    pub fn mul(&self, o: &Fx) -> Fx {
        debug_assert_eq!(self.bits, o.bits);
        Fx {
            m: shift_round(&(&self.m * &o.m), self.bits),
            bits: self.bits,
        }
    }

    pub fn mul_int(&self, n: i64) -> Fx {
        Fx {
            m: &self.m * BigInt::from(n),
            bits: self.bits,
        }
    }

    pub fn div(&self, o: &Fx) -> Fx {
        debug_assert_eq!(self.bits, o.bits);
        assert!(!o.m.is_zero(), "fixed-point division by zero");
        Fx {
            m: div_round(&(&self.m << self.bits), &o.m),
            bits: self.bits,
        }
    }

    pub fn div_int(&self, n: i64) -> Fx {
        Fx {
            m: div_round(&self.m, &BigInt::from(n)),
            bits: self.bits,
        }
    }

    /// Square root of a nonnegative value.
    pub fn sqrt(&self) -> Fx {
        assert!(!self.m.is_negative(), "sqrt of a negative value");
        Fx {
            m: (&self.m << self.bits).sqrt(),
            bits: self.bits,
        }
    }

    /// `sqrt(n)` for a small nonnegative integer.
    pub fn sqrt_int(n: u64, bits: u32) -> Fx {
        Fx {
            m: (BigInt::from(n) << (2 * bits)).sqrt(),
            bits,
        }
    }

    /// `n^(1/3)` for a small nonnegative integer.
    pub fn cbrt_int(n: u64, bits: u32) -> Fx {
        Fx {
            m: (BigInt::from(n) << (3 * bits)).cbrt(),
            bits,
        }
    }

    /// Exact rescaling to another bit width (rounding when narrowing).
    pub fn with_bits(&self, bits: u32) -> Fx {
        if bits >= self.bits {
            Fx {
                m: &self.m << (bits - self.bits),
                bits,
            }
        } else {
            Fx {
                m: shift_round(&self.m, self.bits - bits),
                bits,
            }
        }
    }

    /// One unit in the last place at these bits.
    pub fn ulp(bits: u32) -> Fx {
        Fx {
            m: BigInt::one(),
            bits,
        }
    }

    /// `10^-k` (rounded).
    pub fn pow10_neg(k: u32, bits: u32) -> Fx {
        let denom = BigInt::from(10u32).pow(k);
        Fx {
            m: div_round(&(BigInt::one() << bits), &denom),
            bits,
        }
    }

    /// pi by the Machin formula with integer term arithmetic.
    pub fn pi(bits: u32) -> Fx {
        let work = bits + 16;
        let atan_inv = |x: i64| -> BigInt {
            // atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1))
            let xsq = BigInt::from(x) * BigInt::from(x);
            let mut term = (BigInt::one() << work) / BigInt::from(x);
            let mut acc = BigInt::zero();
            let mut k = 0u32;
            while !term.is_zero() {
                let contrib = &term / BigInt::from(2 * k as i64 + 1);
                if k % 2 == 0 {
                    acc += contrib;
                } else {
                    acc -= contrib;
                }
                term /= &xsq;
                k += 1;
            }
            acc
        };
        let m = atan_inv(5) * 16u8 - atan_inv(239) * 4u8;
        Fx {
            m: shift_round(&m, work - bits),
            bits,
        }
    }

    /// `exp(self)` for arbitrary sign, by halving and Taylor series.
    pub fn exp(&self) -> Fx {
        if self.m.is_negative() {
            return Fx::one(self.bits).div(&self.neg().exp());
        }
        // Halve until the argument is below 1/16.
        let mut halvings = 0u32;
        let mut arg = self.clone();
        let threshold = Fx {
            m: BigInt::one() << (self.bits - 4),
            bits: self.bits,
        };
        while arg > threshold {
            arg = Fx {
                m: &arg.m >> 1,
                bits: self.bits,
            };
            halvings += 1;
        }
        // Taylor series at the reduced argument.
        let mut acc = Fx::one(self.bits);
        let mut term = Fx::one(self.bits);
        let mut k = 1i64;
        while !term.is_zero() {
            term = term.mul(&arg).div_int(k);
            acc = acc.add(&term);
            k += 1;
        }
        for _ in 0..halvings {
            acc = acc.mul(&acc);
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        let scale = 2f64.powi(-(self.bits as i32));
        self.m.to_f64().map(|m| m * scale).unwrap_or(f64::NAN)
    }

    /// Decimal rendering with the requested number of fractional digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        let shifted = &self.m * BigInt::from(10u32).pow(digits);
        let scaled = shift_round(&shifted, self.bits);
        let neg = scaled.is_negative();
        let digits_str = scaled.abs().to_string();
        let mut s = digits_str;
        let d = digits as usize;
        if s.len() <= d {
            s = format!("{}{}", "0".repeat(d + 1 - s.len()), s);
        }
        let split = s.len() - d;
        let (int_part, frac) = s.split_at(split);
        format!("{}{}.{}", if neg { "-" } else { "" }, int_part, frac)
    }
}

fn shift_round(n: &BigInt, bits: u32) -> BigInt {
    let half = BigInt::one() << (bits - 1);
    if n.is_negative() {
        -((-n + half) >> bits)
    } else {
        (n + half) >> bits
    }
}

fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = n.div_rem(d);
    let two_r: BigInt = &r * 2;
    if two_r.magnitude() >= d.magnitude() {
        if (n.is_negative()) == (d.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

impl std::fmt::Debug for Fx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Fx({:.6e})", self.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::rat_i64;

    const BITS: u32 = 256;

    #[test]
    fn pi_prefix() {
        let pi = Fx::pi(BITS);
        let s = pi.to_decimal(56);
        assert!(s.starts_with("3.14159265358979323846264338327950288419716939937510"));
    }

    #[test]
    fn roots_and_exp() {
        let s3 = Fx::sqrt_int(3, BITS);
        assert!(s3
            .to_decimal(46)
            .starts_with("1.7320508075688772935274463415058723669428"));
        let c2 = Fx::cbrt_int(2, BITS);
        assert!(c2
            .to_decimal(46)
            .starts_with("1.2599210498948731647672106072782283505702"));
        // exp(1) = 2.71828...
        let e = Fx::one(BITS).exp();
        assert!(e
            .to_decimal(36)
            .starts_with("2.718281828459045235360287471352"));
        // exp(-x) * exp(x) = 1 to ulp-level error.
        let x = Fx::from_rat(&rat_i64(54, 10), BITS);
        let prod = x.exp().mul(&x.neg().exp());
        let err = prod.sub(&Fx::one(BITS)).abs();
        assert!(err < Fx::pow10_neg(70, BITS));
    }

    #[test]
    fn rounding_is_symmetric() {
        let a = Fx::from_rat(&rat_i64(1, 3), BITS);
        let b = Fx::from_rat(&rat_i64(-1, 3), BITS);
        assert_eq!(a.neg(), b);
        assert_eq!(a.add(&b), Fx::zero(BITS));
    }
}
