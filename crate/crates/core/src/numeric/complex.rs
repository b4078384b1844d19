//! Complex numbers over the fixed-point reals.

use super::fixed::Fx;
use crate::numfield::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct Cx {
    pub re: Fx,
    pub im: Fx,
}

impl Cx {
    pub fn new(re: Fx, im: Fx) -> Cx {
        debug_assert_eq!(re.bits(), im.bits());
        Cx { re, im }
    }

    pub fn zero(bits: u32) -> Cx {
        Cx::new(Fx::zero(bits), Fx::zero(bits))
    }

    pub fn from_int(n: i64, bits: u32) -> Cx {
        Cx::new(Fx::from_int(n, bits), Fx::zero(bits))
    }

    pub fn from_rats(re: &Rat, im: &Rat, bits: u32) -> Cx {
        Cx::new(Fx::from_rat(re, bits), Fx::from_rat(im, bits))
    }

    pub fn bits(&self) -> u32 {
        self.re.bits()
    }

    pub fn add(&self, o: &Cx) -> Cx {
        Cx::new(self.re.add(&o.re), self.im.add(&o.im))
    }

    pub fn sub(&self, o: &Cx) -> Cx {
        Cx::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }

    pub fn neg(&self) -> Cx {
        Cx::new(self.re.neg(), self.im.neg())
    }

    pub fn mul(&self, o: &Cx) -> Cx {
        Cx::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }

    pub fn mul_int(&self, n: i64) -> Cx {
        Cx::new(self.re.mul_int(n), self.im.mul_int(n))
    }

    pub fn div(&self, o: &Cx) -> Cx {
        let d = o.norm_sq();
        let num = self.mul(&o.conj());
        Cx::new(num.re.div(&d), num.im.div(&d))
    }

    pub fn conj(&self) -> Cx {
        Cx::new(self.re.clone(), self.im.neg())
    }

    pub fn norm_sq(&self) -> Fx {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn abs(&self) -> Fx {
        self.norm_sq().sqrt()
    }

    pub fn dist(&self, o: &Cx) -> Fx {
        self.sub(o).abs()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn square(&self) -> Cx {
        self.mul(self)
    }

    pub fn with_bits(&self, bits: u32) -> Cx {
        Cx::new(self.re.with_bits(bits), self.im.with_bits(bits))
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn render(&self, digits: u32) -> String {
        format!(
            "{} {}i",
            self.re.to_decimal(digits),
            self.im.to_decimal(digits)
        )
    }
}

impl std::fmt::Debug for Cx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (re, im) = self.to_f64_pair();
        write!(f, "Cx({re:.6e} + {im:.6e}i)")
    }
}
