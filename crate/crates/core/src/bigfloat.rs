//! Fixed-point reals `m · 2^{-bits}` on arbitrary-precision integers, with
//! `cos`/`sin` of rational multiples of `π`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::time::mod_two;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigFloat {
    m: BigInt,
    bits: u32,
}

impl BigFloat {
    pub fn zero(bits: u32) -> Self {
        BigFloat {
            m: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Self {
        BigFloat {
            m: BigInt::one() << bits,
            bits,
        }
    }

    pub fn from_int(v: &BigInt, bits: u32) -> Self {
        BigFloat { m: v << bits, bits }
    }

    /// Rounded toward negative infinity.
    pub fn from_ratio(x: &BigRational, bits: u32) -> Self {
        BigFloat {
            m: (x.numer() << bits).div_floor(x.denom()),
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        BigFloat {
            m: &self.m * k,
            bits: self.bits,
        }
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        BigFloat {
            m: self.m.div_floor(k),
            bits: self.bits,
        }
    }

    /// Exact division by `2^k`, rounded down.
    pub fn shr(&self, k: u32) -> Self {
        BigFloat {
            m: &self.m >> k,
            bits: self.bits,
        }
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            m: self.m.abs(),
            bits: self.bits,
        }
    }

    /// Same value at another precision.
    pub fn with_bits(&self, bits: u32) -> Self {
        // truncation toward zero keeps negation exact
        let m = if bits >= self.bits {
            &self.m << (bits - self.bits)
        } else {
            &self.m / (BigInt::one() << (self.bits - bits))
        };
        BigFloat { m, bits }
    }

    pub fn to_f64(&self) -> f64 {
        // keep 64 significant bits before handing over to f64
        let len = self.m.bits();
        if len > 64 {
            let drop = len - 64;
            let top = (&self.m >> drop).to_f64().unwrap_or(0.0);
            top * 2f64.powi(drop as i32 - self.bits as i32)
        } else {
            self.m.to_f64().unwrap_or(0.0) * 2f64.powi(-(self.bits as i32))
        }
    }
}

impl Add for &BigFloat {
    type Output = BigFloat;
    fn add(self, o: &BigFloat) -> BigFloat {
        debug_assert_eq!(self.bits, o.bits);
        BigFloat {
            m: &self.m + &o.m,
            bits: self.bits,
        }
    }
}

impl Sub for &BigFloat {
    type Output = BigFloat;
    fn sub(self, o: &BigFloat) -> BigFloat {
        debug_assert_eq!(self.bits, o.bits);
        BigFloat {
            m: &self.m - &o.m,
            bits: self.bits,
        }
    }
}

impl Mul for &BigFloat {
    type Output = BigFloat;
    fn mul(self, o: &BigFloat) -> BigFloat {
        debug_assert_eq!(self.bits, o.bits);
        BigFloat {
            m: (&self.m * &o.m) >> self.bits,
            bits: self.bits,
        }
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat {
            m: -&self.m,
            bits: self.bits,
        }
    }
}

/// A complex number with [`BigFloat`] parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl BigComplex {
    pub fn zero(bits: u32) -> Self {
        BigComplex {
            re: BigFloat::zero(bits),
            im: BigFloat::zero(bits),
        }
    }

    pub fn mul(&self, o: &BigComplex) -> BigComplex {
        BigComplex {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }

    pub fn sub(&self, o: &BigComplex) -> BigComplex {
        BigComplex {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn scale(&self, x: &BigFloat) -> BigComplex {
        BigComplex {
            re: &self.re * x,
            im: &self.im * x,
        }
    }

    pub fn norm_sqr(&self) -> BigFloat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    /// `|z|` as an `f64`, exact up to the final rounding.
    pub fn abs_f64(&self) -> f64 {
        self.to_c64().norm()
    }
}

/// `atan(1/x) · 2^bits`.
fn atan_inv(x: u64, bits: u32) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = (BigInt::one() << bits) / &x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// `π` to `bits` fractional bits, by Machin's formula.
pub fn pi(bits: u32) -> BigFloat {
    let w = bits + 16;
    let m = atan_inv(5, w) * 16 - atan_inv(239, w) * 4;
    BigFloat { m: m >> 16, bits }
}

/// Taylor series for `|a| ≤ π/4`.
fn cos_sin_small(a: &BigFloat) -> (BigFloat, BigFloat) {
    let bits = a.bits;
    let a2 = a * a;
    let mut cos = BigFloat::one(bits);
    let mut sin = a.clone();
    let mut term_c = BigFloat::one(bits);
    let mut term_s = a.clone();
    let mut k = 1u64;
    loop {
        term_c = (&term_c * &a2).div_int(&BigInt::from((2 * k - 1) * (2 * k)));
        term_s = (&term_s * &a2).div_int(&BigInt::from((2 * k) * (2 * k + 1)));
        if term_c.is_zero() && term_s.is_zero() {
            break;
        }
        if k % 2 == 1 {
            cos = &cos - &term_c;
            sin = &sin - &term_s;
        } else {
            cos = &cos + &term_c;
            sin = &sin + &term_s;
        }
        k += 1;
    }
    (cos, sin)
}

/// Evaluates `cos(xπ)` and `sin(xπ)` for rational `x`, with repeated
/// evaluations sharing one value of `π`.
pub struct TrigPi {
    bits: u32,
    work: u32,
    pi: BigFloat,
}

const GUARD_BITS: u32 = 32;

impl TrigPi {
    pub fn new(bits: u32) -> Self {
        let work = bits + GUARD_BITS;
        TrigPi {
            bits,
            work,
            pi: pi(work),
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// `(cos xπ, sin xπ)` at `bits` fractional bits. The argument is
    /// reduced exactly, so multiples of `1/4` come out exact.
    pub fn cos_sin(&self, x: &BigRational) -> (BigFloat, BigFloat) {
        let (c, s) = self.cos_sin_work(&mod_two(x));
        (c.with_bits(self.bits), s.with_bits(self.bits))
    }

    fn cos_sin_work(&self, x: &BigRational) -> (BigFloat, BigFloat) {
        let one = BigRational::one();
        let half = BigRational::new(1.into(), 2.into());
        let quarter = BigRational::new(1.into(), 4.into());
        if *x >= one {
            let (c, s) = self.cos_sin_work(&(x - &one));
            return (-&c, -&s);
        }
        if *x > half {
            let (c, s) = self.cos_sin_work(&(&one - x));
            return (-&c, s);
        }
        if *x > quarter {
            let (c, s) = self.cos_sin_work(&(&half - x));
            return (s, c);
        }
        if x.is_zero() {
            return (BigFloat::one(self.work), BigFloat::zero(self.work));
        }
        if *x == quarter {
            let r = sqrt_half(self.work);
            return (r.clone(), r);
        }
        let a = self.pi.mul_int(x.numer()).div_int(x.denom());
        cos_sin_small(&a)
    }

    /// `e^{ixπ}`.
    pub fn cis(&self, x: &BigRational) -> BigComplex {
        let (re, im) = self.cos_sin(x);
        BigComplex { re, im }
    }
}

/// `1/√2` at `bits` fractional bits, rounded down.
pub fn sqrt_half(bits: u32) -> BigFloat {
    // floor(sqrt(2^(2 bits - 1)))
    let m = num_integer::Roots::sqrt(&(BigInt::one() << (2 * bits - 1)));
    BigFloat { m, bits }
}
