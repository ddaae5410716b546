//! Exact times and phases, both stored as rational multiples of π.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A walk time `(p/q)·π`, kept in lowest terms with `q ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalkTime(BigRational);

impl WalkTime {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let q = q.into();
        if q.is_zero() {
            return Err(Error::Domain("time denominator is zero".into()));
        }
        Ok(WalkTime(BigRational::new(p.into(), q)))
    }

    pub fn from_coefficient(c: BigRational) -> Self {
        WalkTime(c)
    }

    /// `π / k`.
    pub fn pi_over(k: impl Into<BigInt>) -> Self {
        WalkTime(BigRational::new(BigInt::one(), k.into()))
    }

    pub fn zero() -> Self {
        WalkTime(BigRational::zero())
    }

    /// The rational `p/q` with time `= (p/q)·π`.
    pub fn coefficient(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.0) * std::f64::consts::PI
    }
}

impl fmt::Display for WalkTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} pi", self.0.numer(), self.0.denom())
    }
}

impl FromStr for WalkTime {
    type Err = Error;

    /// Accepts `p/q pi`, `p/q`, `pi/q`, `p pi/q`, `ppi/q`, `p` (all meaning `(p/q)·π`).
    fn from_str(s: &str) -> Result<Self> {
        parse_pi_multiple(s).map(WalkTime)
    }
}

impl Serialize for WalkTime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for WalkTime {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An angle `x·π` with `x` reduced into `[0, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PiAngle(BigRational);

impl PiAngle {
    pub fn new(x: BigRational) -> Self {
        PiAngle(mod_two(&x))
    }

    pub fn zero() -> Self {
        PiAngle(BigRational::zero())
    }

    /// The coefficient in `[0, 2)`.
    pub fn coefficient(&self) -> &BigRational {
        &self.0
    }

    pub fn radians(&self) -> f64 {
        ratio_to_f64(&self.0) * std::f64::consts::PI
    }

    /// Distance to `other` on the circle, in radians.
    pub fn distance(&self, other: &PiAngle) -> f64 {
        let d = PiAngle::new(&self.0 - &other.0);
        let x = ratio_to_f64(&d.0);
        x.min(2.0 - x) * std::f64::consts::PI
    }
}

impl fmt::Display for PiAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} pi", self.0.numer(), self.0.denom())
    }
}

impl FromStr for PiAngle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pi_multiple(s).map(PiAngle::new)
    }
}

impl Serialize for PiAngle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PiAngle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `x mod 2` into `[0, 2)`.
pub fn mod_two(x: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let q = (x / &two).floor();
    x - q * two
}

/// `x mod 1` into `(-1/2, 1/2]`, together with the integer that was removed.
pub(crate) fn centered_mod_one(x: &BigRational) -> (BigRational, BigInt) {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    // k = ceil(x - 1/2) gives x - k in (-1/2, 1/2]
    let k = (x - &half).ceil().to_integer();
    (x - BigRational::from_integer(k.clone()), k)
}

pub fn ratio_to_f64(x: &BigRational) -> f64 {
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // shift both sides to ~f64 range
            let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(900);
            let n = (x.numer() >> shift).to_f64().unwrap_or(0.0);
            let d = (x.denom() >> shift).to_f64().unwrap_or(f64::INFINITY);
            n / d
        }
    }
}

/// Parse a rational literal `p`, `p/q`, or `-p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

fn parse_pi_multiple(s: &str) -> Result<BigRational> {
    let raw = s.trim();
    let bad = || Error::Parse(format!("not a rational multiple of pi: {raw:?}"));
    let compact: String = raw
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .collect::<String>()
        .replace('π', "pi");
    if compact.is_empty() {
        return Err(bad());
    }
    let (num_part, den_part) = match compact.split_once('/') {
        Some((a, b)) => (a.to_string(), b.to_string()),
        None => (compact.clone(), "1".to_string()),
    };
    // "p/q pi" puts the pi on the denominator side after compaction
    let den_part = den_part.trim_end_matches("pi").to_string();
    let num_part = num_part.trim_end_matches("pi").to_string();
    let num_part = match num_part.as_str() {
        "" => "1".to_string(),
        "-" => "-1".to_string(),
        other => other.to_string(),
    };
    let den_part = if den_part.is_empty() { "1".to_string() } else { den_part };
    let num: BigInt = num_part.parse().map_err(|_| bad())?;
    let den: BigInt = den_part.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// gcd of a list of rationals, zero for an empty or all-zero list.
///
/// Defined so that every entry is an integer multiple of the result and the
/// result is an integer combination of the entries.
pub(crate) fn rational_gcd(values: &[BigRational]) -> BigRational {
    let lcm = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let g = values.iter().fold(BigInt::zero(), |acc, v| {
        let scaled = v.numer() * (&lcm / v.denom());
        acc.gcd(&scaled)
    });
    BigRational::new(g.abs(), lcm)
}
