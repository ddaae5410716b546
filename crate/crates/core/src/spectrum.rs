//! Abstract spectral data of a graph in a scheme with an order-2 permutation class.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::time::parse_rational;

/// Eigenvalue of the permutation class on one idempotent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidSpectrum(format!("sign {other} is not +1 or -1"))),
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `(-1)^s`.
    pub fn alternating(s: usize) -> Self {
        if s % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Eigenvalues `θ_0..θ_d` of a graph together with the signs `σ_s` of the
/// permutation class on the same idempotents. Index 0 is the all-ones
/// idempotent, so `θ_0` is the valency and `σ_0 = +1`.
///
/// Eigenvalues are exact rationals. Unweighted graphs always land on integers;
/// rational values only arise from weighted combinations of classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeSpectrum {
    theta: Vec<BigRational>,
    sigma: Vec<Sign>,
    label: Option<String>,
}

impl SchemeSpectrum {
    pub fn new(theta: Vec<BigRational>, sigma: Vec<Sign>, label: Option<String>) -> Result<Self> {
        if theta.len() != sigma.len() {
            return Err(Error::InvalidSpectrum(format!(
                "{} eigenvalues but {} signs",
                theta.len(),
                sigma.len()
            )));
        }
        if theta.len() < 2 {
            return Err(Error::InvalidSpectrum("need at least two idempotents".into()));
        }
        if sigma[0] != Sign::Plus {
            return Err(Error::InvalidSpectrum("sigma_0 must be +1".into()));
        }
        Ok(SchemeSpectrum { theta, sigma, label })
    }

    pub fn from_integers<I, T>(theta: I, sigma: &[i64], label: Option<&str>) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let theta = theta.into_iter().map(|t| BigRational::from_integer(t.into())).collect();
        let sigma = sigma.iter().map(|&s| Sign::from_i64(s)).collect::<Result<_>>()?;
        SchemeSpectrum::new(theta, sigma, label.map(str::to_owned))
    }

    /// Antipodal sign rule `σ_s = (-1)^s`.
    pub fn alternating<I, T>(theta: I, label: Option<&str>) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let theta: Vec<BigRational> = theta.into_iter().map(|t| BigRational::from_integer(t.into())).collect();
        let sigma = (0..theta.len()).map(Sign::alternating).collect();
        SchemeSpectrum::new(theta, sigma, label.map(str::to_owned))
    }

    pub fn theta(&self) -> &[BigRational] {
        &self.theta
    }

    pub fn sigma(&self) -> &[Sign] {
        &self.sigma
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Diameter-like index `d` (there are `d + 1` idempotents).
    pub fn d(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn theta0(&self) -> &BigRational {
        &self.theta[0]
    }

    pub fn is_integral(&self) -> bool {
        self.theta.iter().all(|t| t.is_integer())
    }

    /// Integer eigenvalues, or `None` when some eigenvalue is fractional.
    pub fn integer_theta(&self) -> Option<Vec<BigInt>> {
        self.theta
            .iter()
            .map(|t| t.is_integer().then(|| t.to_integer()))
            .collect()
    }

    /// Spectrum of `c·A`.
    pub fn scaled(&self, c: &BigRational) -> SchemeSpectrum {
        SchemeSpectrum {
            theta: self.theta.iter().map(|t| t * c).collect(),
            sigma: self.sigma.clone(),
            label: self.label.clone(),
        }
    }

    /// Least positive integer `c` with `c·θ_s` integral for all `s`.
    pub fn integral_scale(&self) -> BigInt {
        use num_integer::Integer;
        self.theta.iter().fold(BigInt::one(), |acc, t| acc.lcm(t.denom()))
    }

    /// Parse the JSON form `{"theta": [...], "sigma": [...], "label": "..."}`.
    ///
    /// Eigenvalues may be JSON integers or strings holding `p` or `p/q`.
    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("spectrum JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("spectrum JSON must be an object".into()))?;
        let theta = obj
            .get("theta")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field \"theta\"".into()))?
            .iter()
            .map(json_rational)
            .collect::<Result<Vec<_>>>()?;
        let sigma = obj
            .get("sigma")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field \"sigma\"".into()))?
            .iter()
            .map(|v| {
                v.as_i64()
                    .ok_or_else(|| Error::Parse(format!("sign {v} is not an integer")))
                    .and_then(Sign::from_i64)
            })
            .collect::<Result<Vec<_>>>()?;
        let label = match obj.get("label") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(other) => return Err(Error::Parse(format!("label {other} is not a string"))),
        };
        SchemeSpectrum::new(theta, sigma, label)
    }

    pub fn to_json(&self) -> Value {
        let theta: Vec<Value> = self
            .theta
            .iter()
            .map(|t| {
                if t.is_integer() {
                    Value::String(t.numer().to_string())
                } else {
                    Value::String(format!("{}/{}", t.numer(), t.denom()))
                }
            })
            .collect();
        let sigma: Vec<Value> = self.sigma.iter().map(|s| Value::from(s.value())).collect();
        let mut obj = serde_json::Map::new();
        obj.insert("theta".into(), Value::Array(theta));
        obj.insert("sigma".into(), Value::Array(sigma));
        if let Some(label) = &self.label {
            obj.insert("label".into(), Value::String(label.clone()));
        }
        Value::Object(obj)
    }
}

fn json_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigRational::from_integer(BigInt::from(i)))
            } else {
                Err(Error::Parse(format!(
                    "eigenvalue {n} must be an integer or a \"p/q\" string"
                )))
            }
        }
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("eigenvalue {other} has the wrong type"))),
    }
}

impl fmt::Display for SchemeSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(label) = &self.label {
            write!(f, "{label}: ")?;
        }
        write!(f, "[")?;
        for (i, (t, s)) in self.theta.iter().zip(&self.sigma).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let sign = if *s == Sign::Plus { '+' } else { '-' };
            write!(f, "{t}{sign}")?;
        }
        write!(f, "]")
    }
}
