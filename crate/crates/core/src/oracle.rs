//! Independent evaluation of `U(τ)e_a` for graphs in `H(n,2)`, by distance
//! class, and a dense fallback for explicit schemes.
//!
//! The profile is `f(d) = 2^{-n} Σ_j e^{-iθ_jτ} p_j(d)`, the entry of `U(τ)`
//! between two vertices at Hamming distance `d`. Each phase `θ_j τ/π` is
//! reduced mod 2 in exact arithmetic before any trigonometry.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bigfloat::{BigComplex, BigFloat, TrigPi};
use crate::error::{Error, Result};
use crate::hamming::{hamming_spectrum, HammingGraphSpec};
use crate::number_theory::{binomial, krawtchouk_table};
use crate::revival::RevivalParameters;
use crate::scheme::{ExplicitScheme, SchemeEigenbasis};
use crate::spectrum::SchemeSpectrum;
use crate::time::{mod_two, ratio_to_f64, WalkTime};

/// Tolerance for double-precision paths.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Bits above `n` needed after the cancellation in the sum over `j`.
pub const PRECISION_MARGIN: u32 = 64;

/// Minimum working precision for `H(n,2)`.
pub fn required_precision(n: u64) -> u32 {
    n as u32 + PRECISION_MARGIN
}

#[derive(Clone, Debug)]
pub struct AmplitudeProfile {
    pub n: u64,
    pub tau: WalkTime,
    /// 53 for the double-precision path.
    pub precision_bits: u32,
    pub amplitudes: Vec<Complex64>,
    /// The same amplitudes at full precision, on the big-float path.
    pub exact: Option<Vec<BigComplex>>,
}

impl AmplitudeProfile {
    pub fn is_big(&self) -> bool {
        self.exact.is_some()
    }

    /// Default tolerance: `2^{-(bits - n - 32)}` for big-float profiles.
    pub fn default_tolerance(&self) -> f64 {
        if self.is_big() {
            2f64.powi(-(self.precision_bits as i32 - self.n as i32 - 32))
        } else {
            DEFAULT_TOLERANCE
        }
    }

    /// `|Σ_d C(n,d)|f(d)|² - 1|`.
    pub fn unitarity_defect(&self) -> f64 {
        match &self.exact {
            Some(big) => {
                let bits = self.precision_bits;
                let mut sum = BigFloat::zero(bits);
                for (d, z) in big.iter().enumerate() {
                    sum = &sum + &z.norm_sqr().mul_int(&binomial(self.n, d as i64));
                }
                (&sum - &BigFloat::one(bits)).to_f64().abs()
            }
            None => {
                let s: f64 = self
                    .amplitudes
                    .iter()
                    .enumerate()
                    .map(|(d, z)| binomial(self.n, d as i64).to_f64().unwrap_or(f64::INFINITY) * z.norm_sqr())
                    .sum();
                (s - 1.0).abs()
            }
        }
    }

    /// The unitarity bound `2^{-bits/2}` for big-float profiles; for
    /// double-precision ones, [`DEFAULT_TOLERANCE`].
    pub fn unitarity_bound(&self) -> f64 {
        if self.is_big() {
            2f64.powi(-(self.precision_bits as i32) / 2)
        } else {
            DEFAULT_TOLERANCE
        }
    }

    /// Largest `|f(d)|` over `0 < d < n`, with its `d`.
    pub fn max_interior(&self) -> (usize, f64) {
        let n = self.n as usize;
        (1..n)
            .map(|d| (d, self.amplitudes[d].norm()))
            .fold((0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc })
    }

    /// `{n, tau, precision_bits, amplitudes: [{d, re, im, abs}]}`.
    pub fn to_json(&self) -> Value {
        let amps: Vec<Value> = self
            .amplitudes
            .iter()
            .enumerate()
            .map(|(d, z)| json!({"d": d, "re": z.re, "im": z.im, "abs": z.norm()}))
            .collect();
        json!({
            "n": self.n,
            "tau": self.tau.to_string(),
            "precision_bits": self.precision_bits,
            "amplitudes": amps,
        })
    }
}

/// Exact phases `-θ_j τ/π mod 2`.
fn phases(spectrum: &SchemeSpectrum, tau: &WalkTime) -> Vec<BigRational> {
    spectrum
        .theta()
        .iter()
        .map(|t| mod_two(&-(t * tau.coefficient())))
        .collect()
}

/// Big-float profile at `precision_bits`, which must be at least `n + 64`.
pub fn amplitude_profile(spec: &HammingGraphSpec, tau: &WalkTime, precision_bits: u32) -> Result<AmplitudeProfile> {
    let n = spec.n();
    let required = required_precision(n);
    if precision_bits < required {
        return Err(Error::PrecisionTooLow {
            requested: precision_bits,
            required,
        });
    }
    let spectrum = hamming_spectrum(spec);
    let trig = TrigPi::new(precision_bits + 32);
    let work = trig.bits();
    let cis: Vec<BigComplex> = phases(&spectrum, tau).par_iter().map(|x| trig.cis(x)).collect();
    let table = krawtchouk_table(n as usize);
    let exact: Vec<BigComplex> = table
        .par_iter()
        .map(|row| {
            let mut acc = BigComplex::zero(work);
            for (p, z) in row.iter().zip(&cis) {
                acc.re = &acc.re + &z.re.mul_int(p);
                acc.im = &acc.im + &z.im.mul_int(p);
            }
            BigComplex {
                re: acc.re.shr(n as u32).with_bits(precision_bits),
                im: acc.im.shr(n as u32).with_bits(precision_bits),
            }
        })
        .collect();
    Ok(AmplitudeProfile {
        n,
        tau: tau.clone(),
        precision_bits,
        amplitudes: exact.iter().map(BigComplex::to_c64).collect(),
        exact: Some(exact),
    })
}

/// Double-precision profile. The phases are still reduced exactly, so the
/// absolute error stays near machine epsilon; the Krawtchouk values must fit
/// in an `f64`, which holds for `n` below about 1000.
pub fn amplitude_profile_f64(spec: &HammingGraphSpec, tau: &WalkTime) -> Result<AmplitudeProfile> {
    let n = spec.n();
    if n > 1000 {
        return Err(Error::PrecisionTooLow {
            requested: 53,
            required: required_precision(n),
        });
    }
    let spectrum = hamming_spectrum(spec);
    let cis: Vec<Complex64> = phases(&spectrum, tau)
        .iter()
        .map(|x| Complex64::from_polar(1.0, ratio_to_f64(x) * std::f64::consts::PI))
        .collect();
    let scale = 2f64.powi(-(n as i32));
    let amplitudes = krawtchouk_table(n as usize)
        .iter()
        .map(|row| {
            let s: Complex64 = row
                .iter()
                .zip(&cis)
                .map(|(p, z)| z * p.to_f64().unwrap_or(f64::NAN))
                .sum();
            s * scale
        })
        .collect();
    Ok(AmplitudeProfile {
        n,
        tau: tau.clone(),
        precision_bits: 53,
        amplitudes,
        exact: None,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RevivalCheck {
    pub pass: bool,
    pub tolerance: f64,
    /// `|f(0) - e^{iζ}α|`.
    pub f0_residual: f64,
    /// `|f(n) - e^{iζ}β|`.
    pub fn_residual: f64,
    /// `max |f(d)|` over `0 < d < n`, and where it occurs.
    pub max_interior: f64,
    pub max_interior_at: usize,
    /// `|f(d) - expected(d)|` for every `d`.
    pub residuals: Vec<f64>,
}

/// Compares a profile with `U(τ) = e^{iζ}(αI + βA_n)`.
pub fn verify_revival(
    profile: &AmplitudeProfile,
    expected: &RevivalParameters,
    tolerance: f64,
) -> Result<RevivalCheck> {
    if profile.tau != expected.tau {
        return Err(Error::Domain(format!(
            "profile at {} but parameters at {}",
            profile.tau, expected.tau
        )));
    }
    let n = profile.n as usize;
    let residuals: Vec<f64> = match &profile.exact {
        Some(big) => {
            let trig = TrigPi::new(profile.precision_bits);
            let phase = trig.cis(expected.zeta.coefficient());
            let (cos_t, sin_t) = trig.cos_sin(&expected.angle);
            let zero = BigFloat::zero(profile.precision_bits);
            let want0 = phase.scale(&cos_t);
            let want_n = phase.mul(&BigComplex { re: zero, im: sin_t });
            big.iter()
                .enumerate()
                .map(|(d, z)| match d {
                    0 => z.sub(&want0).abs_f64(),
                    d if d == n => z.sub(&want_n).abs_f64(),
                    _ => z.abs_f64(),
                })
                .collect()
        }
        None => {
            let phase = Complex64::from_polar(1.0, expected.zeta.radians());
            let alpha = expected.alpha();
            let beta = expected.beta();
            profile
                .amplitudes
                .iter()
                .enumerate()
                .map(|(d, z)| match d {
                    0 => (z - phase * alpha).norm(),
                    d if d == n => (z - phase * beta).norm(),
                    _ => z.norm(),
                })
                .collect()
        }
    };
    // n = 0 never occurs; for n = 1 there is no interior
    let (max_interior_at, max_interior) =
        (1..n)
            .map(|d| (d, residuals[d]))
            .fold((0, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
    let f0_residual = residuals[0];
    let fn_residual = residuals[n];
    Ok(RevivalCheck {
        pass: f0_residual < tolerance && fn_residual < tolerance && max_interior < tolerance,
        tolerance,
        f0_residual,
        fn_residual,
        max_interior,
        max_interior_at,
        residuals,
    })
}

/// Dense walk on an explicit scheme via its shared eigenbasis.
pub struct DenseWalker {
    basis: SchemeEigenbasis,
    vertex_count: usize,
}

impl DenseWalker {
    pub fn new(scheme: &ExplicitScheme) -> Result<Self> {
        Ok(DenseWalker {
            basis: SchemeEigenbasis::new(scheme)?,
            vertex_count: scheme.vertex_count(),
        })
    }

    /// `U(τ)e_a` for the graph `Σ w_i A_{c_i}`.
    pub fn walk(&self, classes: &[usize], weights: &[f64], tau: &WalkTime, a: usize) -> Result<Vec<Complex64>> {
        if a >= self.vertex_count {
            return Err(Error::InvalidParameters(format!("vertex {a} out of range")));
        }
        let c = ratio_to_f64(tau.coefficient());
        let lambdas = self.basis.graph_eigenvalues(classes, weights);
        let mut out = vec![Complex64::new(0.0, 0.0); self.vertex_count];
        for (space, lambda) in self.basis.spaces.iter().zip(lambdas) {
            let phase = Complex64::from_polar(1.0, -(lambda * c).rem_euclid(2.0) * std::f64::consts::PI);
            // column a of V Vᵀ
            let row = space.row(a);
            let col = space * row.transpose();
            for (o, v) in out.iter_mut().zip(col.iter()) {
                *o += phase * v;
            }
        }
        Ok(out)
    }
}

/// One-off [`DenseWalker::walk`]; at most 4096 vertices.
pub fn dense_walk(
    scheme: &ExplicitScheme,
    graph_classes: &[usize],
    weights: &[f64],
    tau: &WalkTime,
    a: usize,
) -> Result<Vec<Complex64>> {
    DenseWalker::new(scheme)?.walk(graph_classes, weights, tau, a)
}

/// Reads the profile off a dense Hamming walk from vertex 0.
pub fn profile_from_dense(n: u32, amplitudes: &[Complex64]) -> Vec<Complex64> {
    (0..=n)
        .map(|d| {
            let v = (1usize << d) - 1;
            amplitudes[v]
        })
        .collect()
}

/// `f64` weights of a spec, for the dense path.
pub fn dense_weights(spec: &HammingGraphSpec) -> (Vec<usize>, Vec<f64>) {
    let classes = spec.classes().iter().map(|&r| r as usize).collect();
    let weights = spec.weights().iter().map(ratio_to_f64).collect();
    (classes, weights)
}

/// `true` when the spec's eigenvalues are integers, so `U(2π) = I`.
pub fn is_integral(spec: &HammingGraphSpec) -> bool {
    hamming_spectrum(spec).is_integral()
}
