//! Scheme-level characterization of fractional revival.
//!
//! Given the eigenvalues `θ_s` of a graph and the signs `σ_s` of an order-2
//! permutation class `A_q`, revival from every vertex to its partner under
//! `A_q` happens at time `τ` exactly when
//!
//! * `(θ_s - θ_0)·τ ≡ 0 (mod 2π)` for every `s` with `σ_s = +1`, and
//! * `(θ_s - θ_0)·τ` takes one common value `2ϑ (mod 2π)` over `σ_s = -1`,
//!
//! in which case `U(τ) = e^{iζ}(cos ϑ·I + i sin ϑ·A_q)` with `ζ = -θ_0 τ - ϑ`.
//!
//! With `g = gcd{θ_0 - θ_s}` and `hg = gcd{θ_r - θ_s : σ_r = σ_s}`, the
//! admissible `m` in `τ = 2tπ/(mg)` are exactly the divisors of `h`, which
//! gives the classification by `h` and the minimum time `2π/(hg)`.
//!
//! Everything here is exact: times and phases are rational multiples of π,
//! and the congruences are evaluated on those rationals modulo 2.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number_theory::divisors;
use crate::spectrum::{SchemeSpectrum, Sign};
use crate::time::{centered_mod_one, mod_two, ratio_to_f64, rational_gcd, PiAngle, WalkTime};

/// The `h` invariant. `Unconstrained` means the same-sign pair set has gcd 0,
/// so every `m ≥ 1` is admissible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HValue {
    Finite(BigInt),
    Unconstrained,
}

impl HValue {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            HValue::Finite(h) => Some(h),
            HValue::Unconstrained => None,
        }
    }

    pub fn admits(&self, m: &BigInt) -> bool {
        match self {
            HValue::Finite(h) => m.is_positive() && (h % m).is_zero(),
            HValue::Unconstrained => m.is_positive(),
        }
    }
}

impl std::fmt::Display for HValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HValue::Finite(h) => write!(f, "{h}"),
            HValue::Unconstrained => write!(f, "unconstrained"),
        }
    }
}

/// A divisor `m` of `h` with its residue `μ ∈ [0, m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleM {
    pub m: BigInt,
    pub mu: BigInt,
}

/// The gcd invariants `g`, `h` of a spectrum and what is needed to derive `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RevivalInvariants {
    /// `gcd{θ_0 - θ_s}`; an integer for unweighted graphs.
    pub g: BigRational,
    pub h: HValue,
    pub theta0: BigRational,
    /// `(θ_0 - θ_s)/g` for some `s` with `σ_s = -1`; `μ = this mod m`.
    minus_value: Option<BigInt>,
    /// Every divisor of `h` with its `μ`. Empty when `h` is unconstrained or
    /// too large to factor.
    pub admissible: Vec<AdmissibleM>,
}

impl RevivalInvariants {
    /// Assemble invariants from closed-form data. `minus_value` is
    /// `(θ_0 - θ_s)/g` for any `s` with `σ_s = -1`.
    pub fn from_parts(g: BigRational, h: HValue, theta0: BigRational, minus_value: Option<BigInt>) -> Result<Self> {
        if !g.is_positive() {
            return Err(Error::DegenerateSpectrum);
        }
        let mut inv = RevivalInvariants {
            g,
            h,
            theta0,
            minus_value,
            admissible: Vec::new(),
        };
        if let HValue::Finite(h) = &inv.h {
            if let Some(divs) = divisors(h) {
                inv.admissible = divs
                    .into_iter()
                    .map(|m| {
                        let mu = inv.raw_mu(&m);
                        AdmissibleM { m, mu }
                    })
                    .collect();
            }
        }
        Ok(inv)
    }

    fn raw_mu(&self, m: &BigInt) -> BigInt {
        match &self.minus_value {
            Some(v) => v.mod_floor(m),
            None => BigInt::zero(),
        }
    }

    /// `μ` for an admissible `m`, in `[0, m)`.
    pub fn mu_for(&self, m: &BigInt) -> Result<BigInt> {
        if !self.h.admits(m) {
            return Err(Error::NotAdmissible {
                m: m.to_string(),
                h: self.h.to_string(),
            });
        }
        Ok(self.raw_mu(m))
    }

    /// `g` as an integer when it is one.
    pub fn g_integer(&self) -> Option<BigInt> {
        self.g.is_integer().then(|| self.g.to_integer())
    }

    /// Revival parameters at `τ = 2tπ/(mg)`.
    ///
    /// The half-angle is `ϑ ≡ -tμπ/m`, normalized into `(-π/2, π/2]` so that
    /// `α = cos ϑ ≥ 0`; the global phase `ζ = -θ_0 τ - ϑ` absorbs the shift.
    pub fn params(&self, m: &BigInt, t: &BigInt) -> Result<RevivalParameters> {
        let mu = self.mu_for(m)?;
        let tau = BigRational::new(BigInt::from(2) * t, m.clone()) / &self.g;
        let raw_angle = -BigRational::new(t * &mu, m.clone());
        Ok(RevivalParameters::from_angle(
            WalkTime::from_coefficient(tau),
            &self.theta0,
            &raw_angle,
            m.clone(),
            t.clone(),
            mu,
        ))
    }
}

/// Outcome class of the `h` invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Classification {
    #[serde(rename = "NoFRnoPST")]
    NoFrNoPst,
    #[serde(rename = "PSTOnly")]
    PstOnly,
    #[serde(rename = "FRnotBalanced")]
    FrNotBalanced,
    #[serde(rename = "BalancedFR")]
    BalancedFr,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::NoFrNoPst => "NoFRnoPST",
            Classification::PstOnly => "PSTOnly",
            Classification::FrNotBalanced => "FRnotBalanced",
            Classification::BalancedFr => "BalancedFR",
        }
    }

    pub fn has_revival(self) -> bool {
        self != Classification::NoFrNoPst
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BetaPhase {
    #[serde(rename = "+i")]
    PlusI,
    #[serde(rename = "-i")]
    MinusI,
}

/// What kind of event a set of revival parameters describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RevivalKind {
    /// `β = 0`.
    Periodic,
    /// `α = 0`.
    PerfectStateTransfer,
    /// `|α| = |β| = 1/√2`.
    Balanced,
    /// Any other `β ≠ 0`.
    Fractional,
}

/// `U(τ) = e^{iζ}(α I + β A_q)` with `α = cos ϑ`, `β = i sin ϑ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RevivalParameters {
    pub tau: WalkTime,
    pub zeta: PiAngle,
    /// `ϑ/π` in `(-1/2, 1/2]`.
    pub angle: BigRational,
    pub m: BigInt,
    pub t: BigInt,
    pub mu: BigInt,
}

impl RevivalParameters {
    fn from_angle(
        tau: WalkTime,
        theta0: &BigRational,
        raw_angle: &BigRational,
        m: BigInt,
        t: BigInt,
        mu: BigInt,
    ) -> Self {
        let raw_zeta = -(theta0 * tau.coefficient()) - raw_angle;
        let (angle, shift) = centered_mod_one(raw_angle);
        // ϑ -> ϑ - kπ flips (α, β) by (-1)^k, so ζ gains kπ
        let zeta = PiAngle::new(raw_zeta + BigRational::from_integer(shift));
        RevivalParameters {
            tau,
            zeta,
            angle,
            m,
            t,
            mu,
        }
    }

    pub fn alpha(&self) -> f64 {
        exact_cos_pi(&self.angle)
    }

    pub fn beta_magnitude(&self) -> f64 {
        exact_sin_pi(&self.angle).abs()
    }

    pub fn beta_phase(&self) -> BetaPhase {
        if self.angle.is_negative() {
            BetaPhase::MinusI
        } else {
            BetaPhase::PlusI
        }
    }

    /// `β` as a complex number `(0, sin ϑ)`.
    pub fn beta(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(0.0, exact_sin_pi(&self.angle))
    }

    pub fn kind(&self) -> RevivalKind {
        let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        if self.angle.is_zero() {
            RevivalKind::Periodic
        } else if self.angle == half {
            RevivalKind::PerfectStateTransfer
        } else if self.angle.abs() == quarter {
            RevivalKind::Balanced
        } else {
            RevivalKind::Fractional
        }
    }

    pub fn is_revival(&self) -> bool {
        !self.angle.is_zero()
    }
}

/// `cos(xπ)` with exact values at multiples of 1/4.
fn exact_cos_pi(x: &BigRational) -> f64 {
    exact_sin_pi(&(x + BigRational::new(BigInt::one(), BigInt::from(2))))
}

fn exact_sin_pi(x: &BigRational) -> f64 {
    let r = mod_two(x);
    let four = r.clone() * BigRational::from_integer(BigInt::from(4));
    if four.is_integer() {
        let k = four.to_integer().to_i64().unwrap_or(0);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        return [0.0, s, 1.0, s, 0.0, -s, -1.0, -s][k as usize % 8];
    }
    (ratio_to_f64(&r) * std::f64::consts::PI).sin()
}

/// Compute `g`, `h` and `μ(m)` for every divisor `m` of `h`.
///
/// The congruences are re-verified for every listed divisor; a failure means
/// the spectrum and signs are not those of a scheme with a permutation class.
pub fn compute_g_h_mu(spec: &SchemeSpectrum) -> Result<RevivalInvariants> {
    let theta = spec.theta();
    let sigma = spec.sigma();
    let theta0 = &theta[0];
    let diffs: Vec<BigRational> = theta[1..].iter().map(|t| theta0 - t).collect();
    let g = rational_gcd(&diffs);
    if g.is_zero() {
        return Err(Error::DegenerateSpectrum);
    }

    // gcd over same-sign pairs equals the gcd of differences to one
    // representative per sign class
    let mut pair_diffs = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        let mut members = theta.iter().zip(sigma).filter(|(_, s)| **s == sign).map(|(t, _)| t);
        if let Some(first) = members.next() {
            pair_diffs.extend(members.map(|t| first - t));
        }
    }
    let hg = rational_gcd(&pair_diffs);
    let h = if hg.is_zero() {
        HValue::Unconstrained
    } else {
        let h = &hg / &g;
        if !h.is_integer() {
            return Err(Error::Internal(format!("hg/g = {h} is not an integer")));
        }
        HValue::Finite(h.to_integer())
    };

    let scaled = |s: usize| -> BigInt { ((theta0 - &theta[s]) / &g).to_integer() };
    let minus_value = (1..theta.len()).find(|&s| sigma[s] == Sign::Minus).map(scaled);
    let inv = RevivalInvariants::from_parts(g.clone(), h, theta0.clone(), minus_value)?;

    for adm in &inv.admissible {
        for (s, sign) in sigma.iter().enumerate().skip(1) {
            let v = scaled(s).mod_floor(&adm.m);
            let want = match sign {
                Sign::Plus => BigInt::zero(),
                Sign::Minus => adm.mu.clone(),
            };
            if v != want {
                return Err(Error::InconsistentSigns { m: adm.m.to_string() });
            }
        }
    }
    Ok(inv)
}

/// Verdict on a graph: the `h` classification with its minimum revival time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RevivalVerdict {
    pub g: BigRational,
    pub h: HValue,
    pub classification: Classification,
    /// Whether perfect state transfer occurs (`h` even or unconstrained).
    pub pst: bool,
    /// `2π/(hg)` when `h > 1`; `None` when there is no revival or when `h`
    /// is unconstrained (revival at arbitrarily small times).
    pub min_time: Option<WalkTime>,
    pub admissible_m: Vec<AdmissibleM>,
    pub params_at_min_time: Option<RevivalParameters>,
}

impl RevivalVerdict {
    /// `μ` at `m = h`, the value reported alongside the minimum time.
    pub fn mu(&self) -> Option<&BigInt> {
        self.params_at_min_time.as_ref().map(|p| &p.mu)
    }

    pub fn h_finite(&self) -> Option<&BigInt> {
        self.h.finite()
    }
}

/// Classify from the invariants.
pub fn classify(inv: &RevivalInvariants) -> RevivalVerdict {
    let base = |classification, pst| RevivalVerdict {
        g: inv.g.clone(),
        h: inv.h.clone(),
        classification,
        pst,
        min_time: None,
        admissible_m: inv.admissible.clone(),
        params_at_min_time: None,
    };
    let h = match &inv.h {
        HValue::Unconstrained => return base(Classification::BalancedFr, true),
        HValue::Finite(h) => h.clone(),
    };
    let two = BigInt::from(2);
    let classification = if h.is_one() {
        Classification::NoFrNoPst
    } else if h == two {
        Classification::PstOnly
    } else if (&h % BigInt::from(4)).is_zero() {
        Classification::BalancedFr
    } else {
        Classification::FrNotBalanced
    };
    let mut verdict = base(classification, h.is_even());
    if h > BigInt::one() {
        // m = h is always admissible
        let params = inv.params(&h, &BigInt::one()).expect("h divides itself");
        verdict.min_time = Some(params.tau.clone());
        verdict.params_at_min_time = Some(params);
    }
    verdict
}

/// Parameters at `τ = 2tπ/(mg)` for a divisor `m` of `h`.
pub fn revival_params(spec: &SchemeSpectrum, m: &BigInt, t: &BigInt) -> Result<RevivalParameters> {
    compute_g_h_mu(spec)?.params(m, t)
}

/// Full verdict for a spectrum.
pub fn analyze_spectrum(spec: &SchemeSpectrum) -> Result<RevivalVerdict> {
    Ok(classify(&compute_g_h_mu(spec)?))
}

/// Exact congruence test at a given time.
///
/// Returns the parameters of `U(τ) = e^{iζ}(αI + βA_q)` when the walk at `τ`
/// lies in the span of `I` and `A_q` (including pure periodicity, `β = 0`),
/// and `None` otherwise.
pub fn check_fr_at_time(spec: &SchemeSpectrum, tau: &WalkTime) -> Option<RevivalParameters> {
    let c = tau.coefficient();
    let theta = spec.theta();
    let theta0 = &theta[0];
    let mut common: Option<BigRational> = None;
    for (t, s) in theta.iter().zip(spec.sigma()).skip(1) {
        let x = mod_two(&((t - theta0) * c));
        match s {
            Sign::Plus => {
                if !x.is_zero() {
                    return None;
                }
            }
            Sign::Minus => match &common {
                None => common = Some(x),
                Some(prev) if *prev == x => {}
                Some(_) => return None,
            },
        }
    }
    let x = common.unwrap_or_else(BigRational::zero);
    let raw_angle = x / BigRational::from_integer(BigInt::from(2));

    // Recover (m, t, μ) from τ = 2tπ/(mg).
    let diffs: Vec<BigRational> = theta[1..].iter().map(|t| theta0 - t).collect();
    let g = rational_gcd(&diffs);
    let (m, t, mu) = if g.is_zero() {
        (BigInt::one(), BigInt::zero(), BigInt::zero())
    } else {
        let ratio = c * &g / BigRational::from_integer(BigInt::from(2));
        let m = ratio.denom().clone();
        let t = ratio.numer().clone();
        let mu = (1..theta.len())
            .find(|&s| spec.sigma()[s] == Sign::Minus)
            .map(|s| ((theta0 - &theta[s]) / &g).to_integer().mod_floor(&m))
            .unwrap_or_else(BigInt::zero);
        (m, t, mu)
    };
    Some(RevivalParameters::from_angle(tau.clone(), theta0, &raw_angle, m, t, mu))
}
