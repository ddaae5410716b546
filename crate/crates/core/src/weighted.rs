//! Weighted combinations of Hamming distance graphs.
//!
//! The balanced test at time `π/Ω` asks for integers `h, h_0, …, h_{n-2}`
//! with `θ_0 - θ_1 = (h + 1/2)Ω` and `θ_s - θ_{s+2} = 2h_sΩ`. These `h`,
//! `h_s` are witnesses only and unrelated to the `h` invariant of
//! [`crate::revival`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hamming::{hamming_spectrum, HammingGraphSpec};
use crate::revival::{analyze_spectrum, check_fr_at_time, BetaPhase, Classification, RevivalParameters};
use crate::spectrum::SchemeSpectrum;
use crate::time::{PiAngle, WalkTime};

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSpanSpec {
    n: u64,
    omega_by_class: BTreeMap<u64, BigRational>,
}

impl WeightedSpanSpec {
    /// Zero weights are dropped; at least one must remain.
    pub fn new(n: u64, terms: impl IntoIterator<Item = (u64, BigRational)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameters(format!("n must be at least 2, got {n}")));
        }
        let mut omega_by_class = BTreeMap::new();
        for (r, w) in terms {
            if r == 0 || r > n {
                return Err(Error::InvalidParameters(format!("class {r} outside [1, {n}]")));
            }
            if omega_by_class.insert(r, w).is_some() {
                return Err(Error::InvalidParameters(format!("class {r} given twice")));
            }
        }
        omega_by_class.retain(|_, w| !w.is_zero());
        if omega_by_class.is_empty() {
            return Err(Error::InvalidParameters("all weights are zero".into()));
        }
        Ok(WeightedSpanSpec { n, omega_by_class })
    }

    /// `ω A_2 + A_1`.
    pub fn w_a2_plus_a1(n: u64, omega: BigRational) -> Result<Self> {
        WeightedSpanSpec::new(n, [(1, BigRational::one()), (2, omega)])
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn omega_by_class(&self) -> &BTreeMap<u64, BigRational> {
        &self.omega_by_class
    }

    pub fn to_hamming(&self) -> HammingGraphSpec {
        let terms: Vec<(u64, BigRational)> = self.omega_by_class.iter().map(|(r, w)| (*r, w.clone())).collect();
        HammingGraphSpec::weighted(self.n, &terms).expect("validated on construction")
    }

    pub fn spectrum(&self) -> SchemeSpectrum {
        hamming_spectrum(&self.to_hamming())
    }
}

impl fmt::Display for WeightedSpanSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.omega_by_class.iter().map(|(r, w)| format!("{w}*A{r}")).collect();
        write!(f, "H({},2): {}", self.n, terms.join(" + "))
    }
}

/// Integer witnesses of a positive balanced test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaWitnesses {
    #[serde(serialize_with = "crate::weighted::ser_big")]
    pub h: BigInt,
    #[serde(serialize_with = "crate::weighted::ser_big_vec")]
    pub h_s: Vec<BigInt>,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_big_vec<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaCheck {
    pub holds: bool,
    pub time: WalkTime,
    pub zeta: Option<PiAngle>,
    pub beta: Option<BetaPhase>,
    pub witnesses: Option<OmegaWitnesses>,
}

/// Balanced fractional revival of a weighted combination at time `π/Ω`.
pub fn balanced_at_omega(spec: &WeightedSpanSpec, omega_cap: &BigRational) -> Result<OmegaCheck> {
    if !omega_cap.is_positive() {
        return Err(Error::Domain(format!("Omega must be positive, got {omega_cap}")));
    }
    let time = WalkTime::from_coefficient(omega_cap.recip());
    let theta = spec.spectrum().theta().to_vec();
    let fail = OmegaCheck {
        holds: false,
        time: time.clone(),
        zeta: None,
        beta: None,
        witnesses: None,
    };

    let half = ratio(1, 2);
    let h = (&theta[0] - &theta[1]) / omega_cap - &half;
    if !h.is_integer() {
        return Ok(fail);
    }
    let mut h_s = Vec::with_capacity(theta.len() - 2);
    for w in theta.windows(3) {
        let x = (&w[0] - &w[2]) / (omega_cap * BigRational::from_integer(2.into()));
        if !x.is_integer() {
            return Ok(fail);
        }
        h_s.push(x.to_integer());
    }
    let h = h.to_integer();
    // e^{-i(θ_0-θ_1)π/Ω} = (-1)^h(-i), which is +i exactly for β = +i/√2
    let (beta, quarter) = if h.is_odd() {
        (BetaPhase::PlusI, ratio(-1, 4))
    } else {
        (BetaPhase::MinusI, ratio(1, 4))
    };
    let zeta = PiAngle::new(-(&theta[0] / omega_cap) + quarter);
    Ok(OmegaCheck {
        holds: true,
        time,
        zeta: Some(zeta),
        beta: Some(beta),
        witnesses: Some(OmegaWitnesses { h, h_s }),
    })
}

/// One admissible `Ω` for `ωA_2 + A_1`, with `4/Ω = q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleOmega {
    pub omega_cap: BigRational,
    pub q: BigInt,
    pub time: WalkTime,
}

/// The first `count` values of `Ω` (by increasing time `π/Ω`) at which
/// `ωA_2 + A_1` on `H(n,2)` has balanced fractional revival.
///
/// Writing `ω = a/b` in lowest terms, `4ω/Ω` odd and `4/Ω` an integer of the
/// parity of `n` force `a` odd, `b ≡ n (mod 2)` and `4/Ω = jb` with `j` odd,
/// so the times are the odd multiples of `bπ/4`. An empty list means no
/// balanced fractional revival at any time.
pub fn classify_wa2_plus_a1(n: u64, omega: &BigRational, count: usize) -> Result<Vec<AdmissibleOmega>> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("n must be at least 2, got {n}")));
    }
    if omega.is_zero() {
        return Err(Error::InvalidParameters("omega must be nonzero".into()));
    }
    let a = omega.numer();
    let b = omega.denom();
    if a.is_even() || b.is_odd() != (n % 2 == 1) {
        return Ok(Vec::new());
    }
    Ok((0..count as u64)
        .map(|i| {
            let q = b * BigInt::from(2 * i + 1);
            let omega_cap = BigRational::new(BigInt::from(4), q.clone());
            AdmissibleOmega {
                time: WalkTime::from_coefficient(omega_cap.recip()),
                omega_cap,
                q,
            }
        })
        .collect())
}

/// The candidates `Ω = 4ω/(2m+1) > 0` for `m` with `|2m+1| ≤ 2·count - 1`;
/// every `Ω` with balanced revival of `ωA_2 + A_1` is of this form.
pub fn omega_candidates(omega: &BigRational, count: usize) -> Vec<BigRational> {
    let sign = if omega.is_negative() { -1 } else { 1 };
    (0..count as i64)
        .map(|i| omega * BigRational::from_integer(4.into()) / BigRational::from_integer((sign * (2 * i + 1)).into()))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoFrReason {
    /// A vertex and its antipode lie in different components.
    Disconnected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum X2Verdict {
    Balanced { time: WalkTime, params: RevivalParameters },
    NoFr { reason: NoFrReason },
}

/// `X_2` in `H(n,2)`: balanced at `π/4` for even `n`; for odd `n` the
/// antipode is in the other component of `A_2`.
pub fn x2_balanced(n: u64) -> Result<X2Verdict> {
    let spec = WeightedSpanSpec::new(n, [(2, BigRational::one())])?;
    let spectrum = spec.spectrum();
    if n % 2 == 1 {
        let verdict = analyze_spectrum(&spectrum)?;
        if verdict.classification != Classification::NoFrNoPst {
            return Err(Error::Internal(format!(
                "X_2 in H({n},2) reported {:?}",
                verdict.classification
            )));
        }
        return Ok(X2Verdict::NoFr {
            reason: NoFrReason::Disconnected,
        });
    }
    let time = WalkTime::pi_over(4);
    match check_fr_at_time(&spectrum, &time) {
        Some(params) if params.kind() == crate::revival::RevivalKind::Balanced => {
            Ok(X2Verdict::Balanced { time, params })
        }
        other => Err(Error::Internal(format!("X_2 in H({n},2) at pi/4 gave {other:?}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum SpanVerdict {
    Fr {
        time: WalkTime,
        params: RevivalParameters,
    },
    /// The residue condition `n ≡ 3 (mod modulus)` fails.
    NotCovered {
        n: u64,
        modulus: u64,
    },
}

/// `A_1 + ½A_2 + ¼A_3 (+ ⅛A_4)` as a weighted spec.
pub fn geometric_span(n: u64, terms: u64) -> Result<WeightedSpanSpec> {
    WeightedSpanSpec::new(n, (1..=terms).map(|r| (r, ratio(1, 1 << (r - 1)))))
}

fn span_fr(n: u64, terms: u64, modulus: u64) -> Result<SpanVerdict> {
    if n < terms {
        return Err(Error::InvalidParameters(format!("n must be at least {terms}, got {n}")));
    }
    if n % modulus != 3 {
        return Ok(SpanVerdict::NotCovered { n, modulus });
    }
    let spectrum = geometric_span(n, terms)?.spectrum();
    let time = WalkTime::pi_over(1);
    match check_fr_at_time(&spectrum, &time) {
        Some(params) if params.is_revival() => Ok(SpanVerdict::Fr { time, params }),
        other => Err(Error::Internal(format!(
            "span of {terms} terms in H({n},2) at pi gave {other:?}"
        ))),
    }
}

/// `A_1 + ½A_2 + ¼A_3` at time `π`, for `n ≡ 3 (mod 4)`.
pub fn span3_fr(n: u64) -> Result<SpanVerdict> {
    span_fr(n, 3, 4)
}

/// `A_1 + ½A_2 + ¼A_3 + ⅛A_4` at time `π`, for `n ≡ 3 (mod 8)`.
pub fn span4_fr(n: u64) -> Result<SpanVerdict> {
    span_fr(n, 4, 8)
}

/// Coefficients `2C(n-1,3)`, `4C(n-2,2)`, `8(n-3)` of `p_4(s) - p_4(0)` in
/// the basis `-s, C(s,2), -C(s,3)`; all divisible by 16 when `n ≡ 3 (mod 8)`.
pub fn span4_coefficients(n: u64) -> [BigInt; 3] {
    use crate::number_theory::binomial;
    [
        BigInt::from(2) * binomial(n.saturating_sub(1), 3),
        BigInt::from(4) * binomial(n.saturating_sub(2), 2),
        BigInt::from(8) * (BigInt::from(n) - 3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: i64, q: i64) -> BigRational {
        ratio(p, q)
    }

    #[test]
    fn omega_examples() {
        let s = WeightedSpanSpec::w_a2_plus_a1(5, w(1, 1)).unwrap();
        assert!(balanced_at_omega(&s, &w(4, 1)).unwrap().holds);
        let s = WeightedSpanSpec::w_a2_plus_a1(6, w(1, 2)).unwrap();
        assert!(balanced_at_omega(&s, &w(2, 1)).unwrap().holds);
        let s = WeightedSpanSpec::w_a2_plus_a1(6, w(1, 1)).unwrap();
        assert!(!balanced_at_omega(&s, &w(4, 1)).unwrap().holds);
        assert!(balanced_at_omega(&s, &w(0, 1)).is_err());
    }

    #[test]
    fn omega_matches_engine() {
        for n in 2..=9u64 {
            for om in [w(1, 1), w(-1, 1), w(1, 2), w(-1, 2), w(3, 2), w(1, 3)] {
                let s = WeightedSpanSpec::w_a2_plus_a1(n, om.clone()).unwrap();
                for q in 1..=12i64 {
                    let cap = w(4, q);
                    let c = balanced_at_omega(&s, &cap).unwrap();
                    let p = check_fr_at_time(&s.spectrum(), &c.time);
                    let engine = p
                        .as_ref()
                        .is_some_and(|p| p.kind() == crate::revival::RevivalKind::Balanced);
                    assert_eq!(c.holds, engine, "n={n} omega={om} q={q}");
                    if let Some(p) = p.filter(|_| c.holds) {
                        assert_eq!(c.zeta.as_ref(), Some(&p.zeta));
                        assert_eq!(c.beta, Some(p.beta_phase()));
                    }
                }
            }
        }
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify_wa2_plus_a1(5, &w(1, 1), 1).unwrap()[0].time,
            WalkTime::pi_over(4)
        );
        assert!(classify_wa2_plus_a1(6, &w(1, 1), 4).unwrap().is_empty());
        assert!(classify_wa2_plus_a1(6, &w(2, 1), 4).unwrap().is_empty());
        let v = classify_wa2_plus_a1(6, &w(1, 2), 2).unwrap();
        assert_eq!(v[0].time, WalkTime::pi_over(2));
        assert_eq!(v[1].time, WalkTime::new(3, 2).unwrap());
    }

    #[test]
    fn x2() {
        for n in [2u64, 4, 6, 8] {
            assert!(matches!(x2_balanced(n).unwrap(), X2Verdict::Balanced { .. }), "n={n}");
        }
        for n in [3u64, 5, 7] {
            assert_eq!(
                x2_balanced(n).unwrap(),
                X2Verdict::NoFr {
                    reason: NoFrReason::Disconnected
                }
            );
        }
    }

    #[test]
    fn spans() {
        for n in [7u64, 11, 15] {
            assert!(matches!(span3_fr(n).unwrap(), SpanVerdict::Fr { .. }));
        }
        assert_eq!(span3_fr(5).unwrap(), SpanVerdict::NotCovered { n: 5, modulus: 4 });
        for n in [11u64, 19] {
            assert!(matches!(span4_fr(n).unwrap(), SpanVerdict::Fr { .. }));
            assert!(span4_coefficients(n).iter().all(|c| (c % BigInt::from(16)).is_zero()));
        }
        assert_eq!(span4_fr(7).unwrap(), SpanVerdict::NotCovered { n: 7, modulus: 8 });
    }

    #[test]
    fn rescaling_is_exact() {
        for (n, terms, c) in [(7u64, 3u64, 4i64), (11, 3, 4), (11, 4, 8), (19, 4, 8)] {
            let s = geometric_span(n, terms).unwrap().spectrum();
            let scaled = s.scaled(&w(c, 1));
            assert!(scaled.is_integral());
            let a = check_fr_at_time(&s, &WalkTime::pi_over(1)).unwrap();
            let b = check_fr_at_time(&scaled, &WalkTime::pi_over(c)).unwrap();
            assert_eq!((a.angle, a.zeta), (b.angle, b.zeta));
        }
    }
}
