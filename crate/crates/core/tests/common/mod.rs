//! Brute-force revival finder shared by the integration tests.
//!
//! At time `(p/q)π` the walk is `Σ_s e^{-iθ_s pπ/q} E_s`. It equals
//! `e^{iζ}(αI + βA_q)` exactly when the phase `θ_s p/q mod 2` is constant on
//! the `σ_s = +1` idempotents and on the `σ_s = -1` idempotents. Everything
//! here is exact rational arithmetic and shares no code with the engine.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use revival_core::{SchemeSpectrum, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Event {
    Periodic,
    Pst,
    Balanced,
    Fractional,
}

fn mod2(x: BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let k = (&x / &two).floor();
    x - two * k
}

/// The phase pair `(c₊, c₋)` in units of π, or `None` without revival.
pub fn phases(spec: &SchemeSpectrum, t: &BigRational) -> Option<(BigRational, BigRational)> {
    let mut plus: Option<BigRational> = None;
    let mut minus: Option<BigRational> = None;
    for (theta, sign) in spec.theta().iter().zip(spec.sigma()) {
        let c = mod2(theta * t);
        let slot = if *sign == Sign::Plus { &mut plus } else { &mut minus };
        match slot {
            None => *slot = Some(c),
            Some(prev) if *prev == c => {}
            Some(_) => return None,
        }
    }
    Some((plus?, minus.unwrap_or_else(BigRational::zero)))
}

pub fn event(spec: &SchemeSpectrum, t: &BigRational) -> Option<Event> {
    let (p, m) = phases(spec, t)?;
    let diff = mod2(p - m);
    let half = BigRational::new(1.into(), 2.into());
    Some(if diff.is_zero() {
        Event::Periodic
    } else if diff.is_one() {
        Event::Pst
    } else if diff == half || diff == BigRational::from_integer(1.into()) + &half {
        Event::Balanced
    } else {
        Event::Fractional
    })
}

/// Every `p/q` with `q ≤ max_q` in `(0, 2D]`, ascending, where `D` clears the
/// denominators of the spectrum (so `U` is periodic with period `2Dπ`).
pub fn candidate_times(spec: &SchemeSpectrum, max_q: u64) -> Vec<BigRational> {
    let d = spec.theta().iter().fold(BigInt::one(), |acc, t| acc.lcm(t.denom()));
    let mut out = Vec::new();
    for q in 1..=max_q {
        let top = BigInt::from(2 * q) * &d;
        let mut p = BigInt::one();
        while p <= top {
            if p.gcd(&BigInt::from(q)).is_one() {
                out.push(BigRational::new(p.clone(), BigInt::from(q)));
            }
            p += 1;
        }
    }
    out.sort();
    out
}

/// Earliest proper revival (β ≠ 0) among the candidates, with its kind.
pub fn first_revival(spec: &SchemeSpectrum, max_q: u64) -> Option<(BigRational, Event)> {
    candidate_times(spec, max_q)
        .into_iter()
        .filter_map(|t| event(spec, &t).map(|e| (t, e)))
        .find(|(_, e)| *e != Event::Periodic)
}

pub fn any_event(spec: &SchemeSpectrum, max_q: u64, want: Event) -> bool {
    candidate_times(spec, max_q)
        .iter()
        .any(|t| event(spec, t) == Some(want))
}
