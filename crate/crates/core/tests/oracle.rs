use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use revival_core::hamming::class_subsets;
use revival_core::oracle::{amplitude_profile_f64, dense_weights, profile_from_dense, required_precision, DenseWalker};
use revival_core::{
    amplitude_profile, check_fr_at_time, hamming_fr_test, hamming_spectrum, verify_revival, Error, ExplicitScheme,
    HammingGraphSpec, WalkTime,
};

fn random_time(rng: &mut ChaCha8Rng) -> WalkTime {
    let q: i64 = rng.gen_range(1..=24);
    let p: i64 = rng.gen_range(-4 * q..=4 * q);
    WalkTime::new(p, q).unwrap()
}

fn random_spec(rng: &mut ChaCha8Rng, n: u64) -> HammingGraphSpec {
    let ell = rng.gen_range(1..=2usize.min(n as usize));
    let mut classes: Vec<u64> = Vec::new();
    while classes.len() < ell {
        let r = rng.gen_range(1..=n);
        if !classes.contains(&r) {
            classes.push(r);
        }
    }
    let terms: Vec<(u64, BigRational)> = classes
        .into_iter()
        .map(|r| {
            let w = BigRational::new(
                BigInt::from(rng.gen_range(-6..=6i64)),
                BigInt::from(rng.gen_range(1..=4i64)),
            );
            (r, w)
        })
        .filter(|(_, w)| w != &BigRational::from_integer(0.into()))
        .collect();
    if terms.is_empty() {
        return HammingGraphSpec::unweighted(n, &[1]).unwrap();
    }
    HammingGraphSpec::weighted(n, &terms).unwrap()
}

fn weight(v: usize) -> usize {
    v.count_ones() as usize
}

#[test]
fn dense_walk_matches_profiles() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for n in 1..=8u32 {
        let walker = DenseWalker::new(&ExplicitScheme::hamming(n).unwrap()).unwrap();
        for _ in 0..12 {
            let spec = random_spec(&mut rng, u64::from(n));
            let tau = random_time(&mut rng);
            let (classes, weights) = dense_weights(&spec);
            let dense = walker.walk(&classes, &weights, &tau, 0).unwrap();
            let fast = amplitude_profile_f64(&spec, &tau).unwrap();
            let big = amplitude_profile(&spec, &tau, required_precision(u64::from(n)) + 16).unwrap();
            let read = profile_from_dense(n, &dense);
            for (d, (r, f)) in read.iter().zip(&fast.amplitudes).enumerate() {
                assert!((r - f).norm() < 1e-9, "{spec} at {tau}, d = {d}");
                assert!((big.amplitudes[d] - f).norm() < 1e-12, "{spec} at {tau}, d = {d}");
            }
            // the walk from 0 only depends on the Hamming weight of the target
            for (v, z) in dense.iter().enumerate() {
                assert!((z - fast.amplitudes[weight(v)]).norm() < 1e-9);
            }
        }
    }
}

#[test]
fn unitarity_and_periodicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..60 {
        let n = rng.gen_range(2..=40u64);
        let spec = random_spec(&mut rng, n);
        let tau = random_time(&mut rng);
        let p = amplitude_profile(&spec, &tau, required_precision(n)).unwrap();
        assert!(p.unitarity_defect() < p.unitarity_bound(), "{spec} at {tau}");
        let f = amplitude_profile_f64(&spec, &tau).unwrap();
        assert!(f.unitarity_defect() < 1e-9);

        // eigenvalues have denominators dividing the lcm of the weight denominators
        let period =
            BigRational::from_integer(2.into()) * BigRational::from_integer(hamming_spectrum(&spec).integral_scale());
        let later = WalkTime::from_coefficient(tau.coefficient() + period);
        let q = amplitude_profile(&spec, &later, required_precision(n)).unwrap();
        assert_eq!(p.exact, q.exact, "{spec}: U(t) != U(t + period)");
    }
}

#[test]
fn revivals_verify_and_non_revivals_spread() {
    let mut verified = 0;
    for n in 2..=16u64 {
        for classes in class_subsets(n, 2) {
            let spec = HammingGraphSpec::unweighted(n, &classes).unwrap();
            let v = hamming_fr_test(n, &classes).unwrap();
            let spectrum = hamming_spectrum(&spec);
            let bits = required_precision(n);
            if let Some(params) = &v.params_at_min_time {
                let p = amplitude_profile(&spec, &params.tau, bits).unwrap();
                let check = verify_revival(&p, params, p.default_tolerance()).unwrap();
                assert!(check.pass, "{spec}: {check:?}");
                verified += 1;
            }
            for tau in [
                WalkTime::new(1, 3).unwrap(),
                WalkTime::new(2, 5).unwrap(),
                WalkTime::new(3, 7).unwrap(),
            ] {
                if check_fr_at_time(&spectrum, &tau).is_none() {
                    let p = amplitude_profile(&spec, &tau, bits).unwrap();
                    let spread = p.max_interior().1;
                    assert!(spread > 2f64.powi(-60), "{spec} at {tau}: interior {spread:e}");
                }
            }
        }
    }
    assert!(verified > 50);
}

#[test]
fn wrong_parameters_fail_verification() {
    let spec = HammingGraphSpec::unweighted(7, &[3]).unwrap();
    let v = hamming_fr_test(7, &[3]).unwrap();
    let mut params = v.params_at_min_time.clone().unwrap();
    let p = amplitude_profile(&spec, &params.tau, 200).unwrap();
    assert!(verify_revival(&p, &params, 1e-30).unwrap().pass);
    params.zeta = revival_core::PiAngle::new(params.zeta.coefficient() + BigRational::new(1.into(), 1000.into()));
    let check = verify_revival(&p, &params, 1e-9).unwrap();
    assert!(!check.pass);
    assert!(check.f0_residual > 1e-4 && check.fn_residual > 1e-4);
}

#[test]
fn oracle_errors() {
    let spec = HammingGraphSpec::unweighted(10, &[3]).unwrap();
    let tau = WalkTime::pi_over(4);
    assert!(matches!(
        amplitude_profile(&spec, &tau, required_precision(10) - 1),
        Err(Error::PrecisionTooLow { .. })
    ));
    let big = HammingGraphSpec::unweighted(1001, &[3]).unwrap();
    assert!(amplitude_profile_f64(&big, &tau).is_err());

    let v = hamming_fr_test(10, &[3]).unwrap();
    let other = amplitude_profile(&spec, &WalkTime::pi_over(3), 200).unwrap();
    if let Some(params) = &v.params_at_min_time {
        assert!(verify_revival(&other, params, 1e-9).is_err());
    }
    let walker = DenseWalker::new(&ExplicitScheme::hamming(3).unwrap()).unwrap();
    assert!(walker.walk(&[1], &[1.0], &tau, 8).is_err());
    let _: Complex64 = walker.walk(&[1], &[1.0], &tau, 7).unwrap()[0];
}
