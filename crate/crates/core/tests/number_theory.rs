use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use revival_core::number_theory::{binomial, gcd_list, krawtchouk, krawtchouk_table, kummer_carries, val2};

/// Coefficients of `(1-z)^s (1+z)^(n-s)` by repeated multiplication.
fn generating_row(n: usize, s: usize) -> Vec<BigInt> {
    let mut poly = vec![BigInt::one()];
    for i in 0..n {
        let sign = if i < s { -1 } else { 1 };
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] += c;
            next[k + 1] += c * sign;
        }
        poly = next;
    }
    poly
}

#[test]
fn table_matches_generating_function_and_closed_form() {
    for n in 0..=24usize {
        let table = krawtchouk_table(n);
        for (s, row) in table.iter().enumerate() {
            assert_eq!(*row, generating_row(n, s), "n = {n}, s = {s}");
            for (r, value) in row.iter().enumerate() {
                assert_eq!(*value, krawtchouk(r as i64, s as i64, n as u64).unwrap());
            }
        }
    }
}

#[test]
fn orthogonality() {
    for n in 1..=16u64 {
        let table = krawtchouk_table(n as usize);
        for r in 0..=n as usize {
            for t in 0..=n as usize {
                let sum: BigInt = (0..=n as usize)
                    .map(|s| binomial(n, s as i64) * &table[s][r] * &table[s][t])
                    .sum();
                let want = if r == t {
                    (BigInt::one() << n) * binomial(n, r as i64)
                } else {
                    BigInt::zero()
                };
                assert_eq!(sum, want, "n = {n}, r = {r}, t = {t}");
            }
        }
    }
}

#[test]
fn out_of_range() {
    assert!(krawtchouk(1, 5, 4).is_err());
    assert!(krawtchouk(1, -1, 4).is_err());
    assert_eq!(krawtchouk(5, 1, 4).unwrap(), BigInt::zero());
    assert_eq!(binomial(3, -1), BigInt::zero());
    assert_eq!(binomial(3, 4), BigInt::zero());
    assert!(val2(&BigInt::zero()).is_err());
}

#[test]
fn gcd_of_lists() {
    let v = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    assert_eq!(gcd_list(&[]), BigInt::zero());
    assert_eq!(gcd_list(&v(&[0, 0])), BigInt::zero());
    assert_eq!(gcd_list(&v(&[-12, 18, 0])), BigInt::from(6));
    assert_eq!(gcd_list(&v(&[-7])), BigInt::from(7));
}

fn digit_sum(x: u64) -> u32 {
    x.count_ones()
}

proptest! {
    #[test]
    fn kummer_and_legendre_agree(n in 0u64..2000, m_frac in 0.0f64..=1.0) {
        let m = ((n as f64) * m_frac).round() as u64;
        let c = binomial(n, m as i64);
        let v = val2(&c).unwrap();
        prop_assert_eq!(v, u64::from(kummer_carries(n, m)));
        prop_assert_eq!(v, u64::from(digit_sum(m) + digit_sum(n - m) - digit_sum(n)));
    }

    #[test]
    fn symmetry_and_recurrence(n in 1u64..60, r in 0i64..60, s in 0i64..60) {
        prop_assume!(r as u64 <= n && s as u64 <= n);
        // C(n,s) p_r(s) = C(n,r) p_s(r)
        let lhs = binomial(n, s) * krawtchouk(r, s, n).unwrap();
        let rhs = binomial(n, r) * krawtchouk(s, r, n).unwrap();
        prop_assert_eq!(lhs, rhs);
        // p_r(n - s) = (-1)^r p_r(s)
        let flipped = krawtchouk(r, n as i64 - s, n).unwrap();
        let sign = if r % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(flipped, sign * krawtchouk(r, s, n).unwrap());
    }

    #[test]
    fn val2_of_products(a in 1i64..1_000_000, b in 1i64..1_000_000, k in 0u32..200) {
        let x = (BigInt::from(a) * BigInt::from(b)) << k;
        prop_assert_eq!(
            val2(&x).unwrap(),
            u64::from(a.trailing_zeros() + b.trailing_zeros() + k)
        );
        prop_assert_eq!(val2(&-x.clone()).unwrap(), val2(&x).unwrap());
    }
}
