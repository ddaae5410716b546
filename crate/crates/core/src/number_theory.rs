//! Exact integer machinery: binomials, binary Krawtchouk polynomials,
//! 2-adic valuations and carry counting.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    BigInt::from(acc)
}

/// Binary Krawtchouk polynomial `p_r(s, n) = Σ_h (-2)^h C(n-h, r-h) C(s, h)`.
///
/// This is the eigenvalue of the distance-`r` class of H(n,2) on the `s`-th
/// idempotent. Out-of-range `r` gives zero.
pub fn krawtchouk(r: i64, s: i64, n: u64) -> Result<BigInt> {
    if s < 0 || s as u64 > n {
        return Err(Error::Domain(format!("krawtchouk: s = {s} outside [0, {n}]")));
    }
    if r < 0 || r as u64 > n {
        return Ok(BigInt::zero());
    }
    let mut total = BigInt::zero();
    let mut weight = BigInt::one();
    for h in 0..=r.min(s) {
        let term = binomial(n - h as u64, r - h) * binomial(s as u64, h);
        total += &weight * term;
        weight *= -2;
    }
    Ok(total)
}

/// Every Krawtchouk value for H(n,2), indexed `[s][r]`.
///
/// Built from the generating function `Σ_r p_r(s) z^r = (1-z)^s (1+z)^(n-s)`,
/// stepping `s` with `(1+z) P_{s+1} = (1-z) P_s`. Quadratic in `n` additions,
/// so it is usable for the large families where the closed form per entry is not.
pub fn krawtchouk_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = Vec::with_capacity(n + 1);
    let first: Vec<BigInt> = (0..=n).map(|r| binomial(n as u64, r as i64)).collect();
    rows.push(first);
    for s in 0..n {
        let prev = &rows[s];
        let mut next: Vec<BigInt> = Vec::with_capacity(n + 1);
        next.push(prev[0].clone());
        for r in 1..=n {
            let v = &prev[r] - &prev[r - 1] - &next[r - 1];
            next.push(v);
        }
        rows.push(next);
    }
    rows
}

/// Exponent of the largest power of two dividing `m`.
pub fn val2(m: &BigInt) -> Result<u64> {
    m.trailing_zeros()
        .ok_or_else(|| Error::Domain("val2 of zero is infinite".into()))
}

/// Number of carries when adding `n - m` and `m` in binary.
///
/// By Kummer's theorem this is `val2(C(n, m))`.
///
/// # Panics
/// If `m > n`.
pub fn kummer_carries(n: u64, m: u64) -> u32 {
    assert!(m <= n, "kummer_carries requires m <= n");
    let mut a = n - m;
    let mut b = m;
    let mut carry = 0u64;
    let mut count = 0;
    while a > 0 || b > 0 || carry > 0 {
        let s = (a & 1) + (b & 1) + carry;
        carry = s >> 1;
        count += carry as u32;
        a >>= 1;
        b >>= 1;
    }
    count
}

/// gcd of absolute values; `0` for an empty or all-zero list.
pub fn gcd_list(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v)).abs()
}

/// `2^k` as a big integer.
pub(crate) fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

/// Whether a positive integer is a power of two.
pub(crate) fn is_power_of_two(m: &BigInt) -> bool {
    m.is_positive() && m.trailing_zeros() == Some(m.bits() - 1)
}

/// All positive divisors of `h` in increasing order, when they can be listed.
///
/// Trial division runs to 10^6; a leftover cofactor below 10^12 is then
/// prime. Anything else returns `None`.
pub(crate) fn divisors(h: &BigInt) -> Option<Vec<BigInt>> {
    if !h.is_positive() {
        return None;
    }
    let mut rest = h.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let tz = rest.trailing_zeros().unwrap_or(0);
    if tz > 0 {
        if tz > 4096 {
            return None;
        }
        factors.push((BigInt::from(2), tz as u32));
        rest >>= tz;
    }
    let mut p: u64 = 3;
    while p <= 1_000_000 && rest > BigInt::one() {
        let bp = BigInt::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            factors.push((bp, e));
        }
        p += 2;
    }
    if rest > BigInt::one() {
        let bound = BigInt::from(1_000_000_000_000u64);
        let small = BigInt::from(p);
        if rest >= bound && &small * &small <= rest {
            return None;
        }
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (prime, e) in factors {
        let mut extended = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut cur = d.clone();
            extended.push(cur.clone());
            for _ in 0..e {
                cur *= &prime;
                extended.push(cur.clone());
            }
        }
        divs = extended;
    }
    divs.sort();
    Some(divs)
}
