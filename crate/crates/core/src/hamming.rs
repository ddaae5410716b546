//! Graphs in the binary Hamming scheme H(n,2).
//!
//! A graph here is a (possibly weighted) union of distance classes
//! `A = Σ ω_i A_{r_i}`. The scheme is self-dual with eigenvalues given by
//! binary Krawtchouk polynomials, and the antipodal class `A_n` is the only
//! order-2 permutation class, acting as `(-1)^s` on the idempotent `E_s`.
//!
//! For unweighted unions `g` and `hg` are powers of two given by 2-adic
//! valuations of binomial sums, so the verdict never needs the spectrum.

use std::cmp::Ordering;
use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number_theory::{binomial, pow2, val2};
use crate::revival::{
    analyze_spectrum, classify, BetaPhase, Classification, HValue, RevivalInvariants, RevivalVerdict,
};
use crate::spectrum::SchemeSpectrum;
use crate::time::{PiAngle, WalkTime};

/// `A = Σ ω_i A_{r_i}` in H(n,2).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HammingGraphSpec {
    n: u64,
    classes: Vec<u64>,
    weights: Vec<BigRational>,
}

impl HammingGraphSpec {
    /// Validates `0 < r_1 < ... < r_ℓ ≤ n`, `ℓ ≥ 1` and nonzero weights.
    ///
    /// `n = 1` is accepted so that K₂ = H(1,2) can be described.
    pub fn new(n: u64, classes: Vec<u64>, weights: Vec<BigRational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters("n must be positive".into()));
        }
        if classes.is_empty() {
            return Err(Error::InvalidParameters("at least one class is required".into()));
        }
        if classes.len() != weights.len() {
            return Err(Error::InvalidParameters(format!(
                "{} classes but {} weights",
                classes.len(),
                weights.len()
            )));
        }
        if classes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameters(format!(
                "classes {classes:?} must be strictly increasing"
            )));
        }
        if classes[0] == 0 || *classes.last().unwrap() > n {
            return Err(Error::InvalidParameters(format!(
                "classes {classes:?} must lie in [1, {n}]"
            )));
        }
        if weights.iter().any(Zero::is_zero) {
            return Err(Error::InvalidParameters("weights must be nonzero".into()));
        }
        Ok(HammingGraphSpec { n, classes, weights })
    }

    /// Unweighted union; the classes may be given in any order.
    pub fn unweighted(n: u64, classes: &[u64]) -> Result<Self> {
        let mut classes = classes.to_vec();
        classes.sort_unstable();
        let weights = vec![BigRational::one(); classes.len()];
        HammingGraphSpec::new(n, classes, weights)
    }

    /// Weighted combination from `(class, weight)` pairs in any order.
    pub fn weighted(n: u64, terms: &[(u64, BigRational)]) -> Result<Self> {
        let mut terms = terms.to_vec();
        terms.sort_by_key(|(r, _)| *r);
        let (classes, weights) = terms.into_iter().unzip();
        HammingGraphSpec::new(n, classes, weights)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn classes(&self) -> &[u64] {
        &self.classes
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn ell(&self) -> usize {
        self.classes.len()
    }

    /// Number of classes other than the antipodal class `n`.
    pub fn ell_prime(&self) -> usize {
        if *self.classes.last().unwrap() == self.n {
            self.classes.len() - 1
        } else {
            self.classes.len()
        }
    }

    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(One::is_one)
    }

    pub fn is_single_antipodal(&self) -> bool {
        self.classes == [self.n]
    }
}

impl fmt::Display for HammingGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},2) ", self.n)?;
        if self.is_unweighted() {
            let list: Vec<String> = self.classes.iter().map(u64::to_string).collect();
            write!(f, "{{{}}}", list.join(","))
        } else {
            let terms: Vec<String> = self
                .classes
                .iter()
                .zip(&self.weights)
                .map(|(r, w)| format!("({w})A{r}"))
                .collect();
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `p_r(s, n)` for `s = 0..=n` via the three-term recurrence in `s`:
/// `(n - s) K(s+1) = (n - 2r) K(s) - s K(s-1)`.
pub(crate) fn krawtchouk_column(r: u64, n: u64) -> Vec<BigInt> {
    let mut col = Vec::with_capacity(n as usize + 1);
    col.push(binomial(n, r as i64));
    if n == 0 {
        return col;
    }
    let bn = BigInt::from(n);
    let lead = &bn - BigInt::from(2 * r);
    for s in 0..n {
        let prev = if s == 0 {
            BigInt::zero()
        } else {
            col[s as usize - 1].clone()
        };
        let rhs = &lead * &col[s as usize] - BigInt::from(s) * prev;
        col.push(rhs / BigInt::from(n - s));
    }
    col
}

/// `θ_s = Σ ω_i p_{r_i}(s, n)` with `σ_s = (-1)^s`.
pub fn hamming_spectrum(spec: &HammingGraphSpec) -> SchemeSpectrum {
    let n = spec.n as usize;
    let mut theta = vec![BigRational::zero(); n + 1];
    for (r, w) in spec.classes.iter().zip(&spec.weights) {
        for (t, p) in theta.iter_mut().zip(krawtchouk_column(*r, spec.n)) {
            *t += w * BigRational::from_integer(p);
        }
    }
    let sigma = (0..=n).map(crate::spectrum::Sign::alternating).collect();
    SchemeSpectrum::new(theta, sigma, Some(spec.to_string())).expect("Hamming spectra have n + 1 >= 2 entries")
}

/// The binomial sums behind `g` and `hg`:
/// `S_j = Σ_i C(n-j, r_i-j)` for `j = 1..=r_ℓ` and
/// `T_j = Σ_{i ≤ ℓ'} C(n-j-1, r_i-j)` for `j = 1..=r_ℓ'` (index `j - 1`).
struct BinomialSums {
    s: Vec<BigInt>,
    t: Vec<BigInt>,
}

fn binomial_sums(n: u64, classes: &[u64]) -> BinomialSums {
    let r_max = *classes.last().unwrap() as usize;
    let r_max_prime = classes.iter().filter(|&&r| r < n).max().copied().unwrap_or(0) as usize;
    let mut s = vec![BigInt::zero(); r_max];
    let mut t = vec![BigInt::zero(); r_max_prime];
    for &r in classes {
        // walk C(n-j, r-j) down the diagonal
        let mut c = binomial(n - 1, r as i64 - 1);
        for j in 1..=r {
            s[j as usize - 1] += &c;
            if r < n {
                // C(n-j-1, r-j) = C(n-j, r-j)·(n-r)/(n-j)
                t[j as usize - 1] += &c * BigInt::from(n - r) / BigInt::from(n - j);
            }
            if j < r {
                c = c * BigInt::from(r - j) / BigInt::from(n - j);
            }
        }
    }
    BinomialSums { s, t }
}

fn min_valuation(sums: &[BigInt], offset: u64) -> Option<u64> {
    sums.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| i as u64 + 1 + offset + val2(v).expect("nonzero"))
        .min()
}

fn check_unweighted(n: u64, classes: &[u64]) -> Result<HammingGraphSpec> {
    let spec = HammingGraphSpec::unweighted(n, classes)?;
    if spec.is_single_antipodal() {
        return Err(Error::SingleAntipodalClass);
    }
    Ok(spec)
}

/// `(log₂ g, log₂ hg)` for the unweighted union of `classes`.
pub fn hamming_g_hg(n: u64, classes: &[u64]) -> Result<(u64, u64)> {
    let spec = check_unweighted(n, classes)?;
    let sums = binomial_sums(n, &spec.classes);
    let lg = min_valuation(&sums.s, 0).ok_or_else(|| Error::Internal("g sums all vanish".into()))?;
    let lhg = min_valuation(&sums.t, 1).ok_or_else(|| Error::Internal("hg sums all vanish".into()))?;
    Ok((lg, lhg))
}

/// Full verdict for an unweighted union, from the valuation formulas alone.
///
/// When revival occurs the minimum time is `π/2^k` with `2^{k+1} = hg` and
/// `k ≤ r_ℓ'`.
pub fn hamming_fr_test(n: u64, classes: &[u64]) -> Result<RevivalVerdict> {
    let spec = check_unweighted(n, classes)?;
    let sums = binomial_sums(n, &spec.classes);
    let lg = min_valuation(&sums.s, 0).ok_or_else(|| Error::Internal("g sums all vanish".into()))?;
    let lhg = min_valuation(&sums.t, 1).ok_or_else(|| Error::Internal("hg sums all vanish".into()))?;
    if lhg < lg {
        return Err(Error::Internal(format!("log2 hg = {lhg} < log2 g = {lg}")));
    }
    let g = pow2(lg);
    let theta0: BigInt = spec.classes.iter().map(|&r| binomial(n, r as i64)).sum();
    // θ_0 - θ_1 = 2 Σ C(n-1, r_i-1), and σ_1 = -1
    let minus_value = BigInt::from(2) * &sums.s[0] / &g;
    let inv = RevivalInvariants::from_parts(
        BigRational::from_integer(g),
        HValue::Finite(pow2(lhg - lg)),
        BigRational::from_integer(theta0),
        Some(minus_value),
    )?;
    let verdict = classify(&inv);
    if verdict.min_time.is_some() {
        let k = lhg - 1;
        let r_prime = spec.classes[..spec.ell_prime()].last().copied().unwrap_or(0);
        if k > r_prime {
            return Err(Error::Internal(format!("k = {k} exceeds r_l' = {r_prime}")));
        }
    }
    Ok(verdict)
}

/// Verdict for any spec: the valuation formulas for unweighted unions, the
/// generic engine on the exact spectrum otherwise.
pub fn analyze_hamming(spec: &HammingGraphSpec) -> Result<RevivalVerdict> {
    if spec.is_unweighted() {
        hamming_fr_test(spec.n, &spec.classes)
    } else {
        analyze_spectrum(&hamming_spectrum(spec))
    }
}

/// Result of the exact balanced-revival test at `π/2^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedCheck {
    pub holds: bool,
    /// Global phase `ζ` when the test holds.
    pub zeta: Option<PiAngle>,
    /// Phase of `β` when the test holds.
    pub beta: Option<BetaPhase>,
    /// `+1` or `-1` according to `Σ C(n-1, r_i-1) ≡ ±2^{k-2} (mod 2^k)`.
    pub residue_sign: Option<i8>,
}

impl BalancedCheck {
    fn fails() -> Self {
        BalancedCheck {
            holds: false,
            zeta: None,
            beta: None,
            residue_sign: None,
        }
    }
}

/// Whether the unweighted union is balanced at `π/2^k`, by congruences.
///
/// With residue sign `s`, i.e. `Σ_i C(n-1, r_i-1) ≡ s·2^{k-2} (mod 2^k)`, the
/// revival is `U = e^{iζ}(I - s·i·A_n)/√2` with `ζ = -θ_0π/2^k + sπ/4`.
pub fn balanced_at_pi_over_2k(n: u64, classes: &[u64], k: u32) -> Result<BalancedCheck> {
    if k < 2 {
        return Err(Error::Domain(format!("k = {k} must be at least 2")));
    }
    let spec = check_unweighted(n, classes)?;
    let r_prime = spec.classes[..spec.ell_prime()].last().copied().unwrap_or(0);
    if u64::from(k) > r_prime {
        return Ok(BalancedCheck::fails());
    }
    let k64 = u64::from(k);
    let modulus = pow2(k64);
    let quarter = pow2(k64 - 2);
    let sum = |top_shift: u64, j: u64| -> BigInt {
        spec.classes
            .iter()
            .map(|&r| binomial(n.saturating_sub(top_shift), r as i64 - j as i64))
            .sum()
    };
    let first = sum(1, 1).mod_floor(&modulus);
    let residue_sign: i8 = if first == quarter {
        1
    } else if first == &modulus - &quarter {
        -1
    } else {
        return Ok(BalancedCheck::fails());
    };
    for j in 1..k64 {
        if n < 1 + j {
            break;
        }
        if !sum(1 + j, j).mod_floor(&pow2(k64 - j)).is_zero() {
            return Ok(BalancedCheck::fails());
        }
    }
    let theta0: BigInt = spec.classes.iter().map(|&r| binomial(n, r as i64)).sum();
    let zeta = PiAngle::new(
        -BigRational::new(theta0, modulus) + BigRational::new(BigInt::from(residue_sign), BigInt::from(4)),
    );
    let beta = if residue_sign > 0 {
        BetaPhase::MinusI
    } else {
        BetaPhase::PlusI
    };
    Ok(BalancedCheck {
        holds: true,
        zeta: Some(zeta),
        beta: Some(beta),
        residue_sign: Some(residue_sign),
    })
}

fn val2_u64(x: u64) -> Option<u32> {
    (x != 0).then(|| x.trailing_zeros())
}

/// Balanced revival of `X_r` at `π/4`: `C(n-1, r-1)` odd and `C(n-2, r-1)` even.
///
/// For odd `r < n` (connected `X_r`) this agrees with [`distance_graph_pi4_digits`].
pub fn distance_graph_pi4(n: u64, r: u64) -> bool {
    if r == 0 || r > n || n < 2 {
        return false;
    }
    let a = binomial(n - 1, r as i64 - 1);
    let b = binomial(n - 2, r as i64 - 1);
    a.is_odd() && b.is_even()
}

/// Digit reading for connected `X_r`: `n` odd, `n - 1` not a power of two,
/// and `(r-1)_2` obtained from `(n-1)_2` by clearing some ones other than the
/// lowest one.
pub fn distance_graph_pi4_digits(n: u64, r: u64) -> bool {
    if r == 0 || r > n || n < 3 || n % 2 == 0 {
        return false;
    }
    let a = n - 1;
    let b = r - 1;
    if a.is_power_of_two() {
        return false;
    }
    let low = 1u64 << a.trailing_zeros();
    b & !a == 0 && b & low != 0
}

/// Balanced revival of `X_r` at `π/8`, valuation form: `n` odd,
/// `val2(n-1) = val2(r-1)` and `C(n-1, r-1) ≡ 2 (mod 4)`.
///
/// # Panics
/// If the digit form disagrees, which would be a bug in one of them.
pub fn distance_graph_pi8(n: u64, r: u64) -> bool {
    let valuation = distance_graph_pi8_valuation(n, r);
    let digits = distance_graph_pi8_digits(n, r);
    assert_eq!(valuation, digits, "pi/8 characterizations disagree at n = {n}, r = {r}");
    valuation
}

fn distance_graph_pi8_valuation(n: u64, r: u64) -> bool {
    if r == 0 || r > n || n < 2 || n % 2 == 0 {
        return false;
    }
    match (val2_u64(n - 1), val2_u64(r - 1)) {
        (Some(x), Some(y)) if x == y => {}
        _ => return false,
    }
    binomial(n - 1, r as i64 - 1).mod_floor(&BigInt::from(4)) == BigInt::from(2)
}

/// Digit form: `n` odd, `n - 1 ≠ 2^x(2^y - 1)`, and `(r-1)_2` comes from
/// `(n-1)_2` by keeping digits `0..=val2(n-1)`, turning exactly one `10` into
/// `01`, and clearing some further ones.
pub fn distance_graph_pi8_digits(n: u64, r: u64) -> bool {
    if r == 0 || r > n || n < 3 || n % 2 == 0 {
        return false;
    }
    let a = n - 1;
    let b = r - 1;
    let low = a.trailing_zeros();
    let shifted = a >> low;
    if (shifted + 1).is_power_of_two() {
        return false;
    }
    let keep = (1u64 << (low + 1)) - 1;
    if a & keep != b & keep {
        return false;
    }
    // exactly one position p where b has a 1 over a 0 of a, and it must be
    // paired with a 1 of a / 0 of b directly above it
    let over = b & !a;
    if over.count_ones() != 1 {
        return false;
    }
    let p = over.trailing_zeros();
    if p + 1 >= 64 {
        return false;
    }
    let above = 1u64 << (p + 1);
    a & above != 0 && b & above == 0
}

/// The distance graph with balanced revival at `π/2^k`, `k ≥ 4`:
/// `n = (2^{k-1} + 1)·2^{k+2} + 3`, `r = 2^{k+3} + 3`.
pub fn family_pi_over_2k(k: u32) -> Result<HammingGraphSpec> {
    if k < 4 {
        return Err(Error::Domain(format!("the family needs k >= 4, got {k}")));
    }
    if k > 28 {
        return Err(Error::Domain(format!("k = {k} is too large to instantiate")));
    }
    let n = ((1u64 << (k - 1)) + 1) * (1u64 << (k + 2)) + 3;
    let r = (1u64 << (k + 3)) + 3;
    HammingGraphSpec::unweighted(n, &[r])
}

/// Congruence class of `n` for which `X_1 ∪ ... ∪ X_r` is balanced at `π/4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConsecutiveUnion {
    pub r: u64,
    /// `2^{ℓ-1} < r ≤ 2^ℓ`.
    pub ell: u32,
    pub residue: u64,
    pub modulus: u64,
}

impl ConsecutiveUnion {
    /// The smallest `count` valid dimensions `n > r`.
    pub fn smallest_n(&self, count: usize) -> Vec<u64> {
        let mut n = self.r + 1;
        while n % self.modulus != self.residue {
            n += 1;
        }
        (0..count as u64).map(|i| n + i * self.modulus).collect()
    }

    pub fn admits(&self, n: u64) -> bool {
        n > self.r && n % self.modulus == self.residue
    }

    pub fn spec(&self, n: u64) -> Result<HammingGraphSpec> {
        let classes: Vec<u64> = (1..=self.r).collect();
        HammingGraphSpec::unweighted(n, &classes)
    }
}

pub fn consecutive_union(r: u64) -> Result<ConsecutiveUnion> {
    if r < 2 {
        return Err(Error::Domain(format!("consecutive unions need r >= 2, got {r}")));
    }
    let ell = 64 - (r - 1).leading_zeros();
    let modulus = 1u64 << ell;
    Ok(ConsecutiveUnion {
        r,
        ell,
        residue: (r + 1) % modulus,
        modulus,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Connectivity {
    Connected,
    Disconnected,
    Unknown,
}

/// Largest `n` for which connectivity is decided by traversal.
pub const CONNECTIVITY_TRAVERSAL_MAX_N: u64 = 14;

/// Whether the Cayley graph on `Z_2^n` generated by all words of weight in
/// `classes` is connected.
///
/// Up to [`CONNECTIVITY_TRAVERSAL_MAX_N`] this is a breadth-first traversal
/// from the zero word. The generators are first reduced to an echelon basis,
/// which has the same components and keeps the traversal linear in `2^n`.
/// Beyond that only the parity obstruction is detected.
pub fn connectivity(n: u64, classes: &[u64]) -> Connectivity {
    if n > CONNECTIVITY_TRAVERSAL_MAX_N {
        return if classes.iter().all(|r| r % 2 == 0) {
            Connectivity::Disconnected
        } else {
            Connectivity::Unknown
        };
    }
    let size = 1usize << n;
    let mut basis: Vec<usize> = Vec::new();
    for w in 1..size {
        if !classes.contains(&(w.count_ones() as u64)) {
            continue;
        }
        let mut v = w;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    let mut seen = vec![false; size];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for &b in &basis {
            let y = x ^ b;
            if !seen[y] {
                seen[y] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    if count == size {
        Connectivity::Connected
    } else {
        Connectivity::Disconnected
    }
}

/// One search result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub spec: HammingGraphSpec,
    pub verdict: RevivalVerdict,
    pub connectivity: Connectivity,
}

/// All class subsets of `{1..n}` with at most `max_classes` elements, in
/// lexicographic order, without `{n}` alone.
pub fn class_subsets(n: u64, max_classes: usize) -> Vec<Vec<u64>> {
    fn extend(n: u64, max: usize, start: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        for r in start..=n {
            cur.push(r);
            if !(cur.len() == 1 && r == n) {
                out.push(cur.clone());
            }
            if cur.len() < max {
                extend(n, max, r + 1, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, max_classes, 1, &mut Vec::new(), &mut out);
    out
}

fn hit_order(a: &SearchHit, b: &SearchHit) -> Ordering {
    a.spec
        .n
        .cmp(&b.spec.n)
        .then_with(|| a.verdict.min_time.cmp(&b.verdict.min_time))
        .then_with(|| a.spec.classes.cmp(&b.spec.classes))
}

/// Every unweighted union with revival for `n_min ≤ n ≤ n_max` and at most
/// `max_classes` classes, sorted by `(n, min_time, classes)`.
///
/// Work items run on the current rayon pool; the final sort makes the output
/// independent of scheduling.
pub fn search(n_min: u64, n_max: u64, max_classes: usize) -> Result<Vec<SearchHit>> {
    if n_min < 2 || n_min > n_max {
        return Err(Error::InvalidParameters(format!(
            "need 2 <= n_min <= n_max, got {n_min}..{n_max}"
        )));
    }
    if max_classes == 0 {
        return Err(Error::InvalidParameters("max_classes must be at least 1".into()));
    }
    let items: Vec<(u64, Vec<u64>)> = (n_min..=n_max)
        .flat_map(|n| class_subsets(n, max_classes).into_iter().map(move |c| (n, c)))
        .collect();
    let mut hits = items
        .into_par_iter()
        .map(|(n, classes)| -> Result<Option<SearchHit>> {
            let verdict = hamming_fr_test(n, &classes)?;
            if !verdict.classification.has_revival() {
                return Ok(None);
            }
            Ok(Some(SearchHit {
                connectivity: connectivity(n, &classes),
                spec: HammingGraphSpec::unweighted(n, &classes)?,
                verdict,
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    hits.sort_by(hit_order);
    Ok(hits)
}

/// Flat JSON form of a search hit, one per line in search output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub n: u64,
    pub classes: Vec<u64>,
    pub weights: Vec<String>,
    pub classification: Classification,
    pub min_time: Option<WalkTime>,
    pub zeta: Option<PiAngle>,
    pub g: String,
    pub h: String,
    pub mu: Option<String>,
    pub connectivity: Connectivity,
}

impl From<&SearchHit> for SearchRecord {
    fn from(hit: &SearchHit) -> Self {
        let v = &hit.verdict;
        SearchRecord {
            n: hit.spec.n,
            classes: hit.spec.classes.clone(),
            weights: hit.spec.weights.iter().map(|w| w.to_string()).collect(),
            classification: v.classification,
            min_time: v.min_time.clone(),
            zeta: v.params_at_min_time.as_ref().map(|p| p.zeta.clone()),
            g: v.g.to_string(),
            h: v.h.to_string(),
            mu: v.mu().map(BigInt::to_string),
            connectivity: hit.connectivity,
        }
    }
}

pub fn write_json_lines<W: Write>(hits: &[SearchHit], mut out: W) -> std::io::Result<()> {
    for hit in hits {
        let line = serde_json::to_string(&SearchRecord::from(hit))?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}

/// The exponent `k` when `time = π/2^k`.
pub fn pi_over_power_of_two(time: &WalkTime) -> Option<u32> {
    if !time.numer().is_one() || !crate::number_theory::is_power_of_two(time.denom()) {
        return None;
    }
    time.denom().trailing_zeros().and_then(|k| k.to_u32())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number_theory::krawtchouk;
    use crate::revival::compute_g_h_mu;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(d))
    }

    fn ints(spec: &SchemeSpectrum) -> Vec<i64> {
        spec.integer_theta()
            .unwrap()
            .iter()
            .map(|t| t.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn spec_validation() {
        assert!(HammingGraphSpec::unweighted(4, &[2, 1]).is_ok());
        assert!(HammingGraphSpec::unweighted(4, &[]).is_err());
        assert!(HammingGraphSpec::unweighted(4, &[5]).is_err());
        assert!(HammingGraphSpec::unweighted(4, &[0, 1]).is_err());
        assert!(HammingGraphSpec::unweighted(4, &[1, 1]).is_err());
        assert!(HammingGraphSpec::new(4, vec![1], vec![q(0, 1)]).is_err());
        let s = HammingGraphSpec::unweighted(5, &[5, 2]).unwrap();
        assert_eq!(s.classes(), &[2, 5]);
        assert_eq!((s.ell(), s.ell_prime()), (2, 1));
    }

    #[test]
    fn column_matches_closed_form() {
        for n in 0..=14u64 {
            for r in 0..=n {
                let col = krawtchouk_column(r, n);
                for s in 0..=n {
                    assert_eq!(col[s as usize], krawtchouk(r as i64, s as i64, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn spectra_examples() {
        let s = hamming_spectrum(&HammingGraphSpec::unweighted(4, &[1]).unwrap());
        assert_eq!(ints(&s), vec![4, 2, 0, -2, -4]);
        let s = hamming_spectrum(&HammingGraphSpec::unweighted(3, &[3]).unwrap());
        assert_eq!(ints(&s), vec![1, -1, 1, -1]);
        let s = hamming_spectrum(&HammingGraphSpec::unweighted(5, &[1, 2]).unwrap());
        let want: Vec<i64> = (0..=5)
            .map(|s| 5 - 2 * s + krawtchouk(2, s, 5).unwrap().to_i64().unwrap())
            .collect();
        assert_eq!(ints(&s), want);
    }

    #[test]
    fn g_hg_examples() {
        assert_eq!(hamming_g_hg(6, &[1]).unwrap(), (1, 2));
        let (g, hg) = hamming_g_hg(7, &[3]).unwrap();
        assert_eq!(hg - g, 2);
        let (g, hg) = hamming_g_hg(4, &[2]).unwrap();
        assert_eq!(hg - g, 2);
        assert_eq!(hamming_g_hg(5, &[5]), Err(Error::SingleAntipodalClass));
    }

    #[test]
    fn g_hg_agree_with_generic_engine() {
        for n in 2..=9u64 {
            for classes in class_subsets(n, 3) {
                let (lg, lhg) = hamming_g_hg(n, &classes).unwrap();
                let spec = HammingGraphSpec::unweighted(n, &classes).unwrap();
                let inv = compute_g_h_mu(&hamming_spectrum(&spec)).unwrap();
                assert_eq!(inv.g, BigRational::from_integer(pow2(lg)), "{spec}");
                let hg = inv.h.finite().unwrap() * inv.g.to_integer();
                assert_eq!(hg, pow2(lhg), "{spec}");
                assert_eq!(
                    hamming_fr_test(n, &classes).unwrap(),
                    analyze_spectrum(&hamming_spectrum(&spec)).unwrap(),
                    "{spec}"
                );
            }
        }
    }

    #[test]
    fn fr_test_examples() {
        let v = hamming_fr_test(7, &[3]).unwrap();
        assert_eq!(v.classification, Classification::BalancedFr);
        assert_eq!(v.min_time, Some(WalkTime::pi_over(4)));
        let v = hamming_fr_test(11, &[7]).unwrap();
        assert_eq!(v.classification, Classification::BalancedFr);
        assert_eq!(v.min_time, Some(WalkTime::pi_over(8)));
        let v = hamming_fr_test(6, &[1]).unwrap();
        assert_eq!(v.classification, Classification::PstOnly);
        assert_eq!(v.min_time, Some(WalkTime::pi_over(2)));
    }

    #[test]
    fn balanced_examples() {
        assert!(balanced_at_pi_over_2k(7, &[3], 2).unwrap().holds);
        assert!(balanced_at_pi_over_2k(11, &[7], 3).unwrap().holds);
        assert!(!balanced_at_pi_over_2k(6, &[1], 2).unwrap().holds);
        assert!(balanced_at_pi_over_2k(6, &[1], 1).is_err());
        assert_eq!(balanced_at_pi_over_2k(4, &[4], 2), Err(Error::SingleAntipodalClass));
    }

    #[test]
    fn balanced_check_matches_engine() {
        for n in 2..=10u64 {
            for classes in class_subsets(n, 3) {
                let spec = hamming_spectrum(&HammingGraphSpec::unweighted(n, &classes).unwrap());
                for k in 2..=5u32 {
                    let b = balanced_at_pi_over_2k(n, &classes, k).unwrap();
                    let time = WalkTime::pi_over(1u64 << k);
                    let exact = crate::revival::check_fr_at_time(&spec, &time);
                    let balanced = exact
                        .as_ref()
                        .is_some_and(|p| p.kind() == crate::revival::RevivalKind::Balanced);
                    assert_eq!(b.holds, balanced, "n={n} {classes:?} k={k}");
                    if let Some(p) = exact.filter(|_| balanced) {
                        assert_eq!(b.zeta.as_ref(), Some(&p.zeta), "n={n} {classes:?} k={k}");
                        assert_eq!(b.beta, Some(p.beta_phase()));
                    }
                }
            }
        }
    }

    #[test]
    fn distance_graph_examples() {
        assert!(distance_graph_pi4(7, 3));
        assert!(!distance_graph_pi4(9, 1));
        assert!(distance_graph_pi8(11, 7));
        assert!(distance_graph_pi8(27, 7));
        assert!(!distance_graph_pi8(7, 3));
    }

    #[test]
    fn pi4_digit_form_on_odd_r() {
        for n in 2..=200u64 {
            for r in 1..n {
                if r % 2 == 1 {
                    assert_eq!(distance_graph_pi4(n, r), distance_graph_pi4_digits(n, r), "{n},{r}");
                }
            }
        }
        // even r: X_2 on an even cube is balanced but disconnected
        assert!(distance_graph_pi4(4, 2));
        assert!(!distance_graph_pi4_digits(4, 2));
    }

    #[test]
    fn pi8_forms_agree() {
        for n in 2..=400u64 {
            for r in 1..n {
                distance_graph_pi8(n, r);
            }
        }
    }

    #[test]
    fn family_instances() {
        let s = family_pi_over_2k(4).unwrap();
        assert_eq!((s.n(), s.classes()), (579, &[131][..]));
        let s = family_pi_over_2k(5).unwrap();
        assert_eq!((s.n(), s.classes()), (2179, &[259][..]));
        assert!(family_pi_over_2k(3).is_err());
    }

    #[test]
    fn consecutive_union_examples() {
        let c = consecutive_union(2).unwrap();
        assert_eq!((c.ell, c.residue, c.modulus), (1, 1, 2));
        assert!(c.admits(5));
        let c = consecutive_union(3).unwrap();
        assert_eq!((c.ell, c.residue, c.modulus), (2, 0, 4));
        assert_eq!(c.smallest_n(2), vec![4, 8]);
        let c = consecutive_union(4).unwrap();
        assert_eq!((c.ell, c.residue, c.modulus), (2, 1, 4));
        assert!(c.admits(9));
        assert!(consecutive_union(1).is_err());
    }

    #[test]
    fn connectivity_cases() {
        assert_eq!(connectivity(5, &[2]), Connectivity::Disconnected);
        assert_eq!(connectivity(5, &[3]), Connectivity::Connected);
        assert_eq!(connectivity(4, &[4]), Connectivity::Disconnected);
        assert_eq!(connectivity(5, &[2, 5]), Connectivity::Connected);
        assert_eq!(connectivity(20, &[2, 4]), Connectivity::Disconnected);
        assert_eq!(connectivity(20, &[3]), Connectivity::Unknown);
    }

    #[test]
    fn subsets_enumeration() {
        let s = class_subsets(3, 3);
        assert_eq!(s.len(), 6);
        assert!(!s.contains(&vec![3]));
        assert_eq!(class_subsets(4, 1), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn search_examples() {
        let hits = search(7, 7, 1).unwrap();
        assert!(hits.iter().any(|h| h.spec.classes() == [3]
            && h.verdict.classification == Classification::BalancedFr
            && h.verdict.min_time == Some(WalkTime::pi_over(4))));
        let hits = search(4, 4, 1).unwrap();
        assert!(hits
            .iter()
            .any(|h| h.spec.classes() == [2] && h.verdict.classification == Classification::BalancedFr));
        assert!(hits.iter().any(|h| h.spec.classes() == [1]
            && h.verdict.classification == Classification::PstOnly
            && h.verdict.min_time == Some(WalkTime::pi_over(2))));
        let mut buf = Vec::new();
        write_json_lines(&hits, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), hits.len());
        let rec: SearchRecord = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(rec.n, 4);
    }

    #[test]
    fn power_of_two_times() {
        assert_eq!(pi_over_power_of_two(&WalkTime::pi_over(8)), Some(3));
        assert_eq!(pi_over_power_of_two(&WalkTime::pi_over(6)), None);
        assert_eq!(pi_over_power_of_two(&WalkTime::new(3, 8).unwrap()), None);
    }
}
