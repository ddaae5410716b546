//! Spectra of classical antipodal distance-regular graphs and the
//! reproduction of their revival table.
//!
//! For an antipodal DRG whose last distance class is a perfect matching,
//! that class acts as `(-1)^r` on the idempotent of the `r`-th largest
//! eigenvalue, so the spectrum alone decides revival.

use std::fmt;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::revival::{analyze_spectrum, Classification, RevivalVerdict};
use crate::spectrum::SchemeSpectrum;
use crate::time::WalkTime;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DrgFamily {
    /// Complement of `nK₂`.
    CocktailParty {
        n: u64,
    },
    /// Antipodal double cover of `K_n` with parameter `δ`; eigenvalues
    /// `n-1, (δ ± √Δ)/2, -1` with `Δ = δ² + 4(n-1)`.
    TwofoldCover {
        n: u64,
        delta: i64,
    },
    /// Hadamard graph of order `n²`.
    Hadamard {
        n: u64,
    },
    NCube {
        n: u64,
    },
    /// Halved `2d`-cube.
    HalvedCube {
        d: u64,
    },
    /// `J(2n, n)`.
    Johnson {
        n: u64,
    },
    /// Doubled odd graph on `2n + 1` points.
    DoubledOdd {
        n: u64,
    },
}

impl DrgFamily {
    pub fn key(&self) -> &'static str {
        match self {
            DrgFamily::CocktailParty { .. } => "cocktail_party",
            DrgFamily::TwofoldCover { .. } => "twofold_cover",
            DrgFamily::Hadamard { .. } => "hadamard",
            DrgFamily::NCube { .. } => "ncube",
            DrgFamily::HalvedCube { .. } => "halved_cube",
            DrgFamily::Johnson { .. } => "johnson",
            DrgFamily::DoubledOdd { .. } => "doubled_odd",
        }
    }
}

impl fmt::Display for DrgFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrgFamily::CocktailParty { n } => write!(f, "cocktail_party(n={n})"),
            DrgFamily::TwofoldCover { n, delta } => write!(f, "twofold_cover(n={n};delta={delta})"),
            DrgFamily::Hadamard { n } => write!(f, "hadamard(n={n})"),
            DrgFamily::NCube { n } => write!(f, "ncube(n={n})"),
            DrgFamily::HalvedCube { d } => write!(f, "halved_cube(d={d})"),
            DrgFamily::Johnson { n } => write!(f, "johnson(n={n})"),
            DrgFamily::DoubledOdd { n } => write!(f, "doubled_odd(n={n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrgFamilyInstance {
    pub family: DrgFamily,
    pub spectrum: SchemeSpectrum,
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameters(msg)
}

fn exact_sqrt(x: i64) -> Option<i64> {
    (x >= 0).then(|| x.sqrt()).filter(|r| r * r == x)
}

fn to_i64(v: u64) -> Result<i64> {
    i64::try_from(v)
        .ok()
        .filter(|v| *v < 1 << 30)
        .ok_or_else(|| invalid(format!("parameter {v} is too large")))
}

/// Eigenvalues in descending order with the antipodal sign rule.
pub fn build_family(family: DrgFamily) -> Result<DrgFamilyInstance> {
    let theta: Vec<i64> = match family {
        DrgFamily::CocktailParty { n } => {
            if n < 2 {
                return Err(invalid(format!("cocktail party needs n >= 2, got {n}")));
            }
            let n = to_i64(n)?;
            vec![2 * n - 2, 0, -2]
        }
        DrgFamily::TwofoldCover { n, delta } => {
            if n < 3 {
                return Err(invalid(format!("twofold cover needs n >= 3, got {n}")));
            }
            let n = to_i64(n)?;
            let disc = delta * delta + 4 * (n - 1);
            let root = exact_sqrt(disc)
                .ok_or_else(|| Error::IrrationalSpectrum(format!("Delta = {disc} is not a perfect square")))?;
            if (delta + root) % 2 != 0 {
                return Err(invalid(format!("delta + sqrt(Delta) = {} is odd", delta + root)));
            }
            let c2 = n - 2 - delta;
            if c2 <= 0 || c2 % 2 != 0 {
                return Err(invalid(format!(
                    "no double cover of K_{n} with delta = {delta}: c2 = {c2}/2"
                )));
            }
            let mut t = vec![n - 1, (delta + root) / 2, -1, (delta - root) / 2];
            t.sort_unstable_by(|a, b| b.cmp(a));
            t
        }
        DrgFamily::Hadamard { n } => {
            if !(n == 1 || n % 2 == 0) {
                return Err(invalid(format!("Hadamard matrices of order {n} do not exist")));
            }
            let n = to_i64(n)?;
            vec![n * n, n, 0, -n, -n * n]
        }
        DrgFamily::NCube { n } => {
            if n < 1 {
                return Err(invalid("the n-cube needs n >= 1".into()));
            }
            let n = to_i64(n)?;
            (0..=n).map(|j| n - 2 * j).collect()
        }
        DrgFamily::HalvedCube { d } => {
            if d < 1 {
                return Err(invalid("the halved 2d-cube needs d >= 1".into()));
            }
            let d = to_i64(d)?;
            (0..=d).map(|j| d * (2 * d - 1) - 2 * j * (2 * d - j)).collect()
        }
        DrgFamily::Johnson { n } => {
            if n < 1 {
                return Err(invalid("J(2n,n) needs n >= 1".into()));
            }
            let n = to_i64(n)?;
            (0..=n).map(|j| (n - j) * (n - j) - j).collect()
        }
        DrgFamily::DoubledOdd { n } => {
            if n < 1 {
                return Err(invalid("the doubled odd graph needs n >= 1".into()));
            }
            let n = to_i64(n)?;
            let mut t: Vec<i64> = (0..=2 * n + 1)
                .filter(|&j| j != n + 1)
                .map(|j| if j % 2 == 0 { n + 1 - j } else { j - n - 1 })
                .collect();
            t.sort_unstable_by(|a, b| b.cmp(a));
            t
        }
    };
    if theta.windows(2).any(|w| w[0] == w[1]) {
        return Err(invalid(format!("{family} has a repeated eigenvalue in {theta:?}")));
    }
    let spectrum = SchemeSpectrum::alternating(theta, Some(&family.to_string()))?;
    Ok(DrgFamilyInstance { family, spectrum })
}

/// What the summary table states for a family instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedRow {
    pub g: BigInt,
    pub h: BigInt,
    /// `None` where the table has a dash.
    pub mu: Option<BigInt>,
    pub fr: bool,
    pub pst: bool,
    /// Set only where the table says "balanced".
    pub balanced: Option<bool>,
    pub min_time: Option<WalkTime>,
}

fn row(g: i64, h: i64, mu: Option<i64>, fr: bool, pst: bool, min_time: Option<WalkTime>) -> ExpectedRow {
    ExpectedRow {
        g: g.into(),
        h: h.into(),
        mu: mu.map(BigInt::from),
        fr,
        pst,
        balanced: None,
        min_time,
    }
}

/// The table's closed forms, or `None` for instances it does not cover.
pub fn expected_row(family: DrgFamily) -> Option<ExpectedRow> {
    Some(match family {
        DrgFamily::CocktailParty { n } => {
            let n = n as i64;
            row(2, n, Some(n - 1), n > 2, n % 2 == 0, Some(WalkTime::pi_over(n)))
        }
        DrgFamily::TwofoldCover { n, delta } => {
            let n = n as i64;
            let root = exact_sqrt(n);
            match (delta, n % 8, root) {
                (0, _, _) => row(2, 1, None, false, false, None),
                (-2, _, Some(s)) => row(s, 2, Some(1), false, true, Some(WalkTime::pi_over(s))),
                (2, 4, Some(s)) => row(4, s / 2, Some((s - 2) / 4), true, false, Some(WalkTime::pi_over(s))),
                (2, 0, Some(s)) => row(2, s, Some((s - 2) / 2), true, true, Some(WalkTime::pi_over(s))),
                _ => return None,
            }
        }
        DrgFamily::Hadamard { n } => {
            let n = n as i64;
            row(n, 2, Some(1), false, true, Some(WalkTime::pi_over(n)))
        }
        DrgFamily::NCube { .. } => row(2, 2, Some(1), false, true, Some(WalkTime::pi_over(2))),
        DrgFamily::HalvedCube { d } => {
            let mut r = row(2, 4, Some(2 * d as i64 - 1), true, true, Some(WalkTime::pi_over(4)));
            r.balanced = Some(true);
            r
        }
        DrgFamily::Johnson { .. } => row(2, 1, None, false, false, None),
        DrgFamily::DoubledOdd { .. } => row(1, 1, None, false, false, None),
    })
}

/// One reproduced table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub family: DrgFamily,
    pub spectrum: SchemeSpectrum,
    pub verdict: RevivalVerdict,
    pub expected: Option<ExpectedRow>,
}

impl TableRow {
    pub fn g(&self) -> BigInt {
        self.verdict.g.to_integer()
    }

    pub fn h(&self) -> Option<&BigInt> {
        self.verdict.h_finite()
    }

    pub fn fr(&self) -> bool {
        matches!(
            self.verdict.classification,
            Classification::FrNotBalanced | Classification::BalancedFr
        )
    }

    /// Earliest perfect state transfer, at `m = 2`: `π/g`.
    pub fn pst_time(&self) -> Option<WalkTime> {
        self.verdict
            .pst
            .then(|| WalkTime::from_coefficient(BigRational::from_integer(1.into()) / &self.verdict.g))
    }

    /// Plain-language verdict in the style of the table.
    pub fn verdict_text(&self) -> String {
        let fr = match (&self.verdict.classification, &self.verdict.min_time) {
            (Classification::BalancedFr, Some(t)) => format!("balanced FR at {t}"),
            (Classification::FrNotBalanced, Some(t)) => format!("FR at {t}"),
            _ => "no FR".to_string(),
        };
        let pst = match self.pst_time() {
            Some(t) => format!("PST at {t}"),
            None => "no PST".to_string(),
        };
        format!("{fr}; {pst}")
    }

    /// Where the computed row differs from the table; empty on a match.
    pub fn mismatches(&self) -> Vec<String> {
        let Some(e) = &self.expected else {
            return vec!["no table entry".into()];
        };
        let mut out = Vec::new();
        if self.g() != e.g {
            out.push(format!("g = {} vs {}", self.g(), e.g));
        }
        let h = self.h().cloned().unwrap_or_else(BigInt::zero);
        if h != e.h {
            out.push(format!("h = {h} vs {}", e.h));
        }
        if let (Some(mu), Some(want)) = (self.verdict.mu(), &e.mu) {
            if h > BigInt::zero() && *mu != want.mod_floor(&h) {
                out.push(format!("mu = {mu} vs {want} mod {h}"));
            }
        }
        if self.verdict.mu().is_some() != e.mu.is_some() {
            out.push(format!("mu presence {:?} vs {:?}", self.verdict.mu(), e.mu));
        }
        if self.fr() != e.fr {
            out.push(format!("FR = {} vs {}", self.fr(), e.fr));
        }
        if self.verdict.pst != e.pst {
            out.push(format!("PST = {} vs {}", self.verdict.pst, e.pst));
        }
        if let Some(b) = e.balanced {
            if (self.verdict.classification == Classification::BalancedFr) != b {
                out.push(format!("balanced = {} vs {b}", !b));
            }
        }
        if self.verdict.min_time != e.min_time {
            out.push(format!(
                "min time {:?} vs {:?}",
                self.verdict.min_time.as_ref().map(|t| t.to_string()),
                e.min_time.as_ref().map(|t| t.to_string())
            ));
        }
        out
    }

    pub fn matches(&self) -> bool {
        self.mismatches().is_empty()
    }
}

pub fn table_row(family: DrgFamily) -> Result<TableRow> {
    let inst = build_family(family)?;
    let verdict = analyze_spectrum(&inst.spectrum)?;
    Ok(TableRow {
        family,
        spectrum: inst.spectrum,
        verdict,
        expected: expected_row(family),
    })
}

/// Smallest `n` admitting a double cover of `K_n` with parameter `δ` and
/// `n ≡ residue (mod modulus)`, searching up to `limit`.
pub fn smallest_twofold_cover(delta: i64, residue: u64, modulus: u64, limit: u64) -> Option<u64> {
    (3..=limit).filter(|n| n % modulus == residue % modulus).find(|&n| {
        build_family(DrgFamily::TwofoldCover { n, delta }).is_ok()
            && expected_row(DrgFamily::TwofoldCover { n, delta }).is_some()
    })
}

/// The fixed list of instances covering every table row.
pub fn table_instances() -> Vec<DrgFamily> {
    let mut v = Vec::new();
    v.extend((3..=8).map(|n| DrgFamily::CocktailParty { n }));
    for (delta, residue, modulus) in [(0, 0, 1), (-2, 0, 1), (2, 4, 8), (2, 0, 8)] {
        if let Some(n) = smallest_twofold_cover(delta, residue, modulus, 10_000) {
            v.push(DrgFamily::TwofoldCover { n, delta });
        }
    }
    v.extend([2, 4].map(|n| DrgFamily::Hadamard { n }));
    v.extend((2..=10).map(|n| DrgFamily::NCube { n }));
    v.extend((2..=5).map(|d| DrgFamily::HalvedCube { d }));
    v.extend((2..=5).map(|n| DrgFamily::Johnson { n }));
    v.extend((2..=4).map(|n| DrgFamily::DoubledOdd { n }));
    v
}

pub fn reproduce_table() -> Result<Vec<TableRow>> {
    table_instances().into_iter().map(table_row).collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// CSV with columns `drg,spectrum,g,h,mu,fr,match`.
pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("drg,spectrum,g,h,mu,fr,match\n");
    for r in rows {
        let spectrum: Vec<String> = r.spectrum.theta().iter().map(|t| t.to_string()).collect();
        let fields = [
            r.family.to_string(),
            format!("{{{}}}", spectrum.join(" ")),
            r.g().to_string(),
            r.verdict.h.to_string(),
            r.verdict.mu().map(|m| m.to_string()).unwrap_or_else(|| "-".into()),
            r.verdict_text(),
            r.matches().to_string(),
        ];
        let line: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Parses a family name with its parameters, as given on a command line.
pub fn family_from_parts(name: &str, n: Option<u64>, d: Option<u64>, delta: Option<i64>) -> Result<DrgFamily> {
    let need_n = || n.ok_or_else(|| invalid(format!("family {name} needs --n")));
    Ok(match name {
        "cocktail_party" | "cocktail-party" | "cocktail" => DrgFamily::CocktailParty { n: need_n()? },
        "twofold_cover" | "twofold-cover" | "cover" => DrgFamily::TwofoldCover {
            n: need_n()?,
            delta: delta.ok_or_else(|| invalid("twofold_cover needs --delta".into()))?,
        },
        "hadamard" => DrgFamily::Hadamard { n: need_n()? },
        "ncube" | "n-cube" | "cube" => DrgFamily::NCube { n: need_n()? },
        "halved_cube" | "halved-cube" | "halved" => DrgFamily::HalvedCube {
            d: d.or(n).ok_or_else(|| invalid("halved_cube needs --d".into()))?,
        },
        "johnson" => DrgFamily::Johnson { n: need_n()? },
        "doubled_odd" | "doubled-odd" => DrgFamily::DoubledOdd { n: need_n()? },
        other => return Err(invalid(format!("unknown family {other:?}"))),
    })
}

impl TableRow {
    /// Minimum time as a float, for display.
    pub fn min_time_f64(&self) -> Option<f64> {
        self.verdict.min_time.as_ref().map(WalkTime::to_f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::revival::check_fr_at_time;
    use num_traits::ToPrimitive;

    fn theta(f: DrgFamily) -> Vec<i64> {
        build_family(f)
            .unwrap()
            .spectrum
            .integer_theta()
            .unwrap()
            .iter()
            .map(|t| t.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn spectra() {
        assert_eq!(theta(DrgFamily::CocktailParty { n: 4 }), vec![6, 0, -2]);
        assert_eq!(theta(DrgFamily::NCube { n: 5 }), vec![5, 3, 1, -1, -3, -5]);
        assert_eq!(theta(DrgFamily::Johnson { n: 3 }), vec![9, 3, -1, -3]);
        assert_eq!(theta(DrgFamily::DoubledOdd { n: 2 }), vec![3, 2, 1, -1, -2]);
        assert_eq!(theta(DrgFamily::TwofoldCover { n: 4, delta: -2 }), vec![3, 1, -1, -3]);
        assert_eq!(theta(DrgFamily::HalvedCube { d: 3 }), vec![15, 5, -1, -3]);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            build_family(DrgFamily::TwofoldCover { n: 6, delta: 0 }),
            Err(Error::IrrationalSpectrum(_))
        ));
        assert!(build_family(DrgFamily::Hadamard { n: 3 }).is_err());
        assert!(build_family(DrgFamily::CocktailParty { n: 1 }).is_err());
    }

    #[test]
    fn smallest_covers() {
        assert_eq!(smallest_twofold_cover(0, 0, 1, 1000), Some(10));
        assert_eq!(smallest_twofold_cover(-2, 0, 1, 1000), Some(4));
        assert_eq!(smallest_twofold_cover(2, 4, 8, 1000), Some(36));
        assert_eq!(smallest_twofold_cover(2, 0, 8, 1000), Some(16));
    }

    #[test]
    fn table_examples() {
        let r = table_row(DrgFamily::Hadamard { n: 4 }).unwrap();
        assert!(r.matches(), "{:?}", r.mismatches());
        assert_eq!(r.g(), BigInt::from(4));
        let r = table_row(DrgFamily::TwofoldCover { n: 16, delta: 2 }).unwrap();
        assert!(r.matches(), "{:?}", r.mismatches());
        assert_eq!(r.verdict.min_time, Some(WalkTime::pi_over(4)));
        let r = table_row(DrgFamily::DoubledOdd { n: 4 }).unwrap();
        assert!(r.matches());
        let r = table_row(DrgFamily::NCube { n: 8 }).unwrap();
        assert!(r.matches());
        assert_eq!(r.verdict_text(), "no FR; PST at 1/2 pi");
    }

    #[test]
    fn johnson_four_two_is_the_octahedron() {
        // J(4,2) has spectrum (4, 0, -2): the cocktail party graph on 6 vertices
        assert_eq!(
            theta(DrgFamily::Johnson { n: 2 }),
            theta(DrgFamily::CocktailParty { n: 3 })
        );
        let r = table_row(DrgFamily::Johnson { n: 2 }).unwrap();
        assert_eq!(r.h(), Some(&BigInt::from(3)));
        assert!(!r.matches());
    }

    #[test]
    fn cocktail_party_times() {
        for n in 3..=8i64 {
            let s = build_family(DrgFamily::CocktailParty { n: n as u64 }).unwrap().spectrum;
            for k in 1..n {
                let p = check_fr_at_time(&s, &WalkTime::new(k, n).unwrap()).unwrap();
                assert!(p.is_revival());
            }
        }
    }

    #[test]
    fn csv_output() {
        let rows = vec![table_row(DrgFamily::NCube { n: 3 }).unwrap()];
        let csv = table_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("drg,spectrum,g,h,mu,fr,match"));
        assert_eq!(
            lines.next(),
            Some("ncube(n=3),{3 1 -1 -3},2,2,1,no FR; PST at 1/2 pi,true")
        );
    }
}
