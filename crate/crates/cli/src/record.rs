//! The JSON record every command emits.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use revival_core::hamming::{Connectivity, HammingGraphSpec};
use revival_core::oracle::RevivalCheck;
use revival_core::{BetaPhase, Classification, PiAngle, RevivalParameters, RevivalVerdict, WalkTime};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputEcho {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<u64>>,
    /// Exact rationals as strings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub file: Option<String>,
}

impl InputEcho {
    pub fn hamming(spec: &HammingGraphSpec) -> Self {
        InputEcho {
            n: Some(spec.n()),
            classes: Some(spec.classes().to_vec()),
            weights: Some(spec.weights().iter().map(|w| w.to_string()).collect()),
            ..Default::default()
        }
    }
}

/// `U(τ) = e^{iζ}(αI + βA_q)` at one time.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RevivalRecord {
    pub time: WalkTime,
    pub time_float: f64,
    pub kind: String,
    pub zeta: PiAngle,
    /// `ϑ/π` with `α = cos ϑ`, `β = i sin ϑ`.
    pub angle: String,
    pub alpha: f64,
    /// Imaginary part of `β`.
    pub beta: f64,
    pub beta_phase: BetaPhase,
}

impl From<&RevivalParameters> for RevivalRecord {
    fn from(p: &RevivalParameters) -> Self {
        RevivalRecord {
            time: p.tau.clone(),
            time_float: p.tau.to_f64(),
            kind: format!("{:?}", p.kind()),
            zeta: p.zeta.clone(),
            angle: p.angle.to_string(),
            alpha: p.alpha(),
            beta: p.beta().im,
            beta_phase: p.beta_phase(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerdictRecord {
    pub g: String,
    pub h: String,
    pub mu: Option<String>,
    pub classification: Classification,
    pub pst: bool,
    pub min_time: Option<WalkTime>,
    pub min_time_float: Option<f64>,
    /// Parameters at the minimum time.
    pub revival: Option<RevivalRecord>,
}

impl From<&RevivalVerdict> for VerdictRecord {
    fn from(v: &RevivalVerdict) -> Self {
        VerdictRecord {
            g: v.g.to_string(),
            h: v.h.to_string(),
            mu: v.mu().map(BigInt::to_string),
            classification: v.classification,
            pst: v.pst,
            min_time: v.min_time.clone(),
            min_time_float: v.min_time.as_ref().map(WalkTime::to_f64),
            revival: v.params_at_min_time.as_ref().map(RevivalRecord::from),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleRecord {
    pub time: WalkTime,
    pub precision_bits: u32,
    pub tolerance: f64,
    pub pass: bool,
    pub f0_residual: f64,
    pub fn_residual: f64,
    pub max_interior: f64,
    pub unitarity_defect: f64,
}

impl OracleRecord {
    pub fn new(time: &WalkTime, precision_bits: u32, check: &RevivalCheck, unitarity_defect: f64) -> Self {
        OracleRecord {
            time: time.clone(),
            precision_bits,
            tolerance: check.tolerance,
            pass: check.pass,
            f0_residual: check.f0_residual,
            fn_residual: check.fn_residual,
            max_interior: check.max_interior,
            unitarity_defect,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputRecord {
    pub command: String,
    pub input: InputEcho,
    pub verdict: VerdictRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connectivity: Option<Connectivity>,
    /// Exact test at a requested time; `null` revival means none there.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub at_time: Option<AtTime>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleRecord>,
    /// Whether a table row matches its published values.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table_match: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtTime {
    pub time: WalkTime,
    pub revival: Option<RevivalRecord>,
}

impl OutputRecord {
    pub fn new(command: &str, input: InputEcho, verdict: &RevivalVerdict) -> Self {
        OutputRecord {
            command: command.to_string(),
            input,
            verdict: verdict.into(),
            connectivity: None,
            at_time: None,
            oracle: None,
            table_match: None,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    /// `key: value` lines carrying the same verdict data as the JSON form.
    pub fn to_text(&self) -> String {
        let v = &self.verdict;
        let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        let mut lines = vec![format!("command: {}", self.command)];
        let input = &self.input;
        let join = |xs: &[String]| xs.join(",");
        if let Some(f) = &input.family {
            lines.push(format!("family: {f}"));
        }
        if let Some(f) = &input.file {
            lines.push(format!("file: {f}"));
        }
        if let Some(n) = input.n {
            lines.push(format!("n: {n}"));
        }
        if let Some(c) = &input.classes {
            lines.push(format!(
                "classes: {}",
                join(&c.iter().map(u64::to_string).collect::<Vec<_>>())
            ));
        }
        if let Some(w) = input.weights.as_ref().filter(|w| w.iter().any(|x| x != "1")) {
            lines.push(format!("weights: {}", join(w)));
        }
        lines.extend([
            format!("g: {}", v.g),
            format!("h: {}", v.h),
            format!("mu: {}", opt(v.mu.clone())),
            format!("classification: {}", v.classification.as_str()),
            format!("pst: {}", v.pst),
            format!("min_time: {}", opt(v.min_time.as_ref().map(WalkTime::to_string))),
        ]);
        if let Some(r) = &v.revival {
            lines.push(format!("zeta: {}", r.zeta));
            lines.push(format!("angle: {}", r.angle));
            lines.push(format!("alpha: {}", r.alpha));
            lines.push(format!("beta: {}i", r.beta));
        }
        if let Some(c) = self.connectivity {
            lines.push(format!(
                "connectivity: {}",
                serde_json::to_value(c).unwrap().as_str().unwrap_or("")
            ));
        }
        if let Some(a) = &self.at_time {
            lines.push(format!(
                "at {}: {}",
                a.time,
                a.revival
                    .as_ref()
                    .map(|r| r.kind.clone())
                    .unwrap_or_else(|| "no revival".into())
            ));
        }
        if let Some(o) = &self.oracle {
            lines.push(format!(
                "oracle: {} at {} bits (f0 {:e}, fn {:e}, interior {:e})",
                if o.pass { "pass" } else { "fail" },
                o.precision_bits,
                o.f0_residual,
                o.fn_residual,
                o.max_interior
            ));
        }
        if let Some(m) = self.table_match {
            lines.push(format!("match: {m}"));
        }
        lines.join("\n") + "\n"
    }

    pub const CSV_HEADER: &'static str = "command,n,classes,weights,g,h,mu,classification,pst,min_time,zeta,alpha,beta";

    pub fn to_csv_row(&self) -> String {
        let v = &self.verdict;
        let join = |xs: Option<Vec<String>>| xs.map(|x| x.join(" ")).unwrap_or_default();
        let fields = [
            self.command.clone(),
            self.input.n.map(|n| n.to_string()).unwrap_or_default(),
            join(
                self.input
                    .classes
                    .as_ref()
                    .map(|c| c.iter().map(u64::to_string).collect()),
            ),
            join(self.input.weights.clone()),
            v.g.clone(),
            v.h.clone(),
            v.mu.clone().unwrap_or_default(),
            v.classification.as_str().to_string(),
            v.pst.to_string(),
            v.min_time.as_ref().map(WalkTime::to_string).unwrap_or_default(),
            v.revival.as_ref().map(|r| r.zeta.to_string()).unwrap_or_default(),
            v.revival.as_ref().map(|r| r.alpha.to_string()).unwrap_or_default(),
            v.revival.as_ref().map(|r| r.beta.to_string()).unwrap_or_default(),
        ];
        fields.join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use revival_core::{hamming_fr_test, HammingGraphSpec};

    fn record(n: u64, classes: &[u64]) -> OutputRecord {
        let spec = HammingGraphSpec::unweighted(n, classes).unwrap();
        OutputRecord::new(
            "analyze",
            InputEcho::hamming(&spec),
            &hamming_fr_test(n, classes).unwrap(),
        )
    }

    #[test]
    fn json_round_trip() {
        for (n, c) in [(7, vec![3]), (6, vec![1]), (5, vec![2]), (9, vec![2, 5])] {
            let r = record(n, &c);
            let back: OutputRecord = serde_json::from_str(&r.to_json_line()).unwrap();
            assert_eq!(back, r);
        }
    }

    #[test]
    fn csv_width() {
        let width = OutputRecord::CSV_HEADER.split(',').count();
        for (n, c) in [(7, vec![3]), (5, vec![2]), (9, vec![2, 5])] {
            assert_eq!(record(n, &c).to_csv_row().split(',').count(), width);
        }
    }

    #[test]
    fn text_lists_verdict() {
        let text = record(7, &[3]).to_text();
        assert!(text.contains("classification: BalancedFR\n"));
        assert!(text.contains("min_time: 1/4 pi\n"));
        assert!(text.contains("n: 7\nclasses: 3\n"));
        assert!(!text.contains("weights:"));
        let none = record(5, &[2]).to_text();
        assert!(none.contains("min_time: -\n"));
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let mut v: serde_json::Value = serde_json::from_str(&record(7, &[3]).to_json_line()).unwrap();
        v["extra"] = 1.into();
        assert!(serde_json::from_value::<OutputRecord>(v).is_err());
    }
}
