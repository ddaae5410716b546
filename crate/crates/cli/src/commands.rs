use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use num_rational::BigRational;

use revival_core::drg::{family_from_parts, table_csv, table_row, TableRow};
use revival_core::hamming::{connectivity, search};
use revival_core::oracle::{amplitude_profile, amplitude_profile_f64, dense_walk, verify_revival, DEFAULT_TOLERANCE};
use revival_core::scheme::{find_order2_classes, spectrum_of};
use revival_core::time::parse_rational;
use revival_core::{
    analyze_hamming, analyze_spectrum, check_fr_at_time, hamming_spectrum, reproduce_table, Classification,
    ExplicitScheme, HammingGraphSpec, RevivalParameters, SchemeSpectrum, WalkTime,
};

use crate::args::{AnalyzeArgs, Cli, Command, DrgTableArgs, Format, ProfileArgs, SchemeArgs, SearchArgs, SpectrumArgs};
use crate::record::{AtTime, InputEcho, OracleRecord, OutputRecord, RevivalRecord};
use crate::{exit, CliError};

type Outcome = Result<i32, CliError>;

/// Runs a parsed command line, writing results to `out`; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Analyze(a) => analyze(a, out),
        Command::Search(a) => search_cmd(a, out),
        Command::DrgTable(a) => drg_table(a, out),
        Command::Profile(a) => profile(a, out),
        Command::Spectrum(a) => spectrum(a, out),
        Command::Scheme(a) => scheme(a, out),
    }
}

fn io_err(path: &str) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |e| CliError::Io(path.to_string(), e)
}

fn write_all(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(io_err("<stdout>"))
}

fn hamming_spec(n: u64, classes: &[u64], weights: Option<&[String]>) -> Result<HammingGraphSpec, CliError> {
    match weights {
        None => Ok(HammingGraphSpec::unweighted(n, classes)?),
        Some(w) if w.len() != classes.len() => Err(CliError::Usage(format!(
            "{} weights for {} classes",
            w.len(),
            classes.len()
        ))),
        Some(w) => {
            let terms = classes
                .iter()
                .zip(w)
                .map(|(&r, s)| Ok((r, parse_rational(s)?)))
                .collect::<Result<Vec<(u64, BigRational)>, revival_core::Error>>()?;
            Ok(HammingGraphSpec::weighted(n, &terms)?)
        }
    }
}

fn default_precision(n: u64, requested: Option<u32>) -> u32 {
    requested.unwrap_or(n as u32 + 128)
}

fn emit(records: &[OutputRecord], format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let mut text = String::new();
    match format {
        Format::Json => {
            for r in records {
                text.push_str(&r.to_json_line());
                text.push('\n');
            }
        }
        Format::Csv => {
            text.push_str(OutputRecord::CSV_HEADER);
            text.push('\n');
            for r in records {
                text.push_str(&r.to_csv_row());
                text.push('\n');
            }
        }
        Format::Text => {
            let blocks: Vec<String> = records.iter().map(OutputRecord::to_text).collect();
            text = blocks.join("\n");
        }
    }
    write_all(out, &text)
}

fn is_fr(c: Classification) -> bool {
    matches!(c, Classification::FrNotBalanced | Classification::BalancedFr)
}

fn analyze(a: AnalyzeArgs, out: &mut dyn Write) -> Outcome {
    let spec = hamming_spec(a.n, &a.classes, a.weights.as_deref())?;
    let verdict = analyze_hamming(&spec)?;
    let spectrum = hamming_spectrum(&spec);
    let mut record = OutputRecord::new("analyze", InputEcho::hamming(&spec), &verdict);
    if spec.is_unweighted() {
        record.connectivity = Some(connectivity(spec.n(), spec.classes()));
    }
    let mut to_verify: Option<RevivalParameters> = verdict.params_at_min_time.clone();
    if let Some(t) = &a.time {
        let time: WalkTime = t.parse()?;
        let params = check_fr_at_time(&spectrum, &time);
        record.at_time = Some(AtTime {
            time,
            revival: params.as_ref().map(RevivalRecord::from),
        });
        to_verify = params;
    }
    let mut code = exit::OK;
    if a.verify {
        if let Some(params) = to_verify {
            let bits = default_precision(spec.n(), a.precision.precision);
            let profile = amplitude_profile(&spec, &params.tau, bits)?;
            let check = verify_revival(&profile, &params, a.tolerance)?;
            if !check.pass {
                code = exit::DATA;
            }
            record.oracle = Some(OracleRecord::new(&params.tau, bits, &check, profile.unitarity_defect()));
        }
    }
    emit(&[record], a.format, out)?;
    if code == exit::OK && a.expect_fr && !is_fr(verdict.classification) {
        code = exit::NEGATIVE;
    }
    Ok(code)
}

fn search_cmd(a: SearchArgs, out: &mut dyn Write) -> Outcome {
    let run = || search(a.n_min, a.n_max, a.max_classes);
    let hits = match a.jobs {
        Some(0) => return Err(CliError::Usage("--jobs must be positive".into())),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let records: Vec<OutputRecord> = hits
        .iter()
        .filter(|h| !a.balanced_only || h.verdict.classification == Classification::BalancedFr)
        .map(|h| {
            let mut r = OutputRecord::new("search", InputEcho::hamming(&h.spec), &h.verdict);
            r.connectivity = Some(h.connectivity);
            r
        })
        .collect();
    match &a.out {
        Some(path) => {
            let shown = path.display().to_string();
            let mut file = fs::File::create(path).map_err(io_err(&shown))?;
            emit(&records, a.format, &mut file)?;
            file.flush().map_err(io_err(&shown))?;
        }
        None => emit(&records, a.format, out)?,
    }
    Ok(exit::OK)
}

fn table_record(row: &TableRow) -> OutputRecord {
    let input = InputEcho {
        family: Some(row.family.to_string()),
        theta: Some(row.spectrum.theta().iter().map(|t| t.to_string()).collect()),
        sigma: Some(row.spectrum.sigma().iter().map(|s| s.value()).collect()),
        ..Default::default()
    };
    let mut r = OutputRecord::new("drg-table", input, &row.verdict);
    r.table_match = Some(row.matches());
    r
}

fn drg_table(a: DrgTableArgs, out: &mut dyn Write) -> Outcome {
    let rows = match &a.family {
        Some(name) => vec![table_row(family_from_parts(name, a.n, a.d, a.delta)?)?],
        None => reproduce_table()?,
    };
    match a.format {
        Format::Csv => write_all(out, &table_csv(&rows))?,
        f => emit(&rows.iter().map(table_record).collect::<Vec<_>>(), f, out)?,
    }
    Ok(exit::OK)
}

fn profile(a: ProfileArgs, out: &mut dyn Write) -> Outcome {
    let spec = hamming_spec(a.n, &a.classes, a.weights.as_deref())?;
    let time: WalkTime = a.time.parse()?;
    let p = if a.fast {
        amplitude_profile_f64(&spec, &time)?
    } else {
        amplitude_profile(&spec, &time, default_precision(spec.n(), a.precision.precision))?
    };
    let mut value = p.to_json();
    value["unitarity_defect"] = p.unitarity_defect().into();
    write_all(out, &format!("{value}\n"))?;
    Ok(exit::OK)
}

fn read(path: &Path) -> Result<String, CliError> {
    let shown = path.display().to_string();
    fs::read_to_string(path).map_err(io_err(&shown))
}

fn spectrum_input(s: &SchemeSpectrum, file: &Path) -> InputEcho {
    InputEcho {
        theta: Some(s.theta().iter().map(|t| t.to_string()).collect()),
        sigma: Some(s.sigma().iter().map(|x| x.value()).collect()),
        file: Some(file.display().to_string()),
        ..Default::default()
    }
}

fn at_time(s: &SchemeSpectrum, time: Option<&String>) -> Result<Option<AtTime>, CliError> {
    let Some(t) = time else { return Ok(None) };
    let time: WalkTime = t.parse()?;
    let revival = check_fr_at_time(s, &time).as_ref().map(RevivalRecord::from);
    Ok(Some(AtTime { time, revival }))
}

fn spectrum(a: SpectrumArgs, out: &mut dyn Write) -> Outcome {
    let s = SchemeSpectrum::from_json(&read(&a.file)?)?;
    let verdict = analyze_spectrum(&s)?;
    let mut record = OutputRecord::new("spectrum", spectrum_input(&s, &a.file), &verdict);
    record.at_time = at_time(&s, a.time.as_ref())?;
    emit(&[record], a.format, out)?;
    Ok(exit::OK)
}

fn scheme(a: SchemeArgs, out: &mut dyn Write) -> Outcome {
    let scheme = ExplicitScheme::from_text(&read(&a.file)?)?;
    let q = match a.q {
        Some(q) => q,
        None => match find_order2_classes(&scheme).as_slice() {
            [q] => *q,
            [] => return Err(revival_core::Error::NotPermutationClass(0).into()),
            many => {
                return Err(CliError::Usage(format!(
                    "several permutation classes {many:?}; choose one with --q"
                )))
            }
        },
    };
    let s = spectrum_of(&scheme, &a.classes, q)?;
    let verdict = analyze_spectrum(&s)?;
    let mut record = OutputRecord::new("scheme", spectrum_input(&s, &a.file), &verdict);
    let mut code = exit::OK;
    if let (true, Some(params)) = (a.verify, &verdict.params_at_min_time) {
        let weights = vec![1.0; a.classes.len()];
        let u = dense_walk(&scheme, &a.classes, &weights, &params.tau, 0)?;
        let partner = (0..scheme.vertex_count())
            .find(|&b| scheme.class_of(0, b) == q)
            .unwrap_or(0);
        let phase = Complex64::from_polar(1.0, params.zeta.radians());
        let f0 = (u[0] - phase * params.alpha()).norm();
        let fq = (u[partner] - phase * params.beta()).norm();
        let interior = u
            .iter()
            .enumerate()
            .filter(|(v, _)| *v != 0 && *v != partner)
            .map(|(_, z)| z.norm())
            .fold(0.0, f64::max);
        let unitarity = (u.iter().map(Complex64::norm_sqr).sum::<f64>() - 1.0).abs();
        let pass = f0 < DEFAULT_TOLERANCE && fq < DEFAULT_TOLERANCE && interior < DEFAULT_TOLERANCE;
        if !pass {
            code = exit::DATA;
        }
        record.oracle = Some(OracleRecord {
            time: params.tau.clone(),
            precision_bits: 53,
            tolerance: DEFAULT_TOLERANCE,
            pass,
            f0_residual: f0,
            fn_residual: fq,
            max_interior: interior,
            unitarity_defect: unitarity,
        });
    }
    emit(&[record], a.format, out)?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn run_args(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(std::iter::once("revival").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let code = run(cli, &mut out).unwrap();
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn analyze_formats() {
        let (code, text) = run_args(&["analyze", "--n", "7", "--classes", "3"]);
        assert_eq!(code, exit::OK);
        assert!(text.starts_with("command: analyze\n"));
        let (_, csv) = run_args(&["analyze", "--n", "7", "--classes", "3", "--format", "csv"]);
        assert_eq!(csv.lines().next(), Some(OutputRecord::CSV_HEADER));
        assert!(csv
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("analyze,7,3,1,2,4,3,BalancedFR,true,1/4 pi,"));
    }

    #[test]
    fn expect_fr_on_negative_verdict() {
        assert_eq!(
            run_args(&["analyze", "--n", "5", "--classes", "2", "--expect-fr"]).0,
            exit::NEGATIVE
        );
    }

    #[test]
    fn weight_count_mismatch() {
        let cli =
            Cli::try_parse_from(["revival", "analyze", "--n", "5", "--classes", "1,2", "--weights", "1"]).unwrap();
        assert!(matches!(run(cli, &mut Vec::new()), Err(CliError::Usage(_))));
    }
}
