//! Rendering of scan results and atomic file output.

use std::io::Write;
use std::path::Path;

use choimap_core::detection::{DetectionReport, ScanPoint, ScanResult};

use crate::error::CliError;
use crate::json::ReportJson;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Gnuplot,
}

/// Formats like C's `%.12g`.
pub fn fmt_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{v:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-4..12).contains(&exp) {
        let fixed = format!("{:.*}", (11 - exp) as usize, v);
        trim_zeros(&fixed).to_owned()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `v` rounded to 12 significant digits.
pub fn round_sig(v: f64) -> f64 {
    if !v.is_finite() {
        return v;
    }
    fmt_sig(v).parse().expect("fmt_sig produces a valid float")
}

fn opt(v: Option<f64>) -> String {
    v.map(fmt_sig).unwrap_or_default()
}

fn rows_csv(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn report_tail(r: &DetectionReport) -> [String; 4] {
    [
        fmt_sig(r.min_eig_mapped),
        opt(r.lambda_analytic),
        r.ppt.to_string(),
        r.classification.as_str().to_owned(),
    ]
}

pub fn reports_json(reports: &[DetectionReport]) -> Result<String, CliError> {
    let rows: Vec<ReportJson> = reports.iter().map(ReportJson::from).collect();
    Ok(serde_json::to_string_pretty(&rows)? + "\n")
}

/// Renders a scan in the requested format.
///
/// CSV columns are `beta,gamma,min_eig,lambda,ppt,class` (`b,…` for σ_b
/// scans). Gnuplot output is whitespace-separated `beta gamma min_eig` with a
/// blank line between γ blocks.
pub fn render_scan(result: &ScanResult, format: Format) -> Result<String, CliError> {
    let rho = matches!(result.family, choimap_core::detection::ScanFamily::RhoBetaGamma { .. });
    match format {
        Format::Json => {
            let reports: Vec<DetectionReport> = result.reports().cloned().collect();
            reports_json(&reports)
        }
        Format::Csv => {
            if result.is_empty() {
                return Err(CliError::Usage("scan grid is empty; nothing to write as CSV".into()));
            }
            let header: &[&str] = if rho {
                &["beta", "gamma", "min_eig", "lambda", "ppt", "class"]
            } else {
                &["b", "min_eig", "lambda", "ppt", "class"]
            };
            rows_csv(
                header,
                result.points.iter().map(|(point, r)| {
                    let mut row = coords(point);
                    row.extend(report_tail(r));
                    row
                }),
            )
        }
        Format::Gnuplot => {
            let mut out = String::new();
            let mut last_gamma = None;
            for (point, r) in &result.points {
                match *point {
                    ScanPoint::RhoBetaGamma { beta, gamma } => {
                        if last_gamma.is_some_and(|g| g != gamma) {
                            out.push('\n');
                        }
                        last_gamma = Some(gamma);
                        out += &format!("{} {} {}\n", fmt_sig(beta), fmt_sig(gamma), fmt_sig(r.min_eig_mapped));
                    }
                    ScanPoint::SigmaB { b } => {
                        out += &format!("{} {}\n", fmt_sig(b), fmt_sig(r.min_eig_mapped));
                    }
                }
            }
            Ok(out)
        }
    }
}

fn coords(point: &ScanPoint) -> Vec<String> {
    match *point {
        ScanPoint::RhoBetaGamma { beta, gamma } => vec![fmt_sig(beta), fmt_sig(gamma)],
        ScanPoint::SigmaB { b } => vec![fmt_sig(b)],
    }
}

/// CSV for orbit sweeps: `b,state,min_eig,lambda,ppt,class`.
pub fn orbit_csv(b: f64, reports: &[DetectionReport]) -> Result<String, CliError> {
    rows_csv(
        &["b", "state", "min_eig", "lambda", "ppt", "class"],
        reports.iter().map(|r| {
            let mut row = vec![fmt_sig(b), r.state_label.clone()];
            row.extend(report_tail(r));
            row
        }),
    )
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory followed by a rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| CliError::Io(e.error))?;
    Ok(())
}

/// Writes to `path` when given, otherwise to standard output.
pub fn emit(contents: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(contents.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use choimap_core::detection::{scan_grid, GridRange, ScanFamily};
    use choimap_core::{MapParams, Tolerance};

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_sig(-1.0 / 68.0), "-0.0147058823529");
        assert_eq!(fmt_sig(0.5), "0.5");
        assert_eq!(fmt_sig(10.0), "10");
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(-0.0), "0");
        assert_eq!(fmt_sig(1.5e-5), "1.5e-05");
        assert_eq!(fmt_sig(-2.0e-17), "-2e-17");
        assert_eq!(fmt_sig(123456789012345.0), "1.23456789012e+14");
        assert_eq!(fmt_sig(0.1 + 0.2), "0.3");
        assert_eq!(fmt_sig(9.9999999999999), "10");
        assert_eq!(round_sig(-1.0 / 68.0), -0.0147058823529);
    }

    fn rho_scan() -> ScanResult {
        let family = ScanFamily::RhoBetaGamma {
            beta: "0:1:1".parse().unwrap(),
            gamma: "3:4:1".parse().unwrap(),
        };
        scan_grid(family, &MapParams::CHOI_X, &Tolerance::default()).unwrap()
    }

    #[test]
    fn csv_layout() {
        let family = ScanFamily::RhoBetaGamma {
            beta: "0:1:0.5".parse().unwrap(),
            gamma: GridRange::point(4.0).unwrap(),
        };
        let result = scan_grid(family, &MapParams::CHOI_X, &Tolerance::default()).unwrap();
        let csv = render_scan(&result, Format::Csv).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[0], "beta,gamma,min_eig,lambda,ppt,class");
        assert_eq!(lines[1], "0,4,-0.0441176470588,-0.0441176470588,false,NPT_ENTANGLED");
    }

    #[test]
    fn sigma_csv_header() {
        let family = ScanFamily::SigmaB {
            b: GridRange::point(0.5).unwrap(),
        };
        let result = scan_grid(family, &MapParams::CHOI_X, &Tolerance::default()).unwrap();
        let csv = render_scan(&result, Format::Csv).unwrap();
        assert!(csv.starts_with("b,min_eig,lambda,ppt,class\n0.5,"));
        assert!(csv.lines().nth(1).unwrap().contains(",,true,NOT_DETECTED"));
    }

    #[test]
    fn gnuplot_blocks() {
        let text = render_scan(&rho_scan(), Format::Gnuplot).unwrap();
        let blocks: Vec<&str> = text.split("\n\n").collect();
        assert_eq!(blocks.len(), 2);
        assert!(blocks[0].starts_with("0 3 "));
        assert!(blocks[1].starts_with("0 4 "));
        assert_eq!(text.lines().filter(|l| !l.is_empty()).count(), 4);
    }

    #[test]
    fn empty_csv_is_an_error() {
        let family = ScanFamily::SigmaB {
            b: "0.9:0.1:0.1".parse().unwrap(),
        };
        let result = scan_grid(family, &MapParams::CHOI_X, &Tolerance::default()).unwrap();
        assert!(render_scan(&result, Format::Csv).is_err());
        assert_eq!(render_scan(&result, Format::Json).unwrap(), "[]\n");
    }

    #[test]
    fn atomic_write_replaces_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        write_atomic(&path, "first").unwrap();
        write_atomic(&path, "second").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "second");
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
        assert!(write_atomic(&dir.path().join("missing/x.csv"), "x").is_err());
    }
}
