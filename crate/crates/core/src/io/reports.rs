//! Plot-ready CSV output of a fleet study, and readers for the same files.
//!
//! Files written to the output directory:
//!
//! - `summary.csv`: `scenario,criterion,mean_fc,fc_ratio_pct,mean_fh,fh_ratio_pct`;
//!   ratios are relative to the service-goal row of the same level and empty
//!   when that row is absent.
//! - `scatter_<scenario>.csv`: `aircraft_id,wing_fdi,fuselage_fdi` at retirement.
//! - `hist_<scenario>_<wing|fuselage>.csv`: `bin_lower,bin_upper,count`.
//! - `lifetime_bars.csv`: `scenario,level,criterion,mean_fc,mean_fh`.

use std::path::{Path, PathBuf};

use crate::error::{FdiError, Result};
use crate::fleet::{FleetSummary, Histogram};

fn write_csv(path: &Path, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<()> {
    let io_err = |e: csv::Error| match e.into_kind() {
        csv::ErrorKind::Io(err) => FdiError::io(path, err),
        other => FdiError::io(path, std::io::Error::other(format!("{other:?}"))),
    };
    let mut w = csv::Writer::from_path(path).map_err(io_err)?;
    w.write_record(header).map_err(io_err)?;
    for row in rows {
        w.write_record(&row).map_err(io_err)?;
    }
    w.flush().map_err(|e| FdiError::io(path, e))
}

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn histogram_rows(h: &Histogram) -> Vec<Vec<String>> {
    let width = h.bin_width();
    h.counts
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let upper = if i + 1 == h.counts.len() {
                h.upper
            } else {
                (i + 1) as f64 * width
            };
            vec![(i as f64 * width).to_string(), upper.to_string(), c.to_string()]
        })
        .collect()
}

/// Writes every report file into `out_dir` (created if missing) and returns their paths.
pub fn emit_reports(summary: &FleetSummary, out_dir: impl AsRef<Path>) -> Result<Vec<PathBuf>> {
    let dir = out_dir.as_ref();
    if summary.scenarios.is_empty() || summary.scenarios.iter().all(|s| s.scatter.is_empty()) {
        return Err(FdiError::validation("outcomes", "nothing to report"));
    }
    std::fs::create_dir_all(dir).map_err(|e| FdiError::io(dir, e))?;
    let mut written = Vec::new();

    let path = dir.join("summary.csv");
    write_csv(
        &path,
        &[
            "scenario",
            "criterion",
            "mean_fc",
            "fc_ratio_pct",
            "mean_fh",
            "fh_ratio_pct",
        ],
        summary.scenarios.iter().map(|s| {
            vec![
                s.key.clone(),
                s.label.clone(),
                s.mean_fc.to_string(),
                opt(s.fc_ratio_pct),
                s.mean_fh.to_string(),
                opt(s.fh_ratio_pct),
            ]
        }),
    )?;
    written.push(path);

    for s in &summary.scenarios {
        let path = dir.join(format!("scatter_{}.csv", s.key));
        write_csv(
            &path,
            &["aircraft_id", "wing_fdi", "fuselage_fdi"],
            s.scatter
                .iter()
                .map(|(id, w, f)| vec![id.clone(), w.to_string(), f.to_string()]),
        )?;
        written.push(path);
        for (axis, h) in [("wing", &s.wing_histogram), ("fuselage", &s.fuselage_histogram)] {
            let path = dir.join(format!("hist_{}_{axis}.csv", s.key));
            write_csv(&path, &["bin_lower", "bin_upper", "count"], histogram_rows(h))?;
            written.push(path);
        }
    }

    let path = dir.join("lifetime_bars.csv");
    write_csv(
        &path,
        &["scenario", "level", "criterion", "mean_fc", "mean_fh"],
        summary.scenarios.iter().map(|s| {
            vec![
                s.key.clone(),
                s.level.as_str().to_string(),
                s.label.clone(),
                s.mean_fc.to_string(),
                s.mean_fh.to_string(),
            ]
        }),
    )?;
    written.push(path);
    Ok(written)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub scenario: String,
    pub criterion: String,
    pub mean_fc: f64,
    pub fc_ratio_pct: Option<f64>,
    pub mean_fh: f64,
    pub fh_ratio_pct: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScatterRow {
    pub aircraft_id: String,
    pub wing_fdi: f64,
    pub fuselage_fdi: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HistogramRow {
    pub bin_lower: f64,
    pub bin_upper: f64,
    pub count: u64,
}

fn read_rows<T>(
    path: &Path,
    header: &[&str],
    mut convert: impl FnMut(&csv::StringRecord) -> Option<T>,
) -> Result<Vec<T>> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| FdiError::io(path, e))?;
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let found = reader.headers().map_err(|e| FdiError::parse(&name, 1, e.to_string()))?;
    if found.iter().ne(header.iter().copied()) {
        return Err(FdiError::parse(
            &name,
            1,
            format!("expected header {}", header.join(",")),
        ));
    }
    let mut out = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| FdiError::parse(&name, 0, e.to_string()))?;
        let line = row.position().map_or(0, |p| p.line() as usize);
        out.push(convert(&row).ok_or_else(|| FdiError::parse(&name, line, "malformed row"))?);
    }
    Ok(out)
}

fn num(s: &str) -> Option<f64> {
    s.parse().ok()
}

fn opt_num(s: &str) -> Option<Option<f64>> {
    if s.is_empty() {
        Some(None)
    } else {
        num(s).map(Some)
    }
}

pub fn read_summary_csv(path: impl AsRef<Path>) -> Result<Vec<SummaryRow>> {
    read_rows(
        path.as_ref(),
        &[
            "scenario",
            "criterion",
            "mean_fc",
            "fc_ratio_pct",
            "mean_fh",
            "fh_ratio_pct",
        ],
        |r| {
            Some(SummaryRow {
                scenario: r.get(0)?.to_string(),
                criterion: r.get(1)?.to_string(),
                mean_fc: num(r.get(2)?)?,
                fc_ratio_pct: opt_num(r.get(3)?)?,
                mean_fh: num(r.get(4)?)?,
                fh_ratio_pct: opt_num(r.get(5)?)?,
            })
        },
    )
}

pub fn read_scatter_csv(path: impl AsRef<Path>) -> Result<Vec<ScatterRow>> {
    read_rows(path.as_ref(), &["aircraft_id", "wing_fdi", "fuselage_fdi"], |r| {
        Some(ScatterRow {
            aircraft_id: r.get(0)?.to_string(),
            wing_fdi: num(r.get(1)?)?,
            fuselage_fdi: num(r.get(2)?)?,
        })
    })
}

pub fn read_histogram_csv(path: impl AsRef<Path>) -> Result<Vec<HistogramRow>> {
    read_rows(path.as_ref(), &["bin_lower", "bin_upper", "count"], |r| {
        Some(HistogramRow {
            bin_lower: num(r.get(0)?)?,
            bin_upper: num(r.get(1)?)?,
            count: r.get(2)?.parse().ok()?,
        })
    })
}
