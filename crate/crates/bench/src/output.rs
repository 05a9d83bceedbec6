//! CSV and JSON files written by the experiments.
//!
//! The main CSV has the header `algorithm,n,metric,k,median,q025,q975`.
//! Termination rows carry the metric `overhead_pct` and an empty `k`;
//! profile rows carry `error_native` or `error_rho` (normalized footrule).
//! A JSON sidecar next to it records the configuration that produced it.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::error::{BenchError, Result};
use crate::profile::ProfileSeries;
use crate::stats::Summary;
use crate::termination::TerminationStats;

pub const HEADER: &str = "algorithm,n,metric,k,median,q025,q975";
pub const LONG_HEADER: &str = "algorithm,n,metric,k,stat,value";

struct Line {
    algorithm: String,
    n: usize,
    metric: String,
    k: Option<usize>,
    summary: Summary,
}

fn termination_lines(stats: &TerminationStats) -> Vec<Line> {
    stats
        .rows
        .iter()
        .map(|r| Line {
            algorithm: r.algorithm.to_string(),
            n: r.n,
            metric: "overhead_pct".into(),
            k: None,
            summary: r.overhead,
        })
        .collect()
}

fn profile_lines(series: &ProfileSeries) -> Vec<Line> {
    series
        .rows
        .iter()
        .map(|r| Line {
            algorithm: r.algorithm.to_string(),
            n: r.n,
            metric: format!("error_{}", r.estimator),
            k: Some(r.k),
            summary: r.error,
        })
        .collect()
}

fn k_field(k: Option<usize>) -> String {
    k.map(|k| k.to_string()).unwrap_or_default()
}

fn wide_csv(lines: &[Line]) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for l in lines {
        let s = l.summary;
        out.push_str(&format!(
            "{},{},{},{},{:.6},{:.6},{:.6}\n",
            l.algorithm,
            l.n,
            l.metric,
            k_field(l.k),
            s.median,
            s.q025,
            s.q975
        ));
    }
    out
}

fn long_csv(lines: &[Line]) -> String {
    let mut out = String::from(LONG_HEADER);
    out.push('\n');
    for l in lines {
        let s = l.summary;
        for (stat, value) in [("median", s.median), ("q025", s.q025), ("q975", s.q975)] {
            out.push_str(&format!("{},{},{},{},{stat},{value:.6}\n", l.algorithm, l.n, l.metric, k_field(l.k)));
        }
    }
    out
}

pub fn termination_csv(stats: &TerminationStats) -> String {
    wide_csv(&termination_lines(stats))
}

pub fn profile_csv(series: &ProfileSeries) -> String {
    wide_csv(&profile_lines(series))
}

pub fn sidecar_path(output: &Path) -> PathBuf {
    if output.extension().is_some_and(|e| e == "json") {
        output.with_extension("config.json")
    } else {
        output.with_extension("json")
    }
}

pub fn long_path(output: &Path) -> PathBuf {
    output.with_extension("long.csv")
}

#[derive(Serialize)]
struct Sidecar<'a> {
    experiment: &'a str,
    version: &'a str,
    config: &'a ExperimentConfig,
}

fn write(path: &Path, contents: &str) -> Result<()> {
    let io = |source| BenchError::Io { path: path.display().to_string(), source };
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let mut f = fs::File::create(path).map_err(io)?;
    f.write_all(contents.as_bytes()).map_err(io)
}

fn save(path: &Path, experiment: &str, cfg: &ExperimentConfig, lines: &[Line]) -> Result<()> {
    write(path, &wide_csv(lines))?;
    let sidecar = Sidecar { experiment, version: env!("CARGO_PKG_VERSION"), config: cfg };
    write(&sidecar_path(path), &(serde_json::to_string_pretty(&sidecar)? + "\n"))?;
    if cfg.long_format {
        write(&long_path(path), &long_csv(lines))?;
    }
    Ok(())
}

pub fn save_termination(path: &Path, cfg: &ExperimentConfig, stats: &TerminationStats) -> Result<()> {
    save(path, "termination", cfg, &termination_lines(stats))
}

pub fn save_profile(path: &Path, cfg: &ExperimentConfig, series: &ProfileSeries) -> Result<()> {
    save(path, "profile", cfg, &profile_lines(series))
}
