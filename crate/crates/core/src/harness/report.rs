//! Census driver and report serialization.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cache::RegCache;
use super::census::census_graphs;
use super::checks::{verify_graph_with, CensusConfig, CheckReport, CheckStatus};
use crate::error::{Error, Result};

pub const REPORTS_FILE: &str = "reports.jsonl";
pub const SUMMARY_FILE: &str = "summary.csv";
pub const CACHE_FILE: &str = "reg_cache.jsonl";

fn io_error(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::parse(0, format!("{}: {e}", path.display()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusCounts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub graphs: usize,
    pub per_check: BTreeMap<String, StatusCounts>,
    /// `(graph_id, check)` pairs that failed.
    pub failures: Vec<(String, String)>,
    /// Graphs with at least one skipped check.
    pub skipped_graphs: Vec<String>,
}

impl CensusSummary {
    pub fn from_reports<'r>(reports: impl IntoIterator<Item = &'r CheckReport>) -> Self {
        let mut summary = CensusSummary::default();
        for report in reports {
            summary.graphs += 1;
            let mut any_skipped = false;
            for (name, result) in &report.checks {
                let counts = summary.per_check.entry(name.clone()).or_default();
                match result.status {
                    CheckStatus::Pass => counts.pass += 1,
                    CheckStatus::Fail => {
                        counts.fail += 1;
                        summary.failures.push((report.graph_id.clone(), name.clone()));
                    }
                    CheckStatus::Skipped => {
                        counts.skipped += 1;
                        any_skipped = true;
                    }
                }
            }
            if any_skipped {
                summary.skipped_graphs.push(report.graph_id.clone());
            }
        }
        summary
    }

    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.skipped_graphs.is_empty()
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path).map_err(|e| io_error(path, e))?;
        let rows = std::iter::once(["check", "pass", "fail", "skipped"].map(String::from)).chain(
            self.per_check.iter().map(|(name, c)| {
                [name.clone(), c.pass.to_string(), c.fail.to_string(), c.skipped.to_string()]
            }),
        );
        for row in rows {
            w.write_record(&row).map_err(|e| io_error(path, e))?;
        }
        w.flush().map_err(|e| io_error(path, e))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

/// Writes reports as JSON lines, or as one CSV row per (graph, check).
pub fn emit_report(reports: &[CheckReport], format: ReportFormat, path: &Path) -> Result<()> {
    match format {
        ReportFormat::Json => {
            let mut w = BufWriter::new(File::create(path).map_err(|e| io_error(path, e))?);
            for r in reports {
                writeln!(w, "{}", serde_json::to_string(r).expect("serializable")).map_err(|e| io_error(path, e))?;
            }
            w.flush().map_err(|e| io_error(path, e))
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_path(path).map_err(|e| io_error(path, e))?;
            w.write_record(["graph_id", "n", "m", "check", "status", "details"]).map_err(|e| io_error(path, e))?;
            for r in reports {
                for (name, result) in &r.checks {
                    let status = serde_json::to_value(result.status).expect("serializable");
                    w.write_record([
                        r.graph_id.as_str(),
                        &r.n.to_string(),
                        &r.m.to_string(),
                        name,
                        status.as_str().unwrap_or_default(),
                        &result.details,
                    ])
                    .map_err(|e| io_error(path, e))?;
                }
            }
            w.flush().map_err(|e| io_error(path, e))
        }
    }
}

pub fn read_reports(path: &Path) -> Result<Vec<CheckReport>> {
    if !path.exists() {
        return Ok(Vec::new());
    }
    let reader = BufReader::new(File::open(path).map_err(|e| io_error(path, e))?);
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| io_error(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|e| Error::parse(i + 1, format!("report: {e}")))?);
    }
    Ok(out)
}

/// Worker count from `SYMREG_THREADS`, else the available parallelism.
pub fn thread_count() -> usize {
    std::env::var("SYMREG_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

#[derive(Clone, Debug)]
pub struct CensusOutput {
    pub summary: CensusSummary,
    pub reports_path: PathBuf,
    pub summary_path: PathBuf,
}

/// Verifies every census graph, appending one JSON line per graph to
/// `reports.jsonl` in census order and finishing with `summary.csv`.
/// With `resume`, graphs already present in `reports.jsonl` are not redone.
pub fn run_census(cfg: &CensusConfig, resume: bool) -> Result<CensusOutput> {
    cfg.validate()?;
    let dir = &cfg.output;
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    let reports_path = dir.join(REPORTS_FILE);
    let summary_path = dir.join(SUMMARY_FILE);
    let mut reports = if resume { read_reports(&reports_path)? } else { Vec::new() };
    let done: BTreeSet<String> = reports.iter().map(|r| r.graph_id.clone()).collect();
    if !resume {
        File::create(&reports_path).map_err(|e| io_error(&reports_path, e))?;
    }
    let cache = RegCache::open(&dir.join(CACHE_FILE))?;
    let todo: Vec<_> = census_graphs(cfg.max_n, cfg.connected_only)?
        .into_iter()
        .filter(|g| !done.contains(&g.canonical_graph6()))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count())
        .build()
        .map_err(|e| Error::parse(0, format!("thread pool: {e}")))?;
    let mut out = BufWriter::new(
        OpenOptions::new().append(true).open(&reports_path).map_err(|e| io_error(&reports_path, e))?,
    );
    let chunk = 4 * thread_count();
    for batch in todo.chunks(chunk) {
        let results: Vec<Result<CheckReport>> =
            pool.install(|| batch.par_iter().map(|g| verify_graph_with(g, cfg, Some(&cache))).collect());
        for r in results {
            let report = r?;
            writeln!(out, "{}", serde_json::to_string(&report).expect("serializable"))
                .map_err(|e| io_error(&reports_path, e))?;
            reports.push(report);
        }
        out.flush().map_err(|e| io_error(&reports_path, e))?;
    }
    let summary = CensusSummary::from_reports(&reports);
    summary.write_csv(&summary_path)?;
    Ok(CensusOutput { summary, reports_path, summary_path })
}
