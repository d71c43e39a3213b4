//! Height-ordered Property A scan with an ordered merge of parallel results.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use dynatomic::arith::enumerate_rationals_by_height;
use dynatomic::dynatomic::MapSpec;
use dynatomic::property_a::{check_aggregate_with, Aggregate, Interpretation, PropertyAReport};
use dynatomic::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::output::{ScanRecord, ScanRow};
use crate::CliError;

/// Parameters handed to the workers per batch; the writer drains each batch in order.
const BATCH: usize = 256;

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub d: u32,
    pub periods: Vec<u32>,
    pub max_height: u64,
    pub interpretation: Interpretation,
    pub timings: bool,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct PeriodSummary {
    pub d: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub records: usize,
    pub holds: usize,
    pub fails: usize,
    pub vacuous: usize,
    pub failure_proportion: f64,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct ScanSummary {
    pub summary: Vec<PeriodSummary>,
}

/// Runs the scan, handing each record to `sink` in (height, numerator,
/// denominator, N) order regardless of the thread count.
pub fn run_scan(
    config: &ScanConfig,
    pool: &rayon::ThreadPool,
    mut sink: impl FnMut(&PropertyAReport, Option<u64>) -> Result<(), CliError>,
) -> Result<ScanSummary, CliError> {
    let params: Vec<BigRational> = enumerate_rationals_by_height(config.max_height).collect();
    let tasks: Vec<(&BigRational, u32)> = params
        .iter()
        .flat_map(|c| config.periods.iter().map(move |&n| (c, n)))
        .collect();
    let mut tally: BTreeMap<u32, PeriodSummary> = config
        .periods
        .iter()
        .map(|&n| {
            (
                n,
                PeriodSummary {
                    d: config.d,
                    n,
                    ..Default::default()
                },
            )
        })
        .collect();
    for batch in tasks.chunks(BATCH) {
        let results: Vec<Result<(PropertyAReport, u64), CliError>> = pool.install(|| {
            batch
                .par_iter()
                .map(|(c, n)| {
                    let start = Instant::now();
                    let spec = MapSpec::new(config.d, (*c).clone())?;
                    let report = check_aggregate_with(&spec, *n, config.interpretation)?;
                    Ok((report, start.elapsed().as_millis() as u64))
                })
                .collect()
        });
        for result in results {
            let (report, ms) = result?;
            let entry = tally.get_mut(&report.n).expect("scanned period");
            entry.records += 1;
            match report.aggregate {
                Aggregate::Holds => entry.holds += 1,
                Aggregate::Fails => entry.fails += 1,
                Aggregate::Vacuous => entry.vacuous += 1,
            }
            sink(&report, config.timings.then_some(ms))?;
        }
    }
    let summary = config
        .periods
        .iter()
        .map(|n| {
            let mut s = tally[n].clone();
            if s.records > 0 {
                s.failure_proportion = s.fails as f64 / s.records as f64;
            }
            s
        })
        .collect();
    Ok(ScanSummary { summary })
}

/// Writes JSON lines: one [`ScanRecord`] per (c, N), then the summary.
pub fn write_jsonl(
    config: &ScanConfig,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
) -> Result<ScanSummary, CliError> {
    let summary = run_scan(config, pool, |report, ms| {
        serde_json::to_writer(&mut *out, &ScanRecord::new(report, ms))?;
        out.write_all(b"\n")?;
        Ok(())
    })?;
    serde_json::to_writer(&mut *out, &summary)?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(summary)
}

/// Writes CSV rows; the summary is returned for the caller to report.
pub fn write_csv(
    config: &ScanConfig,
    pool: &rayon::ThreadPool,
    out: &mut dyn Write,
) -> Result<ScanSummary, CliError> {
    let mut writer = csv::Writer::from_writer(out);
    let summary = run_scan(config, pool, |report, ms| {
        let record = ScanRecord::new(report, ms);
        writer.serialize(ScanRow::new(&record))?;
        Ok(())
    })?;
    writer.flush()?;
    Ok(summary)
}
