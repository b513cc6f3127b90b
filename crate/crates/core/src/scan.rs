//! Exhaustive Farey scans: every reduced `r/m` with `min_den <= m <= max_den`,
//! emitted in `(m, r)` order whatever the worker count.

use std::io::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fraction::ReducedFraction;
use crate::heights::{brute_force_h, cf_height};
use crate::spectrum::SpectrumPoint;

pub const HEADER: [&str; 5] = ["m", "r", "h_num", "h_den", "h_float"];

/// Denominators handed to the pool per round; rows are written after each round.
const BLOCK: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScanMethod {
    BruteForce,
    CfFormula,
    /// Compute both and refuse to emit on disagreement.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutputFormat {
    Csv,
    Tsv,
}

impl OutputFormat {
    fn delimiter(self) -> u8 {
        match self {
            OutputFormat::Csv => b',',
            OutputFormat::Tsv => b'\t',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub min_den: u64,
    pub max_den: u64,
    pub method: ScanMethod,
    pub format: OutputFormat,
    pub workers: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            min_den: 2,
            max_den: 200,
            method: ScanMethod::Both,
            format: OutputFormat::Csv,
            workers: 1,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        if self.min_den < 2 {
            return Err(Error::InvalidConfig(format!(
                "min_den must be at least 2, got {}",
                self.min_den
            )));
        }
        if self.min_den > self.max_den {
            return Err(Error::InvalidConfig(format!(
                "min_den {} exceeds max_den {}",
                self.min_den, self.max_den
            )));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig("worker count must be positive".into()));
        }
        Ok(())
    }
}

/// Heights of every reduced fraction with denominator `m`, ordered by `r`.
pub fn points_for_denominator(m: u64, method: ScanMethod) -> Result<Vec<SpectrumPoint>> {
    ReducedFraction::with_denominator(m)
        .map(|f| {
            let h = match method {
                ScanMethod::BruteForce => brute_force_h(f).value,
                ScanMethod::CfFormula => cf_height(f).value,
                ScanMethod::Both => {
                    let (brute, cf) = (brute_force_h(f).value, cf_height(f).value);
                    if brute != cf {
                        return Err(Error::Mismatch {
                            m,
                            r: f.num(),
                            brute: Box::new(brute),
                            cf: Box::new(cf),
                        });
                    }
                    cf
                }
            };
            Ok(SpectrumPoint::new(f, h))
        })
        .collect()
}

/// Runs the scan block by block, handing each ordered block to `sink`.
pub fn scan_with<F>(cfg: &ScanConfig, mut sink: F) -> Result<()>
where
    F: FnMut(Vec<SpectrumPoint>) -> Result<()>,
{
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let mut lo = cfg.min_den;
    while lo <= cfg.max_den {
        let hi = cfg.max_den.min(lo.saturating_add(BLOCK - 1));
        let rows: Vec<Vec<SpectrumPoint>> = pool.install(|| {
            (lo..=hi)
                .into_par_iter()
                .map(|m| points_for_denominator(m, cfg.method))
                .collect::<Result<_>>()
        })?;
        sink(rows.into_iter().flatten().collect())?;
        if hi == u64::MAX {
            break;
        }
        lo = hi + 1;
    }
    Ok(())
}

pub fn scan_points(cfg: &ScanConfig) -> Result<Vec<SpectrumPoint>> {
    let mut all = Vec::new();
    scan_with(cfg, |block| {
        all.extend(block);
        Ok(())
    })?;
    Ok(all)
}

/// Writes the header and one row per point; returns the row count.
pub fn write_scan<W: Write>(cfg: &ScanConfig, out: W) -> Result<u64> {
    let mut writer = csv::WriterBuilder::new()
        .delimiter(cfg.format.delimiter())
        .from_writer(out);
    writer.write_record(HEADER)?;
    let mut rows = 0u64;
    scan_with(cfg, |block| {
        for p in &block {
            write_point(&mut writer, p)?;
        }
        rows += block.len() as u64;
        Ok(())
    })?;
    writer.flush()?;
    Ok(rows)
}

pub fn write_points<W: Write>(
    points: &[SpectrumPoint],
    format: OutputFormat,
    out: W,
) -> Result<()> {
    let mut writer = csv::WriterBuilder::new()
        .delimiter(format.delimiter())
        .from_writer(out);
    writer.write_record(HEADER)?;
    for p in points {
        write_point(&mut writer, p)?;
    }
    writer.flush()?;
    Ok(())
}

fn write_point<W: Write>(writer: &mut csv::Writer<W>, p: &SpectrumPoint) -> Result<()> {
    writer.write_record([
        p.m.to_string(),
        p.r.to_string(),
        p.h.numer().to_string(),
        p.h.denom().to_string(),
        p.h_float.clone(),
    ])?;
    Ok(())
}
