//! Seeded comparison of every bound against the oracle on random monic
//! polynomials.

use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{all_bounds, names, BoundInput, BoundKind, BoundOptions};
use crate::error::{Error, Result};
use crate::oracle::{root_moduli, VERIFY_TOLERANCE};
use crate::poly::{random_poly, Side};

/// Bound columns in CSV order.
pub const BOUND_COLUMNS: [&str; 8] = [
    names::CAUCHY_UPPER,
    names::OPFER_SUM,
    names::OPFER_MAX,
    names::FUJIWARA,
    names::THEOREM_4_1,
    names::THEOREM_4_3,
    names::CAUCHY_LOWER,
    names::THEOREM_4_2,
];

/// Full CSV header.
pub fn csv_header() -> Vec<&'static str> {
    let mut h = vec!["index", "seed", "side", "degree"];
    h.extend(BOUND_COLUMNS);
    h.extend(["oracle_max", "oracle_min", "winner"]);
    h
}

/// Inclusive degree range, written `a..b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRange {
    pub lo: usize,
    pub hi: usize,
}

impl DegreeRange {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if hi < lo {
            return Err(Error::Parse(format!("empty degree range {lo}..{hi}")));
        }
        Ok(Self { lo, hi })
    }

    pub fn span(&self) -> usize {
        self.hi - self.lo + 1
    }
}

impl std::str::FromStr for DegreeRange {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| Error::Parse(format!("expected `a..b`, got `{s}`")))?;
        let b = b.strip_prefix('=').unwrap_or(b);
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{t}: {e}")))
        };
        DegreeRange::new(parse(a)?, parse(b)?)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub seed: u64,
    pub count: usize,
    pub degrees: DegreeRange,
    /// Coefficient components are drawn from `[-m/2, m/2]`.
    pub max_modulus: f64,
    pub options: BoundOptions,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            count: 100,
            degrees: DegreeRange { lo: 2, hi: 6 },
            max_modulus: 10.0,
            options: BoundOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub index: usize,
    pub seed: u64,
    pub side: Side,
    pub degree: usize,
    /// Values aligned with [`BOUND_COLUMNS`]; `None` where a bound does not
    /// apply.
    pub values: Vec<Option<f64>>,
    pub oracle_max: f64,
    pub oracle_min: f64,
    pub winner: String,
}

impl BenchRow {
    pub fn value(&self, name: &str) -> Option<f64> {
        let k = BOUND_COLUMNS.iter().position(|&c| c == name)?;
        self.values[k]
    }

    /// Guaranteed bounds contradicted by the oracle.
    pub fn violations(&self) -> Vec<&'static str> {
        BOUND_COLUMNS
            .iter()
            .zip(&self.values)
            .filter_map(|(&name, v)| {
                let v = (*v)?;
                let bad = match BoundKind::for_name(name) {
                    BoundKind::Upper => v < self.oracle_max - VERIFY_TOLERANCE,
                    BoundKind::Lower => v > self.oracle_min + VERIFY_TOLERANCE,
                    BoundKind::Reference => false,
                };
                bad.then_some(name)
            })
            .collect()
    }
}

fn bench_one(cfg: &BenchConfig, index: usize) -> Result<BenchRow> {
    let seed = cfg.seed.wrapping_add(index as u64);
    let degree = cfg.degrees.lo + index % cfg.degrees.span();
    let side = if index.is_multiple_of(2) {
        Side::Left
    } else {
        Side::Right
    };
    let f = random_poly(degree, cfg.max_modulus, seed, side)?;
    let report = all_bounds(&BoundInput::Polynomial(f.clone()), &cfg.options)?;
    let spectrum = root_moduli(&f)?;
    Ok(BenchRow {
        index,
        seed,
        side,
        degree,
        values: BOUND_COLUMNS
            .iter()
            .map(|&n| report.get(n).map(|b| b.value))
            .collect(),
        oracle_max: spectrum.max,
        oracle_min: spectrum.min,
        winner: report.sharpest.unwrap_or_default(),
    })
}

/// Instance `i` uses seed `seed + i`, degree `lo + i mod span`, and the left
/// side for even `i`. Rows come back in index order.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    (0..cfg.count)
        .into_par_iter()
        .map(|i| bench_one(cfg, i))
        .collect()
}

/// `x` with 10 significant digits, fixed-point.
pub fn sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = (9 - x.abs().log10().floor() as i32).max(0) as usize;
    format!("{x:.digits$}")
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Parse(e.to_string());
    let mut w = csv::Writer::from_writer(out);
    w.write_record(csv_header()).map_err(io)?;
    for r in rows {
        let mut rec = vec![
            r.index.to_string(),
            r.seed.to_string(),
            r.side.to_string(),
            r.degree.to_string(),
        ];
        rec.extend(r.values.iter().map(|v| v.map(sig10).unwrap_or_default()));
        rec.extend([sig10(r.oracle_max), sig10(r.oracle_min), r.winner.clone()]);
        w.write_record(&rec).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(())
}
