//! Bounded scalar minimization over a positive parameter, carried out in
//! log-space.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Points in the coarse scan that locates the basin for golden-section.
pub const GRID_POINTS: usize = 64;
/// Absolute tolerance on `ln x`.
pub const LOG_TOLERANCE: f64 = 1e-8;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Closed search interval `[lo, hi]` with `0 < lo < hi < ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi) {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    /// Log-spaced points from `lo` to `hi` inclusive.
    pub fn log_grid(&self, count: usize) -> Vec<f64> {
        let (a, b) = (self.lo.ln(), self.hi.ln());
        match count {
            0 => Vec::new(),
            1 => vec![self.lo],
            _ => (0..count)
                .map(|k| {
                    if k == 0 {
                        self.lo
                    } else if k == count - 1 {
                        self.hi
                    } else {
                        (a + (b - a) * k as f64 / (count - 1) as f64).exp()
                    }
                })
                .collect(),
        }
    }
}

impl std::str::FromStr for Bracket {
    type Err = Error;
    /// `"lo,hi"`.
    fn from_str(s: &str) -> Result<Self> {
        let (lo, hi) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `lo,hi`, got `{s}`")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("{t}: {e}")))
        };
        Bracket::new(parse(lo)?, parse(hi)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
}

/// Minimizes `f` on the bracket. A log-spaced scan of [`GRID_POINTS`] points
/// picks the best cell, golden-section refines inside the two neighbouring
/// cells down to [`LOG_TOLERANCE`], and the better of the refined point and
/// the best scanned point is returned. Deterministic.
pub fn minimize_log<F: Fn(f64) -> f64>(f: F, bracket: Bracket) -> Minimum {
    let grid = bracket.log_grid(GRID_POINTS);
    let values: Vec<f64> = grid.iter().map(|&x| f(x)).collect();
    let (k, _) =
        values.iter().enumerate().fold(
            (0, f64::INFINITY),
            |(bk, bv), (k, &v)| if v < bv { (k, v) } else { (bk, bv) },
        );
    let best_grid = Minimum {
        x: grid[k],
        value: values[k],
    };

    let mut a = grid[k.saturating_sub(1)].ln();
    let mut b = grid[(k + 1).min(grid.len() - 1)].ln();
    let g = |t: f64| f(t.exp());
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = g(c);
    let mut fd = g(d);
    while (b - a).abs() > LOG_TOLERANCE {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = g(d);
        }
    }
    let t = 0.5 * (a + b);
    let refined = Minimum {
        x: t.exp().clamp(bracket.lo, bracket.hi),
        value: g(t),
    };
    if refined.value <= best_grid.value {
        refined
    } else {
        best_grid
    }
}

/// Maximizes `f` on the bracket; see [`minimize_log`].
pub fn maximize_log<F: Fn(f64) -> f64>(f: F, bracket: Bracket) -> Minimum {
    let m = minimize_log(|x| -f(x), bracket);
    Minimum {
        x: m.x,
        value: -m.value,
    }
}
