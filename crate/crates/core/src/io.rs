//! Input parsing shared by the command line and tests.

use std::path::Path;

use crate::error::{Error, Result};
use crate::poly::QPolynomial;

/// Whitespace-separated magnitudes `|q_0| … |q_{n-1}|`.
pub fn parse_magnitudes(s: &str) -> Result<Vec<f64>> {
    let mags = s
        .split_whitespace()
        .map(|t| {
            t.parse::<f64>().map_err(|_| {
                Error::Parse(format!(
                    "`{t}` is not a number; enter numbers separated by spaces"
                ))
            })
        })
        .collect::<Result<Vec<f64>>>()?;
    if mags.is_empty() {
        return Err(Error::Parse(
            "no magnitudes given; enter numbers separated by spaces".into(),
        ));
    }
    if mags.iter().any(|m| !m.is_finite()) {
        return Err(Error::NonFinite);
    }
    if mags.iter().any(|&m| m < 0.0) {
        return Err(Error::NegativeInput);
    }
    Ok(mags)
}

pub fn parse_polynomial(json: &str) -> Result<QPolynomial> {
    serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_polynomial(path: &Path) -> Result<QPolynomial> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_polynomial(&text)
}
