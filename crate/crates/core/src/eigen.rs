//! Dense eigenvalues through nalgebra's Schur decomposition.
//!
//! The Francis iteration has no exceptional shift and stalls on matrices
//! with symmetric spectra such as the companion matrix of `(z² + 1)²`. On
//! failure the matrix is conjugated by fixed Householder reflectors, which
//! leaves the spectrum unchanged, and the iteration is retried.

use nalgebra::{ComplexField, DMatrix, DVector, Schur};
use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_ITER: usize = 10_000;
const RETRIES: usize = 3;

/// `I - 2vvᵀ` for a fixed unit vector that depends only on `n` and `seed`.
fn reflector(n: usize, seed: usize) -> DMatrix<f64> {
    let v = DVector::from_fn(n, |i, _| 1.0 + ((i + 1) * (seed + 2)) as f64 * 0.37 % 1.9);
    let v = &v / v.norm();
    DMatrix::identity(n, n) - 2.0 * &v * v.transpose()
}

fn with_retries<T, F>(a: DMatrix<T>, extract: F) -> Result<Vec<Complex64>>
where
    T: ComplexField<RealField = f64>,
    F: Fn(&Schur<T, nalgebra::Dyn>) -> Option<Vec<Complex64>>,
{
    let n = a.nrows();
    let mut m = a;
    for attempt in 0..=RETRIES {
        if let Some(eig) =
            Schur::try_new(m.clone(), f64::EPSILON, MAX_ITER).and_then(|s| extract(&s))
        {
            return Ok(eig);
        }
        let h = reflector(n, attempt).map(T::from_real);
        m = &h * m * &h;
    }
    Err(Error::NoConvergence)
}

pub(crate) fn real_eigenvalues(a: DMatrix<f64>) -> Result<Vec<Complex64>> {
    with_retries(a, |s| {
        Some(s.complex_eigenvalues().iter().copied().collect())
    })
}

pub(crate) fn complex_eigenvalues(a: DMatrix<Complex64>) -> Result<Vec<Complex64>> {
    with_retries(a, |s| s.eigenvalues().map(|e| e.iter().copied().collect()))
}
