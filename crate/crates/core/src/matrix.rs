//! Dense quaternionic matrices: companion layouts, diagonal similarity,
//! deleted sums, Gershgorin regions, norms and the complex adjoint.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{AuxPolynomial, QPolynomial, Side};
use crate::quaternion::Quaternion;

#[derive(Deserialize)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Quaternion>,
}

/// Row-major `rows × cols` matrix over the quaternions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Quaternion>,
}

impl TryFrom<RawMatrix> for QMatrix {
    type Error = Error;
    fn try_from(raw: RawMatrix) -> Result<Self> {
        QMatrix::new(raw.rows, raw.cols, raw.entries)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompanionKind {
    /// `C_{f_l}`: ones on the superdiagonal, last row `-q_0 … -q_{n-1}`.
    Left,
    /// `C_{f_r}`: ones on the subdiagonal, last column `-q_0 … -q_{n-1}`.
    Right,
    /// Left layout of the monic reversal polynomial.
    LeftReversal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GershgorinVariant {
    Row,
    Column,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormKind {
    One,
    Inf,
    Two,
    Frobenius,
}

/// Closed ball `{z : |z - center| ≤ radius}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Ball {
    pub center: Quaternion,
    pub radius: f64,
}

impl Ball {
    pub fn new(center: Quaternion, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(Error::NonFinite);
        }
        if radius < 0.0 {
            return Err(Error::NegativeInput);
        }
        Ok(Self { center, radius })
    }

    /// `|z - center| - radius`; nonpositive exactly when `z` is inside.
    pub fn excess(&self, z: Quaternion) -> f64 {
        (z - self.center).modulus() - self.radius
    }

    pub fn contains(&self, z: Quaternion, tol: f64) -> bool {
        self.excess(z) <= tol
    }

    /// Largest modulus attained on the ball.
    pub fn max_modulus(&self) -> f64 {
        self.center.modulus() + self.radius
    }
}

/// Union of balls, with the largest modulus any point of the union can have.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InclusionRegion {
    pub balls: Vec<Ball>,
    pub max_modulus: f64,
}

impl InclusionRegion {
    pub fn from_balls(balls: Vec<Ball>) -> Self {
        let max_modulus = balls.iter().map(Ball::max_modulus).fold(0.0, f64::max);
        Self { balls, max_modulus }
    }

    /// Smallest `excess` over the balls.
    pub fn excess(&self, z: Quaternion) -> f64 {
        self.balls
            .iter()
            .map(|b| b.excess(z))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn contains(&self, z: Quaternion, tol: f64) -> bool {
        self.excess(z) <= tol
    }
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Quaternion>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "empty shape {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|q| !q.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            entries: vec![Quaternion::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagonal(&vec![Quaternion::ONE; n])
    }

    pub fn from_diagonal(diag: &[Quaternion]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Quaternion] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Quaternion {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, q: Quaternion) {
        self.entries[i * self.cols + j] = q;
    }

    fn square_dim(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// `B^H`.
    pub fn conj_transpose(&self) -> Self {
        let mut t = self.transpose();
        t.entries.iter_mut().for_each(|q| *q = q.conj());
        t
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s = (0..self.cols)
                    .map(|k| self.get(i, k) * other.get(k, j))
                    .sum();
                out.set(i, j, s);
            }
        }
        Ok(out)
    }

    /// Copy of the `nr × nc` block whose top-left entry is `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Result<Self> {
        if nr == 0 || nc == 0 || r0 + nr > self.rows || c0 + nc > self.cols {
            return Err(Error::DimensionMismatch(format!(
                "block {nr}x{nc} at ({r0},{c0}) of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut out = Self::zeros(nr, nc);
        for i in 0..nr {
            for j in 0..nc {
                out.set(i, j, self.get(r0 + i, c0 + j));
            }
        }
        Ok(out)
    }

    /// Companion matrix of a monic polynomial.
    pub fn companion(f: &QPolynomial, kind: CompanionKind) -> Result<Self> {
        let expected_side = match kind {
            CompanionKind::Left | CompanionKind::LeftReversal => Side::Left,
            CompanionKind::Right => Side::Right,
        };
        if f.side() != expected_side {
            return Err(Error::SideMismatch);
        }
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        if f.degree() == 0 {
            return Err(Error::DegreeZero);
        }
        let reversed;
        let f = if kind == CompanionKind::LeftReversal {
            reversed = f.reversal()?;
            &reversed
        } else {
            f
        };
        let n = f.degree();
        let q = f.coeffs();
        let mut m = Self::zeros(n, n);
        match kind {
            CompanionKind::Left | CompanionKind::LeftReversal => {
                for i in 0..n - 1 {
                    m.set(i, i + 1, Quaternion::ONE);
                }
                for (j, &c) in q[..n].iter().enumerate() {
                    m.set(n - 1, j, -c);
                }
            }
            CompanionKind::Right => {
                for i in 0..n - 1 {
                    m.set(i + 1, i, Quaternion::ONE);
                }
                for (i, &c) in q[..n].iter().enumerate() {
                    m.set(i, n - 1, -c);
                }
            }
        }
        Ok(m)
    }

    /// `(n+1) × (n+1)` companion of the auxiliary polynomial: ones on the
    /// subdiagonal and last column `(v_1, …, v_n, 0)`.
    pub fn aux_companion(aux: &AuxPolynomial) -> Self {
        let n = aux.n();
        let mut m = Self::zeros(n + 1, n + 1);
        for i in 0..n {
            m.set(i + 1, i, Quaternion::ONE);
        }
        for (i, &v) in aux.v().iter().enumerate() {
            m.set(i, n, v);
        }
        m
    }

    /// `W⁻¹ B W` for `W = diag(w)`: entry `(i, j)` becomes `(w_j / w_i) b_ij`.
    pub fn scale_similarity(&self, w: &[f64]) -> Result<Self> {
        let n = self.square_dim()?;
        if w.len() != n {
            return Err(Error::WeightLengthMismatch {
                expected: n,
                got: w.len(),
            });
        }
        if w.iter().any(|&x| !(x > 0.0 && x.is_finite())) {
            return Err(Error::NonpositiveWeight);
        }
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    out.set(i, j, self.get(i, j).scale(w[j] / w[i]));
                }
            }
        }
        Ok(out)
    }

    /// Deleted row sums `R_i = Σ_{j≠i} |b_ij|`.
    pub fn deleted_row_sums(&self) -> Result<Vec<f64>> {
        let n = self.square_dim()?;
        Ok((0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i)
                    .map(|j| self.get(i, j).modulus())
                    .sum()
            })
            .collect())
    }

    /// Deleted column sums `C_i = Σ_{j≠i} |b_ji|`.
    pub fn deleted_col_sums(&self) -> Result<Vec<f64>> {
        let n = self.square_dim()?;
        Ok((0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i)
                    .map(|j| self.get(j, i).modulus())
                    .sum()
            })
            .collect())
    }

    pub fn absolute_row_sums(&self) -> Result<Vec<f64>> {
        let mut r = self.deleted_row_sums()?;
        r.iter_mut()
            .enumerate()
            .for_each(|(i, x)| *x += self.get(i, i).modulus());
        Ok(r)
    }

    pub fn absolute_col_sums(&self) -> Result<Vec<f64>> {
        let mut c = self.deleted_col_sums()?;
        c.iter_mut()
            .enumerate()
            .for_each(|(i, x)| *x += self.get(i, i).modulus());
        Ok(c)
    }

    /// Union of Gershgorin balls, which contains every left eigenvalue.
    pub fn gershgorin(&self, variant: GershgorinVariant) -> Result<InclusionRegion> {
        let radii = match variant {
            GershgorinVariant::Row => self.deleted_row_sums()?,
            GershgorinVariant::Column => self.deleted_col_sums()?,
        };
        let balls = radii
            .into_iter()
            .enumerate()
            .map(|(i, r)| Ball {
                center: self.get(i, i),
                radius: r,
            })
            .collect();
        Ok(InclusionRegion::from_balls(balls))
    }

    /// `2m × 2n` complex matrix replacing each entry `a + bi + cj + dk` by
    /// `[[a + bi, c + di], [-c + di, a - bi]]`. The map is a multiplicative
    /// homomorphism and an isometry for the spectral norm.
    pub fn complex_adjoint(&self) -> DMatrix<Complex64> {
        let mut out = DMatrix::zeros(2 * self.rows, 2 * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let q = self.get(i, j);
                out[(2 * i, 2 * j)] = Complex64::new(q.a, q.b);
                out[(2 * i, 2 * j + 1)] = Complex64::new(q.c, q.d);
                out[(2 * i + 1, 2 * j)] = Complex64::new(-q.c, q.d);
                out[(2 * i + 1, 2 * j + 1)] = Complex64::new(q.a, -q.b);
            }
        }
        out
    }

    pub fn norm(&self, kind: NormKind) -> f64 {
        match kind {
            NormKind::One => (0..self.cols)
                .map(|j| {
                    (0..self.rows)
                        .map(|i| self.get(i, j).modulus())
                        .sum::<f64>()
                })
                .fold(0.0, f64::max),
            NormKind::Inf => (0..self.rows)
                .map(|i| {
                    (0..self.cols)
                        .map(|j| self.get(i, j).modulus())
                        .sum::<f64>()
                })
                .fold(0.0, f64::max),
            NormKind::Frobenius => self
                .entries
                .iter()
                .map(|q| q.norm_sqr())
                .sum::<f64>()
                .sqrt(),
            NormKind::Two => {
                if self.entries.iter().all(|q| q.is_zero()) {
                    return 0.0;
                }
                self.complex_adjoint()
                    .singular_values()
                    .iter()
                    .copied()
                    .fold(0.0, f64::max)
            }
        }
    }

    /// Largest modulus of a right eigenvalue, taken from the eigenvalues of
    /// the complex adjoint.
    pub fn right_spectral_radius(&self) -> Result<f64> {
        self.square_dim()?;
        let adj = self.complex_adjoint();
        let eig = crate::eigen::complex_eigenvalues(adj)?;
        Ok(eig.iter().map(|z| z.norm()).fold(0.0, f64::max))
    }
}

/// Spectral radius of the nonnegative matrix `[[a, b], [c, d]]`:
/// `(a + d + sqrt((a - d)² + 4bc)) / 2`.
pub fn block_bound(a: f64, b: f64, c: f64, d: f64) -> Result<f64> {
    let vals = [a, b, c, d];
    if vals.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    if vals.iter().any(|&x| x < 0.0) {
        return Err(Error::NegativeInput);
    }
    Ok(0.5 * (a + d + ((a - d) * (a - d) + 4.0 * b * c).sqrt()))
}
