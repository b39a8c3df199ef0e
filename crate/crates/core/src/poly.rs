//! One-sided quaternionic polynomials.
//!
//! Coefficients are stored ascending: `coeffs[i]` pairs with `z^i`. A left
//! polynomial evaluates as `Σ q_i z^i`, a right polynomial as `Σ z^i q_i`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(Error::Parse(format!("unknown side `{other}`"))),
        }
    }
}

#[derive(Deserialize)]
struct RawPolynomial {
    side: Side,
    coeffs: Vec<Quaternion>,
}

/// A one-sided polynomial with a nonzero leading coefficient.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPolynomial")]
pub struct QPolynomial {
    side: Side,
    coeffs: Vec<Quaternion>,
}

impl TryFrom<RawPolynomial> for QPolynomial {
    type Error = Error;
    fn try_from(raw: RawPolynomial) -> Result<Self> {
        QPolynomial::new(raw.side, raw.coeffs)
    }
}

impl QPolynomial {
    /// Builds a polynomial from ascending coefficients, dropping zero
    /// coefficients above the leading term.
    pub fn new(side: Side, mut coeffs: Vec<Quaternion>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyInput);
        }
        if coeffs.iter().any(|q| !q.is_finite()) {
            return Err(Error::NonFinite);
        }
        while coeffs.last().is_some_and(|q| q.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self { side, coeffs })
    }

    /// Monic polynomial `z^n + q_{n-1} z^{n-1} + … + q_0` from its lower
    /// coefficients `q_0 … q_{n-1}`.
    pub fn monic(side: Side, lower: &[Quaternion]) -> Result<Self> {
        let mut coeffs = lower.to_vec();
        coeffs.push(Quaternion::ONE);
        Self::new(side, coeffs)
    }

    /// Polynomial with real coefficients, ascending.
    pub fn from_real(side: Side, coeffs: &[f64]) -> Result<Self> {
        Self::new(side, coeffs.iter().map(|&a| Quaternion::real(a)).collect())
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn coeffs(&self) -> &[Quaternion] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Quaternion {
        self.coeffs[self.degree()]
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Quaternion::ONE
    }

    /// Moduli `|q_0| … |q_n|`.
    pub fn moduli(&self) -> Vec<f64> {
        self.coeffs.iter().map(|q| q.modulus()).collect()
    }

    /// Moduli of the non-leading coefficients `|q_0| … |q_{n-1}|`, the input
    /// shape consumed by the magnitude-only bounds.
    pub fn lower_moduli(&self) -> Vec<f64> {
        self.coeffs[..self.degree()]
            .iter()
            .map(|q| q.modulus())
            .collect()
    }

    pub fn has_real_coefficients(&self) -> bool {
        self.coeffs.iter().all(|q| q.is_real())
    }

    /// Same side, every coefficient conjugated.
    pub fn conjugated(&self) -> Self {
        Self {
            side: self.side,
            coeffs: self.coeffs.iter().map(|q| q.conj()).collect(),
        }
    }

    /// Conjugates every coefficient and flips the side. `z` is a zero of
    /// `self` exactly when `conj(z)` is a zero of the result, so every zero
    /// modulus is preserved.
    pub fn mirrored(&self) -> Self {
        let side = match self.side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
        Self {
            side,
            coeffs: self.coeffs.iter().map(|q| q.conj()).collect(),
        }
    }

    pub fn eval(&self, z: Quaternion) -> Quaternion {
        let mut acc = self.leading();
        for &q in self.coeffs[..self.degree()].iter().rev() {
            acc = match self.side {
                Side::Left => acc * z + q,
                Side::Right => z * acc + q,
            };
        }
        acc
    }

    /// Divides by the leading coefficient on the polynomial's own side, which
    /// leaves the zero set unchanged. Returns the monic polynomial and whether
    /// anything changed.
    pub fn normalized(&self) -> (Self, bool) {
        if self.is_monic() {
            return (self.clone(), false);
        }
        // Leading coefficient is nonzero by construction.
        let inv = self
            .leading()
            .inverse()
            .expect("nonzero leading coefficient");
        let coeffs: Vec<Quaternion> = self
            .coeffs
            .iter()
            .map(|&q| match self.side {
                Side::Left => inv * q,
                Side::Right => q * inv,
            })
            .collect();
        let n = coeffs.len() - 1;
        let mut coeffs = coeffs;
        coeffs[n] = Quaternion::ONE;
        (
            Self {
                side: self.side,
                coeffs,
            },
            true,
        )
    }

    /// Convolution (Cauchy) product: the coefficient of `z^{i+j}` accumulates
    /// `q_i t_j`, treating the variable as central.
    pub fn conv(&self, other: &Self) -> Result<Self> {
        if self.side != other.side {
            return Err(Error::SideMismatch);
        }
        let mut out = vec![Quaternion::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &q) in self.coeffs.iter().enumerate() {
            for (j, &t) in other.coeffs.iter().enumerate() {
                out[i + j] += q * t;
            }
        }
        Self::new(self.side, out)
    }

    /// Monic reversal polynomial whose zeros are the reciprocals of the zeros
    /// of `self`. Left: `z^n + q_0⁻¹q_1 z^{n-1} + … + q_0⁻¹`; right:
    /// `z^n + z^{n-1} q_1 q_0⁻¹ + … + q_0⁻¹`.
    pub fn reversal(&self) -> Result<Self> {
        if !self.is_monic() {
            return Err(Error::NotMonic);
        }
        let q0 = self.coeffs[0];
        let inv = q0.inverse().map_err(|_| Error::ZeroConstantTerm)?;
        let n = self.degree();
        let mut coeffs: Vec<Quaternion> = (0..=n)
            .map(|k| {
                let q = self.coeffs[n - k];
                match self.side {
                    Side::Left => inv * q,
                    Side::Right => q * inv,
                }
            })
            .collect();
        coeffs[n] = Quaternion::ONE;
        Self::new(self.side, coeffs)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, q) in self.coeffs.iter().enumerate().rev() {
            if q.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let power = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{i}"),
            };
            match (self.side, i) {
                (_, 0) => write!(f, "({q})")?,
                (Side::Left, _) => write!(f, "({q}){power}")?,
                (Side::Right, _) => write!(f, "{power}({q})")?,
            }
        }
        Ok(())
    }
}

/// The auxiliary polynomial `z^{n+1} - z^{n-1} v_n - … - z v_2 - v_1` built
/// from a right polynomial `z^n + z^{n-1} q_n + … + z q_2 + q_1`, with
/// `v_j = q_j q_n - q_{j-1}` and `q_0 = 0`.
///
/// Its zeros are those of the source polynomial together with `q_n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuxPolynomial {
    v: Vec<Quaternion>,
    origin: Vec<Quaternion>,
}

impl AuxPolynomial {
    /// `q` is the shifted list `q_1 … q_n` (one-based, as in the right
    /// polynomial above).
    pub fn from_shifted(q: &[Quaternion]) -> Result<Self> {
        if q.is_empty() {
            return Err(Error::EmptyInput);
        }
        if q.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let n = q.len();
        let qn = q[n - 1];
        let v = (0..n)
            .map(|j| {
                let prev = if j == 0 { Quaternion::ZERO } else { q[j - 1] };
                q[j] * qn - prev
            })
            .collect();
        Ok(Self {
            v,
            origin: q.to_vec(),
        })
    }

    /// Adapter from a monic right polynomial `z^n + … + q̂_0` in standard
    /// form: the shifted list is `q_j = q̂_{j-1}`.
    pub fn from_right_monic(f: &QPolynomial) -> Result<Self> {
        if f.side() != Side::Right {
            return Err(Error::SideMismatch);
        }
        if !f.is_monic() {
            return Err(Error::NotMonic);
        }
        if f.degree() == 0 {
            return Err(Error::DegreeZero);
        }
        Self::from_shifted(&f.coeffs()[..f.degree()])
    }

    /// `v_1 … v_n`.
    pub fn v(&self) -> &[Quaternion] {
        &self.v
    }

    /// The shifted source coefficients `q_1 … q_n`.
    pub fn origin(&self) -> &[Quaternion] {
        &self.origin
    }

    /// `n`; the auxiliary polynomial itself has degree `n + 1`.
    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn magnitudes(&self) -> Vec<f64> {
        self.v.iter().map(|q| q.modulus()).collect()
    }

    /// The source polynomial `z^n + z^{n-1} q_n + … + q_1`.
    pub fn source_polynomial(&self) -> QPolynomial {
        QPolynomial::monic(Side::Right, &self.origin).expect("monic polynomial is nonzero")
    }

    /// Right polynomial `z^{n+1} - Σ z^{j-1} v_j`.
    pub fn to_polynomial(&self) -> QPolynomial {
        let n = self.n();
        let mut coeffs = vec![Quaternion::ZERO; n + 2];
        for (j, &v) in self.v.iter().enumerate() {
            coeffs[j] = -v;
        }
        coeffs[n + 1] = Quaternion::ONE;
        QPolynomial::new(Side::Right, coeffs).expect("monic polynomial is nonzero")
    }
}

/// Upper bounds on `|v_1| … |v_n|` when only the coefficient magnitudes of
/// a monic polynomial are known: `|v_j| ≤ |q_j||q_n| + |q_{j-1}|` in the
/// shifted indexing. `mags` holds `|q̂_0| … |q̂_{n-1}|`.
pub fn aux_magnitude_bounds(mags: &[f64]) -> Vec<f64> {
    let n = mags.len();
    if n == 0 {
        return Vec::new();
    }
    let qn = mags[n - 1];
    (0..n)
        .map(|j| {
            let prev = if j == 0 { 0.0 } else { mags[j - 1] };
            mags[j] * qn + prev
        })
        .collect()
}

/// Random monic polynomial of the given degree. Every component of the
/// lower coefficients is uniform on `[-max_modulus/2, max_modulus/2]`, so
/// each coefficient modulus is at most `max_modulus`.
pub fn random_poly(degree: usize, max_modulus: f64, seed: u64, side: Side) -> Result<QPolynomial> {
    if degree == 0 {
        return Err(Error::InvalidDegree(degree));
    }
    if !(max_modulus.is_finite() && max_modulus > 0.0) {
        return Err(Error::Parse(format!(
            "max_modulus must be positive, got {max_modulus}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = max_modulus / 2.0;
    let lower: Vec<Quaternion> = (0..degree)
        .map(|_| {
            Quaternion::new(
                rng.random_range(-h..=h),
                rng.random_range(-h..=h),
                rng.random_range(-h..=h),
                rng.random_range(-h..=h),
            )
        })
        .collect();
    QPolynomial::monic(side, &lower)
}
