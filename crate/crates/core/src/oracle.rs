//! Ground truth for zero moduli.
//!
//! `f * f̄` (conjugated coefficients, same side) has real coefficients, and
//! the moduli of its complex roots are exactly the moduli of the zeros of
//! `f`. Those roots come from the eigenvalues of a balanced real companion
//! matrix.

use nalgebra::linalg::balancing::balance_parlett_reinsch;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::bounds::{BoundKind, BoundReport};
use crate::error::{Error, Result};
use crate::poly::QPolynomial;

/// Slack allowed when checking a bound against the spectrum.
pub const VERIFY_TOLERANCE: f64 = 1e-7;
/// Largest tolerated non-real part of a companion coefficient, relative to
/// the coefficient scale.
pub const RESIDUE_TOLERANCE: f64 = 1e-9;
/// Coefficient dynamic range above which the spectrum is flagged.
pub const CONFIDENCE_RANGE: f64 = 1e8;

/// Real coefficients of `f * f̄`, ascending, degree `2n`.
pub fn companion_polynomial(f: &QPolynomial) -> Result<Vec<f64>> {
    let n = f.degree();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let q = f.coeffs();
    let scale = q.iter().map(|c| c.norm_sqr()).sum::<f64>().max(1.0);
    let mut out = vec![0.0; 2 * n + 1];
    for (k, slot) in out.iter_mut().enumerate() {
        let lo = k.saturating_sub(n);
        let hi = k.min(n);
        let c: crate::Quaternion = (lo..=hi).map(|i| q[i] * q[k - i].conj()).sum();
        let residue = c.vector().modulus();
        if residue > RESIDUE_TOLERANCE * scale {
            return Err(Error::ImaginaryResidue { index: k, residue });
        }
        *slot = c.a;
    }
    Ok(out)
}

/// Sorted zero moduli, each listed twice (once per conjugate root of
/// `f * f̄`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModulusSpectrum {
    pub moduli: Vec<f64>,
    pub min: f64,
    pub max: f64,
    /// Coefficient dynamic range exceeded [`CONFIDENCE_RANGE`].
    #[serde(default)]
    pub low_confidence: bool,
}

/// Moduli of the complex roots of a real polynomial given ascending, with
/// a nonzero leading coefficient.
pub fn real_root_moduli(c: &[f64]) -> Result<Vec<f64>> {
    let lead = *c.last().ok_or(Error::EmptyInput)?;
    if lead == 0.0 {
        return Err(Error::ZeroPolynomial);
    }
    let zeros = c.iter().take_while(|&&x| x == 0.0).count();
    let c = &c[zeros..];
    let m = c.len() - 1;
    let mut moduli = vec![0.0; zeros];
    if m == 0 {
        return Ok(moduli);
    }
    // Companion matrix of the monic polynomial: subdiagonal ones, last
    // column -c_i / c_m.
    let mut a = DMatrix::<f64>::zeros(m, m);
    for i in 1..m {
        a[(i, i - 1)] = 1.0;
    }
    for i in 0..m {
        a[(i, m - 1)] = -c[i] / lead;
    }
    balance_parlett_reinsch(&mut a);
    moduli.extend(crate::eigen::real_eigenvalues(a)?.iter().map(|z| z.norm()));
    Ok(moduli)
}

pub fn root_moduli(f: &QPolynomial) -> Result<ModulusSpectrum> {
    let c = companion_polynomial(f)?;
    let mut moduli = real_root_moduli(&c)?;
    moduli.sort_by(f64::total_cmp);
    let nonzero = f.moduli().into_iter().filter(|&m| m > 0.0);
    let (lo, hi) = nonzero.fold((f64::INFINITY, 0.0f64), |(lo, hi), m| {
        (lo.min(m), hi.max(m))
    });
    Ok(ModulusSpectrum {
        min: moduli[0],
        max: moduli[moduli.len() - 1],
        low_confidence: hi / lo > CONFIDENCE_RANGE,
        moduli,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub kind: BoundKind,
    pub value: f64,
    /// Positive when the bound holds with room to spare: `value - max` for
    /// upper bounds, `min - value` for lower bounds.
    pub margin: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationResult {
    pub spectrum: ModulusSpectrum,
    /// Guaranteed bounds; a failure here is a soundness violation.
    pub checks: Vec<BoundCheck>,
    /// Reference estimates, checked the same way but never counted.
    pub reference: Vec<BoundCheck>,
}

impl VerificationResult {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Checks every bound in the report against the spectrum.
pub fn verify_spectrum(spectrum: ModulusSpectrum, report: &BoundReport) -> VerificationResult {
    let mut checks = Vec::new();
    let mut reference = Vec::new();
    for b in &report.bounds {
        let margin = match b.kind {
            BoundKind::Upper | BoundKind::Reference => b.value - spectrum.max,
            BoundKind::Lower => spectrum.min - b.value,
        };
        let check = BoundCheck {
            name: b.name.clone(),
            kind: b.kind,
            value: b.value,
            margin,
            pass: margin >= -VERIFY_TOLERANCE,
        };
        match b.kind {
            BoundKind::Reference => reference.push(check),
            _ => checks.push(check),
        }
    }
    VerificationResult {
        spectrum,
        checks,
        reference,
    }
}

pub fn verify(f: &QPolynomial, report: &BoundReport) -> Result<VerificationResult> {
    Ok(verify_spectrum(root_moduli(f)?, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{all_bounds, AnnulusBound, BoundInput, BoundOptions, BoundValue};
    use crate::poly::Side;
    use crate::quaternion::Quaternion;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn companion_examples() {
        let f = QPolynomial::from_real(Side::Left, &[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(
            companion_polynomial(&f).unwrap(),
            vec![1.0, 0.0, 2.0, 0.0, 1.0]
        );

        let q = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        let f = QPolynomial::monic(Side::Right, &[-q]).unwrap();
        assert_eq!(companion_polynomial(&f).unwrap(), vec![4.0, -2.0, 1.0]);

        let f = QPolynomial::monic(Side::Left, &[-Quaternion::I]).unwrap();
        assert_eq!(companion_polynomial(&f).unwrap(), vec![1.0, 0.0, 1.0]);
        assert!(close(&root_moduli(&f).unwrap().moduli, &[1.0, 1.0], 1e-12));

        let c = QPolynomial::new(Side::Left, vec![Quaternion::ONE]).unwrap();
        assert_eq!(companion_polynomial(&c), Err(Error::DegreeZero));
    }

    #[test]
    fn spherical_zero() {
        let f = QPolynomial::from_real(Side::Left, &[1.0, 0.0, 1.0]).unwrap();
        let s = root_moduli(&f).unwrap();
        // Quadruple root ±i of (z²+1)²: error grows like eps^(1/2).
        assert!(close(&s.moduli, &[1.0; 4], 1e-6), "{s:?}");
        assert!(!s.low_confidence);
    }

    #[test]
    fn zeros_at_origin() {
        // z² + 2iz = z(z + 2i).
        let f = QPolynomial::monic(Side::Left, &[Quaternion::ZERO, 2.0 * Quaternion::I]).unwrap();
        let s = root_moduli(&f).unwrap();
        assert!(close(&s.moduli, &[0.0, 0.0, 2.0, 2.0], 1e-12), "{s:?}");
        assert_eq!(f.eval(-2.0 * Quaternion::I), Quaternion::ZERO);
    }

    #[test]
    fn heavy_constant_max_within_displaced_disk() {
        let f = QPolynomial::monic(
            Side::Left,
            &[8.0 * Quaternion::K, Quaternion::J, Quaternion::ZERO],
        )
        .unwrap();
        let s = root_moduli(&f).unwrap();
        assert_eq!(s.moduli.len(), 6);
        assert!(s.max <= 3.0 + 1e-7);
    }

    #[test]
    fn known_factor_appears() {
        // (z - a) * (z - b) on the right has zero a.
        let a = Quaternion::new(0.3, -1.2, 0.7, 2.0);
        let b = Quaternion::new(-1.0, 0.5, 0.25, -0.5);
        let f = QPolynomial::monic(Side::Right, &[-a])
            .unwrap()
            .conv(&QPolynomial::monic(Side::Right, &[-b]).unwrap())
            .unwrap();
        assert!(f.eval(a).modulus() < 1e-12);
        let s = root_moduli(&f).unwrap();
        assert!(s.moduli.iter().any(|m| (m - a.modulus()).abs() < 1e-7));
    }

    #[test]
    fn low_confidence_flag() {
        let f = QPolynomial::from_real(Side::Left, &[1e-5, 0.0, 1e4, 1.0]).unwrap();
        assert!(root_moduli(&f).unwrap().low_confidence);
    }

    #[test]
    fn verify_examples() {
        let f = QPolynomial::monic(
            Side::Left,
            &[8.0 * Quaternion::K, Quaternion::J, Quaternion::ZERO],
        )
        .unwrap();
        let report =
            all_bounds(&BoundInput::Polynomial(f.clone()), &BoundOptions::default()).unwrap();
        let v = verify(&f, &report).unwrap();
        assert!(v.all_pass(), "{v:?}");
        assert_eq!(
            v.checks
                .iter()
                .filter(|c| c.kind == BoundKind::Upper)
                .count(),
            4
        );

        let f = QPolynomial::from_real(Side::Left, &[1.0, 0.0, 1.0]).unwrap();
        let fake = BoundReport {
            bounds: vec![BoundValue {
                name: "fake".into(),
                kind: BoundKind::Upper,
                value: 0.1,
                region: None,
                params: None,
            }],
            annulus: AnnulusBound::new(0.0, 0.1).unwrap(),
            sharpest: None,
            degree: 2,
            side: None,
            normalized: false,
            skipped: vec![],
        };
        let v = verify(&f, &fake).unwrap();
        assert!(!v.all_pass());
        assert!((v.checks[0].margin + 0.9).abs() < 1e-6);
    }

    #[test]
    fn json_shape() {
        let f = QPolynomial::from_real(Side::Left, &[-1.0, 0.0, 1.0]).unwrap();
        let v = serde_json::to_value(root_moduli(&f).unwrap()).unwrap();
        assert!(v["moduli"].is_array());
        assert!(v["min"].is_number() && v["max"].is_number());
    }
}
