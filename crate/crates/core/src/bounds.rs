//! Modulus bounds and inclusion regions for the zeros of monic one-sided
//! polynomials.
//!
//! Magnitude-only bounds take `mags = [|q_0|, …, |q_{n-1}|]` of a monic
//! polynomial of degree `n = mags.len()`; the leading `|q_n| = 1` is implied.
//! The same values bound both left and right polynomials, since conjugating
//! every coefficient and flipping the side conjugates the zero set.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{block_bound, Ball};
use crate::optimize::{maximize_log, minimize_log, Bracket};
use crate::poly::{aux_magnitude_bounds, AuxPolynomial, QPolynomial, Side};

pub mod names {
    pub const CAUCHY_UPPER: &str = "cauchy_upper";
    pub const CAUCHY_LOWER: &str = "cauchy_lower";
    pub const OPFER_SUM: &str = "opfer_sum";
    pub const OPFER_MAX: &str = "opfer_max";
    pub const FUJIWARA: &str = "fujiwara";
    pub const THEOREM_4_1: &str = "theorem_4_1";
    pub const THEOREM_4_2: &str = "theorem_4_2";
    pub const THEOREM_4_3: &str = "theorem_4_3";
}

/// Values closer than this are treated as ties when picking a winner.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// What a bound value claims about the zero moduli.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// Every zero has modulus at most the value.
    Upper,
    /// Every zero has modulus at least the value.
    Lower,
    /// An upper-style estimate that is not guaranteed (`opfer_max`).
    Reference,
}

impl BoundKind {
    /// Kind implied by a bound name, used when a report omits it.
    pub fn for_name(name: &str) -> Self {
        match name {
            names::CAUCHY_LOWER | names::THEOREM_4_2 => BoundKind::Lower,
            names::OPFER_MAX => BoundKind::Reference,
            n if n.contains("lower") => BoundKind::Lower,
            _ => BoundKind::Upper,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpferVariant {
    /// `max(1, Σ|q_j|)`.
    Sum,
    /// `max(1, |q_0|, …, |q_{n-1}|)`.
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem3Variant {
    /// Spectral radius of the 2×2 block-norm matrix.
    #[default]
    ProofForm,
    /// `(A + γ)/2 + sqrt((A - γ)² + 4cS)`.
    AsPrinted,
}

/// Where the `|v_j|` fed to the block bound came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VSource {
    /// Built from the full quaternion coefficients.
    Exact,
    /// `|v_j| ≤ |q_j||q_n| + |q_{j-1}|` from magnitudes only.
    TriangleBound,
    /// Supplied directly by the caller.
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum BoundParams {
    Opfer {
        variant: OpferVariant,
    },
    Weight {
        w: f64,
        /// True when the plain Cauchy lower bound beat every weight tried.
        from_cauchy: bool,
    },
    Weights {
        variant: Theorem3Variant,
        weights: Vec<f64>,
        ratio: Option<f64>,
        gamma: f64,
        a: f64,
        c: f64,
        s: f64,
        v_source: Option<VSource>,
    },
}

#[derive(Deserialize)]
struct RawBoundValue {
    name: String,
    kind: Option<BoundKind>,
    value: f64,
    #[serde(default)]
    region: Option<Ball>,
    #[serde(default)]
    params: Option<BoundParams>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(from = "RawBoundValue")]
pub struct BoundValue {
    pub name: String,
    pub kind: BoundKind,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub region: Option<Ball>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<BoundParams>,
}

impl From<RawBoundValue> for BoundValue {
    fn from(raw: RawBoundValue) -> Self {
        let kind = raw.kind.unwrap_or_else(|| BoundKind::for_name(&raw.name));
        Self {
            name: raw.name,
            kind,
            value: raw.value,
            region: raw.region,
            params: raw.params,
        }
    }
}

impl BoundValue {
    fn new(name: &str, kind: BoundKind, value: f64) -> Self {
        Self {
            name: name.to_string(),
            kind,
            value,
            region: None,
            params: None,
        }
    }

    fn with_params(mut self, params: BoundParams) -> Self {
        self.params = Some(params);
        self
    }
}

fn serialize_upper<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else {
        s.serialize_none()
    }
}

fn deserialize_upper<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
}

/// `lower ≤ |z| ≤ upper` for every zero. `upper` is `+∞` (JSON `null`) when
/// no upper bound is available.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnnulusBound {
    pub lower: f64,
    #[serde(
        serialize_with = "serialize_upper",
        deserialize_with = "deserialize_upper"
    )]
    pub upper: f64,
}

impl AnnulusBound {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if lower.is_nan() || upper.is_nan() {
            return Err(Error::NonFinite);
        }
        if lower < 0.0 || upper < lower {
            return Err(Error::NegativeInput);
        }
        Ok(Self { lower, upper })
    }
}

/// Positive weights `w_1 … w_{n+1}` for the block bound on the auxiliary
/// companion matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct WeightVector {
    weights: Vec<f64>,
}

impl TryFrom<Vec<f64>> for WeightVector {
    type Error = Error;
    fn try_from(weights: Vec<f64>) -> Result<Self> {
        Self::new(weights)
    }
}

impl From<WeightVector> for Vec<f64> {
    fn from(w: WeightVector) -> Self {
        w.weights
    }
}

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyInput);
        }
        if weights.iter().any(|&w| !(w.is_finite() && w > 0.0)) {
            return Err(Error::NonpositiveWeight);
        }
        Ok(Self { weights })
    }

    /// `w_i = r^{n+1-i}`, so every consecutive ratio equals `r` and
    /// `w_{n+1} = 1`.
    pub fn geometric(n: usize, r: f64) -> Result<Self> {
        Self::new((0..=n).map(|k| r.powi((n - k) as i32)).collect())
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// `γ = max(w_1/w_2, …, w_{n-2}/w_{n-1})` with `n + 1 = len`; zero when
    /// the range is empty.
    pub fn gamma(&self) -> f64 {
        let n = self.weights.len().saturating_sub(1);
        (0..n.saturating_sub(2))
            .map(|i| self.weights[i] / self.weights[i + 1])
            .fold(0.0, f64::max)
    }
}

fn check_mags(mags: &[f64]) -> Result<()> {
    if mags.is_empty() {
        return Err(Error::EmptyInput);
    }
    if mags.iter().any(|m| !m.is_finite()) {
        return Err(Error::NonFinite);
    }
    if mags.iter().any(|&m| m < 0.0) {
        return Err(Error::NegativeInput);
    }
    Ok(())
}

fn max_of(values: &[f64]) -> f64 {
    values.iter().copied().fold(0.0, f64::max)
}

/// `x^{1/k}`, exact for perfect squares and cubes.
fn nth_root(x: f64, k: usize) -> f64 {
    match k {
        0 => panic!("zeroth root"),
        1 => x,
        3 => x.cbrt(),
        k if k % 2 == 0 => nth_root(x.sqrt(), k / 2),
        k => x.powf(1.0 / k as f64),
    }
}

/// `1 + max |q_i|`.
pub fn cauchy_upper(mags: &[f64]) -> Result<BoundValue> {
    check_mags(mags)?;
    Ok(BoundValue::new(
        names::CAUCHY_UPPER,
        BoundKind::Upper,
        1.0 + max_of(mags),
    ))
}

/// `|q_0| / (|q_0| + max_{1≤i≤n} |q_i|)` with `|q_n| = 1`; zero when `q_0 = 0`.
pub fn cauchy_lower(mags: &[f64]) -> Result<BoundValue> {
    check_mags(mags)?;
    let q0 = mags[0];
    let value = if q0 == 0.0 {
        0.0
    } else {
        let m = max_of(&mags[1..]).max(1.0);
        q0 / (q0 + m)
    };
    Ok(BoundValue::new(
        names::CAUCHY_LOWER,
        BoundKind::Lower,
        value,
    ))
}

/// Opfer's radius. Only the `Sum` variant is a guaranteed bound; `Max` is
/// reported with [`BoundKind::Reference`].
pub fn opfer(mags: &[f64], variant: OpferVariant) -> Result<BoundValue> {
    check_mags(mags)?;
    let (name, kind, value) = match variant {
        OpferVariant::Sum => (
            names::OPFER_SUM,
            BoundKind::Upper,
            mags.iter().sum::<f64>().max(1.0),
        ),
        OpferVariant::Max => (
            names::OPFER_MAX,
            BoundKind::Reference,
            max_of(mags).max(1.0),
        ),
    };
    Ok(BoundValue::new(name, kind, value).with_params(BoundParams::Opfer { variant }))
}

/// `2 max(|q_{n-1}|, |q_{n-2}|^{1/2}, …, |q_1|^{1/(n-1)}, |q_0/2|^{1/n})`.
pub fn fujiwara(mags: &[f64]) -> Result<BoundValue> {
    check_mags(mags)?;
    let n = mags.len();
    let m = mags
        .iter()
        .enumerate()
        .map(|(k, &q)| {
            if k == 0 {
                nth_root(q / 2.0, n)
            } else {
                nth_root(q, n - k)
            }
        })
        .fold(0.0, f64::max);
    Ok(BoundValue::new(names::FUJIWARA, BoundKind::Upper, 2.0 * m))
}

fn theorem1_radius(mags: &[f64]) -> f64 {
    let n = mags.len();
    0.5 * mags[n - 1] + (2..=n).map(|i| nth_root(mags[n - i], i)).sum::<f64>()
}

/// Displaced disk `|z + q_{n-1}/2| ≤ |q_{n-1}/2| + Σ_{i=2}^{n} |q_{n-i}|^{1/i}`.
/// The value is the largest modulus on the disk.
pub fn theorem1(f: &QPolynomial) -> Result<BoundValue> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let n = f.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { needed: 2, got: n });
    }
    let center = -(f.coeffs()[n - 1] * 0.5);
    let radius = theorem1_radius(&f.lower_moduli());
    let ball = Ball::new(center, radius)?;
    let mut b = BoundValue::new(names::THEOREM_4_1, BoundKind::Upper, ball.max_modulus());
    b.region = Some(ball);
    Ok(b)
}

/// [`theorem1`] from magnitudes only: `|q_{n-1}| + Σ_{i=2}^{n} |q_{n-i}|^{1/i}`.
pub fn theorem1_magnitudes(mags: &[f64]) -> Result<BoundValue> {
    check_mags(mags)?;
    let n = mags.len();
    if n < 2 {
        return Err(Error::DegreeTooSmall { needed: 2, got: n });
    }
    let value = 0.5 * mags[n - 1] + theorem1_radius(mags);
    Ok(BoundValue::new(names::THEOREM_4_1, BoundKind::Upper, value))
}

fn theorem2_value(mags: &[f64], w: f64) -> f64 {
    let q0 = mags[0];
    if q0 == 0.0 {
        return 0.0;
    }
    let n = mags.len();
    let m = (1..=n)
        .map(|i| {
            let q = if i == n { 1.0 } else { mags[i] };
            q * w.powi(i as i32)
        })
        .fold(0.0, f64::max);
    q0 * w / (q0 + m)
}

/// Lower bound `|q_0| w / (|q_0| + M)` with `M = max_{1≤i≤n} |q_i| w^i`.
pub fn theorem2(mags: &[f64], w: f64) -> Result<BoundValue> {
    check_mags(mags)?;
    if !(w.is_finite() && w > 0.0) {
        return Err(Error::NonpositiveW);
    }
    Ok(BoundValue::new(
        names::THEOREM_4_2,
        BoundKind::Lower,
        theorem2_value(mags, w),
    )
    .with_params(BoundParams::Weight {
        w,
        from_cauchy: false,
    }))
}

/// [`theorem2`] maximized over `w` in the bracket, then combined with the
/// Cauchy lower bound by taking the larger value.
pub fn theorem2_opt(mags: &[f64], bracket: Bracket) -> Result<BoundValue> {
    check_mags(mags)?;
    if mags[0] == 0.0 {
        return Ok(
            BoundValue::new(names::THEOREM_4_2, BoundKind::Lower, 0.0).with_params(
                BoundParams::Weight {
                    w: 1.0,
                    from_cauchy: false,
                },
            ),
        );
    }
    let best = maximize_log(|w| theorem2_value(mags, w), bracket);
    let cauchy = cauchy_lower(mags)?.value;
    let from_cauchy = cauchy > best.value;
    Ok(
        BoundValue::new(names::THEOREM_4_2, BoundKind::Lower, best.value.max(cauchy)).with_params(
            BoundParams::Weight {
                w: best.x,
                from_cauchy,
            },
        ),
    )
}

/// The four scalars of the block bound: `γ = ‖C11‖₂`, `S = ‖C12‖₂`,
/// `c = ‖C21‖₂`, `A = ‖C22‖₂`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem3Parts {
    pub gamma: f64,
    pub s: f64,
    pub c: f64,
    pub a: f64,
}

impl Theorem3Parts {
    pub fn new(v_mags: &[f64], weights: &WeightVector) -> Result<Self> {
        check_mags(v_mags)?;
        let n = v_mags.len();
        if n < 4 {
            return Err(Error::DegreeTooSmall { needed: 4, got: n });
        }
        if weights.len() != n + 1 {
            return Err(Error::WeightLengthMismatch {
                expected: n + 1,
                got: weights.len(),
            });
        }
        let w = weights.as_slice();
        let (w_prev, w_n, w_last) = (w[n - 2], w[n - 1], w[n]);
        let a = (w_n / w_last).max(w_last / w_n * v_mags[n - 1]);
        let c = w_prev / w_n;
        let s = (0..n - 1)
            .map(|j| {
                let t = v_mags[j] * (w_last / w[j]);
                t * t
            })
            .sum::<f64>()
            .sqrt();
        Ok(Self {
            gamma: weights.gamma(),
            s,
            c,
            a,
        })
    }

    pub fn value(&self, variant: Theorem3Variant) -> f64 {
        let Self { gamma, s, c, a } = *self;
        match variant {
            Theorem3Variant::ProofForm => {
                block_bound(gamma, s, c, a).expect("block norms are nonnegative")
            }
            Theorem3Variant::AsPrinted => {
                0.5 * (a + gamma) + ((a - gamma) * (a - gamma) + 4.0 * c * s).sqrt()
            }
        }
    }
}

/// Upper bound on the zeros of the auxiliary polynomial with coefficient
/// magnitudes `|v_1| … |v_n|` (`n ≥ 4`) for explicit weights.
pub fn theorem3(
    v_mags: &[f64],
    weights: &WeightVector,
    variant: Theorem3Variant,
) -> Result<BoundValue> {
    let parts = Theorem3Parts::new(v_mags, weights)?;
    Ok(theorem3_value(&parts, weights, None, variant))
}

fn theorem3_value(
    parts: &Theorem3Parts,
    weights: &WeightVector,
    ratio: Option<f64>,
    variant: Theorem3Variant,
) -> BoundValue {
    BoundValue::new(names::THEOREM_4_3, BoundKind::Upper, parts.value(variant)).with_params(
        BoundParams::Weights {
            variant,
            weights: weights.as_slice().to_vec(),
            ratio,
            gamma: parts.gamma,
            a: parts.a,
            c: parts.c,
            s: parts.s,
            v_source: None,
        },
    )
}

/// [`theorem3`] minimized over the geometric family `w_i = r^{n+1-i}`,
/// `r` in the bracket. An explicit weight vector, when given, is used as is.
pub fn theorem3_opt(
    v_mags: &[f64],
    variant: Theorem3Variant,
    bracket: Bracket,
    weights: Option<&WeightVector>,
) -> Result<BoundValue> {
    if let Some(w) = weights {
        return theorem3(v_mags, w, variant);
    }
    let n = v_mags.len();
    // Validates degree and magnitudes before searching.
    Theorem3Parts::new(v_mags, &WeightVector::geometric(n, 1.0)?)?;
    let objective = |r: f64| {
        WeightVector::geometric(n, r)
            .and_then(|w| Theorem3Parts::new(v_mags, &w))
            .map_or(f64::INFINITY, |p| p.value(variant))
    };
    let best = minimize_log(objective, bracket);
    let w = WeightVector::geometric(n, best.x)?;
    let parts = Theorem3Parts::new(v_mags, &w)?;
    Ok(theorem3_value(&parts, &w, Some(best.x), variant))
}

/// What `all_bounds` and the selector consume.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundInput {
    Polynomial(QPolynomial),
    /// `|q_0| … |q_{n-1}|` of a monic polynomial.
    Magnitudes(Vec<f64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpferChoice {
    Sum,
    Max,
    #[default]
    Both,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundOptions {
    pub opfer: OpferChoice,
    pub theorem3_variant: Theorem3Variant,
    pub w_bracket: Bracket,
    pub r_bracket: Bracket,
    /// Explicit `|v_1| … |v_n|` for the auxiliary-polynomial bound.
    pub v_list: Option<Vec<f64>>,
    /// Explicit weights for the auxiliary-polynomial bound.
    pub weights: Option<WeightVector>,
}

impl Default for BoundOptions {
    fn default() -> Self {
        Self {
            opfer: OpferChoice::Both,
            theorem3_variant: Theorem3Variant::ProofForm,
            w_bracket: Bracket { lo: 1e-3, hi: 1e3 },
            r_bracket: Bracket { lo: 1e-2, hi: 1e2 },
            v_list: None,
            weights: None,
        }
    }
}

/// A bound that could not be computed for this input.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Skipped {
    pub name: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub bounds: Vec<BoundValue>,
    pub annulus: AnnulusBound,
    #[serde(default)]
    pub sharpest: Option<String>,
    #[serde(default)]
    pub degree: usize,
    #[serde(default)]
    pub side: Option<Side>,
    /// True when the input was divided by its leading coefficient first.
    #[serde(default)]
    pub normalized: bool,
    #[serde(default)]
    pub skipped: Vec<Skipped>,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&BoundValue> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn uppers(&self) -> impl Iterator<Item = &BoundValue> {
        self.bounds.iter().filter(|b| b.kind == BoundKind::Upper)
    }

    pub fn lowers(&self) -> impl Iterator<Item = &BoundValue> {
        self.bounds.iter().filter(|b| b.kind == BoundKind::Lower)
    }
}

/// Smallest guaranteed upper bound; ties within [`TIE_TOLERANCE`] go to the
/// lexicographically smallest name.
pub fn sharpest_upper<'a, I: IntoIterator<Item = &'a BoundValue>>(
    bounds: I,
) -> Option<&'a BoundValue> {
    pick(bounds, BoundKind::Upper, |a, b| a < b)
}

/// Largest lower bound, same tie rule as [`sharpest_upper`].
pub fn sharpest_lower<'a, I: IntoIterator<Item = &'a BoundValue>>(
    bounds: I,
) -> Option<&'a BoundValue> {
    pick(bounds, BoundKind::Lower, |a, b| a > b)
}

fn pick<'a, I, F>(bounds: I, kind: BoundKind, better: F) -> Option<&'a BoundValue>
where
    I: IntoIterator<Item = &'a BoundValue>,
    F: Fn(f64, f64) -> bool,
{
    bounds
        .into_iter()
        .filter(|b| b.kind == kind)
        .fold(None, |best: Option<&BoundValue>, b| match best {
            None => Some(b),
            Some(cur) => {
                if (b.value - cur.value).abs() <= TIE_TOLERANCE {
                    Some(if b.name < cur.name { b } else { cur })
                } else if better(b.value, cur.value) {
                    Some(b)
                } else {
                    Some(cur)
                }
            }
        })
}

/// Normalized polynomial (if any), its lower magnitudes, and whether a
/// normalization took place.
pub(crate) fn prepare(input: &BoundInput) -> Result<(Option<QPolynomial>, Vec<f64>, bool)> {
    match input {
        BoundInput::Polynomial(p) => {
            if p.degree() == 0 {
                return Err(Error::DegreeZero);
            }
            let (f, normalized) = p.normalized();
            let mags = f.lower_moduli();
            Ok((Some(f), mags, normalized))
        }
        BoundInput::Magnitudes(m) => {
            check_mags(m)?;
            Ok((None, m.clone(), false))
        }
    }
}

/// `|v_j|` for the auxiliary-polynomial bound, with their provenance.
pub(crate) fn aux_magnitudes(
    poly: Option<&QPolynomial>,
    mags: &[f64],
    opts: &BoundOptions,
) -> Result<(Vec<f64>, VSource)> {
    if let Some(v) = &opts.v_list {
        check_mags(v)?;
        return Ok((v.clone(), VSource::Explicit));
    }
    match poly {
        Some(f) => {
            let right = match f.side() {
                Side::Right => f.clone(),
                Side::Left => f.mirrored(),
            };
            Ok((
                AuxPolynomial::from_right_monic(&right)?.magnitudes(),
                VSource::Exact,
            ))
        }
        None => Ok((aux_magnitude_bounds(mags), VSource::TriangleBound)),
    }
}

pub(crate) fn theorem3_for(
    poly: Option<&QPolynomial>,
    mags: &[f64],
    opts: &BoundOptions,
) -> Result<BoundValue> {
    let (v, source) = aux_magnitudes(poly, mags, opts)?;
    let mut b = theorem3_opt(
        &v,
        opts.theorem3_variant,
        opts.r_bracket,
        opts.weights.as_ref(),
    )?;
    if let Some(BoundParams::Weights { v_source, .. }) = &mut b.params {
        *v_source = Some(source);
    }
    Ok(b)
}

pub(crate) fn theorem1_for(poly: Option<&QPolynomial>, mags: &[f64]) -> Result<BoundValue> {
    match poly {
        Some(f) => theorem1(f),
        None => theorem1_magnitudes(mags),
    }
}

/// Which bounds to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Which {
    CauchyUpper,
    Opfer(OpferVariant),
    Fujiwara,
    Theorem1,
    Theorem3,
    CauchyLower,
    Theorem2,
}

impl Which {
    pub(crate) fn name(self) -> &'static str {
        match self {
            Which::CauchyUpper => names::CAUCHY_UPPER,
            Which::Opfer(OpferVariant::Sum) => names::OPFER_SUM,
            Which::Opfer(OpferVariant::Max) => names::OPFER_MAX,
            Which::Fujiwara => names::FUJIWARA,
            Which::Theorem1 => names::THEOREM_4_1,
            Which::Theorem3 => names::THEOREM_4_3,
            Which::CauchyLower => names::CAUCHY_LOWER,
            Which::Theorem2 => names::THEOREM_4_2,
        }
    }

    pub(crate) fn all_upper(opfer: OpferChoice) -> Vec<Which> {
        let mut v = vec![Which::CauchyUpper];
        match opfer {
            OpferChoice::Sum => v.push(Which::Opfer(OpferVariant::Sum)),
            OpferChoice::Max => v.push(Which::Opfer(OpferVariant::Max)),
            OpferChoice::Both => {
                v.push(Which::Opfer(OpferVariant::Sum));
                v.push(Which::Opfer(OpferVariant::Max));
            }
        }
        v.extend([Which::Fujiwara, Which::Theorem1, Which::Theorem3]);
        v
    }
}

/// Computes the requested bounds, recording failures as skipped entries.
pub(crate) fn compute(
    which: &[Which],
    poly: Option<&QPolynomial>,
    mags: &[f64],
    opts: &BoundOptions,
) -> (Vec<BoundValue>, Vec<Skipped>) {
    let mut bounds = Vec::new();
    let mut skipped = Vec::new();
    for &w in which {
        let res = match w {
            Which::CauchyUpper => cauchy_upper(mags),
            Which::Opfer(v) => opfer(mags, v),
            Which::Fujiwara => fujiwara(mags),
            Which::Theorem1 => theorem1_for(poly, mags),
            Which::Theorem3 => theorem3_for(poly, mags, opts),
            Which::CauchyLower => cauchy_lower(mags),
            Which::Theorem2 => theorem2_opt(mags, opts.w_bracket),
        };
        match res {
            Ok(b) => bounds.push(b),
            Err(e) => skipped.push(Skipped {
                name: w.name().to_string(),
                reason: e.to_string(),
            }),
        }
    }
    (bounds, skipped)
}

pub(crate) fn annulus_of(bounds: &[BoundValue]) -> AnnulusBound {
    AnnulusBound {
        lower: sharpest_lower(bounds).map_or(0.0, |b| b.value),
        upper: sharpest_upper(bounds).map_or(f64::INFINITY, |b| b.value),
    }
}

/// Every applicable bound for the input. Bounds that do not apply (for
/// example the auxiliary-polynomial bound below degree 4) are listed in
/// `skipped` rather than failing the report.
pub fn all_bounds(input: &BoundInput, opts: &BoundOptions) -> Result<BoundReport> {
    let (poly, mags, normalized) = prepare(input)?;
    let mut which = Which::all_upper(opts.opfer);
    which.extend([Which::CauchyLower, Which::Theorem2]);
    let (bounds, skipped) = compute(&which, poly.as_ref(), &mags, opts);
    let annulus = annulus_of(&bounds);
    let sharpest = sharpest_upper(&bounds).map(|b| b.name.clone());
    Ok(BoundReport {
        degree: mags.len(),
        side: poly.as_ref().map(QPolynomial::side),
        normalized,
        bounds,
        skipped,
        annulus,
        sharpest,
    })
}
