//! Profile-driven choice of the sharpest bound pair.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    compute, prepare, sharpest_lower, sharpest_upper, BoundInput, BoundKind, BoundOptions,
    BoundValue, Skipped, Which, TIE_TOLERANCE,
};
use crate::error::{Error, Result};

pub const DEFAULT_TAU: f64 = 1.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileTag {
    FlatSmall,
    HeavyTail,
    MiddleBulge,
    TopHeavy,
}

impl ProfileTag {
    pub fn display_name(self) -> &'static str {
        match self {
            ProfileTag::FlatSmall => "Flat & Small",
            ProfileTag::HeavyTail => "Heavy Tail",
            ProfileTag::MiddleBulge => "Middle Bulge",
            ProfileTag::TopHeavy => "Top Heavy",
        }
    }
}

impl fmt::Display for ProfileTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.display_name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Profile {
    pub tag: ProfileTag,
    /// First index attaining the largest magnitude.
    pub max_index: usize,
    pub max_value: f64,
    pub tau: f64,
}

/// Classifies `mags = [|q_0|, …, |q_{n-1}|]`, `n ≥ 2`.
pub fn classify(mags: &[f64], tau: f64) -> Result<Profile> {
    let n = mags.len();
    if n < 2 {
        return Err(Error::DegreeTooSmall { needed: 2, got: n });
    }
    if mags.iter().chain([&tau]).any(|m| !m.is_finite()) {
        return Err(Error::NonFinite);
    }
    if mags.iter().any(|&m| m < 0.0) || tau < 0.0 {
        return Err(Error::NegativeInput);
    }
    let (max_index, max_value) =
        mags.iter().enumerate().fold(
            (0, mags[0]),
            |(bk, bv), (k, &v)| if v > bv { (k, v) } else { (bk, bv) },
        );
    let tag = if max_value <= tau {
        ProfileTag::FlatSmall
    } else if max_index == 0 {
        ProfileTag::HeavyTail
    } else if max_index < n - 1 {
        ProfileTag::MiddleBulge
    } else {
        ProfileTag::TopHeavy
    };
    Ok(Profile {
        tag,
        max_index,
        max_value,
        tau,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelectOptions {
    pub tau: f64,
    /// Compute every upper bound regardless of the profile.
    pub compute_all: bool,
    pub bounds: BoundOptions,
}

impl Default for SelectOptions {
    fn default() -> Self {
        Self {
            tau: DEFAULT_TAU,
            compute_all: false,
            bounds: BoundOptions::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionResult {
    pub profile: Profile,
    /// Upper bounds the profile routed to, in evaluation order.
    pub routed: Vec<String>,
    /// True when the routed branch could not run and every upper bound was
    /// computed instead.
    pub fallback: bool,
    pub upper: BoundValue,
    pub lower: BoundValue,
    pub all_computed: Vec<BoundValue>,
    pub skipped: Vec<Skipped>,
    /// Set when `upper < lower`, which signals a numerical or input problem.
    pub inconsistent: bool,
    pub normalized: bool,
}

fn route(profile: &Profile, n: usize, opts: &SelectOptions) -> (Vec<Which>, bool) {
    let all = Which::all_upper(opts.bounds.opfer);
    if opts.compute_all {
        return (all, false);
    }
    match profile.tag {
        ProfileTag::FlatSmall => (
            all.into_iter()
                .filter(|w| matches!(w, Which::CauchyUpper | Which::Opfer(_)))
                .collect(),
            false,
        ),
        ProfileTag::HeavyTail => (vec![Which::Theorem1], false),
        ProfileTag::MiddleBulge if n >= 4 || opts.bounds.v_list.is_some() => {
            (vec![Which::Theorem3], false)
        }
        ProfileTag::MiddleBulge => (all, true),
        ProfileTag::TopHeavy => (all, false),
    }
}

/// Classifies the input and evaluates the bounds its profile predicts to be
/// sharpest. `upper` is the smallest guaranteed upper bound among everything
/// evaluated, `lower` the largest lower bound.
pub fn select(input: &BoundInput, opts: &SelectOptions) -> Result<SelectionResult> {
    let (poly, mags, normalized) = prepare(input)?;
    let profile = classify(&mags, opts.tau)?;
    let (mut which, mut fallback) = route(&profile, mags.len(), opts);
    let routed = which.iter().map(|w| w.name().to_string()).collect();
    which.extend([Which::CauchyLower, Which::Theorem2]);
    let (mut all_computed, mut skipped) = compute(&which, poly.as_ref(), &mags, &opts.bounds);

    if sharpest_upper(&all_computed).is_none() {
        let rest: Vec<Which> = Which::all_upper(opts.bounds.opfer)
            .into_iter()
            .filter(|w| !which.contains(w))
            .collect();
        let (more, more_skipped) = compute(&rest, poly.as_ref(), &mags, &opts.bounds);
        all_computed.extend(more);
        skipped.extend(more_skipped);
        fallback = true;
    }

    // Cauchy's upper bound always applies, so both picks exist.
    let upper = sharpest_upper(&all_computed)
        .expect("an upper bound")
        .clone();
    let lower = sharpest_lower(&all_computed)
        .expect("a lower bound")
        .clone();
    let inconsistent = upper.value < lower.value - TIE_TOLERANCE;
    Ok(SelectionResult {
        profile,
        routed,
        fallback,
        upper,
        lower,
        all_computed,
        skipped,
        inconsistent,
        normalized,
    })
}

impl SelectionResult {
    pub fn uppers(&self) -> impl Iterator<Item = &BoundValue> {
        self.all_computed
            .iter()
            .filter(|b| b.kind == BoundKind::Upper)
    }
}
