//! Floating-point quaternion arithmetic.
//!
//! `q = a + bi + cj + dk` with `i² = j² = k² = ijk = -1`. The product is the
//! Hamilton product and is not commutative. Values serialize as the 4-array
//! `[a, b, c, d]` and print as `a+bi+cj+dk` with explicit signs.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    #[inline]
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self { a, b, c, d }
    }

    /// Like [`Quaternion::new`] but rejects NaN and infinities.
    pub fn try_new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let q = Self::new(a, b, c, d);
        if q.is_finite() {
            Ok(q)
        } else {
            Err(Error::NonFinite)
        }
    }

    #[inline]
    pub const fn real(a: f64) -> Self {
        Self::new(a, 0.0, 0.0, 0.0)
    }

    pub fn from_array(v: [f64; 4]) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn is_finite(self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite() && self.d.is_finite()
    }

    pub fn is_zero(self) -> bool {
        self.a == 0.0 && self.b == 0.0 && self.c == 0.0 && self.d == 0.0
    }

    /// True when the vector part is exactly zero.
    pub fn is_real(self) -> bool {
        self.b == 0.0 && self.c == 0.0 && self.d == 0.0
    }

    #[inline]
    pub fn conj(self) -> Self {
        Self::new(self.a, -self.b, -self.c, -self.d)
    }

    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    /// Euclidean modulus `|q|`, computed without intermediate overflow.
    pub fn modulus(self) -> f64 {
        let scale = self
            .a
            .abs()
            .max(self.b.abs())
            .max(self.c.abs())
            .max(self.d.abs());
        if scale == 0.0 || !scale.is_finite() {
            return scale;
        }
        (self / scale).norm_sqr().sqrt() * scale
    }

    /// `conj(q) / |q|²`.
    pub fn inverse(self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj() / self.norm_sqr())
    }

    /// Imaginary (vector) part as a pure quaternion.
    pub fn vector(self) -> Self {
        Self::new(0.0, self.b, self.c, self.d)
    }

    pub fn scale(self, s: f64) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(self, other: Self) -> f64 {
        (self.a - other.a)
            .abs()
            .max((self.b - other.b).abs())
            .max((self.c - other.c).abs())
            .max((self.d - other.d).abs())
    }

    pub fn powi(self, n: u32) -> Self {
        (0..n).fold(Self::ONE, |acc, _| acc * self)
    }
}

impl Add for Quaternion {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for Quaternion {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl Neg for Quaternion {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    /// Hamilton product.
    #[inline]
    fn mul(self, q: Self) -> Self {
        let p = self;
        Self::new(
            p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        q.scale(self)
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;
    fn div(self, s: f64) -> Self {
        Self::new(self.a / s, self.b / s, self.c / s, self.d / s)
    }
}

impl From<f64> for Quaternion {
    fn from(a: f64) -> Self {
        Self::real(a)
    }
}

impl std::iter::Sum for Quaternion {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |acc, q| acc + q)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a)?;
        for (v, unit) in [(self.b, 'i'), (self.c, 'j'), (self.d, 'k')] {
            if v.is_sign_negative() {
                write!(f, "-{}{unit}", -v)?;
            } else {
                write!(f, "+{v}{unit}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Quaternion {
    type Err = Error;

    /// Accepts `[a,b,c,d]` or a signed sum of terms such as `1-2i+0.5k`.
    /// A bare unit (`i`, `-j`) has coefficient one.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty quaternion".into()));
        }
        if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let parts: Vec<f64> = inner
                .split(',')
                .map(|p| {
                    p.parse::<f64>()
                        .map_err(|e| Error::Parse(format!("{p}: {e}")))
                })
                .collect::<Result<_>>()?;
            let arr: [f64; 4] = parts
                .try_into()
                .map_err(|_| Error::Parse("expected four components".into()))?;
            let q = Self::from_array(arr);
            return if q.is_finite() {
                Ok(q)
            } else {
                Err(Error::NonFinite)
            };
        }

        // Split into signed terms. A sign directly after an exponent marker
        // belongs to the number, not to a new term.
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        for idx in 1..bytes.len() {
            let ch = bytes[idx];
            if (ch == b'+' || ch == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                terms.push(&s[start..idx]);
                start = idx;
            }
        }
        terms.push(&s[start..]);

        let mut q = Self::ZERO;
        for term in terms {
            let (body, unit) = match term.chars().last() {
                Some(u @ ('i' | 'j' | 'k')) => (&term[..term.len() - 1], Some(u)),
                _ => (term, None),
            };
            let value = match body {
                "" | "+" => 1.0,
                "-" => -1.0,
                num => num
                    .parse::<f64>()
                    .map_err(|e| Error::Parse(format!("{term}: {e}")))?,
            };
            match unit {
                None => q.a += value,
                Some('i') => q.b += value,
                Some('j') => q.c += value,
                Some(_) => q.d += value,
            }
        }
        if q.is_finite() {
            Ok(q)
        } else {
            Err(Error::NonFinite)
        }
    }
}

impl Serialize for Quaternion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Quaternion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let arr = <[f64; 4]>::deserialize(deserializer)?;
        let q = Self::from_array(arr);
        if q.is_finite() {
            Ok(q)
        } else {
            Err(serde::de::Error::custom(
                "quaternion components must be finite",
            ))
        }
    }
}
