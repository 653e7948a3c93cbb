//! Scalar backends for set functions.
//!
//! Cone computations run on [`BigRational`]; entropy computations run on
//! `f64` (bits). Comparisons go through [`Scalar::ge_tol`], which is exact on
//! the rational backend and tolerance-aware on floating point.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, ToPrimitive, Zero};

/// Default absolute tolerance for comparisons on the real backend.
pub const DEFAULT_TOL: f64 = 1e-9;

pub trait Scalar: Clone + Debug + Display + PartialOrd + Num + Send + Sync + 'static {
    /// `true` for backends where arithmetic and comparison are exact.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// `self >= other`, allowing `tol` slack on inexact backends.
    fn ge_tol(&self, other: &Self, tol: f64) -> bool;

    /// JSON encoding: numbers for floating point, `"p/q"` strings for exact.
    fn to_json(&self) -> serde_json::Value;

    fn eq_tol(&self, other: &Self, tol: f64) -> bool {
        self.ge_tol(other, tol) && other.ge_tol(self, tol)
    }
}

macro_rules! impl_float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn ge_tol(&self, other: &Self, tol: f64) -> bool {
                (*self as f64) >= (*other as f64) - tol
            }

            fn to_json(&self) -> serde_json::Value {
                serde_json::Value::from(*self as f64)
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn ge_tol(&self, other: &Self, _tol: f64) -> bool {
        self >= other
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(format_rational(self))
    }
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
