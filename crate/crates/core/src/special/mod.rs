//! Real-order Bessel functions of the first kind, J_ν and I_ν, with
//! derivatives, for ν ∈ [0, 200] and x ∈ [0, 10⁴].

mod gamma;
mod kernels;

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Largest argument accepted by the public evaluators.
pub const X_MAX: f64 = 1e4;
/// Largest order accepted by the public evaluators.
pub const NU_MAX: f64 = 200.0;

/// A Bessel order ν ≥ 0, optionally remembering the (dimension, angular
/// index) pair it came from through ν = N/2 − 1 + l.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Order {
    nu: f64,
    dim: Option<u32>,
    angular: Option<u32>,
}

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || nu < 0.0 {
            return Err(Error::domain(format!("order must be finite and >= 0, got {nu}")));
        }
        Ok(Order {
            nu,
            dim: None,
            angular: None,
        })
    }

    /// The order N/2 − 1 + l. Exact in binary floating point since it is a
    /// multiple of 1/2.
    pub fn from_dim(dim: u32, angular: u32) -> Result<Self> {
        if dim < 2 && !(dim == 1 && angular >= 1) {
            return Err(Error::domain(format!(
                "dimension {dim} with l = {angular} gives a negative order"
            )));
        }
        let twice = dim as i64 - 2 + 2 * angular as i64;
        Ok(Order {
            nu: twice as f64 / 2.0,
            dim: Some(dim),
            angular: Some(angular),
        })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn dim(&self) -> Option<u32> {
        self.dim
    }

    pub fn angular(&self) -> Option<u32> {
        self.angular
    }
}

/// A validated argument 0 ≤ x ≤ [`X_MAX`].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EvalPoint(f64);

impl EvalPoint {
    pub fn new(x: f64) -> Result<Self> {
        if x.is_nan() || x < 0.0 {
            return Err(Error::domain(format!("argument must be >= 0, got {x}")));
        }
        if x > X_MAX {
            return Err(Error::domain(format!("argument {x} exceeds X_MAX = {X_MAX}")));
        }
        Ok(EvalPoint(x))
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

fn check(nu: f64, x: f64) -> Result<()> {
    if !nu.is_finite() || !(0.0..=NU_MAX).contains(&nu) {
        return Err(Error::domain(format!("order {nu} outside [0, {NU_MAX}]")));
    }
    EvalPoint::new(x).map(|_| ())
}

// Unchecked evaluators used inside the crate. Callers guarantee ν ≥ 0 and
// 0 ≤ x ≤ X_MAX.

pub(crate) fn j_unchecked(nu: f64, x: f64) -> f64 {
    if kernels::in_series_region(nu, x) {
        kernels::j_series(nu, x)
    } else if kernels::in_hankel_region(nu, x) {
        kernels::j_hankel(nu, x)
    } else if kernels::in_recurrence_region(nu, x) {
        kernels::j_upward(nu, x)
    } else {
        kernels::j_steed(nu, x).0
    }
}

/// e^{-x} I_ν(x).
pub(crate) fn i_scaled_unchecked(nu: f64, x: f64) -> f64 {
    if kernels::in_i_series_region(nu, x) {
        kernels::i_series(nu, x) * (-x).exp()
    } else {
        kernels::i_steed_scaled(nu, x).0
    }
}

/// r^{-ν} J_{ν+l}(k r) without the 0·∞ form at small r.
pub(crate) fn j_profile(nu: f64, l: u32, k: f64, r: f64) -> f64 {
    let order = nu + l as f64;
    let x = k * r;
    if x <= 1.0 {
        // (kr/2)^{ν+l} r^{-ν} = (k/2)^ν (kr/2)^l
        (0.5 * k).powf(nu) * (0.5 * x).powi(l as i32) * kernels::j_reduced_series(order, x)
    } else {
        r.powf(-nu) * j_unchecked(order, x)
    }
}

/// r^{-ν} I_{ν+l}(k r), the growing radial profile.
pub(crate) fn i_profile(nu: f64, l: u32, k: f64, r: f64) -> f64 {
    let order = nu + l as f64;
    let x = k * r;
    if x <= 1.0 {
        (0.5 * k).powf(nu) * (0.5 * x).powi(l as i32) * kernels::i_reduced_series(order, x)
    } else {
        r.powf(-nu) * i_scaled_unchecked(order, x) * x.exp()
    }
}

/// (J_a(k), J_{a+1}(k)) times a common positive factor chosen so that
/// neither entry underflows at small k.
pub(crate) fn j_pair_weighted(a: f64, k: f64) -> (f64, f64) {
    if kernels::in_series_region(a, k) {
        (
            kernels::reduced_series(a, k, -1.0),
            0.5 * k * kernels::reduced_series(a + 1.0, k, -1.0) / (a + 1.0),
        )
    } else {
        (j_unchecked(a, k), j_unchecked(a + 1.0, k))
    }
}

/// (I_a(k), I_{a+1}(k)) times a common positive factor; finite for every
/// k ≤ X_MAX.
pub(crate) fn i_pair_weighted(a: f64, k: f64) -> (f64, f64) {
    if kernels::in_i_series_region(a, k) && k < 300.0 {
        (
            kernels::reduced_series(a, k, 1.0),
            0.5 * k * kernels::reduced_series(a + 1.0, k, 1.0) / (a + 1.0),
        )
    } else {
        (i_scaled_unchecked(a, k), i_scaled_unchecked(a + 1.0, k))
    }
}

/// Γ(a+1) J_a(x) / (x/2)^a, equal to 1 at x = 0.
pub(crate) fn j_normalized(a: f64, x: f64) -> f64 {
    if kernels::in_series_region(a, x) {
        return kernels::reduced_series(a, x, -1.0);
    }
    let j = j_unchecked(a, x);
    j.signum() * (j.abs().ln() + gamma::ln_gamma(a + 1.0) - a * (0.5 * x).ln()).exp()
}

/// Γ(a+1) I_a(x) / (x/2)^a, equal to 1 at x = 0.
pub(crate) fn i_normalized(a: f64, x: f64) -> f64 {
    if kernels::in_i_series_region(a, x) && x < 300.0 {
        return kernels::reduced_series(a, x, 1.0);
    }
    let scaled = i_scaled_unchecked(a, x);
    (scaled.ln() + x + gamma::ln_gamma(a + 1.0) - a * (0.5 * x).ln()).exp()
}

/// J_ν(x).
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    Ok(j_unchecked(nu, x))
}

/// J′_ν(x) = −J_{ν+1}(x) + (ν/x) J_ν(x).
///
/// At x = 0 the one-sided limit is returned where it is finite: 0 for ν = 0
/// and ν > 1, 1/2 for ν = 1. For 0 < ν < 1 the derivative is unbounded and a
/// domain error is reported.
pub fn bessel_j_deriv(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    if x == 0.0 {
        return if nu == 0.0 || nu > 1.0 {
            Ok(0.0)
        } else if nu == 1.0 {
            Ok(0.5)
        } else {
            Err(Error::domain(format!("J'_{nu}(x) is unbounded as x -> 0")))
        };
    }
    Ok(-j_unchecked(nu + 1.0, x) + nu / x * j_unchecked(nu, x))
}

/// I_ν(x). Fails with [`Error::Overflow`] once the value leaves the f64 range;
/// use [`bessel_i_scaled`] for large arguments.
pub fn bessel_i(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    if kernels::in_i_series_region(nu, x) {
        return Ok(kernels::i_series(nu, x));
    }
    let scaled = kernels::i_steed_scaled(nu, x).0;
    let value = scaled * x.exp();
    if !value.is_finite() {
        return Err(Error::Overflow(format!("I_{nu}({x}) exceeds the f64 range")));
    }
    Ok(value)
}

/// e^{-x} I_ν(x).
pub fn bessel_i_scaled(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    Ok(i_scaled_unchecked(nu, x))
}

/// I′_ν(x) = I_{ν+1}(x) + (ν/x) I_ν(x), with the same x = 0 limits as
/// [`bessel_j_deriv`].
pub fn bessel_i_deriv(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    if x == 0.0 {
        return if nu == 0.0 || nu > 1.0 {
            Ok(0.0)
        } else if nu == 1.0 {
            Ok(0.5)
        } else {
            Err(Error::domain(format!("I'_{nu}(x) is unbounded as x -> 0")))
        };
    }
    let upper = bessel_i(nu + 1.0, x)?;
    Ok(upper + nu / x * bessel_i(nu, x)?)
}

/// The ratio I_{ν+1}(x) / I_ν(x), overflow-free for all x ≤ X_MAX.
pub fn bessel_i_ratio(nu: f64, x: f64) -> Result<f64> {
    check(nu, x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(i_scaled_unchecked(nu + 1.0, x) / i_scaled_unchecked(nu, x))
}
