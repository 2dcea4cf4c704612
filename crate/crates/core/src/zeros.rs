//! Positive zeros j_{ν,m} of J_ν.
//!
//! Zeros are located by a forward sign-change scan, so the m-th zero is
//! always the m-th one found and no index can be skipped. Consecutive zeros
//! of J_ν are more than 3.1 apart for every ν ≥ 0, so a scan step of 2 sees
//! at most one sign change per step. Results are cached per order.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::roots::{newton_seeded, Bracket};
use crate::special::{j_unchecked, Order, NU_MAX, X_MAX};

const SCAN_STEP: f64 = 2.0;
/// Distance past a zero at which the search for the next one resumes; below
/// the smallest zero spacing.
const RESUME_GAP: f64 = 3.0;
const ZERO_TOL: f64 = 1e-15;

/// Identifies j_{ν,m}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroIndex {
    order: Order,
    m: u32,
}

impl ZeroIndex {
    pub fn new(order: Order, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("zero index m must be >= 1"));
        }
        if order.nu() > NU_MAX {
            return Err(Error::domain(format!("order {} exceeds {NU_MAX}", order.nu())));
        }
        Ok(ZeroIndex { order, m })
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

#[derive(Debug, Clone, Copy)]
struct Located {
    lo: f64,
    hi: f64,
    zero: f64,
}

static CACHE: LazyLock<Mutex<HashMap<u64, Vec<Located>>>> = LazyLock::new(Default::default);

/// McMahon's large-zero expansion, leading two terms.
fn mcmahon(nu: f64, m: u32) -> f64 {
    let beta = (m as f64 + 0.5 * nu - 0.25) * PI;
    beta - (4.0 * nu * nu - 1.0) / (8.0 * beta)
}

fn j_and_deriv(nu: f64, x: f64) -> (f64, f64) {
    let j = j_unchecked(nu, x);
    (j, -j_unchecked(nu + 1.0, x) + nu / x * j)
}

/// Finds the next zero after `prev` (or the first zero when `prev` is None).
/// Sign of J_ν just after the previous zero is (−1)^{count}.
fn next_zero(nu: f64, prev: Option<f64>, count: usize) -> Result<Located> {
    // j_{ν,1} exceeds both ν and 2√(ν+1), so J_ν > 0 on (0, start].
    let mut lo = match prev {
        Some(z) => z + RESUME_GAP,
        None => nu.max(2.0 * (nu + 1.0).sqrt()),
    };
    let sign = if count.is_multiple_of(2) { 1.0 } else { -1.0 };
    if j_unchecked(nu, lo) * sign <= 0.0 {
        return Err(Error::Convergence(format!(
            "zero scan for J_{nu} lost the sign pattern at {lo}"
        )));
    }
    loop {
        let hi = lo + SCAN_STEP;
        if hi > X_MAX {
            return Err(Error::domain(format!(
                "zero {} of J_{nu} lies beyond X_MAX = {X_MAX}",
                count + 1
            )));
        }
        let fhi = j_unchecked(nu, hi);
        if fhi * sign <= 0.0 {
            if fhi == 0.0 {
                return Ok(Located {
                    lo,
                    hi: hi + SCAN_STEP,
                    zero: hi,
                });
            }
            let bracket = Bracket::new(lo, hi, sign)?;
            let seed = mcmahon(nu, count as u32 + 1);
            let zero = newton_seeded(|x| j_and_deriv(nu, x), bracket, seed, ZERO_TOL)?;
            return Ok(Located { lo, hi, zero });
        }
        lo = hi;
    }
}

fn locate(idx: ZeroIndex) -> Result<Located> {
    let nu = idx.order.nu();
    let m = idx.m as usize;
    let mut cache = CACHE.lock().unwrap_or_else(|e| e.into_inner());
    let found = cache.entry(nu.to_bits()).or_default();
    while found.len() < m {
        let prev = found.last().map(|z| z.zero);
        let next = next_zero(nu, prev, found.len())?;
        found.push(next);
    }
    Ok(found[m - 1])
}

/// j_{ν,m}, the m-th positive zero of J_ν.
///
/// Fails with a domain error when the zero exceeds [`X_MAX`].
pub fn bessel_zero(idx: ZeroIndex) -> Result<f64> {
    locate(idx).map(|z| z.zero)
}

/// An interval `(a, b)` with J_ν(a)·J_ν(b) < 0 that contains j_{ν,m} and no
/// other zero.
pub fn zero_bracket(idx: ZeroIndex) -> Result<(f64, f64)> {
    locate(idx).map(|z| (z.lo, z.hi))
}

/// Convenience wrapper taking the order as a bare number.
pub fn zero(nu: f64, m: u32) -> Result<f64> {
    bessel_zero(ZeroIndex::new(Order::new(nu)?, m)?)
}
