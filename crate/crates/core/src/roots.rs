//! Bracketed root finding for functions whose sign at the bracket ends is
//! known in advance.
//!
//! The endpoints are never evaluated, which lets callers pass brackets whose
//! ends sit on poles or on zeros of an auxiliary function.

use crate::error::{Error, Result};

/// Bisection continues until the bracket is this narrow (relative to its
/// upper end) before Newton steps are allowed.
const NEWTON_WIDTH: f64 = 1e-3;
const MAX_ITER: usize = 400;

/// A bracket `(lo, hi)` together with the sign the function takes just above
/// `lo`. The function is assumed to take the opposite sign just below `hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
    pub sign_lo: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64, sign_lo: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::domain(format!("invalid bracket ({lo}, {hi})")));
        }
        if sign_lo == 0.0 || sign_lo.is_nan() {
            return Err(Error::domain("bracket sign must be nonzero"));
        }
        Ok(Bracket {
            lo,
            hi,
            sign_lo: sign_lo.signum(),
        })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    fn contains(&self, x: f64) -> bool {
        x > self.lo && x < self.hi
    }

    fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// Shrinks the bracket around the sign change given f(x). Returns true
    /// if x is an exact root.
    fn update(&mut self, x: f64, fx: f64) -> bool {
        if fx == 0.0 {
            self.lo = x;
            self.hi = x;
            return true;
        }
        if fx.signum() == self.sign_lo {
            self.lo = x;
        } else {
            self.hi = x;
        }
        false
    }
}

fn converged(b: &Bracket, tol: f64) -> bool {
    b.width() <= tol * b.hi.abs().max(1.0)
}

/// Safeguarded Newton: bisect down to a narrow bracket, then take Newton
/// steps, falling back to bisection whenever a step leaves the bracket.
///
/// `f` returns the value and derivative at a point. `tol` is relative to
/// `max(1, |root|)`.
pub fn newton_bisect<F>(f: F, bracket: Bracket, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> (f64, f64),
{
    safeguarded(f, bracket, bracket.midpoint(), NEWTON_WIDTH, tol)
}

/// Newton from `seed` with no initial bisection phase. A seed outside the
/// bracket is replaced by the midpoint.
pub fn newton_seeded<F>(f: F, bracket: Bracket, seed: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> (f64, f64),
{
    let start = if bracket.contains(seed) {
        seed
    } else {
        bracket.midpoint()
    };
    safeguarded(f, bracket, start, f64::INFINITY, tol)
}

fn safeguarded<F>(mut f: F, bracket: Bracket, start: f64, newton_width: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> (f64, f64),
{
    let mut b = bracket;
    let mut x = start;
    for _ in 0..MAX_ITER {
        if converged(&b, tol) {
            return Ok(b.midpoint());
        }
        let (fx, dfx) = f(x);
        if !fx.is_finite() {
            return Err(Error::Convergence(format!("non-finite value at {x}")));
        }
        if b.update(x, fx) {
            return Ok(x);
        }
        let narrow = b.width() <= newton_width * b.hi.abs().max(1.0);
        let candidate = if narrow && dfx != 0.0 && dfx.is_finite() {
            x - fx / dfx
        } else {
            f64::NAN
        };
        if b.contains(candidate) {
            let step = (candidate - x).abs();
            x = candidate;
            if step <= 0.25 * tol * x.abs().max(1.0) {
                return Ok(x);
            }
        } else {
            x = b.midpoint();
        }
    }
    Err(Error::Convergence(format!(
        "no convergence in ({}, {}) after {MAX_ITER} iterations",
        b.lo, b.hi
    )))
}

/// Plain bisection for functions without a convenient derivative.
pub fn bisect<F>(mut f: F, bracket: Bracket, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let mut b = bracket;
    for _ in 0..MAX_ITER {
        if converged(&b, tol) {
            return Ok(b.midpoint());
        }
        let x = b.midpoint();
        if x <= b.lo || x >= b.hi {
            // adjacent floats
            return Ok(x);
        }
        let fx = f(x);
        if fx.is_nan() {
            return Err(Error::Convergence(format!("NaN at {x}")));
        }
        if b.update(x, fx) {
            return Ok(x);
        }
    }
    Err(Error::Convergence(format!("bisection stalled in ({}, {})", b.lo, b.hi)))
}
