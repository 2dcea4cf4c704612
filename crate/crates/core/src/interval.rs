//! Robin eigenvalues of −u″ = μu on (0, 1) with −u′(0) + αu(0) = 0 and
//! u′(1) + αu(1) = 0.
//!
//! A positive eigenvalue μ = k² solves α = α₊(k) or α = α₋(k), where
//! α± = −k cot k ± k/|sin k|. On every window ((w−1)π, wπ) the two branches
//! reduce to k·tan(k/2) and −k·cot(k/2), each strictly increasing:
//!
//! | window | k·tan(k/2)  | −k·cot(k/2)            |
//! |--------|-------------|------------------------|
//! | w odd  | α₊, (0, ∞)  | α₋, (−∞, 0) or (−2, 0) for w = 1 |
//! | w even | α₋, (−∞, 0) | α₊, (0, ∞)             |
//!
//! A negative eigenvalue μ = −s² solves α = −s·tanh(s/2) or α = −s·coth(s/2).

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::roots::{bisect, newton_bisect, Bracket};

const ROOT_TOL: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalProblem {
    alpha: f64,
}

impl IntervalProblem {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::domain(format!("alpha must be finite, got {alpha}")));
        }
        Ok(IntervalProblem { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalBranch {
    AlphaPlusTrig,
    AlphaMinusTrig,
    AlphaPlusHyp,
    AlphaMinusHyp,
    Zero,
}

/// Closed-form eigenfunction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum IntervalEigenfunction {
    /// cos_coef·cos(kx) + sin_coef·sin(kx)
    Trig { k: f64, cos_coef: f64, sin_coef: f64 },
    /// cosh(s(x−½))/cosh(s/2), or sinh(s(½−x))/sinh(s/2) when `odd`
    Hyperbolic { s: f64, odd: bool },
    /// constant + slope·x
    Affine { constant: f64, slope: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalEigenpair {
    pub m: u32,
    pub mu: f64,
    pub branch: IntervalBranch,
    pub eigenfunction: IntervalEigenfunction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum HalfAngle {
    /// k·tan(k/2)
    Tan,
    /// −k·cot(k/2)
    Cot,
}

fn tan_form(k: f64) -> f64 {
    k * (0.5 * k).tan()
}

fn cot_form(k: f64) -> f64 {
    -k / (0.5 * k).tan()
}

fn tan_form_deriv(k: f64) -> f64 {
    (k + k.sin()) / (2.0 * (0.5 * k).cos().powi(2))
}

fn cot_form_deriv(k: f64) -> f64 {
    (k - k.sin()) / (2.0 * (0.5 * k).sin().powi(2))
}

/// 1-based window index w with k ∈ ((w−1)π, wπ), or an error on a pole.
fn window_of(k: f64) -> Result<u64> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::domain(format!("k must be finite and > 0, got {k}")));
    }
    let r = k / PI;
    let nearest = r.round();
    if nearest >= 1.0 && (r - nearest).abs() * PI < 1e-12 * k.max(1.0) {
        return Err(Error::Pole(format!("k = {k} is a multiple of pi")));
    }
    Ok(r.floor() as u64 + 1)
}

fn plus_form(w: u64) -> HalfAngle {
    if w % 2 == 1 {
        HalfAngle::Tan
    } else {
        HalfAngle::Cot
    }
}

fn minus_form(w: u64) -> HalfAngle {
    match plus_form(w) {
        HalfAngle::Tan => HalfAngle::Cot,
        HalfAngle::Cot => HalfAngle::Tan,
    }
}

fn eval_form(form: HalfAngle, k: f64) -> f64 {
    match form {
        HalfAngle::Tan => tan_form(k),
        HalfAngle::Cot => cot_form(k),
    }
}

fn eval_form_deriv(form: HalfAngle, k: f64) -> f64 {
    match form {
        HalfAngle::Tan => tan_form_deriv(k),
        HalfAngle::Cot => cot_form_deriv(k),
    }
}

/// α₊(k) = −k cot k + k/|sin k|.
pub fn alpha_plus_trig(k: f64) -> Result<f64> {
    let w = window_of(k)?;
    Ok(eval_form(plus_form(w), k))
}

/// α₋(k) = −k cot k − k/|sin k|.
pub fn alpha_minus_trig(k: f64) -> Result<f64> {
    let w = window_of(k)?;
    Ok(eval_form(minus_form(w), k))
}

/// dα₊/dk; equals (1 − cos k)(k + sin k)/sin²k where sin k > 0.
pub fn alpha_plus_trig_deriv(k: f64) -> Result<f64> {
    let w = window_of(k)?;
    Ok(eval_form_deriv(plus_form(w), k))
}

/// dα₋/dk; equals (1 + cos k)(k − sin k)/sin²k where sin k > 0.
pub fn alpha_minus_trig_deriv(k: f64) -> Result<f64> {
    let w = window_of(k)?;
    Ok(eval_form_deriv(minus_form(w), k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HypBranch {
    Plus,
    Minus,
}

/// −s·tanh(s/2) (plus) or −s·coth(s/2) (minus), for s = √(−μ) > 0.
pub fn alpha_hyp(s: f64, branch: HypBranch) -> Result<f64> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::domain(format!("s must be finite and > 0, got {s}")));
    }
    Ok(match branch {
        HypBranch::Plus => -s * (0.5 * s).tanh(),
        HypBranch::Minus => -s / (0.5 * s).tanh(),
    })
}

/// Range of the half-angle form on window w, as (lower, upper) limits.
fn form_range(form: HalfAngle, w: u64) -> (f64, f64) {
    match (form, w % 2 == 1) {
        (HalfAngle::Tan, true) => (0.0, f64::INFINITY),
        (HalfAngle::Tan, false) => (f64::NEG_INFINITY, 0.0),
        (HalfAngle::Cot, true) if w == 1 => (-2.0, 0.0),
        (HalfAngle::Cot, true) => (f64::NEG_INFINITY, 0.0),
        (HalfAngle::Cot, false) => (0.0, f64::INFINITY),
    }
}

/// Root of form(k) = α on window w, if α is in the range of the form there.
///
/// The pole-free numerators are used: k sin(k/2) − α cos(k/2) for the tan
/// form and k cos(k/2) + α sin(k/2) for the cot form.
fn window_root(form: HalfAngle, w: u64, alpha: f64) -> Result<Option<f64>> {
    let (lo_val, hi_val) = form_range(form, w);
    if !(alpha > lo_val && alpha < hi_val) {
        return Ok(None);
    }
    let lo = (w - 1) as f64 * PI;
    let hi = w as f64 * PI;
    let mid = 0.5 * (lo + hi);
    let k = match form {
        HalfAngle::Tan => {
            // P = (tan_form − α)·cos(k/2)
            let sign_lo = -(0.5 * mid).cos().signum();
            let f = |k: f64| {
                let (s, c) = (0.5 * k).sin_cos();
                (k * s - alpha * c, s + 0.5 * k * c + 0.5 * alpha * s)
            };
            newton_bisect(f, Bracket::new(lo, hi, sign_lo)?, ROOT_TOL)?
        }
        HalfAngle::Cot => {
            // Q = −(cot_form − α)·sin(k/2)
            let sign_lo = (0.5 * mid).sin().signum();
            let f = |k: f64| {
                let (s, c) = (0.5 * k).sin_cos();
                (k * c + alpha * s, c - 0.5 * k * s + 0.5 * alpha * c)
            };
            newton_bisect(f, Bracket::new(lo, hi, sign_lo)?, ROOT_TOL)?
        }
    };
    Ok(Some(k))
}

/// Root s of alpha_hyp(s, branch) = α; requires α < 0 (plus) or α < −2
/// (minus).
fn hyp_root(branch: HypBranch, alpha: f64) -> Result<f64> {
    let f = |s: f64| alpha_hyp(s, branch).map(|a| a - alpha).unwrap_or(f64::NAN);
    let mut lo = 0.0;
    let mut hi = 1.0;
    while f(hi) >= 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1e300 {
            return Err(Error::Convergence(format!("no hyperbolic root for alpha = {alpha}")));
        }
    }
    bisect(f, Bracket::new(lo, hi, 1.0)?, ROOT_TOL)
}

fn positive_pair(alpha: f64, k: f64, branch: IntervalBranch) -> IntervalEigenpair {
    // k cos(kx) + α sin(kx), scaled to unit amplitude
    let norm = k.hypot(alpha);
    let eigenfunction = IntervalEigenfunction::Trig {
        k,
        cos_coef: k / norm,
        sin_coef: alpha / norm,
    };
    IntervalEigenpair {
        m: 0,
        mu: k * k,
        branch,
        eigenfunction,
    }
}

fn negative_pair(s: f64, branch: IntervalBranch) -> IntervalEigenpair {
    let odd = branch == IntervalBranch::AlphaMinusHyp;
    let eigenfunction = IntervalEigenfunction::Hyperbolic { s, odd };
    IntervalEigenpair {
        m: 0,
        mu: -s * s,
        branch,
        eigenfunction,
    }
}

/// The first `count` eigenpairs in increasing order.
pub fn solve_interval(problem: &IntervalProblem, count: usize) -> Result<Vec<IntervalEigenpair>> {
    if count == 0 {
        return Err(Error::domain("count must be >= 1"));
    }
    let alpha = problem.alpha;
    let mut pairs = Vec::with_capacity(count);

    if alpha == 0.0 {
        pairs.push(IntervalEigenpair {
            m: 0,
            mu: 0.0,
            branch: IntervalBranch::Zero,
            eigenfunction: IntervalEigenfunction::Affine {
                constant: 1.0,
                slope: 0.0,
            },
        });
        for j in 1..count {
            let k = j as f64 * PI;
            pairs.push(IntervalEigenpair {
                m: 0,
                mu: k * k,
                branch: IntervalBranch::AlphaPlusTrig,
                eigenfunction: IntervalEigenfunction::Trig {
                    k,
                    cos_coef: 1.0,
                    sin_coef: 0.0,
                },
            });
        }
    } else {
        if alpha < 0.0 {
            let s = hyp_root(HypBranch::Plus, alpha)?;
            pairs.push(negative_pair(s, IntervalBranch::AlphaPlusHyp));
        }
        if alpha < -2.0 {
            let s = hyp_root(HypBranch::Minus, alpha)?;
            pairs.push(negative_pair(s, IntervalBranch::AlphaMinusHyp));
        }
        if alpha == -2.0 {
            pairs.push(IntervalEigenpair {
                m: 0,
                mu: 0.0,
                branch: IntervalBranch::Zero,
                eigenfunction: IntervalEigenfunction::Affine {
                    constant: 1.0,
                    slope: -2.0,
                },
            });
        }
        let mut w = 1u64;
        while pairs.len() < count {
            for (form, branch) in [
                (plus_form(w), IntervalBranch::AlphaPlusTrig),
                (minus_form(w), IntervalBranch::AlphaMinusTrig),
            ] {
                if let Some(k) = window_root(form, w, alpha)? {
                    pairs.push(positive_pair(alpha, k, branch));
                }
            }
            w += 1;
        }
    }

    pairs.sort_by(|a, b| a.mu.total_cmp(&b.mu));
    pairs.truncate(count);
    for (i, p) in pairs.iter_mut().enumerate() {
        p.m = i as u32 + 1;
    }
    Ok(pairs)
}

fn check_x(x: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("x must lie in [0, 1], got {x}")));
    }
    Ok(())
}

impl IntervalEigenfunction {
    pub fn value(&self, x: f64) -> f64 {
        match *self {
            IntervalEigenfunction::Trig { k, cos_coef, sin_coef } => {
                let (s, c) = (k * x).sin_cos();
                cos_coef * c + sin_coef * s
            }
            IntervalEigenfunction::Hyperbolic { s, odd } => {
                let (t, lead, plus, minus) = hyperbolic_parts(s, x);
                if odd {
                    -t.signum() * lead * minus / -(-s).exp_m1()
                } else {
                    lead * plus / (1.0 + (-s).exp())
                }
            }
            IntervalEigenfunction::Affine { constant, slope } => constant + slope * x,
        }
    }

    pub fn derivative(&self, x: f64) -> f64 {
        match *self {
            IntervalEigenfunction::Trig { k, cos_coef, sin_coef } => {
                let (s, c) = (k * x).sin_cos();
                k * (sin_coef * c - cos_coef * s)
            }
            IntervalEigenfunction::Hyperbolic { s, odd } => {
                let (t, lead, plus, minus) = hyperbolic_parts(s, x);
                if odd {
                    -s * lead * plus / -(-s).exp_m1()
                } else {
                    s * t.signum() * lead * minus / (1.0 + (-s).exp())
                }
            }
            IntervalEigenfunction::Affine { slope, .. } => slope,
        }
    }
}

/// With t = x − ½: (t, e^{s(|t|−½)}, 1 + e^{−2s|t|}, 1 − e^{−2s|t|}), so that
/// cosh(st)/cosh(s/2) and sinh(s|t|)/sinh(s/2) never overflow.
fn hyperbolic_parts(s: f64, x: f64) -> (f64, f64, f64, f64) {
    let t = x - 0.5;
    let e = (-2.0 * s * t.abs()).exp_m1();
    (t, (s * (t.abs() - 0.5)).exp(), 2.0 + e, -e)
}

/// u_m(x) for x ∈ [0, 1].
pub fn interval_eigenfunction(pair: &IntervalEigenpair, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(pair.eigenfunction.value(x))
}

/// u_m′(x) for x ∈ [0, 1].
pub fn interval_eigenfunction_deriv(pair: &IntervalEigenpair, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(pair.eigenfunction.derivative(x))
}

/// Boundary residuals (|−u′(0) + αu(0)|, |u′(1) + αu(1)|).
pub fn boundary_residuals(problem: &IntervalProblem, pair: &IntervalEigenpair) -> (f64, f64) {
    let u = &pair.eigenfunction;
    let a = problem.alpha;
    (
        (-u.derivative(0.0) + a * u.value(0.0)).abs(),
        (u.derivative(1.0) + a * u.value(1.0)).abs(),
    )
}
