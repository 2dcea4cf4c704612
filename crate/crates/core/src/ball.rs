//! Robin eigenvalues of the unit ball in ℝᴺ.
//!
//! Separating variables gives, for each angular index l ≥ 0, radial profiles
//! r^{-ν} J_{ν+l}(kr) (positive eigenvalue k²), r^{-ν} I_{ν+l}(kr) (negative
//! eigenvalue −k²) or r^l (zero eigenvalue), with ν = N/2 − 1. The boundary
//! condition turns into
//!
//! * f(k) = k J_{ν+l+1}(k) − (α+l) J_{ν+l}(k) = 0 for positive eigenvalues,
//! * g(k) = (α+l) I_{ν+l}(k) + k I_{ν+l+1}(k) = 0 for negative ones,
//!
//! and the zero eigenvalue appears exactly when α = −l.
//!
//! Roots of f are bracketed by consecutive zeros of J_{ν+l}: the m = 1 root
//! (present only for α > −l) lies in (0, j_{ν+l,1}) and the m-th root for
//! m ≥ 2 in (j_{ν+l,m−1}, j_{ν+l,m}). g has a single positive root when
//! α < −l.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{newton_bisect, Bracket};
use crate::special::{
    i_normalized, i_pair_weighted, i_profile, i_scaled_unchecked, j_normalized, j_pair_weighted, j_profile, NU_MAX,
};
use crate::zeros::zero;

pub use crate::harmonics::{multiplicity, zonal_harmonic};

const ROOT_TOL: f64 = 1e-15;
/// Relative tolerance of the defining-equation residual checks.
pub const RESIDUAL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BallProblem {
    dim: u32,
    alpha: f64,
}

impl BallProblem {
    pub fn new(dim: u32, alpha: f64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::domain(format!(
                "ball dimension must be >= 2, got {dim} (use the interval module for N = 1)"
            )));
        }
        if (dim as f64) / 2.0 > NU_MAX {
            return Err(Error::domain(format!("dimension {dim} is too large")));
        }
        if !alpha.is_finite() {
            return Err(Error::domain(format!("alpha must be finite, got {alpha}")));
        }
        Ok(BallProblem { dim, alpha })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// ν = N/2 − 1.
    pub fn nu(&self) -> f64 {
        (self.dim as f64 - 2.0) / 2.0
    }

    fn order(&self, l: u32) -> Result<f64> {
        let a = self.nu() + l as f64;
        // the root equations also need J_{a+1}
        if a + 1.0 > NU_MAX {
            return Err(Error::domain(format!(
                "angular index {l} needs Bessel order {} > {NU_MAX}",
                a + 1.0
            )));
        }
        Ok(a)
    }

    /// True when α = −l exactly.
    fn is_threshold(&self, l: u32) -> bool {
        self.alpha == -(l as f64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClass {
    Negative,
    Zero,
    Positive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueRecord {
    pub l: u32,
    pub m: u32,
    pub mu: f64,
    pub k: f64,
    pub sign_class: SignClass,
    pub multiplicity: u64,
}

/// h̃_{ν+l}(k) = k J_{ν+l+1}(k)/J_{ν+l}(k) − l, where `nu` is the base order.
///
/// Fails with [`Error::Pole`] when k is within 1e−12 of a zero of J_{ν+l}.
pub fn h_tilde(nu: f64, l: u32, k: f64) -> Result<f64> {
    let a = nu + l as f64;
    check_arg(a, k)?;
    if k == 0.0 {
        return Ok(-(l as f64));
    }
    let (ja, jb) = j_pair_weighted(a, k);
    // distance to the nearest zero of J_a, to first order
    let deriv = a / k * ja - jb;
    if deriv != 0.0 && (ja / deriv).abs() < 1e-12 || ja == 0.0 {
        return Err(Error::Pole(format!("k = {k} is a zero of J_{a}")));
    }
    Ok(k * jb / ja - l as f64)
}

/// ĥ_{ν+l}(k) = −k I_{ν+l+1}(k)/I_{ν+l}(k) − l, where `nu` is the base order.
pub fn h_hat(nu: f64, l: u32, k: f64) -> Result<f64> {
    let a = nu + l as f64;
    check_arg(a, k)?;
    if k == 0.0 {
        return Ok(-(l as f64));
    }
    Ok(-k * i_scaled_unchecked(a + 1.0, k) / i_scaled_unchecked(a, k) - l as f64)
}

fn check_arg(a: f64, k: f64) -> Result<()> {
    if !(0.0..=NU_MAX - 1.0).contains(&a) {
        return Err(Error::domain(format!("order {a} out of range")));
    }
    crate::special::EvalPoint::new(k).map(|_| ())
}

/// (f, f′) up to a common positive factor.
fn positive_equation(problem: &BallProblem, l: u32, a: f64, k: f64) -> (f64, f64) {
    let c = problem.alpha + l as f64;
    let (ja, jb) = j_pair_weighted(a, k);
    let f = k * jb - c * ja;
    let df = jb * (problem.alpha - problem.nu()) + ja * (k - c * a / k);
    (f, df)
}

/// (g, g′) up to a common positive factor.
fn negative_equation(problem: &BallProblem, l: u32, a: f64, k: f64) -> (f64, f64) {
    let c = problem.alpha + l as f64;
    let (ia, ib) = i_pair_weighted(a, k);
    let g = c * ia + k * ib;
    let dg = ib * (problem.alpha - problem.nu()) + ia * (k + c * a / k);
    (g, dg)
}

/// The m-th positive root k_{ν+l,m} of k J_{ν+l+1}(k) − (α+l) J_{ν+l}(k).
///
/// For m = 1 this requires α > −l; otherwise the first eigenvalue of branch
/// l is zero or negative and [`Error::Branch`] is returned.
pub fn solve_positive_root(problem: &BallProblem, l: u32, m: u32) -> Result<f64> {
    if m == 0 {
        return Err(Error::domain("radial index m must be >= 1"));
    }
    let a = problem.order(l)?;
    let bracket = if m == 1 {
        if problem.alpha <= -(l as f64) {
            return Err(Error::Branch(format!(
                "no positive m = 1 root for l = {l} when alpha = {} <= -l",
                problem.alpha
            )));
        }
        Bracket::new(0.0, zero(a, 1)?, -1.0)?
    } else {
        // sign of J_{a+1} just above j_{a,m−1} is (−1)^m
        let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
        Bracket::new(zero(a, m - 1)?, zero(a, m)?, sign)?
    };
    newton_bisect(|k| positive_equation(problem, l, a, k), bracket, ROOT_TOL)
}

/// The unique positive root k̂_{ν+l,1} of (α+l) I_{ν+l}(k) + k I_{ν+l+1}(k),
/// which exists only for α < −l.
pub fn solve_negative_root(problem: &BallProblem, l: u32) -> Result<f64> {
    let a = problem.order(l)?;
    if problem.alpha >= -(l as f64) {
        return Err(Error::Branch(format!(
            "no negative eigenvalue for l = {l} when alpha = {} >= -l",
            problem.alpha
        )));
    }
    let mut lo = 0.0;
    let mut hi = 1.0;
    while negative_equation(problem, l, a, hi).0 <= 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > crate::special::X_MAX {
            return Err(Error::domain(format!(
                "negative root for alpha = {} lies beyond X_MAX",
                problem.alpha
            )));
        }
    }
    let bracket = Bracket::new(lo, hi, -1.0)?;
    newton_bisect(|k| negative_equation(problem, l, a, k), bracket, ROOT_TOL)
}

/// The eigenvalue μ_{l,m} with its classification and multiplicity.
pub fn branch_eigenvalue(problem: &BallProblem, l: u32, m: u32) -> Result<EigenvalueRecord> {
    if m == 0 {
        return Err(Error::domain("radial index m must be >= 1"));
    }
    let multiplicity = multiplicity(problem.dim, l);
    let threshold = -(l as f64);
    let (k, mu, sign_class) = if m >= 2 || problem.alpha > threshold {
        let k = solve_positive_root(problem, l, m)?;
        (k, k * k, SignClass::Positive)
    } else if problem.is_threshold(l) {
        (0.0, 0.0, SignClass::Zero)
    } else {
        let k = solve_negative_root(problem, l)?;
        (k, -k * k, SignClass::Negative)
    };
    Ok(EigenvalueRecord {
        l,
        m,
        mu,
        k,
        sign_class,
        multiplicity,
    })
}

/// Residual of the defining equation at the record's root, relative to
/// (1 + |α| + l)·max(|J_{ν+l}|, |J_{ν+l+1}|) (or the I analogue).
pub fn residual(problem: &BallProblem, record: &EigenvalueRecord) -> Result<f64> {
    let a = problem.order(record.l)?;
    let scale = 1.0 + problem.alpha.abs() + record.l as f64;
    let c = problem.alpha + record.l as f64;
    let k = record.k;
    Ok(match record.sign_class {
        SignClass::Zero => 0.0,
        SignClass::Positive => {
            let (ja, jb) = j_pair_weighted(a, k);
            (k * jb - c * ja).abs() / (scale * ja.abs().max(jb.abs()))
        }
        SignClass::Negative => {
            let (ia, ib) = i_pair_weighted(a, k);
            (c * ia + k * ib).abs() / (scale * ia.abs().max(ib.abs()))
        }
    })
}

/// Radial factor of the eigenfunction as the unnormalised closed form:
/// r^{-ν} J_{ν+l}(kr), r^{-ν} I_{ν+l}(kr) or r^l. At r = 0 the finite limit is
/// returned.
pub fn radial_eigenfunction(problem: &BallProblem, record: &EigenvalueRecord, r: f64) -> Result<f64> {
    check_radius(r)?;
    let nu = problem.nu();
    Ok(match record.sign_class {
        SignClass::Zero => r.powi(record.l as i32),
        SignClass::Positive => j_profile(nu, record.l, record.k, r),
        SignClass::Negative => i_profile(nu, record.l, record.k, r),
    })
}

fn check_radius(r: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::domain(format!("radius must lie in [0, 1], got {r}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileKind {
    Oscillatory,
    Growing,
    Power,
}

/// Radial profile scaled so that it behaves like r^l (leading coefficient 1)
/// as r → 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialProfile {
    pub kind: ProfileKind,
    pub nu: f64,
    pub l: u32,
    pub k: f64,
}

impl RadialProfile {
    pub fn new(problem: &BallProblem, record: &EigenvalueRecord) -> Self {
        let kind = match record.sign_class {
            SignClass::Positive => ProfileKind::Oscillatory,
            SignClass::Negative => ProfileKind::Growing,
            SignClass::Zero => ProfileKind::Power,
        };
        RadialProfile {
            kind,
            nu: problem.nu(),
            l: record.l,
            k: record.k,
        }
    }

    pub fn eval(&self, r: f64) -> Result<f64> {
        check_radius(r)?;
        let a = self.nu + self.l as f64;
        let x = self.k * r;
        let lead = r.powi(self.l as i32);
        Ok(match self.kind {
            ProfileKind::Power => lead,
            ProfileKind::Oscillatory => lead * j_normalized(a, x),
            ProfileKind::Growing => lead * i_normalized(a, x),
        })
    }
}

/// Eigenvalues of one problem, sorted ascending; every distinct eigenvalue
/// not exceeding `cutoff` is present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub problem: BallProblem,
    pub records: Vec<EigenvalueRecord>,
    pub cutoff: f64,
}

impl Spectrum {
    /// Records repeated according to multiplicity, i.e. μ₁ ≤ μ₂ ≤ ….
    pub fn expanded(&self) -> impl Iterator<Item = &EigenvalueRecord> + '_ {
        self.records
            .iter()
            .flat_map(|r| std::iter::repeat_n(r, r.multiplicity as usize))
    }

    /// μ_n counted with multiplicity, 1-based.
    pub fn nth(&self, n: usize) -> Option<&EigenvalueRecord> {
        n.checked_sub(1).and_then(|i| self.expanded().nth(i))
    }

    pub fn first_n(&self, n: usize) -> Vec<EigenvalueRecord> {
        self.expanded().take(n).copied().collect()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.records.iter().map(|r| r.multiplicity).sum()
    }
}

fn sort_records(records: &mut [EigenvalueRecord]) {
    records.sort_by(|a, b| a.mu.total_cmp(&b.mu).then(a.l.cmp(&b.l)).then(a.m.cmp(&b.m)));
}

/// Every eigenvalue μ ≤ `cutoff`.
///
/// Branches with l ≤ −α always contribute their non-positive first
/// eigenvalue. Beyond those, the smallest eigenvalue of branch l grows with
/// l, so enumeration stops at the first such branch whose m = 1 eigenvalue
/// exceeds the cutoff.
pub fn assemble_spectrum(problem: &BallProblem, cutoff: f64) -> Result<Spectrum> {
    if !cutoff.is_finite() {
        return Err(Error::domain(format!("cutoff must be finite, got {cutoff}")));
    }
    let mut records = Vec::new();
    for l in 0u32.. {
        let forced = problem.alpha <= -(l as f64);
        let mut m = 1;
        loop {
            let rec = branch_eigenvalue(problem, l, m)?;
            if rec.mu > cutoff {
                break;
            }
            records.push(rec);
            m += 1;
        }
        if m == 1 && !forced {
            break;
        }
    }
    sort_records(&mut records);
    Ok(Spectrum {
        problem: *problem,
        records,
        cutoff,
    })
}

/// The smallest eigenvalues covering at least `count` entries counted with
/// multiplicity. The returned cutoff is the largest eigenvalue included.
pub fn assemble_count(problem: &BallProblem, count: usize) -> Result<Spectrum> {
    if count == 0 {
        return Err(Error::domain("count must be >= 1"));
    }
    let mut cutoff = 10.0f64;
    loop {
        let spectrum = assemble_spectrum(problem, cutoff)?;
        if spectrum.total_multiplicity() >= count as u64 {
            let mut seen = 0u64;
            let mut last = f64::NEG_INFINITY;
            for r in &spectrum.records {
                if seen >= count as u64 {
                    break;
                }
                seen += r.multiplicity;
                last = r.mu;
            }
            let records = spectrum.records.into_iter().filter(|r| r.mu <= last).collect();
            return Ok(Spectrum {
                problem: *problem,
                records,
                cutoff: last,
            });
        }
        cutoff = if cutoff <= 0.0 { 10.0 } else { cutoff * 2.0 };
    }
}

/// μ₁, μ₂ and μ₂/μ₁.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FirstTwo {
    pub mu1: f64,
    pub mu2: f64,
    pub ratio: f64,
}

/// The two lowest eigenvalues counted with multiplicity.
///
/// μ₁ is always μ_{0,1}. Since μ_{l,1} increases with l and μ_{l,m} with m,
/// μ₂ is the smaller of μ_{0,2} and μ_{1,1} (the latter has multiplicity at
/// least 2). The ratio is reported as 0 when μ₂ = 0 and is an error when
/// μ₁ = 0.
pub fn first_two(problem: &BallProblem) -> Result<FirstTwo> {
    let mu1 = branch_eigenvalue(problem, 0, 1)?.mu;
    let mu2 = branch_eigenvalue(problem, 1, 1)?
        .mu
        .min(branch_eigenvalue(problem, 0, 2)?.mu);
    if mu1 == 0.0 {
        return Err(Error::RatioUndefined);
    }
    let ratio = if mu2 == 0.0 { 0.0 } else { mu2 / mu1 };
    Ok(FirstTwo { mu1, mu2, ratio })
}

/// Number of distinct negative eigenvalues and whether 0 is an eigenvalue.
///
/// Branch l contributes a negative eigenvalue iff α < −l, and a zero
/// eigenvalue iff α = −l.
pub fn negative_count(problem: &BallProblem) -> (usize, bool) {
    let alpha = problem.alpha;
    if alpha >= 0.0 {
        return (0, alpha == 0.0);
    }
    let count = (-alpha).ceil() as usize;
    (count, alpha.fract() == 0.0)
}
