//! Evaluation kernels behind the public Bessel functions.
//!
//! Regimes for both J and I:
//!
//! * the ascending power series when `x²/4 ≤ ν + 1`; the terms then decrease
//!   monotonically from the first one, so the alternating J series loses no
//!   digits to cancellation;
//! * Hankel's asymptotic expansion for `x ≥ max(40, ν²/2)`, where the CF1
//!   iteration count (about x) would otherwise let rounding accumulate;
//! * for `x ≥ 40` and `ν ≤ 0.9x`, Hankel seeds at the two lowest orders of
//!   the same fractional part followed by upward recurrence, which is stable
//!   while the order stays below the argument;
//! * Steed's method everywhere else (here always `x > 2`): the continued
//!   fraction CF1 for `f'/f` at order ν, downward recurrence to an order μ
//!   near the argument, and the complex continued fraction CF2 (Steed/Temme)
//!   that fixes the normalisation through the Wronskian.
//!
//! The modified-function kernel returns `e^{-x} I` so the ratio of adjacent
//! orders never overflows.

use super::gamma::{gamma, ln_gamma};
use std::f64::consts::PI;

const EPS: f64 = f64::EPSILON;
const FPMIN: f64 = f64::MIN_POSITIVE / f64::EPSILON;
const RESCALE_ABOVE: f64 = 1e250;

/// True when the power series is the evaluation path for (ν, x).
pub(crate) fn in_series_region(nu: f64, x: f64) -> bool {
    0.25 * x * x <= nu + 1.0
}

/// The I series has no cancellation, so it is used further out than the J
/// series: up to x²/4 ≤ 16(ν+1), capped so e^x stays representable.
pub(crate) fn in_i_series_region(nu: f64, x: f64) -> bool {
    x < 2.0 || (0.25 * x * x <= 16.0 * (nu + 1.0) && x < 500.0)
}

/// True when J is evaluated from the Hankel expansion.
pub(crate) fn in_hankel_region(nu: f64, x: f64) -> bool {
    x >= 40.0 && x >= 0.5 * nu * nu
}

/// Hankel expansion J_ν(x) = √(2/(πx)) (P cos ω − Q sin ω), ω = x − (ν/2 + 1/4)π.
pub(crate) fn j_hankel(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        let size = term.abs();
        if size > last {
            break;
        }
        last = size;
        // a_k enters P (even k) or Q (odd k) with sign (-1)^{floor(k/2)}
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            p += sign * term;
        } else {
            q += sign * term;
        }
        if size < 0.25 * EPS * p.abs().max(q.abs()) {
            break;
        }
    }
    // reduce the phase shift exactly before multiplying by π
    let turns = (0.5 * nu + 0.25) % 2.0;
    let (sc, cc) = (turns * PI).sin_cos();
    let (sx, cx) = x.sin_cos();
    let cos_w = cx * cc + sx * sc;
    let sin_w = sx * cc - cx * sc;
    (2.0 / (PI * x)).sqrt() * (p * cos_w - q * sin_w)
}

/// True when J is evaluated by upward recurrence from Hankel seeds.
pub(crate) fn in_recurrence_region(nu: f64, x: f64) -> bool {
    x >= 40.0 && nu <= 0.9 * x
}

pub(crate) fn j_upward(nu: f64, x: f64) -> f64 {
    let steps = nu.floor() as usize;
    let base = nu - steps as f64;
    let mut prev = j_hankel(base, x);
    if steps == 0 {
        return prev;
    }
    let mut cur = j_hankel(base + 1.0, x);
    for i in 1..steps {
        let order = base + i as f64;
        let next = 2.0 * order / x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn max_iterations(x: f64) -> usize {
    20_000 + 4 * x as usize
}

/// (x/2)^ν / Γ(ν+1), computed in log space once Γ would overflow.
fn series_prefactor(nu: f64, x: f64) -> f64 {
    if nu == 0.0 {
        return 1.0;
    }
    if x == 0.0 {
        return 0.0;
    }
    if nu <= 170.0 {
        (0.5 * x).powf(nu) / gamma(nu + 1.0)
    } else {
        (nu * (0.5 * x).ln() - ln_gamma(nu + 1.0)).exp()
    }
}

/// Σ_k s^k (x²/4)^k / (k! (ν+1)_k) with s = -1 for J and +1 for I.
pub(crate) fn reduced_series(nu: f64, x: f64, sign: f64) -> f64 {
    let q = 0.25 * x * x * sign;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 1.0;
    loop {
        term *= q / (k * (nu + k));
        sum += term;
        if term.abs() <= 0.5 * EPS * sum.abs() || k > 5_000.0 {
            break;
        }
        k += 1.0;
    }
    sum
}

/// J_ν(x) / (x/2)^ν via the power series. Exact at x = 0.
pub(crate) fn j_reduced_series(nu: f64, x: f64) -> f64 {
    let lead = if nu <= 170.0 {
        1.0 / gamma(nu + 1.0)
    } else {
        (-ln_gamma(nu + 1.0)).exp()
    };
    lead * reduced_series(nu, x, -1.0)
}

/// I_ν(x) / (x/2)^ν via the power series. Exact at x = 0.
pub(crate) fn i_reduced_series(nu: f64, x: f64) -> f64 {
    let lead = if nu <= 170.0 {
        1.0 / gamma(nu + 1.0)
    } else {
        (-ln_gamma(nu + 1.0)).exp()
    };
    lead * reduced_series(nu, x, 1.0)
}

pub(crate) fn j_series(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    series_prefactor(nu, x) * reduced_series(nu, x, -1.0)
}

pub(crate) fn i_series(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    series_prefactor(nu, x) * reduced_series(nu, x, 1.0)
}

/// Steed's method for (J_ν(x), J'_ν(x)). Requires x ≥ 2.
pub(crate) fn j_steed(nu: f64, x: f64) -> (f64, f64) {
    debug_assert!(x >= 2.0);
    let maxit = max_iterations(x);
    let nl = (nu - x + 1.5).floor().max(0.0) as usize;
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let w = xi2 / PI;

    // CF1: J'_ν / J_ν, tracking the sign of J_ν through the denominators
    let mut isign = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 0..maxit {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            break;
        }
    }

    // downward recurrence from ν to μ on unnormalised values
    let mut rjl = isign * FPMIN;
    let mut rjpl = h * rjl;
    let mut rjl1 = rjl;
    let mut rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
        if rjl.abs() > RESCALE_ABOVE {
            rjl /= RESCALE_ABOVE;
            rjpl /= RESCALE_ABOVE;
            rjl1 /= RESCALE_ABOVE;
            rjp1 /= RESCALE_ABOVE;
        }
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    // CF2: p + iq = (J'_μ + iY'_μ) / (J_μ + iY_μ)
    let mut a = 0.25 - xmu2;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fct = a * xi / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let mut temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    for i in 2..maxit {
        a += 2.0 * (i as f64 - 1.0);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < EPS {
            break;
        }
    }
    let gam = (p - f) / q;
    let rjmu = (w / ((p - f) * gam + q)).sqrt().copysign(rjl);
    let scale = rjmu / rjl;
    (rjl1 * scale, rjp1 * scale)
}

/// Steed's method for (e^{-x} I_ν(x), e^{-x} I'_ν(x)). Requires x ≥ 2.
pub(crate) fn i_steed_scaled(nu: f64, x: f64) -> (f64, f64) {
    debug_assert!(x >= 2.0);
    let maxit = max_iterations(x);
    let nl = (nu + 0.5).floor() as usize;
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;

    // CF1: I'_ν / I_ν
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    for _ in 0..maxit {
        b += xi2;
        d = 1.0 / (b + d);
        c = b + 1.0 / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }

    let mut ril = FPMIN;
    let mut ripl = h * ril;
    let mut ril1 = ril;
    let mut rip1 = ripl;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let ritemp = fact * ril + ripl;
        fact -= xi;
        ripl = fact * ritemp + ril;
        ril = ritemp;
        if ril.abs() > RESCALE_ABOVE {
            ril /= RESCALE_ABOVE;
            ripl /= RESCALE_ABOVE;
            ril1 /= RESCALE_ABOVE;
            rip1 /= RESCALE_ABOVE;
        }
    }
    let f = ripl / ril;

    // CF2 (Steed/Temme) for e^{x} K_μ and e^{x} K_{μ+1}
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - xmu2;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..maxit {
        a -= 2.0 * (i as f64 - 1.0);
        c = -a * c / i as f64;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    h *= a1;
    let rkmu = (PI / (2.0 * x)).sqrt() / s;
    let rk1 = rkmu * (xmu + x + 0.5 - h) * xi;
    let rkmup = xmu * xi * rkmu - rk1;
    let rimu = xi / (f * rkmu - rkmup);
    (rimu * ril1 / ril, rimu * rip1 / ril)
}
