//! Spherical-harmonic bookkeeping on S^{N-1}: the dimension of the degree-l
//! eigenspace and a zonal representative of it.

use crate::error::{Error, Result};

fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Dimension of the space of degree-l spherical harmonics on S^{N−1}, i.e.
/// the multiplicity of the ball eigenvalue μ_{l,m}:
/// `C(l+N−1, l) − C(l+N−3, l−2)`.
pub fn multiplicity(dim: u32, l: u32) -> u64 {
    assert!(dim >= 2, "multiplicity needs N >= 2");
    let (n, l) = (dim as i64, l as i64);
    binomial(l + n - 1, l) - binomial(l + n - 3, l - 2)
}

/// Zonal representative G_l(cos θ) normalised to 1 at cos θ = 1.
///
/// N = 2 gives cos(lθ) (Chebyshev T_l), N = 3 the Legendre polynomial P_l and
/// N ≥ 4 the normalised Gegenbauer polynomial C_l^{(N/2−1)}(t) / C_l^{(N/2−1)}(1).
pub fn zonal_harmonic(dim: u32, l: u32, cos_theta: f64) -> Result<f64> {
    if dim < 2 {
        return Err(Error::domain("zonal harmonics need N >= 2"));
    }
    if !(-1.0..=1.0).contains(&cos_theta) {
        return Err(Error::domain(format!("cos(theta) = {cos_theta} outside [-1, 1]")));
    }
    let t = cos_theta;
    if l == 0 {
        return Ok(1.0);
    }
    if dim == 2 {
        // T_{n+1} = 2t T_n − T_{n−1}
        let (mut prev, mut cur) = (1.0, t);
        for _ in 1..l {
            let next = 2.0 * t * cur - prev;
            prev = cur;
            cur = next;
        }
        return Ok(cur);
    }
    // (n+1) C_{n+1} = 2(n+λ) t C_n − (n+2λ−1) C_{n−1}, run on the normalised
    // sequence c_n = C_n / C_n(1) so nothing grows with l.
    let lambda = dim as f64 / 2.0 - 1.0;
    let (mut prev, mut cur) = (1.0, t);
    for n in 1..l {
        let n = n as f64;
        // C_n(1) = (2λ)_n / n!, so C_{n+1}(1)/C_n(1) = (n+2λ)/(n+1)
        let a = 2.0 * (n + lambda) / (n + 2.0 * lambda);
        let b = n / (n + 2.0 * lambda);
        let next = a * t * cur - b * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}
