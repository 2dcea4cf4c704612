//! Finite-difference cross-checks for the closed-form spectra.
//!
//! The radial equation −(r^{N−1}v′)′/r^{N−1} + κ_l v/r² = μv, κ_l = l(l+N−2),
//! is discretised by a vertex-centred finite-volume scheme on r_i = i/n:
//! fluxes r_{i±1/2}^{N−1}/h between nodes, lumped cell weights r_i^{N−1}·|cell|
//! and the Robin term α on the last node. For l = 0 the node r = 0 carries
//! the cell [0, h/2] of volume (h/2)^N/N; for l ≥ 1 it is pinned to zero.
//! The result is a symmetric-definite pencil A v = μ W v with W diagonal,
//! solved as the symmetric tridiagonal W^{−1/2} A W^{−1/2}.

use serde::{Deserialize, Serialize};

use crate::ball::{assemble_spectrum, multiplicity, BallProblem};
use crate::error::{Error, Result};
use crate::interval::{solve_interval, IntervalProblem};

pub const MIN_GRID: usize = 16;
/// Discrepancy allowance 10·h²·max(1, μ²)·(1 + |α|).
pub const GUARDRAIL: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadialGrid {
    n: usize,
    dim: u32,
    l: u32,
}

impl RadialGrid {
    pub fn new(n: usize, dim: u32, l: u32) -> Result<Self> {
        if n < MIN_GRID {
            return Err(Error::domain(format!("grid needs n >= {MIN_GRID}, got {n}")));
        }
        if dim < 2 {
            return Err(Error::domain(format!("radial grid needs dim >= 2, got {dim}")));
        }
        Ok(RadialGrid { n, dim, l })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> f64 {
        1.0 / self.n as f64
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn l(&self) -> u32 {
        self.l
    }
}

/// Symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiagonal {
    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly below x (Sturm sequence count).
    pub fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut q = 1.0;
        for i in 0..self.len() {
            let coupling = if i == 0 { 0.0 } else { self.off[i - 1] * self.off[i - 1] };
            q = self.diag[i] - x - if i == 0 { 0.0 } else { coupling / q };
            if q == 0.0 {
                q = -f64::EPSILON * (self.diag[i].abs() + x.abs()).max(f64::MIN_POSITIVE);
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..self.len() {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < self.len() { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// The `count` smallest eigenvalues by bisection.
    pub fn lowest_eigenvalues(&self, count: usize) -> Result<Vec<f64>> {
        if count > self.len() {
            return Err(Error::domain(format!(
                "asked for {count} eigenvalues of a {}x{} matrix",
                self.len(),
                self.len()
            )));
        }
        let (glo, ghi) = self.gershgorin();
        let span = ghi - glo;
        let mut out = Vec::with_capacity(count);
        let mut floor = glo - 1e-12 * span.max(1.0);
        for j in 0..count {
            let (mut lo, mut hi) = (floor, ghi + 1e-12 * span.max(1.0));
            // invariant: count_below(lo) <= j < count_below(hi)
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if self.count_below(mid) > j {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            let value = 0.5 * (lo + hi);
            out.push(value);
            floor = lo;
        }
        Ok(out)
    }

    /// Eigenvector for an eigenvalue estimate `shift`, by inverse iteration.
    pub fn eigenvector(&self, shift: f64) -> Vec<f64> {
        let n = self.len();
        let mut x = vec![1.0; n];
        for _ in 0..3 {
            x = solve_shifted(self, shift, &x);
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            if norm == 0.0 || !norm.is_finite() {
                break;
            }
            x.iter_mut().for_each(|v| *v /= norm);
        }
        x
    }
}

/// Solves (T − shift·I) x = b by Gaussian elimination with partial
/// pivoting; exact singularity is nudged to a tiny pivot.
fn solve_shifted(t: &Tridiagonal, shift: f64, b: &[f64]) -> Vec<f64> {
    let n = t.len();
    let scale = t
        .diag
        .iter()
        .fold(0.0f64, |m, d| m.max(d.abs()))
        .max(shift.abs())
        .max(1.0);
    let tiny = f64::EPSILON * scale;
    // row i holds entries in columns i, i+1, i+2 after pivoting
    let mut d: Vec<f64> = t.diag.iter().map(|v| v - shift).collect();
    let mut du: Vec<f64> = t.off.clone();
    du.push(0.0);
    let mut du2 = vec![0.0; n];
    let mut dl: Vec<f64> = t.off.clone();
    let mut rhs = b.to_vec();
    for i in 0..n.saturating_sub(1) {
        if dl[i].abs() > d[i].abs() {
            // swap rows i and i+1
            let (a0, a1, a2) = (d[i], du[i], du2[i]);
            d[i] = dl[i];
            du[i] = d[i + 1];
            du2[i] = du[i + 1];
            let factor = a0 / d[i];
            d[i + 1] = a1 - factor * du[i];
            du[i + 1] = a2 - factor * du2[i];
            rhs.swap(i, i + 1);
            rhs[i + 1] -= factor * rhs[i];
        } else {
            if d[i] == 0.0 {
                d[i] = tiny;
            }
            let factor = dl[i] / d[i];
            d[i + 1] -= factor * du[i];
            rhs[i + 1] -= factor * rhs[i];
        }
        dl[i] = 0.0;
    }
    if d[n - 1] == 0.0 {
        d[n - 1] = tiny;
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let mut s = rhs[i];
        if i + 1 < n {
            s -= du[i] * x[i + 1];
        }
        if i + 2 < n {
            s -= du2[i] * x[i + 2];
        }
        x[i] = s / d[i];
    }
    x
}

/// The pencil A v = μ W v for one problem, plus the pieces of the discrete
/// energy.
#[derive(Debug, Clone, PartialEq)]
pub struct Pencil {
    /// Stiffness diagonal.
    pub diag: Vec<f64>,
    /// Coupling flux between unknowns i and i+1 (A_{i,i+1} = −flux_i).
    pub flux: Vec<f64>,
    /// Lumped mass.
    pub weight: Vec<f64>,
    /// Diagonal potential (κ, boundary and pinned-node terms) in A.
    pub potential: Vec<f64>,
    /// Node positions of the unknowns.
    pub nodes: Vec<f64>,
}

impl Pencil {
    /// W^{−1/2} A W^{−1/2}.
    pub fn symmetric(&self) -> Tridiagonal {
        let sw: Vec<f64> = self.weight.iter().map(|w| w.sqrt()).collect();
        Tridiagonal {
            diag: self.diag.iter().zip(&self.weight).map(|(d, w)| d / w).collect(),
            off: self
                .flux
                .iter()
                .enumerate()
                .map(|(i, f)| -f / (sw[i] * sw[i + 1]))
                .collect(),
        }
    }

    /// Largest relative asymmetry of W^{1/2} (W^{−1}A) W^{−1/2}, assembled
    /// row by row from the non-symmetric operator.
    pub fn symmetry_defect(&self) -> f64 {
        let n = self.weight.len();
        let mut worst = 0.0f64;
        for i in 0..n.saturating_sub(1) {
            let upper = -self.flux[i] / self.weight[i];
            let lower = -self.flux[i] / self.weight[i + 1];
            let s_up = self.weight[i].sqrt() * upper / self.weight[i + 1].sqrt();
            let s_lo = self.weight[i + 1].sqrt() * lower / self.weight[i].sqrt();
            let scale = s_up.abs().max(s_lo.abs());
            if scale > 0.0 {
                worst = worst.max((s_up - s_lo).abs() / scale);
            }
        }
        worst
    }

    /// vᵀAv / vᵀWv.
    pub fn rayleigh(&self, v: &[f64]) -> f64 {
        let mut num: f64 = v.iter().zip(&self.potential).map(|(x, p)| p * x * x).sum();
        for (i, f) in self.flux.iter().enumerate() {
            let dv = v[i + 1] - v[i];
            num += f * dv * dv;
        }
        let den: f64 = v.iter().zip(&self.weight).map(|(x, w)| w * x * x).sum();
        num / den
    }

    fn from_parts(flux: Vec<f64>, potential: Vec<f64>, weight: Vec<f64>, nodes: Vec<f64>) -> Self {
        let n = weight.len();
        let mut diag = potential.clone();
        for (i, f) in flux.iter().enumerate() {
            diag[i] += f;
            diag[i + 1] += f;
        }
        debug_assert_eq!(diag.len(), n);
        Pencil {
            diag,
            flux,
            weight,
            potential,
            nodes,
        }
    }

    /// Lowest `count` eigenpairs. Eigenvalues are polished by the Rayleigh
    /// quotient of the inverse-iteration vector; vectors are returned in the
    /// original (unweighted) variables.
    pub fn eigenpairs(&self, count: usize) -> Result<Vec<(f64, Vec<f64>)>> {
        let t = self.symmetric();
        let values = t.lowest_eigenvalues(count)?;
        let sw: Vec<f64> = self.weight.iter().map(|w| w.sqrt()).collect();
        values
            .into_iter()
            .map(|lambda| {
                let y = t.eigenvector(lambda);
                let v: Vec<f64> = y.iter().zip(&sw).map(|(a, s)| a / s).collect();
                let mu = self.rayleigh(&v);
                if !mu.is_finite() {
                    return Err(Error::Convergence(format!("eigenvector near {lambda} degenerated")));
                }
                Ok((mu, v))
            })
            .collect()
    }
}

/// Discrete radial pencil for branch `grid.l` of `problem`.
pub fn radial_pencil(problem: &BallProblem, grid: &RadialGrid) -> Pencil {
    let n = grid.n;
    let h = grid.h();
    let big_n = grid.dim as i32;
    let l = grid.l;
    let kappa = (l as f64) * (l as f64 + big_n as f64 - 2.0);
    let first = if l == 0 { 0 } else { 1 };
    let mut weight = Vec::with_capacity(n + 1 - first);
    let mut potential = Vec::with_capacity(n + 1 - first);
    let mut nodes = Vec::with_capacity(n + 1 - first);
    for i in first..=n {
        let r = i as f64 * h;
        let cell = if i == n { 0.5 * h } else { h };
        let w = if i == 0 {
            (0.5 * h).powi(big_n) / big_n as f64
        } else {
            r.powi(big_n - 1) * cell
        };
        let mut p = if i == 0 { 0.0 } else { kappa * r.powi(big_n - 3) * cell };
        if i == 1 && l > 0 {
            // coupling to the pinned node v(0) = 0
            p += (0.5 * h).powi(big_n - 1) / h;
        }
        if i == n {
            p += problem.alpha();
        }
        weight.push(w);
        potential.push(p);
        nodes.push(r);
    }
    let flux = (first..n).map(|i| ((i as f64 + 0.5) * h).powi(big_n - 1) / h).collect();
    Pencil::from_parts(flux, potential, weight, nodes)
}

fn check_count(count: usize, n: usize) -> Result<()> {
    if count == 0 || count > n / 4 {
        return Err(Error::domain(format!("count must be in 1..={} for n = {n}", n / 4)));
    }
    Ok(())
}

/// The `count` smallest discrete eigenvalues of branch `grid.l`.
pub fn fd_radial_eigenvalues(problem: &BallProblem, grid: &RadialGrid, count: usize) -> Result<Vec<f64>> {
    Ok(fd_radial_eigenpairs(problem, grid, count)?
        .into_iter()
        .map(|(mu, _)| mu)
        .collect())
}

/// Eigenvalues with eigenvectors sampled at r_i = i/n (including r = 0,
/// where the value is 0 for l ≥ 1).
pub fn fd_radial_eigenpairs(problem: &BallProblem, grid: &RadialGrid, count: usize) -> Result<Vec<(f64, Vec<f64>)>> {
    if grid.dim != problem.dim() {
        return Err(Error::domain("grid and problem dimensions differ"));
    }
    check_count(count, grid.n)?;
    let pencil = radial_pencil(problem, grid);
    let mut pairs = pencil.eigenpairs(count)?;
    if grid.l > 0 {
        for (_, v) in &mut pairs {
            v.insert(0, 0.0);
        }
    }
    Ok(pairs)
}

/// Discrete pencil for the interval: nodes x_i = i/n with half cells at both
/// ends and the Robin term α on each end node.
pub fn interval_pencil(problem: &IntervalProblem, n: usize) -> Pencil {
    let h = 1.0 / n as f64;
    let weight = (0..=n).map(|i| if i == 0 || i == n { 0.5 * h } else { h }).collect();
    let mut potential = vec![0.0; n + 1];
    potential[0] = problem.alpha();
    potential[n] = problem.alpha();
    let nodes = (0..=n).map(|i| i as f64 * h).collect();
    Pencil::from_parts(vec![1.0 / h; n], potential, weight, nodes)
}

/// The `count` smallest discrete eigenvalues on (0, 1).
pub fn fd_interval_eigenvalues(problem: &IntervalProblem, n: usize, count: usize) -> Result<Vec<f64>> {
    if n < MIN_GRID {
        return Err(Error::domain(format!("grid needs n >= {MIN_GRID}, got {n}")));
    }
    check_count(count, n)?;
    Ok(interval_pencil(problem, n)
        .eigenpairs(count)?
        .into_iter()
        .map(|(mu, _)| mu)
        .collect())
}

/// Dimension of the space of harmonic homogeneous polynomials of degree l in
/// N variables, as the nullity of Δ: P_l → P_{l−2} on the monomial basis.
pub fn harmonic_dimension_bruteforce(dim: u32, l: u32) -> u64 {
    let top = monomials(dim as usize, l);
    if l < 2 {
        return top.len() as u64;
    }
    let low = monomials(dim as usize, l - 2);
    let index: std::collections::HashMap<&[u32], usize> =
        low.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    // columns: monomials of degree l; rows: degree l−2
    let mut matrix = vec![vec![0.0; top.len()]; low.len()];
    for (c, mono) in top.iter().enumerate() {
        for var in 0..dim as usize {
            let e = mono[var];
            if e >= 2 {
                let mut image = mono.clone();
                image[var] -= 2;
                matrix[index[image.as_slice()]][c] += (e * (e - 1)) as f64;
            }
        }
    }
    top.len() as u64 - rank(&mut matrix) as u64
}

fn monomials(vars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn go(vars: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == vars {
            prefix.push(degree);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=degree {
            prefix.push(e);
            go(vars, degree - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(vars, degree, &mut Vec::with_capacity(vars), &mut out);
    out
}

fn rank(a: &mut [Vec<f64>]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows)
            .max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))
            .unwrap();
        if a[pivot][c].abs() < 1e-9 {
            continue;
        }
        a.swap(rank, pivot);
        for r in rank + 1..rows {
            let factor = a[r][c] / a[rank][c];
            if factor != 0.0 {
                let (top, rest) = a.split_at_mut(r);
                for (x, y) in rest[0][c..cols].iter_mut().zip(&top[rank][c..cols]) {
                    *x -= factor * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// One closed-form eigenvalue compared across grids.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleEntry {
    pub l: u32,
    pub m: u32,
    pub closed_form: f64,
    /// Discrete values, one per grid.
    pub per_grid: Vec<f64>,
    /// |discrete − closed| on the finest grid.
    pub abs_error: f64,
    /// Richardson order estimate from the last three grids.
    pub order: Option<f64>,
    pub within_guardrail: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub grids: Vec<usize>,
    pub cutoff: f64,
    pub entries: Vec<OracleEntry>,
    pub closed_form: Vec<f64>,
    pub discrete: Vec<f64>,
    pub abs_errors: Vec<f64>,
    pub max_abs_error: f64,
    /// Smallest Richardson order over the entries that have one.
    pub order: Option<f64>,
    /// No discrete eigenvalue below the cutoff lacks a closed-form partner.
    pub complete: bool,
    /// Multiplicities agree with the brute-force count where it is run.
    pub multiplicities_agree: bool,
    pub notes: Vec<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.complete && self.multiplicities_agree && self.entries.iter().all(|e| e.within_guardrail)
    }

    fn assemble(
        grids: Vec<usize>,
        cutoff: f64,
        entries: Vec<OracleEntry>,
        complete: bool,
        multiplicities_agree: bool,
        notes: Vec<String>,
    ) -> Self {
        let closed_form = entries.iter().map(|e| e.closed_form).collect();
        let discrete = entries.iter().map(|e| *e.per_grid.last().unwrap()).collect();
        let abs_errors: Vec<f64> = entries.iter().map(|e| e.abs_error).collect();
        let max_abs_error = abs_errors.iter().copied().fold(0.0, f64::max);
        let order = entries.iter().filter_map(|e| e.order).reduce(f64::min);
        OracleReport {
            grids,
            cutoff,
            entries,
            closed_form,
            discrete,
            abs_errors,
            max_abs_error,
            order,
            complete,
            multiplicities_agree,
            notes,
        }
    }
}

/// Observed convergence order from the last three values of a sequence on
/// grids n₁ < n₂ < n₃.
pub fn richardson_order(values: &[f64], grids: &[usize]) -> Option<f64> {
    let k = values.len();
    if k < 3 || grids.len() != k {
        return None;
    }
    let d1 = (values[k - 3] - values[k - 2]).abs();
    let d2 = (values[k - 2] - values[k - 1]).abs();
    let ratio = grids[k - 1] as f64 / grids[k - 2] as f64;
    // differences at rounding level carry no order information
    let floor = 1e-13 * values[k - 1].abs().max(1.0);
    if d2 <= floor || d1 <= floor {
        return None;
    }
    Some((d1 / d2).ln() / ratio.ln())
}

/// Allowed |discrete − closed| on a grid of n cells. The Robin end node
/// contributes an O(α h²) term of its own, hence the (1 + |α|) factor.
pub fn guardrail(mu: f64, alpha: f64, n: usize) -> f64 {
    let h = 1.0 / n as f64;
    GUARDRAIL * h * h * mu.abs().max(1.0).powi(2) * (1.0 + alpha.abs())
}

fn check_grids(grids: &[usize]) -> Result<()> {
    if grids.is_empty() || grids.windows(2).any(|w| w[0] >= w[1]) || grids[0] < MIN_GRID {
        return Err(Error::domain(format!(
            "grids must be increasing and start at >= {MIN_GRID}, got {grids:?}"
        )));
    }
    Ok(())
}

fn entry(l: u32, m: u32, closed: f64, alpha: f64, per_grid: Vec<f64>, grids: &[usize]) -> OracleEntry {
    let finest = *per_grid.last().unwrap();
    let abs_error = (finest - closed).abs();
    OracleEntry {
        l,
        m,
        closed_form: closed,
        order: richardson_order(&per_grid, grids),
        within_guardrail: abs_error <= guardrail(closed, alpha, *grids.last().unwrap()),
        abs_error,
        per_grid,
    }
}

/// Compares every closed-form eigenvalue ≤ `cutoff` against the discrete
/// radial problem of its branch on each grid.
pub fn verify_spectrum(problem: &BallProblem, cutoff: f64, grids: &[usize]) -> Result<OracleReport> {
    check_grids(grids)?;
    let spectrum = assemble_spectrum(problem, cutoff)?;
    let finest = *grids.last().unwrap();
    let top_l = spectrum.records.iter().map(|r| r.l).max();
    let mut entries = Vec::new();
    let mut complete = true;
    let mut multiplicities_agree = true;
    let mut notes = Vec::new();

    // one extra branch beyond the last populated one, to confirm it is empty
    let last_l = top_l.map_or(0, |l| l + 1);
    for l in 0..=last_l {
        let mut closed: Vec<_> = spectrum.records.iter().filter(|r| r.l == l).collect();
        closed.sort_by_key(|r| r.m);
        let count = closed.len();

        let mut per_grid: Vec<Vec<f64>> = vec![Vec::new(); count];
        for &n in grids {
            if count == 0 {
                break;
            }
            let grid = RadialGrid::new(n, problem.dim(), l)?;
            let values = fd_radial_eigenvalues(problem, &grid, count)?;
            for (slot, v) in per_grid.iter_mut().zip(values) {
                slot.push(v);
            }
        }
        for (rec, values) in closed.iter().zip(per_grid) {
            entries.push(entry(l, rec.m, rec.mu, problem.alpha(), values, grids));
        }

        // the next discrete eigenvalue of the branch must lie above the cutoff
        let grid = RadialGrid::new(finest, problem.dim(), l)?;
        let next = fd_radial_eigenvalues(problem, &grid, count + 1)?[count];
        if next + guardrail(next, problem.alpha(), finest) < cutoff {
            complete = false;
            notes.push(format!(
                "branch l = {l}: discrete eigenvalue {next} below the cutoff has no closed-form partner"
            ));
        }

        if problem.dim() <= 6 && l <= 6 && count > 0 {
            let brute = harmonic_dimension_bruteforce(problem.dim(), l);
            let formula = multiplicity(problem.dim(), l);
            if brute != formula || closed.iter().any(|r| r.multiplicity != brute) {
                multiplicities_agree = false;
                notes.push(format!("branch l = {l}: multiplicity {formula} vs brute force {brute}"));
            }
        }
    }
    entries.sort_by(|a, b| a.closed_form.total_cmp(&b.closed_form).then(a.l.cmp(&b.l)));
    Ok(OracleReport::assemble(
        grids.to_vec(),
        cutoff,
        entries,
        complete,
        multiplicities_agree,
        notes,
    ))
}

/// Interval analogue of [`verify_spectrum`].
pub fn verify_interval(problem: &IntervalProblem, cutoff: f64, grids: &[usize]) -> Result<OracleReport> {
    check_grids(grids)?;
    if !cutoff.is_finite() {
        return Err(Error::domain("cutoff must be finite"));
    }
    let mut count = 4;
    let pairs = loop {
        let pairs = solve_interval(problem, count)?;
        if pairs.last().unwrap().mu > cutoff {
            break pairs;
        }
        count *= 2;
    };
    let closed: Vec<_> = pairs.iter().filter(|p| p.mu <= cutoff).collect();
    let count = closed.len();
    let finest = *grids.last().unwrap();
    let mut notes = Vec::new();
    let mut entries = Vec::new();
    let mut complete = true;
    if count > 0 {
        let mut per_grid: Vec<Vec<f64>> = vec![Vec::new(); count];
        for &n in grids {
            let values = fd_interval_eigenvalues(problem, n, count)?;
            for (slot, v) in per_grid.iter_mut().zip(values) {
                slot.push(v);
            }
        }
        for (pair, values) in closed.iter().zip(per_grid) {
            entries.push(entry(0, pair.m, pair.mu, problem.alpha(), values, grids));
        }
    }
    let next = fd_interval_eigenvalues(problem, finest, count + 1)?[count];
    if next + guardrail(next, problem.alpha(), finest) < cutoff {
        complete = false;
        notes.push(format!(
            "discrete eigenvalue {next} below the cutoff has no closed-form partner"
        ));
    }
    Ok(OracleReport::assemble(
        grids.to_vec(),
        cutoff,
        entries,
        complete,
        true,
        notes,
    ))
}
