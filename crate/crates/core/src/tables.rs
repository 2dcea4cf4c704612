//! Reference tables of first Robin roots and μ₂/μ₁ on the disk and the
//! 3-ball.
//!
//! Ratio rows are formed from the k values after rounding them to the
//! printed number of decimals, so a printed table is self-consistent: the
//! ratio column can be recomputed from the k columns shown next to it. The
//! unrounded ratio is available from [`crate::ball::first_two`].

use serde::{Deserialize, Serialize};

use crate::ball::{solve_negative_root, solve_positive_root, BallProblem};
use crate::error::Result;

pub const TABLE1_ALPHAS: [f64; 7] = [1.0, 2.0, 3.0, 4.0, 5.0, 100.0, 1000.0];
pub const TABLE2_ALPHAS: [f64; 5] = [-0.1, -0.3, -0.5, -0.7, -0.9];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    /// k_{ν+l,1}
    Positive,
    /// k̂_{ν,1}
    Negative,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootRow {
    pub kind: RootKind,
    pub l: u32,
    pub dim: u32,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    pub dim: u32,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub alphas: Vec<f64>,
    pub roots: Vec<RootRow>,
    pub ratios: Vec<RatioRow>,
    pub digits: usize,
}

fn round_to(x: f64, digits: usize) -> f64 {
    // via the decimal formatter, so the value matches what gets printed
    format!("{x:.digits$}").parse().expect("formatted float parses")
}

fn row(kind: RootKind, l: u32, dim: u32, alphas: &[f64]) -> Result<RootRow> {
    let values = alphas
        .iter()
        .map(|&alpha| {
            let p = BallProblem::new(dim, alpha)?;
            match kind {
                RootKind::Positive => solve_positive_root(&p, l, 1),
                RootKind::Negative => solve_negative_root(&p, l),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RootRow { kind, l, dim, values })
}

fn find(rows: &[RootRow], kind: RootKind, l: u32, dim: u32) -> &RootRow {
    rows.iter()
        .find(|r| r.kind == kind && r.l == l && r.dim == dim)
        .expect("row present")
}

/// k_{ν,1}, k_{ν+1,1} for α ∈ {1, 2, 3, 4, 5, 100, 1000}, N ∈ {2, 3}, and
/// the ratio k²_{ν+1,1}/k²_{ν,1}.
pub fn table1(digits: usize) -> Result<Table> {
    let alphas = TABLE1_ALPHAS.to_vec();
    let mut roots = Vec::new();
    for l in [0, 1] {
        for dim in [2, 3] {
            roots.push(row(RootKind::Positive, l, dim, &alphas)?);
        }
    }
    let ratios = [2, 3]
        .into_iter()
        .map(|dim| {
            let k0 = find(&roots, RootKind::Positive, 0, dim);
            let k1 = find(&roots, RootKind::Positive, 1, dim);
            let values = k0
                .values
                .iter()
                .zip(&k1.values)
                .map(|(&a, &b)| (round_to(b, digits) / round_to(a, digits)).powi(2))
                .collect();
            RatioRow { dim, values }
        })
        .collect();
    Ok(Table {
        alphas,
        roots,
        ratios,
        digits,
    })
}

/// k_{ν+1,1}, k̂_{ν,1} for α ∈ {−0.1, …, −0.9}, N ∈ {2, 3}, and the ratio
/// −k²_{ν+1,1}/k̂²_{ν,1}.
pub fn table2(digits: usize) -> Result<Table> {
    let alphas = TABLE2_ALPHAS.to_vec();
    let mut roots = Vec::new();
    for dim in [2, 3] {
        roots.push(row(RootKind::Positive, 1, dim, &alphas)?);
    }
    for dim in [2, 3] {
        roots.push(row(RootKind::Negative, 0, dim, &alphas)?);
    }
    let ratios = [2, 3]
        .into_iter()
        .map(|dim| {
            let kp = find(&roots, RootKind::Positive, 1, dim);
            let kn = find(&roots, RootKind::Negative, 0, dim);
            let values = kp
                .values
                .iter()
                .zip(&kn.values)
                .map(|(&p, &n)| -(round_to(p, digits) / round_to(n, digits)).powi(2))
                .collect();
            RatioRow { dim, values }
        })
        .collect();
    Ok(Table {
        alphas,
        roots,
        ratios,
        digits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let t = table1(5).unwrap();
        assert_eq!(t.roots.len(), 4);
        assert!(t.roots.iter().all(|r| r.values.len() == 7));
        assert_eq!(t.ratios.len(), 2);
        let t = table2(5).unwrap();
        assert_eq!(t.roots.len(), 4);
        assert!(t.ratios.iter().all(|r| r.values.iter().all(|&v| v < 0.0)));
    }

    #[test]
    fn rounding() {
        assert_eq!(round_to(1.255784, 5), 1.25578);
        assert_eq!(round_to(-0.000004, 5), -0.0);
    }
}
