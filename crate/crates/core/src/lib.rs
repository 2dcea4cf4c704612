//! Complete spectrum of the Robin Laplacian `-Δu = μu`, `∂ₙu + αu = 0` on the
//! unit ball of ℝᴺ (N ≥ 2) and on the unit interval.
//!
//! Every eigenvalue is obtained from a transcendental equation in Bessel
//! functions (ball) or trigonometric/hyperbolic functions (interval). The
//! [`oracle`] module re-derives the same numbers from a finite-difference
//! discretisation so the closed forms can be checked independently.
//!
//! ```
//! use robin_core::ball::{BallProblem, first_two};
//!
//! let disk = BallProblem::new(2, 1.0).unwrap();
//! let pair = first_two(&disk).unwrap();
//! assert!((pair.mu1.sqrt() - 1.25578).abs() < 5e-6);
//! ```

pub mod ball;
pub mod error;
pub mod harmonics;
pub mod interval;
pub mod oracle;
pub mod roots;
pub mod special;
pub mod tables;
pub mod zeros;

pub use error::{Error, Result};
