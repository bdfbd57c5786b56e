//! Exact ordered Stirling-type numbers and the modes of their rows.
//!
//! The crate builds three triangle families (Stirling numbers of the second
//! kind, r-Stirling numbers and Whitney numbers of Dowling lattices), their
//! ordered variants and the Fubini-type polynomials whose coefficients they
//! are. On top of those it locates modes, certifies strict log-concavity and
//! real-rootedness, applies Darroch's mode bound in exact rational arithmetic
//! and compares exact values against the dominant-pole asymptotic laws.
//!
//! Every exact quantity is an arbitrary-precision integer or a reduced
//! rational. Floating point only appears in [`asymptotics`].
//!
//! ```
//! use ordmode::modes::darroch_localize;
//! use ordmode::poly::r_fubini_poly;
//! use ordmode::sturm::certify_real_rooted_in_interval;
//!
//! let p = r_fubini_poly(0, 4);
//! assert_eq!(p.to_string(), "24x^4 + 36x^3 + 14x^2 + x");
//! let report = darroch_localize(&p).unwrap();
//! assert_eq!(report.mode_index, 3);
//! assert_eq!(report.darroch_mean.to_string(), "233/75");
//! assert!(certify_real_rooted_in_interval(&p).unwrap().certified);
//! ```

pub mod asymptotics;
mod error;
pub mod exact;
pub mod modes;
pub mod poly;
pub mod sturm;
pub mod triangles;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{factorial, BigInt, BigRational, RationalSeries};
pub use modes::ModeReport;
pub use poly::IntPolynomial;
pub use triangles::{OrderedRow, Triangle, TriangleFamily};
