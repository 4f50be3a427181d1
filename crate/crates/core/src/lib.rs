//! Sporadic SIC constructions and their companion structures.
//!
//! This crate builds the symmetric informationally complete measurements in
//! dimensions 2, 3 and 8 (the qubit tetrahedra, the Hesse SIC and the two
//! Hoggar-type SICs), the structures dual to them (mutually unbiased bases,
//! the twin-SIC orthogonality pattern, equiangular line systems in R², R³
//! and R⁷), and verifies their defining properties to explicit tolerances,
//! emitting machine-readable certificates.
//!
//! Floating-point constructions use `Complex64`; the real line systems are
//! checked in exact arithmetic over the golden field Q(√5).

pub mod cert;
pub mod duality;
pub mod error;
pub mod golden;
pub mod linalg;
pub mod lines;
pub mod octonion;
pub mod pauli;
pub mod prob;
pub mod report;
pub mod search;
pub mod sic;

pub use cert::{Certificate, Check};
pub use error::{Error, Result};
pub use golden::GoldenScalar;
pub use linalg::{ComplexMatrix, StateVector};
pub use pauli::{PauliLabel, WhLabel};
pub use prob::ProbabilityVector;
pub use sic::SicEnsemble;

/// Default algebraic tolerance for floating-point checks.
pub const DEFAULT_TOL: f64 = 1e-10;
