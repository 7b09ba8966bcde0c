//! Exact arithmetic for symmetric q-deformed calculus and the q-nonlocal
//! supersymmetric partners of the harmonic oscillator.
//!
//! * [`qcore`] — exact rationals, Gaussian rationals, the deformation `q`,
//!   symmetric q-numbers `[n]_q = (qⁿ − q⁻ⁿ)/(q − q⁻¹)` and q-factorials.
//! * [`series`] — truncated power series with exact arithmetic, the Jackson
//!   derivative `D_q`, argument scaling and the i-rotation `x → ix`.
//! * [`qspecial`] — the q-exponential, deformed Gaussian vacua, the drift
//!   series `β_q`, q-Hermite functions and transformation functions.
//! * [`operators`] — intertwiners `T±`, the second-order partners `O_b`,
//!   `O_f` (composed and direct forms), classical oracles and `q → 1` sweeps.
//! * [`verify`], [`io`], [`cli`] — identity suites, JSON/CSV formats and the
//!   command-line front end.
//!
//! ```
//! use qsusy::operators::t_plus_q;
//! use qsusy::qcore::Deformation;
//! use qsusy::qspecial::{q_gauss, VacuumSpec};
//!
//! let v = VacuumSpec::regular(Deformation::from_ratio(3, 2), 16);
//! assert!(t_plus_q(&v).apply(&q_gauss(&v)).is_zero());
//! ```

pub mod cli;
pub mod error;
pub mod io;
pub mod operators;
pub mod qcore;
pub mod qspecial;
pub mod series;
pub mod verify;

pub use error::{QError, Result};
pub use operators::QOperator;
pub use qcore::{Deformation, GaussRational, Rational};
pub use qspecial::VacuumSpec;
pub use series::PowerSeries;
