//! Executable model of completely integrally closed SP-domains.
//!
//! The invertible ideals of such a ring form the lattice-ordered group
//! `C(X, Z)` of continuous integer functions on a Boolean space `X`. This
//! crate makes that dictionary computable:
//!
//! * [`ordinal`] - ordinals below epsilon-zero in Cantor normal form,
//! * [`space`] - ordinal spaces, a Cantor component, clopens and
//!   Cantor-Bendixson derivatives,
//! * [`lgroup`] - integer step functions with pointwise group and lattice
//!   operations,
//! * [`spdomain`] - ideals, radical factorization and sharp/dull degrees,
//! * [`completion`] - the dense embedding into eventually periodic sequences
//!   for `X = omega + 1`, and divisibility of the cokernel.

pub mod completion;
pub mod error;
pub mod lgroup;
pub mod ordinal;
mod periodic;
pub mod space;
pub mod spdomain;
mod text;

pub use completion::{CosetDivisibility, EpSequence};
pub use error::{Error, Result};
pub use lgroup::StepFunction;
pub use ordinal::{Ordinal, OrdinalKind};
pub use space::{CbRank, Clopen, FinalStage, Point, Space};
pub use spdomain::{DegreeKind, DegreeReport, Ideal, RadicalFactorization};
