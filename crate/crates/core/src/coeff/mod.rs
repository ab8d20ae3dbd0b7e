//! The coefficient algebra `A = ℂG` (dense group-ring model of `C*(G)`),
//! exact scalars, and the semigroup dynamics acting on it.

pub mod dynamics;
pub mod group;
pub mod scalar;

pub use dynamics::{Action, Dynamics, PElem, Semigroup};
pub use group::{AbelianGroup, CoeffElem, GroupElem};
pub use scalar::{int, parse_rational, rat, rational_str, ExactScalar, GaussRat};
