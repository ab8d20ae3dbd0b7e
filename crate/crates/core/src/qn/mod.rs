//! Words `u^k s_m s_n* u^{-l}` in the twisted ax+b algebra `Q_N^ξ`: the
//! product engine, refinement and equality, the expectations onto the
//! diagonal, subprojection search and exact pure-infiniteness witnesses.

mod diag;
mod engine;
mod orthogonal;
pub mod relations;
pub mod syntax;
mod witness;
mod word;

pub use diag::{expect_e, expect_f, expect_g, proj_leq, proj_leq_engine, proj_leq_progression, DiagonalElem};
pub use engine::Engine;
pub use orthogonal::{find_orthogonal_subprojection, sandwich_projections, verify as verify_subprojection, Branch, Subprojection};
pub use syntax::{parse, serialize};
pub use witness::{pure_infiniteness_witness, PiWitness, RootScaled};
pub use word::{AlgebraElem, Monomial, Word};
