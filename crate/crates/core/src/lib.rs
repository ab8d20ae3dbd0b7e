//! Exact cohomology for product systems over semigroups and a symbolic
//! normal-form engine for the twisted Cuntz algebra `Q_N^ξ`.
//!
//! * [`arith`]: factored naturals and arithmetic progressions.
//! * [`coeff`]: exact scalars, the group ring `ℂG`, dynamics `(G, P, θ)`.
//! * [`cohomology`]: the ring `ℛ`, the free resolution, inhomogeneous
//!   cochains and the cocycle constructions over `ℕ^×`.
//! * [`prodsys`]: fibers of `X` and `X^ξ`, associativity and isomorphism checks.
//! * [`qn`]: monomials `c·u^k s_m s_n* u^{-l}`, relations, expectations,
//!   projection order and the pure-infiniteness witness.
//! * [`cli`]: JSON job runner behind the `psc` binary.

pub mod arith;
pub mod cli;
pub mod coeff;
pub mod cohomology;
pub mod error;
pub mod prodsys;
pub mod qn;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
