//! The ring `ℛ`, the module `𝔐 = A` with `Ψ`, the free resolution, the
//! inhomogeneous cochain complex and the cocycle constructions over `ℕ^×`.

pub mod cochain;
pub mod cocycles;
pub mod random;
pub mod resolution;
pub mod ring;

pub use cochain::{
    bounded_product_window, coboundary, coboundary_residual, differential, extend_to_hom,
    is_cocycle, nat_range, nat_window, restrict_hom, tuples, Cochain,
};
pub use cocycles::{
    additivity_report, build_bicharacter, build_one_cocycle, compatibility_report,
    h0_fixed_point_check, obstruction_at_one, one_cocycle_all_orders, prime_values_up_to, root_of_unity_table,
    Bicharacter, CyclotomicSum, H0Certificate, RootValue,
};
pub use resolution::{boundary, boundary_chain, homotopy, homotopy_defect, ChainElem, ResolutionElem};
pub use ring::{LinComb, Path, PathAlgebra, RingElem, SemigroupAlgebra, SkewBasis, SkewProduct};
