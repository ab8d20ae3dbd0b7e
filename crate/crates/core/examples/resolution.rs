//! Boundary maps and splitting homotopies of the free resolution over the
//! three example dynamics.

use psc_core::cohomology::{boundary, boundary_chain, homotopy_defect, ChainElem, ResolutionElem, SkewProduct};
use psc_core::coeff::{CoeffElem, Dynamics, PElem};
use psc_core::suites::{resolution_suite, Family};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> psc_core::Result<()> {
    let ring = SkewProduct::new(Dynamics::laurent());
    let r = ring.fiber(&CoeffElem::u(1), &PElem::nat(2));
    let e = ResolutionElem::basis(vec![PElem::nat(3), PElem::nat(5)], r);
    let d = boundary(&ring, &e);
    println!("∂[3|5]·u𝟙_2 = {d:?}");
    println!("∂∂ = 0: {}", boundary_chain(&ring, &d).is_none_or(|dd| dd.is_zero()));
    println!("∂h + h∂ − id = 0: {}", homotopy_defect(&ring, &ChainElem::Free(e))?.is_zero());

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for f in Family::ALL {
        let rep = resolution_suite(&mut rng, f, 20, 3)?;
        let h = rep.homotopy.map_or("n/a".to_string(), |h| format!("{} ok of {}", h.checked - h.failures.len(), h.checked));
        println!(
            "{:8} ∂∂: {} ok of {}, homotopy: {h}",
            f.name(),
            rep.boundary_squared.checked - rep.boundary_squared.failures.len(),
            rep.boundary_squared.checked
        );
    }
    Ok(())
}
