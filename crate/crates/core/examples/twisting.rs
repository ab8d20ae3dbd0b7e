//! Fiber multiplication in the product system, its twist by a bicharacter, and
//! the isomorphism between cohomologous twists.

use psc_core::cohomology::{nat_window, Bicharacter};
use psc_core::coeff::{CoeffElem, Dynamics, PElem};
use psc_core::prodsys::{check_associativity, cohomologous_iso, shift_by_coboundary, ProductSystem, TwoCocycle};
use psc_core::suites::random_psi;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> psc_core::Result<()> {
    let d = Dynamics::laurent();
    let x = ProductSystem::untwisted(d.clone());
    let a = x.fiber(CoeffElem::u(1), PElem::nat(2));
    let b = x.fiber(CoeffElem::u(1), PElem::nat(3));
    println!("{a} · {b} = {}", x.mul(&a, &b)?);

    let xi = TwoCocycle::bicharacter(&Bicharacter::from_ints(2, 3, [1, 0, 0, 1])?);
    let tw = ProductSystem::twisted(d.clone(), xi.clone());
    println!("{}", tw.mul(&tw.unit(PElem::nat(2)), &tw.unit(PElem::nat(3)))?);

    let triples: Vec<[PElem; 3]> = nat_window(8, 3).into_iter().map(|t| [t[0].clone(), t[1].clone(), t[2].clone()]).collect();
    println!("associative: {}", check_associativity(&tw, &triples)?.passed());
    let bumped = ProductSystem::twisted(d.clone(), xi.perturbed(PElem::nat(2), PElem::nat(3), d.one()));
    println!("perturbed failures: {}", check_associativity(&bumped, &triples)?.failures.len());

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let psi = random_psi(&mut rng, 64)?;
    let eta = ProductSystem::twisted(d.clone(), shift_by_coboundary(&d, &xi, &psi));
    let pairs: Vec<(PElem, PElem)> = nat_window(8, 2).into_iter().map(|t| (t[0].clone(), t[1].clone())).collect();
    println!("X^ξ ≅ X^η intertwines: {}", cohomologous_iso(&tw, &eta, &psi, &pairs)?.passed());
    Ok(())
}
