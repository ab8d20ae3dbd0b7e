//! Cocycles over ℕ^× acting on Laurent polynomials: the bicharacter 2-cocycles,
//! their obstruction at z = 1, 1-cocycles from prime values, and H⁰.

use psc_core::cohomology::{
    build_bicharacter, build_one_cocycle, compatibility_report, h0_fixed_point_check, is_cocycle, nat_window,
    obstruction_at_one, prime_values_up_to, Bicharacter,
};
use psc_core::coeff::{CoeffElem, Dynamics, ExactScalar, PElem};

fn main() -> psc_core::Result<()> {
    let d = Dynamics::laurent();
    for params in [[1, 0, 0, 1], [1, 2, 2, 4], [0, 1, 1, 0]] {
        let xi = Bicharacter::from_ints(2, 3, params)?;
        let c = build_bicharacter(&xi);
        let rep = is_cocycle(&d, &c, &nat_window(10, 3))?;
        println!(
            "{xi}: cocycle on [1..10]³ = {}, obstruction = {}",
            rep.passed(),
            obstruction_at_one(&c, 2, 3)?
        );
    }

    // ξ(p) = c_p + (α_p − 1)b satisfies the compatibility condition.
    let b = CoeffElem::u(1);
    let pv = prime_values_up_to(30, |p| {
        let c = ExactScalar::from_int(p as i64 % 5 - 2);
        CoeffElem::constant(1, c).add(&d.act(&PElem::nat(p), &b).sub(&b))
    });
    println!("compatible: {}", compatibility_report(&d, &pv).passed());
    let xi = build_one_cocycle(&d, &pv, 30)?;
    for n in [4u64, 6, 12, 30] {
        println!("ξ({n}) = {}", xi.eval(&[PElem::nat(n)])?);
    }

    let h0 = h0_fixed_point_check(&[2, 3], 20)?;
    println!("fixed points of α₂, α₃ up to degree 20 are constants: {}", h0.constants_only());
    Ok(())
}
