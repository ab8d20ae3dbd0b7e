//! The A-valued inner product on a fiber, computed by restriction and by the
//! transfer operator.

use psc_core::coeff::{CoeffElem, Dynamics, PElem};
use psc_core::suites::inner_product_suite;

fn main() -> psc_core::Result<()> {
    let d = Dynamics::laurent();
    let p = PElem::nat(3);
    for (i, j) in [(0, 0), (1, 4), (2, 8), (-5, 1)] {
        let (a, b) = (CoeffElem::u(i), CoeffElem::u(j));
        let ip = d.inner_product(&p, &a, &b);
        let tr = d.transfer(&p, &d.mul(&d.star(&a), &b))?;
        println!("⟨u^{i}, u^{j}⟩_3 = {ip}   transfer: {tr}");
    }
    let rep = inner_product_suite(&[2, 3, 5], 30)?;
    println!("{} monomial pairs agree: {}", rep.checked, rep.passed());
    Ok(())
}
