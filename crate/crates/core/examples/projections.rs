//! Diagonal projections, the conditional expectations E, F, G, and the search
//! for subprojections orthogonal to an off-diagonal word.

use psc_core::arith::FactoredNat;
use psc_core::qn::{
    expect_e, expect_f, expect_g, find_orthogonal_subprojection, parse, proj_leq, proj_leq_engine, serialize,
    DiagonalElem, Engine, Word,
};

fn main() -> psc_core::Result<()> {
    let e = Engine::untwisted();
    let n = |m| FactoredNat::new(m);
    println!("1 + 6ℤ ≤ 1 + 2ℤ: {}", proj_leq((1, &n(6)?), (1, &n(2)?)));
    println!("1 + 6ℤ ≤ 0 + 2ℤ: {}", proj_leq_engine(&e, (1, &n(6)?), (0, &n(2)?)));

    let x = parse(&e, "2*s(2)*s*(2) + u*s(3)*s*(3)*u^-1 + s(2)*s*(3) + (1/2)*u^4")?;
    let ex = expect_e(&x);
    println!("E(x) = {}", serialize(&ex));
    println!("F(E(x)) = {}", serialize(&expect_f(&ex)?));
    println!("G(x) = {}", expect_g(&x));

    let q = DiagonalElem::projection(0, n(2)?);
    for w in [Word::from_ints(0, 2, 3, 0), Word::from_ints(2, 2, 2, 0), Word::u(1)] {
        let p = find_orthogonal_subprojection(&e, &q, &w)?;
        println!("Q = s₂s₂*, W = {w}: P = {} via {:?}", p.word(), p.branch);
    }
    Ok(())
}
