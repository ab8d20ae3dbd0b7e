//! Elements T, R with TxR = 1 for positive elements x of the algebra.

use psc_core::qn::{parse, pure_infiniteness_witness, Engine};

fn main() -> psc_core::Result<()> {
    let e = Engine::untwisted();
    for text in ["s(2)", "1 + u*s(2)*s*(3)", "u*s(3)*s*(3)*u^-1", "s(2)*s*(2) + ph(1)*s(2)*s*(2)"] {
        let x = parse(&e, text)?;
        match pure_infiniteness_witness(&e, &x) {
            Ok(w) => println!("x = {text}\n  T = {}\n  R = {}\n  TxR = 1: {}", w.t, w.r, w.verify(&e, &x)?),
            Err(err) => println!("x = {text}\n  {err}"),
        }
    }
    Ok(())
}
