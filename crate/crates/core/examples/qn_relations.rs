//! Parsing, multiplying and comparing elements of the twisted Q_N, and scanning
//! its defining relations.

use psc_core::cohomology::Bicharacter;
use psc_core::qn::relations::{scan_all, ScanBounds};
use psc_core::qn::{parse, serialize, Engine};

fn main() -> psc_core::Result<()> {
    let e = Engine::new(Bicharacter::from_ints(2, 3, [1, 0, 0, 1])?);
    for text in ["s(2)*s(3)", "s(3)*s(2)", "s*(2)*s(2)", "s*(2)*u*s(2)", "u*s(2) - s(2)*u^2"] {
        println!("{text:16} = {}", serialize(&e.normalize(&parse(&e, text)?)));
    }
    let lhs = parse(&e, "s(2)*s*(2) + u*s(2)*s*(2)*u^-1")?;
    println!("s₂s₂* + us₂s₂*u* = 1: {}", e.equal(&lhs, &parse(&e, "1")?));

    let small = ScanBounds {
        isometry_product: 8,
        covariance: 8,
        covariance_shift: 4,
        range_partition: 8,
        refinement: 6,
        refinement_shift: 4,
        compression: 6,
        compression_shift: 6,
        projection_meet: 6,
    };
    for (name, rep) in scan_all(&e, &small) {
        println!("{name}: {} checked, {} failed", rep.checked, rep.failures.len());
    }
    Ok(())
}
