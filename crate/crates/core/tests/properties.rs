mod common;

use common::random_elem;
use proptest::prelude::*;
use psc_core::cohomology::{coboundary, is_cocycle, nat_window, random, Bicharacter, Cochain};
use psc_core::coeff::{Dynamics, PElem};
use psc_core::prodsys::{check_associativity, ProductSystem, TwoCocycle};
use psc_core::qn::{expect_e, expect_f, expect_g, DiagonalElem, Engine};
use psc_core::suites::random_psi;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn engine(t: u8) -> Engine {
    match t {
        0 => Engine::untwisted(),
        1 => Engine::new(Bicharacter::from_ints(2, 3, [1, 0, 0, 1]).unwrap()),
        _ => Engine::new(Bicharacter::from_ints(2, 3, [1, 2, 3, 5]).unwrap()),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expectations_are_idempotent_and_star_preserving(seed in any::<u64>(), t in 0u8..3) {
        let e = engine(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = e.normalize(&random_elem(&mut rng, 4, 4));
        let ex = expect_e(&x);
        prop_assert!(e.equal(&expect_e(&ex), &ex));
        prop_assert!(e.equal(&expect_e(&e.star(&x)), &e.star(&ex)));
        let fx = expect_f(&ex).unwrap();
        prop_assert!(e.equal(&expect_f(&fx).unwrap(), &fx));
        prop_assert!(e.equal(&expect_f(&e.star(&ex)).unwrap(), &e.star(&fx)));
        let gx = expect_g(&x);
        prop_assert_eq!(expect_g(&gx.to_algebra()), gx.clone());
        prop_assert!(e.equal(&expect_g(&e.star(&x)).to_algebra(), &e.star(&gx.to_algebra())));
    }

    #[test]
    fn expectations_are_linear(seed in any::<u64>(), t in 0u8..3) {
        let e = engine(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (e.normalize(&random_elem(&mut rng, 3, 4)), e.normalize(&random_elem(&mut rng, 3, 4)));
        let c = random::scalar(&mut rng);
        let z = e.normalize(&x.scale(&c).add(&y));
        prop_assert!(e.equal(&expect_e(&z), &expect_e(&x).scale(&c).add(&expect_e(&y))));
        let gz = expect_g(&z).to_algebra();
        prop_assert!(e.equal(&gz, &expect_g(&x).to_algebra().scale(&c).add(&expect_g(&y).to_algebra())));
    }

    #[test]
    fn diagonal_of_positive_elements_is_self_adjoint(seed in any::<u64>(), t in 0u8..3) {
        let e = engine(t);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_elem(&mut rng, 3, 4);
        let g: DiagonalElem = expect_g(&e.mul(&x, &e.star(&x)));
        prop_assert!(g.entries().iter().all(|c| c.is_self_adjoint()));
    }

    #[test]
    fn coboundaries_are_cocycles(seed in any::<u64>()) {
        let d = Dynamics::laurent();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let psi = random_psi(&mut rng, 216).unwrap();
        prop_assert!(is_cocycle(&d, &coboundary(&d, &psi), &nat_window(6, 3)).unwrap().passed());
    }

    #[test]
    fn untwisted_fibers_associate(seed in any::<u64>()) {
        let d = Dynamics::laurent();
        let x = ProductSystem::untwisted(d.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let [a, b, c] = [0; 3].map(|_| {
            let coeff = random::coeff(&mut rng, &d, 3, 4);
            x.fiber(coeff, random::pelem(&mut rng, &d, 12))
        });
        let left = x.mul(&x.mul(&a, &b).unwrap(), &c).unwrap();
        let right = x.mul(&a, &x.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

/// Associativity failures of the twisted system are exactly the triples where
/// the cochain differential is nonzero.
#[test]
fn associativity_matches_differential() {
    let d = Dynamics::laurent();
    let base = TwoCocycle::bicharacter(&Bicharacter::from_ints(2, 3, [1, 0, 0, 1]).unwrap());
    for (p, q) in [(2, 3), (3, 2), (4, 5), (2, 2)] {
        let bad = base.perturbed(PElem::nat(p), PElem::nat(q), d.one());
        let window = nat_window(8, 3);
        let triples: Vec<[PElem; 3]> = window.iter().map(|t| [t[0].clone(), t[1].clone(), t[2].clone()]).collect();
        let assoc = check_associativity(&ProductSystem::twisted(d.clone(), bad.clone()), &triples).unwrap();
        let diff = is_cocycle(&d, bad.cochain(), &window).unwrap();
        let tuples = |r: &psc_core::report::CheckReport| r.failures.iter().map(|f| f.tuple.clone()).collect::<Vec<_>>();
        assert!(!assoc.passed());
        assert_eq!(tuples(&assoc), tuples(&diff));
    }
    let zero = ProductSystem::twisted(d.clone(), TwoCocycle::new("zero", Cochain::zero(2)).unwrap());
    let triples: Vec<[PElem; 3]> = nat_window(6, 3).iter().map(|t| [t[0].clone(), t[1].clone(), t[2].clone()]).collect();
    assert!(check_associativity(&zero, &triples).unwrap().passed());
}
