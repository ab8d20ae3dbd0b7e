//! The product system `X` with rank-one fibers `A𝟙_p` and its twist `X^ξ`
//! by a normalized self-adjoint 2-cocycle.
//!
//! `exp(iξ(p,q))` is split as `e^{it}·exp(iX)`: the real constant `t` of
//! `ξ(p,q)` becomes an exact [`ExactScalar`] phase, and the rest `X` is
//! carried as a symbolic exponent (the marker) that is added under
//! multiplication. Elements with different markers are never added.

use std::fmt;

use num_traits::Zero;

use crate::coeff::{CoeffElem, Dynamics, ExactScalar, GroupElem, PElem};
use crate::cohomology::cocycles::{build_bicharacter, Bicharacter};
use crate::cohomology::Cochain;
use crate::error::{Error, Result};
use crate::report::CheckReport;

/// `a·exp(iX)·𝟙_p` in the fiber over `p` of the system tagged `tag`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiberElem {
    pub coeff: CoeffElem,
    pub marker: CoeffElem,
    pub p: PElem,
    pub tag: String,
}

impl fmt::Display for FiberElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coeff)?;
        if !self.marker.is_zero() {
            write!(f, "*exp(i({}))", self.marker)?;
        }
        write!(f, "*1_{}[{}]", self.p, self.tag)
    }
}

impl fmt::Debug for FiberElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Splits `exp(iv)` into an exact phase and a symbolic exponent.
pub fn exp_i(v: &CoeffElem, rank: usize) -> (ExactScalar, CoeffElem) {
    let e = GroupElem::identity(rank);
    let c = v.coefficient(&e);
    let t = c
        .terms()
        .find(|(theta, _)| theta.is_zero())
        .map(|(_, g)| g.re.clone())
        .unwrap_or_else(num_rational::BigRational::zero);
    let rest = v.sub(&CoeffElem::constant(rank, ExactScalar::from_rational(t.clone())));
    (ExactScalar::phase(t), rest)
}

/// A normalized 2-cocycle `ξ: P × P → A_sa` with a name used as twist tag.
#[derive(Clone, Debug)]
pub struct TwoCocycle {
    name: String,
    cochain: Cochain,
}

impl TwoCocycle {
    pub fn new(name: impl Into<String>, cochain: Cochain) -> Result<Self> {
        if cochain.level() != 2 {
            return Err(Error::Invalid("a 2-cocycle needs a level-2 cochain".into()));
        }
        Ok(Self {
            name: name.into(),
            cochain,
        })
    }

    pub fn zero() -> Self {
        Self::new("zero", Cochain::zero(2)).expect("level 2")
    }

    pub fn bicharacter(b: &Bicharacter) -> Self {
        Self::new(format!("bichar[{b}]"), build_bicharacter(b)).expect("level 2")
    }

    /// `ξ` with `ξ(p,q)` replaced by `ξ(p,q) + bump` at a single pair.
    pub fn perturbed(&self, p: PElem, q: PElem, bump: CoeffElem) -> Self {
        let base = self.cochain.clone();
        let name = format!("{}+bump({p},{q})", self.name);
        let c = Cochain::new(2, move |t| {
            let v = base.eval(t)?;
            Ok(if t[0] == p && t[1] == q { v.add(&bump) } else { v })
        });
        Self::new(name, c).expect("level 2")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cochain(&self) -> &Cochain {
        &self.cochain
    }

    pub fn eval(&self, p: &PElem, q: &PElem) -> Result<CoeffElem> {
        self.cochain.eval(&[p.clone(), q.clone()])
    }

    /// `ξ(p, e) = ξ(e, p) = 0` for the sampled `p`.
    pub fn normalized_report(&self, d: &Dynamics, samples: &[PElem]) -> Result<CheckReport> {
        let e = d.identity();
        let mut report = CheckReport::new();
        for p in samples {
            for (x, y) in [(p, &e), (&e, p)] {
                let v = self.eval(x, y)?;
                report.record(&[x, y], (!v.is_zero()).then(|| v.to_string()));
            }
        }
        Ok(report)
    }

    /// `ξ(p,q)* = ξ(p,q)` on the sampled pairs.
    pub fn self_adjoint_report(&self, d: &Dynamics, pairs: &[(PElem, PElem)]) -> Result<CheckReport> {
        let mut report = CheckReport::new();
        for (p, q) in pairs {
            let v = self.eval(p, q)?;
            let bad = !d.group().is_self_adjoint(&v);
            report.record(&[p, q], bad.then(|| v.to_string()));
        }
        Ok(report)
    }
}

/// `X` (no cocycle) or `X^ξ` over the dynamics `(G, P, θ)`.
#[derive(Clone, Debug)]
pub struct ProductSystem {
    dynamics: Dynamics,
    twist: Option<TwoCocycle>,
}

impl ProductSystem {
    pub fn untwisted(dynamics: Dynamics) -> Self {
        Self {
            dynamics,
            twist: None,
        }
    }

    pub fn twisted(dynamics: Dynamics, xi: TwoCocycle) -> Self {
        Self {
            dynamics,
            twist: Some(xi),
        }
    }

    pub fn dynamics(&self) -> &Dynamics {
        &self.dynamics
    }

    pub fn twist(&self) -> Option<&TwoCocycle> {
        self.twist.as_ref()
    }

    pub fn tag(&self) -> &str {
        self.twist.as_ref().map_or("untwisted", |x| x.name())
    }

    fn rank(&self) -> usize {
        self.dynamics.group().rank()
    }

    /// `a𝟙_p`.
    pub fn fiber(&self, a: CoeffElem, p: PElem) -> FiberElem {
        FiberElem {
            coeff: a,
            marker: CoeffElem::zero(),
            p,
            tag: self.tag().to_string(),
        }
    }

    /// The basis element `𝟙_p`.
    pub fn unit(&self, p: PElem) -> FiberElem {
        self.fiber(self.dynamics.one(), p)
    }

    fn check_tag(&self, x: &FiberElem) -> Result<()> {
        if x.tag != self.tag() {
            return Err(Error::TwistMismatch(x.tag.clone(), self.tag().to_string()));
        }
        Ok(())
    }

    /// `(a𝟙_p)(b𝟙_q) = aθ_p(b)·exp(iξ(p,q))𝟙_{pq}`.
    pub fn mul(&self, x: &FiberElem, y: &FiberElem) -> Result<FiberElem> {
        if x.tag != y.tag {
            return Err(Error::TwistMismatch(x.tag.clone(), y.tag.clone()));
        }
        self.check_tag(x)?;
        let d = &self.dynamics;
        let mut coeff = d.mul(&x.coeff, &d.act(&x.p, &y.coeff));
        let mut marker = x.marker.add(&d.act(&x.p, &y.marker));
        if let Some(xi) = &self.twist {
            let (phase, rest) = exp_i(&xi.eval(&x.p, &y.p)?, self.rank());
            coeff = coeff.scale(&phase);
            marker = marker.add(&rest);
        }
        Ok(FiberElem {
            coeff,
            marker,
            p: d.op(&x.p, &y.p),
            tag: x.tag.clone(),
        })
    }

    /// Left action `a·x`.
    pub fn left_act(&self, a: &CoeffElem, x: &FiberElem) -> FiberElem {
        FiberElem {
            coeff: self.dynamics.mul(a, &x.coeff),
            ..x.clone()
        }
    }

    /// Right action `x·a = x(a𝟙_e)`.
    pub fn right_act(&self, x: &FiberElem, a: &CoeffElem) -> Result<FiberElem> {
        self.mul(x, &self.fiber(a.clone(), self.dynamics.identity()))
    }

    /// `⟨a𝟙_p, b𝟙_p⟩_p = θ_p^{-1}E_p(a*b)`; both arguments must carry the same marker.
    pub fn inner_product(&self, x: &FiberElem, y: &FiberElem) -> Result<CoeffElem> {
        self.check_tag(x)?;
        self.check_tag(y)?;
        if x.p != y.p {
            return Err(Error::Invalid(format!("fibers over {} and {} are orthogonal spaces", x.p, y.p)));
        }
        if x.marker != y.marker {
            return Err(Error::Unsupported("inner product of elements with distinct markers".into()));
        }
        Ok(self.dynamics.inner_product(&x.p, &x.coeff, &y.coeff))
    }
}

/// Compares `(xy)z` with `x(yz)` on basis fibers for every triple.
pub fn check_associativity(sys: &ProductSystem, triples: &[[PElem; 3]]) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    for [p, q, r] in triples {
        let (x, y, z) = (sys.unit(p.clone()), sys.unit(q.clone()), sys.unit(r.clone()));
        let left = sys.mul(&sys.mul(&x, &y)?, &z)?;
        let right = sys.mul(&x, &sys.mul(&y, &z)?)?;
        let bad = (left != right).then(|| format!("(xy)z = {left}, x(yz) = {right}"));
        report.record(&[p, q, r], bad);
    }
    Ok(report)
}

/// `a𝟙^ξ_p ↦ exp(iψ(p))a𝟙^η_p` with `ψ` replaced by `(ψ + ψ*)/2`.
pub struct CohomologousMap<'a> {
    source: &'a ProductSystem,
    target: &'a ProductSystem,
    psi: Cochain,
}

impl<'a> CohomologousMap<'a> {
    pub fn new(source: &'a ProductSystem, target: &'a ProductSystem, psi: &Cochain) -> Result<Self> {
        if psi.level() != 1 {
            return Err(Error::Invalid("ψ must be a 1-cochain".into()));
        }
        let d = source.dynamics().clone();
        let base = psi.clone();
        let half = ExactScalar::from_rational(crate::coeff::rat(1, 2));
        let sym = Cochain::new(1, move |t| {
            let v = base.eval(t)?;
            Ok(v.add(&d.star(&v)).scale(&half))
        });
        Ok(Self {
            source,
            target,
            psi: sym,
        })
    }

    pub fn apply(&self, x: &FiberElem) -> Result<FiberElem> {
        self.source.check_tag(x)?;
        let (phase, rest) = exp_i(&self.psi.eval(std::slice::from_ref(&x.p))?, self.source.rank());
        Ok(FiberElem {
            coeff: x.coeff.scale(&phase),
            marker: x.marker.add(&rest),
            p: x.p.clone(),
            tag: self.target.tag().to_string(),
        })
    }
}

/// Checks that `Φ(xy) = Φ(x)Φ(y)` on the sampled pairs of basis fibers, where
/// `Φ: X^ξ → X^η` is the map induced by `ψ`. Succeeds iff `ξ − η = ∂¹ψ` there
/// (after symmetrizing `ψ`).
pub fn cohomologous_iso(
    xi: &ProductSystem,
    eta: &ProductSystem,
    psi: &Cochain,
    samples: &[(PElem, PElem)],
) -> Result<CheckReport> {
    let phi = CohomologousMap::new(xi, eta, psi)?;
    let mut report = CheckReport::new();
    for (p, q) in samples {
        let (x, y) = (xi.unit(p.clone()), xi.unit(q.clone()));
        let left = phi.apply(&xi.mul(&x, &y)?)?;
        let right = eta.mul(&phi.apply(&x)?, &phi.apply(&y)?)?;
        let bad = (left != right).then(|| format!("Φ(xy) = {left}, Φ(x)Φ(y) = {right}"));
        report.record(&[p, q], bad);
    }
    Ok(report)
}

/// `η = ξ − ∂¹ψ` as a named cocycle.
pub fn shift_by_coboundary(d: &Dynamics, xi: &TwoCocycle, psi: &Cochain) -> TwoCocycle {
    let dpsi = crate::cohomology::coboundary(d, psi);
    let c = xi.cochain().sub(&dpsi).expect("both level 2");
    TwoCocycle::new(format!("{}-dpsi", xi.name()), c).expect("level 2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;
    use crate::cohomology::{is_cocycle, nat_range, nat_window};

    fn p(n: u64) -> PElem {
        PElem::nat(n)
    }

    fn triples(n: u64) -> Vec<[PElem; 3]> {
        nat_window(n, 3).into_iter().map(|t| [t[0].clone(), t[1].clone(), t[2].clone()]).collect()
    }

    #[test]
    fn untwisted_products() {
        let sys = ProductSystem::untwisted(Dynamics::laurent());
        let x = sys.fiber(CoeffElem::u(1), p(2));
        let y = sys.fiber(CoeffElem::u(1), p(3));
        assert_eq!(sys.mul(&x, &y).unwrap(), sys.fiber(CoeffElem::u(3), p(6)));
        let a = sys.fiber(CoeffElem::u(-2), p(1));
        assert_eq!(sys.mul(&a, &y).unwrap(), sys.fiber(CoeffElem::u(-1), p(3)));
    }

    #[test]
    fn twisted_products() {
        let xi = TwoCocycle::bicharacter(&Bicharacter::from_ints(2, 3, [1, 0, 0, 1]).unwrap());
        let sys = ProductSystem::twisted(Dynamics::laurent(), xi);
        let prod = sys.mul(&sys.unit(p(2)), &sys.unit(p(3))).unwrap();
        let expected = CoeffElem::constant(1, ExactScalar::phase(rat(1, 1)));
        assert_eq!(prod.coeff, expected);
        assert_eq!(prod.p, p(6));
        let plain = ProductSystem::untwisted(Dynamics::laurent());
        assert!(matches!(
            sys.mul(&sys.unit(p(2)), &plain.unit(p(3))),
            Err(Error::TwistMismatch(_, _))
        ));
    }

    #[test]
    fn associativity_matches_cocycle_condition() {
        let d = Dynamics::laurent();
        let xi = TwoCocycle::bicharacter(&Bicharacter::from_ints(2, 3, [1, 2, 3, 5]).unwrap());
        let bump = CoeffElem::constant(1, ExactScalar::one());
        let bad = xi.perturbed(p(2), p(3), bump);
        for c in [xi, bad] {
            let sys = ProductSystem::twisted(d.clone(), c.clone());
            let assoc = check_associativity(&sys, &triples(6)).unwrap();
            let cocycle = is_cocycle(&d, c.cochain(), &nat_window(6, 3)).unwrap();
            assert_eq!(assoc.failures.len(), cocycle.failures.len(), "{}", c.name());
            assert_eq!(assoc.checked, cocycle.checked);
        }
    }

    #[test]
    fn markers_for_laurent_valued_cocycles() {
        // twisting by a Laurent-valued coboundary gives an isomorphic system
        let d = Dynamics::laurent();
        let psi = Cochain::new(1, |t| {
            let n = t[0].as_nat().unwrap().as_i64();
            if n == 1 {
                return Ok(CoeffElem::zero());
            }
            Ok(CoeffElem::u(n).add(&CoeffElem::u(-n)).add(&CoeffElem::constant(1, ExactScalar::from_int(n))))
        });
        let zero = TwoCocycle::zero();
        let eta = shift_by_coboundary(&d, &zero, &psi);
        let x0 = ProductSystem::twisted(d.clone(), zero);
        let x1 = ProductSystem::twisted(d.clone(), eta);
        let samples: Vec<(PElem, PElem)> = nat_window(8, 2).into_iter().map(|t| (t[0].clone(), t[1].clone())).collect();
        assert!(cohomologous_iso(&x0, &x1, &psi, &samples).unwrap().passed());
        let prod = x1.mul(&x1.unit(p(2)), &x1.unit(p(3))).unwrap();
        assert!(!prod.marker.is_zero());
    }

    #[test]
    fn iso_detects_wrong_psi() {
        let d = Dynamics::laurent();
        let xi = TwoCocycle::bicharacter(&Bicharacter::from_ints(2, 3, [1, 0, 0, 1]).unwrap());
        let sys = ProductSystem::twisted(d.clone(), xi.clone());
        let samples: Vec<(PElem, PElem)> = nat_window(5, 2).into_iter().map(|t| (t[0].clone(), t[1].clone())).collect();
        assert!(cohomologous_iso(&sys, &sys, &Cochain::zero(1), &samples).unwrap().passed());
        let bumped = xi.perturbed(p(2), p(2), CoeffElem::constant(1, ExactScalar::from_int(3)));
        let other = ProductSystem::twisted(d, bumped);
        let report = cohomologous_iso(&sys, &other, &Cochain::zero(1), &samples).unwrap();
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].tuple, ["2", "2"]);
    }

    #[test]
    fn bimodule_identities() {
        let sys = ProductSystem::untwisted(Dynamics::laurent());
        let a = CoeffElem::u(3).add(&CoeffElem::u(-1).scale(&ExactScalar::imag_unit()));
        let x = sys.fiber(CoeffElem::u(1).add(&CoeffElem::u(4)), p(2));
        let y = sys.fiber(CoeffElem::u(-2), p(2));
        let d = sys.dynamics();
        // ⟨x, y·a⟩ = ⟨x, y⟩a
        let lhs = sys.inner_product(&x, &sys.right_act(&y, &a).unwrap()).unwrap();
        let rhs = d.mul(&sys.inner_product(&x, &y).unwrap(), &a);
        assert_eq!(lhs, rhs);
        // ⟨a·x, y⟩ = ⟨x, a*·y⟩
        let lhs = sys.inner_product(&sys.left_act(&a, &x), &y).unwrap();
        let rhs = sys.inner_product(&x, &sys.left_act(&d.star(&a), &y)).unwrap();
        assert_eq!(lhs, rhs);
        // ⟨x, y⟩* = ⟨y, x⟩
        assert_eq!(d.star(&sys.inner_product(&x, &y).unwrap()), sys.inner_product(&y, &x).unwrap());
    }

    #[test]
    fn flags() {
        let d = Dynamics::laurent();
        let xi = TwoCocycle::bicharacter(&Bicharacter::from_ints(2, 3, [1, 0, 0, 1]).unwrap());
        assert!(xi.normalized_report(&d, &nat_range(10)).unwrap().passed());
        let pairs = vec![(p(2), p(3)), (p(4), p(9))];
        assert!(xi.self_adjoint_report(&d, &pairs).unwrap().passed());
        let skew = xi.perturbed(p(2), p(3), CoeffElem::u(1));
        assert!(!skew.self_adjoint_report(&d, &pairs).unwrap().passed());
    }
}
