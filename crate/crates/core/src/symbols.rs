//! Scalar symbols derived from the cocycle data: `coc_g`, `ω_g`, `π_m`,
//! `β_g`, `π̃_m` and the gauge correction factors.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cohomology::{Cochain, LocalCocycle, UnitScalar};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, Subgroup};

/// Largest `|m|` accepted by [`pi`].
pub const MAX_M: i64 = 1000;

/// Groups up to this order get exhaustive cocycle checks; larger ones are
/// sampled.
const EXHAUSTIVE_ORDER: usize = 64;
const COCYCLE_SAMPLES: usize = 200_000;

/// A group, a subgroup and the cochains `ω` on `G` and `ψ` (read on `H`).
#[derive(Debug, Clone)]
pub struct GroupTheoreticalData {
    subgroup: Subgroup,
    omega: Cochain,
    psi: Cochain,
}

/// Outcome of the checks performed by [`GroupTheoreticalData::check`].
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ValidationReport {
    /// First `(a, b, c, d)` with `dω ≠ 1`.
    pub cocycle_failure: Option<Vec<Element>>,
    /// Whether the cocycle condition was checked on every tuple.
    pub cocycle_exhaustive: bool,
    /// First `(a, b, c)` in `H³` with `dψ ≠ ω`.
    pub psi_failure: Option<Vec<Element>>,
    pub adapted: bool,
    pub psi_trivial: bool,
    pub restriction_trivial: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.cocycle_failure.is_none() && self.psi_failure.is_none()
    }

    pub fn into_result(self) -> Result<()> {
        if let Some(t) = self.cocycle_failure {
            return Err(Error::Validation { identity: "dω = 1".into(), tuple: t });
        }
        if let Some(t) = self.psi_failure {
            return Err(Error::Validation { identity: "dψ = ω on H³".into(), tuple: t });
        }
        Ok(())
    }
}

impl GroupTheoreticalData {
    /// Checked constructor: `ω` must be a 3-cocycle with `dψ = ω|_{H³}`.
    pub fn new(subgroup: Subgroup, omega: Cochain, psi: Cochain) -> Result<Self> {
        let d = Self::new_unchecked(subgroup, omega, psi)?;
        d.check().into_result()?;
        Ok(d)
    }

    /// Only shapes are checked.
    pub fn new_unchecked(subgroup: Subgroup, omega: Cochain, psi: Cochain) -> Result<Self> {
        if omega.arity() != 3 || psi.arity() != 2 {
            return Err(Error::Contract("ω must be a 3-cochain and ψ a 2-cochain".into()));
        }
        for c in [&omega, &psi] {
            if **c.group() != **subgroup.parent() {
                return Err(Error::Contract("cochain lives on a different group".into()));
            }
        }
        Ok(Self { subgroup, omega, psi })
    }

    /// `(G, H, ω, 1)`.
    pub fn with_trivial_psi(subgroup: Subgroup, omega: Cochain) -> Result<Self> {
        let psi = Cochain::trivial(subgroup.parent(), 2);
        Self::new(subgroup, omega, psi)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.subgroup.parent()
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn omega(&self) -> &Cochain {
        &self.omega
    }

    pub fn psi(&self) -> &Cochain {
        &self.psi
    }

    pub fn check(&self) -> ValidationReport {
        let n = self.group().order();
        let cocycle_exhaustive = n <= EXHAUSTIVE_ORDER || self.omega.certified_cocycle();
        let cocycle_failure = if cocycle_exhaustive {
            self.omega.cocycle_failure()
        } else {
            let table = self.omega.materialize().unwrap_or_else(|_| self.omega.clone());
            sampled_cocycle_failure(&table, COCYCLE_SAMPLES)
        };
        let dpsi = self.psi.coboundary().expect("arity 2");
        let psi_failure = dpsi.disagreement_on(&self.omega, &self.subgroup);
        ValidationReport {
            cocycle_failure,
            cocycle_exhaustive,
            psi_failure,
            adapted: self.omega.is_adapted(&self.subgroup),
            psi_trivial: self.psi_trivial(),
            restriction_trivial: self.omega.nontrivial_on(&self.subgroup).is_none(),
        }
    }

    pub fn is_adapted(&self) -> bool {
        self.omega.is_adapted(&self.subgroup)
    }

    pub fn psi_trivial(&self) -> bool {
        self.psi.nontrivial_on(&self.subgroup).is_none()
    }

    pub fn stabilizer(&self, g: Element) -> Subgroup {
        self.subgroup.stabilizer_of_coset(g)
    }

    /// The twisted data `(ω·dη, ψ·η|_{H²}·dθ)`.
    pub fn gauge_shift(&self, eta: &Cochain, theta: &Cochain) -> Result<Self> {
        let omega = self.omega.mul(&eta.coboundary()?)?;
        let psi = self.psi.mul(eta)?.mul(&theta.coboundary()?)?;
        Self::new_unchecked(self.subgroup.clone(), omega, psi)
    }

    /// `β_g` on `S = Stab_H(gH)`.
    pub fn beta_g(&self, g: Element) -> LocalCocycle {
        beta_g(self, g)
    }
}

fn sampled_cocycle_failure(omega: &Cochain, samples: usize) -> Option<Vec<Element>> {
    let d = omega.coboundary().ok()?;
    let n = omega.group().order();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..samples)
        .map(|_| (0..4).map(|_| rng.random_range(0..n)).collect::<Vec<_>>())
        .find(|t| !d.eval(t).is_one())
}

/// `coc_g(x, y) = ω(x,y,g) ω⁻¹(x, y▷g, y) ω(xy▷g, x, y)`.
pub fn coc(omega: &Cochain, g: Element, x: Element, y: Element) -> UnitScalar {
    let grp = omega.group();
    let yg = grp.act(y, g);
    let xyg = grp.act(grp.mul(x, y), g);
    omega.eval3(x, y, g) / omega.eval3(x, yg, y) * omega.eval3(xyg, x, y)
}

/// `coc_g` on the centralizer `C_G(g)`.
pub fn coc_cocycle(omega: &Cochain, g: Element) -> LocalCocycle {
    let c = omega.group().centralizer(g);
    LocalCocycle::from_fn(&c, |x, y| coc(omega, g, x, y))
}

/// An adapted 3-cocycle, `ω|_{G×G×H} = 1`, checked once at construction.
#[derive(Debug, Clone)]
pub struct AdaptedCocycle {
    omega: Cochain,
    subgroup: Subgroup,
}

impl AdaptedCocycle {
    pub fn new(omega: Cochain, subgroup: Subgroup) -> Result<Self> {
        if let Some(t) = omega.adaptedness_failure(&subgroup) {
            return Err(Error::Contract(format!("ω is not adapted: ω{t:?} ≠ 1")));
        }
        Ok(Self { omega, subgroup })
    }

    pub fn omega(&self) -> &Cochain {
        &self.omega
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// `ω_g(x, h) = ω(x, h, g)` for `h ∈ H`.
    pub fn omega_g(&self, g: Element, x: Element, h: Element) -> Result<UnitScalar> {
        if !self.subgroup.contains(h) {
            return Err(Error::Contract(format!("ω_g needs its second argument in H, got {h}")));
        }
        Ok(self.omega.eval3(x, h, g))
    }

    /// `ω_g` on `Stab_H(gH)`.
    pub fn omega_g_cocycle(&self, g: Element) -> LocalCocycle {
        let s = self.subgroup.stabilizer_of_coset(g);
        LocalCocycle::from_fn(&s, |x, y| self.omega.eval3(x, y, g))
    }
}

/// `π_m(x)` by the recursion `π_{m+1}(x) = ω(x,x^m,x) π_m(x)` upward and
/// `π_{m-1}(x) = π_m(x) ω⁻¹(x,x^{m-1},x)` downward.
pub fn pi(omega: &Cochain, x: Element, m: i64) -> UnitScalar {
    assert!(m.abs() <= MAX_M, "|m| = {} exceeds {MAX_M}", m.abs());
    if x == 0 {
        return UnitScalar::ONE;
    }
    let g = omega.group();
    let mut acc = UnitScalar::ONE;
    if m > 0 {
        let mut p = 0;
        for _ in 0..m {
            acc *= omega.eval3(x, p, x);
            p = g.mul(p, x);
        }
    } else {
        let xi = g.inv(x);
        let mut p = xi;
        for _ in 0..-m {
            acc /= omega.eval3(x, p, x);
            p = g.mul(p, xi);
        }
    }
    acc
}

/// `β_g(s,t) = ψ(s,t) ψ(a,b) ω(s,tg,a) ω(s,t,g) ω⁻¹(stg,a,b)` with
/// `a = g⁻¹▷t⁻¹`, `b = g⁻¹▷s⁻¹`.
pub fn beta_g(data: &GroupTheoreticalData, g: Element) -> LocalCocycle {
    let grp = data.group();
    let (omega, psi) = (data.omega(), data.psi());
    let gi = grp.inv(g);
    let s_grp = data.stabilizer(g);
    LocalCocycle::from_fn(&s_grp, |s, t| {
        let a = grp.act(gi, grp.inv(t));
        let b = grp.act(gi, grp.inv(s));
        let tg = grp.mul(t, g);
        let stg = grp.mul3(s, t, g);
        psi.eval2(s, t) * psi.eval2(a, b) * omega.eval3(s, tg, a) * omega.eval3(s, t, g)
            / omega.eval3(stg, a, b)
    })
}

/// `λ(s) = η(sg, g⁻¹▷s⁻¹) η(s, g)`.
pub fn lambda_shift(eta: &Cochain, g: Element, s: Element) -> UnitScalar {
    let grp = eta.group();
    let b = grp.act(grp.inv(g), grp.inv(s));
    eta.eval2(grp.mul(s, g), b) * eta.eval2(s, g)
}

/// `γ(s) = θ(s) θ(g⁻¹▷s⁻¹)`.
pub fn gamma_shift(theta: &Cochain, g: Element, s: Element) -> UnitScalar {
    let grp = theta.group();
    theta.eval1(s) * theta.eval1(grp.act(grp.inv(g), grp.inv(s)))
}

/// `π̃_m(s) = π_m(s) η(s,s^m) η⁻¹(s^m,s) η(s^m g, g⁻¹▷s^{-m}) η(s^m,g) θ(s^m) θ(g⁻¹▷s^{-m})`,
/// with `π_m` taken from the original `ω`. Requires `s^m ∈ H`.
pub fn tilde_pi(
    omega: &Cochain,
    eta: &Cochain,
    theta: &Cochain,
    h: &Subgroup,
    g: Element,
    s: Element,
    m: i64,
) -> Result<UnitScalar> {
    let grp = omega.group();
    let sm = grp.pow(s, m);
    if !h.contains(sm) {
        return Err(Error::Contract(format!("π̃: {s}^{m} = {sm} is not in H")));
    }
    let c = grp.act(grp.inv(g), grp.inv(sm));
    Ok(pi(omega, s, m)
        * eta.eval2(s, sm)
        / eta.eval2(sm, s)
        * eta.eval2(grp.mul(sm, g), c)
        * eta.eval2(sm, g)
        * theta.eval1(sm)
        * theta.eval1(c))
}

/// `λ_g(x) = ω⁻¹(g, x, x⁻¹)`, relating `coc_g`- and `β_{(g,1)}`-characters
/// of `C_G(g)` for twisted doubles.
pub fn double_lambda(omega: &Cochain, g: Element, x: Element) -> UnitScalar {
    omega.eval3(g, x, omega.group().inv(x)).inv()
}

/// `i` off the index-two subgroup `N`, `1` on it.
pub fn index_two_lambda(n: &Subgroup, x: Element) -> UnitScalar {
    if n.contains(x) {
        UnitScalar::ONE
    } else {
        UnitScalar::i()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::tuples;
    use crate::group::named::*;
    use crate::group::{direct_product, GroupHom};

    fn random_2cochain(g: &Arc<FiniteGroup>, den: i64, seed: u64) -> Cochain {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Cochain::tabulate(g, 2, |_| UnitScalar::from_turns(rng.random_range(0..den), den)).unwrap()
    }

    fn random_1cochain(g: &Arc<FiniteGroup>, den: i64, seed: u64) -> Cochain {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Cochain::tabulate(g, 1, |_| UnitScalar::from_turns(rng.random_range(0..den), den)).unwrap()
    }

    /// Sample 3-cocycles: inflated cyclic ones times random coboundaries.
    fn sample_cocycles() -> Vec<Cochain> {
        let s3 = symmetric3();
        let a3 = Subgroup::closure(&s3, &[s3.elements().find(|&x| s3.element_order(x) == 3).unwrap()]);
        let sign = GroupHom::index_two_quotient(&a3).unwrap();
        let k2 = Cochain::cyclic(2, 1).unwrap().inflate(&sign).unwrap();
        let d4 = dihedral4();
        let rot = d4.elements().find(|&x| d4.element_order(x) == 4).unwrap();
        let c4 = Subgroup::closure(&d4, &[rot]);
        let kd = Cochain::cyclic(2, 1).unwrap().inflate(&GroupHom::index_two_quotient(&c4).unwrap()).unwrap();
        let z4 = cyclic(4);
        vec![
            k2.mul(&random_2cochain(&s3, 6, 1).coboundary().unwrap()).unwrap(),
            kd.mul(&random_2cochain(&d4, 4, 2).coboundary().unwrap()).unwrap(),
            Cochain::cyclic_on(&z4, 3).unwrap(),
            random_2cochain(&quaternion(), 8, 3).coboundary().unwrap(),
        ]
    }

    #[test]
    fn coc_examples() {
        let z2 = cyclic(2);
        let k = Cochain::cyclic_on(&z2, 1).unwrap();
        assert_eq!(coc(&k, 1, 1, 1), UnitScalar::minus_one());
        assert_eq!(coc(&k, 0, 1, 1), UnitScalar::ONE);
        assert_eq!(coc(&k, 1, 0, 1), UnitScalar::ONE);
        assert_eq!(coc(&Cochain::trivial(&z2, 3), 1, 1, 1), UnitScalar::ONE);
    }

    #[test]
    fn twisted_cocycle_identity() {
        for omega in sample_cocycles() {
            let g = omega.group().clone();
            for t in tuples(g.order(), 4) {
                let (gg, x, y, z) = (t[0], t[1], t[2], t[3]);
                let lhs = coc(&omega, gg, y, z) * coc(&omega, gg, x, g.mul(y, z));
                let rhs = coc(&omega, g.act(z, gg), x, y) * coc(&omega, gg, g.mul(x, y), z);
                assert_eq!(lhs, rhs, "at {t:?}");
            }
        }
    }

    #[test]
    fn pi_power_identities() {
        for omega in sample_cocycles() {
            let g = omega.group().clone();
            for x in g.elements() {
                for m in 0..=12 {
                    let xm = g.pow(x, m);
                    let w = omega.eval3(x, xm, x);
                    assert_eq!(w, coc(&omega, x, x, xm));
                    assert_eq!(w, coc(&omega, x, xm, x));
                }
            }
            for (gg, x) in tuples(g.order(), 2).map(|t| (t[0], t[1])) {
                for m in -6..=6 {
                    let xm = g.pow(x, m);
                    let rhs = pi(&omega, g.act(gg, x), m) * coc(&omega, x, g.act(gg, xm), gg)
                        / coc(&omega, x, gg, xm);
                    assert_eq!(pi(&omega, x, m), rhs, "g = {gg}, x = {x}, m = {m}");
                }
            }
        }
    }

    #[test]
    fn pi_recursion_examples() {
        let z2 = cyclic(2);
        let k = Cochain::cyclic_on(&z2, 1).unwrap();
        assert_eq!(pi(&k, 1, 2), UnitScalar::minus_one());
        assert_eq!(pi(&k, 1, 0), UnitScalar::ONE);
        assert_eq!(pi(&k, 0, 5), UnitScalar::ONE);
        // both directions of the recursion are consistent
        for omega in sample_cocycles() {
            let g = omega.group().clone();
            for x in g.elements() {
                for m in -5..5 {
                    let up = pi(&omega, x, m) * omega.eval3(x, g.pow(x, m), x);
                    assert_eq!(pi(&omega, x, m + 1), up);
                }
            }
        }
    }

    #[test]
    fn pi_under_coboundary_shift() {
        for (i, omega) in sample_cocycles().into_iter().enumerate() {
            let g = omega.group().clone();
            let eta = random_2cochain(&g, 12, 10 + i as u64);
            let shifted = omega.mul(&eta.coboundary().unwrap()).unwrap();
            for x in g.elements() {
                for m in -7..=7 {
                    let xm = g.pow(x, m);
                    let expected = eta.eval2(x, xm) / eta.eval2(xm, x) * pi(&omega, x, m);
                    assert_eq!(pi(&shifted, x, m), expected);
                }
            }
        }
    }

    #[test]
    fn adapted_symbols() {
        // an adapted cocycle: inflation along G → G/N kills N in every slot
        let d4 = dihedral4();
        let rot = d4.elements().find(|&x| d4.element_order(x) == 4).unwrap();
        let c4 = Subgroup::closure(&d4, &[rot]);
        let omega = Cochain::cyclic(2, 1).unwrap().inflate(&GroupHom::index_two_quotient(&c4).unwrap()).unwrap();
        let h = Subgroup::closure(&d4, &[d4.pow(rot, 2)]);
        let a = AdaptedCocycle::new(omega.clone(), h.clone()).unwrap();
        for t in tuples(d4.order(), 2) {
            let (g, x) = (t[0], t[1]);
            for &hh in h.elements() {
                assert_eq!(a.omega_g(g, x, hh).unwrap(), coc(&omega, g, x, hh));
                for &h2 in h.elements() {
                    assert_eq!(a.omega_g(d4.mul(g, h2), x, hh).unwrap(), a.omega_g(g, x, hh).unwrap());
                }
                for z in d4.elements() {
                    assert_eq!(omega.eval3(g, x, d4.mul(z, hh)), omega.eval3(g, x, z));
                }
            }
        }
        assert!(a.omega_g(0, 1, rot).is_err());
        let data = GroupTheoreticalData::with_trivial_psi(h.clone(), omega).unwrap();
        for g in d4.elements() {
            assert_eq!(beta_g(&data, g), a.omega_g_cocycle(g));
        }
        let (_, varpi) = crate::cohomology::double_cocycle(&Cochain::cyclic(2, 1).unwrap()).unwrap();
        let prod = direct_product(&cyclic(2), &cyclic(2)).unwrap();
        assert!(AdaptedCocycle::new(varpi, prod.diagonal().unwrap()).is_err());
    }

    #[test]
    fn beta_is_a_cocycle() {
        let s3 = symmetric3();
        let z2 = cyclic(2);
        let p = direct_product(&s3, &z2).unwrap();
        let (_, p2) = p.projections();
        let eta = random_2cochain(&p.group, 4, 7);
        let omega = Cochain::cyclic(2, 1).unwrap().inflate(&p2).unwrap().mul(&eta.coboundary().unwrap()).unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let c = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        for h in [Subgroup::closure(&p.group, &[p.pair(t, 0)]), Subgroup::closure(&p.group, &[p.pair(t, 0), p.pair(c, 0)])] {
            let data = GroupTheoreticalData::new(h, omega.clone(), eta.clone()).unwrap();
            assert!(!data.psi_trivial());
            for g in p.group.elements() {
                assert!(beta_g(&data, g).is_cocycle(), "β_{g} is not a cocycle");
            }
        }
    }

    #[test]
    fn gauge_shift_of_beta() {
        let s3 = symmetric3();
        let a3 = Subgroup::closure(&s3, &[s3.elements().find(|&x| s3.element_order(x) == 3).unwrap()]);
        let omega = Cochain::cyclic(2, 1).unwrap().inflate(&GroupHom::index_two_quotient(&a3).unwrap()).unwrap();
        let data = GroupTheoreticalData::with_trivial_psi(a3.clone(), omega.clone()).unwrap();
        for seed in 0..5 {
            let eta = random_2cochain(&s3, 6, 100 + seed);
            let theta = random_1cochain(&s3, 6, 200 + seed);
            let shifted = data.gauge_shift(&eta, &theta).unwrap();
            assert!(shifted.check().passed());
            for g in s3.elements() {
                let b = beta_g(&data, g)
                    .twisted_by(|s| lambda_shift(&eta, g, s))
                    .twisted_by(|s| gamma_shift(&theta, g, s));
                assert_eq!(beta_g(&shifted, g), b, "g = {g}");
            }
        }
    }

    #[test]
    fn tilde_pi_reduces_to_pi() {
        let s3 = symmetric3();
        let omega = sample_cocycles().remove(0);
        let h = Subgroup::whole(&s3);
        let one2 = Cochain::trivial(&s3, 2);
        let one1 = Cochain::trivial(&s3, 1);
        for s in s3.elements() {
            for m in -4..=4 {
                assert_eq!(tilde_pi(&omega, &one2, &one1, &h, 0, s, m).unwrap(), pi(&omega, s, m));
            }
            assert!(tilde_pi(&omega, &one2, &one1, &h, s, s, 0).unwrap().is_one());
        }
        let small = Subgroup::trivial(&s3);
        assert!(tilde_pi(&omega, &one2, &one1, &small, 0, 1, 1).is_err());
    }

    #[test]
    fn double_and_index_two_lambdas() {
        let z2 = cyclic(2);
        let k = Cochain::cyclic_on(&z2, 1).unwrap();
        assert_eq!(double_lambda(&k, 1, 1), UnitScalar::minus_one());
        assert_eq!(double_lambda(&k, 1, 0), UnitScalar::ONE);
        assert_eq!(double_lambda(&Cochain::trivial(&z2, 3), 1, 1), UnitScalar::ONE);
        let d4 = dihedral4();
        let rot = d4.elements().find(|&x| d4.element_order(x) == 4).unwrap();
        let n = Subgroup::closure(&d4, &[rot]);
        for x in d4.elements() {
            let l = index_two_lambda(&n, x);
            assert_eq!(l.is_one(), n.contains(x));
            for y in d4.elements() {
                let d = index_two_lambda(&n, y) / index_two_lambda(&n, d4.mul(x, y)) * l;
                assert!(d.pow(2).is_one());
            }
        }
    }

    #[test]
    fn validation_reports_first_failure() {
        let z2 = cyclic(2);
        let bad = Cochain::from_entries(&z2, 3, [(vec![1, 1, 1], UnitScalar::i())]).unwrap();
        let data = GroupTheoreticalData::new_unchecked(Subgroup::trivial(&z2), bad, Cochain::trivial(&z2, 2)).unwrap();
        let report = data.check();
        assert!(!report.passed());
        assert!(matches!(report.into_result(), Err(Error::Validation { .. })));
    }
}
