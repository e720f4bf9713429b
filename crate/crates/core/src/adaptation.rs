//! Replacing `ω` by a cohomologous adapted cocycle `ω·dη`, together with the
//! one-cochain `θ` on `H` that makes `ψ·η|_{H²}·dθ = 1`.

use std::sync::Arc;

use serde::Serialize;

use crate::cohomology::{solve_coboundary, Cochain, CochainLiteral};
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, Subgroup};
use crate::symbols::GroupTheoreticalData;

/// `ω' = ω·dη` adapted to `H`, with `θ` and the coset transversal used.
#[derive(Debug, Clone)]
pub struct AdaptationResult {
    omega_adapted: Cochain,
    eta: Cochain,
    theta: Cochain,
    transversal: Vec<Element>,
}

impl AdaptationResult {
    pub fn omega_adapted(&self) -> &Cochain {
        &self.omega_adapted
    }

    pub fn eta(&self) -> &Cochain {
        &self.eta
    }

    pub fn theta(&self) -> &Cochain {
        &self.theta
    }

    /// Coset representatives `Q`, identity first. Empty when `η` was
    /// supplied externally.
    pub fn transversal(&self) -> &[Element] {
        &self.transversal
    }

    /// Checks the three defining properties against `data`.
    pub fn verify(&self, data: &GroupTheoreticalData) -> Result<()> {
        let expected = data.omega().mul(&self.eta.coboundary()?)?;
        if let Some(t) = expected.disagreement_on(&self.omega_adapted, &Subgroup::whole(data.group())) {
            return Err(Error::Validation { identity: "ω' = ω·dη".into(), tuple: t });
        }
        self.verify_invariants(data)
    }

    /// `ω·dη` adapted and `ψ·η·dθ = 1` on `H²`, without re-deriving `ω·dη`.
    pub fn verify_invariants(&self, data: &GroupTheoreticalData) -> Result<()> {
        let h = data.subgroup();
        if let Some(t) = self.omega_adapted.adaptedness_failure(h) {
            return Err(Error::Validation { identity: "ω·dη adapted".into(), tuple: t });
        }
        let one = data.psi().mul(&self.eta)?.mul(&self.theta.coboundary()?)?;
        if let Some(t) = one.nontrivial_on(h) {
            return Err(Error::Validation { identity: "ψ·η·dθ = 1 on H²".into(), tuple: t });
        }
        Ok(())
    }

    pub fn to_json(&self) -> AdaptationJson {
        AdaptationJson {
            omega_adapted: CochainLiteral::from_cochain(&self.omega_adapted),
            eta: CochainLiteral::from_cochain(&self.eta.materialize().unwrap_or_else(|_| self.eta.clone())),
            theta: CochainLiteral::from_cochain(&self.theta.materialize().unwrap_or_else(|_| self.theta.clone())),
            transversal: self.transversal.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AdaptationJson {
    pub omega_adapted: CochainLiteral,
    pub eta: CochainLiteral,
    pub theta: CochainLiteral,
    pub transversal: Vec<Element>,
}

/// `η₀ = ψ⁻¹` on `H × H` (1 elsewhere) and `ω₁ = ω·dη₀`, so `ω₁|_{H³} = 1`.
pub fn absorb_psi(data: &GroupTheoreticalData) -> Result<(Cochain, Cochain)> {
    data.check().into_result()?;
    let g = data.group();
    let h = data.subgroup();
    let psi = data.psi();
    let eta0 = if data.psi_trivial() {
        Cochain::trivial(g, 2)
    } else {
        let entries = h
            .elements()
            .iter()
            .flat_map(|&a| h.elements().iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| a != 0 && b != 0)
            .map(|(a, b)| (vec![a, b], psi.eval2(a, b).inv()));
        Cochain::from_entries(g, 2, entries)?
    };
    let omega1 = data.omega().mul(&eta0.coboundary()?)?;
    debug_assert!(omega1.nontrivial_on(h).is_none());
    Ok((omega1, eta0))
}

/// Unique factorization `x = p·h` over a transversal.
struct Factorization {
    p: Vec<Element>,
    h: Vec<Element>,
}

impl Factorization {
    fn new(g: &FiniteGroup, sub: &Subgroup, transversal: &[Element]) -> Result<Self> {
        let n = g.order();
        let mut p = vec![usize::MAX; n];
        let mut hh = vec![usize::MAX; n];
        if transversal.first() != Some(&0) {
            return Err(Error::Contract("transversal must start with the identity".into()));
        }
        for &q in transversal {
            for &s in sub.elements() {
                let x = g.mul(q, s);
                if p[x] != usize::MAX {
                    return Err(Error::Contract(format!("transversal is not a cross section at {x}")));
                }
                p[x] = q;
                hh[x] = s;
            }
        }
        if p.contains(&usize::MAX) {
            return Err(Error::Contract("transversal misses a coset".into()));
        }
        Ok(Self { p, h: hh })
    }
}

/// `η = η₁·η₂` for `ω` with `ω|_{H³} = 1`:
/// `η₁(ph, qh') = ω(p, h, h')`, `ω₀ = ω·dη₁`, and
/// `η₂(ph, qh') = ω₀⁻¹(ph, q, h') ω₀(p, h, q)`.
pub fn natale_eta(omega: &Cochain, sub: &Subgroup, transversal: &[Element]) -> Result<Cochain> {
    if let Some(t) = omega.nontrivial_on(sub) {
        return Err(Error::Contract(format!("ω is not trivial on H³ at {t:?}")));
    }
    let g = omega.group();
    let f = Factorization::new(g, sub, transversal)?;
    let eta1 = Cochain::tabulate(g, 2, |a| omega.eval3(f.p[a[0]], f.h[a[0]], f.h[a[1]]))?;
    let omega0 = omega.mul(&eta1.coboundary()?)?;
    let eta2 = Cochain::tabulate(g, 2, |a| {
        let (x, y) = (a[0], a[1]);
        let (q, h2) = (f.p[y], f.h[y]);
        omega0.eval3(f.p[x], f.h[x], q) / omega0.eval3(x, q, h2)
    })?;
    Cochain::tabulate(g, 2, |a| eta1.eval(a) * eta2.eval(a))
}

/// Natale adaptation with the canonical transversal, which contains the
/// minimal double coset representatives.
pub fn adapt(data: &GroupTheoreticalData) -> Result<AdaptationResult> {
    let reps = data.subgroup().double_cosets().representatives;
    adapt_with_transversal(data, &reps)
}

/// Natale adaptation with a transversal preferring the given elements.
pub fn adapt_with_transversal(data: &GroupTheoreticalData, preferred: &[Element]) -> Result<AdaptationResult> {
    let (omega1, eta0) = absorb_psi(data)?;
    let h = data.subgroup();
    let transversal = h.transversal_with(preferred);
    let g = data.group();
    let eta = if omega1.is_adapted(h) {
        eta0
    } else {
        let eta12 = natale_eta(&omega1, h, &transversal)?;
        Cochain::tabulate(g, 2, |a| eta0.eval(a) * eta12.eval(a))?
    };
    let omega_adapted = data.omega().mul(&eta.coboundary()?)?.memoized();
    let result = AdaptationResult { omega_adapted, eta, theta: Cochain::trivial(g, 1), transversal };
    result.verify_invariants(data)?;
    Ok(result)
}

/// Adaptation with a caller-supplied `η`; `θ` solves `dθ = (ψ·η|_{H²})⁻¹`.
pub fn adapt_with_eta(data: &GroupTheoreticalData, eta: &Cochain) -> Result<AdaptationResult> {
    let h = data.subgroup();
    let omega_adapted = data.omega().mul(&eta.coboundary()?)?.memoized();
    if let Some(t) = omega_adapted.adaptedness_failure(h) {
        return Err(Error::Contract(format!("ω·dη is not adapted at {t:?}")));
    }
    let target = data.psi().mul(eta)?.inverse();
    let theta = solve_coboundary(&target, h)?;
    let result = AdaptationResult { omega_adapted, eta: eta.clone(), theta, transversal: Vec::new() };
    result.verify_invariants(data)?;
    Ok(result)
}

/// The trivial adaptation of already adapted data with `ψ = 1`.
pub fn identity_adaptation(data: &GroupTheoreticalData) -> Result<AdaptationResult> {
    let g: &Arc<FiniteGroup> = data.group();
    adapt_with_eta(data, &Cochain::trivial(g, 2)).map(|mut r| {
        r.theta = if r.theta.nontrivial_on(data.subgroup()).is_none() { Cochain::trivial(g, 1) } else { r.theta };
        r
    })
}
