//! Higher Frobenius–Schur indicators `ν_m` of the simple objects of
//! `C(G, H, ω, ψ)` and of twisted doubles.
//!
//! A simple object is labeled by a double coset representative `g` and an
//! irreducible projective character `χ` of `S = Stab_H(gH)`. Which cocycle
//! `χ` is taken for depends on the formula:
//!
//! | formula | data | cocycle of `χ` |
//! |---|---|---|
//! | [`indicator_adapted`] | `ω` adapted, `ψ = 1` | `ω_g` |
//! | [`indicator_general`] | any, with a gauge `(η, θ)` | `β_g` of the original data |
//! | [`indicator_trivial_restriction`] | `ω|_{H³} = 1`, `ψ = 1` | `β_g` |
//! | [`indicator_double`] | `ω` on `G`, class of `g` | `coc_g` on `C_G(g)` |

mod induced;
mod table;
mod twist;

pub use induced::{induce_module, indicator_module_sum, InducedModule};
pub use table::{
    double_indicator_table, full_indicator_table, full_indicator_table_cached, representatives, simple_objects,
    IndicatorRow, IndicatorTable, SimpleCharacter, SimpleFamily, TableOptions,
};
pub use twist::{
    cyclic_twist_check, cyclic_twist_predict, index_two_twist_check, IndexTwoRow, TwistCheckRow, TwistPrediction,
};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::adaptation::AdaptationResult;
use crate::cohomology::{Cochain, LocalCocycle, UnitScalar};
use crate::error::{Error, Result};
use crate::group::{Element, Subgroup};
use crate::projrep::ProjectiveCharacter;
use crate::scalar::{cscale, czero, Real};
use crate::symbols::{pi, tilde_pi, AdaptedCocycle, GroupTheoreticalData, MAX_M};

/// How the sum over the coset `gH` is organized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Variant {
    /// Over `r ∈ gH` as a set.
    #[default]
    CosetSum,
    /// Over `h ∈ H` with `r = gh`.
    HSum,
    /// Over representatives of the `S`-conjugation orbits on `gH`, weighted
    /// by `1/|S ∩ C_G(r)|`.
    OrbitSum,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::CosetSum, Variant::HSum, Variant::OrbitSum];
}

fn check_m(m: i64) -> Result<()> {
    if m.abs() > MAX_M {
        return Err(Error::Contract(format!("|m| = {} exceeds {MAX_M}", m.abs())));
    }
    Ok(())
}

fn check_character<T: Real>(chi: &ProjectiveCharacter<T>, expected: &LocalCocycle) -> Result<()> {
    if chi.subgroup() != expected.subgroup() {
        return Err(Error::Contract("character lives on the wrong stabilizer".into()));
    }
    if **chi.cocycle() != *expected {
        return Err(Error::Contract("character belongs to a different cocycle".into()));
    }
    Ok(())
}

#[inline]
fn term<T: Real>(u: UnitScalar, z: Complex<T>) -> Complex<T> {
    u.to_complex::<T>() * z
}

/// `(1/|S|) Σ_{r ∈ gH, r^m ∈ S} f(r, r^{-m})` organized as `variant`.
/// The sum over no terms is exactly zero.
fn coset_sum<T: Real>(
    h: &Subgroup,
    s: &Subgroup,
    g: Element,
    m: i64,
    variant: Variant,
    mut f: impl FnMut(Element, Element) -> Result<Complex<T>>,
) -> Result<Complex<T>> {
    let grp = h.parent();
    let mut acc = czero::<T>();
    let n = T::lit(s.order() as f64);
    let mut visit = |r: Element, weight: T, acc: &mut Complex<T>| -> Result<()> {
        let rm = grp.pow(r, m);
        if s.contains(rm) {
            let z = f(r, grp.inv(rm))?;
            *acc += Complex::new(z.re * weight, z.im * weight);
        }
        Ok(())
    };
    match variant {
        Variant::CosetSum => {
            let mut coset = h.coset(g);
            coset.sort_unstable();
            for r in coset {
                visit(r, T::one() / n, &mut acc)?;
            }
        }
        Variant::HSum => {
            for &x in h.elements() {
                visit(grp.mul(g, x), T::one() / n, &mut acc)?;
            }
        }
        Variant::OrbitSum => {
            for orbit in s.adjoint_orbit_representatives(&h.coset(g))? {
                visit(orbit.representative, T::one() / T::lit(orbit.stabilizer_order as f64), &mut acc)?;
            }
        }
    }
    Ok(acc)
}

/// `ν_m` for adapted `ω` and `ψ = 1`:
/// `(1/|S|) Σ_{r ∈ gH, r^m ∈ S} π_{-m}(r) χ(r^{-m})` with `χ` an
/// `ω_g`-character.
pub fn indicator_adapted<T: Real>(
    omega: &AdaptedCocycle,
    g: Element,
    chi: &ProjectiveCharacter<T>,
    m: i64,
    variant: Variant,
) -> Result<Complex<T>> {
    check_m(m)?;
    check_character(chi, &omega.omega_g_cocycle(g))?;
    Ok(adapted_unchecked(omega.omega(), omega.subgroup(), g, chi, m, variant))
}

pub(crate) fn adapted_unchecked<T: Real>(
    omega: &Cochain,
    h: &Subgroup,
    g: Element,
    chi: &ProjectiveCharacter<T>,
    m: i64,
    variant: Variant,
) -> Complex<T> {
    coset_sum(h, chi.subgroup(), g, m, variant, |r, a| Ok(term(pi(omega, r, -m), chi.value(a))))
        .expect("stabilizer preserves the coset")
}

/// Data together with a verified gauge `(η, θ)` making `ω·dη` adapted and
/// `ψ·η·dθ` trivial on `H²`.
#[derive(Debug, Clone)]
pub struct GaugedData {
    data: GroupTheoreticalData,
    eta: Cochain,
    theta: Cochain,
}

impl GaugedData {
    pub fn new(data: &GroupTheoreticalData, adaptation: &AdaptationResult) -> Result<Self> {
        adaptation.verify_invariants(data).map_err(|e| Error::Contract(format!("gauge does not adapt the data: {e}")))?;
        Ok(Self { data: data.clone(), eta: adaptation.eta().clone(), theta: adaptation.theta().clone() })
    }

    pub fn data(&self) -> &GroupTheoreticalData {
        &self.data
    }

    pub fn eta(&self) -> &Cochain {
        &self.eta
    }

    pub fn theta(&self) -> &Cochain {
        &self.theta
    }
}

/// `ν_m` for arbitrary data:
/// `(1/|S|) Σ_{r ∈ gH, r^m ∈ S} π̃_{-m}(r) χ(r^{-m})` with `χ` a
/// `β_g`-character of the original `(ω, ψ)`.
pub fn indicator_general<T: Real>(
    gauged: &GaugedData,
    g: Element,
    chi: &ProjectiveCharacter<T>,
    m: i64,
    variant: Variant,
) -> Result<Complex<T>> {
    check_m(m)?;
    check_character(chi, &gauged.data.beta_g(g))?;
    general_unchecked(gauged, g, chi, m, variant)
}

pub(crate) fn general_unchecked<T: Real>(
    gauged: &GaugedData,
    g: Element,
    chi: &ProjectiveCharacter<T>,
    m: i64,
    variant: Variant,
) -> Result<Complex<T>> {
    let d = &gauged.data;
    let h = d.subgroup();
    coset_sum(h, chi.subgroup(), g, m, variant, |r, a| {
        let t = tilde_pi(d.omega(), &gauged.eta, &gauged.theta, h, g, r, -m)?;
        Ok(term(t, chi.value(a)))
    })
}

/// `ν_m` when `ω|_{H³} = 1` and `ψ = 1`, with `r = gh` and `y = r^{-m}`:
/// `(1/|S|) Σ π_{-m}(r) ω(g, g⁻¹▷y, g⁻¹▷y⁻¹) ε(r) χ(y)`, where
/// `ε(r) = ω(g,h,y) ω(y,g,h) ω⁻¹(g,g⁻¹▷y,h)` collects the terms
/// `η(r,y) η⁻¹(y,r)` of the Natale cochain for a transversal through `g`.
pub fn indicator_trivial_restriction<T: Real>(
    data: &GroupTheoreticalData,
    g: Element,
    chi: &ProjectiveCharacter<T>,
    m: i64,
) -> Result<Complex<T>> {
    check_m(m)?;
    check_trivial_restriction(data)?;
    check_character(chi, &data.beta_g(g))?;
    Ok(trivial_restriction_unchecked(data, g, chi, m))
}

pub(crate) fn check_trivial_restriction(data: &GroupTheoreticalData) -> Result<()> {
    if let Some(t) = data.omega().nontrivial_on(data.subgroup()) {
        return Err(Error::Contract(format!("ω is not trivial on H³ at {t:?}")));
    }
    if !data.psi_trivial() {
        return Err(Error::Contract("ψ must be trivial".into()));
    }
    Ok(())
}

pub(crate) fn trivial_restriction_unchecked<T: Real>(
    data: &GroupTheoreticalData,
    g: Element,
    chi: &ProjectiveCharacter<T>,
    m: i64,
) -> Complex<T> {
    let grp = data.group();
    let omega = data.omega();
    let gi = grp.inv(g);
    coset_sum(data.subgroup(), chi.subgroup(), g, m, Variant::CosetSum, |r, y| {
        let h = grp.mul(gi, r);
        let gy = grp.act(gi, y);
        let eps = omega.eval3(g, h, y) * omega.eval3(y, g, h) / omega.eval3(g, gy, h);
        let u = pi(omega, r, -m) * omega.eval3(g, gy, grp.inv(gy)) * eps;
        Ok(term(u, chi.value(y)))
    })
    .expect("stabilizer preserves the coset")
}

/// `ν_m` of the simple `D^ω(G)`-module over the class of `g` with
/// `coc_g`-character `χ` of `C_G(g)`: with `z = x^{-m}`,
/// `(1/|C_G(g)|) Σ_{(gx)^m = x^m} π_{-m}(gx)/π_{-m}(x) ω(g,x,z) ω(z,g,x) ω⁻¹(g,z,x) χ(z)`.
pub fn indicator_double<T: Real>(omega: &Cochain, g: Element, chi: &ProjectiveCharacter<T>, m: i64) -> Result<Complex<T>> {
    check_m(m)?;
    let grp = omega.group();
    if **chi.subgroup().parent() != **grp || *chi.subgroup() != grp.centralizer(g) {
        return Err(Error::Contract("character must live on the centralizer of g".into()));
    }
    double_unchecked(omega, g, chi, m)
}

pub(crate) fn double_unchecked<T: Real>(omega: &Cochain, g: Element, chi: &ProjectiveCharacter<T>, m: i64) -> Result<Complex<T>> {
    let grp = omega.group();
    let mut acc = czero::<T>();
    for x in grp.elements() {
        let gx = grp.mul(g, x);
        let z = grp.pow(x, -m);
        if grp.pow(gx, -m) != z {
            continue;
        }
        let c = chi
            .get(z)
            .ok_or_else(|| Error::Contract(format!("x^-m = {z} is not in the centralizer")))?;
        let eps = omega.eval3(g, x, z) * omega.eval3(z, g, x) / omega.eval3(g, z, x);
        acc += term(pi(omega, gx, -m) / pi(omega, x, -m) * eps, c);
    }
    let n = T::lit(chi.subgroup().order() as f64);
    Ok(cscale(acc, T::one() / n))
}
