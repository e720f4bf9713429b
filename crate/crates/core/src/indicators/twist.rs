//! Effect on indicators of multiplying `ω` by a cocycle inflated from a
//! cyclic quotient.

use num_complex::Complex;
use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use super::table::{full_indicator_table_cached, serialize_complex, TableOptions};
use super::double_unchecked;
use crate::cohomology::{Cochain, UnitScalar};
use crate::error::{Error, Result};
use crate::exact::{recognize, ExactValue};
use crate::group::{Element, GroupHom, Subgroup};
use crate::problem::Pipeline;
use crate::projrep::{twist_character, CharacterCache};
use crate::scalar::{cnorm, Real};
use crate::symbols::{coc_cocycle, index_two_lambda, GroupTheoreticalData};

/// Predicted relation between `ν_m(M′)` and `ν_m(M)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum TwistPrediction {
    /// `ν_m(M′) = u · ν_m(M)`.
    Multiplier(UnitScalar),
    /// `ν_m(M) = ν_m(M′) = 0`.
    BothVanish,
}

/// The relation for `ω′ = ω·κ^t` with `κ` inflated along `p: G → Z/N`,
/// for the simple objects over `HgH`: with `p(g) = k` and `e = ord(k)`,
/// both indicators vanish unless `e | m`, and for `m = se` the multiplier
/// is `ζ^{-stk²/gcd(k,N)}`, `ζ = e^{2πi/N}`.
pub fn cyclic_twist_predict(h: &Subgroup, p: &GroupHom, t: i64, g: Element, m: i64) -> Result<TwistPrediction> {
    if !p.target().is_standard_cyclic() {
        return Err(Error::Contract("p must map onto a standard cyclic group".into()));
    }
    if let Some(&x) = h.elements().iter().find(|&&x| p.apply(x) != 0) {
        return Err(Error::Contract(format!("H is not in the kernel of p: p({x}) ≠ 0")));
    }
    let n = p.target().order() as i64;
    let k = p.apply(g) as i64;
    if k == 0 {
        return Ok(TwistPrediction::Multiplier(UnitScalar::ONE));
    }
    let d = k.gcd(&n);
    let e = n / d;
    if m % e != 0 {
        return Ok(TwistPrediction::BothVanish);
    }
    let s = m / e;
    Ok(TwistPrediction::Multiplier(UnitScalar::from_turns(-s * t * k * k / d, n)))
}

/// One simple object and one `m` of a cyclic twist comparison.
#[derive(Debug, Clone, Serialize)]
#[serde(bound = "")]
pub struct TwistCheckRow<T: Real> {
    pub g: Element,
    pub degree: usize,
    pub character: String,
    pub m: i64,
    pub prediction: TwistPrediction,
    #[serde(serialize_with = "serialize_complex")]
    pub values: Vec<Complex<T>>,
    /// `ν_m(M′)/ν_m(M)` when `ν_m(M) ≠ 0`, recognized exactly.
    pub ratio: Option<ExactValue>,
    pub holds: bool,
}

/// Computes both tables and compares them with [`cyclic_twist_predict`].
pub fn cyclic_twist_check<T: Real>(
    data: &GroupTheoreticalData,
    p: &GroupHom,
    t: i64,
    m_max: usize,
    pipeline: Pipeline,
    opts: &TableOptions,
) -> Result<Vec<TwistCheckRow<T>>> {
    let kappa = Cochain::cyclic_on(p.target(), t)?.inflate(p)?;
    let twisted = GroupTheoreticalData::new(data.subgroup().clone(), data.omega().mul(&kappa)?, data.psi().clone())?;
    let cache: CharacterCache<T> = opts.cache();
    let before = full_indicator_table_cached(data, m_max, pipeline, opts, &cache)?;
    let after = full_indicator_table_cached(&twisted, m_max, pipeline, opts, &cache)?;
    if before.rows.len() != after.rows.len() {
        return Err(Error::Contract("twisted table has a different number of simples".into()));
    }
    let tol = T::recognition_tolerance();
    let n = p.target().order() as i64;
    let mut out = Vec::new();
    for (a, b) in before.rows.iter().zip(&after.rows) {
        if a.g != b.g || a.character != b.character {
            return Err(Error::Contract(format!("simples do not correspond at g = {}", a.g)));
        }
        for m in 1..=m_max as i64 {
            let (x, y) = (a.values[m as usize - 1], b.values[m as usize - 1]);
            let prediction = cyclic_twist_predict(data.subgroup(), p, t, a.g, m)?;
            let mut ratio = None;
            let holds = match prediction {
                TwistPrediction::BothVanish => cnorm(x) < tol && cnorm(y) < tol,
                TwistPrediction::Multiplier(_) if cnorm(x) < tol => cnorm(y) < tol,
                TwistPrediction::Multiplier(u) => {
                    ratio = recognize(y / x, 4 * n * n, 1, tol);
                    let expected = ExactValue { modulus: Ratio::from_integer(1), turns: u.exponent() };
                    ratio == Some(expected) && cnorm(y - u.to_complex::<T>() * x) < tol
                }
            };
            out.push(TwistCheckRow {
                g: a.g,
                degree: a.degree,
                character: a.character.clone(),
                m,
                prediction,
                values: vec![x, y],
                ratio,
                holds,
            });
        }
    }
    Ok(out)
}

/// One simple `D^ω(G)`-module compared with its partner for `ω` times the
/// inflated nontrivial class of `G/N`.
#[derive(Debug, Clone, Serialize)]
#[serde(bound = "")]
pub struct IndexTwoRow<T: Real> {
    pub g: Element,
    pub in_subgroup: bool,
    pub degree: usize,
    pub character: String,
    #[serde(serialize_with = "serialize_complex")]
    pub original: Vec<Complex<T>>,
    #[serde(serialize_with = "serialize_complex")]
    pub twisted: Vec<Complex<T>>,
    /// Whether a sign flip is expected, per `m`.
    pub expect_flip: Vec<bool>,
    pub holds: bool,
}

impl<T: Real> IndexTwoRow<T> {
    /// The `m` where the indicator actually changed sign.
    pub fn flipped(&self) -> Vec<i64> {
        let tol = T::recognition_tolerance();
        (0..self.original.len())
            .filter(|&i| cnorm(self.original[i]) > tol && cnorm(self.twisted[i] + self.original[i]) < tol)
            .map(|i| i as i64 + 1)
            .collect()
    }
}

/// Checks that `ν_m(M′) = −ν_m(M)` exactly when `g ∉ N` and `m ≡ 2 (4)`,
/// with characters matched by `χ′ = λ_g χ` (`λ_g = 1` for `g ∈ N`).
pub fn index_two_twist_check<T: Real>(
    omega: &Cochain,
    n: &Subgroup,
    m_max: usize,
    opts: &TableOptions,
) -> Result<Vec<IndexTwoRow<T>>> {
    if let Some(t) = omega.cocycle_failure() {
        return Err(Error::Validation { identity: "dω = 1".into(), tuple: t });
    }
    let q = GroupHom::index_two_quotient(n)?;
    let omega2 = omega.mul(&Cochain::cyclic_on(q.target(), 1)?.inflate(&q)?)?;
    let grp = omega.group();
    let cache: CharacterCache<T> = opts.cache();
    let tol = T::recognition_tolerance();
    let mut out = Vec::new();
    for class in grp.conjugacy_classes() {
        let g = opts.representatives.iter().copied().find(|p| class.members.contains(p)).unwrap_or(class.representative);
        let inside = n.contains(g);
        let target = coc_cocycle(&omega2, g);
        for chi in cache.get(&coc_cocycle(omega, g))?.iter() {
            let partner = twist_character(chi, |x| if inside { UnitScalar::ONE } else { index_two_lambda(n, x) });
            if **partner.cocycle() != target {
                return Err(Error::Contract(format!("λ_g does not carry coc_g to coc'_g at g = {g}")));
            }
            let mut original = Vec::with_capacity(m_max);
            let mut twisted = Vec::with_capacity(m_max);
            let mut expect_flip = Vec::with_capacity(m_max);
            let mut holds = true;
            for m in 1..=m_max as i64 {
                let a = double_unchecked(omega, g, chi, m)?;
                let b = double_unchecked(&omega2, g, &partner, m)?;
                let flip = !inside && m % 4 == 2;
                holds &= if flip { cnorm(a + b) < tol } else { cnorm(a - b) < tol };
                original.push(a);
                twisted.push(b);
                expect_flip.push(flip);
            }
            out.push(IndexTwoRow {
                g,
                in_subgroup: inside,
                degree: chi.degree(),
                character: chi.short_hash(),
                original,
                twisted,
                expect_flip,
                holds,
            });
        }
    }
    Ok(out)
}
