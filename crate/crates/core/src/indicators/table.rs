//! Whole indicator tables: every simple object against `m = 1..m_max`.

use std::path::PathBuf;
use std::sync::Arc;

use num_complex::Complex;
use num_integer::Integer;
use rayon::prelude::*;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::{
    adapted_unchecked, check_trivial_restriction, double_unchecked, general_unchecked, trivial_restriction_unchecked,
    GaugedData, Variant,
};
use crate::adaptation::adapt_with_transversal;
use crate::cohomology::{Cochain, LocalCocycle};
use crate::error::{Error, Result};
use crate::exact::{recognize, ExactValue};
use crate::group::{Element, Subgroup};
use crate::problem::Pipeline;
use crate::projrep::{CharacterCache, ProjectiveCharacter, SolverOptions};
use crate::scalar::Real;
use crate::symbols::{coc_cocycle, AdaptedCocycle, GroupTheoreticalData};

#[derive(Debug, Clone, Default)]
pub struct TableOptions {
    /// Overrides the per-stabilizer seed derived from the cocycle hash.
    pub seed: Option<u64>,
    pub eigen_gap: Option<f64>,
    /// On-disk character cache.
    pub cache_dir: Option<PathBuf>,
    pub variant: Variant,
    /// Preferred double coset representatives; other double cosets use
    /// their minimal element.
    pub representatives: Vec<Element>,
}

impl TableOptions {
    pub fn solver(&self) -> SolverOptions {
        SolverOptions { seed: self.seed, eigen_gap: self.eigen_gap, ..SolverOptions::default() }
    }

    pub fn cache<T: Real>(&self) -> CharacterCache<T> {
        match &self.cache_dir {
            Some(dir) => CharacterCache::with_dir(self.solver(), dir.clone()),
            None => CharacterCache::new(self.solver()),
        }
    }
}

pub(crate) fn serialize_complex<T: Real, S: Serializer>(values: &[Complex<T>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for z in values {
        seq.serialize_element(&[z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN)])?;
    }
    seq.end()
}

/// One simple object with its indicators `ν_1, …, ν_{m_max}`.
#[derive(Debug, Clone, Serialize)]
#[serde(bound = "")]
pub struct IndicatorRow<T: Real> {
    pub g: Element,
    pub stabilizer_order: usize,
    pub degree: usize,
    /// Short digest of the cocycle and the character values.
    pub character: String,
    #[serde(serialize_with = "serialize_complex")]
    pub values: Vec<Complex<T>>,
    pub exact: Vec<Option<ExactValue>>,
}

impl<T: Real> IndicatorRow<T> {
    pub fn label(&self) -> String {
        format!("g={}, deg={}, chi={}", self.g, self.degree, self.character)
    }

    /// The exact value when recognized, else `re+imi`.
    pub fn cell(&self, i: usize) -> String {
        match self.exact[i] {
            Some(v) => v.to_string(),
            None => {
                let z = self.values[i];
                format!("{:.12}{:+.12}i", z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN))
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(bound = "")]
pub struct IndicatorTable<T: Real> {
    /// The pipeline actually used (never `auto`).
    pub pipeline: Pipeline,
    pub m_max: usize,
    pub rows: Vec<IndicatorRow<T>>,
}

impl<T: Real> IndicatorTable<T> {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize")
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["simple".to_string()];
        header.extend((1..=self.m_max).map(|m| format!("m={m}")));
        w.write_record(&header).map_err(|e| Error::Contract(e.to_string()))?;
        for row in &self.rows {
            let mut rec = vec![row.label()];
            rec.extend((0..self.m_max).map(|i| row.cell(i)));
            w.write_record(&rec).map_err(|e| Error::Contract(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Contract(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("utf-8"))
    }

    /// Rows over the double coset of `g`.
    pub fn rows_at(&self, g: Element) -> impl Iterator<Item = &IndicatorRow<T>> {
        self.rows.iter().filter(move |r| r.g == g)
    }
}

/// One `β_g`-character of `S = Stab_H(gH)`.
#[derive(Debug, Clone, Serialize)]
pub struct SimpleCharacter {
    pub degree: usize,
    pub hash: String,
    pub values: Vec<Option<ExactValue>>,
}

/// The simples over one double coset `HgH`.
#[derive(Debug, Clone, Serialize)]
pub struct SimpleFamily {
    pub g: Element,
    pub stabilizer: Vec<Element>,
    /// Canonical digest of `β_g` on `S`.
    pub cocycle: String,
    pub cocycle_trivial: bool,
    pub characters: Vec<SimpleCharacter>,
}

/// The simple objects of `C(G, H, ω, ψ)`, grouped by double coset.
pub fn simple_objects<T: Real>(data: &GroupTheoreticalData, opts: &TableOptions) -> Result<Vec<SimpleFamily>> {
    data.check().into_result()?;
    let cache = opts.cache::<T>();
    representatives(data.subgroup(), &opts.representatives)
        .into_iter()
        .map(|g| {
            let beta = data.beta_g(g);
            let chars = cache.get(&beta)?;
            Ok(SimpleFamily {
                g,
                stabilizer: beta.subgroup().elements().to_vec(),
                cocycle: beta.hash_hex(),
                cocycle_trivial: beta.is_trivial(),
                characters: chars
                    .iter()
                    .map(|c| SimpleCharacter { degree: c.degree(), hash: c.short_hash(), values: c.exact_values() })
                    .collect(),
            })
        })
        .collect()
}

enum Plan {
    Adapted(AdaptedCocycle),
    General(GaugedData),
    TrivialRestriction,
}

/// Double coset representatives of `H\G/H`, preferring `preferred`.
pub fn representatives(h: &Subgroup, preferred: &[Element]) -> Vec<Element> {
    let dc = h.double_cosets();
    let mut reps = dc.representatives.clone();
    let mut fixed = vec![false; reps.len()];
    for &p in preferred {
        let c = dc.class_of[p];
        if !fixed[c] {
            reps[c] = p;
            fixed[c] = true;
        }
    }
    reps
}

/// The indicator table of `C(G, H, ω, ψ)` with a fresh character cache.
pub fn full_indicator_table<T: Real>(
    data: &GroupTheoreticalData,
    m_max: usize,
    pipeline: Pipeline,
    opts: &TableOptions,
) -> Result<IndicatorTable<T>> {
    full_indicator_table_cached(data, m_max, pipeline, opts, &opts.cache())
}

/// [`full_indicator_table`] sharing a character cache across calls.
///
/// `auto` uses the adapted formula when `ω` is adapted and `ψ = 1`, and
/// otherwise adapts the data and uses the general one.
pub fn full_indicator_table_cached<T: Real>(
    data: &GroupTheoreticalData,
    m_max: usize,
    pipeline: Pipeline,
    opts: &TableOptions,
    cache: &CharacterCache<T>,
) -> Result<IndicatorTable<T>> {
    data.check().into_result()?;
    if pipeline == Pipeline::Double {
        return double_pipeline(data, m_max, opts, cache);
    }
    let h = data.subgroup();
    let reps = representatives(h, &opts.representatives);
    let resolved = match pipeline {
        Pipeline::Auto if data.psi_trivial() && data.is_adapted() => Pipeline::Adapted,
        Pipeline::Auto => Pipeline::General,
        p => p,
    };
    let plan = match resolved {
        Pipeline::Adapted => {
            if !data.psi_trivial() {
                return Err(Error::Contract("the adapted pipeline needs ψ = 1".into()));
            }
            Plan::Adapted(AdaptedCocycle::new(data.omega().clone(), h.clone())?)
        }
        Pipeline::General => {
            let ad = adapt_with_transversal(data, &reps)?;
            Plan::General(GaugedData::new(data, &ad)?)
        }
        Pipeline::TrivialRestriction => {
            check_trivial_restriction(data)?;
            Plan::TrivialRestriction
        }
        Pipeline::Auto | Pipeline::Double => unreachable!(),
    };
    let cocycles: Vec<LocalCocycle> = reps
        .iter()
        .map(|&g| match &plan {
            Plan::Adapted(w) => w.omega_g_cocycle(g),
            _ => data.beta_g(g),
        })
        .collect();
    let mut den = data.omega().denominator_bound().lcm(&data.psi().denominator_bound());
    if let Plan::General(gd) = &plan {
        den = den.lcm(&gd.eta().denominator_bound()).lcm(&gd.theta().denominator_bound());
    }
    let order = data.group().order();
    let rows = fill(&reps, &cocycles, cache, m_max, den, order, |g, chi, m| match &plan {
        Plan::Adapted(w) => Ok(adapted_unchecked(w.omega(), h, g, chi, m, opts.variant)),
        Plan::General(gd) => general_unchecked(gd, g, chi, m, opts.variant),
        Plan::TrivialRestriction => Ok(trivial_restriction_unchecked(data, g, chi, m)),
    })?;
    Ok(IndicatorTable { pipeline: resolved, m_max, rows })
}

fn double_pipeline<T: Real>(
    data: &GroupTheoreticalData,
    m_max: usize,
    opts: &TableOptions,
    cache: &CharacterCache<T>,
) -> Result<IndicatorTable<T>> {
    let inner = data
        .omega()
        .double_inner()
        .ok_or_else(|| Error::Contract("the double pipeline needs ω built as a double".into()))?;
    let n = inner.group().order();
    let (a, b) = data.group().factors().ok_or_else(|| Error::Contract("G is not a direct product".into()))?;
    let diagonal: Vec<Element> = (0..n).map(|x| x * n + x).collect();
    if **a != **inner.group() || **b != **inner.group() || data.subgroup().elements() != diagonal.as_slice() {
        return Err(Error::Contract("the double pipeline needs H to be the diagonal of G × G".into()));
    }
    if !data.psi_trivial() {
        return Err(Error::Contract("the double pipeline needs ψ = 1".into()));
    }
    let mut table = double_table_cached(inner, m_max, opts, cache)?;
    for row in &mut table.rows {
        row.g *= n;
    }
    Ok(table)
}

/// Indicators of all simple `D^ω(G)`-modules, one row per class
/// representative `g` and `coc_g`-character of `C_G(g)`.
pub fn double_indicator_table<T: Real>(omega: &Cochain, m_max: usize, opts: &TableOptions) -> Result<IndicatorTable<T>> {
    double_table_cached(omega, m_max, opts, &opts.cache())
}

fn double_table_cached<T: Real>(
    omega: &Cochain,
    m_max: usize,
    opts: &TableOptions,
    cache: &CharacterCache<T>,
) -> Result<IndicatorTable<T>> {
    if omega.arity() != 3 {
        return Err(Error::Contract("ω must be a 3-cochain".into()));
    }
    if let Some(t) = omega.cocycle_failure() {
        return Err(Error::Validation { identity: "dω = 1".into(), tuple: t });
    }
    let grp = omega.group();
    let classes = grp.conjugacy_classes();
    let mut reps: Vec<Element> = classes.iter().map(|c| c.representative).collect();
    for (i, c) in classes.iter().enumerate() {
        if let Some(&p) = opts.representatives.iter().find(|p| c.members.contains(p)) {
            reps[i] = p;
        }
    }
    let cocycles: Vec<LocalCocycle> = reps.iter().map(|&g| coc_cocycle(omega, g)).collect();
    let den = omega.denominator_bound();
    let rows = fill(&reps, &cocycles, cache, m_max, den, grp.order(), |g, chi, m| double_unchecked(omega, g, chi, m))?;
    Ok(IndicatorTable { pipeline: Pipeline::Double, m_max, rows })
}

fn fill<T: Real>(
    reps: &[Element],
    cocycles: &[LocalCocycle],
    cache: &CharacterCache<T>,
    m_max: usize,
    den: i64,
    order: usize,
    value: impl Fn(Element, &ProjectiveCharacter<T>, i64) -> Result<Complex<T>> + Sync,
) -> Result<Vec<IndicatorRow<T>>> {
    let tables: Vec<Arc<Vec<ProjectiveCharacter<T>>>> =
        cocycles.par_iter().map(|b| cache.get(b)).collect::<Result<_>>()?;
    let jobs: Vec<(Element, &ProjectiveCharacter<T>, i64)> = reps
        .iter()
        .zip(&tables)
        .zip(cocycles)
        .flat_map(|((&g, chars), b)| {
            let conductor = 4 * den.lcm(&b.denominator()).lcm(&(order as i64));
            chars.iter().map(move |chi| (g, chi, conductor))
        })
        .collect();
    jobs.par_iter()
        .map(|&(g, chi, conductor)| {
            let values = (1..=m_max as i64).map(|m| value(g, chi, m)).collect::<Result<Vec<_>>>()?;
            let exact = values
                .iter()
                .map(|&z| recognize(z, conductor, order as i64, T::recognition_tolerance()))
                .collect();
            Ok(IndicatorRow {
                g,
                stabilizer_order: chi.subgroup().order(),
                degree: chi.degree(),
                character: chi.short_hash(),
                values,
                exact,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{double_cocycle, UnitScalar};
    use crate::group::named::*;

    fn classical(g: &std::sync::Arc<crate::group::FiniteGroup>, chi: &ProjectiveCharacter<f64>, m: i64) -> Complex<f64> {
        let s: Complex<f64> = g.elements().map(|x| chi.value(g.pow(x, m))).sum();
        s / g.order() as f64
    }

    #[test]
    fn rep_s3_matches_classical_sum() {
        let s3 = symmetric3();
        let data = GroupTheoreticalData::with_trivial_psi(Subgroup::whole(&s3), Cochain::trivial(&s3, 3)).unwrap();
        let table = full_indicator_table::<f64>(&data, 6, Pipeline::Auto, &TableOptions::default()).unwrap();
        assert_eq!(table.pipeline, Pipeline::Adapted);
        let chars = crate::projrep::irreducible_projective_characters::<f64>(&data.beta_g(0)).unwrap();
        assert_eq!(table.rows.len(), 3);
        for (row, chi) in table.rows.iter().zip(&chars) {
            for m in 1..=6 {
                assert!((row.values[m - 1] - classical(&s3, chi, m as i64)).norm() < 1e-9);
            }
        }
        let two = table.rows.iter().find(|r| r.degree == 2).unwrap();
        let cells: Vec<String> = (0..6).map(|i| two.cell(i)).collect();
        assert_eq!(cells, ["0", "1", "1", "1", "0", "2"]);
    }

    #[test]
    fn pipelines_agree_on_a_double() {
        let z2 = cyclic(2);
        let (p, varpi) = double_cocycle(&Cochain::cyclic_on(&z2, 1).unwrap()).unwrap();
        let data = GroupTheoreticalData::with_trivial_psi(p.diagonal().unwrap(), varpi).unwrap();
        let opts = TableOptions { representatives: vec![0, 2], ..Default::default() };
        let general = full_indicator_table::<f64>(&data, 4, Pipeline::General, &opts).unwrap();
        let trivial = full_indicator_table::<f64>(&data, 4, Pipeline::TrivialRestriction, &opts).unwrap();
        let double = full_indicator_table::<f64>(&data, 4, Pipeline::Double, &opts).unwrap();
        assert_eq!(general.rows.len(), 4);
        assert_eq!(double.rows.len(), 4);
        for g in [0, 2] {
            let mut a: Vec<String> = general.rows_at(g).map(|r| (0..4).map(|i| r.cell(i)).collect::<Vec<_>>().join(" ")).collect();
            let mut b: Vec<String> = double.rows_at(g).map(|r| (0..4).map(|i| r.cell(i)).collect::<Vec<_>>().join(" ")).collect();
            let mut c: Vec<String> = trivial.rows_at(g).map(|r| (0..4).map(|i| r.cell(i)).collect::<Vec<_>>().join(" ")).collect();
            a.sort();
            b.sort();
            c.sort();
            assert_eq!(a, b);
            assert_eq!(a, c);
        }
        let semions: Vec<&IndicatorRow<f64>> = double.rows_at(2).collect();
        assert!(semions.iter().all(|r| r.cell(1) == "-1"));
    }

    #[test]
    fn output_formats() {
        let z3 = cyclic(3);
        let data = GroupTheoreticalData::with_trivial_psi(Subgroup::trivial(&z3), Cochain::trivial(&z3, 3)).unwrap();
        let table = full_indicator_table::<f64>(&data, 3, Pipeline::Auto, &TableOptions::default()).unwrap();
        let csv = table.to_csv().unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "simple,m=1,m=2,m=3");
        assert!(lines.next().unwrap().starts_with("\"g=0, deg=1, chi="));
        let json: serde_json::Value = serde_json::from_str(&table.to_json()).unwrap();
        assert_eq!(json["pipeline"], "adapted");
        assert_eq!(json["rows"][1]["exact"], serde_json::json!(["0", "0", "1"]));
        let cell = &json["rows"][1]["values"][2];
        assert!((cell[0].as_f64().unwrap() - 1.0).abs() < 1e-12 && cell[1].as_f64().unwrap().abs() < 1e-12);
    }

    #[test]
    fn simples_of_rep_s3() {
        let s3 = symmetric3();
        let data = GroupTheoreticalData::with_trivial_psi(Subgroup::whole(&s3), Cochain::trivial(&s3, 3)).unwrap();
        let fams = simple_objects::<f64>(&data, &TableOptions::default()).unwrap();
        assert_eq!(fams.len(), 1);
        let mut degrees: Vec<usize> = fams[0].characters.iter().map(|c| c.degree).collect();
        degrees.sort();
        assert_eq!(degrees, [1, 1, 2]);
    }

    #[test]
    fn adapted_pipeline_rejects_unadapted_data() {
        let z4 = cyclic(4);
        let h = Subgroup::closure(&z4, &[2]);
        let eta = Cochain::tabulate(&z4, 2, |t| if t == [1, 1] { UnitScalar::from_turns(1, 4) } else { UnitScalar::ONE }).unwrap();
        let omega = eta.coboundary().unwrap();
        assert!(AdaptedCocycle::new(omega.clone(), h.clone()).is_err());
        let data = GroupTheoreticalData::with_trivial_psi(h, omega).unwrap();
        assert!(full_indicator_table::<f64>(&data, 2, Pipeline::Adapted, &TableOptions::default()).is_err());
        assert!(full_indicator_table::<f64>(&data, 2, Pipeline::Double, &TableOptions::default()).is_err());
        let t = full_indicator_table::<f64>(&data, 4, Pipeline::Auto, &TableOptions::default()).unwrap();
        assert_eq!(t.pipeline, Pipeline::General);
    }
}
