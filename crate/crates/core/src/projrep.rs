//! Irreducible projective representations of a finite group for a
//! unit-modulus 2-cocycle `β`.
//!
//! The twisted group algebra acts on itself from the left by
//! `L(s) e_t = β(s,t) e_{st}`. A random self-adjoint element of the
//! commutant (spanned by the right multiplications
//! `R(u) e_t = β(t,u) e_{tu}`) has eigenspaces that are irreducible left
//! submodules, so its eigendecomposition splits the regular representation.

use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex;
use num_integer::Integer;
use parking_lot::RwLock;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cohomology::{LocalCocycle, UnitScalar};
use crate::error::{Error, Result};
use crate::exact::{recognize, ExactValue};
use crate::group::{Element, Subgroup};
use crate::scalar::{cnorm, czero, Real};

/// Default number of reseeded attempts before giving up.
pub const DEFAULT_RETRIES: usize = 32;

/// The twisted group algebra `ℂ_β[S]` with its regular representations.
#[derive(Debug, Clone)]
pub struct TwistedGroupAlgebra {
    cocycle: Arc<LocalCocycle>,
    /// `product[i * n + j]` is the position of `s_i s_j`.
    product: Vec<usize>,
}

impl TwistedGroupAlgebra {
    pub fn new(cocycle: LocalCocycle) -> Result<Self> {
        if let Some(t) = cocycle.cocycle_failure() {
            return Err(Error::Validation { identity: "dβ = 1".into(), tuple: t.to_vec() });
        }
        let n = cocycle.order();
        let product = (0..n * n).map(|k| cocycle.product_position(k / n, k % n)).collect();
        Ok(Self { cocycle: Arc::new(cocycle), product })
    }

    pub fn cocycle(&self) -> &Arc<LocalCocycle> {
        &self.cocycle
    }

    pub fn order(&self) -> usize {
        self.cocycle.order()
    }

    #[inline]
    fn prod(&self, i: usize, j: usize) -> usize {
        self.product[i * self.order() + j]
    }

    /// `L(s)` for the element at position `i`.
    pub fn left_regular<T: Real>(&self, i: usize) -> DMatrix<Complex<T>> {
        let n = self.order();
        let mut m = DMatrix::from_element(n, n, czero());
        for t in 0..n {
            m[(self.prod(i, t), t)] = self.cocycle.at(i, t).to_complex();
        }
        m
    }

    /// `R(u)` for the element at position `u`.
    pub fn right_regular<T: Real>(&self, u: usize) -> DMatrix<Complex<T>> {
        let n = self.order();
        let mut m = DMatrix::from_element(n, n, czero());
        for t in 0..n {
            m[(self.prod(t, u), t)] = self.cocycle.at(t, u).to_complex();
        }
        m
    }

    /// `B† L(s) B` for orthonormal columns `B` spanning an invariant subspace.
    fn compress<T: Real>(&self, i: usize, b: &DMatrix<Complex<T>>) -> DMatrix<Complex<T>> {
        let n = self.order();
        let d = b.ncols();
        let mut out = DMatrix::from_element(d, d, czero());
        for t in 0..n {
            let st = self.prod(i, t);
            let c = self.cocycle.at(i, t).to_complex::<T>();
            for k in 0..d {
                let left = b[(st, k)].conj() * c;
                for l in 0..d {
                    out[(k, l)] += left * b[(t, l)];
                }
            }
        }
        out
    }

    /// `Tr(B† L(s) B)`.
    fn compressed_trace<T: Real>(&self, i: usize, b: &DMatrix<Complex<T>>) -> Complex<T> {
        let mut acc = czero();
        for t in 0..self.order() {
            let st = self.prod(i, t);
            let c = self.cocycle.at(i, t).to_complex::<T>();
            for k in 0..b.ncols() {
                acc += b[(st, k)].conj() * c * b[(t, k)];
            }
        }
        acc
    }
}

/// Unitary matrices `ρ(s)` with `ρ(s)ρ(t) = β(s,t)ρ(st)`, by position in `S`.
#[derive(Debug, Clone)]
pub struct MatrixRep<T: Real> {
    cocycle: Arc<LocalCocycle>,
    matrices: Vec<DMatrix<Complex<T>>>,
}

impl<T: Real> MatrixRep<T> {
    pub fn dimension(&self) -> usize {
        self.matrices[0].nrows()
    }

    pub fn cocycle(&self) -> &Arc<LocalCocycle> {
        &self.cocycle
    }

    pub fn at(&self, i: usize) -> &DMatrix<Complex<T>> {
        &self.matrices[i]
    }

    /// `ρ(s)` for an element `s ∈ S`.
    pub fn matrix(&self, s: Element) -> &DMatrix<Complex<T>> {
        &self.matrices[self.cocycle.subgroup().position(s).expect("element of S")]
    }

    /// `max ‖ρ(s)ρ(t) − β(s,t)ρ(st)‖` over all pairs.
    pub fn homomorphism_defect(&self) -> T {
        let n = self.matrices.len();
        let mut worst = T::zero();
        for i in 0..n {
            for j in 0..n {
                let k = self.cocycle.product_position(i, j);
                let beta: Complex<T> = self.cocycle.at(i, j).to_complex();
                let diff = &self.matrices[i] * &self.matrices[j] - self.matrices[k].map(|z| z * beta);
                worst = Float_max(worst, diff.iter().map(|z| cnorm(*z)).fold(T::zero(), Float_max));
            }
        }
        worst
    }

    /// `max ‖ρ(s)ρ(s)† − 1‖`.
    pub fn unitarity_defect(&self) -> T {
        let d = self.dimension();
        let id = DMatrix::<Complex<T>>::identity(d, d);
        self.matrices
            .iter()
            .map(|m| (m * m.adjoint() - &id).iter().map(|z| cnorm(*z)).fold(T::zero(), Float_max))
            .fold(T::zero(), Float_max)
    }
}

#[allow(non_snake_case)]
fn Float_max<T: Real>(a: T, b: T) -> T {
    num_traits::Float::max(a, b)
}

/// A projective character of `S` for the cocycle `β`, by position in `S`.
#[derive(Debug, Clone)]
pub struct ProjectiveCharacter<T: Real> {
    cocycle: Arc<LocalCocycle>,
    values: Vec<Complex<T>>,
    degree: usize,
    rep: Option<Arc<MatrixRep<T>>>,
}

impl<T: Real> ProjectiveCharacter<T> {
    /// A character given by its values (for example a user-supplied table).
    /// The degree is read off the identity value.
    pub fn from_values(cocycle: Arc<LocalCocycle>, values: Vec<Complex<T>>) -> Result<Self> {
        if values.len() != cocycle.order() {
            return Err(Error::Contract("character has the wrong number of values".into()));
        }
        let d = values[0].re;
        let degree = num_traits::Float::round(d).to_usize().unwrap_or(0);
        if degree == 0 || cnorm(values[0] - Complex::new(T::lit(degree as f64), T::zero())) > T::recognition_tolerance() {
            return Err(Error::Contract("character value at the identity is not a positive integer".into()));
        }
        Ok(Self { cocycle, values, degree, rep: None })
    }

    pub fn cocycle(&self) -> &Arc<LocalCocycle> {
        &self.cocycle
    }

    pub fn subgroup(&self) -> &Subgroup {
        self.cocycle.subgroup()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[Complex<T>] {
        &self.values
    }

    pub fn rep(&self) -> Option<&Arc<MatrixRep<T>>> {
        self.rep.as_ref()
    }

    /// `χ(s)` for `s ∈ S`; panics off `S`.
    pub fn value(&self, s: Element) -> Complex<T> {
        self.values[self.subgroup().position(s).expect("element of S")]
    }

    /// `χ(s)`, or `None` off `S`.
    pub fn get(&self, s: Element) -> Option<Complex<T>> {
        self.subgroup().position(s).map(|i| self.values[i])
    }

    /// The same values read against another cocycle on a subgroup of the
    /// same order (elements matched by position).
    pub fn transported(&self, cocycle: Arc<LocalCocycle>) -> Result<Self> {
        if cocycle.order() != self.cocycle.order() {
            return Err(Error::Contract("transport between subgroups of different orders".into()));
        }
        Ok(Self { cocycle, values: self.values.clone(), degree: self.degree, rep: None })
    }

    /// Exact recognition of every value.
    pub fn exact_values(&self) -> Vec<Option<ExactValue>> {
        let s = self.cocycle.order() as i64;
        let conductor = 4 * self.cocycle.denominator().lcm(&s);
        self.values.iter().map(|&z| recognize(z, conductor, s, T::recognition_tolerance())).collect()
    }

    /// Short hex digest of the values rounded to six places.
    pub fn short_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.cocycle.canonical_hash());
        for z in &self.values {
            for x in [z.re, z.im] {
                let r = (x.to_f64().unwrap_or(0.0) * 1e6).round() as i64;
                h.update(r.to_le_bytes());
            }
        }
        h.finalize()[..4].iter().map(|b| format!("{b:02x}")).collect()
    }

    fn sort_key(&self) -> (usize, Vec<(i64, i64)>) {
        let key = self
            .values
            .iter()
            .map(|z| {
                let r = |x: T| (x.to_f64().unwrap_or(0.0) * 1e6).round() as i64;
                (r(z.re), r(z.im))
            })
            .collect();
        (self.degree, key)
    }
}

/// `(1/|S|) Σ_s χ₁(s) conj(χ₂(s))`.
pub fn character_inner_product<T: Real>(a: &ProjectiveCharacter<T>, b: &ProjectiveCharacter<T>) -> Result<Complex<T>> {
    if a.cocycle.order() != b.cocycle.order() || a.subgroup() != b.subgroup() {
        return Err(Error::Contract("characters of different groups".into()));
    }
    let n = T::lit(a.values.len() as f64);
    let s = a.values.iter().zip(&b.values).fold(czero::<T>(), |acc, (x, y)| acc + x * y.conj());
    Ok(Complex::new(s.re / n, s.im / n))
}

/// `χ·μ`, a character for the cocycle `β·dμ`.
pub fn twist_character<T: Real>(
    chi: &ProjectiveCharacter<T>,
    mut mu: impl FnMut(Element) -> UnitScalar,
) -> ProjectiveCharacter<T> {
    let els = chi.subgroup().elements().to_vec();
    let factors: Vec<UnitScalar> = els.iter().map(|&s| if s == 0 { UnitScalar::ONE } else { mu(s) }).collect();
    let cocycle = Arc::new(chi.cocycle.twisted_by(|s| factors[chi.subgroup().position(s).unwrap()]));
    let values = chi.values.iter().zip(&factors).map(|(z, f)| z * f.to_complex::<T>()).collect();
    let rep = chi.rep.as_ref().map(|r| {
        let matrices = r.matrices.iter().zip(&factors).map(|(m, f)| m.map(|z| z * f.to_complex::<T>())).collect();
        Arc::new(MatrixRep { cocycle: cocycle.clone(), matrices })
    });
    ProjectiveCharacter { cocycle, values, degree: chi.degree, rep }
}

/// Knobs for [`irreducible_projective_characters_with`].
#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    /// Overrides the seed derived from the cocycle hash.
    pub seed: Option<u64>,
    pub retries: usize,
    /// Eigenvalue gap; defaults to [`Real::eigen_gap`].
    pub eigen_gap: Option<f64>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self { seed: None, retries: DEFAULT_RETRIES, eigen_gap: None }
    }
}

/// All irreducible `β`-characters of `S` with unitary matrix
/// representations, sorted by degree and then by rounded values.
pub fn irreducible_projective_characters<T: Real>(cocycle: &LocalCocycle) -> Result<Vec<ProjectiveCharacter<T>>> {
    irreducible_projective_characters_with(cocycle, &SolverOptions::default())
}

pub fn irreducible_projective_characters_with<T: Real>(
    cocycle: &LocalCocycle,
    opts: &SolverOptions,
) -> Result<Vec<ProjectiveCharacter<T>>> {
    let alg = TwistedGroupAlgebra::new(cocycle.clone())?;
    let n = alg.order();
    if n > 256 {
        return Err(Error::Contract(format!("stabilizer of order {n} exceeds 256")));
    }
    let base = opts.seed.unwrap_or_else(|| cocycle.derived_seed());
    let gap = opts.eigen_gap.map(T::lit).unwrap_or_else(T::eigen_gap);
    let rights: Vec<DMatrix<Complex<T>>> = (0..n).map(|u| alg.right_regular(u)).collect();
    let mut last = String::new();
    for attempt in 0..opts.retries.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(base.wrapping_add(attempt as u64));
        match decompose(&alg, &rights, &mut rng, gap) {
            Ok(chars) => return Ok(chars),
            Err(e) => last = e,
        }
    }
    Err(Error::NumericalDegeneracy(format!(
        "no complete decomposition after {} attempts: {last}",
        opts.retries
    )))
}

fn decompose<T: Real>(
    alg: &TwistedGroupAlgebra,
    rights: &[DMatrix<Complex<T>>],
    rng: &mut ChaCha8Rng,
    gap: T,
) -> std::result::Result<Vec<ProjectiveCharacter<T>>, String> {
    let n = alg.order();
    let mut a = DMatrix::from_element(n, n, czero::<T>());
    for r in rights {
        let c = Complex::new(T::lit(rng.random_range(-1.0..1.0)), T::lit(rng.random_range(-1.0..1.0)));
        a += r.map(|z| z * c);
    }
    let a = &a + a.adjoint();
    let eig = SymmetricEigen::new(a);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].partial_cmp(&eig.eigenvalues[j]).unwrap());
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match clusters.last_mut() {
            Some(c) if eig.eigenvalues[i] - eig.eigenvalues[*c.last().unwrap()] < gap => c.push(i),
            _ => clusters.push(vec![i]),
        }
    }
    let tol = T::recognition_tolerance();
    let nn = T::lit(n as f64);
    let mut found: Vec<(ProjectiveCharacter<T>, usize)> = Vec::new();
    for cluster in clusters {
        let d = cluster.len();
        let b = DMatrix::from_fn(n, d, |r, c| eig.eigenvectors[(r, cluster[c])]);
        let values: Vec<Complex<T>> = (0..n).map(|i| alg.compressed_trace(i, &b)).collect();
        let norm = values.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()) / nn;
        if num_traits::Float::abs(norm - T::one()) > tol {
            return Err(format!("eigenspace of dimension {d} is not irreducible"));
        }
        if let Some((_, mult)) = found
            .iter_mut()
            .find(|(chi, _)| chi.values.iter().zip(&values).all(|(x, y)| cnorm(x - y) < tol))
        {
            *mult += 1;
            continue;
        }
        let matrices = (0..n).map(|i| alg.compress(i, &b)).collect();
        let rep = MatrixRep { cocycle: alg.cocycle.clone(), matrices };
        found.push((ProjectiveCharacter { cocycle: alg.cocycle.clone(), values, degree: d, rep: Some(Arc::new(rep)) }, 1));
    }
    let total: usize = found.iter().map(|(c, _)| c.degree * c.degree).sum();
    if total != n || found.iter().any(|(c, m)| *m != c.degree) {
        return Err(format!("degrees do not add up: Σd² = {total}, |S| = {n}"));
    }
    let chars: Vec<ProjectiveCharacter<T>> = found.into_iter().map(|(c, _)| c).collect();
    for (i, x) in chars.iter().enumerate() {
        for y in &chars[i + 1..] {
            let ip = character_inner_product(x, y).map_err(|e| e.to_string())?;
            if cnorm(ip) > gap {
                return Err("characters are not orthogonal".into());
            }
        }
    }
    let mut chars = chars;
    chars.sort_by_cached_key(|c| c.sort_key());
    Ok(chars)
}

#[derive(Serialize, Deserialize)]
struct CachedCharacter {
    degree: usize,
    values: Vec<[f64; 2]>,
}

/// Character tables keyed by the canonical `(S, β)` hash and the seed, in
/// memory and optionally on disk.
pub struct CharacterCache<T: Real> {
    memory: RwLock<HashMap<(String, u64), Arc<Vec<ProjectiveCharacter<T>>>>>,
    dir: Option<PathBuf>,
    opts: SolverOptions,
}

impl<T: Real> CharacterCache<T> {
    pub fn new(opts: SolverOptions) -> Self {
        Self { memory: RwLock::new(HashMap::new()), dir: None, opts }
    }

    pub fn with_dir(opts: SolverOptions, dir: PathBuf) -> Self {
        Self { memory: RwLock::new(HashMap::new()), dir: Some(dir), opts }
    }

    pub fn get(&self, cocycle: &LocalCocycle) -> Result<Arc<Vec<ProjectiveCharacter<T>>>> {
        let seed = self.opts.seed.unwrap_or_else(|| cocycle.derived_seed());
        let key = (cocycle.hash_hex(), seed);
        if let Some(v) = self.memory.read().get(&key) {
            return Ok(v.clone());
        }
        let chars = match self.load(cocycle, &key) {
            Some(c) => c,
            None => {
                let c = irreducible_projective_characters_with(cocycle, &SolverOptions { seed: Some(seed), ..self.opts })?;
                self.store(&key, &c);
                c
            }
        };
        let chars = Arc::new(chars);
        self.memory.write().entry(key).or_insert_with(|| chars.clone());
        Ok(chars)
    }

    fn path(&self, key: &(String, u64)) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{}-{:016x}.json", key.0, key.1)))
    }

    fn load(&self, cocycle: &LocalCocycle, key: &(String, u64)) -> Option<Vec<ProjectiveCharacter<T>>> {
        let text = fs::read_to_string(self.path(key)?).ok()?;
        let cached: Vec<CachedCharacter> = serde_json::from_str(&text).ok()?;
        let cocycle = Arc::new(cocycle.clone());
        cached
            .into_iter()
            .map(|c| {
                let values = c.values.iter().map(|v| Complex::new(T::lit(v[0]), T::lit(v[1]))).collect();
                ProjectiveCharacter::from_values(cocycle.clone(), values).ok().filter(|x| x.degree == c.degree)
            })
            .collect()
    }

    fn store(&self, key: &(String, u64), chars: &[ProjectiveCharacter<T>]) {
        let Some(path) = self.path(key) else { return };
        let cached: Vec<CachedCharacter> = chars
            .iter()
            .map(|c| CachedCharacter {
                degree: c.degree,
                values: c.values.iter().map(|z| [z.re.to_f64().unwrap_or(0.0), z.im.to_f64().unwrap_or(0.0)]).collect(),
            })
            .collect();
        if let Some(parent) = path.parent() {
            let _ = fs::create_dir_all(parent);
        }
        if let Ok(text) = serde_json::to_string(&cached) {
            let _ = fs::write(path, text);
        }
    }
}
