//! Explicit `H`-modules `W = ⊕_{t ∈ T} t ⊗ V` induced from an
//! `ω_g`-representation `V` of `S`, graded by the cosets `tgH`.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex;

use crate::cohomology::{Cochain, UnitScalar};
use crate::error::{Error, Result};
use crate::group::{Element, Subgroup};
use crate::projrep::{MatrixRep, ProjectiveCharacter};
use crate::scalar::{cnorm, cscale, czero, Real};
use crate::symbols::{pi, AdaptedCocycle};

/// One entry of the block-monomial action: `h·(t ⊗ v) = c · t′ ⊗ ρ(s)v`.
#[derive(Debug, Clone, Copy)]
struct Move {
    target: usize,
    s: usize,
    c: UnitScalar,
}

/// The induced module with its action tabulated for every `h ∈ H` and
/// every block.
#[derive(Debug, Clone)]
pub struct InducedModule<T: Real> {
    omega: Cochain,
    subgroup: Subgroup,
    g: Element,
    rep: Arc<MatrixRep<T>>,
    transversal: Vec<Element>,
    /// Block index for each right coset class of `H` in `G`.
    block_of_coset: Vec<Option<usize>>,
    coset_of: Vec<usize>,
    moves: Vec<Move>,
}

/// Builds `W` and checks `h.(h′.w) = ω(h, h′, |w|)·(hh′).w` on every
/// homogeneous block.
pub fn induce_module<T: Real>(
    omega: &AdaptedCocycle,
    g: Element,
    chi: &ProjectiveCharacter<T>,
) -> Result<InducedModule<T>> {
    let rep = chi
        .rep()
        .ok_or_else(|| Error::Contract("induction needs an explicit matrix representation".into()))?
        .clone();
    if **chi.cocycle() != omega.omega_g_cocycle(g) {
        return Err(Error::Contract("character is not an ω_g-character".into()));
    }
    let h = omega.subgroup().clone();
    let grp = h.parent().clone();
    let s = chi.subgroup().clone();
    let w = omega.omega().clone();

    let mut transversal = Vec::new();
    let mut covered = vec![false; grp.order()];
    for &x in h.elements() {
        if !covered[x] {
            transversal.push(x);
            for &y in s.elements() {
                covered[grp.mul(x, y)] = true;
            }
        }
    }
    let index_of = |x: Element| -> (usize, usize) {
        transversal
            .iter()
            .enumerate()
            .find_map(|(i, &t)| s.position(grp.mul(grp.inv(t), x)).map(|p| (i, p)))
            .expect("transversal covers H")
    };

    let cosets = h.right_cosets();
    let mut block_of_coset = vec![None; cosets.representatives.len()];
    for (i, &t) in transversal.iter().enumerate() {
        block_of_coset[cosets.class_of[grp.mul(t, g)]] = Some(i);
    }

    let nt = transversal.len();
    let mut moves = Vec::with_capacity(h.order() * nt);
    for &x in h.elements() {
        for &t in &transversal {
            let (target, sp) = index_of(grp.mul(x, t));
            let tp = transversal[target];
            let c = w.eval3(x, t, g) / w.eval3(tp, s.elements()[sp], g);
            moves.push(Move { target, s: sp, c });
        }
    }
    let module = InducedModule {
        omega: w,
        subgroup: h,
        g,
        rep,
        transversal,
        block_of_coset,
        coset_of: cosets.class_of,
        moves,
    };
    module.validate()?;
    Ok(module)
}

impl<T: Real> InducedModule<T> {
    pub fn dimension(&self) -> usize {
        self.transversal.len() * self.rep.dimension()
    }

    pub fn transversal(&self) -> &[Element] {
        &self.transversal
    }

    fn mv(&self, hi: usize, ti: usize) -> Move {
        self.moves[hi * self.transversal.len() + ti]
    }

    /// The `d × d` block of `h` from block `ti` to its image block.
    fn block(&self, hi: usize, ti: usize) -> (usize, DMatrix<Complex<T>>) {
        let m = self.mv(hi, ti);
        let c = m.c.to_complex::<T>();
        (m.target, self.rep.at(m.s).map(|z| z * c))
    }

    fn validate(&self) -> Result<()> {
        let grp = self.subgroup.parent();
        let hs = self.subgroup.elements();
        let tol = T::comparison_tolerance();
        for (ai, &a) in hs.iter().enumerate() {
            for (bi, &b) in hs.iter().enumerate() {
                let abi = self.subgroup.position(grp.mul(a, b)).expect("H is closed");
                for (ti, &t) in self.transversal.iter().enumerate() {
                    let (t1, inner) = self.block(bi, ti);
                    let (t2, outer) = self.block(ai, t1);
                    let (t3, direct) = self.block(abi, ti);
                    let scale = self.omega.eval3(a, b, grp.mul(t, self.g)).to_complex::<T>();
                    let lhs = outer * inner;
                    let rhs = direct.map(|z| z * scale);
                    let dev = (lhs - rhs).iter().map(|z| cnorm(*z)).fold(T::zero(), num_traits::Float::max);
                    if t2 != t3 || dev > tol {
                        return Err(Error::Construction(format!(
                            "induced action violates the twisted module law at h = {a}, h' = {b}, block {t}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The full matrix of `h ∈ H` on `W`.
    pub fn action_matrix(&self, x: Element) -> Result<DMatrix<Complex<T>>> {
        let hi = self.subgroup.position(x).ok_or_else(|| Error::Contract(format!("{x} is not in H")))?;
        let d = self.rep.dimension();
        let n = self.dimension();
        let mut out = DMatrix::from_element(n, n, czero());
        for ti in 0..self.transversal.len() {
            let (to, b) = self.block(hi, ti);
            out.view_mut((to * d, ti * d), (d, d)).copy_from(&b);
        }
        Ok(out)
    }

    /// Trace of `y ∈ H` on the homogeneous component `W_{xH}`; `y` must
    /// fix `xH`.
    pub fn block_trace(&self, y: Element, x: Element) -> Result<Complex<T>> {
        let hi = self.subgroup.position(y).ok_or_else(|| Error::Contract(format!("{y} is not in H")))?;
        let Some(ti) = self.block_of_coset[self.coset_of[x]] else {
            return Ok(czero());
        };
        let (to, b) = self.block(hi, ti);
        if to != ti {
            return Err(Error::Contract(format!("{y} does not fix the coset of {x}")));
        }
        Ok(b.trace())
    }

    /// `π_{-m}(x) Tr(ρ_{W_{xH}}(x^{-m}))`, or `None` when `x^m ∉ H`.
    pub fn summand(&self, x: Element, m: i64) -> Result<Option<Complex<T>>> {
        let grp = self.subgroup.parent();
        let xm = grp.pow(x, -m);
        if !self.subgroup.contains(xm) {
            return Ok(None);
        }
        let tr = self.block_trace(xm, x)?;
        Ok(Some(pi(&self.omega, x, -m).to_complex::<T>() * tr))
    }
}

/// `(1/|H|) Σ_{x ∈ G, x^m ∈ H} π_{-m}(x) Tr(ρ_{W_{xH}}(x^{-m}))`.
pub fn indicator_module_sum<T: Real>(module: &InducedModule<T>, m: i64) -> Result<Complex<T>> {
    super::check_m(m)?;
    let mut acc = czero::<T>();
    for x in module.subgroup.parent().elements() {
        if let Some(z) = module.summand(x, m)? {
            acc += z;
        }
    }
    let n = T::lit(module.subgroup.order() as f64);
    Ok(cscale(acc, T::one() / n))
}
