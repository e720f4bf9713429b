use std::fmt;

use num_integer::Integer;
use sha2::{Digest, Sha256};

use super::unit::UnitScalar;
use crate::group::{Element, Subgroup};

/// A 2-cochain on a subgroup `S`, stored densely by position in `S`.
///
/// This is the form in which `β_g`, `ω_g` and `coc_g` reach the projective
/// character solver.
#[derive(Clone, PartialEq, Eq)]
pub struct LocalCocycle {
    subgroup: Subgroup,
    values: Vec<UnitScalar>,
}

impl fmt::Debug for LocalCocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LocalCocycle(|S| = {}, {})", self.order(), self.hash_hex())
    }
}

impl LocalCocycle {
    pub fn from_fn(subgroup: &Subgroup, mut f: impl FnMut(Element, Element) -> UnitScalar) -> Self {
        let els = subgroup.elements();
        let values = els
            .iter()
            .flat_map(|&s| els.iter().map(move |&t| (s, t)))
            .map(|(s, t)| if s == 0 || t == 0 { UnitScalar::ONE } else { f(s, t) })
            .collect();
        Self { subgroup: subgroup.clone(), values }
    }

    pub fn trivial(subgroup: &Subgroup) -> Self {
        Self { subgroup: subgroup.clone(), values: vec![UnitScalar::ONE; subgroup.order().pow(2)] }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn order(&self) -> usize {
        self.subgroup.order()
    }

    /// Value at positions `(i, j)` of `S`.
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> UnitScalar {
        self.values[i * self.order() + j]
    }

    /// Value at elements `(s, t)` of `S`.
    pub fn eval(&self, s: Element, t: Element) -> UnitScalar {
        let i = self.subgroup.position(s).expect("element of S");
        let j = self.subgroup.position(t).expect("element of S");
        self.at(i, j)
    }

    /// Position of the product of the elements at positions `i` and `j`.
    #[inline]
    pub fn product_position(&self, i: usize, j: usize) -> usize {
        let els = self.subgroup.elements();
        let g = self.subgroup.parent();
        self.subgroup.position(g.mul(els[i], els[j])).expect("closed")
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }

    /// First `(s, t, u)` violating `β(t,u) β(st,u)⁻¹ β(s,tu) β(s,t)⁻¹ = 1`.
    pub fn cocycle_failure(&self) -> Option<[Element; 3]> {
        let n = self.order();
        let els = self.subgroup.elements();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product_position(i, j);
                for k in 0..n {
                    let jk = self.product_position(j, k);
                    let d = self.at(j, k) / self.at(ij, k) * self.at(i, jk) / self.at(i, j);
                    if !d.is_one() {
                        return Some([els[i], els[j], els[k]]);
                    }
                }
            }
        }
        None
    }

    pub fn is_cocycle(&self) -> bool {
        self.cocycle_failure().is_none()
    }

    /// `β · dμ` with `dμ(s,t) = μ(t) μ(st)⁻¹ μ(s)`.
    pub fn twisted_by(&self, mut mu: impl FnMut(Element) -> UnitScalar) -> Self {
        let els = self.subgroup.elements();
        let m: Vec<UnitScalar> = els.iter().map(|&s| if s == 0 { UnitScalar::ONE } else { mu(s) }).collect();
        let n = self.order();
        let mut values = self.values.clone();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product_position(i, j);
                values[i * n + j] *= m[j] / m[ij] * m[i];
            }
        }
        Self { subgroup: self.subgroup.clone(), values }
    }

    /// lcm of the exponent denominators.
    pub fn denominator(&self) -> i64 {
        self.values.iter().fold(1, |acc, v| acc.lcm(&v.denominator()))
    }

    /// SHA-256 over the subgroup's elements, the parent order and all values.
    pub fn canonical_hash(&self) -> [u8; 32] {
        let mut h = Sha256::new();
        h.update((self.subgroup.parent().order() as u64).to_le_bytes());
        for &e in self.subgroup.elements() {
            h.update((e as u64).to_le_bytes());
        }
        for v in &self.values {
            let q = v.exponent();
            h.update(q.numer().to_le_bytes());
            h.update(q.denom().to_le_bytes());
        }
        h.finalize().into()
    }

    pub fn hash_hex(&self) -> String {
        self.canonical_hash().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// A seed derived from [`Self::canonical_hash`].
    pub fn derived_seed(&self) -> u64 {
        let h = self.canonical_hash();
        u64::from_le_bytes(h[..8].try_into().unwrap())
    }
}
