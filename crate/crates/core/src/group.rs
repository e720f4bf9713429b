//! Finite groups as dense multiplication tables, with the subgroup, coset and
//! conjugation combinatorics needed by the indicator formulas.
//!
//! Elements are indices `0..order`, the identity is always `0`. Every
//! canonical representative (coset, double coset, conjugacy class) is the
//! minimal element index of its class, so all enumerations are reproducible.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type Element = usize;

/// Default bound on the order of constructed groups.
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// A finite group given by its multiplication and inverse tables.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    factors: Option<(Arc<FiniteGroup>, Arc<FiniteGroup>)>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order).finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Builds a group from a full multiplication table, checking the group
    /// axioms exhaustively. Element `0` must be the identity.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if order > DEFAULT_ORDER_CAP {
            return Err(Error::SizeLimit { cap: DEFAULT_ORDER_CAP });
        }
        let mut mul = Vec::with_capacity(order * order);
        for row in table {
            if row.len() != order {
                return Err(Error::InvalidGroup("table is not square".into()));
            }
            for &c in row {
                if c >= order {
                    return Err(Error::InvalidGroup(format!("entry {c} out of range")));
                }
                mul.push(c as u32);
            }
        }
        let group = Self::from_flat(order, mul)?;
        group.check_axioms()?;
        Ok(group)
    }

    fn from_flat(order: usize, mul: Vec<u32>) -> Result<Self> {
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
            if inv[a] == u32::MAX {
                return Err(Error::InvalidGroup(format!("element {a} has no inverse")));
            }
        }
        Ok(Self { order, mul, inv, factors: None })
    }

    /// The cyclic group Z/n with element `k` the residue `k`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        if n > DEFAULT_ORDER_CAP {
            return Err(Error::SizeLimit { cap: DEFAULT_ORDER_CAP });
        }
        let mul = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
            .collect();
        Self::from_flat(n, mul)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("trivial group")
    }

    /// Closure of permutation generators on `{0..degree-1}`, with the default
    /// order cap.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        Self::from_permutations_capped(degree, generators, DEFAULT_ORDER_CAP)
    }

    /// Closure of permutation generators. Elements are numbered breadth-first
    /// from the identity, multiplying on the right by generators in order.
    /// A permutation `p` maps `i` to `p[i]`; the product `ab` applies `b`
    /// first, then `a`.
    pub fn from_permutations_capped(
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self> {
        for g in generators {
            if g.len() != degree {
                return Err(Error::InvalidGroup("generator has wrong degree".into()));
            }
            let mut seen = vec![false; degree];
            for &i in g {
                if i >= degree || std::mem::replace(&mut seen[i], true) {
                    return Err(Error::InvalidGroup(format!("{g:?} is not a permutation")));
                }
            }
        }
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&i| a[i]).collect() };
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index = std::collections::HashMap::new();
        index.insert(identity, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(a) = queue.pop_front() {
            for g in generators {
                let p = compose(&elements[a], g);
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(Error::SizeLimit { cap });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let order = elements.len();
        let mut mul = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                mul.push(index[&compose(a, b)] as u32);
            }
        }
        Self::from_flat(order, mul)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inv[a] as usize
    }

    /// The multiplication table as rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.elements().map(|a| self.elements().map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn mul3(&self, a: Element, b: Element, c: Element) -> Element {
        self.mul(self.mul(a, b), c)
    }

    /// Adjoint action `x ▷ g = x g x⁻¹`.
    #[inline]
    pub fn act(&self, x: Element, g: Element) -> Element {
        self.mul(self.mul(x, g), self.inv(x))
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, x: Element, k: i64) -> Element {
        let base = if k < 0 { self.inv(x) } else { x };
        let mut e = k.unsigned_abs();
        let (mut acc, mut sq) = (0, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: Element) -> usize {
        let (mut y, mut k) = (x, 1);
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn commute(&self, a: Element, b: Element) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.commute(a, b)))
    }

    /// Exhaustive check of associativity, identity and inverses.
    pub fn check_axioms(&self) -> Result<()> {
        for a in self.elements() {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::InvalidGroup(format!("0 is not a unit at {a}")));
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return Err(Error::InvalidGroup(format!("bad inverse for {a}")));
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Factors `(A, B)` when this group was built by [`direct_product`].
    pub fn factors(&self) -> Option<(&Arc<FiniteGroup>, &Arc<FiniteGroup>)> {
        self.factors.as_ref().map(|(a, b)| (a, b))
    }

    /// Whether this is Z/n with element `k` equal to residue `k`.
    pub fn is_standard_cyclic(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == (a + b) % n))
    }

    pub fn centralizer(self: &Arc<Self>, g: Element) -> Subgroup {
        let elements = self.elements().filter(|&x| self.commute(x, g)).collect();
        Subgroup::from_sorted_unchecked(self.clone(), elements)
    }

    /// Conjugacy classes ordered by their minimal element.
    pub fn conjugacy_classes(self: &Arc<Self>) -> Vec<ConjugacyClass> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for g in self.elements() {
            if seen[g] {
                continue;
            }
            let mut members: Vec<Element> = self.elements().map(|x| self.act(x, g)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                seen[m] = true;
            }
            out.push(ConjugacyClass { representative: g, members, centralizer: self.centralizer(g) });
        }
        out
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_closure(self: &Arc<Self>, gens: &[Element]) -> Subgroup {
        Subgroup::closure(self, gens)
    }
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: Element,
    pub members: Vec<Element>,
    pub centralizer: Subgroup,
}

/// A subgroup as a sorted element set of a parent group.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<Element>,
    position: Vec<u32>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup").field("elements", &self.elements).finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.parent.order == other.parent.order
    }
}

impl Eq for Subgroup {}

const NOT_MEMBER: u32 = u32::MAX;

impl Subgroup {
    fn from_sorted_unchecked(parent: Arc<FiniteGroup>, elements: Vec<Element>) -> Self {
        let mut position = vec![NOT_MEMBER; parent.order()];
        for (i, &e) in elements.iter().enumerate() {
            position[e] = i as u32;
        }
        Self { parent, elements, position }
    }

    /// Validates closure under multiplication and inverses.
    pub fn from_elements(parent: &Arc<FiniteGroup>, elements: &[Element]) -> Result<Self> {
        let mut els: Vec<Element> = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        if els.first() != Some(&0) {
            return Err(Error::InvalidGroup("subgroup must contain the identity".into()));
        }
        if els.iter().any(|&e| e >= parent.order()) {
            return Err(Error::InvalidGroup("subgroup element out of range".into()));
        }
        let s = Self::from_sorted_unchecked(parent.clone(), els);
        for &a in &s.elements {
            if !s.contains(parent.inv(a)) {
                return Err(Error::InvalidGroup(format!("not closed under inverse at {a}")));
            }
            for &b in &s.elements {
                if !s.contains(parent.mul(a, b)) {
                    return Err(Error::InvalidGroup(format!("not closed at ({a}, {b})")));
                }
            }
        }
        Ok(s)
    }

    pub fn closure(parent: &Arc<FiniteGroup>, gens: &[Element]) -> Self {
        let mut member = vec![false; parent.order()];
        member[0] = true;
        let mut els = vec![0];
        let mut i = 0;
        while i < els.len() {
            let a = els[i];
            for &g in gens {
                let b = parent.mul(a, g);
                if !member[b] {
                    member[b] = true;
                    els.push(b);
                }
            }
            i += 1;
        }
        els.sort_unstable();
        Self::from_sorted_unchecked(parent.clone(), els)
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Self {
        Self::from_sorted_unchecked(parent.clone(), parent.elements().collect())
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Self {
        Self::from_sorted_unchecked(parent.clone(), vec![0])
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        self.position[x] != NOT_MEMBER
    }

    /// Position of `x` in the sorted element list.
    #[inline]
    pub fn position(&self, x: Element) -> Option<usize> {
        match self.position[x] {
            NOT_MEMBER => None,
            p => Some(p as usize),
        }
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.elements().all(|x| self.elements.iter().all(|&h| self.contains(g.act(x, h))))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let els = self.elements.iter().copied().filter(|&e| other.contains(e)).collect();
        Self::from_sorted_unchecked(self.parent.clone(), els)
    }

    /// `g H g⁻¹`.
    pub fn conjugate(&self, g: Element) -> Subgroup {
        let mut els: Vec<Element> = self.elements.iter().map(|&h| self.parent.act(g, h)).collect();
        els.sort_unstable();
        Self::from_sorted_unchecked(self.parent.clone(), els)
    }

    /// Partition of the parent into cosets `gH`, ordered by minimal element;
    /// the coset of the identity is first with representative `0`.
    pub fn right_cosets(&self) -> CosetPartition {
        let g = &self.parent;
        let mut class_of = vec![usize::MAX; g.order()];
        let mut representatives = Vec::new();
        for x in g.elements() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(x);
            for &h in &self.elements {
                class_of[g.mul(x, h)] = c;
            }
        }
        CosetPartition { representatives, class_of }
    }

    /// Transversal of the cosets `gH`: each coset is represented by the first
    /// of `preferred` lying in it, otherwise by its minimal element. The
    /// coset `H` is always represented by the identity.
    pub fn transversal_with(&self, preferred: &[Element]) -> Vec<Element> {
        let cosets = self.right_cosets();
        let mut reps = cosets.representatives.clone();
        let mut fixed = vec![false; reps.len()];
        fixed[0] = true;
        for &p in preferred {
            let c = cosets.class_of[p];
            if !fixed[c] {
                reps[c] = p;
                fixed[c] = true;
            }
        }
        reps
    }

    /// Partition into double cosets `HgH`, representatives minimal.
    pub fn double_cosets(&self) -> DoubleCosetDecomposition {
        let g = &self.parent;
        let mut class_of = vec![usize::MAX; g.order()];
        let mut representatives = Vec::new();
        for x in g.elements() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(x);
            for &a in &self.elements {
                let ax = g.mul(a, x);
                for &b in &self.elements {
                    class_of[g.mul(ax, b)] = c;
                }
            }
        }
        DoubleCosetDecomposition { representatives, class_of }
    }

    /// `Stab_H(gH) = {h ∈ H : hgH = gH}`.
    pub fn stabilizer_of_coset(&self, g: Element) -> Subgroup {
        let grp = &self.parent;
        let gi = grp.inv(g);
        let els = self
            .elements
            .iter()
            .copied()
            .filter(|&h| self.contains(grp.mul3(gi, h, g)))
            .collect();
        Self::from_sorted_unchecked(self.parent.clone(), els)
    }

    /// The coset `gH` as a list `g·h` in the order of `H`'s elements.
    pub fn coset(&self, g: Element) -> Vec<Element> {
        self.elements.iter().map(|&h| self.parent.mul(g, h)).collect()
    }

    /// Orbits of this subgroup acting by conjugation on `coset`. Returns the
    /// minimal element of each orbit with the order of its stabilizer
    /// `S ∩ C_G(r)`.
    pub fn adjoint_orbit_representatives(&self, coset: &[Element]) -> Result<Vec<OrbitRep>> {
        let g = &self.parent;
        let mut in_coset = vec![false; g.order()];
        for &c in coset {
            in_coset[c] = true;
        }
        let mut sorted = coset.to_vec();
        sorted.sort_unstable();
        let mut seen = vec![false; g.order()];
        let mut out = Vec::new();
        for &r in &sorted {
            if seen[r] {
                continue;
            }
            let mut orbit_size = 0;
            for &s in &self.elements {
                let y = g.act(s, r);
                if !in_coset[y] {
                    return Err(Error::Contract(format!(
                        "conjugation by {s} does not preserve the coset"
                    )));
                }
                if !seen[y] {
                    seen[y] = true;
                    orbit_size += 1;
                }
            }
            let stabilizer_order =
                self.elements.iter().filter(|&&s| g.commute(s, r)).count();
            debug_assert_eq!(orbit_size * stabilizer_order, self.order());
            out.push(OrbitRep { representative: r, orbit_size, stabilizer_order });
        }
        Ok(out)
    }

    /// Re-indexes this subgroup as a standalone group (element `i` is the
    /// `i`-th smallest member) with its embedding into the parent.
    pub fn to_group(&self) -> (Arc<FiniteGroup>, GroupHom) {
        let n = self.order();
        let g = &self.parent;
        let mul = self
            .elements
            .iter()
            .flat_map(|&a| {
                self.elements.iter().map(move |&b| self.position(g.mul(a, b)).unwrap() as u32)
            })
            .collect();
        let sub = Arc::new(FiniteGroup::from_flat(n, mul).expect("subgroup table"));
        let hom = GroupHom { source: sub.clone(), target: g.clone(), images: self.elements.clone() };
        (sub, hom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitRep {
    pub representative: Element,
    pub orbit_size: usize,
    pub stabilizer_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    pub representatives: Vec<Element>,
    /// Index into `representatives` for each element of the parent.
    pub class_of: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosetDecomposition {
    pub representatives: Vec<Element>,
    pub class_of: Vec<usize>,
}

impl DoubleCosetDecomposition {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.class_of.iter().filter(|&&c| c == class).count()
    }

    pub fn representative_of(&self, x: Element) -> Element {
        self.representatives[self.class_of[x]]
    }
}

/// A homomorphism given by the images of all source elements.
#[derive(Clone)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<Element>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupHom").field("images", &self.images).finish()
    }
}

impl GroupHom {
    /// Checks multiplicativity on all pairs.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<Element>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::InvalidGroup("image table has wrong length".into()));
        }
        if images.iter().any(|&y| y >= target.order()) {
            return Err(Error::InvalidGroup("image out of range".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                    return Err(Error::InvalidGroup(format!("not a homomorphism at ({a}, {b})")));
                }
            }
        }
        Ok(Self { source, target, images })
    }

    pub fn identity(group: &Arc<FiniteGroup>) -> Self {
        Self { source: group.clone(), target: group.clone(), images: group.elements().collect() }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.images[x]
    }

    pub fn kernel(&self) -> Subgroup {
        let els = self.source.elements().filter(|&x| self.images[x] == 0).collect();
        Subgroup::from_sorted_unchecked(self.source.clone(), els)
    }

    /// The quotient map `G → G/N ≅ Z/2` for an index-two subgroup `N`.
    pub fn index_two_quotient(n: &Subgroup) -> Result<Self> {
        if n.index() != 2 {
            return Err(Error::Contract(format!("subgroup has index {}, not 2", n.index())));
        }
        let g = n.parent().clone();
        let images = g.elements().map(|x| usize::from(!n.contains(x))).collect();
        Self::new(g, Arc::new(FiniteGroup::cyclic(2)?), images)
    }
}

/// `A × B` with element `(a, b)` at index `a·|B| + b`.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub group: Arc<FiniteGroup>,
    pub left: Arc<FiniteGroup>,
    pub right: Arc<FiniteGroup>,
}

pub fn direct_product(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> Result<DirectProduct> {
    let (na, nb) = (a.order(), b.order());
    let order = na.checked_mul(nb).filter(|&n| n <= DEFAULT_ORDER_CAP);
    let order = order.ok_or(Error::SizeLimit { cap: DEFAULT_ORDER_CAP })?;
    let mut mul = Vec::with_capacity(order * order);
    for x in 0..order {
        for y in 0..order {
            let (xa, xb) = (x / nb, x % nb);
            let (ya, yb) = (y / nb, y % nb);
            mul.push((a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32);
        }
    }
    let mut group = FiniteGroup::from_flat(order, mul)?;
    group.factors = Some((a.clone(), b.clone()));
    Ok(DirectProduct { group: Arc::new(group), left: a.clone(), right: b.clone() })
}

impl DirectProduct {
    pub fn pair(&self, a: Element, b: Element) -> Element {
        a * self.right.order() + b
    }

    pub fn split(&self, x: Element) -> (Element, Element) {
        (x / self.right.order(), x % self.right.order())
    }

    pub fn projections(&self) -> (GroupHom, GroupHom) {
        let nb = self.right.order();
        let p1 = self.group.elements().map(|x| x / nb).collect();
        let p2 = self.group.elements().map(|x| x % nb).collect();
        (
            GroupHom { source: self.group.clone(), target: self.left.clone(), images: p1 },
            GroupHom { source: self.group.clone(), target: self.right.clone(), images: p2 },
        )
    }

    pub fn injections(&self) -> (GroupHom, GroupHom) {
        let i1 = self.left.elements().map(|a| self.pair(a, 0)).collect();
        let i2 = self.right.elements().map(|b| self.pair(0, b)).collect();
        (
            GroupHom { source: self.left.clone(), target: self.group.clone(), images: i1 },
            GroupHom { source: self.right.clone(), target: self.group.clone(), images: i2 },
        )
    }

    /// `{(x, x)}` when both factors are the same group.
    pub fn diagonal(&self) -> Result<Subgroup> {
        if self.left != self.right {
            return Err(Error::Contract("diagonal needs equal factors".into()));
        }
        let els: Vec<Element> = self.left.elements().map(|x| self.pair(x, x)).collect();
        Ok(Subgroup::from_sorted_unchecked(self.group.clone(), els))
    }
}

/// Small named groups used by tests, examples and the CLI.
pub mod named {
    use super::*;

    pub fn symmetric3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![0, 2, 1]]).unwrap())
    }

    /// Symmetries of the square, generated by the rotation `(0 1 2 3)` and a
    /// reflection.
    pub fn dihedral4() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]]).unwrap())
    }

    /// Quaternion group as the regular permutation representation on
    /// `{±1, ±i, ±j, ±k}` (points `1, i, j, k, -1, -i, -j, -k` = `0..8`).
    pub fn quaternion() -> Arc<FiniteGroup> {
        // left multiplication by i and by j
        let li = vec![1, 4, 3, 6, 5, 0, 7, 2];
        let lj = vec![2, 7, 4, 1, 6, 3, 0, 5];
        Arc::new(FiniteGroup::from_permutations(8, &[li, lj]).unwrap())
    }

    pub fn alternating4() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]]).unwrap())
    }

    pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::cyclic(n).unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn class_sizes(g: &Arc<FiniteGroup>) -> Vec<usize> {
        let mut v: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.members.len()).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn permutation_closures() {
        assert_eq!(symmetric3().order(), 6);
        assert_eq!(FiniteGroup::from_permutations(1, &[]).unwrap().order(), 1);
        let c4 = FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0]]).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_abelian());
        assert_eq!(c4.element_order(1), 4);
        assert_eq!(dihedral4().order(), 8);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(alternating4().order(), 12);
        for g in [symmetric3(), dihedral4(), quaternion(), alternating4()] {
            g.check_axioms().unwrap();
        }
    }

    #[test]
    fn order_cap_is_enforced() {
        let err = FiniteGroup::from_permutations_capped(3, &[vec![1, 0, 2], vec![0, 2, 1]], 4);
        assert_eq!(err.unwrap_err(), Error::SizeLimit { cap: 4 });
    }

    #[test]
    fn rejects_non_permutation() {
        assert!(FiniteGroup::from_permutations(3, &[vec![0, 0, 1]]).is_err());
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion();
        let involutions = q.elements().filter(|&x| q.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn products_and_diagonal() {
        let z2 = cyclic(2);
        let k = direct_product(&z2, &z2).unwrap();
        assert_eq!(k.group.order(), 4);
        assert!(k.group.elements().all(|x| k.group.element_order(x) <= 2));
        let t = Arc::new(FiniteGroup::trivial());
        let s3 = symmetric3();
        let p = direct_product(&t, &s3).unwrap();
        assert_eq!(*p.group, *s3);
        let ss = direct_product(&s3, &s3).unwrap();
        assert_eq!(ss.group.order(), 36);
        let (i1, i2) = ss.injections();
        let diag: Vec<_> = s3.elements().map(|x| ss.group.mul(i1.apply(x), i2.apply(x))).collect();
        let d = ss.diagonal().unwrap();
        assert_eq!(d.order(), 6);
        assert!(diag.iter().all(|&x| d.contains(x)));
        let (p1, p2) = ss.projections();
        GroupHom::new(ss.group.clone(), s3.clone(), p1.images().to_vec()).unwrap();
        GroupHom::new(ss.group.clone(), s3.clone(), p2.images().to_vec()).unwrap();
    }

    #[test]
    fn closures_and_cosets() {
        let s3 = symmetric3();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let c = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        assert_eq!(s3.subgroup_closure(&[t]).order(), 2);
        assert_eq!(s3.subgroup_closure(&[]).elements(), &[0]);
        assert_eq!(s3.subgroup_closure(&[c, t]).order(), 6);

        let h = s3.subgroup_closure(&[t]);
        assert_eq!(h.right_cosets().representatives.len(), 3);
        assert_eq!(Subgroup::whole(&s3).right_cosets().representatives, vec![0]);
        let z4 = cyclic(4);
        let h2 = Subgroup::from_elements(&z4, &[0, 2]).unwrap();
        let cos = h2.right_cosets();
        assert_eq!(cos.representatives, vec![0, 1]);
        assert_eq!(cos.class_of, vec![0, 1, 0, 1]);
    }

    #[test]
    fn double_cosets_and_stabilizers() {
        let s3 = symmetric3();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        let c = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        let h = s3.subgroup_closure(&[t]);
        let dc = h.double_cosets();
        assert_eq!(dc.len(), 2);
        assert_eq!(Subgroup::trivial(&s3).double_cosets().len(), 6);
        assert_eq!(Subgroup::whole(&s3).double_cosets().len(), 1);

        assert_eq!(h.stabilizer_of_coset(0), h);
        assert_eq!(h.stabilizer_of_coset(c).elements(), &[0]);
        let a3 = s3.subgroup_closure(&[c]);
        for g in s3.elements() {
            assert_eq!(a3.stabilizer_of_coset(g), a3);
        }
    }

    #[test]
    fn orbit_representatives() {
        let s3 = symmetric3();
        let whole = Subgroup::whole(&s3);
        let reps = whole.adjoint_orbit_representatives(&whole.coset(0)).unwrap();
        assert_eq!(reps.len(), 3);
        let z4 = cyclic(4);
        let reps = Subgroup::whole(&z4).adjoint_orbit_representatives(&[0, 1, 2, 3]).unwrap();
        assert!(reps.iter().all(|r| r.orbit_size == 1));
        let triv = Subgroup::trivial(&s3);
        assert_eq!(triv.adjoint_orbit_representatives(&[0, 3]).unwrap().len(), 2);
    }

    #[test]
    fn class_counts() {
        assert_eq!(class_sizes(&symmetric3()), vec![1, 2, 3]);
        assert_eq!(quaternion().conjugacy_classes().len(), 5);
        assert_eq!(cyclic(5).conjugacy_classes().len(), 5);
        assert_eq!(class_sizes(&dihedral4()), vec![1, 1, 2, 2, 2]);
        assert_eq!(alternating4().conjugacy_classes().len(), 4);
    }
}
