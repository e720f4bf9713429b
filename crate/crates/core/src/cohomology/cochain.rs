use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_rational::Ratio;
use parking_lot::RwLock;

use super::unit::UnitScalar;
use crate::error::{Error, Result};
use crate::group::{DirectProduct, Element, FiniteGroup, GroupHom, Subgroup};

/// Largest arity a cochain may have (coboundaries of 3-cochains).
pub const MAX_ARITY: usize = 4;

/// Dense tables are refused beyond this many entries.
const DENSE_LIMIT: usize = 1 << 26;

/// A normalized `U(1)`-valued cochain `Gⁿ → ℂ^×` with root-of-unity values.
///
/// Cochains are lazily evaluated expression trees; nothing is materialized
/// unless built from an explicit table. Cloning is cheap.
#[derive(Clone)]
pub struct Cochain {
    arity: usize,
    group: Arc<FiniteGroup>,
    node: Arc<Node>,
}

pub(crate) enum Node {
    Trivial,
    Dense(Vec<UnitScalar>),
    Sparse(HashMap<Vec<Element>, UnitScalar>),
    /// `κ̲^t` on Z/N.
    Cyclic { n: usize, t: i64 },
    /// `λ̲_k` on Z/N.
    CyclicLambda { n: usize, k: i64 },
    Inflate { hom: GroupHom, inner: Cochain },
    /// `ϖ((x,f),(y,g),(z,h)) = ω(x,y,z) ω⁻¹(f,g,h)` on `G × G`.
    Double { inner: Cochain },
    Product(Vec<Cochain>),
    Power(Cochain, i64),
    Coboundary(Cochain),
    Memo { inner: Cochain, cache: RwLock<HashMap<[u32; MAX_ARITY], UnitScalar>> },
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &*self.node {
            Node::Trivial => "trivial",
            Node::Dense(_) => "dense",
            Node::Sparse(_) => "sparse",
            Node::Cyclic { .. } => "cyclic",
            Node::CyclicLambda { .. } => "cyclic_lambda",
            Node::Inflate { .. } => "inflate",
            Node::Double { .. } => "double",
            Node::Product(_) => "product",
            Node::Power(..) => "power",
            Node::Coboundary(_) => "coboundary",
            Node::Memo { .. } => "memo",
        };
        write!(f, "Cochain({kind}, arity {}, |G| = {})", self.arity, self.group.order())
    }
}

fn check_arity(arity: usize) -> Result<()> {
    if (1..=MAX_ARITY).contains(&arity) {
        Ok(())
    } else {
        Err(Error::Contract(format!("unsupported cochain arity {arity}")))
    }
}

impl Cochain {
    fn make(arity: usize, group: Arc<FiniteGroup>, node: Node) -> Self {
        Self { arity, group, node: Arc::new(node) }
    }

    pub fn trivial(group: &Arc<FiniteGroup>, arity: usize) -> Self {
        Self::make(arity, group.clone(), Node::Trivial)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub(crate) fn node(&self) -> &Node {
        &self.node
    }

    /// A dense table in row-major order over `Gⁿ`. Must be normalized.
    pub fn from_dense(group: &Arc<FiniteGroup>, arity: usize, values: Vec<UnitScalar>) -> Result<Self> {
        check_arity(arity)?;
        let n = group.order();
        let expected = n.checked_pow(arity as u32).filter(|&s| s <= DENSE_LIMIT);
        if expected != Some(values.len()) {
            return Err(Error::Contract("dense table has the wrong size".into()));
        }
        let c = Self::make(arity, group.clone(), Node::Dense(values));
        if let Some(t) = c.first_unnormalized_entry() {
            return Err(Error::Validation { identity: "normalization".into(), tuple: t });
        }
        Ok(c)
    }

    /// Materializes `f` over all of `Gⁿ`. Entries with an identity argument
    /// are forced to 1.
    pub fn tabulate(
        group: &Arc<FiniteGroup>,
        arity: usize,
        mut f: impl FnMut(&[Element]) -> UnitScalar,
    ) -> Result<Self> {
        check_arity(arity)?;
        let n = group.order();
        let size = n.checked_pow(arity as u32).filter(|&s| s <= DENSE_LIMIT);
        let size = size.ok_or_else(|| Error::Contract("table too large to materialize".into()))?;
        let mut args = vec![0; arity];
        let mut values = Vec::with_capacity(size);
        for idx in 0..size {
            let mut r = idx;
            for a in args.iter_mut().rev() {
                *a = r % n;
                r /= n;
            }
            values.push(if args.contains(&0) { UnitScalar::ONE } else { f(&args) });
        }
        Ok(Self::make(arity, group.clone(), Node::Dense(values)))
    }

    /// Sparse table; missing entries are 1. Must be normalized.
    pub fn from_entries(
        group: &Arc<FiniteGroup>,
        arity: usize,
        entries: impl IntoIterator<Item = (Vec<Element>, UnitScalar)>,
    ) -> Result<Self> {
        check_arity(arity)?;
        let mut map = HashMap::new();
        for (k, v) in entries {
            if k.len() != arity || k.iter().any(|&x| x >= group.order()) {
                return Err(Error::Contract(format!("bad table key {k:?}")));
            }
            if k.contains(&0) && !v.is_one() {
                return Err(Error::Validation { identity: "normalization".into(), tuple: k });
            }
            if !v.is_one() {
                map.insert(k, v);
            }
        }
        Ok(Self::make(arity, group.clone(), Node::Sparse(map)))
    }

    /// The generating 3-cocycle `κ̲^t` of `H³(Z/N, ℂ^×)` on a standard cyclic
    /// group: exponent `t·[ℓ]([j]+[k]−[j+k]) / N²`.
    pub fn cyclic_on(group: &Arc<FiniteGroup>, t: i64) -> Result<Self> {
        if !group.is_standard_cyclic() {
            return Err(Error::Contract("cyclic cocycle needs Z/N with residue labels".into()));
        }
        Ok(Self::make(3, group.clone(), Node::Cyclic { n: group.order(), t }))
    }

    pub fn cyclic(n: usize, t: i64) -> Result<Self> {
        Self::cyclic_on(&Arc::new(FiniteGroup::cyclic(n)?), t)
    }

    /// `λ̲_k(j) = e^{2πi [k][j] / N²}`, whose coboundary is `κ̲(·, ·, k)`.
    pub fn cyclic_lambda_on(group: &Arc<FiniteGroup>, k: i64) -> Result<Self> {
        if !group.is_standard_cyclic() {
            return Err(Error::Contract("cyclic lambda needs Z/N with residue labels".into()));
        }
        Ok(Self::make(1, group.clone(), Node::CyclicLambda { n: group.order(), k }))
    }

    pub fn cyclic_lambda(n: usize, k: i64) -> Result<Self> {
        Self::cyclic_lambda_on(&Arc::new(FiniteGroup::cyclic(n)?), k)
    }

    /// Pullback along `hom: G → Q` of a cochain on `Q`.
    pub fn inflate(&self, hom: &GroupHom) -> Result<Self> {
        if **hom.target() != *self.group {
            return Err(Error::Contract("inflation: hom target differs from cochain group".into()));
        }
        Ok(Self::make(
            self.arity,
            hom.source().clone(),
            Node::Inflate { hom: hom.clone(), inner: self.clone() },
        ))
    }

    /// Restriction to a subgroup, re-indexed as a standalone group.
    pub fn restrict(&self, subgroup: &Subgroup) -> Result<Self> {
        let (_, embedding) = subgroup.to_group();
        self.inflate(&embedding)
    }

    /// The double cocycle `ϖ` on `product = G × G`.
    pub fn double_on(&self, product: &DirectProduct) -> Result<Self> {
        if *product.left != *self.group || *product.right != *self.group {
            return Err(Error::Contract("double cocycle needs the product G × G".into()));
        }
        if self.arity != 3 {
            return Err(Error::Contract("double construction needs a 3-cochain".into()));
        }
        Ok(Self::make(3, product.group.clone(), Node::Double { inner: self.clone() }))
    }

    fn same_base(&self, other: &Cochain) -> Result<()> {
        if self.arity != other.arity || !Arc::ptr_eq(&self.group, &other.group) && *self.group != *other.group {
            return Err(Error::Contract("cochains live on different groups or arities".into()));
        }
        Ok(())
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Cochain) -> Result<Self> {
        self.same_base(other)?;
        let mut factors = Vec::new();
        for c in [self, other] {
            match &*c.node {
                Node::Trivial => {}
                Node::Product(fs) => factors.extend(fs.iter().cloned()),
                _ => factors.push(c.clone()),
            }
        }
        Ok(match factors.len() {
            0 => Self::trivial(&self.group, self.arity),
            1 => factors.pop().unwrap(),
            _ => Self::make(self.arity, self.group.clone(), Node::Product(factors)),
        })
    }

    pub fn product(group: &Arc<FiniteGroup>, arity: usize, factors: &[Cochain]) -> Result<Self> {
        factors.iter().try_fold(Self::trivial(group, arity), |acc, f| acc.mul(f))
    }

    pub fn pow(&self, k: i64) -> Self {
        match (&*self.node, k) {
            (Node::Trivial, _) | (_, 0) => Self::trivial(&self.group, self.arity),
            (_, 1) => self.clone(),
            (Node::Power(inner, j), _) => inner.pow(j * k),
            _ => Self::make(self.arity, self.group.clone(), Node::Power(self.clone(), k)),
        }
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }

    /// `(dα)(g₁,…,g_{n+1}) = α(g₂,…) α⁻¹(g₁g₂,…) ⋯ α(g₁,…,g_n)^{(−1)^{n+1}}`.
    pub fn coboundary(&self) -> Result<Self> {
        if self.arity >= MAX_ARITY {
            return Err(Error::Contract("coboundary of a 4-cochain is not supported".into()));
        }
        if matches!(*self.node, Node::Trivial) {
            return Ok(Self::trivial(&self.group, self.arity + 1));
        }
        Ok(Self::make(self.arity + 1, self.group.clone(), Node::Coboundary(self.clone())))
    }

    /// Wraps the cochain with a concurrent evaluation cache.
    pub fn memoized(&self) -> Self {
        if matches!(*self.node, Node::Trivial | Node::Dense(_) | Node::Memo { .. }) {
            return self.clone();
        }
        Self::make(
            self.arity,
            self.group.clone(),
            Node::Memo { inner: self.clone(), cache: RwLock::new(HashMap::new()) },
        )
    }

    /// Dense copy of this cochain.
    pub fn materialize(&self) -> Result<Self> {
        if matches!(*self.node, Node::Dense(_)) {
            return Ok(self.clone());
        }
        Self::tabulate(&self.group, self.arity, |a| self.eval(a))
    }

    /// `ω` when this cochain is the double `ϖ` of `ω` (possibly memoized).
    pub fn double_inner(&self) -> Option<&Cochain> {
        match &*self.node {
            Node::Double { inner } => Some(inner),
            Node::Memo { inner, .. } => inner.double_inner(),
            _ => None,
        }
    }

    pub fn is_trivial_node(&self) -> bool {
        matches!(*self.node, Node::Trivial)
    }

    pub fn eval(&self, args: &[Element]) -> UnitScalar {
        debug_assert_eq!(args.len(), self.arity);
        if args.contains(&0) {
            return UnitScalar::ONE;
        }
        self.eval_raw(args)
    }

    #[inline]
    pub fn eval1(&self, a: Element) -> UnitScalar {
        self.eval(&[a])
    }

    #[inline]
    pub fn eval2(&self, a: Element, b: Element) -> UnitScalar {
        self.eval(&[a, b])
    }

    #[inline]
    pub fn eval3(&self, a: Element, b: Element, c: Element) -> UnitScalar {
        self.eval(&[a, b, c])
    }

    fn eval_raw(&self, args: &[Element]) -> UnitScalar {
        match &*self.node {
            Node::Trivial => UnitScalar::ONE,
            Node::Dense(values) => {
                let n = self.group.order();
                let idx = args.iter().fold(0, |acc, &a| acc * n + a);
                values[idx]
            }
            Node::Sparse(map) => map.get(args).copied().unwrap_or(UnitScalar::ONE),
            Node::Cyclic { n, t } => {
                let n = *n as i64;
                let (j, k, l) = (args[0] as i64, args[1] as i64, args[2] as i64);
                UnitScalar::from_exponent(Ratio::new(t * l * (j + k - (j + k) % n), n * n))
            }
            Node::CyclicLambda { n, k } => {
                let n = *n as i64;
                UnitScalar::from_exponent(Ratio::new(k.rem_euclid(n) * args[0] as i64, n * n))
            }
            Node::Inflate { hom, inner } => {
                let mut mapped = [0; MAX_ARITY];
                for (m, &a) in mapped.iter_mut().zip(args) {
                    *m = hom.apply(a);
                }
                inner.eval(&mapped[..args.len()])
            }
            Node::Double { inner } => {
                let n = inner.group.order();
                let (mut left, mut right) = ([0; 3], [0; 3]);
                for (i, &a) in args.iter().enumerate() {
                    left[i] = a / n;
                    right[i] = a % n;
                }
                inner.eval(&left) / inner.eval(&right)
            }
            Node::Product(fs) => fs.iter().map(|f| f.eval(args)).product(),
            Node::Power(inner, k) => inner.eval(args).pow(*k),
            Node::Coboundary(inner) => coboundary_eval(inner, args),
            Node::Memo { inner, cache } => {
                let mut key = [u32::MAX; MAX_ARITY];
                for (k, &a) in key.iter_mut().zip(args) {
                    *k = a as u32;
                }
                if let Some(v) = cache.read().get(&key) {
                    return *v;
                }
                let v = inner.eval(args);
                cache.write().insert(key, v);
                v
            }
        }
    }

    /// Every tuple of `Gⁿ`, in row-major order.
    pub fn domain(&self) -> impl Iterator<Item = Vec<Element>> + '_ {
        tuples(self.group.order(), self.arity)
    }

    fn first_unnormalized_entry(&self) -> Option<Vec<Element>> {
        self.domain().find(|t| t.contains(&0) && !self.eval_raw(t).is_one())
    }

    /// First tuple where `dα ≠ 1`, if any. Trees that are cocycles by
    /// construction are accepted without a scan.
    pub fn cocycle_failure(&self) -> Option<Vec<Element>> {
        if self.certified_cocycle() {
            return None;
        }
        let table = self.materialize().unwrap_or_else(|_| self.clone());
        let d = table.coboundary().ok()?;
        tuples(self.group.order(), d.arity).find(|t| !d.eval(t).is_one())
    }

    /// Whether the expression tree is closed by construction: coboundaries,
    /// `κ̲^t`, and inflations, doubles, powers and products of such.
    pub fn certified_cocycle(&self) -> bool {
        match &*self.node {
            Node::Trivial | Node::Coboundary(_) => true,
            Node::Cyclic { .. } => self.arity == 3,
            Node::Inflate { inner, .. } | Node::Double { inner } | Node::Power(inner, _) | Node::Memo { inner, .. } => {
                inner.certified_cocycle()
            }
            Node::Product(fs) => fs.iter().all(Cochain::certified_cocycle),
            Node::Dense(_) | Node::Sparse(_) | Node::CyclicLambda { .. } => false,
        }
    }

    /// Exhaustive check that `dα = 1`.
    pub fn is_cocycle(&self) -> bool {
        self.arity < MAX_ARITY && self.cocycle_failure().is_none()
    }

    /// First `(x, y, h)` with `h ∈ H` and `ω(x, y, h) ≠ 1`.
    pub fn adaptedness_failure(&self, h: &Subgroup) -> Option<Vec<Element>> {
        let g = &self.group;
        for x in g.elements() {
            for y in g.elements() {
                for &z in h.elements() {
                    if !self.eval3(x, y, z).is_one() {
                        return Some(vec![x, y, z]);
                    }
                }
            }
        }
        None
    }

    /// `ω|_{G×G×H} = 1`.
    pub fn is_adapted(&self, h: &Subgroup) -> bool {
        self.arity == 3 && self.adaptedness_failure(h).is_none()
    }

    /// First tuple of `Hⁿ` where the cochain is not 1.
    pub fn nontrivial_on(&self, h: &Subgroup) -> Option<Vec<Element>> {
        tuples(h.order(), self.arity)
            .map(|t| t.into_iter().map(|i| h.elements()[i]).collect::<Vec<_>>())
            .find(|t| !self.eval(t).is_one())
    }

    /// First tuple of `Hⁿ` where `self` and `other` differ.
    pub fn disagreement_on(&self, other: &Cochain, h: &Subgroup) -> Option<Vec<Element>> {
        tuples(h.order(), self.arity)
            .map(|t| t.into_iter().map(|i| h.elements()[i]).collect::<Vec<_>>())
            .find(|t| self.eval(t) != other.eval(t))
    }

    /// Exhaustive pointwise equality on `Gⁿ`.
    pub fn equals(&self, other: &Cochain) -> bool {
        self.arity == other.arity
            && self.group.order() == other.group.order()
            && self.domain().all(|t| self.eval(&t) == other.eval(&t))
    }

    /// An lcm bound for the denominators of all values.
    pub fn denominator_bound(&self) -> i64 {
        match &*self.node {
            Node::Trivial => 1,
            Node::Dense(v) => v.iter().fold(1, |acc, u| acc.lcm(&u.denominator())),
            Node::Sparse(m) => m.values().fold(1, |acc, u| acc.lcm(&u.denominator())),
            Node::Cyclic { n, .. } | Node::CyclicLambda { n, .. } => (*n as i64) * (*n as i64),
            Node::Inflate { inner, .. }
            | Node::Double { inner }
            | Node::Power(inner, _)
            | Node::Coboundary(inner)
            | Node::Memo { inner, .. } => inner.denominator_bound(),
            Node::Product(fs) => fs.iter().fold(1, |acc, f| acc.lcm(&f.denominator_bound())),
        }
    }
}

fn coboundary_eval(inner: &Cochain, args: &[Element]) -> UnitScalar {
    let g = &inner.group;
    let n = inner.arity;
    let mut buf = [0; MAX_ARITY];
    let mut acc = inner.eval(&args[1..]);
    for i in 1..=n {
        for j in 0..n {
            buf[j] = match j.cmp(&(i - 1)) {
                std::cmp::Ordering::Less => args[j],
                std::cmp::Ordering::Equal => g.mul(args[j], args[j + 1]),
                std::cmp::Ordering::Greater => args[j + 1],
            };
        }
        let face = inner.eval(&buf[..n]);
        acc = if i % 2 == 1 { acc / face } else { acc * face };
    }
    let last = inner.eval(&args[..n]);
    if (n + 1) % 2 == 1 {
        acc / last
    } else {
        acc * last
    }
}

/// All tuples in `{0..n-1}^arity`, row-major.
pub fn tuples(n: usize, arity: usize) -> impl Iterator<Item = Vec<Element>> {
    let total = n.checked_pow(arity as u32).unwrap_or(usize::MAX);
    (0..total).map(move |mut idx| {
        let mut t = vec![0; arity];
        for a in t.iter_mut().rev() {
            *a = idx % n;
            idx /= n;
        }
        t
    })
}

/// Builds `ϖ` together with the product group `Γ = G × G`.
pub fn double_cocycle(omega: &Cochain) -> Result<(DirectProduct, Cochain)> {
    let product = crate::group::direct_product(omega.group(), omega.group())?;
    let varpi = omega.double_on(&product)?;
    Ok((product, varpi))
}
