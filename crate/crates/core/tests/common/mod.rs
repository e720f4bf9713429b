#![allow(dead_code)]

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gtfs::cohomology::{double_cocycle, Cochain, UnitScalar};
use gtfs::group::named::*;
use gtfs::group::{direct_product, Element, FiniteGroup, GroupHom, Subgroup};
use gtfs::symbols::GroupTheoreticalData;

pub struct Datum {
    pub name: &'static str,
    pub data: GroupTheoreticalData,
}

pub fn of_order(g: &Arc<FiniteGroup>, k: usize) -> Element {
    g.elements().find(|&x| g.element_order(x) == k).unwrap()
}

/// Random normalized cochain with values in `μ_n`.
pub fn random_cochain(g: &Arc<FiniteGroup>, arity: usize, n: i64, rng: &mut ChaCha8Rng) -> Cochain {
    Cochain::tabulate(g, arity, |_| UnitScalar::from_turns(rng.random_range(0..n), n)).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `κ^t` inflated along `p`.
pub fn inflated(p: &GroupHom, t: i64) -> Cochain {
    Cochain::cyclic_on(p.target(), t).unwrap().inflate(p).unwrap()
}

/// The quotient map `G → G/N ≅ Z/k` for a normal `N` with cyclic quotient
/// generated by the image of `c`.
pub fn cyclic_quotient(n: &Subgroup, c: Element, k: usize) -> GroupHom {
    let g = n.parent().clone();
    let images = g
        .elements()
        .map(|x| (0..k).find(|&j| n.contains(g.mul(x, g.pow(c, -(j as i64))))).unwrap())
        .collect();
    GroupHom::new(g.clone(), cyclic(k), images).unwrap()
}

pub fn valid(name: &'static str, h: Subgroup, omega: Cochain, psi: Option<Cochain>) -> Datum {
    let psi = psi.unwrap_or_else(|| Cochain::trivial(h.parent(), 2));
    let data = GroupTheoreticalData::new(h, omega, psi).unwrap_or_else(|e| panic!("{name}: {e}"));
    Datum { name, data }
}

pub fn klein() -> Arc<FiniteGroup> {
    let z2 = cyclic(2);
    direct_product(&z2, &z2).unwrap().group
}

/// `ψ(s,t) = (-1)^{s₂t₁}` on the Klein four-group, a 2-cocycle in the
/// nontrivial class.
pub fn klein_psi(k: &Arc<FiniteGroup>) -> Cochain {
    let z2 = cyclic(2);
    let p = direct_product(&z2, &z2).unwrap();
    Cochain::tabulate(k, 2, |t| UnitScalar::from_turns((p.split(t[0]).1 * p.split(t[1]).0) as i64, 2)).unwrap()
}

/// The formula-agreement corpus.
pub fn corpus() -> Vec<Datum> {
    let mut out = Vec::new();
    let z2 = cyclic(2);
    let z4 = cyclic(4);
    let z6 = cyclic(6);
    let z7 = cyclic(7);
    let z8 = cyclic(8);
    let s3 = symmetric3();
    let d4 = dihedral4();
    let q8 = quaternion();
    let a4 = alternating4();

    out.push(valid("Vec(Z/2, κ)", Subgroup::trivial(&z2), Cochain::cyclic_on(&z2, 1).unwrap(), None));
    out.push(valid("Vec(Z/4, κ)", Subgroup::trivial(&z4), Cochain::cyclic_on(&z4, 1).unwrap(), None));
    out.push(valid("C(Z/4, Z/2, κ²)", Subgroup::closure(&z4, &[2]), Cochain::cyclic_on(&z4, 2).unwrap(), None));
    out.push(valid("C(Z/6, Z/3, κ³)", Subgroup::closure(&z6, &[2]), Cochain::cyclic_on(&z6, 3).unwrap(), None));
    out.push(valid("Rep(Z/7)", Subgroup::whole(&z7), Cochain::trivial(&z7, 3), None));
    out.push(valid("C(Z/8, Z/2, κ²)", Subgroup::closure(&z8, &[4]), Cochain::cyclic_on(&z8, 2).unwrap(), None));

    let a3 = Subgroup::closure(&s3, &[of_order(&s3, 3)]);
    let sign = GroupHom::index_two_quotient(&a3).unwrap();
    out.push(valid("Rep(S3)", Subgroup::whole(&s3), Cochain::trivial(&s3, 3), None));
    out.push(valid("C(S3, A3, κ)", a3.clone(), inflated(&sign, 1), None));
    out.push(valid("Vec(S3, κ)", Subgroup::trivial(&s3), inflated(&sign, 1), None));

    let r = of_order(&d4, 4);
    let s = d4.elements().find(|&x| d4.element_order(x) == 2 && !Subgroup::closure(&d4, &[r]).contains(x)).unwrap();
    let klein_s = Subgroup::closure(&d4, &[d4.mul(r, r), s]);
    out.push(valid("Rep(D4)", Subgroup::whole(&d4), Cochain::trivial(&d4, 3), None));
    out.push(valid(
        "C(D4, <s>, κ)",
        Subgroup::closure(&d4, &[s]),
        inflated(&GroupHom::index_two_quotient(&klein_s).unwrap(), 1),
        None,
    ));

    let i = of_order(&q8, 4);
    let ci = Subgroup::closure(&q8, &[i]);
    out.push(valid("Rep(Q8)", Subgroup::whole(&q8), Cochain::trivial(&q8, 3), None));
    out.push(valid("C(Q8, <i>, κ)", ci.clone(), inflated(&GroupHom::index_two_quotient(&ci).unwrap(), 1), None));

    let c = of_order(&a4, 3);
    let v4 = Subgroup::closure(&a4, &a4.elements().filter(|&x| a4.element_order(x) == 2).collect::<Vec<_>>());
    out.push(valid("C(A4, V4, κ₃)", v4.clone(), inflated(&cyclic_quotient(&v4, c, 3), 1), None));
    out.push(valid("C(A4, Z/3)", Subgroup::closure(&a4, &[c]), Cochain::trivial(&a4, 3), None));

    let p = direct_product(&s3, &z2).unwrap();
    let (_, p2) = p.projections();
    let s3_in = Subgroup::closure(&p.group, &[p.pair(1, 0), p.pair(2, 0)]);
    out.push(valid("C(S3×Z/2, S3, κ)", s3_in, inflated(&p2, 1), None));

    let (dp, varpi) = double_cocycle(&Cochain::cyclic_on(&z2, 1).unwrap()).unwrap();
    out.push(valid("D(Z/2, κ) as C(Z/2², Δ, ϖ)", dp.diagonal().unwrap(), varpi, None));
    let (dp3, varpi3) = double_cocycle(&Cochain::trivial(&s3, 3)).unwrap();
    out.push(valid("D(S3) as C(S3², Δ)", dp3.diagonal().unwrap(), varpi3, None));

    let k = klein();
    out.push(valid("C(K4, K4, 1, ψ)", Subgroup::whole(&k), Cochain::trivial(&k, 3), Some(klein_psi(&k))));

    let mut g = rng(11);
    let base = valid("", Subgroup::closure(&s3, &[of_order(&s3, 2)]), Cochain::trivial(&s3, 3), None).data;
    let shifted = base.gauge_shift(&random_cochain(&s3, 2, 6, &mut g), &random_cochain(&s3, 1, 6, &mut g)).unwrap();
    out.push(Datum { name: "C(S3, Z/2) explicit tables", data: shifted });
    let base = valid("", Subgroup::closure(&d4, &[r]), Cochain::trivial(&d4, 3), None).data;
    let shifted = base.gauge_shift(&random_cochain(&d4, 2, 4, &mut g), &random_cochain(&d4, 1, 4, &mut g)).unwrap();
    out.push(Datum { name: "C(D4, Z/4) explicit tables", data: shifted });
    out
}

/// Groups and 3-cocycles for the twisted doubles.
pub fn double_corpus() -> Vec<(&'static str, Cochain)> {
    let z2 = cyclic(2);
    let z3 = cyclic(3);
    let z4 = cyclic(4);
    let s3 = symmetric3();
    let d4 = dihedral4();
    let q8 = quaternion();
    let mut out = vec![
        ("Z/2, κ", Cochain::cyclic_on(&z2, 1).unwrap()),
        ("Z/3, κ", Cochain::cyclic_on(&z3, 1).unwrap()),
        ("Z/4, κ", Cochain::cyclic_on(&z4, 1).unwrap()),
        ("Z/4, κ²", Cochain::cyclic_on(&z4, 2).unwrap()),
        ("S3", Cochain::trivial(&s3, 3)),
        ("S3, κ", inflated(&GroupHom::index_two_quotient(&Subgroup::closure(&s3, &[of_order(&s3, 3)])).unwrap(), 1)),
    ];
    for (name, w) in index_two_sweep(&d4).into_iter().take(3) {
        out.push((name, w));
    }
    for (name, w) in index_two_sweep(&q8).into_iter().take(3) {
        out.push((name, w));
    }
    out
}

/// Index-two subgroups of `g`.
pub fn index_two_subgroups(g: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let mut out: Vec<Subgroup> = Vec::new();
    for a in g.elements() {
        for b in g.elements() {
            let h = Subgroup::closure(g, &[a, b]);
            if h.order() * 2 == g.order() && !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out
}

/// Products of cyclic cocycles inflated along the index-two quotients.
pub fn index_two_sweep(g: &Arc<FiniteGroup>) -> Vec<(&'static str, Cochain)> {
    let names = ["ω₀", "ω₁", "ω₂", "ω₃", "ω₀₁", "ω₀₂", "ω₁₂"];
    let quotients: Vec<Cochain> =
        index_two_subgroups(g).iter().map(|n| inflated(&GroupHom::index_two_quotient(n).unwrap(), 1)).collect();
    let mut out = vec![(names[0], Cochain::trivial(g, 3))];
    for (i, q) in quotients.iter().enumerate().take(3) {
        out.push((names[i + 1], q.clone()));
    }
    for (k, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
        if j < quotients.len() {
            out.push((names[4 + k], quotients[i].mul(&quotients[j]).unwrap()));
        }
    }
    out
}

/// Cyclic subgroups of index two.
pub fn cyclic_index_two(g: &Arc<FiniteGroup>) -> Vec<Subgroup> {
    let mut out: Vec<Subgroup> = Vec::new();
    for x in g.elements() {
        let h = Subgroup::closure(g, &[x]);
        if h.order() * 2 == g.order() && !out.contains(&h) {
            out.push(h);
        }
    }
    out
}
