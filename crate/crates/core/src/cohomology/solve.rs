//! Solving `dθ = β` for a 1-cochain `θ` on a subgroup.
//!
//! The equation is linear in the exponents: `θ(t) − θ(st) + θ(s) ≡ β(s,t)`
//! (mod 1). At a common denominator `D` it becomes an integer system over
//! `Z/D`, solved separately modulo each prime power of `D` by a local Smith
//! elimination and recombined by the Chinese remainder theorem.

use num_integer::Integer;
use num_rational::Ratio;

use super::cochain::Cochain;
use super::unit::UnitScalar;
use crate::error::{Error, Result};
use crate::group::Subgroup;

/// Returns `θ` on `H` (as a cochain on the parent group, 1 off `H`) with
/// `dθ = β` on `H × H`, or [`Error::NotACoboundary`].
pub fn solve_coboundary(beta: &Cochain, h: &Subgroup) -> Result<Cochain> {
    if beta.arity() != 2 {
        return Err(Error::Contract("solve_coboundary expects a 2-cochain".into()));
    }
    let g = beta.group();
    let els = h.elements();
    let n = els.len();
    let mut l = 1i64;
    for &s in els {
        for &t in els {
            l = l.lcm(&beta.eval2(s, t).denominator());
        }
    }
    let modulus = l * n as i64;
    // unknowns: θ(h) for the non-identity elements, column = position - 1
    let cols = n - 1;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &s in &els[1..] {
        for &t in &els[1..] {
            let mut row = vec![0i64; cols];
            let st = g.mul(s, t);
            row[h.position(t).unwrap() - 1] += 1;
            if st != 0 {
                row[h.position(st).unwrap() - 1] -= 1;
            }
            row[h.position(s).unwrap() - 1] += 1;
            let b = beta.eval2(s, t).exponent() * Ratio::from_integer(modulus);
            debug_assert!(b.is_integer());
            rows.push(row);
            rhs.push(b.to_integer());
        }
    }
    let y = solve_mod(&rows, &rhs, cols, modulus).ok_or_else(|| {
        Error::NotACoboundary(format!("2-cochain on subgroup of order {n} is not a coboundary"))
    })?;
    let entries = els[1..]
        .iter()
        .zip(y)
        .map(|(&x, yi)| (vec![x], UnitScalar::from_turns(yi, modulus)));
    Cochain::from_entries(g, 1, entries)
}

/// Solves `A y ≡ c (mod m)`; returns one solution in `[0, m)`.
pub(crate) fn solve_mod(a: &[Vec<i64>], c: &[i64], cols: usize, m: i64) -> Option<Vec<i64>> {
    let mut solution = vec![0i64; cols];
    let mut acc_mod = 1i64;
    for (p, e) in factorize(m) {
        let q = p.pow(e);
        let local = solve_prime_power(a, c, cols, p, q)?;
        for (s, l) in solution.iter_mut().zip(local) {
            *s = crt(*s, acc_mod, l, q);
        }
        acc_mod *= q;
    }
    Some(solution)
}

fn factorize(mut m: i64) -> Vec<(i64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn mulmod(a: i64, b: i64, q: i64) -> i64 {
    ((a as i128 * b as i128).rem_euclid(q as i128)) as i64
}

fn inv_mod(a: i64, q: i64) -> i64 {
    let e = a.rem_euclid(q).extended_gcd(&q);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(q)
}

fn valuation(mut x: i64, p: i64, cap: u32) -> u32 {
    if x == 0 {
        return cap;
    }
    let mut v = 0;
    while x % p == 0 && v < cap {
        x /= p;
        v += 1;
    }
    v
}

fn crt(r1: i64, m1: i64, r2: i64, m2: i64) -> i64 {
    // x ≡ r1 (m1), x ≡ r2 (m2), gcd(m1, m2) = 1
    let m = m1 * m2;
    let t = mulmod((r2 - r1).rem_euclid(m2), inv_mod(m1, m2), m2);
    (r1 + m1 * t).rem_euclid(m)
}

fn solve_prime_power(a: &[Vec<i64>], c: &[i64], cols: usize, p: i64, q: i64) -> Option<Vec<i64>> {
    let e = valuation(q, p, 64);
    let mut m: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|x| x.rem_euclid(q)).collect()).collect();
    let mut rhs: Vec<i64> = c.iter().map(|x| x.rem_euclid(q)).collect();
    let nrows = m.len();
    // column transform: y = colt · z
    let mut colt: Vec<Vec<i64>> = (0..cols).map(|i| (0..cols).map(|j| i64::from(i == j)).collect()).collect();
    let mut pivots = Vec::new();
    let mut k = 0;
    while k < nrows.min(cols) {
        let mut best: Option<(usize, usize, u32)> = None;
        for (i, row) in m.iter().enumerate().skip(k) {
            for (j, &x) in row.iter().enumerate().skip(k) {
                let v = valuation(x, p, e);
                if v < e && best.is_none_or(|b| v < b.2) {
                    best = Some((i, j, v));
                }
            }
            if best.is_some_and(|b| b.2 == 0) {
                break;
            }
        }
        let Some((pi, pj, v)) = best else { break };
        m.swap(k, pi);
        rhs.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        for row in colt.iter_mut() {
            row.swap(k, pj);
        }
        let pv = p.pow(v);
        let unit_inv = inv_mod(m[k][k] / pv, q);
        for r in 0..nrows {
            if r == k || m[r][k] == 0 {
                continue;
            }
            let f = mulmod(m[r][k] / pv, unit_inv, q);
            for j in k..cols {
                m[r][j] = (m[r][j] - mulmod(f, m[k][j], q)).rem_euclid(q);
            }
            rhs[r] = (rhs[r] - mulmod(f, rhs[k], q)).rem_euclid(q);
        }
        for j in k + 1..cols {
            if m[k][j] == 0 {
                continue;
            }
            let f = mulmod(m[k][j] / pv, unit_inv, q);
            for row in m.iter_mut() {
                row[j] = (row[j] - mulmod(f, row[k], q)).rem_euclid(q);
            }
            for row in colt.iter_mut() {
                row[j] = (row[j] - mulmod(f, row[k], q)).rem_euclid(q);
            }
        }
        pivots.push((v, unit_inv));
        k += 1;
    }
    let rank = pivots.len();
    if rhs[rank..].iter().any(|&x| x != 0) {
        return None;
    }
    let mut z = vec![0i64; cols];
    for (i, &(v, unit_inv)) in pivots.iter().enumerate() {
        if valuation(rhs[i], p, e) < v {
            return None;
        }
        z[i] = mulmod(rhs[i] / p.pow(v), unit_inv, q);
    }
    let y = (0..cols)
        .map(|i| (0..cols).fold(0, |acc, j| (acc + mulmod(colt[i][j], z[j], q)) % q))
        .collect();
    Some(y)
}

/// Convenience for tests: `d` of a 1-cochain restricted to `H`, compared to `β`.
pub fn is_coboundary_of(theta: &Cochain, beta: &Cochain, h: &Subgroup) -> Result<bool> {
    let d = theta.coboundary()?;
    Ok(d.disagreement_on(beta, h).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::named::*;
    use crate::group::{direct_product, Subgroup};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trivial_beta_gives_trivial_witness() {
        let s3 = symmetric3();
        let h = Subgroup::whole(&s3);
        let theta = solve_coboundary(&Cochain::trivial(&s3, 2), &h).unwrap();
        assert!(is_coboundary_of(&theta, &Cochain::trivial(&s3, 2), &h).unwrap());
    }

    #[test]
    fn round_trip_on_random_coboundaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for g in [symmetric3(), quaternion(), dihedral4(), alternating4()] {
            let h = Subgroup::whole(&g);
            for _ in 0..4 {
                let den = rng.random_range(1..13);
                let theta0 = Cochain::tabulate(&g, 1, |_| UnitScalar::from_turns(rng.random_range(0..den), den)).unwrap();
                let beta = theta0.coboundary().unwrap();
                let theta = solve_coboundary(&beta, &h).unwrap();
                assert!(is_coboundary_of(&theta, &beta, &h).unwrap());
            }
        }
    }

    #[test]
    fn klein_class_is_not_a_coboundary() {
        let z2 = cyclic(2);
        let k = direct_product(&z2, &z2).unwrap();
        let (a, b) = (k.pair(1, 0), k.pair(0, 1));
        // β((a1,b1),(a2,b2)) = (-1)^{b1 a2}: the nontrivial class
        let beta = Cochain::tabulate(&k.group, 2, |t| {
            let (_, b1) = k.split(t[0]);
            let (a2, _) = k.split(t[1]);
            UnitScalar::from_turns((b1 * a2) as i64, 2)
        })
        .unwrap();
        assert!(beta.is_cocycle());
        assert_ne!(beta.eval2(a, b), beta.eval2(b, a));
        let h = Subgroup::whole(&k.group);
        assert!(matches!(solve_coboundary(&beta, &h), Err(Error::NotACoboundary(_))));
        // brute-force confirmation over all θ with values in 8th roots
        let others: Vec<_> = (1..4).collect();
        let mut found = false;
        for code in 0..8i64.pow(3) {
            let vals: Vec<i64> = (0..3).map(|i| (code / 8i64.pow(i)) % 8).collect();
            let theta = Cochain::from_entries(
                &k.group,
                1,
                others.iter().zip(&vals).map(|(&x, &v)| (vec![x], UnitScalar::from_turns(v, 8))),
            )
            .unwrap();
            if is_coboundary_of(&theta, &beta, &h).unwrap() {
                found = true;
            }
        }
        assert!(!found);
    }

    #[test]
    fn modular_solver_on_small_systems() {
        // 2y ≡ 1 (mod 4) has no solution; 2y ≡ 2 (mod 4) does
        assert!(solve_mod(&[vec![2]], &[1], 1, 4).is_none());
        let y = solve_mod(&[vec![2]], &[2], 1, 4).unwrap();
        assert_eq!((2 * y[0]) % 4, 2);
        let y = solve_mod(&[vec![3, 1], vec![1, 5]], &[4, 8], 2, 12).unwrap();
        assert_eq!((3 * y[0] + y[1]) % 12, 4);
        assert_eq!((y[0] + 5 * y[1]) % 12, 8);
    }
}
