//! Reference implementations that share no code with the library: squares
//! from the total square `Sq(x) = x + x^2` with Pascal-triangle binomials,
//! monomial enumeration by nested recursion, and dense elimination.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Exps = Vec<u32>;
pub type Poly = BTreeSet<Exps>;

/// Pascal's triangle mod 2, rows `0..=n`.
pub fn pascal(n: usize) -> Vec<Vec<bool>> {
    let mut rows: Vec<Vec<bool>> = vec![vec![true]];
    for a in 1..=n {
        let prev = &rows[a - 1];
        let mut row = vec![true; a + 1];
        for b in 1..a {
            row[b] = prev[b - 1] ^ prev[b];
        }
        rows.push(row);
    }
    rows
}

pub fn binom(table: &[Vec<bool>], a: u32, b: u32) -> bool {
    b <= a && table[a as usize][b as usize]
}

fn toggle(p: &mut Poly, e: Exps) {
    if !p.remove(&e) {
        p.insert(e);
    }
}

/// Degree-`i` part of `Π (x_j + x_j^2)^{e_j}`.
pub fn sq_total(table: &[Vec<bool>], i: u32, exps: &[u32]) -> Poly {
    let mut out = Poly::new();
    let mut cur = exps.to_vec();
    fn rec(t: &[Vec<bool>], exps: &[u32], j: usize, left: u32, cur: &mut Exps, out: &mut Poly) {
        if j == exps.len() {
            if left == 0 {
                toggle(out, cur.clone());
            }
            return;
        }
        for a in 0..=exps[j].min(left) {
            if binom(t, exps[j], a) {
                cur[j] = exps[j] + a;
                rec(t, exps, j + 1, left - a, cur, out);
            }
        }
        cur[j] = exps[j];
    }
    rec(table, exps, 0, i, &mut cur, &mut out);
    out
}

pub fn sq_total_poly(table: &[Vec<bool>], i: u32, p: &Poly) -> Poly {
    let mut out = Poly::new();
    for m in p {
        for t in sq_total(table, i, m) {
            toggle(&mut out, t);
        }
    }
    out
}

/// All exponent vectors of length `k` and total `d`.
pub fn monomials(k: usize, d: u32) -> Vec<Exps> {
    fn rec(k: usize, d: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
        if cur.len() + 1 == k {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in 0..=d {
            cur.push(e);
            rec(k, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, d, &mut Vec::new(), &mut out);
    out
}

/// Row-reduces `rows` (dense bit rows) and returns a basis in echelon form.
pub fn echelon(rows: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    let mut basis: Vec<Vec<bool>> = Vec::new();
    for mut r in rows {
        for b in &basis {
            let p = b.iter().position(|&x| x).unwrap();
            if r[p] {
                for (x, y) in r.iter_mut().zip(b) {
                    *x ^= *y;
                }
            }
        }
        if let Some(p) = r.iter().position(|&x| x) {
            for b in basis.iter_mut() {
                if b[p] {
                    for (x, y) in b.iter_mut().zip(&r) {
                        *x ^= *y;
                    }
                }
            }
            basis.push(r);
        }
    }
    basis
}

pub fn in_span(basis: &[Vec<bool>], v: &[bool]) -> bool {
    let mut r = v.to_vec();
    for b in basis {
        let p = b.iter().position(|&x| x).unwrap();
        if r[p] {
            for (x, y) in r.iter_mut().zip(b) {
                *x ^= *y;
            }
        }
    }
    r.iter().all(|&x| !x)
}

/// Span of `Sq^i(m)` for every `i ≥ 1` and every monomial `m` of degree `d - i`,
/// as dense rows over `monomials(k, d)`.
pub fn all_squares_hit_rows(table: &[Vec<bool>], k: usize, d: u32) -> (Vec<Exps>, Vec<Vec<bool>>) {
    let target = monomials(k, d);
    let pos = |e: &Exps| target.iter().position(|t| t == e).unwrap();
    let mut rows = Vec::new();
    for i in 1..=d {
        for m in monomials(k, d - i) {
            let img = sq_total(table, i, &m);
            let mut row = vec![false; target.len()];
            for t in img {
                row[pos(&t)] ^= true;
            }
            rows.push(row);
        }
    }
    let basis = echelon(rows);
    (target, basis)
}

/// A random polynomial of degree `d` in `k` variables with about `terms` terms.
pub fn random_poly(rng: &mut ChaCha8Rng, k: usize, d: u32, terms: usize) -> Poly {
    let all = monomials(k, d);
    let mut p = Poly::new();
    for _ in 0..terms {
        toggle(&mut p, all[rng.gen_range(0..all.len())].clone());
    }
    p
}

pub fn to_text(p: &Poly) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter()
        .map(|e| format!("({})", e.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join("+")
}
