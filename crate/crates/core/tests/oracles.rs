mod common;

use common::*;
use hitwork::hit::{hit_space, monomials_of_degree, DegreeContext};
use hitwork::poly::{Monomial, Polynomial};
use hitwork::steenrod::{apply_chi, apply_op, chi, sq, sq_monomial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lib(k: usize, p: &Poly) -> Polynomial {
    Polynomial::parse(k, &to_text(p)).unwrap()
}

fn back(p: &Polynomial) -> Poly {
    p.terms().map(|m| m.exps().to_vec()).collect()
}

#[test]
fn squares_match_total_square_expansion() {
    let t = pascal(64);
    for k in 1..=3 {
        for d in 0..=8 {
            for e in monomials(k, d) {
                let m = Monomial::new(&e).unwrap();
                for i in 0..=10 {
                    let mut got = Poly::new();
                    for r in sq_monomial(i, &m) {
                        let ex = r.exps().to_vec();
                        if !got.remove(&ex) {
                            got.insert(ex);
                        }
                    }
                    assert_eq!(got, sq_total(&t, i, &e), "Sq^{i} on {e:?}");
                }
            }
        }
    }
}

#[test]
fn monomial_enumeration_matches() {
    for k in 1..=4 {
        for d in 0..=9 {
            let mut ours: Vec<Exps> = monomials_of_degree(k, d).iter().map(|m| m.exps().to_vec()).collect();
            let mut theirs = monomials(k, d);
            ours.sort();
            theirs.sort();
            assert_eq!(ours, theirs);
        }
    }
}

#[test]
fn hit_space_matches_all_squares() {
    let t = pascal(64);
    for k in 1..=3 {
        for d in 0..=9 {
            let (target, basis) = all_squares_hit_rows(&t, k, d);
            let ours = hit_space(k, d).unwrap();
            assert_eq!(ours.dim(), basis.len(), "k={k} d={d}");
            let ctx = DegreeContext::new(k, d).unwrap();
            for r in ours.basis().rows() {
                let mut dense = vec![false; target.len()];
                for i in r.ones() {
                    let e = ctx.monomial(i).exps().to_vec();
                    dense[target.iter().position(|x| *x == e).unwrap()] = true;
                }
                assert!(in_span(&basis, &dense), "k={k} d={d}");
            }
        }
    }
}

#[test]
fn chi_is_an_antipode() {
    // sum over i of Sq^i chi(Sq^{n-i}) vanishes for n > 0
    let t = pascal(128);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 1..=12u32 {
        for _ in 0..4 {
            let p = random_poly(&mut rng, 3, 3, 4);
            let mut acc = Poly::new();
            for i in 0..=n {
                let inner = back(&apply_op(&chi(n - i), &lib(3, &p)).unwrap());
                for m in sq_total_poly(&t, i, &inner) {
                    if !acc.remove(&m) {
                        acc.insert(m);
                    }
                }
            }
            assert!(acc.is_empty(), "n={n}");
        }
    }
}

#[test]
fn chi_matches_recursive_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 0..=16u32 {
        let p = lib(4, &random_poly(&mut rng, 4, 4, 5));
        assert_eq!(apply_op(&chi(n), &p).unwrap(), apply_chi(n, &p).unwrap(), "n={n}");
    }
}

#[test]
fn sq_on_polynomials_matches() {
    let t = pascal(64);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for d in 0..=7 {
        for i in 0..=8 {
            let p = random_poly(&mut rng, 4, d, 6);
            assert_eq!(back(&sq(i, &lib(4, &p)).unwrap()), sq_total_poly(&t, i, &p));
        }
    }
}
