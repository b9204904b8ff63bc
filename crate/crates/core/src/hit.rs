//! The hit subspace `(A⁺P_k)_d` and the quotient `Q_k(d) = (F2 ⊗_A P_k)_d`.
//!
//! Coordinates: the degree-`d` monomials sorted in ascending lexicographic
//! order. The hit space is spanned by `Sq^{2^t}(m)` over all monomials `m` of
//! degree `d - 2^t`, since the `Sq^{2^t}` generate the Steenrod algebra.
//!
//! Representatives are chosen greedily while scanning monomials from the
//! lexicographically largest down: a monomial is adopted iff its class is
//! independent of the classes adopted before it. With pivots at the lowest
//! column of each reduced hit vector, these are exactly the non-pivot columns.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::{BitVector, EchelonBuilder, Subspace};
use crate::poly::{Monomial, Polynomial, MAX_VARS};
use crate::steenrod::{sq_monomial, sq_unchecked};

/// All degree-`d` monomials in `k` variables with their coordinate positions.
#[derive(Clone, Debug)]
pub struct DegreeContext {
    k: usize,
    d: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
}

/// Number of degree-`d` monomials in `k` variables, `C(d+k-1, k-1)`.
pub fn monomial_count(k: usize, d: u32) -> u64 {
    let n = d as u64 + k as u64 - 1;
    let r = k as u64 - 1;
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Degree-`d` monomials in `k` variables, ascending lexicographically.
pub fn monomials_of_degree(k: usize, d: u32) -> Vec<Monomial> {
    fn go(var: usize, k: usize, left: u32, cur: &mut [u32; MAX_VARS], out: &mut Vec<Monomial>) {
        if var + 1 == k {
            cur[var] = left;
            out.push(Monomial::new(&cur[..k]).expect("k in range"));
            return;
        }
        for e in 0..=left {
            cur[var] = e;
            go(var + 1, k, left - e, cur, out);
        }
    }
    assert!((1..=MAX_VARS).contains(&k), "variable count {k} out of range");
    let mut out = Vec::with_capacity(monomial_count(k, d) as usize);
    go(0, k, d, &mut [0; MAX_VARS], &mut out);
    out
}

impl DegreeContext {
    pub fn new(k: usize, d: u32) -> Result<Self> {
        if !(1..=MAX_VARS).contains(&k) {
            return Err(Error::InvalidInput(format!("need 1..={MAX_VARS} variables, got {k}")));
        }
        let monomials = monomials_of_degree(k, d);
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i as u32)).collect();
        Ok(Self { k, d, monomials, index })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, i: usize) -> Monomial {
        self.monomials[i]
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).map(|&i| i as usize)
    }

    fn check_monomial(&self, m: &Monomial) -> Result<usize> {
        if m.k() != self.k {
            return Err(Error::VariableMismatch { expected: self.k, found: m.k() });
        }
        self.index_of(m).ok_or(Error::DegreeMismatch { expected: self.d, found: m.degree() })
    }

    /// Coordinate vector of a polynomial whose terms all have degree `d`.
    pub fn vector_of(&self, p: &Polynomial) -> Result<BitVector> {
        if p.k() != self.k {
            return Err(Error::VariableMismatch { expected: self.k, found: p.k() });
        }
        let mut v = BitVector::zeros(self.len());
        for m in p.terms() {
            v.set(self.check_monomial(m)?, true);
        }
        Ok(v)
    }

    pub fn polynomial_of(&self, v: &BitVector) -> Polynomial {
        assert_eq!(v.len(), self.len());
        Polynomial::from_terms(self.k, v.ones().map(|i| self.monomials[i]))
    }
}

/// One generator `Sq^i(m)` of the hit space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HitGenerator {
    pub square: u32,
    pub source: Monomial,
}

/// Nonzero generators `Sq^{2^t}(m)` with their term positions, shortest first.
fn hit_generators(ctx: &DegreeContext, threads: usize) -> Vec<(HitGenerator, Vec<u32>)> {
    let d = ctx.d;
    let mut jobs = Vec::new();
    let mut i = 1u32;
    // Sq^i vanishes on degree d - i when 2i > d
    while 2 * i <= d {
        jobs.extend(monomials_of_degree(ctx.k, d - i).into_iter().map(|m| HitGenerator { square: i, source: m }));
        i *= 2;
    }
    let image = |g: &HitGenerator| -> Vec<u32> {
        let mut idx: Vec<u32> = sq_monomial(g.square, &g.source)
            .iter()
            .map(|t| ctx.index[t])
            .collect();
        idx.sort_unstable();
        idx
    };
    let images: Vec<Vec<u32>> = if threads > 1 && jobs.len() > 4096 {
        let chunk = jobs.len().div_ceil(threads);
        std::thread::scope(|s| {
            let handles: Vec<_> =
                jobs.chunks(chunk).map(|c| s.spawn(move || c.iter().map(image).collect::<Vec<_>>())).collect();
            handles.into_iter().flat_map(|h| h.join().expect("generator worker panicked")).collect()
        })
    } else {
        jobs.iter().map(image).collect()
    };
    let mut gens: Vec<(HitGenerator, Vec<u32>)> =
        jobs.into_iter().zip(images).filter(|(_, v)| !v.is_empty()).collect();
    // short rows first keeps fill-in down; the final basis does not depend on order
    gens.sort_by_key(|(_, v)| v.len());
    gens
}

/// The hit subspace `(A⁺P_k)_d` in [`DegreeContext`] coordinates.
pub fn hit_space(k: usize, d: u32) -> Result<Subspace> {
    let ctx = DegreeContext::new(k, d)?;
    let mut e = EchelonBuilder::new(ctx.len());
    for (_, idx) in hit_generators(&ctx, 1) {
        e.insert(BitVector::from_indices(ctx.len(), idx.iter().map(|&i| i as usize)));
    }
    Ok(e.into_subspace())
}

/// Expression of a hit polynomial as `Σ Sq^i(p_i)` plus basis representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HitWitness {
    /// `(i, p_i)` meaning `Sq^i(p_i)`, one entry per square used, ascending `i`.
    pub summands: Vec<(u32, Polynomial)>,
    /// Sum of representative monomials carrying the class.
    pub remainder: Polynomial,
}

impl HitWitness {
    /// `remainder + Σ Sq^i(p_i)`.
    pub fn reconstruct(&self) -> Polynomial {
        let mut out = self.remainder.clone();
        for (i, p) in &self.summands {
            out.add_assign(&sq_unchecked(*i, p));
        }
        out
    }
}

/// Elimination over generators that remembers which generators were combined.
#[derive(Debug)]
struct WitnessEngine {
    adopted: Vec<HitGenerator>,
    rows: Vec<BitVector>,
    provenance: Vec<BitVector>,
    row_of_pivot: HashMap<usize, usize>,
}

impl WitnessEngine {
    fn build(ctx: &DegreeContext, rank: usize) -> Self {
        let mut eng = WitnessEngine {
            adopted: Vec::with_capacity(rank),
            rows: Vec::with_capacity(rank),
            provenance: Vec::with_capacity(rank),
            row_of_pivot: HashMap::new(),
        };
        for (g, idx) in hit_generators(ctx, 1) {
            if eng.adopted.len() == rank {
                break;
            }
            let v = BitVector::from_indices(ctx.len(), idx.iter().map(|&i| i as usize));
            let (v, mut prov) = eng.eliminate(v, rank);
            if let Some(p) = v.first_one() {
                prov.set(eng.adopted.len(), true);
                eng.row_of_pivot.insert(p, eng.rows.len());
                eng.adopted.push(g);
                eng.rows.push(v);
                eng.provenance.push(prov);
            }
        }
        eng
    }

    fn eliminate(&self, mut v: BitVector, rank: usize) -> (BitVector, BitVector) {
        let mut prov = BitVector::zeros(rank);
        let mut from = 0;
        while let Some(c) = v.next_one(from) {
            if let Some(&r) = self.row_of_pivot.get(&c) {
                v.xor_assign(&self.rows[r]);
                prov.xor_assign(&self.provenance[r]);
            }
            from = c + 1;
        }
        (v, prov)
    }

    fn solve(&self, h: &BitVector) -> Option<Vec<HitGenerator>> {
        let (rest, prov) = self.eliminate(h.clone(), self.adopted.len());
        rest.is_zero().then(|| prov.ones().map(|i| self.adopted[i]).collect())
    }
}

/// Reduced class of a polynomial and the witness that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// Coordinates over [`QuotientBasis::reps`].
    pub coords: BitVector,
    pub witness: HitWitness,
}

/// `Q_k(d)` with its hit subspace, representatives and reduction data.
#[derive(Debug)]
pub struct QuotientBasis {
    ctx: DegreeContext,
    /// Reduced hit subspace, rebuilt from `classes` on first use.
    hit: OnceLock<Subspace>,
    rep_columns: Vec<usize>,
    /// Class of every monomial over the representatives.
    classes: Vec<BitVector>,
    witness: OnceLock<WitnessEngine>,
}

impl QuotientBasis {
    /// Computes `Q_k(d)` from scratch.
    pub fn compute(k: usize, d: u32) -> Result<Self> {
        Self::compute_with_threads(k, d, 1)
    }

    /// As [`QuotientBasis::compute`], producing generator images on `threads` workers.
    pub fn compute_with_threads(k: usize, d: u32, threads: usize) -> Result<Self> {
        let ctx = DegreeContext::new(k, d)?;
        let n = ctx.len();
        let mut e = EchelonBuilder::new(n);
        for (_, idx) in hit_generators(&ctx, threads.max(1)) {
            e.insert(BitVector::from_indices(n, idx.iter().map(|&i| i as usize)));
        }
        let rep_columns: Vec<usize> = (0..n).filter(|&c| !e.is_pivot(c)).collect();
        let q = rep_columns.len();
        let mut slot = vec![usize::MAX; n];
        for (j, &c) in rep_columns.iter().enumerate() {
            slot[c] = j;
        }
        // A semi-reduced row with pivot c says e_c ≡ Σ_{b>c} e_b, so classes
        // fill in from the highest column down.
        let mut classes = vec![BitVector::zeros(q); n];
        for c in (0..n).rev() {
            match e.pivot_row(c) {
                None => classes[c].set(slot[c], true),
                Some(row) => {
                    let mut acc = BitVector::zeros(q);
                    for b in row.ones().skip(1) {
                        acc.xor_assign(&classes[b]);
                    }
                    classes[c] = acc;
                }
            }
        }
        Ok(Self { ctx, hit: OnceLock::new(), rep_columns, classes, witness: OnceLock::new() })
    }

    /// Rebuilds the quotient from a stored reduced hit subspace.
    pub fn from_hit_subspace(k: usize, d: u32, hit: Subspace) -> Result<Self> {
        let ctx = DegreeContext::new(k, d)?;
        let n = ctx.len();
        if hit.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: hit.ambient_dim() });
        }
        let rep_columns = hit.free_columns();
        let q = rep_columns.len();
        let mut classes = vec![BitVector::zeros(q); n];
        for (j, &c) in rep_columns.iter().enumerate() {
            classes[c].set(j, true);
        }
        for (row, &p) in hit.basis().rows().iter().zip(hit.pivots()) {
            let mut acc = BitVector::zeros(q);
            for (j, &c) in rep_columns.iter().enumerate() {
                if row.get(c) {
                    acc.set(j, true);
                }
            }
            classes[p] = acc;
        }
        Ok(Self { ctx, hit: OnceLock::from(hit), rep_columns, classes, witness: OnceLock::new() })
    }

    /// Rebuilds the quotient from its representatives and the class of every
    /// monomial. Checked for consistency.
    pub fn from_classes(k: usize, d: u32, rep_columns: Vec<usize>, classes: Vec<BitVector>) -> Result<Self> {
        let ctx = DegreeContext::new(k, d)?;
        let n = ctx.len();
        if classes.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: classes.len() });
        }
        if rep_columns.windows(2).any(|w| w[0] >= w[1]) || rep_columns.last().is_some_and(|&c| c >= n) {
            return Err(Error::InvalidInput("representative columns must be increasing and in range".into()));
        }
        let q = rep_columns.len();
        if let Some(c) = classes.iter().find(|c| c.len() != q) {
            return Err(Error::DimensionMismatch { expected: q, found: c.len() });
        }
        for (j, &c) in rep_columns.iter().enumerate() {
            if classes[c] != BitVector::unit(q, j) {
                return Err(Error::InvalidInput(format!("representative {j} is not its own class")));
            }
        }
        Ok(Self { ctx, hit: OnceLock::new(), rep_columns, classes, witness: OnceLock::new() })
    }

    pub fn ctx(&self) -> &DegreeContext {
        &self.ctx
    }

    pub fn k(&self) -> usize {
        self.ctx.k
    }

    pub fn degree(&self) -> u32 {
        self.ctx.d
    }

    /// `dim Q_k(d)`.
    pub fn dim(&self) -> usize {
        self.rep_columns.len()
    }

    pub fn hit(&self) -> &Subspace {
        self.hit.get_or_init(|| hit_from_classes(self.ctx.len(), &self.rep_columns, &self.classes))
    }

    /// Class of every monomial of [`DegreeContext`], in its order.
    pub fn classes(&self) -> &[BitVector] {
        &self.classes
    }

    /// Representative monomials, in ascending lexicographic order.
    pub fn reps(&self) -> Vec<Monomial> {
        self.rep_columns.iter().map(|&c| self.ctx.monomials[c]).collect()
    }

    pub fn rep(&self, j: usize) -> Monomial {
        self.ctx.monomials[self.rep_columns[j]]
    }

    pub fn rep_columns(&self) -> &[usize] {
        &self.rep_columns
    }

    /// Class of a degree-`d` monomial.
    pub fn class_of_monomial(&self, m: &Monomial) -> Result<&BitVector> {
        Ok(&self.classes[self.ctx.check_monomial(m)?])
    }

    /// Class of a homogeneous degree-`d` polynomial (zero maps to zero).
    pub fn class_of(&self, p: &Polynomial) -> Result<BitVector> {
        if p.k() != self.k() {
            return Err(Error::VariableMismatch { expected: self.k(), found: p.k() });
        }
        let mut acc = BitVector::zeros(self.dim());
        for m in p.terms() {
            acc.xor_assign(self.class_of_monomial(m)?);
        }
        Ok(acc)
    }

    /// Class of a coordinate vector over [`DegreeContext`] monomials.
    pub fn class_of_vector(&self, v: &BitVector) -> BitVector {
        let mut acc = BitVector::zeros(self.dim());
        for i in v.ones() {
            acc.xor_assign(&self.classes[i]);
        }
        acc
    }

    /// Sum of the representatives selected by `coords`.
    pub fn polynomial_of_class(&self, coords: &BitVector) -> Polynomial {
        Polynomial::from_terms(self.k(), coords.ones().map(|j| self.rep(j)))
    }

    /// Class in coordinates plus a witness `p = remainder + Σ Sq^i(p_i)`.
    pub fn reduce(&self, p: &Polynomial) -> Result<Reduction> {
        if let Some(d) = p.homogeneous_degree()? {
            if d != self.degree() {
                return Err(Error::DegreeMismatch { expected: self.degree(), found: d });
            }
        }
        let coords = self.class_of(p)?;
        let remainder = self.polynomial_of_class(&coords);
        let hit_part = p.add(&remainder);
        let summands = if hit_part.is_zero() {
            Vec::new()
        } else {
            let eng = self.witness.get_or_init(|| WitnessEngine::build(&self.ctx, self.ctx.len() - self.dim()));
            let gens = eng
                .solve(&self.ctx.vector_of(&hit_part)?)
                .ok_or_else(|| Error::InvalidInput("hit part outside the generator span".into()))?;
            let mut grouped: BTreeMap<u32, Polynomial> = BTreeMap::new();
            for g in gens {
                grouped.entry(g.square).or_insert_with(|| Polynomial::zero(self.k())).toggle(g.source);
            }
            grouped.into_iter().filter(|(_, p)| !p.is_zero()).collect()
        };
        Ok(Reduction { coords, witness: HitWitness { summands, remainder } })
    }

    pub fn is_hit(&self, p: &Polynomial) -> Result<bool> {
        if let Some(d) = p.homogeneous_degree()? {
            if d != self.degree() {
                return Err(Error::DegreeMismatch { expected: self.degree(), found: d });
            }
        }
        Ok(self.class_of(p)?.is_zero())
    }

    /// True iff the candidates' classes form a basis of `Q_k(d)`.
    pub fn verify_basis(&self, candidates: &[Monomial]) -> Result<bool> {
        for m in candidates {
            if m.k() != self.k() {
                return Err(Error::VariableMismatch { expected: self.k(), found: m.k() });
            }
            if m.degree() != self.degree() {
                return Err(Error::DegreeMismatch { expected: self.degree(), found: m.degree() });
            }
        }
        if candidates.len() != self.dim() {
            return Ok(false);
        }
        let mut e = EchelonBuilder::new(self.dim());
        for m in candidates {
            if e.insert(self.class_of_monomial(m)?.clone()).is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn hit_from_classes(n: usize, rep_columns: &[usize], classes: &[BitVector]) -> Subspace {
    let mut is_rep = vec![false; n];
    for &c in rep_columns {
        is_rep[c] = true;
    }
    let mut pivots = Vec::new();
    let mut rows = Vec::new();
    for c in (0..n).filter(|&c| !is_rep[c]) {
        let mut row = BitVector::unit(n, c);
        for j in classes[c].ones() {
            row.set(rep_columns[j], true);
        }
        rows.push(row);
        pivots.push(c);
    }
    Subspace::from_parts_unchecked(n, rows, pivots)
}

/// `Q_k(d)` computed from scratch.
pub fn quotient_basis(k: usize, d: u32) -> Result<QuotientBasis> {
    QuotientBasis::compute(k, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(monomial_count(4, 8), 165);
        assert_eq!(monomial_count(4, 20), 1771);
        assert_eq!(monomial_count(4, 44), 16215);
        assert_eq!(monomial_count(1, 9), 1);
        for (k, d) in [(1, 5), (2, 7), (3, 6), (4, 5)] {
            assert_eq!(monomials_of_degree(k, d).len() as u64, monomial_count(k, d));
        }
        let ms = monomials_of_degree(3, 4);
        assert!(ms.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn hit_space_examples() {
        assert_eq!(hit_space(1, 3).unwrap().dim(), 0);
        assert_eq!(hit_space(4, 8).unwrap().dim(), 110);
        let ctx = DegreeContext::new(2, 2).unwrap();
        let h = hit_space(2, 2).unwrap();
        let v = |e: &[u32]| ctx.vector_of(&Polynomial::from(m(e))).unwrap();
        assert!(h.contains(&v(&[2, 0])));
        assert!(h.contains(&v(&[0, 2])));
        assert!(!h.contains(&v(&[1, 1])));
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_basis(4, 8).unwrap().dim(), 55);
        assert_eq!(quotient_basis(1, 7).unwrap().reps(), vec![m(&[7])]);
        let q = quotient_basis(2, 8).unwrap();
        let reps = q.reps();
        assert!(reps.contains(&m(&[7, 1])));
        assert!(reps.contains(&m(&[1, 7])));
        assert!(!q.is_hit(&Polynomial::from(m(&[5, 3]))).unwrap());
        assert!(!q.is_hit(&Polynomial::from(m(&[3, 5]))).unwrap());
    }

    #[test]
    fn degree_zero() {
        let q = quotient_basis(3, 0).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.reps(), vec![m(&[0, 0, 0])]);
    }

    #[test]
    fn reduce_examples() {
        let q = quotient_basis(4, 8).unwrap();
        let r = q.reduce(&Polynomial::from(m(&[7, 1, 0, 0]))).unwrap();
        assert_eq!(r.coords.count_ones(), 1);
        assert!(r.witness.summands.is_empty());

        let p = Polynomial::from(m(&[4, 3, 1, 0]));
        let r = q.reduce(&p).unwrap();
        assert_eq!(r.witness.reconstruct(), p);
        assert_eq!(r.coords, q.class_of(&Polynomial::from(m(&[2, 5, 1, 0]))).unwrap());

        let r = q.reduce(&Polynomial::from(m(&[2, 2, 2, 2]))).unwrap();
        assert!(r.coords.is_zero());
        assert_eq!(r.witness.reconstruct(), Polynomial::from(m(&[2, 2, 2, 2])));

        let z = q.reduce(&Polynomial::zero(4)).unwrap();
        assert!(z.coords.is_zero() && z.witness.summands.is_empty());
    }

    #[test]
    fn reduce_rejects_mismatches() {
        let q = quotient_basis(2, 4).unwrap();
        assert!(matches!(q.reduce(&Polynomial::from(m(&[1, 2]))), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(q.reduce(&Polynomial::from(m(&[1, 2, 1]))), Err(Error::VariableMismatch { .. })));
        assert!(q.verify_basis(&[m(&[1, 2])]).is_err());
    }

    #[test]
    fn is_hit_examples() {
        let q2 = quotient_basis(2, 8).unwrap();
        assert!(!q2.is_hit(&Polynomial::from(m(&[5, 3]))).unwrap());
        let q3 = quotient_basis(3, 8).unwrap();
        assert!(!q3.is_hit(&Polynomial::parse(3, "(6,1,1)+(1,6,1)+(1,1,6)").unwrap()).unwrap());
        let src = Polynomial::parse(3, "(3,2,1)+(1,1,4)").unwrap();
        assert!(q3.is_hit(&sq_unchecked(2, &src)).unwrap());
    }

    #[test]
    fn verify_basis_small() {
        let q = quotient_basis(2, 8).unwrap();
        let reps = q.reps();
        assert!(q.verify_basis(&reps).unwrap());
        let mut dup = reps.clone();
        dup[0] = dup[1];
        assert!(!q.verify_basis(&dup).unwrap());
        assert!(!q.verify_basis(&reps[1..]).unwrap());
    }

    #[test]
    fn stored_hit_round_trip() {
        let q = quotient_basis(3, 9).unwrap();
        let r = QuotientBasis::from_hit_subspace(3, 9, q.hit().clone()).unwrap();
        assert_eq!(r.reps(), q.reps());
        for mono in q.ctx().monomials() {
            assert_eq!(r.class_of_monomial(mono).unwrap(), q.class_of_monomial(mono).unwrap());
        }
    }
}
