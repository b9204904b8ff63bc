//! Kameko's squaring on the polynomial side.
//!
//! The down map halves all-odd monomials, `x^{2i+1} ↦ x^i`, and kills every
//! monomial with an even exponent. The up map `s` sends `x^i` to `x^{2i+1}`.
//! When every degree-`(2r+k)` monomial with an even exponent is hit, the
//! down map induces a `GL_k`-isomorphism `Q_k(2r+k) → Q_k(r)` inverse to `s`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gl::{gl_generators, induced_matrix, invariants};
use crate::hit::{monomial_count, QuotientBasis};
use crate::linalg::{BitMatrix, BitVector};
use crate::poly::{Monomial, Polynomial};
use crate::steenrod::sq_unchecked;

pub fn down_monomial(m: &Monomial) -> Option<Monomial> {
    if m.exps().iter().any(|e| e % 2 == 0) {
        return None;
    }
    let e: Vec<u32> = m.exps().iter().map(|e| (e - 1) / 2).collect();
    Some(Monomial::new(&e).expect("same k"))
}

pub fn up_monomial(m: &Monomial) -> Monomial {
    let e: Vec<u32> = m.exps().iter().map(|e| 2 * e + 1).collect();
    Monomial::new(&e).expect("same k")
}

pub fn down_polynomial(p: &Polynomial) -> Polynomial {
    Polynomial::from_terms(p.k(), p.terms().filter_map(down_monomial))
}

pub fn up_polynomial(p: &Polynomial) -> Polynomial {
    Polynomial::from_terms(p.k(), p.terms().map(up_monomial))
}

pub fn has_even_exponent(m: &Monomial) -> bool {
    m.exps().iter().any(|e| e % 2 == 0)
}

/// Outcome of checking that every monomial with an even exponent is hit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenHypothesis {
    pub degree: u32,
    pub holds: bool,
    pub failures: Vec<Monomial>,
}

pub fn even_hypothesis(qb: &QuotientBasis) -> EvenHypothesis {
    let failures: Vec<Monomial> = qb
        .ctx()
        .monomials()
        .iter()
        .filter(|m| has_even_exponent(m))
        .filter(|m| !qb.class_of_monomial(m).expect("degree matches").is_zero())
        .copied()
        .collect();
    EvenHypothesis { degree: qb.degree(), holds: failures.is_empty(), failures }
}

fn check_pair(big: &QuotientBasis, small: &QuotientBasis) -> Result<()> {
    if big.k() != small.k() {
        return Err(Error::VariableMismatch { expected: small.k(), found: big.k() });
    }
    let expected = 2 * small.degree() + small.k() as u32;
    if big.degree() != expected {
        return Err(Error::DegreeMismatch { expected, found: big.degree() });
    }
    Ok(())
}

/// Matrix of the down map `Q_k(2r+k) → Q_k(r)`.
pub fn down_map_on_quotient(big: &QuotientBasis, small: &QuotientBasis) -> Result<BitMatrix> {
    check_pair(big, small)?;
    let cols = (0..big.dim())
        .map(|j| match down_monomial(&big.rep(j)) {
            Some(m) => small.class_of_monomial(&m).cloned(),
            None => Ok(BitVector::zeros(small.dim())),
        })
        .collect::<Result<Vec<_>>>()?;
    BitMatrix::from_columns(small.dim(), &cols)
}

/// Matrix of `[X] ↦ [sX]`, `Q_k(r) → Q_k(2r+k)`. Only well defined when the
/// even-exponent hypothesis holds in the larger degree.
pub fn up_map_on_quotient(small: &QuotientBasis, big: &QuotientBasis) -> Result<BitMatrix> {
    check_pair(big, small)?;
    let cols = (0..small.dim())
        .map(|j| big.class_of_monomial(&up_monomial(&small.rep(j))).cloned())
        .collect::<Result<Vec<_>>>()?;
    BitMatrix::from_columns(big.dim(), &cols)
}

/// `Sq^{2t}(s(p)) - s(Sq^t(p))` has only terms with an even exponent.
pub fn even_image_property(t: u32, sample: &Polynomial) -> Result<bool> {
    sample.homogeneous_degree()?;
    let lhs = sq_unchecked(2 * t, &up_polynomial(sample));
    let rhs = up_polynomial(&sq_unchecked(t, sample));
    Ok(lhs.add(&rhs).terms().all(has_even_exponent))
}

/// One step `Q_k(2r+k) → Q_k(r)` of a chain.
#[derive(Clone, Debug)]
pub struct KamekoStep {
    pub from_degree: u32,
    pub to_degree: u32,
    /// Number of monomials in the larger degree.
    pub ambient: u64,
    pub even: EvenHypothesis,
    pub from_dim: usize,
    pub to_dim: usize,
    pub down: BitMatrix,
    /// `down · up = id` and `up · down = id`.
    pub bijective: bool,
    /// `down` intertwines every `GL_k` generator.
    pub equivariant: bool,
}

/// A chain of down maps ending in the base degree.
#[derive(Clone, Debug)]
pub struct KamekoChain {
    pub k: usize,
    pub base_degree: u32,
    /// Highest degree first.
    pub steps: Vec<KamekoStep>,
    /// Product of the down maps, top degree to base degree.
    pub composite: BitMatrix,
    /// `dim` of the `GL_k`-invariants in each degree of the chain, top first.
    pub invariant_dims: Vec<(u32, usize)>,
}

impl KamekoChain {
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.steps.iter().map(|s| s.from_degree).collect();
        d.push(self.base_degree);
        d
    }

    /// Ok iff every step satisfied the hypothesis and gave an equivariant bijection.
    pub fn check(&self) -> Result<()> {
        for s in &self.steps {
            if !s.even.holds {
                return Err(Error::HypothesisFailed { degree: s.from_degree, count: s.even.failures.len() });
            }
            if !s.bijective || !s.equivariant {
                return Err(Error::InvalidInput(format!(
                    "down map {} -> {} is not an equivariant bijection",
                    s.from_degree, s.to_degree
                )));
            }
        }
        Ok(())
    }
}

/// Degrees of a chain of `s` steps over base degree `r`: `r, 2r+k, ...`, top first.
pub fn chain_degrees(k: usize, base: u32, s: u32) -> Vec<u32> {
    let mut d = vec![base];
    for _ in 0..s {
        let last = *d.last().expect("nonempty");
        d.push(2 * last + k as u32);
    }
    d.reverse();
    d
}

/// Builds the chain `Q_k(d_s) → ... → Q_k(base)` with `s` steps, fetching
/// quotients through `basis`.
pub fn chain_with<F>(k: usize, base: u32, s: u32, mut basis: F) -> Result<KamekoChain>
where
    F: FnMut(usize, u32) -> Result<Arc<QuotientBasis>>,
{
    let degrees = chain_degrees(k, base, s);
    let quotients = degrees.iter().map(|&d| basis(k, d)).collect::<Result<Vec<_>>>()?;
    let gens = gl_generators(k);
    let actions = quotients
        .iter()
        .map(|q| gens.iter().map(|g| induced_matrix(g, q).map(|a| a.matrix)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;

    let mut steps = Vec::new();
    let mut composite: Option<BitMatrix> = None;
    for i in 0..degrees.len() - 1 {
        let (big, small) = (&quotients[i], &quotients[i + 1]);
        let even = even_hypothesis(big);
        let down = down_map_on_quotient(big, small)?;
        let up = up_map_on_quotient(small, big)?;
        let bijective = big.dim() == small.dim()
            && down.mul(&up).is_identity()
            && up.mul(&down).is_identity();
        let equivariant = actions[i]
            .iter()
            .zip(&actions[i + 1])
            .all(|(gb, gs)| down.mul(gb) == gs.mul(&down));
        composite = Some(match composite {
            None => down.clone(),
            Some(c) => down.mul(&c),
        });
        steps.push(KamekoStep {
            from_degree: big.degree(),
            to_degree: small.degree(),
            ambient: monomial_count(k, big.degree()),
            even,
            from_dim: big.dim(),
            to_dim: small.dim(),
            down,
            bijective,
            equivariant,
        });
    }
    let invariant_dims = quotients
        .iter()
        .map(|q| invariants(q, &gens).map(|s| (q.degree(), s.dim())))
        .collect::<Result<Vec<_>>>()?;
    let composite = composite.unwrap_or_else(|| BitMatrix::identity(quotients[0].dim()));
    Ok(KamekoChain { k, base_degree: base, steps, composite, invariant_dims })
}

/// The chain `Q_4(12·2^s - 4) → ... → Q_4(8)`.
pub fn chain(s: u32) -> Result<KamekoChain> {
    if s == 0 {
        return Err(Error::InvalidInput("chain length must be positive".into()));
    }
    chain_with(4, 8, s, |k, d| QuotientBasis::compute(k, d).map(Arc::new))
}
