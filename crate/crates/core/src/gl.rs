//! `GL_k(F2)` acting on `P_k` by linear substitution and on `Q_k(d)`.
//!
//! Fixed points of a group are computed from a generating set only: a vector
//! fixed by every generator is fixed by the group they generate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hit::QuotientBasis;
use crate::linalg::{kernel, BitMatrix, BitVector, Subspace};
use crate::poly::{substitute, Monomial, Polynomial, MAX_VARS};

/// An invertible `k × k` matrix; column `j` is the image of `x_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GLElement {
    matrix: BitMatrix,
}

impl GLElement {
    pub fn new(matrix: BitMatrix) -> Result<Self> {
        let k = matrix.ncols();
        if matrix.nrows() != k || k == 0 || k > MAX_VARS {
            return Err(Error::InvalidInput(format!("expected a square matrix of size 1..={MAX_VARS}")));
        }
        if matrix.rank() != k {
            return Err(Error::NotInvertible);
        }
        Ok(Self { matrix })
    }

    pub fn identity(k: usize) -> Self {
        Self { matrix: BitMatrix::identity(k) }
    }

    /// Builds an element from the images of the variables: `images[j]` lists
    /// the variables whose sum is the image of `x_j`.
    pub fn from_images(k: usize, images: &[&[usize]]) -> Result<Self> {
        if images.len() != k {
            return Err(Error::VariableMismatch { expected: k, found: images.len() });
        }
        let mut m = BitMatrix::zeros(k, k);
        for (j, img) in images.iter().enumerate() {
            for &i in *img {
                if i >= k {
                    return Err(Error::InvalidInput(format!("variable {i} out of range")));
                }
                m.set(i, j, !m.get(i, j));
            }
        }
        Self::new(m)
    }

    /// `x_target ↦ x_target + x_source`, all other variables fixed.
    pub fn transvection(k: usize, source: usize, target: usize) -> Self {
        assert!(source != target && source < k && target < k);
        let mut m = BitMatrix::identity(k);
        m.set(source, target, true);
        Self { matrix: m }
    }

    /// Swaps `x_a` and `x_b`.
    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        assert!(a != b && a < k && b < k);
        let mut m = BitMatrix::identity(k);
        m.set(a, a, false);
        m.set(b, b, false);
        m.set(a, b, true);
        m.set(b, a, true);
        Self { matrix: m }
    }

    pub fn k(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GLElement) -> GLElement {
        GLElement { matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn act(&self, p: &Polynomial) -> Result<Polynomial> {
        substitute(&self.matrix, p)
    }
}

impl fmt::Display for GLElement {
    /// One group of `k` bits per variable, listing the image of `x_j`;
    /// `φ: t ↦ x + t` prints as `1000 0100 0010 1001`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.k() {
            if j > 0 {
                f.write_str(" ")?;
            }
            for i in 0..self.k() {
                f.write_str(if self.matrix.get(i, j) { "1" } else { "0" })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GLElement({self})")
    }
}

impl FromStr for GLElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let groups: Vec<&str> = s.split_whitespace().collect();
        let k = groups.len();
        let mut m = BitMatrix::zeros(k, k);
        for (j, g) in groups.iter().enumerate() {
            if g.len() != k {
                return Err(Error::parse(1, format!("expected {k} bits, found {g:?}")));
            }
            for (i, c) in g.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => return Err(Error::parse(1, format!("bad bit {c:?}"))),
                }
            }
        }
        GLElement::new(m)
    }
}

/// All elementary transvections followed by the adjacent transpositions.
pub fn gl_generators(k: usize) -> Vec<GLElement> {
    let mut out = Vec::new();
    for target in 0..k {
        for source in 0..k {
            if source != target {
                out.push(GLElement::transvection(k, source, target));
            }
        }
    }
    out.extend(symmetric_generators(k));
    out
}

/// Adjacent transpositions, generating `S_k`.
pub fn symmetric_generators(k: usize) -> Vec<GLElement> {
    (0..k.saturating_sub(1)).map(|i| GLElement::transposition(k, i, i + 1)).collect()
}

/// The transposition `p` swapping `x` and `y` in `P_4`.
pub fn swap_xy() -> GLElement {
    GLElement::transposition(4, 0, 1)
}

/// The transvection `φ: t ↦ x + t` in `P_4`.
pub fn phi() -> GLElement {
    GLElement::transvection(4, 0, 3)
}

/// A group element together with its matrix on `Q_k(d)`.
#[derive(Clone, Debug)]
pub struct InducedAction {
    pub element: GLElement,
    /// Column `j` is the class of `g(rep_j)`.
    pub matrix: BitMatrix,
}

/// Matrix of `g` on `Q_k(d)`, well defined because substitution maps hit
/// polynomials to hit polynomials.
pub fn induced_matrix(g: &GLElement, qb: &QuotientBasis) -> Result<InducedAction> {
    if g.k() != qb.k() {
        return Err(Error::VariableMismatch { expected: qb.k(), found: g.k() });
    }
    let cols = (0..qb.dim())
        .map(|j| qb.class_of(&g.act(&Polynomial::from(qb.rep(j)))?))
        .collect::<Result<Vec<BitVector>>>()?;
    let matrix = BitMatrix::from_columns(qb.dim(), &cols)?;
    Ok(InducedAction { element: g.clone(), matrix })
}

/// Common fixed space of the given matrices.
pub fn fixed_space(dim: usize, matrices: &[BitMatrix]) -> Result<Subspace> {
    let id = BitMatrix::identity(dim);
    let mut acc = Subspace::full(dim);
    for m in matrices {
        if m.nrows() != dim || m.ncols() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: m.nrows() });
        }
        acc = acc.intersect(&kernel(&m.add(&id)))?;
    }
    Ok(acc)
}

/// `Q_k(d)^G` for the group `G` generated by `gens`.
pub fn invariants(qb: &QuotientBasis, gens: &[GLElement]) -> Result<Subspace> {
    let mats = gens
        .iter()
        .map(|g| induced_matrix(g, qb).map(|a| a.matrix))
        .collect::<Result<Vec<_>>>()?;
    fixed_space(qb.dim(), &mats)
}

/// The distinct variable permutations of `m`, in decreasing lexicographic
/// order (the order used for the named families).
pub fn family_orbit(m: &Monomial) -> Vec<Monomial> {
    let mut exps = m.exps().to_vec();
    exps.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    // walk permutations of the multiset in decreasing order
    loop {
        out.push(Monomial::new(&exps).expect("same k"));
        // previous permutation in lexicographic order
        let n = exps.len();
        let Some(i) = (1..n).rev().find(|&i| exps[i - 1] > exps[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| exps[j] < exps[i - 1]).expect("pivot exists");
        exps.swap(i - 1, j);
        exps[i..].reverse();
    }
    out
}

/// Map `P_k → P_{keep.len()}` sending kept variables to their new positions
/// and the rest to zero.
pub fn projection(k: usize, keep: &[usize]) -> BitMatrix {
    let mut m = BitMatrix::zeros(keep.len(), k);
    for (new, &old) in keep.iter().enumerate() {
        m.set(new, old, true);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hit::quotient_basis;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn generator_counts() {
        assert!(gl_generators(1).is_empty());
        let g2 = gl_generators(2);
        assert_eq!(g2.len(), 3);
        assert_eq!(g2.iter().filter(|g| g.matrix().get(0, 0) && g.matrix().get(1, 1)).count(), 2);
        let g4 = gl_generators(4);
        assert_eq!(g4.len(), 12 + 3);
        assert!(g4.contains(&phi()));
        assert_eq!(phi().to_string(), "1000 0100 0010 1001");
    }

    #[test]
    fn text_form_round_trip() {
        let g: GLElement = "1000 0100 0010 1001".parse().unwrap();
        assert_eq!(g, phi());
        assert!("11 11".parse::<GLElement>().is_err());
        assert!("10 2".parse::<GLElement>().is_err());
    }

    #[test]
    fn phi_substitution() {
        let t = Polynomial::from(m(&[0, 0, 0, 1]));
        assert_eq!(phi().act(&t).unwrap(), Polynomial::parse(4, "(1,0,0,0)+(0,0,0,1)").unwrap());
    }

    #[test]
    fn identity_acts_trivially() {
        let q = quotient_basis(4, 8).unwrap();
        assert!(induced_matrix(&GLElement::identity(4), &q).unwrap().matrix.is_identity());
    }

    #[test]
    fn swap_on_2105() {
        let q = quotient_basis(4, 8).unwrap();
        let a = induced_matrix(&swap_xy(), &q).unwrap();
        let src = q.class_of(&Polynomial::from(m(&[2, 1, 0, 5]))).unwrap();
        let expected = q.class_of(&Polynomial::parse(4, "(2,1,0,5)+(1,1,0,6)").unwrap()).unwrap();
        assert_eq!(a.matrix.mul_vec(&src), expected);
    }

    #[test]
    fn trivial_group_and_k1() {
        let q = quotient_basis(1, 1).unwrap();
        assert_eq!(invariants(&q, &[]).unwrap().dim(), 1);
        assert_eq!(invariants(&q, &gl_generators(1)).unwrap().dim(), 1);
    }

    #[test]
    fn orbits() {
        assert_eq!(family_orbit(&m(&[7, 1, 0, 0])).len(), 12);
        assert_eq!(family_orbit(&m(&[3, 3, 1, 1])).len(), 6);
        assert_eq!(family_orbit(&m(&[5, 1, 1, 1])).len(), 4);
        let o = family_orbit(&m(&[0, 1, 0, 7]));
        assert_eq!(o[0], m(&[7, 1, 0, 0]));
        assert!(o.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn not_invertible_rejected() {
        assert!(matches!(
            GLElement::new(BitMatrix::from_bit_rows(&[&[1, 1], &[1, 1]])),
            Err(Error::NotInvertible)
        ));
    }

    #[test]
    fn k_mismatch_rejected() {
        let q = quotient_basis(3, 4).unwrap();
        assert!(induced_matrix(&phi(), &q).is_err());
    }
}
