//! Monomials and polynomials in `P_k = F2[x_1, ..., x_k]`.
//!
//! A monomial is written as its exponent tuple, `(a,b,c,d)` for
//! `x^a y^b z^c t^d`. Polynomials are sets of monomials: adding a term that is
//! already present removes it.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::BitMatrix;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    k: u8,
    exps: [u32; MAX_VARS],
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Result<Self> {
        if exps.is_empty() || exps.len() > MAX_VARS {
            return Err(Error::InvalidInput(format!(
                "monomials need between 1 and {MAX_VARS} variables, got {}",
                exps.len()
            )));
        }
        let mut a = [0; MAX_VARS];
        a[..exps.len()].copy_from_slice(exps);
        Ok(Self { k: exps.len() as u8, exps: a })
    }

    /// The constant monomial 1 in `k` variables.
    pub fn one(k: usize) -> Self {
        Self::new(&vec![0; k]).expect("variable count in range")
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k as usize
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps[..self.k as usize]
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps()[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps().iter().sum()
    }

    pub fn with_exp(mut self, i: usize, e: u32) -> Self {
        assert!(i < self.k());
        self.exps[i] = e;
        self
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.k, other.k, "product of monomials with different variable counts");
        let mut out = *self;
        for i in 0..self.k() {
            out.exps[i] += other.exps[i];
        }
        out
    }

    /// Exponents rearranged so that variable `i` receives `self.exp(perm[i])`.
    pub fn permuted(&self, perm: &[usize]) -> Monomial {
        assert_eq!(perm.len(), self.k());
        let e: Vec<u32> = perm.iter().map(|&p| self.exp(p)).collect();
        Monomial::new(&e).expect("same variable count")
    }

    /// Every exponent of the form `2^n - 1`.
    pub fn is_spike(&self) -> bool {
        self.exps().iter().all(|&e| e & e.wrapping_add(1) == 0)
    }
}

/// True iff every exponent of `m` is `2^n - 1` for some `n >= 0`.
pub fn is_spike(m: &Monomial) -> bool {
    m.is_spike()
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.exps().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(1, format!("expected '(a1,...,ak)', found {s:?}")))?;
        let exps = inner
            .split(',')
            .map(|x| x.parse::<u32>().map_err(|_| Error::parse(1, format!("bad exponent {x:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Monomial::new(&exps)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    k: usize,
    terms: BTreeSet<Monomial>,
}

impl Polynomial {
    pub fn zero(k: usize) -> Self {
        Self { k, terms: BTreeSet::new() }
    }

    pub fn one(k: usize) -> Self {
        Self::from(Monomial::one(k))
    }

    /// Sum of the given monomials, with F2 cancellation of repeats.
    pub fn from_terms(k: usize, terms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut p = Self::zero(k);
        for m in terms {
            p.toggle(m);
        }
        p
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    /// Terms in ascending lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Adds one monomial (removing it if already present).
    pub fn toggle(&mut self, m: Monomial) {
        assert_eq!(m.k(), self.k, "monomial {m} does not live in P_{}", self.k);
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for m in other.terms() {
            self.toggle(*m);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.k, other.k, "product of polynomials with different variable counts");
        let mut out = Polynomial::zero(self.k);
        for a in self.terms() {
            for b in other.terms() {
                out.toggle(a.mul(b));
            }
        }
        out
    }

    /// The common degree of all terms; `None` for the zero polynomial.
    pub fn homogeneous_degree(&self) -> Result<Option<u32>> {
        let mut it = self.terms.iter().map(Monomial::degree);
        match it.next() {
            None => Ok(None),
            Some(d) => {
                if it.all(|e| e == d) {
                    Ok(Some(d))
                } else {
                    Err(Error::NotHomogeneous)
                }
            }
        }
    }

    /// Parses the text form: monomials joined by `+`, whitespace ignored, or `0`.
    pub fn parse(k: usize, s: &str) -> Result<Polynomial> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::parse(1, "empty polynomial"));
        }
        if t == "0" {
            return Ok(Polynomial::zero(k));
        }
        let mut p = Polynomial::zero(k);
        for part in t.split('+') {
            let m: Monomial = part.parse()?;
            if m.k() != k {
                return Err(Error::VariableMismatch { expected: k, found: m.k() });
            }
            p.toggle(m);
        }
        Ok(p)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Self { k: m.k(), terms }
    }
}

impl fmt::Display for Polynomial {
    /// Terms in lexicographically decreasing order; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(Σ_{i ∈ vars} x_i)^a` in `k` variables: each binary digit of `a` goes to
/// one variable, so the terms are distinct and none cancel.
fn linear_form_power(k: usize, vars: &[usize], a: u32) -> Vec<Monomial> {
    if a == 0 {
        return vec![Monomial::one(k)];
    }
    if vars.is_empty() {
        return Vec::new();
    }
    let bits: Vec<u32> = (0..32).filter(|b| a >> b & 1 == 1).map(|b| 1u32 << b).collect();
    let mut out = Vec::with_capacity(vars.len().pow(bits.len() as u32));
    let mut choice = vec![0usize; bits.len()];
    loop {
        let mut e = [0u32; MAX_VARS];
        for (bit, &c) in bits.iter().zip(&choice) {
            e[vars[c]] += bit;
        }
        out.push(Monomial::new(&e[..k]).expect("k in range"));
        // odometer over choices
        let mut i = 0;
        loop {
            if i == choice.len() {
                return out;
            }
            choice[i] += 1;
            if choice[i] < vars.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Image of `p` under the algebra map sending `x_j` to `Σ_i map[i][j] x_i`.
///
/// `map` has one column per variable of `p` and one row per target variable;
/// it need not be square or invertible.
pub fn substitute(map: &BitMatrix, p: &Polynomial) -> Result<Polynomial> {
    if map.ncols() != p.k() {
        return Err(Error::VariableMismatch { expected: map.ncols(), found: p.k() });
    }
    let target_k = map.nrows();
    if target_k == 0 || target_k > MAX_VARS {
        return Err(Error::InvalidInput(format!("cannot substitute into {target_k} variables")));
    }
    let images: Vec<Vec<usize>> = (0..p.k()).map(|j| map.column(j).ones().collect()).collect();
    let mut out = Polynomial::zero(target_k);
    for m in p.terms() {
        let mut acc = Polynomial::one(target_k);
        for (j, &a) in m.exps().iter().enumerate() {
            if a == 0 {
                continue;
            }
            let factor = Polynomial::from_terms(target_k, linear_form_power(target_k, &images[j], a));
            acc = acc.mul(&factor);
            if acc.is_zero() {
                break;
            }
        }
        out.add_assign(&acc);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    #[test]
    fn spikes() {
        assert!(m(&[7, 1, 0, 0]).is_spike());
        assert!(m(&[3, 3, 1, 1]).is_spike());
        assert!(!m(&[6, 1, 1, 0]).is_spike());
        assert!(m(&[0]).is_spike());
    }

    #[test]
    fn text_round_trip() {
        let p = Polynomial::parse(4, " (3,5,0,0) + (5, 3,0,0)").unwrap();
        assert_eq!(p.to_string(), "(5,3,0,0)+(3,5,0,0)");
        assert_eq!(Polynomial::parse(2, "(1,1)+(1,1)").unwrap().to_string(), "0");
        assert_eq!(Polynomial::parse(3, "0").unwrap(), Polynomial::zero(3));
        assert!(Polynomial::parse(2, "(1,1,1)").is_err());
        assert!(Polynomial::parse(2, "(1,x)").is_err());
        assert!(Polynomial::parse(2, "").is_err());
    }

    #[test]
    fn homogeneity() {
        assert_eq!(Polynomial::parse(2, "(1,1)+(2,0)").unwrap().homogeneous_degree().unwrap(), Some(2));
        assert!(Polynomial::parse(2, "(1,1)+(2,1)").unwrap().homogeneous_degree().is_err());
        assert_eq!(Polynomial::zero(2).homogeneous_degree().unwrap(), None);
    }

    #[test]
    fn substitute_transvection_on_5_3() {
        // x -> x, y -> x + y
        let map = BitMatrix::from_bit_rows(&[&[1, 1], &[0, 1]]);
        let p = Polynomial::from(m(&[5, 3]));
        let img = substitute(&map, &p).unwrap();
        assert_eq!(img, Polynomial::parse(2, "(8,0)+(7,1)+(6,2)+(5,3)").unwrap());
    }

    #[test]
    fn substitute_identity_and_specialization() {
        let p = Polynomial::parse(3, "(6,1,1)+(1,1,6)").unwrap();
        assert_eq!(substitute(&BitMatrix::identity(3), &p).unwrap(), p);
        // x -> x, y -> x, z -> y, landing in P_2
        let to_p2 = BitMatrix::from_bit_rows(&[&[1, 1, 0], &[0, 0, 1]]);
        let img = substitute(&to_p2, &Polynomial::from(m(&[6, 1, 1]))).unwrap();
        assert_eq!(img, Polynomial::from(m(&[7, 1])));
        // same map kept in P_3 with z unused
        let in_p3 = BitMatrix::from_bit_rows(&[&[1, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let img = substitute(&in_p3, &Polynomial::from(m(&[6, 1, 1]))).unwrap();
        assert_eq!(img, Polynomial::from(m(&[7, 1, 0])));
    }

    #[test]
    fn linear_form_power_matches_repeated_multiplication() {
        for a in 0..12u32 {
            let direct = Polynomial::from_terms(3, linear_form_power(3, &[0, 2], a));
            let base = Polynomial::parse(3, "(1,0,0)+(0,0,1)").unwrap();
            let mut acc = Polynomial::one(3);
            for _ in 0..a {
                acc = acc.mul(&base);
            }
            assert_eq!(direct, acc, "a = {a}");
        }
    }
}
