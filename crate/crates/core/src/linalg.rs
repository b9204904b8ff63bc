//! Bit-packed linear algebra over GF(2).
//!
//! Rows are stored as little-endian packed `u64` words: bit `i` of a vector
//! lives in word `i / 64` at position `i % 64`. Every reduced basis uses the
//! same pivot rule (lowest column index first, rows scanned top-down), so two
//! [`Subspace`] values are equal exactly when they span the same space.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over GF(2) of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; words_for(len)] }
    }

    pub fn unit(len: usize, bit: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(bit, true);
        v
    }

    /// Builds a vector from a slice of 0/1 flags.
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector with the listed positions set. Repeated positions cancel.
    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    /// Builds a vector from raw words; bits past `len` must be clear.
    pub fn from_words(len: usize, words: Vec<u64>) -> Result<Self> {
        if words.len() != words_for(len) {
            return Err(Error::DimensionMismatch { expected: words_for(len), found: words.len() });
        }
        let v = Self { len, words };
        if let Some(&last) = v.words.last() {
            let used = len % WORD_BITS;
            if used != 0 && last >> used != 0 {
                return Err(Error::InvalidInput("bits set beyond vector length".into()));
            }
        }
        Ok(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self ^= other`. Panics on length mismatch.
    #[inline]
    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        self.xor_words_from(other, 0);
    }

    /// XOR only words `from_word..`, for rows known to vanish below that word.
    #[inline]
    fn xor_words_from(&mut self, other: &BitVector, from_word: usize) {
        for (a, b) in self.words[from_word..].iter_mut().zip(&other.words[from_word..]) {
            *a ^= *b;
        }
    }

    /// Parity of the bitwise AND, i.e. the standard dot product.
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Lowest set bit at or after `from`.
    #[inline]
    pub fn next_one(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut wi = from / WORD_BITS;
        let mut w = self.words[wi] & (!0u64 << (from % WORD_BITS));
        loop {
            if w != 0 {
                return Some(wi * WORD_BITS + w.trailing_zeros() as usize);
            }
            wi += 1;
            if wi >= self.words.len() {
                return None;
            }
            w = self.words[wi];
        }
    }

    pub fn first_one(&self) -> Option<usize> {
        self.next_one(0)
    }

    /// Positions of the set bits, ascending.
    pub fn ones(&self) -> Ones<'_> {
        Ones { v: self, word: 0, cur: self.words.first().copied().unwrap_or(0) }
    }

    /// Concatenation `self || other`.
    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len + other.len);
        for i in self.ones() {
            out.set(i, true);
        }
        for i in other.ones() {
            out.set(self.len + i, true);
        }
        out
    }

    /// The sub-vector `[start, start + len)`.
    pub fn slice(&self, start: usize, len: usize) -> BitVector {
        assert!(start + len <= self.len);
        let mut out = BitVector::zeros(len);
        for i in self.ones().skip_while(|&i| i < start).take_while(|&i| i < start + len) {
            out.set(i - start, true);
        }
        out
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector(")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        write!(f, ")")
    }
}

pub struct Ones<'a> {
    v: &'a BitVector,
    word: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * WORD_BITS + bit);
            }
            self.word += 1;
            if self.word >= self.v.words.len() {
                return None;
            }
            self.cur = self.v.words[self.word];
        }
    }
}

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { cols, rows: vec![BitVector::zeros(cols); rows] }
    }

    pub fn identity(n: usize) -> Self {
        Self { cols: n, rows: (0..n).map(|i| BitVector::unit(n, i)).collect() }
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: bad.len() });
        }
        Ok(Self { cols, rows })
    }

    /// Builds a matrix from 0/1 literals, mostly for tests.
    pub fn from_bit_rows(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                BitVector::from_bits(&r.iter().map(|&b| b != 0).collect::<Vec<_>>())
            })
            .collect();
        Self { cols, rows }
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[BitVector]) -> Result<Self> {
        let mut m = BitMatrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
            }
            for i in c.ones() {
                m.rows[i].set(j, true);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value)
    }

    pub fn column(&self, j: usize) -> BitVector {
        let mut c = BitVector::zeros(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            if r.get(j) {
                c.set(i, true);
            }
        }
        c
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = BitVector::zeros(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.nrows(), "matrix product dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = BitVector::zeros(other.cols);
                for k in r.ones() {
                    acc.xor_assign(&other.rows[k]);
                }
                acc
            })
            .collect();
        BitMatrix { cols: other.cols, rows }
    }

    /// `self + other`.
    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!((self.nrows(), self.cols), (other.nrows(), other.cols));
        let mut out = self.clone();
        for (a, b) in out.rows.iter_mut().zip(&other.rows) {
            a.xor_assign(b);
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.nrows() == self.cols && *self == BitMatrix::identity(self.cols)
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    /// Vertical stack of matrices with equal column count.
    pub fn stack(cols: usize, blocks: &[&BitMatrix]) -> Result<BitMatrix> {
        let mut rows = Vec::new();
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: b.cols });
            }
            rows.extend(b.rows.iter().cloned());
        }
        Ok(BitMatrix { cols, rows })
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.nrows(), self.cols)?;
        for r in &self.rows {
            for j in 0..self.cols {
                f.write_str(if r.get(j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Incremental row echelon form with pivot = lowest set bit.
///
/// Stored rows are only semi-reduced: each row's lowest bit is its pivot and no
/// other stored row has that bit as pivot. [`EchelonBuilder::into_subspace`]
/// performs the back-substitution.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    ambient: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
    row_of_pivot: Vec<u32>,
}

const NO_ROW: u32 = u32::MAX;

impl EchelonBuilder {
    pub fn new(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new(), pivots: Vec::new(), row_of_pivot: vec![NO_ROW; ambient] }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of_pivot[col] != NO_ROW
    }

    /// Pivot columns in insertion order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The stored (semi-reduced) row whose pivot is `col`.
    pub fn pivot_row(&self, col: usize) -> Option<&BitVector> {
        match self.row_of_pivot[col] {
            NO_ROW => None,
            r => Some(&self.rows[r as usize]),
        }
    }

    /// Reduces `v` in place; returns the pivot column if it became new.
    fn reduce_in_place(&self, v: &mut BitVector) -> Option<usize> {
        let mut from = 0;
        while let Some(c) = v.next_one(from) {
            match self.row_of_pivot[c] {
                NO_ROW => return Some(c),
                r => v.xor_words_from(&self.rows[r as usize], c / WORD_BITS),
            }
            from = c + 1;
        }
        None
    }

    /// Inserts `v`; returns the new pivot column, or `None` if `v` was dependent.
    pub fn insert(&mut self, mut v: BitVector) -> Option<usize> {
        assert_eq!(v.len(), self.ambient, "echelon insert dimension mismatch");
        let pivot = self.reduce_in_place(&mut v)?;
        self.row_of_pivot[pivot] = self.rows.len() as u32;
        self.rows.push(v);
        self.pivots.push(pivot);
        Some(pivot)
    }

    /// True iff `v` lies in the span of the inserted rows.
    pub fn contains(&self, v: &BitVector) -> bool {
        let mut v = v.clone();
        self.reduce_in_place(&mut v).is_none()
    }

    /// Canonical reduced row echelon form of the span.
    pub fn into_subspace(self) -> Subspace {
        let mut order: Vec<usize> = self.pivots.clone();
        order.sort_unstable();
        let EchelonBuilder { ambient, mut rows, row_of_pivot, .. } = self;
        // Back-substitute from the highest pivot down; each finished row then has
        // no bits at other pivot columns, so a single left-to-right scan works.
        for &p in order.iter().rev() {
            let ri = row_of_pivot[p] as usize;
            let mut row = std::mem::replace(&mut rows[ri], BitVector::zeros(0));
            let mut from = p + 1;
            while let Some(c) = row.next_one(from) {
                let rc = row_of_pivot[c];
                if rc != NO_ROW {
                    row.xor_words_from(&rows[rc as usize], c / WORD_BITS);
                }
                from = c + 1;
            }
            rows[ri] = row;
        }
        let basis: Vec<BitVector> =
            order.iter().map(|&p| std::mem::replace(&mut rows[row_of_pivot[p] as usize], BitVector::zeros(0))).collect();
        Subspace { ambient, basis: BitMatrix { cols: ambient, rows: basis }, pivots: order }
    }
}

/// A subspace of GF(2)^n held in reduced row echelon form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: BitMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, basis: BitMatrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self { ambient, basis: BitMatrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// The span of the given vectors.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = BitVector>) -> Result<Self> {
        let mut e = EchelonBuilder::new(ambient);
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, found: v.len() });
            }
            e.insert(v);
        }
        Ok(e.into_subspace())
    }

    /// Wraps rows that are already in canonical reduced form. Checked.
    pub fn from_rref_rows(ambient: usize, rows: Vec<BitVector>) -> Result<Self> {
        let basis = BitMatrix::from_rows(ambient, rows)?;
        let mut pivots = Vec::with_capacity(basis.nrows());
        for r in basis.rows() {
            let p = r.first_one().ok_or_else(|| Error::InvalidInput("zero row in reduced basis".into()))?;
            if pivots.last().is_some_and(|&q| q >= p) {
                return Err(Error::InvalidInput("pivots not strictly increasing".into()));
            }
            pivots.push(p);
        }
        for (i, r) in basis.rows().iter().enumerate() {
            for (j, &p) in pivots.iter().enumerate() {
                if i != j && r.get(p) {
                    return Err(Error::InvalidInput(format!("pivot column {p} not cleared in row {i}")));
                }
            }
        }
        Ok(Self { ambient, basis, pivots })
    }

    /// Caller guarantees `rows` are already in canonical reduced form.
    pub(crate) fn from_parts_unchecked(ambient: usize, rows: Vec<BitVector>, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(rows.len(), pivots.len());
        Self { ambient, basis: BitMatrix { cols: ambient, rows }, pivots }
    }

    #[inline]
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &BitMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot, ascending. These index a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    fn check(&self, v: &BitVector) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        Ok(())
    }

    /// Reduces `v` modulo the subspace, returning the remainder (supported on
    /// free columns) and the basis rows used.
    pub fn reduce(&self, v: &BitVector) -> Result<(BitVector, BitVector)> {
        self.check(v)?;
        let mut rem = v.clone();
        let mut coeffs = BitVector::zeros(self.dim());
        for (i, &p) in self.pivots.iter().enumerate() {
            if rem.get(p) {
                rem.xor_words_from(self.basis.row(i), p / WORD_BITS);
                coeffs.set(i, true);
            }
        }
        Ok((rem, coeffs))
    }

    /// Membership test; on success also returns coefficients over the basis rows.
    pub fn membership(&self, v: &BitVector) -> Result<(bool, Option<BitVector>)> {
        let (rem, coeffs) = self.reduce(v)?;
        if rem.is_zero() {
            Ok((true, Some(coeffs)))
        } else {
            Ok((false, None))
        }
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        matches!(self.membership(v), Ok((true, _)))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient && other.basis.rows().iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Subspace::span(self.ambient, self.basis.rows().iter().chain(other.basis.rows()).cloned())
    }

    /// Zassenhaus intersection: reduce `[a|a]` over `[b|0]` and keep the rows
    /// whose left half vanishes.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        let n = self.ambient;
        let zero = BitVector::zeros(n);
        let stacked = self
            .basis
            .rows()
            .iter()
            .map(|r| r.concat(r))
            .chain(other.basis.rows().iter().map(|r| r.concat(&zero)));
        let z = Subspace::span(2 * n, stacked)?;
        let rows = z
            .basis
            .rows()
            .iter()
            .zip(&z.pivots)
            .filter(|(_, &p)| p >= n)
            .map(|(r, _)| r.slice(n, n));
        Subspace::span(n, rows)
    }

    /// Image of every basis vector under `m` (acting on column vectors).
    pub fn image_under(&self, m: &BitMatrix) -> Result<Subspace> {
        if m.ncols() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: m.ncols() });
        }
        Subspace::span(m.nrows(), self.basis.rows().iter().map(|r| m.mul_vec(r)))
    }

    /// True iff `m` maps the subspace into itself.
    pub fn is_invariant_under(&self, m: &BitMatrix) -> bool {
        self.basis.rows().iter().all(|r| self.contains(&m.mul_vec(r)))
    }
}

/// Reduced row echelon form of `m` and its rank.
pub fn rref(m: &BitMatrix) -> (Subspace, usize) {
    let mut e = EchelonBuilder::new(m.ncols());
    for r in m.rows() {
        e.insert(r.clone());
    }
    let s = e.into_subspace();
    let rank = s.dim();
    (s, rank)
}

/// Null space of `m` acting on column vectors of length `m.ncols()`.
pub fn kernel(m: &BitMatrix) -> Subspace {
    let (r, _) = rref(m);
    let n = m.ncols();
    let vectors = r.free_columns().into_iter().map(|f| {
        let mut v = BitVector::unit(n, f);
        for (row, &p) in r.basis().rows().iter().zip(r.pivots()) {
            if row.get(f) {
                v.set(p, true);
            }
        }
        v
    });
    Subspace::span(n, vectors).expect("kernel vectors have ambient length")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(bits: &[u8]) -> BitVector {
        BitVector::from_bits(&bits.iter().map(|&b| b != 0).collect::<Vec<_>>())
    }

    fn span_set(ambient: usize, gens: &[BitVector]) -> std::collections::BTreeSet<Vec<bool>> {
        let mut out = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << gens.len()) {
            let mut acc = BitVector::zeros(ambient);
            for (i, g) in gens.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc.xor_assign(g);
                }
            }
            out.insert((0..ambient).map(|i| acc.get(i)).collect());
        }
        out
    }

    #[test]
    fn rref_identity_and_zero_rows() {
        let (s, r) = rref(&BitMatrix::identity(3));
        assert_eq!(r, 3);
        assert_eq!(s.basis(), &BitMatrix::identity(3));

        let (s, r) = rref(&BitMatrix::from_bit_rows(&[&[1, 1], &[0, 0]]));
        assert_eq!(r, 1);
        assert_eq!(s.basis().rows(), &[v(&[1, 1])]);
    }

    #[test]
    fn rref_rank_two_against_enumeration() {
        let rows = [v(&[1, 0, 1]), v(&[0, 1, 1]), v(&[1, 1, 0])];
        // 2^rank = size of the span
        assert_eq!(span_set(3, &rows).len(), 4);
        let m = BitMatrix::from_rows(3, rows.to_vec()).unwrap();
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn membership_examples() {
        let s = Subspace::span(2, [v(&[1, 1])]).unwrap();
        let (ok, c) = s.membership(&v(&[1, 1])).unwrap();
        assert!(ok);
        assert_eq!(c.unwrap(), v(&[1]));
        assert!(!s.membership(&v(&[1, 0])).unwrap().0);

        let s = rref(&BitMatrix::from_bit_rows(&[&[1, 0, 1], &[0, 1, 1]])).0;
        let (ok, c) = s.membership(&v(&[1, 1, 0])).unwrap();
        assert!(ok);
        let mut rebuilt = BitVector::zeros(3);
        for i in c.unwrap().ones() {
            rebuilt.xor_assign(s.basis().row(i));
        }
        assert_eq!(rebuilt, v(&[1, 1, 0]));
    }

    #[test]
    fn membership_rejects_wrong_length() {
        let s = Subspace::full(3);
        assert!(matches!(s.membership(&v(&[1, 0])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn sum_examples() {
        let e1 = Subspace::span(2, [v(&[1, 0])]).unwrap();
        let e2 = Subspace::span(2, [v(&[0, 1])]).unwrap();
        assert_eq!(e1.sum(&e2).unwrap().dim(), 2);
        assert_eq!(e1.sum(&e1).unwrap(), e1);

        let a = Subspace::span(3, [v(&[1, 1, 0])]).unwrap();
        let b = Subspace::span(3, [v(&[0, 1, 1])]).unwrap();
        let s = a.sum(&b).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[1, 0, 1])));
    }

    #[test]
    fn intersect_examples() {
        let a = Subspace::full(2);
        let b = Subspace::span(2, [v(&[1, 1])]).unwrap();
        assert_eq!(a.intersect(&b).unwrap(), b);
        assert_eq!(b.intersect(&b).unwrap(), b);

        let a = Subspace::span(3, [v(&[1, 0, 1]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(3, [v(&[1, 1, 1]), v(&[1, 0, 0])]).unwrap();
        let expected = Subspace::span(3, [v(&[1, 1, 1])]).unwrap();
        let sa = span_set(3, &[v(&[1, 0, 1]), v(&[0, 1, 0])]);
        let sb = span_set(3, &[v(&[1, 1, 1]), v(&[1, 0, 0])]);
        assert_eq!(sa.intersection(&sb).count(), 2);
        assert_eq!(a.intersect(&b).unwrap(), expected);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&BitMatrix::zeros(2, 2)), Subspace::full(2));
        assert_eq!(kernel(&BitMatrix::identity(3)).dim(), 0);
        let k = kernel(&BitMatrix::from_bit_rows(&[&[1, 1], &[0, 0]]));
        assert_eq!(k, Subspace::span(2, [v(&[1, 1])]).unwrap());
    }

    #[test]
    fn from_rref_rows_validates() {
        assert!(Subspace::from_rref_rows(2, vec![v(&[1, 1]), v(&[0, 1])]).is_err());
        assert!(Subspace::from_rref_rows(2, vec![v(&[0, 1]), v(&[1, 0])]).is_err());
        assert!(Subspace::from_rref_rows(2, vec![v(&[1, 0]), v(&[0, 1])]).is_ok());
    }

    #[test]
    fn next_one_crosses_words() {
        let mut x = BitVector::zeros(200);
        x.set(3, true);
        x.set(130, true);
        assert_eq!(x.next_one(0), Some(3));
        assert_eq!(x.next_one(4), Some(130));
        assert_eq!(x.next_one(131), None);
        assert_eq!(x.ones().collect::<Vec<_>>(), vec![3, 130]);
    }
}
