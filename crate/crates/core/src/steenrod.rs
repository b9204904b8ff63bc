//! Steenrod squares acting on `P_k`, formal composites of squares, and the
//! antipode `χ`.
//!
//! `Sq^i(x^a) = C(a, i) x^{a+i}`, extended multiplicatively by the Cartan
//! formula and additively over terms. Binomials mod 2 come from Lucas.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, MAX_VARS};

/// `C(a, b) mod 2`: odd iff the binary digits of `b` are a subset of those of `a`.
#[inline]
pub fn binom_mod2(a: u64, b: u64) -> bool {
    b <= a && b & (a - b) == 0
}

/// `Sq^i` of a single monomial. The Cartan expansion of a monomial never
/// produces the same term twice, so no cancellation happens here.
pub fn sq_monomial(i: u32, m: &Monomial) -> Vec<Monomial> {
    let mut out = Vec::new();
    if i > m.degree() {
        return out;
    }
    let k = m.k();
    let mut cur = [0u32; MAX_VARS];
    fn go(var: usize, left: u32, m: &Monomial, cur: &mut [u32; MAX_VARS], out: &mut Vec<Monomial>) {
        let a = m.exp(var);
        if var + 1 == m.k() {
            // the last variable takes whatever is left
            if left & !a == 0 {
                cur[var] = a + left;
                out.push(Monomial::new(&cur[..m.k()]).expect("k in range"));
            }
            return;
        }
        // submasks of a, bounded by what is left
        let mut s = a;
        loop {
            if s <= left {
                cur[var] = a + s;
                go(var + 1, left - s, m, cur, out);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & a;
        }
    }
    go(0, i, m, &mut cur, &mut out);
    debug_assert!(out.iter().all(|t| t.k() == k));
    out
}

/// `Sq^i` on a polynomial, without the homogeneity check.
pub(crate) fn sq_unchecked(i: u32, p: &Polynomial) -> Polynomial {
    if i == 0 {
        return p.clone();
    }
    let mut out = Polynomial::zero(p.k());
    for m in p.terms() {
        for t in sq_monomial(i, m) {
            out.toggle(t);
        }
    }
    out
}

/// `Sq^i(p)` for homogeneous `p`.
pub fn sq(i: u32, p: &Polynomial) -> Result<Polynomial> {
    p.homogeneous_degree()?;
    Ok(sq_unchecked(i, p))
}

/// A formal F2-sum of composites `Sq^{i_1} ∘ ... ∘ Sq^{i_m}`.
///
/// Each sequence is stored left to right as written; the rightmost square is
/// applied first. The empty sequence is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SteenrodOp {
    sequences: BTreeSet<Vec<u32>>,
}

impl SteenrodOp {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn identity() -> Self {
        Self::from_sequences([Vec::new()]).expect("single sequence is homogeneous")
    }

    /// The single square `Sq^i` (the identity for `i = 0`).
    pub fn sq(i: u32) -> Self {
        if i == 0 {
            Self::identity()
        } else {
            Self::from_sequences([vec![i]]).expect("single sequence is homogeneous")
        }
    }

    /// Sum of the given composites. Zeros (`Sq^0`) are dropped from sequences,
    /// repeated sequences cancel, and all sequences must share a degree.
    pub fn from_sequences(seqs: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        let mut op = Self::zero();
        for s in seqs {
            op.toggle(s.into_iter().filter(|&i| i != 0).collect());
        }
        let mut degrees = op.sequences.iter().map(|s| s.iter().sum::<u32>());
        if let Some(d) = degrees.next() {
            if degrees.any(|e| e != d) {
                return Err(Error::InvalidInput("operation is not homogeneous".into()));
            }
        }
        Ok(op)
    }

    fn toggle(&mut self, s: Vec<u32>) {
        if !self.sequences.remove(&s) {
            self.sequences.insert(s);
        }
    }

    pub fn sequences(&self) -> impl Iterator<Item = &[u32]> {
        self.sequences.iter().map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.sequences.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.sequences.iter().next().map(|s| s.iter().sum())
    }

    /// Formal composite `self ∘ other`.
    pub fn compose(&self, other: &SteenrodOp) -> SteenrodOp {
        let mut out = SteenrodOp::zero();
        for a in &self.sequences {
            for b in &other.sequences {
                out.toggle(a.iter().chain(b).copied().collect());
            }
        }
        out
    }

    pub fn add(&self, other: &SteenrodOp) -> SteenrodOp {
        let mut out = self.clone();
        for s in &other.sequences {
            out.toggle(s.clone());
        }
        out
    }

    /// The same element of the Steenrod algebra rewritten in admissible
    /// sequences (`i_j >= 2 i_{j+1}`) with the Adem relations.
    pub fn admissible(&self) -> SteenrodOp {
        let mut adem = adem_table().lock().expect("adem table poisoned");
        let mut out = SteenrodOp::zero();
        for s in &self.sequences {
            let mut cur: Vec<Vec<u32>> = vec![Vec::new()];
            for &i in s.iter().rev() {
                let mut next = SteenrodOp::zero();
                for t in &cur {
                    for r in adem.left_mul(i, t) {
                        next.toggle(r);
                    }
                }
                cur = next.sequences.into_iter().collect();
            }
            for t in cur {
                out.toggle(t);
            }
        }
        out
    }
}

impl fmt::Display for SteenrodOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, s) in self.sequences.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            if s.is_empty() {
                f.write_str("1")?;
            }
            for (j, i) in s.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "Sq^{i}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SteenrodOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Memoized `Sq^a · (admissible sequence)` in admissible form.
#[derive(Default)]
struct AdemTable {
    memo: HashMap<(u32, Vec<u32>), Vec<Vec<u32>>>,
}

impl AdemTable {
    fn left_mul(&mut self, a: u32, rest: &[u32]) -> Vec<Vec<u32>> {
        if a == 0 {
            return vec![rest.to_vec()];
        }
        if rest.first().is_none_or(|&b| a >= 2 * b) {
            let mut s = Vec::with_capacity(rest.len() + 1);
            s.push(a);
            s.extend_from_slice(rest);
            return vec![s];
        }
        let key = (a, rest.to_vec());
        if let Some(r) = self.memo.get(&key) {
            return r.clone();
        }
        // Sq^a Sq^b = Σ_j C(b-1-j, a-2j) Sq^{a+b-j} Sq^j  for a < 2b
        let b = rest[0];
        let tail = &rest[1..];
        let mut acc = SteenrodOp::zero();
        for j in 0..=a / 2 {
            if !binom_mod2((b - 1 - j) as u64, (a - 2 * j) as u64) {
                continue;
            }
            for t in self.left_mul(j, tail) {
                for r in self.left_mul(a + b - j, &t) {
                    acc.toggle(r);
                }
            }
        }
        let out: Vec<Vec<u32>> = acc.sequences.into_iter().collect();
        self.memo.insert(key, out.clone());
        out
    }
}

fn adem_table() -> &'static Mutex<AdemTable> {
    static TABLE: OnceLock<Mutex<AdemTable>> = OnceLock::new();
    TABLE.get_or_init(Default::default)
}

/// `χ(Sq^n)` in admissible form, from `χ(Sq^n) = Σ_{i=1..n} Sq^i χ(Sq^{n-i})`.
/// Memoized for the life of the process.
pub fn chi(n: u32) -> SteenrodOp {
    static MEMO: OnceLock<Mutex<Vec<SteenrodOp>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(vec![SteenrodOp::identity()]));
    let mut table = memo.lock().expect("chi table poisoned");
    while table.len() <= n as usize {
        let m = table.len() as u32;
        let mut adem = adem_table().lock().expect("adem table poisoned");
        let mut next = SteenrodOp::zero();
        for i in 1..=m {
            for t in &table[(m - i) as usize].sequences {
                for r in adem.left_mul(i, t) {
                    next.toggle(r);
                }
            }
        }
        drop(adem);
        table.push(next);
    }
    table[n as usize].clone()
}

/// Applies each composite to `p` (rightmost square first) and sums.
pub fn apply_op(op: &SteenrodOp, p: &Polynomial) -> Result<Polynomial> {
    p.homogeneous_degree()?;
    let mut out = Polynomial::zero(p.k());
    for s in op.sequences() {
        let mut cur = p.clone();
        for &i in s.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = sq_unchecked(i, &cur);
        }
        out.add_assign(&cur);
    }
    Ok(out)
}

/// `χ(Sq^n)(p)` straight from the recursion on polynomials, without going
/// through an operation. Cost is `O(n^2)` square evaluations.
pub fn apply_chi(n: u32, p: &Polynomial) -> Result<Polynomial> {
    p.homogeneous_degree()?;
    let mut values: Vec<Polynomial> = vec![p.clone()];
    for m in 1..=n {
        let mut acc = Polynomial::zero(p.k());
        for i in 1..=m {
            acc.add_assign(&sq_unchecked(i, &values[(m - i) as usize]));
        }
        values.push(acc);
    }
    Ok(values.pop().expect("at least p"))
}
