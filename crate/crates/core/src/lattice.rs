//! Submodule structure of a `GL_k`-module given by generator matrices:
//! spinning, restriction and quotient actions, chopping into composition
//! factors, and the verification of a named submodule lattice of `Q_4(8)`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::family;
use crate::gl::{gl_generators, induced_matrix};
use crate::hit::QuotientBasis;
use crate::linalg::{kernel, BitMatrix, BitVector, EchelonBuilder, Subspace};
use crate::poly::Polynomial;

/// A module over `F2`, given by the matrices of a generating set of the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleContext {
    dim: usize,
    actions: Vec<BitMatrix>,
}

impl ModuleContext {
    pub fn new(dim: usize, actions: Vec<BitMatrix>) -> Result<Self> {
        for m in &actions {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: m.nrows().max(m.ncols()) });
            }
            if m.rank() != dim {
                return Err(Error::NotInvertible);
            }
        }
        Ok(Self { dim, actions })
    }

    /// `Q_k(d)` under the standard generators of `GL_k`.
    pub fn from_quotient(qb: &QuotientBasis) -> Result<Self> {
        let actions = gl_generators(qb.k())
            .iter()
            .map(|g| induced_matrix(g, qb).map(|a| a.matrix))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { dim: qb.dim(), actions })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[BitMatrix] {
        &self.actions
    }

    /// Smallest submodule containing `vectors`.
    pub fn spin(&self, vectors: impl IntoIterator<Item = BitVector>) -> Result<Subspace> {
        let mut ech = EchelonBuilder::new(self.dim);
        let mut queue = VecDeque::new();
        for v in vectors {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
            }
            if ech.insert(v.clone()).is_some() {
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            if ech.rank() == self.dim {
                break;
            }
            for m in &self.actions {
                let w = m.mul_vec(&v);
                if ech.insert(w.clone()).is_some() {
                    queue.push_back(w);
                }
            }
        }
        Ok(ech.into_subspace())
    }

    /// True iff `s` is mapped into itself by every generator.
    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim && self.actions.iter().all(|m| s.is_invariant_under(m))
    }

    fn check_submodule(&self, s: &Subspace) -> Result<()> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: s.ambient_dim() });
        }
        if !self.is_submodule(s) {
            return Err(Error::NotClosed);
        }
        Ok(())
    }

    /// Coordinates of `v + s` on the free columns of `s`.
    pub fn project(&self, s: &Subspace, v: &BitVector) -> Result<BitVector> {
        let (rem, _) = s.reduce(v)?;
        let free = s.free_columns();
        Ok(BitVector::from_indices(free.len(), free.iter().enumerate().filter(|(_, &c)| rem.get(c)).map(|(i, _)| i)))
    }

    /// Action on `V / s`, with coordinates on the free columns of `s`.
    pub fn quotient(&self, s: &Subspace) -> Result<ModuleContext> {
        self.check_submodule(s)?;
        let free = s.free_columns();
        let actions = self
            .actions
            .iter()
            .map(|m| {
                let cols = free
                    .iter()
                    .map(|&c| self.project(s, &m.column(c)))
                    .collect::<Result<Vec<_>>>()?;
                BitMatrix::from_columns(free.len(), &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleContext { dim: free.len(), actions })
    }

    /// Action on `s` itself, in coordinates over its reduced basis.
    pub fn restrict(&self, s: &Subspace) -> Result<ModuleContext> {
        self.check_submodule(s)?;
        let actions = self
            .actions
            .iter()
            .map(|m| {
                let cols = s
                    .basis()
                    .rows()
                    .iter()
                    .map(|b| s.membership(&m.mul_vec(b)).map(|(_, c)| c.expect("closed")))
                    .collect::<Result<Vec<_>>>()?;
                BitMatrix::from_columns(s.dim(), &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleContext { dim: s.dim(), actions })
    }

    /// The module generated by the transposed matrices. Its submodules are
    /// exactly the annihilators of submodules of `self`.
    pub fn dual(&self) -> ModuleContext {
        ModuleContext { dim: self.dim, actions: self.actions.iter().map(BitMatrix::transpose).collect() }
    }

    fn random_vector(&self, rng: &mut ChaCha8Rng) -> BitVector {
        let bits: Vec<bool> = (0..self.dim).map(|_| rng.gen()).collect();
        BitVector::from_bits(&bits)
    }

    /// A random element of the group algebra: a sum of a few short words.
    fn random_algebra_element(&self, rng: &mut ChaCha8Rng) -> BitMatrix {
        let mut acc = BitMatrix::zeros(self.dim, self.dim);
        if rng.gen() {
            acc = BitMatrix::identity(self.dim);
        }
        for _ in 0..rng.gen_range(2..=4) {
            let mut w = BitMatrix::identity(self.dim);
            for _ in 0..rng.gen_range(1..=3) {
                if !self.actions.is_empty() {
                    w = w.mul(&self.actions[rng.gen_range(0..self.actions.len())]);
                }
            }
            acc = acc.add(&w);
        }
        acc
    }
}

/// Annihilator of `w` under the standard pairing.
pub fn annihilator(w: &Subspace) -> Subspace {
    kernel(w.basis())
}

/// Every nonzero vector of `s`, as combinations of its basis. `s.dim()` must be small.
fn nonzero_vectors(s: &Subspace) -> impl Iterator<Item = BitVector> + '_ {
    let rows = s.basis().rows();
    (1u64..(1u64 << rows.len())).map(move |mask| {
        let mut v = BitVector::zeros(s.ambient_dim());
        for (i, r) in rows.iter().enumerate() {
            if mask >> i & 1 == 1 {
                v.xor_assign(r);
            }
        }
        v
    })
}

/// Outcome of one search for a proper submodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Split {
    Proper(Subspace),
    /// No proper submodule exists; `certified` is false when the search gave
    /// up without a proof.
    Irreducible { certified: bool },
}

const RANDOM_VECTORS: usize = 16;
const ALGEBRA_TRIALS: usize = 400;
const MAX_NULLITY: usize = 6;

/// Searches for a proper nonzero submodule. Basis vectors are tried first in
/// index order, then seeded random vectors, then kernels of random group
/// algebra elements in the module and its dual. A kernel whose every nonzero
/// vector spins to the whole module, together with a dual kernel vector that
/// does the same, proves irreducibility.
pub fn find_submodule(ctx: &ModuleContext, rng: &mut ChaCha8Rng) -> Result<Split> {
    let n = ctx.dim();
    if n <= 1 {
        return Ok(Split::Irreducible { certified: true });
    }
    let proper = |s: &Subspace| s.dim() > 0 && s.dim() < n;
    for i in 0..n {
        let s = ctx.spin([BitVector::unit(n, i)])?;
        if proper(&s) {
            return Ok(Split::Proper(s));
        }
    }
    for _ in 0..RANDOM_VECTORS {
        let v = ctx.random_vector(rng);
        let s = ctx.spin([v])?;
        if proper(&s) {
            return Ok(Split::Proper(s));
        }
    }
    let dual = ctx.dual();
    for _ in 0..ALGEBRA_TRIALS {
        let a = ctx.random_algebra_element(rng);
        let ker = kernel(&a);
        if ker.dim() == 0 || ker.dim() > MAX_NULLITY {
            continue;
        }
        for v in nonzero_vectors(&ker) {
            let s = ctx.spin([v])?;
            if proper(&s) {
                return Ok(Split::Proper(s));
            }
        }
        let dker = kernel(&a.transpose());
        let w = dker.basis().row(0).clone();
        let sw = dual.spin([w])?;
        if proper(&sw) {
            return Ok(Split::Proper(annihilator(&sw)));
        }
        return Ok(Split::Irreducible { certified: true });
    }
    Ok(Split::Irreducible { certified: false })
}

/// A composition factor found by chopping.
#[derive(Clone, Debug)]
pub struct Factor {
    pub module: ModuleContext,
    pub certified: bool,
}

/// Composition factors of `ctx`, found by repeated chopping.
pub fn composition_factors(ctx: &ModuleContext, seed: u64) -> Result<Vec<Factor>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut stack = vec![ctx.clone()];
    while let Some(m) = stack.pop() {
        if m.dim() == 0 {
            continue;
        }
        match find_submodule(&m, &mut rng)? {
            Split::Proper(s) => {
                stack.push(m.quotient(&s)?);
                stack.push(m.restrict(&s)?);
            }
            Split::Irreducible { certified } => out.push(Factor { module: m, certified }),
        }
    }
    Ok(out)
}

/// Sorted dimensions of the composition factors.
pub fn composition_dims(ctx: &ModuleContext, seed: u64) -> Result<Vec<usize>> {
    let mut d: Vec<usize> = composition_factors(ctx, seed)?.iter().map(|f| f.module.dim()).collect();
    d.sort_unstable();
    Ok(d)
}

/// Largest dimension for which [`irreducible_exhaustive`] is accepted.
pub const EXHAUSTIVE_LIMIT: usize = 16;

/// True iff every nonzero vector spins to the whole module.
pub fn irreducible_exhaustive(ctx: &ModuleContext) -> Result<bool> {
    let n = ctx.dim();
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::InvalidInput(format!("exhaustive check limited to dimension {EXHAUSTIVE_LIMIT}")));
    }
    let full = Subspace::full(n);
    for v in nonzero_vectors(&full) {
        if ctx.spin([v])?.dim() != n {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Heuristic: `trials` seeded random nonzero vectors of the module and of its
/// dual all spin to everything.
pub fn irreducible_random(ctx: &ModuleContext, trials: usize, seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = ctx.dim();
    let dual = ctx.dual();
    for _ in 0..trials {
        for m in [ctx, &dual] {
            let v = m.random_vector(&mut rng);
            if !v.is_zero() && m.spin([v])?.dim() != n {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Irreducibility: exhaustive up to [`EXHAUSTIVE_LIMIT`], otherwise a kernel
/// certificate backed by `trials` random spins.
pub fn is_irreducible(ctx: &ModuleContext, trials: usize, seed: u64) -> Result<bool> {
    if ctx.dim() <= EXHAUSTIVE_LIMIT {
        return irreducible_exhaustive(ctx);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let certified = matches!(find_submodule(ctx, &mut rng)?, Split::Irreducible { certified: true });
    Ok(certified && irreducible_random(ctx, trials, seed)?)
}

/// Named generator lists, one section per submodule.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorLists {
    sections: Vec<(String, Vec<Polynomial>)>,
}

impl GeneratorLists {
    /// Parses `name:` headers followed by polynomial lines or `family X`.
    /// `#` starts a comment.
    pub fn parse(k: usize, text: &str) -> Result<Self> {
        let mut sections: Vec<(String, Vec<Polynomial>)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_suffix(':') {
                let name = normalize_name(name.trim());
                if name.is_empty() {
                    return Err(Error::parse(lineno, "empty section name"));
                }
                if sections.iter().any(|(n, _)| *n == name) {
                    return Err(Error::parse(lineno, format!("duplicate section {name}")));
                }
                sections.push((name, Vec::new()));
                continue;
            }
            let Some((_, list)) = sections.last_mut() else {
                return Err(Error::parse(lineno, "generator before any section header"));
            };
            if let Some(rest) = line.strip_prefix("family") {
                let mut chars = rest.trim().chars();
                let members = match (chars.next(), chars.next()) {
                    (Some(c), None) => family(c),
                    _ => None,
                }
                .ok_or_else(|| Error::parse(lineno, format!("unknown family {:?}", rest.trim())))?;
                if k != 4 {
                    return Err(Error::parse(lineno, "families are defined for four variables"));
                }
                list.extend(members.into_iter().map(Polynomial::from));
                continue;
            }
            let p = Polynomial::parse(k, line).map_err(|e| Error::parse(lineno, e.to_string()))?;
            list.push(p);
        }
        Ok(Self { sections })
    }

    /// The generator lists shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(4, include_str!("../data/lattice_q4_8.txt")).expect("built-in generator lists parse")
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.sections.iter().map(|(n, _)| n.as_str())
    }

    pub fn get(&self, name: &str) -> Option<&[Polynomial]> {
        let name = normalize_name(name);
        self.sections.iter().find(|(n, _)| *n == name).map(|(_, v)| v.as_slice())
    }

    pub fn len(&self) -> usize {
        self.sections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sections.is_empty()
    }
}

fn normalize_name(s: &str) -> String {
    s.replace('′', "'")
}

/// Dimension of the module named by an edge label.
pub fn label_dim(label: &str) -> Option<usize> {
    Some(match label {
        "1" => 1,
        "N" | "N*" => 4,
        "Λ" => 6,
        "S" => 14,
        "T" | "T*" => 20,
        "M" => 25,
        "St" => 64,
        _ => return None,
    })
}

/// Labels of irreducible modules. `M` is an extension and is excluded.
pub fn label_is_irreducible(label: &str) -> bool {
    label != "M" && label_dim(label).is_some()
}

/// Names of the submodules of `Q_4(8)` in the lattice, smallest first.
pub const NODE_NAMES: [&str; 11] = ["4", "20", "24", "25", "30", "30'", "31", "35", "45", "49", "55"];

/// Covering relations `(upper, lower, label)`; `"0"` is the zero submodule.
pub const EDGES: [(&str, &str, &str); 15] = [
    ("55", "30'", "M"),
    ("55", "49", "Λ"),
    ("49", "45", "N"),
    ("49", "35", "S"),
    ("45", "31", "S"),
    ("35", "31", "N"),
    ("31", "30", "1"),
    ("31", "25", "Λ"),
    ("30'", "24", "Λ"),
    ("25", "24", "1"),
    ("30", "24", "Λ"),
    ("24", "20", "N*"),
    ("24", "4", "T"),
    ("4", "0", "N*"),
    ("20", "0", "T"),
];

fn expected_node_dim(name: &str) -> Option<usize> {
    name.trim_end_matches('\'').parse().ok()
}

#[derive(Clone, Debug)]
pub struct LatticeNode {
    pub name: String,
    pub dim: usize,
    pub expected_dim: usize,
    pub closed: bool,
    pub space: Subspace,
}

#[derive(Clone, Debug)]
pub struct LatticeEdge {
    pub upper: String,
    pub lower: String,
    pub label: String,
    pub quotient_dim: usize,
    pub expected_dim: usize,
    pub included: bool,
    /// `None` when the label does not name an irreducible module.
    pub irreducible: Option<bool>,
}

impl LatticeEdge {
    pub fn passed(&self) -> bool {
        self.included && self.quotient_dim == self.expected_dim && self.irreducible != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct LatticeReport {
    pub nodes: Vec<LatticeNode>,
    pub edges: Vec<LatticeEdge>,
    pub checks: Vec<Check>,
    pub composition: Vec<usize>,
}

impl LatticeReport {
    pub fn node(&self, name: &str) -> Option<&LatticeNode> {
        let name = normalize_name(name);
        self.nodes.iter().find(|n| n.name == name)
    }

    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    /// Description of the first failed assertion, if any.
    pub fn first_failure(&self) -> Option<String> {
        for n in &self.nodes {
            if n.dim != n.expected_dim {
                return Some(format!("submodule {} has dim {}, expected {}", n.name, n.dim, n.expected_dim));
            }
            if !n.closed {
                return Some(format!("submodule {} is not closed", n.name));
            }
        }
        for e in &self.edges {
            if !e.included {
                return Some(format!("{} is not contained in {}", e.lower, e.upper));
            }
            if e.quotient_dim != e.expected_dim {
                return Some(format!(
                    "{}/{} has dim {}, label {} needs {}",
                    e.upper, e.lower, e.quotient_dim, e.label, e.expected_dim
                ));
            }
            if e.irreducible == Some(false) {
                return Some(format!("{}/{} is not irreducible", e.upper, e.lower));
            }
        }
        self.checks.iter().find(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail))
    }

    pub fn summary(&self) -> String {
        format!("{} submodules verified; 24 = 4 ⊕ 20; 30′ ∩ 35 = 24", self.nodes.len())
    }
}

/// Random spins used for 20-dimensional factors.
pub const RANDOM_TRIALS: usize = 1000;

/// Spins every generator list, then checks the inclusions, edge quotients,
/// the two direct-sum statements and the composition factors of the whole
/// module.
pub fn verify_lattice(qb: &QuotientBasis, lists: &GeneratorLists, seed: u64) -> Result<LatticeReport> {
    if qb.k() != 4 || qb.degree() != 8 {
        return Err(Error::InvalidInput("the lattice lives in Q_4(8)".into()));
    }
    let ctx = ModuleContext::from_quotient(qb)?;
    let n = ctx.dim();
    let mut spaces: BTreeMap<String, Subspace> = BTreeMap::new();
    spaces.insert("0".into(), Subspace::zero(n));
    let mut nodes = Vec::new();
    for name in NODE_NAMES {
        let gens = lists
            .get(name)
            .ok_or_else(|| Error::InvalidInput(format!("no generator list for {name}")))?;
        let vectors = gens.iter().map(|p| qb.class_of(p)).collect::<Result<Vec<_>>>()?;
        let space = ctx.spin(vectors)?;
        nodes.push(LatticeNode {
            name: name.to_string(),
            dim: space.dim(),
            expected_dim: expected_node_dim(name).expect("numeric name"),
            closed: ctx.is_submodule(&space),
            space: space.clone(),
        });
        spaces.insert(name.to_string(), space);
    }

    let mut edges = Vec::new();
    for (i, (upper, lower, label)) in EDGES.iter().enumerate() {
        let (u, l) = (&spaces[*upper], &spaces[*lower]);
        let included = u.contains_subspace(l);
        let quotient_dim = u.dim() - l.dim().min(u.dim());
        let irreducible = if included && label_is_irreducible(label) && quotient_dim > 0 {
            let q = ctx.restrict(u)?;
            let inner = Subspace::span(u.dim(), l.basis().rows().iter().map(|r| {
                u.membership(r).expect("same ambient").1.expect("contained")
            }))?;
            Some(is_irreducible(&q.quotient(&inner)?, RANDOM_TRIALS, seed.wrapping_add(i as u64))?)
        } else {
            None
        };
        edges.push(LatticeEdge {
            upper: upper.to_string(),
            lower: lower.to_string(),
            label: label.to_string(),
            quotient_dim,
            expected_dim: label_dim(label).expect("known label"),
            included,
            irreducible,
        });
    }

    let s = |name: &str| &spaces[name];
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        checks.push(Check { name: name.into(), passed, detail });
    };

    let meet = s("4").intersect(s("20"))?;
    let join = s("4").sum(s("20"))?;
    check("24 = 4 ⊕ 20", meet.dim() == 0 && join == *s("24"), format!("meet {}, join {}", meet.dim(), join.dim()));

    let meet = s("30'").intersect(s("35"))?;
    check("30′ ∩ 35 = 24", meet == *s("24"), format!("meet {}", meet.dim()));

    let meet = s("30'").intersect(s("49"))?;
    let join = s("30'").sum(s("49"))?;
    check(
        "55/24 = 30′/24 ⊕ 49/24",
        meet == *s("24") && join == *s("55"),
        format!("meet {}, join {}", meet.dim(), join.dim()),
    );

    let d_classes = family('D')
        .expect("family D")
        .into_iter()
        .map(|m| qb.class_of_monomial(&m).cloned())
        .collect::<Result<Vec<_>>>()?;
    let with_d = Subspace::span(n, s("24").basis().rows().iter().cloned().chain(d_classes))?;
    check("family D spans 30/24", with_d == *s("30"), format!("span {}", with_d.dim()));

    check("55 is everything", s("55").dim() == n, format!("dim {}", s("55").dim()));

    let composition = composition_dims(&ctx, seed)?;
    check(
        "composition factors",
        composition == [1, 4, 4, 6, 6, 14, 20],
        format!("{composition:?}"),
    );

    Ok(LatticeReport { nodes, edges, checks, composition })
}

/// [`verify_lattice`] with the built-in generator lists.
pub fn verify_builtin_lattice(qb: &QuotientBasis, seed: u64) -> Result<LatticeReport> {
    verify_lattice(qb, &GeneratorLists::builtin(), seed)
}

/// Graphviz text: one node per submodule, one edge per covering relation
/// between named submodules.
pub fn lattice_to_dot(report: &LatticeReport) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=TB;\n");
    for n in &report.nodes {
        let _ = writeln!(out, "  \"{}\" [label=\"{} ({})\"];", n.name, n.name, n.dim);
    }
    for e in &report.edges {
        if report.node(&e.lower).is_none() || report.node(&e.upper).is_none() {
            continue;
        }
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{} ({})\"];",
            e.upper, e.lower, e.label, e.quotient_dim
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hit::quotient_basis;

    fn q8() -> QuotientBasis {
        quotient_basis(4, 8).unwrap()
    }

    #[test]
    fn spin_examples() {
        let q = q8();
        let ctx = ModuleContext::from_quotient(&q).unwrap();
        assert_eq!(ctx.spin([BitVector::zeros(55)]).unwrap().dim(), 0);
        let lists = GeneratorLists::builtin();
        let four = lists.get("4").unwrap().iter().map(|p| q.class_of(p).unwrap());
        assert_eq!(ctx.spin(four).unwrap().dim(), 4);
        let ac = lists.get("24").unwrap().iter().map(|p| q.class_of(p).unwrap());
        assert_eq!(ctx.spin(ac).unwrap().dim(), 24);
    }

    #[test]
    fn quotient_and_restrict_dims() {
        let q = q8();
        let ctx = ModuleContext::from_quotient(&q).unwrap();
        assert_eq!(ctx.quotient(&Subspace::zero(55)).unwrap(), ctx);
        let not_closed = Subspace::span(55, [BitVector::unit(55, 0)]).unwrap();
        assert!(matches!(ctx.quotient(&not_closed), Err(Error::NotClosed)));
        let s = ctx.spin([BitVector::unit(55, 3)]).unwrap();
        assert_eq!(ctx.restrict(&s).unwrap().dim() + ctx.quotient(&s).unwrap().dim(), 55);
    }

    #[test]
    fn small_module_factors() {
        // permutation module of S_2 on F2^2: uniserial 1, 1
        let swap = BitMatrix::from_bit_rows(&[&[0, 1], &[1, 0]]);
        let ctx = ModuleContext::new(2, vec![swap]).unwrap();
        assert_eq!(composition_dims(&ctx, 1).unwrap(), vec![1, 1]);
        assert_eq!(composition_dims(&ModuleContext::new(0, vec![]).unwrap(), 1).unwrap(), Vec::<usize>::new());
        assert!(!irreducible_exhaustive(&ctx).unwrap());
    }

    #[test]
    fn generator_list_errors() {
        assert!(GeneratorLists::parse(4, "").unwrap().is_empty());
        let e = GeneratorLists::parse(4, "a:\n(1,0,0,0)\n(1,0\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        assert!(matches!(GeneratorLists::parse(4, "(1,0,0,0)"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(GeneratorLists::parse(4, "x:\nfamily Q"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(GeneratorLists::parse(4, "x:\nx:"), Err(Error::Parse { line: 2, .. })));
        let l = GeneratorLists::parse(4, "30′:\nfamily F # four\n").unwrap();
        assert_eq!(l.get("30'").unwrap().len(), 4);
    }

    #[test]
    fn empty_dot() {
        let r = LatticeReport { nodes: vec![], edges: vec![], checks: vec![], composition: vec![] };
        assert_eq!(lattice_to_dot(&r), "digraph lattice {\n  rankdir=TB;\n}\n");
    }
}

#[cfg(test)]
mod builtin_lattice_tests {
    use super::*;
    use crate::hit::quotient_basis;

    #[test]
    fn builtin_lattice_verifies() {
        let q = quotient_basis(4, 8).unwrap();
        let r = verify_builtin_lattice(&q, 7).unwrap();
        assert_eq!(r.first_failure(), None);
        assert_eq!(r.node("30′").unwrap().dim, 30);
        assert!(r.edges.iter().all(LatticeEdge::passed));
        let dot = lattice_to_dot(&r);
        assert_eq!(dot.matches(" [label=\"").count(), 11 + 13);
        assert!(dot.contains("\"55\" [label=\"55 (55)\"]"));
        assert_eq!(dot, lattice_to_dot(&verify_builtin_lattice(&q, 7).unwrap()));
    }
}
