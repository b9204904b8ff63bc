//! Command-line front end. Each command returns an [`Outcome`]; the binary
//! prints it and exits with status 0 iff every verification passed.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cache::{default_cache_dir, RunConfig, DEFAULT_MAX_DEGREE, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::families::family;
use crate::gl::{gl_generators, invariants};
use crate::hit::HitWitness;
use crate::kameko::chain_with;
use crate::lattice::{lattice_to_dot, verify_lattice, GeneratorLists};
use crate::poly::{Monomial, Polynomial, MAX_VARS};
use crate::steenrod::{apply_op, chi};

#[derive(Debug, Parser)]
#[command(name = "hitwork", version, about = "Indecomposables of F2[x_1..x_k] over the Steenrod algebra")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cache directory (default: $HITWORK_CACHE or ~/.cache/hitwork).
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Refuse degrees above this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE)]
    pub max_degree: u32,
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

impl GlobalOpts {
    pub fn config(&self) -> RunConfig {
        let cache_dir = if self.no_cache { None } else { self.cache_dir.clone().or_else(default_cache_dir) };
        RunConfig { cache_dir, max_degree: self.max_degree, threads: self.threads.max(1), seed: self.seed }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension and representative monomials of Q_k(d).
    Basis {
        k: usize,
        d: u32,
        /// File of monomials to check as a basis.
        #[arg(long, value_name = "FILE")]
        verify: Option<PathBuf>,
    },
    /// GL_k-invariants of Q_k(d).
    Invariants { k: usize, d: u32 },
    /// Decide whether a polynomial is hit, with a witness.
    Hit { k: usize, poly: String },
    /// Kameko down maps from degree 2^s(r+k)-k to r.
    Kameko {
        k: usize,
        s: u32,
        /// Base degree r (default 8 for k = 4).
        #[arg(long)]
        base: Option<u32>,
    },
    /// The antipode of Sq^n, optionally applied to a polynomial.
    Chi { n: u32, k: Option<usize>, poly: Option<String> },
    /// Verify the submodule lattice of Q_4(8).
    Lattice {
        /// Write the lattice as a Graphviz file.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Use these generator lists instead of the built-in ones.
        #[arg(long, value_name = "FILE")]
        generators: Option<PathBuf>,
    },
}

/// Rendered result of a command.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub ok: bool,
    pub lines: Vec<String>,
    pub json: Value,
}

impl Outcome {
    pub fn text(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let cfg = cli.global.config();
    match &cli.command {
        Command::Basis { k, d, verify } => cmd_basis(&cfg, *k, *d, verify.as_deref()),
        Command::Invariants { k, d } => cmd_invariants(&cfg, *k, *d),
        Command::Hit { k, poly } => cmd_hit(&cfg, *k, poly),
        Command::Kameko { k, s, base } => cmd_kameko(&cfg, *k, *s, *base),
        Command::Chi { n, k, poly } => cmd_chi(*n, *k, poly.as_deref()),
        Command::Lattice { dot, generators } => cmd_lattice(&cfg, dot.as_deref(), generators.as_deref()),
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 || k > MAX_VARS {
        return Err(Error::InvalidInput(format!("k must be in 1..={MAX_VARS}")));
    }
    Ok(())
}

/// Reads monomials, whitespace separated, or `family X` lines. `#` comments.
pub fn parse_monomial_list(k: usize, text: &str) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("family") {
            let mut c = rest.trim().chars();
            let members = match (c.next(), c.next()) {
                (Some(c), None) if k == 4 => family(c),
                _ => None,
            };
            out.extend(members.ok_or_else(|| Error::parse(i + 1, format!("unknown family {:?}", rest.trim())))?);
            continue;
        }
        for tok in line.split_whitespace() {
            let m: Monomial = tok.parse().map_err(|e: Error| Error::parse(i + 1, e.to_string()))?;
            if m.k() != k {
                return Err(Error::parse(i + 1, format!("{tok} has {} variables, expected {k}", m.k())));
            }
            out.push(m);
        }
    }
    Ok(out)
}

pub fn cmd_basis(cfg: &RunConfig, k: usize, d: u32, verify: Option<&std::path::Path>) -> Result<Outcome> {
    check_k(k)?;
    let qb = cfg.quotient(k, d)?;
    let mut lines = vec![format!("dim {}", qb.dim())];
    let reps = qb.reps();
    lines.extend(reps.iter().map(|m| m.to_string()));
    let mut verdicts = json!({});
    let mut ok = true;
    if let Some(path) = verify {
        let candidates = parse_monomial_list(k, &std::fs::read_to_string(path)?)?;
        let verified = qb.verify_basis(&candidates)?;
        ok = verified;
        lines.push(if verified {
            format!("VERIFIED basis of dim {}", qb.dim())
        } else {
            format!("NOT a basis: {} candidates for dim {}", candidates.len(), qb.dim())
        });
        verdicts = json!({ "basis_verified": verified });
    }
    let json = json!({
        "command": "basis",
        "inputs": { "k": k, "d": d, "verify": verify.map(|p| p.display().to_string()) },
        "dims": { "quotient": qb.dim(), "ambient": qb.ctx().len() },
        "reps": reps.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "verdicts": verdicts,
    });
    Ok(Outcome { ok, lines, json })
}

pub fn cmd_invariants(cfg: &RunConfig, k: usize, d: u32) -> Result<Outcome> {
    check_k(k)?;
    let qb = cfg.quotient(k, d)?;
    let inv = invariants(&qb, &gl_generators(k))?;
    let gens: Vec<String> = inv.basis().rows().iter().map(|v| qb.polynomial_of_class(v).to_string()).collect();
    let mut lines = vec![format!("dim {}", inv.dim())];
    lines.extend(gens.iter().cloned());
    let json = json!({
        "command": "invariants",
        "inputs": { "k": k, "d": d },
        "dims": { "quotient": qb.dim(), "invariants": inv.dim() },
        "verdicts": {},
        "generators": gens,
    });
    Ok(Outcome { ok: true, lines, json })
}

/// `Sq^4(1,2,1,0) + Sq^2((2,3,1,0)+(…))`.
pub fn format_witness(w: &HitWitness) -> String {
    if w.summands.is_empty() {
        return "0".into();
    }
    w.summands
        .iter()
        .map(|(i, p)| if p.len() == 1 { format!("Sq^{i}{p}") } else { format!("Sq^{i}({p})") })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn cmd_hit(cfg: &RunConfig, k: usize, poly: &str) -> Result<Outcome> {
    check_k(k)?;
    let p = Polynomial::parse(k, poly)?;
    let Some(d) = p.homogeneous_degree()? else {
        let json = json!({
            "command": "hit", "inputs": { "k": k, "poly": poly }, "dims": {},
            "verdicts": { "hit": true, "witness_valid": true }, "witness": "0",
        });
        return Ok(Outcome { ok: true, lines: vec!["HIT".into(), "witness: 0".into()], json });
    };
    let qb = cfg.quotient(k, d)?;
    let r = qb.reduce(&p)?;
    let hit = r.coords.is_zero();
    let valid = r.witness.reconstruct() == p;
    let witness = format_witness(&r.witness);
    let mut lines = vec![if hit { "HIT".to_string() } else { "NOT-HIT".to_string() }];
    if hit {
        lines.push(format!("witness: {witness}"));
    } else {
        lines.push(format!("class: {}", r.witness.remainder));
        if !r.witness.summands.is_empty() {
            lines.push(format!("hit part: {witness}"));
        }
    }
    if !valid {
        lines.push("witness FAILED to reconstruct the input".into());
    }
    let json = json!({
        "command": "hit",
        "inputs": { "k": k, "poly": poly },
        "dims": { "quotient": qb.dim() },
        "verdicts": { "hit": hit, "witness_valid": valid },
        "class": r.witness.remainder.to_string(),
        "witness": witness,
    });
    Ok(Outcome { ok: valid, lines, json })
}

pub fn cmd_kameko(cfg: &RunConfig, k: usize, s: u32, base: Option<u32>) -> Result<Outcome> {
    check_k(k)?;
    if s == 0 {
        return Err(Error::InvalidInput("s must be at least 1".into()));
    }
    let base = match (base, k) {
        (Some(b), _) => b,
        (None, 4) => 8,
        (None, _) => return Err(Error::InvalidInput("--base is required unless k = 4".into())),
    };
    let top = crate::kameko::chain_degrees(k, base, s)[0];
    cfg.check_degree(top)?;
    let chain = chain_with(k, base, s, |k, d| cfg.quotient(k, d).map(std::sync::Arc::new))?;
    let mut lines = Vec::new();
    let mut steps = Vec::new();
    for st in &chain.steps {
        lines.push(format!("P{k} degree {} ambient = {}", st.from_degree, st.ambient));
        let hyp = if st.even.holds {
            "even-hypothesis OK".to_string()
        } else {
            let shown: Vec<String> = st.even.failures.iter().take(8).map(ToString::to_string).collect();
            format!("even-hypothesis FAILED ({} monomials: {})", st.even.failures.len(), shown.join(" "))
        };
        let iso = if st.bijective {
            format!("iso {}×{}", st.to_dim, st.from_dim)
        } else {
            format!("NOT bijective {}×{}", st.to_dim, st.from_dim)
        };
        let eq = if st.equivariant { "GL-equivariant" } else { "NOT GL-equivariant" };
        lines.push(format!("degree {} -> {}: {hyp}; {iso}; {eq}", st.from_degree, st.to_degree));
        steps.push(json!({
            "from": st.from_degree, "to": st.to_degree, "ambient": st.ambient,
            "even_hypothesis": st.even.holds,
            "even_failures": st.even.failures.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "from_dim": st.from_dim, "to_dim": st.to_dim,
            "bijective": st.bijective, "equivariant": st.equivariant,
        }));
    }
    for (d, dim) in &chain.invariant_dims {
        lines.push(format!("degree {d}: invariants dim {dim}"));
    }
    let ok = chain.check().is_ok();
    let json = json!({
        "command": "kameko",
        "inputs": { "k": k, "s": s, "base": base },
        "dims": chain.steps.iter().map(|st| (st.from_degree.to_string(), json!(st.from_dim)))
            .chain(std::iter::once((base.to_string(), json!(chain.composite.nrows()))))
            .collect::<serde_json::Map<_, _>>(),
        "verdicts": { "chain": ok, "steps": steps },
        "invariants": chain.invariant_dims.iter().map(|(d, n)| (d.to_string(), json!(n)))
            .collect::<serde_json::Map<_, _>>(),
    });
    Ok(Outcome { ok, lines, json })
}

pub const MAX_CHI: u32 = 64;

pub fn cmd_chi(n: u32, k: Option<usize>, poly: Option<&str>) -> Result<Outcome> {
    if n > MAX_CHI {
        return Err(Error::InvalidInput(format!("n must be at most {MAX_CHI}")));
    }
    let op = chi(n);
    let (lines, result) = match (k, poly) {
        (None, None) => (vec![op.to_string()], None),
        (Some(k), Some(text)) => {
            check_k(k)?;
            let p = Polynomial::parse(k, text)?;
            let r = apply_op(&op, &p)?;
            (vec![r.to_string()], Some(r.to_string()))
        }
        _ => return Err(Error::InvalidInput("give both k and a polynomial, or neither".into())),
    };
    let json = json!({
        "command": "chi",
        "inputs": { "n": n, "k": k, "poly": poly },
        "dims": { "sequences": op.len() },
        "verdicts": {},
        "operation": op.to_string(),
        "result": result,
    });
    Ok(Outcome { ok: true, lines, json })
}

pub fn cmd_lattice(
    cfg: &RunConfig,
    dot: Option<&std::path::Path>,
    generators: Option<&std::path::Path>,
) -> Result<Outcome> {
    let lists = match generators {
        Some(p) => GeneratorLists::parse(4, &std::fs::read_to_string(p)?)?,
        None => GeneratorLists::builtin(),
    };
    let qb = cfg.quotient(4, 8)?;
    let report = verify_lattice(&qb, &lists, cfg.seed)?;
    let mut lines = Vec::new();
    for n in &report.nodes {
        lines.push(format!("submodule {} dim {}", n.name, n.dim));
    }
    for e in &report.edges {
        lines.push(format!("{} / {} = {} (dim {})", e.upper, e.lower, e.label, e.quotient_dim));
    }
    lines.push(format!(
        "composition factors {}",
        report.composition.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
    ));
    let failure = report.first_failure();
    match &failure {
        None => lines.push(report.summary()),
        Some(f) => lines.push(format!("FAILED: {f}")),
    }
    if let Some(path) = dot {
        std::fs::write(path, lattice_to_dot(&report))?;
    }
    let json = json!({
        "command": "lattice",
        "inputs": { "dot": dot.map(|p| p.display().to_string()), "seed": cfg.seed },
        "dims": report.nodes.iter().map(|n| (n.name.clone(), json!(n.dim))).collect::<serde_json::Map<_, _>>(),
        "verdicts": {
            "passed": failure.is_none(),
            "first_failure": failure,
            "checks": report.checks.iter().map(|c| (c.name.clone(), json!(c.passed))).collect::<serde_json::Map<_, _>>(),
        },
        "composition": report.composition,
    });
    Ok(Outcome { ok: failure.is_none(), lines, json })
}
