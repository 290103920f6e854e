//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library crates and returns the process exit code.
//!
//! Exit codes: 0 success (ISO, ENCODABLE), 1 negative answer (NONISO,
//! EXCLUDED), 2 contract violation, 3 search budget exhausted, 64 parse or
//! input error.

mod named;

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use classifier::{classify, SolverRef};
use encodings::{
    builtin_encodings, find_encoding_map_with, is_simple_path_encoding, normalize_for_reduction, parse_encoding,
    reduce_into_class, Encoding, EncodingError,
};
use graph_core::gen::{random_bipartite, random_graph, shuffled};
use graph_core::{parse_graph, write_graph, Budget, ColorTable, ColoredGraph, DEFAULT_BUDGET};
use iso_engines::{
    bounded_color_valence_iso_with, brute_force_iso, double_star_kt_iso_with, gen_color_valence_iso_with,
    h1b0_ks_iso_with, p5_kt_iso_with, Decision, IsoError, SolverOptions,
};
use moddecomp::{
    decomposition_invariant, quotient, ClassicalFunctor, DecompositionFunctor, DegreeDependenceFunctor,
    InvariantValue, KeepOne, ModError,
};
use permgroup::{canonical_form, ir, ir_iso_with, IrOptions, Permutation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use named::parse_named;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_CONTRACT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_PARSE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "isokit", version, about = "Graph isomorphism toolkit for hereditary graph classes")]
struct Cli {
    /// Search node budget; defaults to $ISOKIT_BUDGET or 50000000.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Seed for randomized generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Decide isomorphism. Exit 0 ISO, 1 NONISO, 2 contract, 3 budget, 64 parse.
    Iso {
        /// brute | ir | blv:c | gcv:c | dstar:s,t | p5:t | h1b0:b,s
        #[arg(long, default_value = "ir")]
        engine: String,
        g1: String,
        g2: String,
    },
    /// Automorphism group order and generators. Exit 0, 3 budget, 64 parse.
    Aut { graph: String },
    /// Stable coloring classes, one per line. Exit 0, 64 parse.
    Refine { graph: String },
    /// Module family, quotient and recursion trace. Exit 0, 2 contract, 64 parse.
    Moddecomp {
        graph: String,
        /// classical | degdep:c
        #[arg(long, default_value = "classical")]
        functor: String,
    },
    /// Search for an encoding map. Exit 0 ENCODABLE, 1 EXCLUDED, 3 budget, 64 parse.
    EncodeCheck {
        /// Encoding file, or builtin:<name>
        #[arg(long)]
        encoding: String,
        #[arg(long)]
        graph: String,
    },
    /// Reduce a graph into the class of a simple path encoding. Exit 0, 2 contract, 64 parse.
    Reduce {
        #[arg(long)]
        encoding: String,
        #[arg(long)]
        graph: String,
        /// Skip normalization by universal vertices.
        #[arg(long)]
        no_normalize: bool,
    },
    /// Complexity status of the class defined by two forbidden graphs. Exit 0, 2 contract, 64 parse.
    Classify {
        h1: String,
        h2: String,
        #[arg(long)]
        json: bool,
    },
    /// Complete invariant from the classical decomposition. Exit 0, 2 contract, 64 parse.
    Invariant {
        #[arg(required = true)]
        graphs: Vec<String>,
    },
    /// Write a generated graph. Exit 0, 64 parse.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// Named graph, e.g. P5, K1,3, 2K2+K1, H(1,0,2,0), co-C5.
    Named { spec: String },
    /// Erdos-Renyi graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
    /// Random bipartite graph on sides of size a and b.
    Bipartite {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
    /// Random relabeling of a graph file.
    Shuffle { graph: String },
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn parse(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_PARSE, msg: msg.into() }
    }

    fn contract(msg: impl Into<String>) -> Self {
        Failure { code: EXIT_CONTRACT, msg: msg.into() }
    }

    fn budget() -> Self {
        Failure { code: EXIT_BUDGET, msg: "budget exhausted".into() }
    }
}

impl From<IsoError> for Failure {
    fn from(e: IsoError) -> Self {
        match e {
            IsoError::Budget => Failure::budget(),
            e => Failure::contract(e.to_string()),
        }
    }
}

impl From<ModError> for Failure {
    fn from(e: ModError) -> Self {
        Failure::contract(e.to_string())
    }
}

impl From<EncodingError> for Failure {
    fn from(e: EncodingError) -> Self {
        match e {
            EncodingError::Parse { .. } => Failure::parse(e.to_string()),
            EncodingError::Budget | EncodingError::Iso(IsoError::Budget) => Failure::budget(),
            e => Failure::contract(e.to_string()),
        }
    }
}

impl From<graph_core::BudgetExhausted> for Failure {
    fn from(_: graph_core::BudgetExhausted) -> Self {
        Failure::budget()
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_CONTRACT, msg: format!("write failed: {e}") }
    }
}

type Res = Result<i32, Failure>;

/// Runs the CLI on `args` (program name first), writing results to `out`.
/// Diagnostics go to stderr.
pub fn run(args: &[String], out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_PARSE,
            };
            if code == EXIT_OK {
                let _ = write!(out, "{}", e.render());
            } else {
                eprint!("{}", e.render());
            }
            return code;
        }
    };
    let budget = match cli.budget {
        Some(b) => Budget::new(b),
        None => Budget::from_env_or(DEFAULT_BUDGET),
    };
    let mut ctx = Ctx { budget, seed: cli.seed, table: ColorTable::new(), out };
    match ctx.dispatch(cli.cmd) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("isokit: {}", f.msg);
            f.code
        }
    }
}

struct Ctx<'a> {
    budget: Budget,
    seed: u64,
    /// Shared by every graph read in one invocation, so color ids agree.
    table: ColorTable,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn dispatch(&mut self, cmd: Cmd) -> Res {
        match cmd {
            Cmd::Iso { engine, g1, g2 } => self.iso(&engine, &g1, &g2),
            Cmd::Aut { graph } => self.aut(&graph),
            Cmd::Refine { graph } => self.refine(&graph),
            Cmd::Moddecomp { graph, functor } => self.moddecomp(&graph, &functor),
            Cmd::EncodeCheck { encoding, graph } => self.encode_check(&encoding, &graph),
            Cmd::Reduce { encoding, graph, no_normalize } => self.reduce(&encoding, &graph, no_normalize),
            Cmd::Classify { h1, h2, json } => self.classify(&h1, &h2, json),
            Cmd::Invariant { graphs } => self.invariant(&graphs),
            Cmd::Gen(args) => self.gen(args.kind),
        }
    }

    fn read_graph(&mut self, path: &str) -> Result<ColoredGraph, Failure> {
        let text = read_file(path)?;
        parse_graph(&text, &mut self.table).map_err(|e| Failure::parse(format!("{path}:{}: {}", e.line, e.msg)))
    }

    fn iso(&mut self, engine: &str, p1: &str, p2: &str) -> Res {
        let spec = parse_engine(engine)?;
        let g1 = self.read_graph(p1)?;
        let g2 = self.read_graph(p2)?;
        let b = &self.budget;
        let opts = SolverOptions::new(b);
        let (iso, witness, route) = match spec {
            Engine::Brute => with_witness(brute_force_iso(&g1, &g2)?),
            Engine::Ir => with_witness(ir_iso_with(&g1, &g2, &IrOptions { budget: Some(b), ..Default::default() })?),
            Engine::Blv(c) => with_witness(bounded_color_valence_iso_with(&g1, &g2, c, b)?),
            Engine::Gcv(c) => (gen_color_valence_iso_with(&g1, &g2, c, b)?, None, None),
            Engine::Dstar(s, t) => with_route(double_star_kt_iso_with(&g1, &g2, s, t, &opts)?),
            Engine::P5(t) => with_route(p5_kt_iso_with(&g1, &g2, t, &opts)?),
            Engine::H1b0(bb, s) => with_route(h1b0_ks_iso_with(&g1, &g2, bb, s, &opts)?),
        };
        writeln!(self.out, "{}", if iso { "ISO" } else { "NONISO" })?;
        if let Some(p) = witness {
            writeln!(self.out, "witness {p}")?;
        }
        if let Some(r) = route {
            writeln!(self.out, "route {r}")?;
        }
        writeln!(self.out, "vertices {} {}", g1.n(), g2.n())?;
        writeln!(self.out, "edges {} {}", g1.edge_count(), g2.edge_count())?;
        writeln!(self.out, "nodes {}", self.budget.used())?;
        Ok(if iso { EXIT_OK } else { EXIT_NEGATIVE })
    }

    fn aut(&mut self, path: &str) -> Res {
        let g = self.read_graph(path)?;
        let outcome = ir::search(&g, &IrOptions { budget: Some(&self.budget), ..Default::default() })?;
        writeln!(self.out, "order {}", outcome.group.order())?;
        for p in outcome.group.generators() {
            writeln!(self.out, "generator {p}")?;
        }
        for orbit in outcome.group.orbits() {
            writeln!(self.out, "orbit {}", join(&orbit))?;
        }
        writeln!(self.out, "nodes {}", outcome.nodes)?;
        Ok(EXIT_OK)
    }

    fn refine(&mut self, path: &str) -> Res {
        let g = self.read_graph(path)?;
        let st = refinement::naive_refine(&g);
        for class in st.classes.iter().filter(|c| !c.is_empty()) {
            writeln!(self.out, "{}", join(class))?;
        }
        Ok(EXIT_OK)
    }

    fn moddecomp(&mut self, path: &str, functor: &str) -> Res {
        let g = self.read_graph(path)?;
        let functor = parse_functor(functor)?;
        let fam = functor.decompose(&g)?;
        writeln!(self.out, "functor {}", functor.name())?;
        for (m, &nt) in fam.modules.iter().zip(&fam.nontrivial) {
            writeln!(self.out, "module {} {}", if nt { "nontrivial" } else { "trivial" }, join(m))?;
        }
        let mut prime = |h: &ColoredGraph, _: &mut ColorTable| Ok(certificate_invariant(h));
        let mut invs = Vec::with_capacity(fam.modules.len());
        for (m, &nt) in fam.modules.iter().zip(&fam.nontrivial) {
            invs.push(if nt {
                Some(decomposition_invariant(&g.induced(m), functor.as_ref(), &KeepOne, &mut prime, &mut self.table)?.0)
            } else {
                None
            });
        }
        if fam.has_nontrivial() {
            let q = quotient(&g, &fam, &KeepOne, &invs, &mut self.table)?;
            writeln!(self.out, "quotient")?;
            write!(self.out, "{}", write_graph(&q, &self.table))?;
        }
        let (inv, stats) = decomposition_invariant(&g, functor.as_ref(), &KeepOne, &mut prime, &mut self.table)?;
        for line in &stats.trace {
            writeln!(self.out, "trace {line}")?;
        }
        writeln!(self.out, "prime_calls {}", stats.prime_calls)?;
        writeln!(self.out, "invariant {inv}")?;
        Ok(EXIT_OK)
    }

    fn load_encoding(&self, spec: &str) -> Result<Encoding, Failure> {
        if let Some(name) = spec.strip_prefix("builtin:") {
            return builtin_encodings()
                .into_iter()
                .find(|(n, _)| *n == name)
                .map(|(_, e)| e)
                .ok_or_else(|| Failure::parse(format!("unknown builtin encoding {name}")));
        }
        let text = read_file(spec)?;
        parse_encoding(&text).map_err(|e| match e {
            EncodingError::Parse { line, msg } => Failure::parse(format!("{spec}:{line}: {msg}")),
            e => e.into(),
        })
    }

    fn encode_check(&mut self, enc: &str, path: &str) -> Res {
        let enc = self.load_encoding(enc)?;
        let g = self.read_graph(path)?;
        let found = find_encoding_map_with(&g, &enc, &self.budget)?;
        match found.map {
            Some(map) => {
                writeln!(self.out, "ENCODABLE")?;
                let pairs: Vec<String> = map.iter().enumerate().map(|(v, &x)| format!("{v}:{}", enc.name(x))).collect();
                writeln!(self.out, "map {}", pairs.join(" "))?;
                writeln!(self.out, "nodes {}", found.nodes)?;
                Ok(EXIT_OK)
            }
            None => {
                writeln!(self.out, "EXCLUDED")?;
                writeln!(self.out, "nodes {}", found.nodes)?;
                Ok(EXIT_NEGATIVE)
            }
        }
    }

    fn reduce(&mut self, enc: &str, path: &str, no_normalize: bool) -> Res {
        let enc = self.load_encoding(enc)?;
        let g = self.read_graph(path)?;
        let w = is_simple_path_encoding(&enc)
            .ok_or_else(|| Failure::contract("encoding has no simple path witness"))?;
        let input = if no_normalize { g } else { normalize_for_reduction(&g) };
        let r = reduce_into_class(&input, &enc, &w)?;
        write!(self.out, "{}", write_graph(&r.graph, &self.table))?;
        Ok(EXIT_OK)
    }

    fn classify(&mut self, p1: &str, p2: &str, json: bool) -> Res {
        let h1 = self.read_graph(p1)?;
        let h2 = self.read_graph(p2)?;
        let v = classify(&h1, &h2).map_err(|e| Failure::contract(e.to_string()))?;
        if json {
            let trail: Vec<serde_json::Value> =
                v.trail.iter().map(|s| serde_json::json!({ "rule": s.rule, "cite": s.cite })).collect();
            let doc = serde_json::json!({ "status": v.status.as_str(), "trail": trail });
            writeln!(self.out, "{doc}")?;
        } else {
            writeln!(self.out, "status {}", v.status.as_str())?;
            for s in &v.trail {
                writeln!(self.out, "step {} [{}]", s.rule, s.cite)?;
            }
            if let Some(sol) = v.solver {
                let engine = match sol {
                    SolverRef::DoubleStar { s, t } => format!("dstar:{s},{t}"),
                    SolverRef::P5 { t } => format!("p5:{t}"),
                    SolverRef::H1b0 { b, s } => format!("h1b0:{b},{s}"),
                };
                writeln!(self.out, "solver {engine}")?;
            }
        }
        Ok(EXIT_OK)
    }

    fn invariant(&mut self, paths: &[String]) -> Res {
        let mut prime = |h: &ColoredGraph, _: &mut ColorTable| Ok(certificate_invariant(h));
        for p in paths {
            let g = self.read_graph(p)?;
            let (inv, _) = decomposition_invariant(&g, &ClassicalFunctor, &KeepOne, &mut prime, &mut self.table)?;
            writeln!(self.out, "{p} {inv}")?;
        }
        Ok(EXIT_OK)
    }

    fn gen(&mut self, kind: GenKind) -> Res {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let g = match kind {
            GenKind::Named { spec } => parse_named(&spec).map_err(Failure::parse)?,
            GenKind::Random { n, p } => random_graph(check_size(n)?, check_p(p)?, &mut rng),
            GenKind::Bipartite { a, b, p } => random_bipartite(check_size(a)?, check_size(b)?, check_p(p)?, &mut rng),
            GenKind::Shuffle { graph } => {
                let g = self.read_graph(&graph)?;
                shuffled(&g, &mut rng)
            }
        };
        write!(self.out, "{}", write_graph(&g, &self.table))?;
        Ok(EXIT_OK)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Engine {
    Brute,
    Ir,
    Blv(usize),
    Gcv(usize),
    Dstar(usize, usize),
    P5(usize),
    H1b0(usize, usize),
}

fn parse_engine(s: &str) -> Result<Engine, Failure> {
    let (name, params) = s.split_once(':').unwrap_or((s, ""));
    let nums: Vec<usize> = if params.is_empty() {
        Vec::new()
    } else {
        params
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| Failure::parse(format!("bad engine parameter in {s}"))))
            .collect::<Result<_, _>>()?
    };
    let e = match (name, nums.as_slice()) {
        ("brute", []) => Engine::Brute,
        ("ir", []) => Engine::Ir,
        ("blv", [c]) => Engine::Blv(*c),
        ("gcv", [c]) => Engine::Gcv(*c),
        ("dstar", [s, t]) => Engine::Dstar(*s, *t),
        ("p5", [t]) => Engine::P5(*t),
        ("h1b0", [b, s]) => Engine::H1b0(*b, *s),
        _ => return Err(Failure::parse(format!("unknown engine {s}"))),
    };
    Ok(e)
}

fn parse_functor(s: &str) -> Result<Box<dyn DecompositionFunctor>, Failure> {
    if s == "classical" {
        return Ok(Box::new(ClassicalFunctor));
    }
    if let Some(c) = s.strip_prefix("degdep:") {
        let c = c.parse().map_err(|_| Failure::parse(format!("bad functor parameter in {s}")))?;
        return Ok(Box::new(DegreeDependenceFunctor { c }));
    }
    Err(Failure::parse(format!("unknown functor {s}")))
}

type IsoAnswer = (bool, Option<Permutation>, Option<String>);

fn with_witness(w: Option<Permutation>) -> IsoAnswer {
    (w.is_some(), w, None)
}

fn with_route(d: Decision) -> IsoAnswer {
    (d.iso, None, Some(d.route))
}

/// Prime invariant: the canonical certificate bytes.
fn certificate_invariant(g: &ColoredGraph) -> InvariantValue {
    InvariantValue(canonical_form(g).certificate.to_bytes())
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::parse(format!("{path}: {e}")))
}

fn check_size(n: usize) -> Result<usize, Failure> {
    if n > graph_core::vertex_cap() {
        return Err(Failure::parse(format!("{n} vertices exceeds the cap of {}", graph_core::vertex_cap())));
    }
    Ok(n)
}

fn check_p(p: f64) -> Result<f64, Failure> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Failure::parse(format!("edge probability {p} is outside [0, 1]")));
    }
    Ok(p)
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
