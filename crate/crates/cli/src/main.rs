use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use eqadj_core::geometry::format::{parse_udg, parse_vectors, write_udg, write_vectors};
use eqadj_core::geometry::generate::{random_signrank3, random_udg};
use eqadj_core::graph::format::{parse_bipartite, parse_graph, write_bipartite, AnyGraph};
use eqadj_core::graph::generate::{
    biclique, cycle, half_graph, path, random_bipartite, random_connected_bipartite, random_equivalence,
    subdivided_star,
};
use eqadj_core::graph::Adjacency;
use eqadj_core::gyarfas::GyarfasForest;
use eqadj_core::labeling::{build_labels, ceil_log2, LabelError, LabelSet, DEFAULT_CEILING};
use eqadj_core::oracles::{
    chain_index, chain_index_graph, contains_induced, contains_induced_bipartite, degeneracy, equivalence_partition,
    find_edge_asteroid_triple, NeighbourhoodMode, OracleError, DEFAULT_CHAIN_CAP,
};
use eqadj_core::protocol::{run_all_pairs, AllPairsReport, GyarfasProtocol, Protocol, SignRank3Protocol, UdgProtocol};
use eqadj_core::scalar::Scalar;
use eqadj_core::Rational;

/// Largest graph the exhaustive chain-index search accepts.
const ORACLE_CAP: usize = 64;
const GEOMETRIC_CEILING: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "eqadj", version, about = "Gyárfás decompositions and Equality-oracle adjacency protocols")]
struct Cli {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Primary output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest protocol cost `label` accepts; 16 for gyarfas, 64 for the geometric protocols.
    #[arg(long, global = true)]
    cost_ceiling: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Generate an instance file.
    Gen(GenArgs),
    /// Print the decomposition of a bipartite graph.
    Decompose { input: PathBuf },
    /// Run a protocol on every pair and compare with adjacency.
    Protocol {
        #[arg(long, value_enum, default_value_t = Proto::Gyarfas)]
        proto: Proto,
        /// Also write the cost histogram as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        input: PathBuf,
    },
    /// Build a label file.
    Label {
        #[arg(long, value_enum, default_value_t = Proto::Gyarfas)]
        proto: Proto,
        input: PathBuf,
    },
    /// Decode every pair of a label file and compare with the instance.
    LabelVerify {
        #[arg(long, value_enum, default_value_t = Proto::Gyarfas)]
        proto: Proto,
        labels: PathBuf,
        input: PathBuf,
    },
    /// Brute-force structural checks.
    Oracle {
        #[arg(value_enum)]
        oracle: OracleKind,
        input: PathBuf,
        /// Pattern graph for `induced`.
        #[arg(long)]
        pattern: Option<PathBuf>,
        #[arg(long)]
        open_neighbourhoods: bool,
        #[arg(long, default_value_t = DEFAULT_CHAIN_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Proto {
    Gyarfas,
    Signrank3,
    Udg,
}

impl Proto {
    fn default_ceiling(self) -> usize {
        match self {
            Proto::Gyarfas => DEFAULT_CEILING,
            Proto::Signrank3 | Proto::Udg => GEOMETRIC_CEILING,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OracleKind {
    Ch,
    Eat,
    Induced,
    Degeneracy,
    Equivgraph,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    #[value(name = "S", alias = "s")]
    S,
    Biclique,
    Half,
    Random,
    Connected,
    Equivalence,
    Udg,
    Signrank3,
}

#[derive(clap::Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    nl: Option<usize>,
    #[arg(long)]
    nr: Option<usize>,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Radius for `udg`.
    #[arg(long, default_value = "2")]
    r: String,
    /// Side of the square box for `udg`; about one point per unit cell by default.
    #[arg(long)]
    width: Option<String>,
    /// Number of bicliques for `equivalence`.
    #[arg(long)]
    count: Option<usize>,
}

/// Failure classes with their exit codes.
enum Failure {
    Verification(String),
    Usage(anyhow::Error),
    Capacity(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

type CmdResult = Result<String, Failure>;

fn need(v: Option<usize>, name: &str) -> anyhow::Result<usize> {
    v.ok_or_else(|| anyhow!("--{name} is required for this family"))
}

fn scalar(s: &str) -> anyhow::Result<Rational> {
    Rational::parse_scalar(s).ok_or_else(|| anyhow!("not a number: `{s}`"))
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn cmd_gen(a: &GenArgs, seed: u64) -> anyhow::Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = match a.family {
        Family::Path => path(need(a.t, "t")?),
        Family::Cycle => cycle(need(a.t, "t")?)?,
        Family::S => subdivided_star(need(a.s, "s")?, need(a.t, "t")?),
        Family::Biclique => biclique(need(a.t, "t")?),
        Family::Half => half_graph(need(a.k, "k")?),
        Family::Random => random_bipartite(need(a.nl, "nl")?, need(a.nr, "nr")?, a.p, &mut rng),
        Family::Connected => random_connected_bipartite(need(a.nl, "nl")?, need(a.nr, "nr")?, a.p, &mut rng)?,
        Family::Equivalence => random_equivalence(need(a.count, "count")?, a.k.unwrap_or(4), &mut rng),
        Family::Udg => {
            let n = need(a.n, "n")?;
            let width = match &a.width {
                Some(w) => scalar(w)?,
                None => Rational::from_ratio((n as f64).sqrt().round().max(1.0) as i64, 1),
            };
            let r = scalar(&a.r)?;
            if !num_traits::Signed::is_positive(&r) || !num_traits::Signed::is_positive(&width) {
                bail!("--r and --width must be positive");
            }
            return Ok(write_udg(&random_udg(n, r, width, &mut rng)));
        }
        Family::Signrank3 => {
            let v = random_signrank3::<Rational, _>(need(a.nl, "nl")?, need(a.nr, "nr")?, &mut rng);
            return Ok(write_vectors(&v));
        }
    };
    Ok(write_bipartite(&g))
}

fn cmd_decompose(input: &Path) -> CmdResult {
    let g = Arc::new(parse_bipartite(&read(input)?).context("parse failure")?);
    let forest = GyarfasForest::new(g);
    let mut out = String::new();
    let mut failures = 0;
    let mut offset = 0;
    for (i, tree) in forest.trees.iter().enumerate() {
        writeln!(out, "tree={i} root={} bags={} depth={}", tree.root_vertex(), tree.bags().len(), tree.max_depth()).unwrap();
        out.push_str(&tree.dump_with_offset(offset));
        for b in 0..tree.bags().len() {
            writeln!(out, "back_degree bag={} value={}", b + offset, tree.back_degree(b, false)).unwrap();
        }
        let report = tree.verify();
        for v in &report.violations {
            writeln!(out, "violation {v}").unwrap();
        }
        failures += report.violations.len();
        offset += tree.bags().len();
    }
    writeln!(out, "trees={}", forest.trees.len()).unwrap();
    writeln!(out, "bags={offset}").unwrap();
    if failures == 0 {
        out.push_str("verify: PASS\n");
        Ok(out)
    } else {
        out.push_str("verify: FAIL\n");
        Err(Failure::Verification(out))
    }
}

/// Dispatches on the instance type named by `--proto`.
fn with_protocol<R>(proto: Proto, input: &Path, f: impl ProtocolFn<R>) -> anyhow::Result<R> {
    let text = read(input)?;
    let mismatch = |e: &dyn std::fmt::Display| anyhow!("instance does not match --proto {}: {e}", format!("{proto:?}").to_lowercase());
    match proto {
        Proto::Gyarfas => {
            let g = parse_bipartite(&text).map_err(|e| mismatch(&e))?;
            Ok(f.call(&GyarfasProtocol::new(g)))
        }
        Proto::Signrank3 => {
            let v = parse_vectors::<Rational>(&text).map_err(|e| mismatch(&e))?;
            if v.a.first().is_some_and(|a| a.len() != 3) {
                return Err(mismatch(&"vectors must be 3-dimensional"));
            }
            let p = SignRank3Protocol::new(v.a, v.b).map_err(|e| mismatch(&e))?;
            Ok(f.call(&p))
        }
        Proto::Udg => {
            let u = parse_udg::<Rational>(&text).map_err(|e| mismatch(&e))?;
            Ok(f.call(&UdgProtocol::new(u)))
        }
    }
}

trait ProtocolFn<R> {
    fn call<P: Protocol>(self, p: &P) -> R;
}

struct AllPairs;

impl ProtocolFn<AllPairsReport> for AllPairs {
    fn call<P: Protocol>(self, p: &P) -> AllPairsReport {
        run_all_pairs(p)
    }
}

struct Build(usize);

impl ProtocolFn<Result<LabelSet, LabelError>> for Build {
    fn call<P: Protocol>(self, p: &P) -> Result<LabelSet, LabelError> {
        build_labels(p, self.0)
    }
}

struct Truth;

impl ProtocolFn<(usize, Vec<(usize, usize, bool)>)> for Truth {
    fn call<P: Protocol>(self, p: &P) -> (usize, Vec<(usize, usize, bool)>) {
        (p.vertex_count(), p.pairs().into_iter().map(|(x, y)| (x, y, p.adjacent(x, y))).collect())
    }
}

fn cmd_protocol(proto: Proto, input: &Path, csv: Option<&Path>) -> CmdResult {
    let r = with_protocol(proto, input, AllPairs)?;
    let mut out = String::new();
    writeln!(out, "pairs={}", r.pairs).unwrap();
    writeln!(out, "mismatches={}", r.mismatches.len()).unwrap();
    writeln!(out, "max_cost={}", r.max_cost).unwrap();
    writeln!(out, "max_bits={}", r.max_bits).unwrap();
    writeln!(out, "max_eq_calls={}", r.max_eq_calls).unwrap();
    writeln!(out, "max_recursion_depth={}", r.max_recursion_depth).unwrap();
    for (c, k) in &r.histogram {
        writeln!(out, "histogram cost={c} count={k}").unwrap();
    }
    for (x, y) in r.mismatches.iter().take(10) {
        writeln!(out, "mismatch x={x} y={y}").unwrap();
    }
    if let Some(path) = csv {
        std::fs::write(path, r.histogram_csv()).with_context(|| format!("cannot write {}", path.display()))?;
    }
    if r.is_correct() {
        out.push_str("verdict=PASS\n");
        Ok(out)
    } else {
        out.push_str("verdict=FAIL\n");
        Err(Failure::Verification(out))
    }
}

fn cmd_label(proto: Proto, input: &Path, ceiling: usize, out: Option<&Path>) -> CmdResult {
    let Some(out) = out else { return Err(Failure::Usage(anyhow!("label requires --out"))) };
    let set = match with_protocol(proto, input, Build(ceiling))? {
        Ok(s) => s,
        Err(e @ LabelError::CeilingExceeded { .. }) => return Err(Failure::Capacity(e.to_string())),
        Err(e) => return Err(Failure::Verification(format!("error={e}\n"))),
    };
    std::fs::write(out, set.to_bytes()).with_context(|| format!("cannot write {}", out.display()))?;
    let m = set.measure();
    Ok(format!(
        "n={}\ncost={}\nnodes={}\nmax_bits={}\nmean_bits={:.3}\nbits_per_log_n={:.3}\n",
        m.n,
        set.cost(),
        set.nodes().len(),
        m.max_bits,
        m.mean_bits,
        m.bits_per_log_n
    ))
}

fn cmd_label_verify(proto: Proto, labels: &Path, input: &Path) -> CmdResult {
    let bytes = std::fs::read(labels).with_context(|| format!("cannot read {}", labels.display()))?;
    let set = match LabelSet::from_bytes(&bytes) {
        Ok(s) => s,
        Err(e) => return Err(Failure::Verification(format!("decode_error={e}\nverdict=FAIL\n"))),
    };
    let (n, truth) = with_protocol(proto, input, Truth)?;
    if set.n() != n {
        return Err(Failure::Verification(format!(
            "error=label file has {} vertices, instance has {n}\nverdict=FAIL\n",
            set.n()
        )));
    }
    let mut wrong = 0;
    for &(x, y, adj) in &truth {
        match set.decode(x, y) {
            Ok(s) if s.is_plus() == adj => {}
            Ok(_) => wrong += 1,
            Err(e) => return Err(Failure::Verification(format!("decode_error={e}\nverdict=FAIL\n"))),
        }
    }
    let m = set.measure();
    let mut out = String::new();
    writeln!(out, "n={n}").unwrap();
    writeln!(out, "pairs={}", truth.len()).unwrap();
    writeln!(out, "mismatches={wrong}").unwrap();
    writeln!(out, "cost={}", set.cost()).unwrap();
    writeln!(out, "log_n={}", ceil_log2(n)).unwrap();
    writeln!(out, "max_bits={}", m.max_bits).unwrap();
    writeln!(out, "mean_bits={:.3}", m.mean_bits).unwrap();
    writeln!(out, "bits_per_log_n={:.3}", m.bits_per_log_n).unwrap();
    if wrong == 0 {
        out.push_str("verdict=PASS\n");
        Ok(out)
    } else {
        out.push_str("verdict=FAIL\n");
        Err(Failure::Verification(out))
    }
}

fn list(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn capacity(e: OracleError) -> Failure {
    Failure::Capacity(e.to_string())
}

fn cmd_oracle(kind: OracleKind, input: &Path, pattern: Option<&Path>, open: bool, cap: usize) -> CmdResult {
    let g = parse_graph(&read(input)?).context("parse failure")?;
    let n = match &g {
        AnyGraph::Bipartite(b) => b.n(),
        AnyGraph::General(h) => h.vertex_count(),
    };
    let mut out = format!("oracle={}\nn={n}\n", format!("{kind:?}").to_lowercase());
    match kind {
        OracleKind::Ch => {
            if n > ORACLE_CAP {
                return Err(Failure::Capacity(format!("{n} vertices, chain index limited to {ORACLE_CAP}")));
            }
            let c = match &g {
                AnyGraph::Bipartite(b) => chain_index(b, cap),
                AnyGraph::General(h) => chain_index_graph(h, cap),
            };
            writeln!(out, "value={}\ncapped={}\nwitness_a={}\nwitness_b={}", c.value, c.capped, list(&c.witness.a), list(&c.witness.b))
                .unwrap();
        }
        OracleKind::Eat => {
            let mode = if open { NeighbourhoodMode::Open } else { NeighbourhoodMode::Closed };
            let w = match &g {
                AnyGraph::Bipartite(b) => find_edge_asteroid_triple(b, mode),
                AnyGraph::General(h) => find_edge_asteroid_triple(h, mode),
            };
            match w {
                Some(w) => {
                    out.push_str("result=FOUND\n");
                    for (i, (u, v)) in w.edges.iter().enumerate() {
                        writeln!(out, "edge{i}={u}-{v}\npath{i}={}", list(&w.paths[i])).unwrap();
                    }
                }
                None => out.push_str("result=NONE\n"),
            }
        }
        OracleKind::Induced => {
            let Some(p) = pattern else { return Err(Failure::Usage(anyhow!("induced requires --pattern"))) };
            let h = parse_graph(&read(p)?).context("pattern parse failure")?;
            let e = match (&g, &h) {
                (AnyGraph::Bipartite(a), AnyGraph::Bipartite(b)) => contains_induced_bipartite(a, b),
                (AnyGraph::Bipartite(a), AnyGraph::General(b)) => contains_induced(a, b),
                (AnyGraph::General(a), AnyGraph::Bipartite(b)) => contains_induced(a, b),
                (AnyGraph::General(a), AnyGraph::General(b)) => contains_induced(a, b),
            }
            .map_err(capacity)?;
            match e {
                Some(e) => writeln!(out, "result=FOUND\nembedding={}", list(&e)).unwrap(),
                None => out.push_str("result=NONE\n"),
            }
        }
        OracleKind::Degeneracy => {
            let d = match &g {
                AnyGraph::Bipartite(b) => degeneracy(b),
                AnyGraph::General(h) => degeneracy(h),
            };
            writeln!(out, "value={}\norder={}", d.value, list(&d.order)).unwrap();
        }
        OracleKind::Equivgraph => {
            let AnyGraph::Bipartite(b) = &g else {
                return Err(Failure::Usage(anyhow!("equivgraph needs a bipartite graph")));
            };
            match equivalence_partition(b) {
                Some(parts) => {
                    writeln!(out, "result=YES\nbicliques={}", parts.len()).unwrap();
                    for (i, p) in parts.iter().enumerate() {
                        writeln!(out, "biclique{i}={} | {}", list(&p.left), list(&p.right)).unwrap();
                    }
                }
                None => out.push_str("result=NO\n"),
            }
        }
    }
    Ok(out)
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    let out = cli.out.as_deref();
    match &cli.cmd {
        Cmd::Gen(a) => {
            let text = cmd_gen(a, cli.seed)?;
            emit(&text, out)?;
            Ok(String::new())
        }
        Cmd::Decompose { input } => cmd_decompose(input),
        Cmd::Protocol { proto, csv, input } => cmd_protocol(*proto, input, csv.as_deref()),
        Cmd::Label { proto, input } => cmd_label(*proto, input, cli.cost_ceiling.unwrap_or(proto.default_ceiling()), out),
        Cmd::LabelVerify { proto, labels, input } => cmd_label_verify(*proto, labels, input),
        Cmd::Oracle { oracle, input, pattern, open_neighbourhoods, cap } => {
            cmd_oracle(*oracle, input, pattern.as_deref(), *open_neighbourhoods, *cap)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    // reports go to --out only for commands without a file product
    let report_out = match cli.cmd {
        Cmd::Gen(_) | Cmd::Label { .. } => None,
        _ => cli.out.as_deref(),
    };
    match run(&cli) {
        Ok(text) => match emit(&text, report_out) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        },
        Err(Failure::Verification(text)) => {
            let _ = emit(&text, report_out);
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Capacity(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(3)
        }
    }
}
