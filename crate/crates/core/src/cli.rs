//! Command-line front end. Machine output (graph6, JSON) goes to stdout and diagnostics to
//! stderr. Exit codes: 0 success, 1 verification failure, 2 usage or input error, 3 a value left
//! unknown by the search budget when `--strict` is set.

use crate::bounds::{bounds_report, is_psi_t, ng_report, product_bounds, Known};
use crate::check::{is_t_frugal_coloring, Coloring};
use crate::construct::{
    color_block_graph, color_cartesian_auto, color_cartesian_power_grid, color_clawfree_cubic, color_direct_auto,
    color_greedy, color_lexicographic_auto, color_strong_auto, color_strong_power_grid, color_subcubic, color_torus,
};
use crate::error::Error;
use crate::exact::{alpha_t_frugal_exact, chi_t_frugal_exact, Outcome, SolveBudget};
use crate::graph::{
    grid, parse_edge_list, product, read_graph6_lines, structural_flags, torus, write_graph6, Family, Graph, ProductKind,
};
use crate::reduction::{x3c_to_frugal, X3CInstance};
use crate::tree::alpha_t_frugal_tree;
use crate::Frugality;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const BUDGET_ENV: &str = "FRUGALIS_BUDGET_NODES";

#[derive(Parser, Debug)]
#[command(name = "frugalis", version, about = "Frugal colorings and frugal independent sets of graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args, Debug, Clone)]
struct Budget {
    /// Search-node limit for exact solvers (overrides FRUGALIS_BUDGET_NODES).
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Exit with code 3 when a value is left unknown.
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Write a named family as graph6 lines.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact t-frugal chromatic number.
    Chi {
        #[arg(short, default_value_t = 2)]
        t: usize,
        /// Also print a witness coloring as JSON.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        budget: Budget,
        file: Option<PathBuf>,
    },
    /// t-frugal independence number.
    Alpha {
        #[arg(short, default_value_t = 2)]
        t: usize,
        #[arg(long, value_enum, default_value_t = AlphaMethod::Exact)]
        method: AlphaMethod,
        /// Also print a maximum set as JSON.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        budget: Budget,
        file: Option<PathBuf>,
    },
    /// Emit a certified t-frugal coloring as JSON. Product methods read two graphs and color
    /// their product.
    Color {
        #[arg(short, default_value_t = 2)]
        t: usize,
        #[arg(long, value_enum, default_value_t = ColorMethod::Auto)]
        method: ColorMethod,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        budget: Budget,
        file: Option<PathBuf>,
    },
    /// Exit 0 iff the coloring is t-frugal on the graph.
    Verify {
        #[arg(short, default_value_t = 2)]
        t: usize,
        #[arg(long)]
        coloring: PathBuf,
        graph: Option<PathBuf>,
    },
    /// JSON report of every applicable bound.
    Bounds {
        #[arg(short, default_value_t = 2)]
        t: usize,
        /// Known exact t-frugal chromatic number.
        #[arg(long)]
        chi: Option<usize>,
        /// Known exact t-frugal independence number.
        #[arg(long)]
        alpha: Option<usize>,
        /// Also bound the product of the first two input graphs.
        #[arg(long, value_enum)]
        product: Option<ProductArg>,
        /// Also test membership in Psi_t.
        #[arg(long)]
        psi: bool,
        #[command(flatten)]
        budget: Budget,
        file: Option<PathBuf>,
    },
    /// Nordhaus-Gaddum report for a graph and its complement.
    Ng {
        #[command(flatten)]
        budget: Budget,
        file: Option<PathBuf>,
    },
    /// Build the frugal independent set gadget of an exact-cover instance; prints k.
    #[command(name = "reduce-x3c")]
    ReduceX3c {
        instance: PathBuf,
        #[arg(short, default_value_t = 2)]
        t: usize,
        /// Graph6 output; without it the graph follows k on stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Roles sidecar JSON; defaults to OUTPUT.roles.json.
        #[arg(long)]
        roles: Option<PathBuf>,
    },
    /// Evaluate each graph6 line; JSON lines in input order.
    Batch {
        #[arg(short, default_value_t = 2)]
        t: usize,
        #[arg(long, value_delimiter = ',', default_value = "chi,alpha,bounds")]
        ops: Vec<BatchOp>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Add per-item wall time; output then varies between runs.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        budget: Budget,
        file: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum AlphaMethod {
    Exact,
    Tree,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ColorMethod {
    Auto,
    Exact,
    Greedy,
    Block,
    Subcubic,
    Clawfree,
    Cartesian,
    Strong,
    Direct,
    Lex,
    Torus,
    Grid,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ProductArg {
    Cartesian,
    Strong,
    Direct,
    Lexicographic,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum BatchOp {
    Chi,
    Alpha,
    Bounds,
}

struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 2, msg: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 2, msg: e.to_string() }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: 2, msg: msg.into() }
}

type CliResult = std::result::Result<i32, Failure>;

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run(args: &[String], stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut io = Io { stdin, out: stdout, err: stderr };
    match dispatch(cli.cmd, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "frugalis: {}", f.msg.lines().next().unwrap_or_default());
            f.code
        }
    }
}

fn frugality(t: usize) -> std::result::Result<Frugality, Failure> {
    Frugality::new(t).map_err(Failure::from)
}

fn budget_of(b: &Budget) -> std::result::Result<SolveBudget, Failure> {
    if let Some(n) = b.budget_nodes {
        return Ok(SolveBudget::nodes(n));
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map(SolveBudget::nodes).map_err(|_| usage(format!("{BUDGET_ENV}={v} is not a node count"))),
        Err(_) => Ok(SolveBudget::default()),
    }
}

fn read_text(path: &Option<PathBuf>, io: &mut Io) -> std::result::Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io.stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Graph6 lines, or a single edge list when the first data line is two integers.
fn parse_graphs(text: &str) -> std::result::Result<Vec<Graph>, Failure> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    let is_edge_list = first.is_some_and(|l| {
        let parts: Vec<&str> = l.split_whitespace().collect();
        parts.len() == 2 && parts.iter().all(|p| p.parse::<usize>().is_ok())
    });
    let graphs = if is_edge_list { vec![parse_edge_list(text)?] } else { read_graph6_lines(text)? };
    if graphs.is_empty() {
        return Err(usage("no graph in input"));
    }
    Ok(graphs)
}

fn one_graph(path: &Option<PathBuf>, io: &mut Io) -> std::result::Result<Graph, Failure> {
    let mut gs = parse_graphs(&read_text(path, io)?)?;
    if gs.len() != 1 {
        return Err(usage(format!("expected one graph, found {}", gs.len())));
    }
    Ok(gs.remove(0))
}

fn emit(path: &Option<PathBuf>, text: &str, io: &mut Io) -> std::result::Result<(), Failure> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        _ => io.out.write_all(text.as_bytes()).map_err(Failure::from),
    }
}

fn unknown(strict: bool, io: &mut Io) -> CliResult {
    writeln!(io.out, "unknown")?;
    writeln!(io.err, "search budget exhausted")?;
    Ok(if strict { 3 } else { 0 })
}

fn dispatch(cmd: Cmd, io: &mut Io) -> CliResult {
    match cmd {
        Cmd::Gen { family, params, seed, output } => {
            let graphs = Family::parse(&family, &params, seed)?.generate()?;
            let text: String = graphs.iter().map(|g| write_graph6(g) + "\n").collect();
            emit(&output, &text, io)?;
            Ok(0)
        }
        Cmd::Chi { t, witness, budget, file } => {
            let (t, b) = (frugality(t)?, budget_of(&budget)?);
            let g = one_graph(&file, io)?;
            match chi_t_frugal_exact(&g, t, &b) {
                Outcome::Exact((k, c)) => {
                    writeln!(io.out, "{k}")?;
                    if witness {
                        writeln!(io.out, "{}", c.to_json())?;
                    }
                    Ok(0)
                }
                Outcome::Unknown => unknown(budget.strict, io),
            }
        }
        Cmd::Alpha { t, method, witness, budget, file } => {
            let (t, b) = (frugality(t)?, budget_of(&budget)?);
            let g = one_graph(&file, io)?;
            let result = match method {
                AlphaMethod::Tree => Some(alpha_t_frugal_tree(&g, t)?),
                AlphaMethod::Exact => alpha_t_frugal_exact(&g, t, &b).value(),
            };
            let Some((a, set)) = result else {
                return unknown(budget.strict, io);
            };
            writeln!(io.out, "{a}")?;
            if witness {
                writeln!(io.out, "{}", set.to_json())?;
            }
            Ok(0)
        }
        Cmd::Color { t, method, output, budget, file } => {
            let (t, b) = (frugality(t)?, budget_of(&budget)?);
            let graphs = parse_graphs(&read_text(&file, io)?)?;
            let (g, c) = color_with(method, t, &graphs, &b)?;
            if !is_t_frugal_coloring(&g, &c, t)? {
                return Err(Failure { code: 1, msg: "constructed coloring failed verification".into() });
            }
            emit(&output, &(c.to_json() + "\n"), io)?;
            writeln!(io.err, "palette {} (method {method:?}, t = {})", c.palette(), t.get())?;
            Ok(0)
        }
        Cmd::Verify { t, coloring, graph } => {
            let t = frugality(t)?;
            let text = std::fs::read_to_string(&coloring).map_err(|e| usage(format!("{}: {e}", coloring.display())))?;
            let c = Coloring::from_json(&text)?;
            let g = one_graph(&graph, io)?;
            let ok = is_t_frugal_coloring(&g, &c, t)?;
            writeln!(io.err, "{}", if ok { "valid" } else { "invalid" })?;
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::Bounds { t, chi, alpha, product: prod, psi, budget, file } => {
            let (t, b) = (frugality(t)?, budget_of(&budget)?);
            let graphs = parse_graphs(&read_text(&file, io)?)?;
            let g = &graphs[0];
            let mut doc = json!(bounds_report(g, t, Known { chi, alpha }));
            if prod.is_some() || psi {
                let mut obj = json!({ "bounds": doc });
                if let Some(kind) = prod {
                    let h = graphs.get(1).ok_or_else(|| usage("--product needs two input graphs"))?;
                    match product_bounds(product_kind(kind), g, h, &b) {
                        Ok(entries) => obj["product_bounds"] = json!(entries),
                        Err(Error::BudgetExhausted) => obj["product_bounds"] = json!({ "status": "unknown" }),
                        Err(e) => return Err(e.into()),
                    }
                }
                if psi {
                    obj["psi"] = match is_psi_t(g, t, &b) {
                        Outcome::Exact(Some(parts)) => json!({ "status": "exact", "member": true, "parts": parts }),
                        Outcome::Exact(None) => json!({ "status": "exact", "member": false }),
                        Outcome::Unknown => json!({ "status": "unknown" }),
                    };
                }
                doc = obj;
            }
            writeln!(io.out, "{doc}")?;
            Ok(0)
        }
        Cmd::Ng { budget, file } => {
            let b = budget_of(&budget)?;
            let g = one_graph(&file, io)?;
            match ng_report(&g, &b) {
                Ok(r) => {
                    writeln!(io.out, "{}", json!(r))?;
                    Ok(0)
                }
                Err(Error::BudgetExhausted) => {
                    writeln!(io.out, "{}", json!({ "status": "unknown" }))?;
                    Ok(if budget.strict { 3 } else { 0 })
                }
                Err(e) => Err(e.into()),
            }
        }
        Cmd::ReduceX3c { instance, t, output, roles } => {
            let t = frugality(t)?;
            let text = std::fs::read_to_string(&instance).map_err(|e| usage(format!("{}: {e}", instance.display())))?;
            let out = x3c_to_frugal(&X3CInstance::from_json(&text)?, t)?;
            writeln!(io.out, "{}", out.k)?;
            let g6 = write_graph6(&out.graph) + "\n";
            match &output {
                Some(p) => {
                    std::fs::write(p, g6)?;
                    let sidecar = roles.clone().unwrap_or_else(|| PathBuf::from(format!("{}.roles.json", p.display())));
                    std::fs::write(sidecar, out.roles_json() + "\n")?;
                }
                None => {
                    io.out.write_all(g6.as_bytes())?;
                    if let Some(r) = &roles {
                        std::fs::write(r, out.roles_json() + "\n")?;
                    }
                }
            }
            Ok(0)
        }
        Cmd::Batch { t, ops, jobs, timings, budget, file } => {
            let (t, b) = (frugality(t)?, budget_of(&budget)?);
            let text = read_text(&file, io)?;
            let lines: Vec<(usize, &str)> =
                text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with(">>")).collect();
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| usage(e.to_string()))?;
            let records: Vec<Value> = pool.install(|| lines.par_iter().map(|&(no, line)| batch_record(no, line, t, &ops, &b, timings)).collect());
            let mut failed = false;
            let mut unknown_seen = false;
            for r in &records {
                failed |= r.get("error").is_some();
                unknown_seen |= r.to_string().contains(r#""status":"unknown""#);
                writeln!(io.out, "{r}")?;
            }
            if failed {
                writeln!(io.err, "some input lines could not be parsed")?;
                return Ok(2);
            }
            Ok(if budget.strict && unknown_seen { 3 } else { 0 })
        }
    }
}

fn product_kind(p: ProductArg) -> ProductKind {
    match p {
        ProductArg::Cartesian => ProductKind::Cartesian,
        ProductArg::Strong => ProductKind::Strong,
        ProductArg::Direct => ProductKind::Direct,
        ProductArg::Lexicographic => ProductKind::Lexicographic,
    }
}

fn batch_record(no: usize, line: &str, t: Frugality, ops: &[BatchOp], b: &SolveBudget, timings: bool) -> Value {
    let start = Instant::now();
    let g = match crate::graph::parse_graph6(line) {
        Ok(g) => g,
        Err(e) => return json!({ "line": no, "error": e.to_string() }),
    };
    let mut rec = json!({ "line": no, "n": g.n(), "m": g.m() });
    for op in ops {
        match op {
            BatchOp::Chi => rec["chi"] = json!(chi_t_frugal_exact(&g, t, b).map(|(k, _)| k)),
            BatchOp::Alpha => rec["alpha"] = json!(alpha_t_frugal_exact(&g, t, b).map(|(a, _)| a)),
            BatchOp::Bounds => rec["bounds"] = json!(bounds_report(&g, t, Known::default())),
        }
    }
    if timings {
        rec["wall_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    }
    rec
}

/// The colored graph (the product for product methods) and its coloring.
fn color_with(method: ColorMethod, t: Frugality, graphs: &[Graph], b: &SolveBudget) -> std::result::Result<(Graph, Coloring), Failure> {
    let pair = || -> std::result::Result<(&Graph, &Graph), Failure> {
        match graphs {
            [g, h] => Ok((g, h)),
            _ => Err(usage(format!("{method:?} expects two graphs, found {}", graphs.len()))),
        }
    };
    let single = || -> std::result::Result<&Graph, Failure> {
        match graphs {
            [g] => Ok(g),
            _ => Err(usage(format!("expected one graph, found {}", graphs.len()))),
        }
    };
    let needs_two = |t: Frugality| if t.get() < 2 { Err(usage(format!("{method:?} builds 2-frugal colorings; t must be at least 2"))) } else { Ok(()) };
    let product_of = |kind: ProductKind| -> std::result::Result<(Graph, Coloring), Failure> {
        needs_two(t)?;
        let (g, h) = pair()?;
        let c = match kind {
            ProductKind::Cartesian => color_cartesian_auto(g, h, b),
            ProductKind::Strong => color_strong_auto(g, h, b),
            ProductKind::Direct => color_direct_auto(g, h, b),
            ProductKind::Lexicographic => color_lexicographic_auto(g, h, b),
        }?;
        Ok((product(kind, g, h), c))
    };
    match method {
        ColorMethod::Cartesian => return product_of(ProductKind::Cartesian),
        ColorMethod::Strong => return product_of(ProductKind::Strong),
        ColorMethod::Direct => return product_of(ProductKind::Direct),
        ColorMethod::Lex => return product_of(ProductKind::Lexicographic),
        _ => {}
    }
    let g = single()?;
    let c = match method {
        ColorMethod::Auto => {
            let flags = structural_flags(g);
            if t.get() >= 2 && flags.is_block_graph {
                color_block_graph(g)?
            } else if t.get() >= 2 && g.max_degree() <= 3 {
                color_subcubic(g)?
            } else {
                color_greedy(g, t)?
            }
        }
        ColorMethod::Exact => chi_t_frugal_exact(g, t, b).value().ok_or(Error::BudgetExhausted)?.1,
        ColorMethod::Greedy => color_greedy(g, t)?,
        ColorMethod::Block => {
            needs_two(t)?;
            color_block_graph(g)?
        }
        ColorMethod::Subcubic => {
            needs_two(t)?;
            color_subcubic(g)?
        }
        ColorMethod::Clawfree => {
            needs_two(t)?;
            color_clawfree_cubic(g)?
        }
        ColorMethod::Torus => {
            needs_two(t)?;
            let n = g.n();
            let (m, k) = (3..=n / 3)
                .filter(|&m| n % m == 0 && n / m >= 3)
                .map(|m| (m, n / m))
                .find(|&(m, k)| torus(m, k).is_ok_and(|tg| tg == *g))
                .ok_or_else(|| usage("input is not C_m x C_n in generator vertex order"))?;
            color_torus(m, k)?
        }
        ColorMethod::Grid => {
            needs_two(t)?;
            recognize_grid(g)?
        }
        ColorMethod::Cartesian | ColorMethod::Strong | ColorMethod::Direct | ColorMethod::Lex => unreachable!("handled above"),
    };
    Ok((g.clone(), c))
}

/// Matches the input against strong powers `P_s^d` and Cartesian grids with sides at least 3, in
/// generator vertex order.
fn recognize_grid(g: &Graph) -> std::result::Result<Coloring, Failure> {
    let n = g.n();
    for side in 3..=n {
        let mut d = 1;
        let mut size = side;
        while size <= n {
            if size == n && d >= 2 && grid(&vec![side; d], ProductKind::Strong).is_ok_and(|h| h == *g) {
                return Ok(color_strong_power_grid(side, d)?);
            }
            size = size.saturating_mul(side);
            d += 1;
        }
    }
    let mut found = None;
    factorizations(n, &mut Vec::new(), &mut |sides| {
        if found.is_none() && grid(sides, ProductKind::Cartesian).is_ok_and(|h| h == *g) {
            found = Some(sides.to_vec());
        }
    });
    match found {
        Some(sides) => Ok(color_cartesian_power_grid(&sides)?),
        None => Err(usage("input is not a grid of paths with sides >= 3 in generator vertex order")),
    }
}

/// Ordered factorizations of `n` into factors of at least 3.
fn factorizations(n: usize, prefix: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if n == 1 && !prefix.is_empty() {
        visit(prefix);
        return;
    }
    for f in (3..=n).filter(|f| n.is_multiple_of(*f)) {
        prefix.push(f);
        factorizations(n / f, prefix, visit);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("frugalis").chain(args.iter().copied()).map(String::from).collect();
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&argv, &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn gen_then_chi() {
        let (code, g6, _) = call(&["gen", "star", "8"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["chi", "-t", "2"], &g6);
        assert_eq!((code, out.trim()), (0, "5"));
    }

    #[test]
    fn torus_coloring_round_trip() {
        let (_, g6, _) = call(&["gen", "torus", "6", "6"], "");
        let (code, out, _) = call(&["color", "-t", "2", "--method", "torus"], &g6);
        assert_eq!(code, 0);
        assert_eq!(Coloring::from_json(out.trim()).unwrap().palette(), 3);
    }

    #[test]
    fn grid_recognition() {
        let (_, g6, _) = call(&["gen", "strong_grid", "5", "5"], "");
        let (_, out, _) = call(&["color", "--method", "grid"], &g6);
        assert_eq!(Coloring::from_json(out.trim()).unwrap().palette(), 5);
        let (_, g6, _) = call(&["gen", "grid", "3", "4", "5"], "");
        let (_, out, _) = call(&["color", "--method", "grid"], &g6);
        assert_eq!(Coloring::from_json(out.trim()).unwrap().palette(), 4);
        let (code, _, err) = call(&["color", "--method", "grid"], "Bw\n");
        assert_eq!(code, 2);
        assert!(err.starts_with("frugalis: "));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["chi", "-t", "0"], "Bw\n").0, 2);
        assert_eq!(call(&["chi"], "not graph6 \u{1}\n").0, 2);
        assert_eq!(call(&["nosuch"], "").0, 2);
        assert_eq!(call(&["gen", "cycle", "2"], "").0, 2);
    }

    #[test]
    fn strict_unknown_exits_3() {
        let (_, g6, _) = call(&["gen", "random_cubic", "40", "--seed", "3"], "");
        let (code, out, _) = call(&["chi", "--budget-nodes", "1", "--strict"], &g6);
        assert_eq!((code, out.trim()), (3, "unknown"));
        assert_eq!(call(&["chi", "--budget-nodes", "1"], &g6).0, 0);
    }

    #[test]
    fn edge_list_input() {
        let (code, out, _) = call(&["alpha", "--witness"], "5 4\n0 1\n1 2\n2 3\n3 4\n");
        assert_eq!(code, 0);
        assert_eq!(out, "3\n{\"members\":[0,2,4]}\n");
    }

    #[test]
    fn batch_is_ordered_and_independent_of_jobs() {
        let (_, g6, _) = call(&["gen", "ng_exceptional"], "");
        let (_, more, _) = call(&["gen", "petersen"], "");
        let input = format!("{g6}{more}garbage\u{1}\n");
        let (c1, one, _) = call(&["batch", "--jobs", "1"], &input);
        let (c4, four, _) = call(&["batch", "--jobs", "4"], &input);
        assert_eq!(one, four);
        assert_eq!((c1, c4), (2, 2));
        assert_eq!(one.lines().count(), input.lines().count());
        assert!(one.lines().last().unwrap().contains("\"error\""));
    }

    #[test]
    fn product_color_methods() {
        let input = "Bw\nA_\n";
        for m in ["cartesian", "strong", "direct", "lex"] {
            let (code, out, _) = call(&["color", "--method", m], input);
            assert_eq!(code, 0, "{m}");
            assert_eq!(Coloring::from_json(out.trim()).unwrap().len(), 6);
        }
        assert_eq!(call(&["color", "--method", "strong"], "Bw\n").0, 2);
    }
}
