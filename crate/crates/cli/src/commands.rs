//! Argument parsing and the individual commands.

use crate::config::{ConfigFlags, RunConfig};
use crate::report::Status;
use crate::suites::{crown_scan, run_suite, SuiteOptions};
use crate::{load_group, CliError, Outcome, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gg_constructions::{
    build_605_pair, build_section3_counterexample, crown_power, has_nonzero_spread, is_efficiently_generated, psi,
    tau_d,
};
use gg_core::builtins::catalog;
use gg_core::generation::{min_generators, phi_enumerate, phi_hall};
use gg_core::iso::are_isomorphic;
use gg_core::structure::{minimal_normal, structure_with_lattice};
use gg_core::{subgroup_lattice, DirichletPolynomial, FiniteGroup};
use gg_graphs::export::{components_json, degree_csv, to_dot};
use gg_graphs::{build_gamma, build_swap};
use gg_recognition::{lambda1_star, lambda_star, lstt_pipeline, recover_all, ComponentFamily, FamilyKind};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser, Debug)]
#[command(name = "gg", version, about = "Generation graphs of finite groups")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// key = value configuration file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Largest group order for which subgroup lattices are built
    #[arg(long, global = true)]
    max_lattice: Option<usize>,
    /// Largest graph vertex count and tuple space
    #[arg(long, global = true)]
    max_vertices: Option<u64>,
    /// Worker threads
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Directory that receives report and export files
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    /// Check associativity of every imported table
    #[arg(long, global = true)]
    strict: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Show a group's invariants, its table, or the catalog
    Group {
        #[arg(long)]
        group: Option<String>,
        /// List the catalog specs
        #[arg(long)]
        list: bool,
        /// Print the group in the JSON interchange format
        #[arg(long)]
        table: bool,
    },
    /// Build Γ_{a,b}(G)
    Graph {
        #[arg(long)]
        group: String,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Delete isolated vertices
        #[arg(long)]
        prune: bool,
        #[arg(long, value_enum)]
        export: Option<Export>,
    },
    /// Build the swap graph Σ_d(G)
    Swap {
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: usize,
    },
    /// Anonymised component family Λ*(G) or Λ₁*(G)
    Lambda {
        #[arg(long)]
        group: String,
        #[arg(long)]
        max_level: usize,
        #[arg(long, value_enum, default_value = "full")]
        kind: Kind,
        /// Write the family to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover invariants from a component family file
    Recover {
        #[arg(long)]
        family: PathBuf,
        /// Report every recoverable invariant, not only d and |G|
        #[arg(long)]
        all: bool,
    },
    /// Build one of the bespoke constructions
    Construct {
        #[command(subcommand)]
        which: Construct,
    },
    /// Crown-based power L_t, or a scan of monolithic primitive catalog groups
    Crown {
        #[arg(long = "L")]
        l: Option<String>,
        /// Lattice index of A, or `socle`
        #[arg(long = "A", default_value = "socle")]
        a: String,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        scan: bool,
        #[arg(long, default_value_t = 60)]
        max_order: usize,
    },
    /// Efficient generation, spread and ψ(G)
    Spread {
        #[arg(long)]
        group: String,
    },
    /// τ_d(S): Aut(S)-orbits on generating d-tuples of a simple group
    Tau {
        #[arg(long)]
        simple: String,
        #[arg(long)]
        d: usize,
    },
    /// Run a verification suite
    Verify {
        suite: String,
        /// `catalog`, `catalog:soluble` or comma-separated specs
        #[arg(long)]
        groups: Option<String>,
        /// Largest generation-graph vertex count built by the suite
        #[arg(long, default_value_t = 100_000)]
        budget: u128,
        /// d for the counterexample suite
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
    /// Timing table (CSV)
    Bench {
        #[arg(value_enum)]
        task: BenchTask,
        /// Range `lo..hi` (inclusive)
        #[arg(long)]
        sizes: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// The group with two tuples that have no common completion
    S3counter {
        #[arg(long, default_value_t = 2)]
        d: usize,
    },
    /// The two groups of order 605 and the bijection τ
    Pair605 {
        /// Check τ on Γ_{a,b}, given as `a,b`
        #[arg(long)]
        verify: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Export {
    Dot,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Full,
    A1,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BenchTask {
    GammaBuild,
    Lattice,
    PhiEnum,
}

type CmdResult = Result<(i32, String), CliError>;

pub fn run(args: Vec<String>, env: &BTreeMap<String, String>) -> Outcome {
    let cli = match Cli::try_parse_from(std::iter::once("gg".to_string()).chain(args)) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let g = &cli.global;
    let flags = ConfigFlags {
        config: g.config.clone(),
        max_lattice: g.max_lattice,
        max_vertices: g.max_vertices,
        threads: g.threads,
        out_dir: g.out_dir.clone(),
        strict: g.strict,
    };
    let cfg = match RunConfig::resolve(&flags, env) {
        Ok(c) => c,
        Err(e) => return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.threads).build() {
        Ok(p) => p,
        Err(e) => return Outcome { code: EXIT_FAIL, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let mut stderr = String::new();
    let result = pool.install(|| dispatch(cli.command, &cfg, &mut stderr));
    match result {
        Ok((code, stdout)) => Outcome { code, stdout, stderr },
        Err(e) => {
            stderr.push_str(&format!("error: {}\n", e.message()));
            Outcome { code: e.exit_code(), stdout: String::new(), stderr }
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json output");
    s.push('\n');
    s
}

fn write_out(cfg: &RunConfig, file: &str, text: &str) -> Result<(), CliError> {
    if let Some(dir) = &cfg.out_dir {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Failure(format!("{}: {e}", dir.display())))?;
        let path = dir.join(file);
        std::fs::write(&path, text).map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn dispatch(cmd: Command, cfg: &RunConfig, stderr: &mut String) -> CmdResult {
    match cmd {
        Command::Group { group, list, table } => cmd_group(group, list, table, cfg),
        Command::Graph { group, a, b, prune, export } => cmd_graph(&group, a, b, prune, export, cfg),
        Command::Swap { group, d } => cmd_swap(&group, d, cfg),
        Command::Lambda { group, max_level, kind, out } => cmd_lambda(&group, max_level, kind, out, cfg),
        Command::Recover { family, all } => cmd_recover(&family, all),
        Command::Construct { which } => cmd_construct(which, cfg),
        Command::Crown { l, a, t, scan, max_order } => cmd_crown(l, &a, t, scan, max_order, cfg),
        Command::Spread { group } => cmd_spread(&group, cfg),
        Command::Tau { simple, d } => {
            let s = load_group(&simple, &cfg.caps)?;
            let r = tau_d(&s, d, &cfg.caps)?;
            Ok((EXIT_PASS, pretty(&serde_json::to_value(r).expect("tau report"))))
        }
        Command::Verify { suite, groups, budget, d } => cmd_verify(&suite, groups.as_deref(), budget, d, cfg, stderr),
        Command::Bench { task, sizes } => cmd_bench(task, sizes.as_deref(), cfg),
    }
}

fn group_summary(spec: &str, g: &FiniteGroup, cfg: &RunConfig) -> Result<Value, CliError> {
    let lat = subgroup_lattice(g, &cfg.caps)?;
    let st = structure_with_lattice(g, &lat);
    let p = DirichletPolynomial::from_lattice(&lat);
    Ok(json!({
        "group": spec,
        "order": g.order(),
        "d": min_generators(g),
        "abelian": st.is_abelian,
        "cyclic": st.is_cyclic,
        "soluble": st.is_soluble,
        "nilpotent": st.is_nilpotent,
        "supersoluble": st.is_supersoluble,
        "simple": st.is_simple,
        "subgroups": lat.len(),
        "maximal_subgroups": lat.maximal_indices().len(),
        "frattini_order": lat.subgroup(lat.frattini()).order(),
        "P": p.to_json(),
        "P_product": p.product_form().ok().map(|_| p.display_product()),
        "P_expanded": p.to_string(),
    }))
}

fn cmd_group(group: Option<String>, list: bool, table: bool, cfg: &RunConfig) -> CmdResult {
    if list {
        let mut out = String::new();
        for s in catalog() {
            out.push_str(s);
            out.push('\n');
        }
        return Ok((EXIT_PASS, out));
    }
    let spec = group.ok_or_else(|| CliError::Usage("--group or --list is required".into()))?;
    let g = load_group(&spec, &cfg.caps)?;
    if table {
        return Ok((EXIT_PASS, g.to_json() + "\n"));
    }
    Ok((EXIT_PASS, pretty(&group_summary(&spec, &g, cfg)?)))
}

fn cmd_graph(spec: &str, a: usize, b: usize, prune: bool, export: Option<Export>, cfg: &RunConfig) -> CmdResult {
    if a > b {
        return Err(CliError::Usage("--a must not exceed --b".into()));
    }
    let g = load_group(spec, &cfg.caps)?;
    let mut gr = build_gamma(&g, a, b, &cfg.caps)?;
    if prune {
        gr = gr.prune_isolated();
    }
    let (text, ext) = match export {
        Some(Export::Dot) => (to_dot(&gr), "dot"),
        Some(Export::Csv) => (degree_csv(&gr), "csv"),
        Some(Export::Json) | None => {
            let mut v = components_json(&gr);
            v["group"] = json!(spec);
            v["connected"] = json!(gr.pruned_is_connected());
            v["diameter"] = json!(gr.pruned_diameter());
            (pretty(&v), "json")
        }
    };
    write_out(cfg, &format!("gamma_{a}_{b}.{ext}"), &text)?;
    Ok((EXIT_PASS, text))
}

fn cmd_swap(spec: &str, d: usize, cfg: &RunConfig) -> CmdResult {
    let g = load_group(spec, &cfg.caps)?;
    let s = build_swap(&g, d, &cfg.caps)?;
    let bounds = s.diameter_bounds();
    Ok((
        EXIT_PASS,
        pretty(&json!({
            "group": spec,
            "d": d,
            "vertices": s.vertex_count(),
            "edges": s.edge_count(),
            "components": s.component_count(),
            "connected": s.is_connected(),
            "diameter": bounds.filter(|b| b.lower == b.upper).map(|b| b.lower),
            "diameter_bounds": bounds,
        })),
    ))
}

fn cmd_lambda(spec: &str, max_level: usize, kind: Kind, out: Option<PathBuf>, cfg: &RunConfig) -> CmdResult {
    let g = load_group(spec, &cfg.caps)?;
    let fam = match kind {
        Kind::Full => lambda_star(&g, max_level, &cfg.caps)?,
        Kind::A1 => {
            if max_level == 0 {
                return Err(CliError::Usage("--max-level must be positive".into()));
            }
            lambda1_star(&g, max_level - 1, &cfg.caps)?
        }
    };
    let text = serde_json::to_string(&fam.to_json()).expect("family json") + "\n";
    match out {
        Some(path) => {
            std::fs::write(&path, &text).map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))?;
            Ok((EXIT_PASS, pretty(&json!({ "written": path, "components": fam.len(), "truncation_level": fam.truncation_level }))))
        }
        None => Ok((EXIT_PASS, text)),
    }
}

fn cmd_recover(path: &PathBuf, all: bool) -> CmdResult {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let fam = ComponentFamily::from_json(&v).map_err(|e| CliError::Usage(e.to_string()))?;
    let r = match fam.kind {
        FamilyKind::A1 => lstt_pipeline(&fam)?,
        FamilyKind::Full => recover_all(&fam)?,
    };
    let out = if all { r.to_json() } else { json!({ "d": r.d, "order": r.order }) };
    Ok((EXIT_PASS, pretty(&out)))
}

fn parse_pair(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("expected `a,b`, got `{s}`"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn cmd_construct(which: Construct, cfg: &RunConfig) -> CmdResult {
    match which {
        Construct::S3counter { d } => {
            let s3 = build_section3_counterexample(d, &cfg.caps)?;
            let (g1, g2) = s3.witnesses_generate();
            let scan = s3.scan_common_neighbours()?;
            let ok = g1 && g2 && scan.common.is_empty();
            let v = json!({
                "d": d,
                "order": s3.group.order(),
                "first_tuple_with_b1_generates": g1,
                "second_tuple_with_b2_generates": g2,
                "first_completions": scan.first_completions,
                "second_completions": scan.second_completions,
                "common_completions": scan.common.len(),
            });
            Ok((if ok { EXIT_PASS } else { EXIT_FAIL }, pretty(&v)))
        }
        Construct::Pair605 { verify } => {
            let p = build_605_pair();
            let mut v = json!({
                "order_g1": p.g1.order(),
                "order_g2": p.g2.order(),
                "isomorphic": are_isomorphic(&p.g1, &p.g2),
                "tau_bijective": p.tau_is_bijective(),
            });
            let mut ok = p.tau_is_bijective();
            if let Some(pair) = verify {
                let (a, b) = parse_pair(&pair)?;
                if a + b == 0 {
                    return Err(CliError::Usage("a + b must be positive".into()));
                }
                let violation = p.tuple_violation(a + b, &cfg.caps)?;
                ok &= violation.is_none();
                v["verified"] = json!({ "a": a, "b": b, "edge_preserving": violation.is_none(), "violation": violation });
            }
            Ok((if ok { EXIT_PASS } else { EXIT_FAIL }, pretty(&v)))
        }
    }
}

fn cmd_crown(l: Option<String>, a: &str, t: Option<usize>, scan: bool, max_order: usize, cfg: &RunConfig) -> CmdResult {
    if scan {
        let rows = crown_scan(max_order, &cfg.caps)?;
        return Ok((EXIT_PASS, pretty(&json!({ "monolithic_primitive": rows }))));
    }
    let spec = l.ok_or_else(|| CliError::Usage("--L is required unless --scan is given".into()))?;
    let t = t.ok_or_else(|| CliError::Usage("--t is required".into()))?;
    let lg = load_group(&spec, &cfg.caps)?;
    let lat = subgroup_lattice(&lg, &cfg.caps)?;
    let idx = if a == "socle" {
        let mins = minimal_normal(&lg, &lat);
        if mins.len() != 1 {
            return Err(CliError::Usage("L has no unique minimal normal subgroup".into()));
        }
        mins[0]
    } else {
        let i: usize = a.parse().map_err(|_| CliError::Usage(format!("--A must be a lattice index or `socle`, got `{a}`")))?;
        if i >= lat.len() {
            return Err(CliError::Usage(format!("--A {i} is out of range (the lattice has {} subgroups)", lat.len())));
        }
        i
    };
    let lt = crown_power(&lg, lat.subgroup(idx), t, &cfg.caps)?;
    let v = json!({
        "L": spec,
        "A_order": lat.subgroup(idx).order(),
        "t": t,
        "order": lt.order(),
        "d": min_generators(&lt),
        "spread": has_nonzero_spread(&lt, &cfg.caps)?,
    });
    Ok((EXIT_PASS, pretty(&v)))
}

fn cmd_spread(spec: &str, cfg: &RunConfig) -> CmdResult {
    let g = load_group(spec, &cfg.caps)?;
    let lat = subgroup_lattice(&g, &cfg.caps)?;
    let v = json!({
        "group": spec,
        "d": min_generators(&g),
        "psi": psi(&g, &cfg.caps)?,
        "efficiently_generated": is_efficiently_generated(&g, &cfg.caps)?,
        "spread_nonzero": has_nonzero_spread(&g, &cfg.caps)?,
        "frattini_order": lat.subgroup(lat.frattini()).order(),
    });
    Ok((EXIT_PASS, pretty(&v)))
}

fn cmd_verify(suite: &str, groups: Option<&str>, budget: u128, d: usize, cfg: &RunConfig, stderr: &mut String) -> CmdResult {
    let opts = SuiteOptions { caps: cfg.caps.clone(), budget, d };
    let rep = run_suite(suite, groups, &opts)?;
    let text = rep.to_jsonl();
    write_out(cfg, &format!("{suite}.jsonl"), &text)?;
    let _ = writeln!(
        stderr,
        "{suite}: {} pass, {} fail, {} open, {} cap-exceeded",
        rep.count(Status::Pass),
        rep.count(Status::Fail),
        rep.count(Status::Open),
        rep.count(Status::CapExceeded)
    );
    Ok((if rep.passed() { EXIT_PASS } else { EXIT_FAIL }, text))
}

fn parse_range(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Usage(format!("expected `lo..hi`, got `{s}`"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let (lo, hi): (usize, usize) = (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?);
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn cmd_bench(task: BenchTask, sizes: Option<&str>, cfg: &RunConfig) -> CmdResult {
    let mut out = String::new();
    let cpus = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
    let _ = writeln!(
        out,
        "# os={} arch={} cpus={} threads={}",
        std::env::consts::OS,
        std::env::consts::ARCH,
        cpus,
        cfg.threads
    );
    out.push_str("task,group,size,workload,seconds,hall_seconds\n");
    match task {
        BenchTask::GammaBuild => {
            for n in parse_range(sizes.unwrap_or("3..31"))? {
                let spec = format!("dihedral:{n}");
                let g = load_group(&spec, &cfg.caps)?;
                let start = Instant::now();
                let gr = build_gamma(&g, 1, 1, &cfg.caps)?;
                let secs = start.elapsed().as_secs_f64();
                let _ = writeln!(out, "gamma-build,{spec},{},Gamma_1_1 on {} vertices,{secs:.6},", g.order(), gr.vertex_count());
            }
        }
        BenchTask::Lattice => {
            for n in parse_range(sizes.unwrap_or("3..5"))? {
                let spec = format!("sym:{n}");
                let g = load_group(&spec, &cfg.caps)?;
                let start = Instant::now();
                let lat = subgroup_lattice(&g, &cfg.caps)?;
                let secs = start.elapsed().as_secs_f64();
                let _ = writeln!(out, "lattice,{spec},{},{} subgroups,{secs:.6},", g.order(), lat.len());
            }
        }
        BenchTask::PhiEnum => {
            let g = load_group("alt:5", &cfg.caps)?;
            let lat = subgroup_lattice(&g, &cfg.caps)?;
            for t in parse_range(sizes.unwrap_or("1..2"))? {
                let start = Instant::now();
                let e = phi_enumerate(&g, t, &cfg.caps)?;
                let enum_secs = start.elapsed().as_secs_f64();
                let start = Instant::now();
                let h = phi_hall(&lat, t);
                let hall_secs = start.elapsed().as_secs_f64();
                if e != h {
                    return Err(CliError::Failure(format!("phi(alt:5, {t}): enumeration {e} but Hall {h}")));
                }
                let _ = writeln!(out, "phi-enum,alt:5,{t},phi(t) = {e},{enum_secs:.6},{hall_secs:.6}");
            }
        }
    }
    Ok((EXIT_PASS, out))
}
