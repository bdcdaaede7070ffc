//! `besg`: command-line front end for Boolean equation systems, structure
//! graphs and the model-checking pipeline built on them.
//!
//! Exit codes: 0 success, 1 usage error, 2 parse error, 3 precondition
//! violation, 4 when `besg check` finds counterexamples.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use besg_core::bes::Bes;
use besg_core::io::{
    parse_aut, parse_bes, parse_formula, parse_mu_formula, parse_sg, print_aut, print_bes,
    print_sg, to_dot,
};
use besg_core::mucalc::{
    abstract_lts, encode, is_safe_abstraction, lts_bisim_minimise, mc_semantics, Lts, MuFormula,
    StateEnv,
};
use besg_core::pipeline::{run_pipeline, PipelineOptions, PipelineReport, RootChoice};
use besg_core::sg::{bisim_minimise, build, normalise, to_bes, StructureGraph};
use besg_core::solve::{solve, solve_gauss, solve_recursive, Environment};
use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "besg",
    version,
    about = "Boolean equation systems and their structure graphs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the random instances generated by `check`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    /// Recursive solver for small systems, Gauss elimination otherwise.
    Auto,
    Recursive,
    Gauss,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve an equation system and print `X = true|false` per variable.
    Solve {
        file: PathBuf,
        /// Only print these variables, in the order given.
        #[arg(long = "var", value_name = "X")]
        vars: Vec<String>,
        /// Value of a free variable; unassigned free variables are false.
        #[arg(long = "env", value_name = "Y=true|false")]
        env: Vec<String>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Build the structure graph of a system from a root formula.
    Build {
        file: PathBuf,
        #[arg(long)]
        root: String,
    },
    /// Minimise a structure graph modulo strong bisimulation.
    Minimise { file: PathBuf },
    /// Normalise a structure graph.
    Normalise { file: PathBuf },
    /// Translate a BESsy structure graph into an equation system.
    ToBes { file: PathBuf },
    /// Render a structure graph in DOT.
    Dot { file: PathBuf },
    /// Encode a model-checking problem as an equation system.
    Encode { lts: PathBuf, formula: PathBuf },
    /// Print the states satisfying a formula, or the value at one state.
    Mc {
        lts: PathBuf,
        formula: PathBuf,
        #[arg(long)]
        state: Option<String>,
        /// States assigned to a free variable of the formula.
        #[arg(long = "theta", value_name = "X=s1,s2")]
        theta: Vec<String>,
    },
    /// Minimise a transition system modulo strong bisimulation.
    LtsMin { lts: PathBuf },
    /// Rename the given actions to tau.
    Abstract {
        lts: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        hide: Vec<String>,
        /// Refuse the abstraction unless it is safe for this formula.
        #[arg(long = "check-safe", value_name = "PHI")]
        check_safe: Option<PathBuf>,
    },
    /// Encode, build, minimise, translate back and solve, reporting sizes.
    Pipeline {
        lts: PathBuf,
        formula: PathBuf,
        /// Root the graph at this state instead of the initial one.
        #[arg(long, conflicts_with = "global")]
        state: Option<String>,
        /// Root the graph at the conjunction over all states.
        #[arg(long)]
        global: bool,
        /// Skip normalisation before minimising.
        #[arg(long = "no-normalise")]
        no_normalise: bool,
    },
    /// Run the randomised property suites.
    Check {
        /// Cases per suite.
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

/// A malformed argument value, reported with exit code 1.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// Some property suite found counterexamples.
#[derive(Debug)]
struct CheckFailed(usize);

impl std::fmt::Display for CheckFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} suite(s) failed", self.0)
    }
}

impl std::error::Error for CheckFailed {}

fn usage(message: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Usage(message.into()))
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<CheckFailed>().is_some() {
        return 4;
    }
    match e.downcast_ref::<besg_core::Error>() {
        Some(core) if core.is_parse_error() => 2,
        Some(_) => 3,
        None => 1,
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {}", path.display(), e)))
}

fn load_bes(path: &Path) -> anyhow::Result<Bes> {
    parse_bes(&read(path)?).with_context(|| path.display().to_string())
}

fn load_sg(path: &Path) -> anyhow::Result<StructureGraph> {
    parse_sg(&read(path)?).with_context(|| path.display().to_string())
}

fn load_lts(path: &Path) -> anyhow::Result<Lts> {
    parse_aut(&read(path)?).with_context(|| path.display().to_string())
}

fn load_formula(path: &Path) -> anyhow::Result<MuFormula> {
    parse_mu_formula(&read(path)?).with_context(|| path.display().to_string())
}

fn parse_bool(s: &str) -> Option<bool> {
    match s {
        "true" | "1" => Some(true),
        "false" | "0" => Some(false),
        _ => None,
    }
}

fn parse_env(assignments: &[String]) -> anyhow::Result<Environment> {
    let mut env = Environment::new();
    for a in assignments {
        let (x, v) = a
            .split_once('=')
            .ok_or_else(|| usage(format!("expected Y=true|false, found `{}`", a)))?;
        let b =
            parse_bool(v).ok_or_else(|| usage(format!("expected true or false, found `{}`", v)))?;
        env.set(x, b);
    }
    Ok(env)
}

fn state(lts: &Lts, name: &str) -> anyhow::Result<usize> {
    lts.state_index(name)
        .ok_or_else(|| usage(format!("unknown state `{}`", name)))
}

fn parse_theta(lts: &Lts, assignments: &[String]) -> anyhow::Result<StateEnv> {
    let mut theta = StateEnv::new();
    for a in assignments {
        let (x, states) = a
            .split_once('=')
            .ok_or_else(|| usage(format!("expected X=s1,s2, found `{}`", a)))?;
        let set = states
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| state(lts, s))
            .collect::<anyhow::Result<BTreeSet<usize>>>()?;
        theta.insert(x.to_string(), set);
    }
    Ok(theta)
}

/// The sg text followed by one `%` comment per vertex using ASCII labels.
fn graph_text(sg: &StructureGraph) -> String {
    let mut out = print_sg(sg);
    for (u, v) in sg.vertices().iter().enumerate() {
        let mut line = format!("% {}", u);
        if u == sg.root() {
            line.push_str(" root");
        }
        if let Some(d) = v.dec {
            let _ = write!(line, " {}", d.ascii());
        }
        if let Some(r) = v.rank {
            let _ = write!(line, " {}", r);
        }
        if let Some(x) = &v.fv {
            let _ = write!(line, " fv {}", x);
        }
        if !v.succ.is_empty() {
            let succ: Vec<String> = v.succ.iter().map(usize::to_string).collect();
            let _ = write!(line, " -> {}", succ.join(" "));
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn render_graph(sg: &StructureGraph, format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Text => graph_text(sg),
        Format::Dot => to_dot(sg),
        Format::Json => serde_json::to_string_pretty(sg)? + "\n",
    })
}

fn render_bes(bes: &Bes, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Text => Ok(print_bes(bes)),
        Format::Json => Ok(serde_json::to_string_pretty(bes)? + "\n"),
        Format::Dot => Err(usage("dot output is only available for structure graphs")),
    }
}

fn render_lts(lts: &Lts, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Text => Ok(print_aut(lts)),
        Format::Json => {
            let value = json!({
                "initial": lts.name(lts.initial()),
                "states": lts.names(),
                "transitions": lts
                    .transitions()
                    .iter()
                    .map(|t| json!([lts.name(t.from), t.action, lts.name(t.to)]))
                    .collect::<Vec<_>>(),
            });
            Ok(serde_json::to_string_pretty(&value)? + "\n")
        }
        Format::Dot => Err(usage("dot output is only available for structure graphs")),
    }
}

fn no_dot(format: Format) -> anyhow::Result<()> {
    if format == Format::Dot {
        bail!(usage("dot output is only available for structure graphs"));
    }
    Ok(())
}

fn report_text(r: &PipelineReport) -> String {
    let mut out = String::new();
    if let (Some(s), Some(t)) = (r.lts_states, r.lts_transitions) {
        let _ = writeln!(out, "lts: {} states, {} transitions", s, t);
    }
    let _ = writeln!(out, "root: {}", r.root_formula);
    let _ = writeln!(
        out,
        "bes: {} equations, size {}",
        r.bes_equations, r.bes_size
    );
    let _ = writeln!(
        out,
        "graph: {} vertices, {} edges",
        r.graph_vertices, r.graph_edges
    );
    if r.normalised {
        let _ = writeln!(
            out,
            "normalised: {} vertices, {} edges",
            r.normalised_vertices, r.normalised_edges
        );
    }
    let _ = writeln!(
        out,
        "quotient: {} vertices, {} edges",
        r.quotient_vertices, r.quotient_edges
    );
    let _ = writeln!(
        out,
        "minimised bes: {} equations, size {}",
        r.minimised_equations, r.minimised_size
    );
    let _ = writeln!(out, "root value: {}", r.root_value);
    let _ = writeln!(out, "minimised root value: {}", r.minimised_root_value);
    for (x, b) in &r.solution {
        let _ = writeln!(out, "{} = {}", x, b);
    }
    for t in &r.timings {
        let _ = writeln!(out, "time {}: {} us", t.stage, t.micros);
    }
    out
}

fn run(cli: Cli) -> anyhow::Result<String> {
    let format = cli.format;
    match cli.command {
        Command::Solve {
            file,
            vars,
            env,
            method,
        } => {
            no_dot(format)?;
            let bes = load_bes(&file)?;
            let env = parse_env(&env)?;
            let solution = match method {
                Method::Auto => solve(&bes, &env),
                Method::Recursive => solve_recursive(&bes, &env),
                Method::Gauss => solve_gauss(&bes, &env),
            };
            let names: Vec<String> = if vars.is_empty() {
                bes.equations().iter().map(|e| e.lhs.clone()).collect()
            } else {
                if let Some(x) = vars.iter().find(|x| bes.equation(x).is_none()) {
                    bail!(besg_core::Error::UnboundVariable(x.clone()));
                }
                vars
            };
            if format == Format::Json {
                let map: serde_json::Map<String, serde_json::Value> = names
                    .iter()
                    .map(|x| (x.clone(), json!(solution.get(x))))
                    .collect();
                return Ok(serde_json::to_string_pretty(&map)? + "\n");
            }
            Ok(names
                .iter()
                .map(|x| format!("{} = {}\n", x, solution.get(x)))
                .collect())
        }
        Command::Build { file, root } => {
            let bes = load_bes(&file)?;
            let f = parse_formula(&root).context("--root")?;
            render_graph(&build(&bes, &f), format)
        }
        Command::Minimise { file } => render_graph(&bisim_minimise(&load_sg(&file)?).0, format),
        Command::Normalise { file } => render_graph(&normalise(&load_sg(&file)?), format),
        Command::ToBes { file } => render_bes(&to_bes(&load_sg(&file)?)?, format),
        Command::Dot { file } => Ok(to_dot(&load_sg(&file)?)),
        Command::Encode { lts, formula } => {
            render_bes(&encode(&load_lts(&lts)?, &load_formula(&formula)?)?, format)
        }
        Command::Mc {
            lts,
            formula,
            state: at,
            theta,
        } => {
            no_dot(format)?;
            let lts = load_lts(&lts)?;
            let phi = load_formula(&formula)?;
            let theta = parse_theta(&lts, &theta)?;
            let sat = mc_semantics(&lts, &phi, &theta)?;
            if let Some(name) = at {
                let holds = sat.contains(&state(&lts, &name)?);
                return Ok(match format {
                    Format::Json => serde_json::to_string_pretty(&json!({ name: holds }))? + "\n",
                    _ => format!("{} = {}\n", name, holds),
                });
            }
            let names: Vec<&str> = sat.iter().map(|&s| lts.name(s)).collect();
            Ok(match format {
                Format::Json => serde_json::to_string_pretty(&names)? + "\n",
                _ => names.iter().map(|s| format!("{}\n", s)).collect(),
            })
        }
        Command::LtsMin { lts } => render_lts(&lts_bisim_minimise(&load_lts(&lts)?).0, format),
        Command::Abstract {
            lts,
            hide,
            check_safe,
        } => {
            let lts = load_lts(&lts)?;
            let hidden: BTreeSet<String> = hide.into_iter().collect();
            if let Some(path) = check_safe {
                let phi = load_formula(&path)?;
                if !is_safe_abstraction(&lts, &hidden, &phi) {
                    bail!(besg_core::Error::Precondition(format!(
                        "hiding {:?} is not safe for {}",
                        hidden,
                        path.display()
                    )));
                }
            }
            render_lts(&abstract_lts(&lts, &hidden)?, format)
        }
        Command::Pipeline {
            lts,
            formula,
            state: at,
            global,
            no_normalise,
        } => {
            no_dot(format)?;
            let lts = load_lts(&lts)?;
            let phi = load_formula(&formula)?;
            let root = match (at, global) {
                (Some(name), _) => {
                    state(&lts, &name)?;
                    RootChoice::State(name)
                }
                (None, true) => RootChoice::Global,
                (None, false) => RootChoice::Initial,
            };
            let options = PipelineOptions {
                root,
                normalise: !no_normalise,
            };
            let report = run_pipeline(&lts, &phi, &options)?;
            Ok(match format {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                _ => report_text(&report),
            })
        }
        Command::Check { cases } => {
            no_dot(format)?;
            let mut rng = StdRng::seed_from_u64(cli.seed);
            let reports = besg_core::check::run_all(&mut rng, cases);
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let out = match format {
                Format::Json => serde_json::to_string_pretty(&reports)? + "\n",
                _ => {
                    let mut out = String::new();
                    for r in &reports {
                        let verdict = if r.passed() { "ok" } else { "FAILED" };
                        let _ = writeln!(
                            out,
                            "{}: {} cases, {} failures: {}",
                            r.name,
                            r.cases,
                            r.failures.len(),
                            verdict
                        );
                        for f in r.failures.iter().take(5) {
                            let _ = writeln!(out, "  {}", f);
                        }
                    }
                    out
                }
            };
            if failed > 0 {
                print!("{}", out);
                return Err(anyhow!(CheckFailed(failed)));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{}", out);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(exit_code(&e))
        }
    }
}
