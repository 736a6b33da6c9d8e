use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use flagstone::bounds::{complex_summary, verify_theorem_instance};
use flagstone::complex::clique_complex;
use flagstone::graph::generators;
use flagstone::io::{write_edge_list, write_graph6};
use flagstone::rational;
use flagstone::search::{
    corpus_summary, exhaustive_search, load_instance, random_search, run_corpus_checks, CorpusEntry, CorpusSummary,
    SearchConfig, SearchMode,
};
use flagstone::Graph;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "flagstone", version, about = "Checks for flag complexes and d-leveled graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated graph.
    Gen {
        family: Family,
        /// Family parameters; commas and spaces both separate values.
        #[arg(required = false)]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Edgelist)]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every check on each file and print one line per file.
    Check {
        files: Vec<PathBuf>,
        /// Write all reports and the summary as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Evaluate the edge bounds on one instance and print the report.
    Bounds {
        file: PathBuf,
        #[arg(long)]
        s: usize,
        /// Clique-count constant C of the hypothesis k_{s+1} <= C n^s, as p/q.
        #[arg(long = "C")]
        c: Option<String>,
    },
    /// Search for d-leveled graphs with many edges.
    Search {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        d: usize,
        /// Inclusive range `min..max`, or a single order.
        #[arg(long)]
        n: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        workers: Option<usize>,
        /// Class ceiling (exhaustive) or proposals per order (random).
        #[arg(long)]
        budget: Option<u64>,
        /// Count distinct isomorphism classes among random samples.
        #[arg(long)]
        dedup: bool,
        /// Lift the exhaustive cap to the canonical-form limit.
        #[arg(long = "i-know-this-is-huge")]
        huge: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Independent,
    Multipartite,
    JoinOfCycles,
    Suspension,
    Torus,
    CrossPolytope,
    EvenSphere,
    Petersen,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Random,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Gen {
            family,
            params,
            format,
            out,
        } => {
            let g = generate(family, &parse_params(&params)?)?;
            let text = match format {
                Format::Edgelist => write_edge_list(&g),
                Format::Graph6 => write_graph6(&g) + "\n",
            };
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Check { files, json } => check(&files, json.as_deref()),
        Command::Bounds { file, s, c } => {
            let c = c
                .map(|t| rational::parse(&t).ok_or_else(|| format!("cannot parse C = {t:?} as a rational")))
                .transpose()?;
            let inst = load_instance(&file).map_err(|e| e.to_string())?;
            let complex = inst.complex.clone().unwrap_or_else(|| clique_complex(&inst.graph));
            let report = verify_theorem_instance(&inst.graph, s, c.as_ref())
                .map_err(|e| e.to_string())?
                .named(inst.name)
                .with_complex(complex_summary(&complex));
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            Ok(if report.has_violation() { EXIT_VIOLATION } else { 0 })
        }
        Command::Search {
            mode,
            d,
            n,
            seed,
            workers,
            budget,
            dedup,
            huge,
            out,
        } => {
            let (lo, hi) = parse_range(&n)?;
            let mut cfg = match mode {
                Mode::Exhaustive => SearchConfig::exhaustive(d, lo, hi),
                Mode::Random => {
                    let seed = seed.ok_or("random mode needs --seed")?;
                    SearchConfig {
                        dedup,
                        ..SearchConfig::random(d, lo, hi, seed)
                    }
                }
            };
            cfg.seed = seed;
            cfg.workers = workers;
            cfg.allow_huge = huge;
            if let Some(b) = budget {
                cfg.budget = b;
            }
            if let Ok(v) = std::env::var("FLAGSTONE_CAP") {
                cfg.cap_override = Some(v.parse().map_err(|_| format!("FLAGSTONE_CAP={v:?} is not a number"))?);
            }
            let result = match cfg.mode {
                SearchMode::Exhaustive => exhaustive_search(&cfg),
                SearchMode::Random => random_search(&cfg),
            }
            .map_err(|e| e.to_string())?;
            emit(Some(&out), &(result.to_json() + "\n"))?;
            for s in &result.summaries {
                println!(
                    "n={} examined={} leveled={} max_edges={} bound={} verdict={}",
                    s.n,
                    s.examined,
                    s.leveled,
                    s.max_edges.map_or("-".into(), |m| m.to_string()),
                    s.bound.as_ref().map_or("-".into(), rational::format),
                    s.verdict.map_or("-".into(), |v| v.to_string()),
                );
            }
            println!("searched range {} (d = {}); {}", result.range, result.d, result.note);
            let violated = result.reports.iter().any(|r| r.has_violation());
            Ok(if violated { EXIT_VIOLATION } else { 0 })
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_params(raw: &[String]) -> Result<Vec<usize>, String> {
    raw.iter()
        .flat_map(|t| t.split(','))
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse().map_err(|_| format!("parameter {t:?} is not a non-negative integer")))
        .collect()
}

fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let bad = || format!("cannot parse range {text:?}; expected min..max");
    match text.split_once("..") {
        Some((a, b)) => {
            let lo = a.trim().parse().map_err(|_| bad())?;
            let hi = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            Ok((lo, hi))
        }
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            Ok((n, n))
        }
    }
}

fn generate(family: Family, p: &[usize]) -> Result<Graph, String> {
    let want = |k: usize| {
        if p.len() == k {
            Ok(())
        } else {
            Err(format!("expected {k} parameter(s), got {}", p.len()))
        }
    };
    let g = match family {
        Family::Cycle => want(1).and_then(|_| generators::cycle(p[0]).map_err(|e| e.to_string()))?,
        Family::Independent => want(1).map(|_| generators::independent(p[0]))?,
        Family::Multipartite => generators::complete_multipartite(p).map_err(|e| e.to_string())?,
        Family::JoinOfCycles => want(2).and_then(|_| generators::join_of_cycles(p[0], p[1]).map_err(|e| e.to_string()))?,
        Family::Suspension => want(1).and_then(|_| generators::suspension_sphere(p[0]).map_err(|e| e.to_string()))?,
        Family::Torus => want(2).and_then(|_| generators::grid_torus(p[0], p[1]).map_err(|e| e.to_string()))?,
        Family::CrossPolytope => want(1).map(|_| generators::cross_polytope(p[0]))?,
        Family::EvenSphere => {
            want(2).and_then(|_| generators::even_sphere_join(p[0], p[1]).map_err(|e| e.to_string()))?
        }
        Family::Petersen => want(0).map(|_| generators::petersen())?,
    };
    Ok(g)
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    entries: &'a [CorpusEntry],
    summary: CorpusSummary,
}

fn check(files: &[PathBuf], json: Option<&Path>) -> Result<u8, String> {
    let entries = run_corpus_checks(files);
    for e in &entries {
        match &e.result {
            Ok(r) => {
                let thm = &r.bounds["thm_odd"];
                let c = r.complex.as_ref();
                println!(
                    "{}: n={} edges={} s={} leveled(d={})={} thm_odd={}{} flag={} ds={} klee={}",
                    e.path.display(),
                    r.n,
                    r.edges,
                    r.s,
                    r.leveled.d,
                    r.leveled.verdict,
                    if thm.holds { "holds" } else { "fails" },
                    if thm.equality { " (equality)" } else { "" },
                    c.is_some_and(|c| c.flag),
                    c.and_then(|c| c.dehn_sommerville.as_ref()).is_some_and(|d| d.holds),
                    c.and_then(|c| c.klee.as_ref()).is_some_and(|k| k.holds),
                );
            }
            Err(err) => println!("{}: error: {err}", e.path.display()),
        }
    }
    let summary = corpus_summary(&entries);
    println!(
        "{} files: {} checked, {} failed, {} potential counterexamples",
        summary.files, summary.checked, summary.failed, summary.potential_counterexamples
    );
    let violated = entries.iter().any(|e| e.result.as_ref().is_ok_and(|r| r.has_violation()));
    let failed = summary.failed > 0;
    if let Some(path) = json {
        let out = CheckOutput {
            entries: &entries,
            summary,
        };
        emit(Some(path), &(serde_json::to_string_pretty(&out).expect("reports serialize") + "\n"))?;
    }
    Ok(if violated {
        EXIT_VIOLATION
    } else if failed {
        EXIT_USAGE
    } else {
        0
    })
}
