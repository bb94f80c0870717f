//! Command-line front end: insertion, reverse insertion, cycle inspection,
//! moving through, normal forms, operators, cell partitions, operator
//! graphs, and the exhaustive verification suites.

#![forbid(unsafe_code)]

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use domino_core::render::{
    ascii_cycle, ascii_pair, ascii_partition, ascii_tableau, cycle_to_json, graph_dot,
    pair_from_json, pair_to_json, partition_to_json, tableau_from_json, tableau_to_json,
};
use domino_core::{
    applicable, apply, apply_op_tableau, cycle_through, cycles, lambda_set, move_through,
    operator_components, operator_edges, partition_irreducible, partition_reducible, rs_inverse,
    rs_map, special_form, verify_bijectivity, verify_generation, verify_parabolic,
    verify_refinement, verify_stability, Operator, Report, Side, SignedPermutation,
};

#[derive(Parser)]
#[command(
    name = "domino",
    version,
    about = "Rank-r domino insertion for signed permutations, the cycle calculus, and cell verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(side: SideArg) -> Side {
        match side {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum KindArg {
    IrreducibleLeft,
    IrreducibleRight,
    ReducibleLeft,
    ReducibleRight,
    Components,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    Stability,
    Generation,
    Refinement,
    Parabolic,
    Bijectivity,
    All,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Insert a signed word and print its tableau pair.
    Rs {
        /// Comma-separated signed entries; the empty string is the empty word.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 0)]
        rank: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Read a serialized pair (stdin or a file) and recover its word.
    InverseRs {
        /// Path to a JSON pair; stdin when omitted.
        input: Option<PathBuf>,
        /// Write output to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the cycles of one tableau of the image pair.
    Cycles {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 0)]
        rank: usize,
        /// Which tableau of the pair to inspect.
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Move through the cycle containing a label and print the new tableau.
    Mt {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 0)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        /// A label of the cycle to move through.
        #[arg(long)]
        label: u32,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Print the somewhat-special normal form of one tableau of the pair.
    Special {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 0)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// List applicable operators for a word, or apply one.
    Ops {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 0)]
        rank: usize,
        /// Operator descriptor such as K2, IN1, or SC3.
        #[arg(long)]
        apply: Option<String>,
        /// Cross-check the application against the tableau-level action.
        #[arg(long, requires = "apply")]
        check_tableau: bool,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Partition W_n into cells of the requested kind.
    Cells {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = KindArg::ReducibleRight)]
        kind: KindArg,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Export the operator graph on W_n.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        rank: usize,
        /// Emit DOT text instead of JSON.
        #[arg(long)]
        dot: bool,
        /// Write output to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite over a grid of sizes and ranks.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Restrict the grid to one word length.
        #[arg(long)]
        n: Option<usize>,
        /// Restrict the grid to one rank.
        #[arg(long)]
        rank: Option<usize>,
        /// Worker threads for independent grid points.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write output to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-render a serialized tableau or pair (stdin or a file).
    Render {
        /// Path to JSON; stdin when omitted.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Write output to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Rs { word, rank, output } => {
            let w = parse_word(&word)?;
            let pair = rs_map(&w, rank);
            let text = match output.format {
                Format::Json => format!("{}\n", pair_to_json(&pair)),
                Format::Ascii => ascii_pair(&pair),
            };
            emit(&output.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::InverseRs { input, out } => {
            let value = read_json(&input)?;
            let pair = pair_from_json(&value).map_err(|e| e.to_string())?;
            let w = rs_inverse(&pair).map_err(|e| e.to_string())?;
            emit(&out, &format!("{w}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Cycles { word, rank, side, output } => {
            let w = parse_word(&word)?;
            let pair = rs_map(&w, rank);
            let found = cycles(pair.side(side.into()));
            let text = match output.format {
                Format::Json => {
                    let items: Vec<_> = found.iter().map(cycle_to_json).collect();
                    format!("{}\n", serde_json::Value::Array(items))
                }
                Format::Ascii => found.iter().map(ascii_cycle).collect(),
            };
            emit(&output.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Mt { word, rank, side, label, output } => {
            let w = parse_word(&word)?;
            let pair = rs_map(&w, rank);
            let t = pair.side(side.into());
            let c = cycle_through(t, label).map_err(|e| e.to_string())?;
            let moved = move_through(t, &c).map_err(|e| e.to_string())?;
            emit(&output.out, &render_tableau(&moved, output.format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Special { word, rank, side, output } => {
            let w = parse_word(&word)?;
            let pair = rs_map(&w, rank);
            let normal = special_form(pair.side(side.into()));
            emit(&output.out, &render_tableau(&normal, output.format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ops { word, rank, apply: descriptor, check_tableau, output } => {
            let w = parse_word(&word)?;
            match descriptor {
                None => {
                    let names: Vec<String> = lambda_set(w.n(), rank)
                        .into_iter()
                        .filter(|&op| applicable(op, &w))
                        .map(|op| op.to_string())
                        .collect();
                    let text = match output.format {
                        Format::Json => format!(
                            "{}\n",
                            json!({"word": w.to_string(), "rank": rank, "applicable": names})
                        ),
                        Format::Ascii => names
                            .iter()
                            .map(|name| format!("{name}\n"))
                            .collect::<String>(),
                    };
                    emit(&output.out, &text)?;
                    Ok(ExitCode::SUCCESS)
                }
                Some(name) => {
                    let op: Operator = name.parse().map_err(|e| format!("{e}"))?;
                    let image = apply(op, &w).map_err(|e| e.to_string())?;
                    let mut checked = false;
                    if check_tableau {
                        let direct = apply_op_tableau(op, &rs_map(&w, rank))
                            .map_err(|e| e.to_string())?;
                        if direct != rs_map(&image, rank) {
                            emit(
                                &output.out,
                                &format!(
                                    "FAIL tableau action of {op} at {w} disagrees with reinsertion\n"
                                ),
                            )?;
                            return Ok(ExitCode::from(2));
                        }
                        checked = true;
                    }
                    let text = match output.format {
                        Format::Json => {
                            let mut payload = json!({
                                "word": w.to_string(),
                                "op": op.to_string(),
                                "result": image.to_string(),
                            });
                            if checked {
                                payload["tableau_check"] = json!("ok");
                            }
                            format!("{payload}\n")
                        }
                        Format::Ascii => {
                            let mut text = format!("{image}\n");
                            if checked {
                                text.push_str("tableau check: ok\n");
                            }
                            text
                        }
                    };
                    emit(&output.out, &text)?;
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
        Command::Cells { n, rank, kind, output } => {
            let partition = match kind {
                KindArg::IrreducibleLeft => partition_irreducible(n, rank, Side::Left),
                KindArg::IrreducibleRight => partition_irreducible(n, rank, Side::Right),
                KindArg::ReducibleLeft => partition_reducible(n, rank, Side::Left),
                KindArg::ReducibleRight => partition_reducible(n, rank, Side::Right),
                KindArg::Components => operator_components(n, rank),
            }
            .map_err(|e| e.to_string())?;
            let text = match output.format {
                Format::Json => format!("{}\n", partition_to_json(&partition)),
                Format::Ascii => ascii_partition(&partition),
            };
            emit(&output.out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph { n, rank, dot, out } => {
            let (nodes, edges) = operator_edges(n, rank).map_err(|e| e.to_string())?;
            let text = if dot {
                graph_dot(n, rank, &nodes, &edges)
            } else {
                let edge_json: Vec<_> = edges
                    .iter()
                    .map(|(a, op, b)| json!([a.to_string(), op.to_string(), b.to_string()]))
                    .collect();
                let node_json: Vec<_> = nodes.iter().map(|w| json!(w.to_string())).collect();
                format!(
                    "{}\n",
                    json!({"n": n, "rank": rank, "nodes": node_json, "edges": edge_json})
                )
            };
            emit(&out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, n, rank, jobs, out } => {
            let points = grid(suite, n, rank);
            let reports = run_grid(&points, jobs)?;
            let mut text = String::new();
            let mut failed = false;
            for report in &reports {
                text.push_str(&report.status_line());
                text.push('\n');
                if !report.passed() {
                    failed = true;
                    let detail = json!({
                        "suite": report.suite,
                        "scope": report.scope,
                        "violations": report.violations,
                    });
                    text.push_str(&format!("{detail}\n"));
                }
            }
            emit(&out, &text)?;
            Ok(if failed { ExitCode::from(2) } else { ExitCode::SUCCESS })
        }
        Command::Render { input, format, out } => {
            let value = read_json(&input)?;
            let text = if value.get("left").is_some() {
                let pair = pair_from_json(&value).map_err(|e| e.to_string())?;
                match format {
                    Format::Json => format!("{}\n", pair_to_json(&pair)),
                    Format::Ascii => ascii_pair(&pair),
                }
            } else {
                let t = tableau_from_json(&value).map_err(|e| e.to_string())?;
                match format {
                    Format::Json => format!("{}\n", tableau_to_json(&t)),
                    Format::Ascii => ascii_tableau(&t),
                }
            };
            emit(&out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_word(text: &str) -> Result<SignedPermutation, String> {
    text.parse::<SignedPermutation>().map_err(|e| e.to_string())
}

fn render_tableau(t: &domino_core::DominoTableau, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", tableau_to_json(t)),
        Format::Ascii => ascii_tableau(t),
    }
}

fn read_json(input: &Option<PathBuf>) -> Result<serde_json::Value, String> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| format!("{}: {e}", path.display()))?,
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|e| format!("stdin: {e}"))?;
            buffer
        }
    };
    serde_json::from_str(&text).map_err(|e| format!("invalid JSON: {e}"))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// One verification call: a suite name with its size parameters.
#[derive(Clone, Copy)]
struct Point {
    suite: Suite,
    n: usize,
    m: usize,
    rank: usize,
}

/// The desk-scale grid for a suite, optionally pinned to one size or rank.
fn grid(suite: Suite, n: Option<usize>, rank: Option<usize>) -> Vec<Point> {
    let pick = |given: Option<usize>, top: usize| -> Vec<usize> {
        match given {
            Some(v) => vec![v],
            None => (0..=top).collect(),
        }
    };
    let simple = |suite: Suite, top_rank: usize| -> Vec<Point> {
        let mut out = Vec::new();
        for &n in &pick(n, 4) {
            for &rank in &pick(rank, top_rank) {
                out.push(Point { suite, n, m: 0, rank });
            }
        }
        out
    };
    match suite {
        Suite::Bijectivity => simple(suite, 5),
        Suite::Stability | Suite::Generation | Suite::Refinement => simple(suite, 3),
        Suite::Parabolic => {
            let mut out = Vec::new();
            for &n in &pick(n, 4) {
                for m in 1..=n {
                    for &rank in &pick(rank, 3) {
                        out.push(Point { suite, n, m, rank });
                    }
                }
            }
            out
        }
        Suite::All => {
            let mut out = grid(Suite::Bijectivity, n, rank);
            out.extend(grid(Suite::Stability, n, rank));
            out.extend(grid(Suite::Generation, n, rank));
            out.extend(grid(Suite::Refinement, n, rank));
            out.extend(grid(Suite::Parabolic, n, rank));
            out
        }
    }
}

fn run_point(p: Point) -> Result<Report, String> {
    let result = match p.suite {
        Suite::Bijectivity => verify_bijectivity(p.n, p.rank),
        Suite::Stability => verify_stability(p.n, p.rank),
        Suite::Generation => verify_generation(p.n, p.rank),
        Suite::Refinement => verify_refinement(p.n, p.rank),
        Suite::Parabolic => verify_parabolic(p.n, p.m, p.rank),
        Suite::All => unreachable!("the grid expands `all` into concrete suites"),
    };
    result.map_err(|e| e.to_string())
}

/// Runs every grid point, farming them out to `jobs` workers; the reports
/// come back in grid order regardless of scheduling.
fn run_grid(points: &[Point], jobs: usize) -> Result<Vec<Report>, String> {
    let jobs = jobs.min(points.len()).max(1);
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<Result<Report, String>>> = Vec::new();
    slots.resize_with(points.len(), || None);
    std::thread::scope(|scope| {
        let workers: Vec<_> = (0..jobs)
            .map(|_| {
                scope.spawn(|| {
                    let mut mine = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= points.len() {
                            break;
                        }
                        mine.push((i, run_point(points[i])));
                    }
                    mine
                })
            })
            .collect();
        for worker in workers {
            for (i, outcome) in worker.join().expect("verification workers do not panic") {
                slots[i] = Some(outcome);
            }
        }
    });
    slots
        .into_iter()
        .map(|slot| slot.expect("every grid point ran"))
        .collect()
}
