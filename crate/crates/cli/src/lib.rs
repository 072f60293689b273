//! `msp` command-line driver.
//!
//! Exit codes: 0 = yes/valid/unique, 1 = no/invalid/not unique/unsat,
//! 2 = usage or parse error, 3 = resource limit. Results go to stdout,
//! diagnostics to stderr.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use msp_core::io::{parse_code, parse_graph, parse_instance, serialize_graph, serialize_instance};
use msp_core::reduction::ReductionArtifact;
use msp_core::solver::DEFAULT_EXHAUSTIVE_CAP;
use msp_core::uniqueness::is_unique_with;
use msp_core::{
    brute_force_vertex_cover, extract_cover, reduce, score, verify, Error, Graph, MspInstance,
    Palette, SolveMode, Solver, Variant,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "msp", version, about = "Mastermind satisfiability toolkit")]
struct Cli {
    /// Seed for randomized generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Largest kappa^length the exhaustive engine may walk.
    #[arg(long, global = true, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
    cap: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Backtrack,
}

impl From<Mode> for SolveMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exhaustive => SolveMode::Exhaustive,
            Mode::Backtrack => SolveMode::Backtrack,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the score `black white` of two codes.
    Score {
        #[arg(long)]
        kappa: u32,
        code1: String,
        code2: String,
    },
    /// Solve an instance; prints a witness or UNSAT.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Backtrack)]
        mode: Mode,
        /// Print every solution in lexicographic order.
        #[arg(long)]
        all: bool,
        /// Stop listing after this many solutions (with --all).
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
        /// Spread the search over all cores.
        #[arg(long)]
        parallel: bool,
    },
    /// Check a candidate code against an instance; prints VALID or INVALID.
    Verify { instance: PathBuf, code: String },
    /// Reduce a vertex-cover question on a graph to an instance.
    Reduce {
        graph: PathBuf,
        #[arg(long)]
        cover_size: usize,
        #[arg(long)]
        compact: bool,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Map a witness of a reduced instance back to a vertex cover.
    Extract {
        graph: PathBuf,
        #[arg(long)]
        cover_size: usize,
        instance: PathBuf,
        witness: String,
    },
    /// Decide whether an instance has exactly one solution.
    Unique { instance: PathBuf },
    /// Compare reduce -> solve -> extract with brute-force vertex cover for n = 1..=N.
    Roundtrip {
        graph: PathBuf,
        #[arg(long)]
        max_n: usize,
    },
    /// Emit a random simple graph in DIMACS edge format.
    RandomGraph {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<msp_core::ParseError> for Failure {
    fn from(e: msp_core::ParseError) -> Self {
        Failure::Core(e.into())
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::ResourceLimit(_) => EXIT_LIMIT,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<MspInstance, Failure> {
    parse_instance(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, line: impl Display) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(|e| Failure::Usage(format!("write failed: {e}")))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let solver = |mode: SolveMode| Solver::new(mode).with_exhaustive_cap(cli.cap);
    match &cli.command {
        Command::Score {
            kappa,
            code1,
            code2,
        } => {
            let palette = Palette::new(*kappa)?;
            let s = score(&parse_code(code1)?, &parse_code(code2)?, &palette)?;
            emit(out, s)?;
            Ok(EXIT_YES)
        }

        Command::Solve {
            instance,
            mode,
            all,
            limit,
            parallel,
        } => {
            let inst = load_instance(instance)?;
            let solver = solver((*mode).into()).with_parallel(*parallel);
            if *all {
                let found = solver.enumerate(&inst, *limit)?;
                for code in &found.codes {
                    emit(out, code)?;
                }
                if found.truncated {
                    let _ = writeln!(err, "note: listing stopped after {limit} solutions");
                }
                if found.codes.is_empty() {
                    emit(out, "UNSAT")?;
                    return Ok(EXIT_NO);
                }
                return Ok(EXIT_YES);
            }
            match solver.solve(&inst)?.witness {
                Some(w) => {
                    emit(out, w)?;
                    Ok(EXIT_YES)
                }
                None => {
                    emit(out, "UNSAT")?;
                    Ok(EXIT_NO)
                }
            }
        }

        Command::Verify { instance, code } => {
            let inst = load_instance(instance)?;
            let valid = verify(&inst, &parse_code(code)?)?;
            emit(out, if valid { "VALID" } else { "INVALID" })?;
            Ok(if valid { EXIT_YES } else { EXIT_NO })
        }

        Command::Reduce {
            graph,
            cover_size,
            compact,
            output,
        } => {
            let g = load_graph(graph)?;
            let variant = if *compact {
                Variant::Compact
            } else {
                Variant::Standard
            };
            let art = reduce(&g, *cover_size, variant)?;
            let text = serialize_instance(&art.instance);
            let stats = format!(
                "kappa {}\nell {}\nguesses {}",
                art.instance.kappa(),
                art.instance.length(),
                art.instance.guesses().len()
            );
            match output {
                Some(path) => {
                    fs::write(path, text).map_err(|e| {
                        Failure::Usage(format!("cannot write {}: {e}", path.display()))
                    })?;
                    emit(out, stats)?;
                }
                None => {
                    write!(out, "{text}")
                        .map_err(|e| Failure::Usage(format!("write failed: {e}")))?;
                    let _ = writeln!(err, "{stats}");
                }
            }
            Ok(EXIT_YES)
        }

        Command::Extract {
            graph,
            cover_size,
            instance,
            witness,
        } => {
            let g = load_graph(graph)?;
            let inst = load_instance(instance)?;
            let art = matching_reduction(&g, *cover_size, &inst)?;
            let witness = parse_code(witness)?;
            art.instance.check_candidate(&witness)?;
            if !verify(&art.instance, &witness)? {
                emit(out, "INVALID")?;
                return Ok(EXIT_NO);
            }
            let cover = extract_cover(&art, &witness)?;
            emit(out, join(&cover))?;
            Ok(EXIT_YES)
        }

        Command::Unique { instance } => {
            let inst = load_instance(instance)?;
            let report = is_unique_with(&inst, &solver(SolveMode::Backtrack))?;
            let verdict = match (report.satisfiable, report.unique) {
                (false, _) => "UNSAT",
                (true, true) => "UNIQUE",
                (true, false) => "NOT-UNIQUE",
            };
            emit(out, verdict)?;
            emit(out, format!("followups {}", report.followups_tried))?;
            Ok(if report.unique { EXIT_YES } else { EXIT_NO })
        }

        Command::Roundtrip { graph, max_n } => {
            let g = load_graph(graph)?;
            roundtrip(&g, *max_n, &solver(SolveMode::Backtrack), out)
        }

        Command::RandomGraph { vertices, density } => {
            if *vertices == 0 || !(0.0..=1.0).contains(density) {
                return Err(Failure::Usage(
                    "need --vertices >= 1 and --density in [0, 1]".into(),
                ));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
            let edges = (1..=*vertices)
                .flat_map(|a| (a + 1..=*vertices).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(*density))
                .collect();
            let g = Graph::new(*vertices, edges)?;
            write!(out, "{}", serialize_graph(&g))
                .map_err(|e| Failure::Usage(format!("write failed: {e}")))?;
            Ok(EXIT_YES)
        }
    }
}

fn join(cover: &BTreeSet<usize>) -> String {
    cover
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// The reduction of `graph` (standard or compact) that produced `inst`.
fn matching_reduction(
    graph: &Graph,
    n: usize,
    inst: &MspInstance,
) -> Result<ReductionArtifact, Failure> {
    let mut first_err = None;
    for variant in [Variant::Standard, Variant::Compact] {
        match reduce(graph, n, variant) {
            Ok(art) if art.instance == *inst => return Ok(art),
            Ok(_) => {}
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    match first_err {
        Some(e @ Error::InvalidInput(_)) => Err(e.into()),
        _ => Err(Failure::Usage(format!(
            "instance is not the reduction of this graph with cover size {n}"
        ))),
    }
}

fn roundtrip(graph: &Graph, max_n: usize, solver: &Solver, out: &mut dyn Write) -> CmdResult {
    if max_n == 0 {
        return Err(Failure::Usage("--max-n must be at least 1".into()));
    }
    emit(out, "n vertex-cover standard compact extracted agree")?;
    let mut disagreements = 0;
    for n in 1..=max_n.min(graph.vertex_count()) {
        let expected = brute_force_vertex_cover(graph, n)?;
        let mut cells = Vec::new();
        let mut agree = true;
        let mut extracted = String::from("-");
        for variant in [Variant::Standard, Variant::Compact] {
            let art = match reduce(graph, n, variant) {
                Ok(art) => art,
                Err(Error::Precondition(_)) => {
                    cells.push("-");
                    continue;
                }
                Err(e) => return Err(e.into()),
            };
            let outcome = solver.solve(&art.instance)?;
            if let Some(w) = &outcome.witness {
                let cover = extract_cover(&art, w)?;
                agree &= cover.len() == n && graph.is_vertex_cover(&cover);
                if variant == Variant::Standard {
                    extracted = join(&cover).replace(' ', ",");
                }
            }
            agree &= outcome.is_satisfiable() == expected;
            cells.push(yes_no(outcome.is_satisfiable()));
        }
        disagreements += usize::from(!agree);
        emit(
            out,
            format!(
                "{n} {} {} {} {extracted} {}",
                yes_no(expected),
                cells[0],
                cells[1],
                yes_no(agree)
            ),
        )?;
    }
    emit(out, format!("disagreements {disagreements}"))?;
    Ok(if disagreements == 0 {
        EXIT_YES
    } else {
        EXIT_NO
    })
}
