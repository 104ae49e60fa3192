//! The `oblige` command line.
//!
//! Exit codes: 0 success, 1 verification failure or oracle disagreement, 2 unreadable
//! input or bad usage, 3 resource guard exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::game::ObligingGame;
use crate::io::{fixture, fixture_text, parse_game, random_game, serialize_game, ObjectiveClass};
use crate::solver::report::{Report, StrategyEntry};
use crate::solver::{
    oracle_explicit_certificate_game, oracle_prior_reduction, solve, ExplicitOptions, SolveError, SolveOptions,
    DEFAULT_MAX_PERMS,
};
use crate::strategy::{extract, verify, Strategy};
use crate::suite::{agreement_suite, bench, Engine};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "oblige", version, about = "Solve obliging games with Emerson-Lei objectives")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EngineArg {
    Cert,
    Prior,
    Explicit,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Cert => Engine::Cert,
            EngineArg::Prior => Engine::Prior,
            EngineArg::Explicit => Engine::Explicit,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the gracious winning region of a game file or built-in fixture.
    Solve {
        game: String,
        #[arg(long, value_enum, default_value = "cert")]
        engine: EngineArg,
        #[arg(long)]
        json: bool,
        /// Extract a strategy, verify it and write it to this path.
        #[arg(long)]
        strategy: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_PERMS)]
        max_perms: usize,
        #[arg(long, default_value_t = 100_000)]
        cert_budget: usize,
    },
    /// Check a strategy file against a game.
    Verify {
        game: String,
        strategy: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print a random game.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        nodes: usize,
        #[arg(long, default_value_t = 3)]
        colors: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value = "streett")]
        strong: ObjectiveClass,
        #[arg(long, default_value = "genbuchi")]
        weak: ObjectiveClass,
    },
    /// Time the engines on random games.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [3, 4, 5])]
        nodes: Vec<usize>,
        /// Games per size.
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long, value_enum, value_delimiter = ',', default_values = ["cert", "prior"])]
        engine: Vec<EngineArg>,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the three engines on a fixed corpus.
    Selftest {
        #[arg(long, default_value_t = 200)]
        count: u64,
    },
}

/// Initializes logging from `OBLIGE_LOG` (same syntax as `RUST_LOG`).
pub fn init_logging() {
    let _ = env_logger::Builder::from_env(env_logger::Env::new().filter("OBLIGE_LOG")).try_init();
}

struct Failure(i32, String);

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Failure {
        let code = match e {
            SolveError::Internal(_) => EXIT_FAILED,
            _ => EXIT_GUARD,
        };
        Failure(code, e.to_string())
    }
}

impl From<crate::emptiness::EmptinessError> for Failure {
    fn from(e: crate::emptiness::EmptinessError) -> Failure {
        Failure(EXIT_GUARD, e.to_string())
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Solve { game, engine, json, strategy, max_perms, cert_budget } => {
            cmd_solve(&game, engine.into(), json, strategy.as_deref(), max_perms, cert_budget, out)
        }
        Command::Verify { game, strategy, json } => cmd_verify(&game, &strategy, json, out),
        Command::Gen { seed, nodes, colors, density, strong, weak } => {
            random_game(seed, nodes, colors, density, strong, weak)
                .map_err(|e| Failure(EXIT_INPUT, e.to_string()))
                .map(|g| {
                    let _ = write!(out, "{}", serialize_game(&g));
                    EXIT_OK
                })
        }
        Command::Bench { nodes, seeds, engine, json } => {
            let engines: Vec<Engine> = engine.into_iter().map(Engine::from).collect();
            cmd_bench(&nodes, seeds, &engines, json, out)
        }
        Command::Selftest { count } => cmd_selftest(count, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

/// Reads a game from a file, falling back to the built-in fixtures by name.
fn load_game(arg: &str) -> Result<ObligingGame, Failure> {
    let path = Path::new(arg);
    if !path.exists() && fixture_text(arg).is_ok() {
        return fixture(arg).map_err(|e| Failure(EXIT_INPUT, e.to_string()));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Failure(EXIT_INPUT, format!("{arg}: {e}")))?;
    parse_game(&text).map_err(|e| Failure(EXIT_INPUT, format!("{arg}:{e}")))
}

fn names(game: &ObligingGame, region: &[bool], won: bool) -> String {
    let v: Vec<&str> = (0..game.n()).filter(|&v| region[v] == won).map(|v| game.arena().name(v)).collect();
    if v.is_empty() {
        "-".into()
    } else {
        v.join(" ")
    }
}

fn cmd_solve(
    arg: &str,
    engine: Engine,
    json: bool,
    strategy_path: Option<&Path>,
    max_perms: usize,
    cert_budget: usize,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let game = load_game(arg)?;
    let opts = SolveOptions { max_perms };
    let mut report;
    let mut main = None;
    match engine {
        Engine::Cert => {
            let r = solve(&game, &opts)?;
            report = Report::from_solve(&game, &r);
            main = Some(r);
        }
        Engine::Prior => report = Report::from_region(&game, "prior", &oracle_prior_reduction(&game)?),
        Engine::Explicit => {
            let region = oracle_explicit_certificate_game(&game, &ExplicitOptions { budget: cert_budget })?;
            report = Report::from_region(&game, "explicit", &region);
        }
    }
    let mut code = EXIT_OK;
    if let Some(path) = strategy_path {
        let r = match main.take() {
            Some(r) => r,
            None => solve(&game, &opts)?,
        };
        let x = extract(&game, &r).map_err(|e| Failure(EXIT_FAILED, e.to_string()))?;
        let v = verify(&game, &x.strategy)?;
        std::fs::write(path, x.strategy.to_text(&game))
            .map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))?;
        report.strategy = Some(StrategyEntry { memory: x.memory_count(), strong: v.strong_ok, gracious: v.gracious_ok });
        if !v.ok() {
            code = EXIT_FAILED;
        }
    }
    if json {
        let _ = writeln!(out, "{}", report.to_json());
        return Ok(code);
    }
    let w = |out: &mut dyn Write, s: String| {
        let _ = writeln!(out, "{s}");
    };
    let region: Vec<bool> = (0..game.n()).map(|v| report.winning.iter().any(|n| n == game.arena().name(v))).collect();
    w(out, format!("engine: {}", report.engine));
    w(out, format!("winning: {}", names(&game, &region, true)));
    w(out, format!("losing: {}", names(&game, &region, false)));
    for c in &report.certificates {
        w(out, format!("certificate {}: {} ~ {}", c.node, c.stem.join(" "), c.cycle.join(" ")));
    }
    if let Some(s) = &report.strategy {
        let ok = |b: bool| if b { "ok" } else { "FAILED" };
        w(out, format!("strategy: {} memory states, strong {}, gracious {}", s.memory, ok(s.strong), ok(s.gracious)));
    }
    Ok(code)
}

#[derive(Serialize)]
struct VerifyJson {
    version: u32,
    strong: bool,
    gracious: bool,
    reachable_memory: usize,
    product_states: usize,
    counterexample: Option<String>,
}

fn cmd_verify(arg: &str, path: &Path, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let game = load_game(arg)?;
    let text = std::fs::read_to_string(path).map_err(|e| Failure(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    let strategy = Strategy::from_text(&game, &text)
        .map_err(|e| Failure(EXIT_INPUT, format!("{}:{e}", path.display())))?;
    let rep = verify(&game, &strategy)?;
    let cex = rep.counterexample.as_ref().map(|c| c.display(&game).to_string());
    if json {
        let j = VerifyJson {
            version: crate::solver::report::REPORT_VERSION,
            strong: rep.strong_ok,
            gracious: rep.gracious_ok,
            reachable_memory: rep.reachable_memory,
            product_states: rep.product_states,
            counterexample: cex,
        };
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&j).expect("serializes"));
    } else {
        let ok = |b: bool| if b { "ok" } else { "FAILED" };
        let _ = writeln!(out, "strong: {}", ok(rep.strong_ok));
        let _ = writeln!(out, "gracious: {}", ok(rep.gracious_ok));
        let _ = writeln!(out, "memory states reached: {}, product states: {}", rep.reachable_memory, rep.product_states);
        if let Some(c) = cex {
            let _ = writeln!(out, "counterexample: {c}");
        }
    }
    Ok(if rep.ok() { EXIT_OK } else { EXIT_FAILED })
}

#[derive(Serialize)]
struct BenchJson {
    nodes: usize,
    engine: &'static str,
    games: usize,
    total_ms: f64,
    max_ms: f64,
    iterations: u64,
}

fn cmd_bench(sizes: &[usize], seeds: u64, engines: &[Engine], json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let rows = bench(sizes, seeds, engines)?;
    let ms = |d: std::time::Duration| d.as_secs_f64() * 1000.0;
    if json {
        let rows: Vec<BenchJson> = rows
            .iter()
            .map(|r| BenchJson {
                nodes: r.nodes,
                engine: r.engine.name(),
                games: r.games,
                total_ms: ms(r.total),
                max_ms: ms(r.max),
                iterations: r.iterations,
            })
            .collect();
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("serializes"));
        return Ok(EXIT_OK);
    }
    let _ = writeln!(out, "{:>5} {:>9} {:>6} {:>10} {:>10} {:>10}", "nodes", "engine", "games", "total ms", "max ms", "iters");
    for r in rows {
        let _ = writeln!(
            out,
            "{:>5} {:>9} {:>6} {:>10.2} {:>10.2} {:>10}",
            r.nodes,
            r.engine.name(),
            r.games,
            ms(r.total),
            ms(r.max),
            r.iterations
        );
    }
    Ok(EXIT_OK)
}

fn cmd_selftest(count: u64, out: &mut dyn Write) -> Result<i32, Failure> {
    let s = agreement_suite(count)?;
    let _ = writeln!(
        out,
        "{} games ({} with the explicit certificate game), {} won / {} lost nodes, {} disagreements",
        s.games,
        s.explicit_checked,
        s.won_nodes,
        s.lost_nodes,
        s.disagreements.len()
    );
    if !s.disagreements.is_empty() {
        let _ = writeln!(out, "disagreeing seeds: {:?}", s.disagreements);
        return Ok(EXIT_FAILED);
    }
    Ok(EXIT_OK)
}
