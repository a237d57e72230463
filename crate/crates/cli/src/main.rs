mod examples;
mod table;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bei_core::bei::{self, Method, VNumberReport};
use bei_core::domination::gamma_c;
use bei_core::report::invariants;
use bei_core::verify::{run_check, run_default, CheckOutcome, VerifyConfig, DEFAULT_CHECKS, EXTRA_CHECKS};
use bei_core::{Error, Graph, VertexSet};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bei-lab", version, about = "v-numbers of binomial edge ideals and related graph invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one graph.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Connected domination number with a witness and a max-leaf spanning tree.
    GammaC { file: PathBuf },
    /// v-number of the binomial edge ideal.
    Vnumber {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = CliMode::Combinatorial)]
        mode: CliMode,
        /// Highest degree swept at primes other than J_{K_n}.
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Run property checks over generated graph corpora.
    Verify {
        /// Run only this check.
        #[arg(long)]
        check: Option<String>,
        /// Exhaustive vertex bound (each check has its own default).
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// (v, v_init) for the tabulated connected graphs on five vertices.
    Table5 {
        #[arg(long)]
        json: bool,
    },
    /// Recompute the worked examples and compare with the reference values.
    Examples,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Algebraic,
    Combinatorial,
    Both,
}

/// Exit codes: 0 ok, 1 mismatch, 2 input error, 3 unsupported size.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TheoremViolation(_) => 1,
            Error::UnsupportedSize(_) => 3,
            Error::Graph(_) | Error::Domain(_) => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 2, message }
}

fn mismatch(message: String) -> Failure {
    Failure { code: 1, message }
}

type CmdResult = Result<(), Failure>;

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    text.parse::<Graph>().map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn set_text(s: VertexSet) -> String {
    let inner: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::LinearSweep => "linear-sweep",
        Method::ColonOracle => "colon-oracle",
        Method::CombinatorialShortcut => "connected-domination",
    }
}

fn cmd_invariants(file: &Path, json: bool) -> CmdResult {
    let report = invariants(&read_graph(file)?)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

fn cmd_gamma_c(file: &Path) -> CmdResult {
    let g = read_graph(file)?;
    let d = gamma_c(&g)?;
    let tree: Vec<String> = d.tree_witness.iter().map(|(a, b)| format!("{a}-{b}")).collect();
    println!("gamma_c  {}", d.gamma_c);
    println!("witness  {}", set_text(d.witness));
    println!("lf_max   {}", d.lf_max);
    println!("tree     {}", tree.join(" "));
    Ok(())
}

fn print_combinatorial(r: &VNumberReport) {
    let comps: Vec<String> = r.achieving_prime.components.iter().map(|&c| set_text(c)).collect();
    println!("v                {}", r.v);
    if let Some(k) = r.v_at_kn {
        println!("v_at_Kn          {k}");
    }
    println!("achieving_prime  S = {}, components {}", set_text(r.achieving_prime.s), comps.join(" "));
    println!("method           {}", method_name(r.method));
}

/// `v(J_G)` by sweeping every minimal prime, and `v_{J_{K_n}}` by sweeping
/// `J_{K_n}` alone; `None` when nothing is found up to the cap.
fn algebraic_values(g: &Graph, cap: usize) -> Result<(Option<usize>, Option<usize>), Failure> {
    let v = bei::v_number_direct_up_to(g, cap)?;
    let at_kn = if g.is_connected() {
        let p = bei::prime_ps(g, VertexSet::EMPTY);
        Some(bei::v_local_with(g, &p, cap, Method::LinearSweep)?.0)
    } else {
        None
    };
    Ok((v, at_kn))
}

fn cmd_vnumber(file: &Path, mode: CliMode, max_degree: Option<usize>) -> CmdResult {
    let g = read_graph(file)?;
    let cap = max_degree.unwrap_or(2 * g.n());
    let shown = |v: Option<usize>| v.map_or_else(|| format!("> {cap}"), |v| v.to_string());
    match mode {
        CliMode::Combinatorial => print_combinatorial(&bei::v_number_capped(&g, max_degree)?),
        CliMode::Algebraic => {
            let (v, at_kn) = algebraic_values(&g, cap)?;
            println!("v                {}", shown(v));
            if let Some(k) = at_kn {
                println!("v_at_Kn          {k}");
            }
            println!("method           linear-sweep");
        }
        CliMode::Both => {
            let report = bei::v_number_capped(&g, max_degree)?;
            print_combinatorial(&report);
            let (v, at_kn) = algebraic_values(&g, cap)?;
            println!("algebraic v      {}", shown(v));
            if let Some(k) = at_kn {
                println!("algebraic v_at_Kn {k}");
            }
            if v.is_some_and(|v| v != report.v) {
                return Err(mismatch(format!("v: algebraic {} vs combinatorial {}", shown(v), report.v)));
            }
            if at_kn != report.v_at_kn {
                return Err(mismatch(format!("v_at_Kn: algebraic {at_kn:?} vs connected domination {:?}", report.v_at_kn)));
            }
        }
    }
    Ok(())
}

fn print_outcome(o: &CheckOutcome) {
    let status = if o.passed() { "PASS" } else { "FAIL" };
    println!("{status} {:<20} {} graphs, {} failures", o.name, o.graphs, o.failures.len());
    for f in o.failures.iter().take(5) {
        let edges: Vec<String> = f.graph.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        println!("     n={} edges [{}]: {}", f.graph.n(), edges.join(" "), f.detail);
    }
    if o.failures.len() > 5 {
        println!("     ... {} more", o.failures.len() - 5);
    }
}

fn cmd_verify(check: Option<&str>, n: Option<usize>, seed: u64) -> CmdResult {
    let cfg = VerifyConfig { n, seed };
    let outcomes = match check {
        Some(name) => {
            if !DEFAULT_CHECKS.contains(&name) && !EXTRA_CHECKS.contains(&name) {
                let known: Vec<&str> = DEFAULT_CHECKS.iter().chain(EXTRA_CHECKS).copied().collect();
                return Err(input_error(format!("unknown check {name:?}; known checks: {}", known.join(", "))));
            }
            vec![run_check(name, cfg)?]
        }
        None => run_default(cfg),
    };
    outcomes.iter().for_each(print_outcome);
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    if failed > 0 {
        return Err(mismatch(format!("{failed} of {} checks failed", outcomes.len())));
    }
    Ok(())
}

fn configure_threads() -> CmdResult {
    let Ok(raw) = std::env::var("BEI_THREADS") else { return Ok(()) };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| input_error(format!("BEI_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| input_error(format!("thread pool: {e}")))
}

fn dispatch(cli: Cli) -> CmdResult {
    configure_threads()?;
    match cli.command {
        Command::Invariants { file, json } => cmd_invariants(&file, json),
        Command::GammaC { file } => cmd_gamma_c(&file),
        Command::Vnumber { file, mode, max_degree } => cmd_vnumber(&file, mode, max_degree),
        Command::Verify { check, n, seed } => cmd_verify(check.as_deref(), n, seed),
        Command::Table5 { json } => table::run(json),
        Command::Examples => examples::run(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("bei-lab: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
