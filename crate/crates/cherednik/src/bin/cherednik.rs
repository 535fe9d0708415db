use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::mpsc;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};

use cherednik::cli::{self, output::ErrorOut, Cache, Command, RunConfig};
use cherednik::Error;

#[derive(Parser)]
#[command(name = "cherednik", version, about = "Rational Cherednik algebras at t = 0")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Order, classes, characters and parameter names of a group.
    GroupInfo(Opts),
    /// Center generators as PBW normal forms.
    CenterGenerators(Opts),
    /// Relations between the center generators.
    Presentation(Opts),
    /// Poisson brackets {z_i, z_j} in the generators.
    PoissonMatrix(Opts),
    /// Calogero–Moser families (generic, on a hyperplane or at a point).
    Families(Opts),
    /// Calogero–Moser hyperplanes with their families.
    Hyperplanes(Opts),
    /// Cuspidal families at a point.
    Cuspidal(Opts),
    /// Cellular characters at a point.
    Cellular(Opts),
    /// Poincaré polynomial, chambers and terminalization count.
    Arrangement(Opts),
    /// Compare CM families with Rouquier families.
    Martino(Opts),
}

#[derive(Args, Clone)]
struct Opts {
    /// Shipped group name (see group-info) or path to a group file.
    #[arg(long)]
    group: Option<String>,
    /// Parameter point, e.g. k1=1,k2=1 or C1=1/2.
    #[arg(long)]
    at: Option<String>,
    /// Linear form in the K (or C) variables.
    #[arg(long)]
    hyperplane: Option<String>,
    #[arg(long)]
    generic: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Total degree bound for invariant generators (default |W|).
    #[arg(long)]
    bound: Option<u32>,
    /// Character label or 1-based index for per-representation mode.
    #[arg(long)]
    rep: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    from_group: Option<String>,
    #[arg(long)]
    rouquier_file: Option<PathBuf>,
    /// Abort the Gröbner computation after this many S-pairs.
    #[arg(long)]
    max_pairs: Option<usize>,
    #[arg(long)]
    max_degree: Option<u32>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    timeout: Option<u64>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Bypass the cache even if CHEREDNIK_CACHE is set.
    #[arg(long)]
    no_cache: bool,
}

fn fail(code: u8, error: &str, detail: String) -> ExitCode {
    let e = ErrorOut {
        error: error.to_string(),
        detail,
    };
    println!("{}", serde_json::to_string_pretty(&e).unwrap());
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let (command, o) = match args.command {
        Cmd::GroupInfo(o) => (Command::GroupInfo, o),
        Cmd::CenterGenerators(o) => (Command::CenterGenerators, o),
        Cmd::Presentation(o) => (Command::Presentation, o),
        Cmd::PoissonMatrix(o) => (Command::PoissonMatrix, o),
        Cmd::Families(o) => (Command::Families, o),
        Cmd::Hyperplanes(o) => (Command::Hyperplanes, o),
        Cmd::Cuspidal(o) => (Command::Cuspidal, o),
        Cmd::Cellular(o) => (Command::Cellular, o),
        Cmd::Arrangement(o) => (Command::Arrangement, o),
        Cmd::Martino(o) => (Command::Martino, o),
    };
    let cfg = RunConfig {
        command,
        group: o.group,
        at: o.at,
        hyperplane: o.hyperplane,
        generic: o.generic,
        seed: o.seed,
        bound: o.bound,
        rep: o.rep,
        file: o.file,
        from_group: o.from_group,
        rouquier_file: o.rouquier_file,
        max_pairs: o.max_pairs,
        max_degree: o.max_degree,
        jobs: o.jobs,
        cache: if o.no_cache { None } else { Cache::from_env() },
    };
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(cli::run(cfg));
    });
    let res = match o.timeout {
        Some(s) => match rx.recv_timeout(Duration::from_secs(s)) {
            Ok(r) => r,
            Err(_) => return fail(2, "resource limit", format!("time limit of {s}s exceeded")),
        },
        None => rx.recv().unwrap_or_else(|_| Err(Error::Domain("worker panicked".into()))),
    };
    match res {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) if e.is_resource_limit() => fail(2, e.kind(), e.to_string()),
        Err(e) => fail(1, e.kind(), e.to_string()),
    }
}
