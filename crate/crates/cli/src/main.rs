use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use syzlift::agr::{gen_agr, gen_random_sparse, AgrSpec};
use syzlift::betti::{betti_minimal_from_nonminimal, betti_nonminimal};
use syzlift::io::{differential_pgm, format_input, format_resolution, parse_input, stats_report, write_pgm};
use syzlift::{resolve, Error, LiftAlgorithm, Reorder, ResolveOptions, Ring};

#[derive(Parser)]
#[command(name = "syzlift", version, about = "Free resolutions of homogeneous ideals over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Resolve an ideal read from FILE, standard input or an AGR specification.
    Resolve(ResolveArgs),
    /// Print a benchmark ideal in the input format.
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BettiMode {
    Min,
    Nonmin,
    Both,
}

#[derive(Args)]
struct ResolveArgs {
    /// Input file; `-` or nothing reads standard input.
    file: Option<PathBuf>,
    /// Use the apolar ideal of a random sum of powers instead of a file: N,D,S,P.
    #[arg(long, value_name = "N,D,S,P", conflicts_with = "file")]
    agr: Option<String>,
    /// Seed for --agr.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "tree", value_parser = parse_alg)]
    alg: LiftAlgorithm,
    /// Maximal number of differentials.
    #[arg(long)]
    max_length: Option<usize>,
    #[arg(long, default_value = "negdegrevlex", value_parser = parse_reorder)]
    reorder: Reorder,
    /// Remove unit entries before output.
    #[arg(long)]
    minimize: bool,
    #[arg(long, value_enum)]
    betti: Option<BettiMode>,
    #[arg(long)]
    stats: bool,
    /// Per-differential statistics with timings.
    #[arg(long)]
    verbose: bool,
    /// Write PREFIX_phi<k>.pgm for every differential.
    #[arg(long, value_name = "PREFIX")]
    image: Option<String>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Write the resolution to this file.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Apolar ideal of a sum of S powers of random linear forms.
    Agr {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 10007)]
        p: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random homogeneous forms.
    Random {
        #[arg(long)]
        vars: usize,
        /// Comma separated degrees, one form each.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
        /// Keep at most this many terms per form.
        #[arg(long)]
        terms: Option<usize>,
        #[arg(long, default_value_t = 32003)]
        p: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_alg(s: &str) -> Result<LiftAlgorithm, String> {
    s.parse()
}

fn parse_reorder(s: &str) -> Result<Reorder, String> {
    s.parse()
}

enum Failure {
    Usage(String),
    Io(String),
    Math(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_math_domain() {
            Failure::Math(e)
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn io_err(path: &std::path::Path, e: io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn parse_agr(text: &str, seed: u64) -> Result<AgrSpec, Failure> {
    let parts: Vec<u64> = text
        .split(',')
        .map(|p| p.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("--agr expects N,D,S,P, got `{text}`")))?;
    let [n, d, s, p] = parts[..] else {
        return Err(Failure::Usage(format!("--agr expects N,D,S,P, got `{text}`")));
    };
    Ok(AgrSpec {
        n: n as usize,
        d: d as u32,
        s: s as usize,
        p,
        seed,
    })
}

fn read_input(args: &ResolveArgs) -> Result<(Ring, Vec<syzlift::ModuleVector>), Failure> {
    if let Some(agr) = &args.agr {
        return Ok(gen_agr(&parse_agr(agr, args.seed)?)?);
    }
    let text = match &args.file {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(|e| io_err(p, e))?,
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("standard input: {e}")))?;
            s
        }
    };
    let doc = parse_input(&text)?;
    Ok((doc.ring, doc.polys))
}

fn run_resolve(args: &ResolveArgs, out: &mut String) -> Result<(), Failure> {
    if args.threads == 0 {
        return Err(Failure::Usage("--threads must be positive".into()));
    }
    let (ring, polys) = read_input(args)?;
    let opts = ResolveOptions {
        algorithm: args.alg,
        max_length: args.max_length,
        reorder: args.reorder,
        threads: args.threads,
        require_graded: args.betti.is_some() || args.minimize,
    };
    let mut res = resolve(&ring, &polys, &[0], &opts)?;
    if let Some(mode) = args.betti {
        if mode != BettiMode::Min {
            out.push_str("non-minimal Betti table\n");
            out.push_str(&betti_nonminimal(&res)?.to_string());
        }
        if mode != BettiMode::Nonmin {
            if mode == BettiMode::Both {
                out.push('\n');
            }
            out.push_str("minimal Betti table\n");
            out.push_str(&betti_minimal_from_nonminimal(&res)?.to_string());
        }
    }
    if args.minimize {
        res = res.minimize()?;
    }
    if args.stats || args.verbose {
        if !out.is_empty() {
            out.push('\n');
        }
        out.push_str(&stats_report(&res, args.verbose));
    }
    if let Some(prefix) = &args.image {
        for k in 1..=res.length() {
            let path = PathBuf::from(format!("{prefix}_phi{k}.pgm"));
            write_pgm(&path, &differential_pgm(&res, k)?).map_err(|e| io_err(&path, e))?;
        }
    }
    let text = format_resolution(&res);
    match &args.output {
        Some(path) => fs::write(path, text).map_err(|e| io_err(path, e))?,
        None if args.betti.is_none() && !args.stats && !args.verbose => out.push_str(&text),
        None => {}
    }
    Ok(())
}

fn run_gen(cmd: &GenCommand, out: &mut String) -> Result<(), Failure> {
    let (ring, polys) = match *cmd {
        GenCommand::Agr { n, d, s, p, seed } => gen_agr(&AgrSpec { n, d, s, p, seed })?,
        GenCommand::Random {
            vars,
            ref degrees,
            terms,
            p,
            seed,
        } => gen_random_sparse(vars, degrees, terms.unwrap_or(usize::MAX), p, seed)?,
    };
    out.push_str(&format_input(&ring, &polys));
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let mut out = String::new();
    let result = match &cli.command {
        Command::Resolve(args) => run_resolve(args, &mut out),
        Command::Gen(cmd) => run_gen(cmd, &mut out),
    };
    match result {
        Ok(()) => {
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) | Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Math(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
