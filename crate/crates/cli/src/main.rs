use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gaudinlab::commutant::counter::run_counterexample;
use gaudinlab::commutant::cyclic::seeded_rng;
use gaudinlab::commutant::verdict::CYCLIC_TRIALS;
use gaudinlab::lie::{FormNormalization, LieType};
use gaudinlab::report::run::{apply_overrides, load_config, load_extra_generators};
use gaudinlab::report::{error_exit_code, parse_grid, rep_build, resolve_cache_dir, run_gaudin, run_sweep};
use gaudinlab::report::{ModuleCache, RunOptions, SweepParam};
use gaudinlab::{Error, Result};

/// `println!` that ignores a closed stdout.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(name = "gaudinlab", version, about = "Exact-arithmetic Gaudin model laboratory")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Module cache directory (falls back to $GAUDINLAB_CACHE, then ./cache).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Per-site dimension cap.
    #[arg(long, global = true)]
    dim_cap: Option<usize>,
    /// Tolerance for the floating-point eigenvalue cross-check.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Add the Cartan generators D(h_i) to the algebra.
    #[arg(long, global = true)]
    include_cartan: bool,
    /// JSON file holding a list of extra current monomials.
    #[arg(long, global = true)]
    extra_generators: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible highest-weight modules.
    Rep {
        #[command(subcommand)]
        command: RepCommand,
    },
    /// Gaudin model runs.
    Gaudin {
        #[command(subcommand)]
        command: GaudinCommand,
    },
    /// The built-in cyclic, non-Frobenius three-dimensional algebra.
    Counterexample {
        #[arg(long)]
        json: bool,
        #[arg(long)]
        explain: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum RepCommand {
    /// Build (or load from cache) V(λ) and print its weight multiplicities.
    Build {
        lie_type: LieType,
        rank: usize,
        /// Highest weight in fundamental-weight coordinates, e.g. `2,0`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Vec<i64>,
        #[arg(long, default_value = "killing")]
        form: FormNormalization,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum GaudinCommand {
    /// Run one config and write verdict.json and manifest.json.
    Run {
        config: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vary one parameter over a grid and print a CSV of verdicts.
    Sweep {
        config: PathBuf,
        /// `z<i>` or `mu<i>` (1-based).
        #[arg(long)]
        vary: SweepParam,
        /// Comma-separated values or an inclusive integer range `a:b`.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        grid: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run_options(global: &Global, seed: u64, out: Option<PathBuf>) -> Result<RunOptions> {
    let extra = match &global.extra_generators {
        Some(p) => Some(load_extra_generators(p)?),
        None => None,
    };
    Ok(RunOptions {
        seed,
        out,
        cache_dir: resolve_cache_dir(global.cache_dir.as_deref()),
        dim_cap: global.dim_cap,
        tolerance: global.tolerance,
        include_cartan: global.include_cartan.then_some(true),
        extra_generators: extra,
    })
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Rep {
            command: RepCommand::Build { lie_type, rank, weight, form, json },
        } => {
            let mut cache = ModuleCache::new(resolve_cache_dir(cli.global.cache_dir.as_deref()));
            let s = rep_build(lie_type, rank, &weight, form, &mut cache, cli.global.dim_cap)?;
            if json {
                out!("{}", serde_json::to_string_pretty(&s)?);
            } else {
                out!("{} V{:?}: dim {}", s.algebra, s.highest_weight, s.dim);
                out!("cache: {} ({})", s.cache_path, if s.cache_hit { "hit" } else { "built" });
                if let Some(c) = &s.casimir {
                    out!("casimir ({form}): {c}");
                }
                for m in &s.multiplicities {
                    out!("  {:?} x{}", m.weight, m.multiplicity);
                }
            }
            Ok(0)
        }
        Command::Gaudin {
            command: GaudinCommand::Run { config, seed, out },
        } => {
            let opts = run_options(&cli.global, seed, out)?;
            let outcome = run_gaudin(&config, &opts)?;
            out!("{}", outcome.verdict_json.trim_end());
            for c in outcome.verdict.checks.iter().filter(|c| c.failed_required()) {
                eprintln!("check failed: {} ({})", c.name, c.detail);
            }
            Ok(outcome.exit_code())
        }
        Command::Gaudin {
            command: GaudinCommand::Sweep { config, vary, grid, seed, out },
        } => {
            let opts = run_options(&cli.global, seed, None)?;
            let base = apply_overrides(load_config(&config)?, &RunOptions { extra_generators: None, ..opts.clone() });
            let csv = run_sweep(&base, vary, &parse_grid(&grid)?, &opts)?;
            match out {
                Some(p) => write_file(&p, &csv)?,
                None => out!("{}", csv.trim_end()),
            }
            Ok(0)
        }
        Command::Counterexample { json, explain, seed } => {
            let r = run_counterexample(CYCLIC_TRIALS, &mut seeded_rng(seed))?;
            if json {
                out!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                out!("cyclic: {}", if r.cyclic_holds { "yes" } else { "no" });
                out!("frobenius: {}", if r.not_frobenius_holds { "no" } else { "not refuted" });
                out!(
                    "trivial-character eigenspace: dim {} (generalized {})",
                    r.trivial_eigenspace_dim, r.trivial_generalized_dim
                );
                out!("dim algebra: {}", r.algebra_dim);
            }
            if explain {
                out!("basis: {{{}}}", r.basis.join(", "));
                out!("lambda-Gram (lambda(b_i b_j), lambda = t0*1* + t1*x1* + t2*x2*):");
                for row in &r.lambda_gram {
                    out!("  [{}]", row.join(", "));
                }
                out!("det = {}", r.lambda_determinant);
            }
            Ok(if r.pass { 0 } else { 1 })
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, text).map_err(Error::from)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
