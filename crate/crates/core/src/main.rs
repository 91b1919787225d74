use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hopfext::cli::{
    self, BuildRequest, CliReport, Options, SigmaSource, EXIT_INPUT_ERROR,
};
use hopfext::examples::{H16Params, SfParams, TyParams};
use hopfext::{CycNum, Error, Result};

/// Exact checks for Z/2-graded extensions of Hopf-algebra module categories.
#[derive(Parser)]
#[command(name = "hopfext", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Write the report (or example spec) here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Require all numbers to lie in Q(ζ_N).
    #[arg(long, global = true, value_name = "N")]
    field_conductor: Option<u32>,
    /// Base symmetric category; `vect` rejects odd basis vectors.
    #[arg(long, global = true)]
    mode: Option<ModeArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Vect,
    Svect,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the Hopf-algebra axioms of a spec.
    VerifyHopf { spec: PathBuf },
    /// Check the conditions on (γ, λ), the pentagon and the derived data.
    CheckMonoidal { spec: PathBuf },
    /// Additionally check (σ, β), the hexagons, ribbon data and transparency.
    CheckBraided {
        spec: PathBuf,
        /// Exhaustive σ search over a bounded ansatz (Sweedler's H4, example scale only).
        #[arg(long, conflicts_with = "sigma_file")]
        search_sigma: bool,
        /// JSON array of σ coordinates, or an object with `sigma` (and `beta`).
        #[arg(long)]
        sigma_file: Option<PathBuf>,
        /// β as `p/q` or `N:c0,c1,…` (coefficients of powers of ζ_N).
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
    },
    /// Write the JSON spec file of a standard example.
    BuildExample {
        #[command(subcommand)]
        example: ExampleCmd,
    },
    /// Run every example family's complete check matrix.
    FullSuite,
}

#[derive(Subcommand)]
enum ExampleCmd {
    /// Tambara-Yamagami data on a finite abelian group.
    Ty {
        /// Cyclic factor orders, e.g. `2,2`.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        orders: Vec<u32>,
        /// Use c = −1/√|A|.
        #[arg(long)]
        negative_c: bool,
        /// Include the k-th valid braiding (A an elementary abelian 2-group).
        #[arg(long, value_name = "K")]
        braiding: Option<usize>,
    },
    /// Symplectic fermions on a d-dimensional odd space.
    Sf(SfArgs),
    /// Sweedler's four-dimensional Hopf algebra with λ(gx) = t.
    Sweedler {
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        t: String,
    },
    /// The 16-dimensional triangular Hopf algebra.
    H16 {
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        zeta: i8,
        /// Take the non-principal square root for β.
        #[arg(long)]
        other_root: bool,
    },
}

#[derive(Args)]
struct SfArgs {
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    zeta: i8,
    /// Use √−1 = −i.
    #[arg(long)]
    minus_i: bool,
    /// Take the non-principal square root for β.
    #[arg(long)]
    other_root: bool,
}

fn read(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

fn parse_num(s: &str, what: &str) -> Result<CycNum> {
    s.parse().map_err(|e: Error| Error::InvalidInput(format!("{what}: {e}")))
}

fn request(example: &ExampleCmd) -> Result<BuildRequest> {
    Ok(match example {
        ExampleCmd::Ty { orders, negative_c, braiding } => {
            BuildRequest::Ty { params: TyParams::standard(orders.clone(), !negative_c)?, braiding: *braiding }
        }
        ExampleCmd::Sf(a) => BuildRequest::Sf(SfParams {
            d: a.d,
            zeta: a.zeta,
            i_plus: !a.minus_i,
            beta_principal: !a.other_root,
        }),
        ExampleCmd::Sweedler { t } => BuildRequest::Sweedler { t: parse_num(t, "--t")? },
        ExampleCmd::H16 { zeta, other_root } => {
            BuildRequest::H16(H16Params { zeta: *zeta, beta_principal: !other_root })
        }
    })
}

enum Output {
    Report(CliReport),
    Text(String),
}

fn run(cli: &Cli) -> Result<Output> {
    let opts = Options {
        conductor: cli.field_conductor,
        mode: cli.mode.map(|m| match m {
            ModeArg::Vect => cli::Mode::Vect,
            ModeArg::Svect => cli::Mode::Svect,
        }),
    };
    Ok(match &cli.cmd {
        Cmd::VerifyHopf { spec } => Output::Report(cli::cmd_verify_hopf(&read(spec)?, &opts)?),
        Cmd::CheckMonoidal { spec } => Output::Report(cli::cmd_check_monoidal(&read(spec)?, &opts)?),
        Cmd::CheckBraided { spec, search_sigma, sigma_file, beta } => {
            let source = match (search_sigma, sigma_file) {
                (true, _) => SigmaSource::Search,
                (false, Some(f)) => SigmaSource::File(read(f)?),
                (false, None) => SigmaSource::Spec,
            };
            let beta = beta.as_deref().map(|b| parse_num(b, "--beta")).transpose()?;
            Output::Report(cli::cmd_check_braided(&read(spec)?, &opts, &source, beta)?)
        }
        Cmd::BuildExample { example } => Output::Text(cli::cmd_build_example(&request(example)?, &opts)?),
        Cmd::FullSuite => Output::Report(cli::cmd_full_suite(&opts)?),
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, format!("{text}\n"))
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", p.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| match o {
        Output::Report(r) => emit(cli.out.as_deref(), &r.to_json()).map(|_| r.exit_code()),
        Output::Text(t) => emit(cli.out.as_deref(), &t).map(|_| 0),
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            println!("{}", cli::error_json(&e));
            ExitCode::from(EXIT_INPUT_ERROR as u8)
        }
    }
}
