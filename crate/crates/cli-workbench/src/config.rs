//! Command-line surface and resolved run configuration.

use clap::{Parser, Subcommand, ValueEnum};
use regular_backend::{Backend, Limits};
use scalar_field::Scalar;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "workbench",
    version,
    about = "Exact workbench for tensor envelopes of regular categories"
)]
pub struct Cli {
    /// Regular backend.
    #[arg(long, global = true, value_enum, default_value_t = BackendArg::FinsetOp)]
    pub backend: BackendArg,
    /// Field size for the finvec backend.
    #[arg(long, global = true)]
    pub q: Option<u32>,
    /// Degree parameter: `generic` or a rational like `2` or `-1/3`.
    #[arg(long, global = true, default_value = "generic")]
    pub t: String,
    /// Truncation cap: objects of size 0..=N.
    #[arg(long = "N", global = true, default_value_t = 2)]
    pub n_cap: usize,
    /// Structure-constant cache directory (default: $WORKBENCH_CACHE_DIR).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Worker count for independent tasks; never affects report bytes.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    /// Seed for all randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    /// Opposite of finite sets: the partition-relation world.
    FinsetOp,
    /// Finite F_q vector spaces.
    Finvec,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Dimension of Hom([m], [n]) in the diagram category.
    Homdim { m: usize, n: usize },
    /// Compose two weighted relations given as a JSON file (`-` = stdin).
    Compose { input: PathBuf },
    /// Verify the triangular axioms (T1)-(T3) on the truncation.
    TriangularCheck,
    /// Truncated algebra operations.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Highest-weight certification.
    Hwc {
        #[command(subcommand)]
        cmd: HwcCmd,
    },
    /// Ringel duality data.
    Ringel {
        #[command(subcommand)]
        cmd: RingelCmd,
    },
    /// Monoidal compatibility checks.
    Tensor {
        #[command(subcommand)]
        cmd: TensorCmd,
    },
    /// Block structure and the abelian-envelope criterion.
    Blocks,
    /// Relation-calculus property suites.
    Appendix {
        #[command(subcommand)]
        cmd: AppendixCmd,
    },
}

#[derive(Subcommand)]
pub enum AlgebraCmd {
    /// Build the truncation and report its structure, updating the cache.
    Build,
}

#[derive(Subcommand)]
pub enum HwcCmd {
    /// Run the full highest-weight axiom battery.
    Verify,
}

#[derive(Subcommand)]
pub enum RingelCmd {
    /// Minimal projective resolutions of the standard modules.
    Resolve,
    /// The Ringel dual algebra with its certification report.
    Dual,
    /// The indecomposable tilting modules with both certificates.
    Tilting,
}

#[derive(Subcommand)]
pub enum TensorCmd {
    /// The (ΔTor)/(Δ⊗)/(Y⊗) verdicts with dimension bookkeeping, all pairs.
    Check,
    /// Decompose the tensor product of two catalogue objects.
    Decompose { lhs: usize, rhs: usize },
}

#[derive(Subcommand)]
pub enum AppendixCmd {
    /// Seeded property fuzzer for the n-ary relation calculus.
    Fuzz {
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

/// A fully resolved run configuration.
pub struct RunConfig {
    pub backend: Backend,
    pub u: Scalar,
    pub u_label: String,
    pub n_cap: usize,
    pub limits: Limits,
    pub cache_dir: Option<PathBuf>,
    pub threads: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Invalid configuration or input: exit code 2.
    #[error("configuration error: {0}")]
    Config(String),
    /// A property, axiom, or consistency failure: exit code 1.
    #[error("failure: {0}")]
    Failure(String),
}

pub fn resolve(cli: &Cli) -> Result<RunConfig, CliError> {
    let backend = match cli.backend {
        BackendArg::FinsetOp => {
            if cli.q.is_some() {
                return Err(CliError::Config(
                    "--q only applies to the finvec backend".into(),
                ));
            }
            Backend::FinSetOp
        }
        BackendArg::Finvec => {
            let q = cli.q.unwrap_or(2);
            if q < 2 || q > 4 {
                return Err(CliError::Config(format!(
                    "unsupported field size q={q} (supported: 2..=4)"
                )));
            }
            Backend::FinVecFq { q }
        }
    };
    let (u, u_label) = if cli.t == "generic" {
        (Scalar::t(), "generic".to_string())
    } else {
        let s = Scalar::parse(&cli.t)
            .map_err(|e| CliError::Config(format!("cannot parse --t {:?}: {e}", cli.t)))?;
        if s.as_rational().is_none() {
            return Err(CliError::Config(
                "--t must be `generic` or a rational constant".into(),
            ));
        }
        let label = s.to_string();
        (s, label)
    };
    let limits = Limits::default();
    let cap = match backend {
        Backend::FinSetOp => limits.max_set_size,
        Backend::FinVecFq { .. } => limits.max_dim,
    };
    if cli.n_cap > cap {
        return Err(CliError::Config(format!(
            "--N {} exceeds the backend size cap {cap}",
            cli.n_cap
        )));
    }
    if cli.threads == 0 {
        return Err(CliError::Config("--threads must be at least 1".into()));
    }
    let cache_dir = cli
        .cache_dir
        .clone()
        .or_else(|| std::env::var_os("WORKBENCH_CACHE_DIR").map(PathBuf::from));
    Ok(RunConfig {
        backend,
        u,
        u_label,
        n_cap: cli.n_cap,
        limits,
        cache_dir,
        threads: cli.threads,
        seed: cli.seed,
        out: cli.out.clone(),
    })
}
