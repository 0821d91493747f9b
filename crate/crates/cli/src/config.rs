use clap::{Args, Parser, Subcommand, ValueEnum};
use gasylv_core::sylvester::Method;
use gasylv_core::{Ring, Signature, Tolerance};

#[derive(Debug, Parser)]
#[command(
    name = "gasylv",
    version,
    about = "Clifford algebra determinants, inverses and Sylvester equations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve AX - XB = C.
    Solve {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long = "a", value_name = "EXPR", allow_hyphen_values = true)]
        a: String,
        #[arg(long = "b", value_name = "EXPR", allow_hyphen_values = true)]
        b: String,
        #[arg(long = "c", value_name = "EXPR", allow_hyphen_values = true)]
        c: String,
        /// Solver to use; defaults to the fastest one for the dimension.
        #[arg(long, value_parser = parse_method)]
        method: Option<Method>,
    },
    /// Determinant of B.
    Det(ElementArgs),
    /// Inverse of B.
    Inverse(ElementArgs),
    /// Characteristic polynomial coefficients b(1)..b(N) of B.
    Charpoly {
        #[command(flatten)]
        element: ElementArgs,
        /// Central coefficients b'(1)..b'(N/2) instead (odd n only).
        #[arg(long)]
        generalized: bool,
    },
    /// Time the dense geometric product.
    Bench {
        /// Comma-separated dimensions, e.g. 2,3,4,5. Empty for no rows.
        #[arg(long, default_value = "2,3,4,5", value_parser = parse_sizes)]
        sizes: Sizes,
        #[arg(long, env = "GASYLV_SCALAR", default_value = "rational", value_parser = parse_ring)]
        scalar: Ring,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct ElementArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long = "b", value_name = "EXPR", allow_hyphen_values = true)]
    pub b: String,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Signature as P,Q.
    #[arg(long, value_parser = parse_signature)]
    pub signature: Signature,
    #[arg(long, env = "GASYLV_SCALAR", default_value = "rational", value_parser = parse_ring)]
    pub scalar: Ring,
    /// Zero-test tolerance for f64 scalars.
    #[arg(long, env = "GASYLV_TOL", value_parser = parse_tolerance)]
    pub tol: Option<f64>,
    /// Residual acceptance tolerance for f64 scalars.
    #[arg(long, value_parser = parse_tolerance)]
    pub residual_tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Render exact results as decimals.
    #[arg(long)]
    pub decimal: bool,
}

impl RunArgs {
    pub fn tolerance(&self) -> Tolerance {
        let default = Tolerance::default();
        Tolerance {
            zero: self.tol.unwrap_or(default.zero),
            residual: self.residual_tol.unwrap_or(default.residual),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sizes(pub Vec<usize>);

pub const BENCH_MAX_DIM: usize = 12;

fn parse_signature(s: &str) -> Result<Signature, String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected P,Q, got `{s}`"))?;
    let p = p.trim().parse().map_err(|_| format!("bad P in `{s}`"))?;
    let q = q.trim().parse().map_err(|_| format!("bad Q in `{s}`"))?;
    Signature::new(p, q).map_err(|e| e.to_string())
}

fn parse_ring(s: &str) -> Result<Ring, String> {
    s.parse()
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(t) if t > 0.0 && t.is_finite() => Ok(t),
        Ok(_) => Err(format!("tolerance must be positive, got `{s}`")),
        Err(_) => Err(format!("bad tolerance `{s}`")),
    }
}

fn parse_sizes(s: &str) -> Result<Sizes, String> {
    let mut sizes = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let n: usize = part.parse().map_err(|_| format!("bad size `{part}`"))?;
        if !(1..=BENCH_MAX_DIM).contains(&n) {
            return Err(format!("size {n} outside 1..={BENCH_MAX_DIM}"));
        }
        sizes.push(n);
    }
    Ok(Sizes(sizes))
}
