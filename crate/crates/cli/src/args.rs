use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use kzr_core::symrep::{builtin_s4_22, builtin_s5_gen1, young_orthogonal, Partition, Representation};
use kzr_core::verify::{default_grid, GridPoint};
use kzr_exact::Rational;

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "kzr", version, about = "Build, solve and verify KZ systems for symmetric-group representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check involution, braid and commutation identities plus flatness.
    ValidateRep(RepArgs),
    /// Test whether every residue matrix Q_k has an integer spectrum.
    Rationality {
        #[command(flatten)]
        rep: RepArgs,
        /// Only this k (1-based); default is every computable k.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Emit the hypergeometric pair and frame values on a grid.
    Solve(SolveArgs),
    /// Run the residual suite and aggregate pass/fail.
    Verify(VerifyArgs),
    /// Write a representation as JSON.
    ExportRep(RepArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Print the JSON report instead of a summary.
    #[arg(long, global = true)]
    pub json: bool,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RepArgs {
    /// s4-22, s5-gen1, young:<parts> or file:<path>.
    #[arg(long, default_value = "s4-22")]
    pub rep: RepSelector,
    /// Degree n for young: selectors; defaults to the partition size.
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, allow_hyphen_values = true, default_value = "-1", value_parser = parse_rational)]
    pub rho: Rational,
    /// `default` or a JSON file holding [{"y": "p/q", "z": "p/q"}, ...].
    #[arg(long, default_value = "default")]
    pub grid: GridSource,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, allow_hyphen_values = true, default_value = "-1", value_parser = parse_rational)]
    pub rho: Rational,
    #[arg(long, default_value = "default")]
    pub grid: GridSource,
    /// Number of fixed lines per equation (1 to 3).
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub lines: u8,
    /// Finite-difference residual tolerance.
    #[arg(long, default_value_t = 1e-8, value_parser = parse_positive)]
    pub tol: f64,
    #[command(flatten)]
    pub output: Output,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    kzr_exact::rational::parse_decimal(s.trim()).map_err(|e| e.to_string())
}

fn parse_positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum RepSelector {
    S4_22,
    S5Gen1,
    Young(Vec<usize>),
    File(PathBuf),
}

impl FromStr for RepSelector {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "s4-22" => Ok(RepSelector::S4_22),
            "s5-gen1" => Ok(RepSelector::S5Gen1),
            _ => {
                if let Some(parts) = s.strip_prefix("young:") {
                    let p: Partition = parts.parse().map_err(|e: kzr_core::KzError| e.to_string())?;
                    Ok(RepSelector::Young(p.parts().to_vec()))
                } else if let Some(path) = s.strip_prefix("file:") {
                    Ok(RepSelector::File(path.into()))
                } else {
                    Err(format!("unknown representation {s:?}; expected s4-22, s5-gen1, young:<parts> or file:<path>"))
                }
            }
        }
    }
}

impl RepArgs {
    pub fn load(&self) -> Result<Representation, CliError> {
        let rep = match &self.rep {
            RepSelector::S4_22 => builtin_s4_22(),
            RepSelector::S5Gen1 => builtin_s5_gen1(),
            RepSelector::Young(parts) => {
                let partition = Partition::new(parts.clone())?;
                young_orthogonal(&partition, self.n.unwrap_or(partition.size()))?
            }
            RepSelector::File(path) => Representation::from_json(&std::fs::read_to_string(path)?)?,
        };
        if let Some(n) = self.n {
            if n != rep.n() {
                return Err(CliError::Usage(format!("--n {n} does not match the representation degree {}", rep.n())));
            }
        }
        Ok(rep)
    }

    pub fn label(&self) -> String {
        match &self.rep {
            RepSelector::S4_22 => "s4-22".into(),
            RepSelector::S5Gen1 => "s5-gen1".into(),
            RepSelector::Young(p) => {
                let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                format!("young:{}", parts.join(","))
            }
            RepSelector::File(path) => format!("file:{}", path.display()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GridSource {
    Default,
    File(PathBuf),
}

impl FromStr for GridSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "default" => GridSource::Default,
            path => GridSource::File(path.into()),
        })
    }
}

impl GridSource {
    pub fn load(&self) -> Result<Vec<GridPoint>, CliError> {
        match self {
            GridSource::Default => Ok(default_grid()),
            GridSource::File(path) => {
                let grid: Vec<GridPoint> = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                if grid.is_empty() {
                    return Err(CliError::Usage("grid file holds no points".into()));
                }
                Ok(grid)
            }
        }
    }
}
