//! Command-line front end. Exit status: 0 success, 1 a verification failed,
//! 2 bad usage or configuration.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::exactpoly::{Poly, Rational};
use crate::families::{Families, Family};
use crate::grammar::Grammar;
use crate::par::ExecMode;
use crate::permstats::{self, EnumCap, Predicate, Statistic};
use crate::verify::{gamma_extract, run_suite, SuiteOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "altgamma", version, about = "Alternating Eulerian polynomials, exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CapArgs {
    /// Largest n to brute-force over signed permutations (n + 2 for unsigned).
    #[arg(long)]
    pub enum_cap: Option<usize>,
    /// Run without the thread pool.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print rows of a polynomial family.
    Table {
        family: String,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long, default_value_t = 10)]
        to: usize,
        #[arg(long, conflicts_with = "bfile")]
        json: bool,
        #[arg(long)]
        bfile: bool,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Run identity checks and print one verdict per line.
    Verify {
        #[arg(default_value = "all")]
        id: String,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = crate::egfseries::DEFAULT_ORDER)]
        order: usize,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Distribution of a statistic, or a count of snakes / alternating
    /// permutations, by brute force.
    Enumerate {
        #[arg(long)]
        stat: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Print D_G^n(seed).
    Derive {
        /// Built-in name (dumont, typeB, g1, g2, g3) or rules "e->e*(x+y); ...".
        #[arg(long)]
        grammar: String,
        #[arg(long)]
        seed: String,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        json: bool,
    },
    /// Coefficients of a family row in the basis (c x)^k (1+x)^(m-2k).
    Gamma {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        scale: String,
        /// Defaults to the degree window of the family.
        #[arg(long)]
        window: Option<u32>,
    },
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

impl CapArgs {
    fn resolve(&self) -> Result<(EnumCap, ExecMode), Usage> {
        let cap = match self.enum_cap {
            Some(n) => EnumCap::from_single(n),
            None => EnumCap::from_env()?,
        };
        let mode = if self.sequential { ExecMode::Sequential } else { ExecMode::default() };
        Ok((cap, mode))
    }

    fn families(&self) -> Result<Families, Usage> {
        let (cap, mode) = self.resolve()?;
        Ok(Families { cap, mode, ..Families::default() })
    }
}

fn natural_window(family: Family, n: usize) -> u32 {
    match family {
        Family::AltA | Family::EulerA => n.saturating_sub(1) as u32,
        Family::P => n as u32 + 1,
        _ => n as u32,
    }
}

/// Parse `args` (including the program name) and run, writing to `out` and
/// `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, Usage> {
    match cmd {
        Command::Table { family, from, to, json, bfile, cap } => {
            let family: Family = family.parse()?;
            let table = cap.families()?.table(family, from, to)?;
            if json {
                let rows: Vec<_> = table
                    .rows
                    .iter()
                    .map(|r| json!({"n": r.n, "provenance": r.provenance.to_string(), "poly": r.poly.to_json()}))
                    .collect();
                writeln!(out, "{}", json!({"family": family.name(), "rows": rows}))?;
            } else if bfile {
                for r in &table.rows {
                    if family.is_scalar() {
                        writeln!(out, "{} {}", r.n, r.poly)?;
                    } else {
                        writeln!(out, "{}", r.poly)?;
                    }
                }
            } else {
                for r in &table.rows {
                    writeln!(out, "{}({}) = {}  [{}]", family, r.n, r.poly, r.provenance)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { id, max_n, order, cap } => {
            let (cap, mode) = cap.resolve()?;
            let opts = SuiteOptions { max_n, order, cap, mode, fault: None, select: Some(id) };
            let reports = run_suite(&opts)?;
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            writeln!(out, "{passed}/{} passed", reports.len())?;
            Ok(if passed == reports.len() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Enumerate { stat, n, json, cap } => {
            let (cap, mode) = cap.resolve()?;
            if let Ok(pred) = stat.parse::<Predicate>() {
                let c = permstats::count(pred, n, &cap)?;
                if json {
                    writeln!(out, "{}", json!({"predicate": stat, "n": n, "count": c}))?;
                } else {
                    writeln!(out, "{c}")?;
                }
                return Ok(EXIT_OK);
            }
            let s: Statistic = stat.parse()?;
            let d = permstats::distribution_with(s, n, &cap, mode)?;
            if json {
                writeln!(out, "{}", d.to_json())?;
            } else {
                writeln!(out, "{d}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Derive { grammar, seed, steps, json } => {
            let g = Grammar::from_name_or_literal(&grammar)?;
            let seed = Poly::parse(&seed)?;
            let d = g.derive_iter(&seed, steps)?;
            if json {
                writeln!(out, "{}", d.to_json_with_vars(g.alphabet()))?;
            } else {
                writeln!(out, "{d}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Gamma { family, n, scale, window } => {
            let family: Family = family.parse()?;
            let c: Rational = scale.parse().map_err(|_| Usage(format!("bad scale `{scale}`")))?;
            let m = window.unwrap_or_else(|| natural_window(family, n));
            let row = Families::default().row(family, n)?;
            match gamma_extract(&row.poly, &c, m) {
                Ok(g) => {
                    let cs: Vec<String> = g.coeffs.iter().map(ToString::to_string).collect();
                    writeln!(out, "[{}]", cs.join(", "))?;
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(out, "{family}({n}) = {}: {e}", row.poly)?;
                    Ok(EXIT_FAIL)
                }
            }
        }
    }
}
