mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ordmode::asymptotics::{convergence_table, AsymptoticModel, DEFAULT_GRID};
use ordmode::modes::{darroch_localize, darroch_mean_closed_form};
use ordmode::poly::fubini_polynomials;
use ordmode::sturm::certify_real_rooted_in;
use ordmode::triangles::{build_triangle, ordered_row, TriangleFamily};
use ordmode::verify::{self, expected_zero_root, root_window, Depth};

use output::{Cell, Format, OutputSpec, Table};

#[derive(Debug, Parser)]
#[command(name = "ordmode", version, about = "Ordered Stirling-type numbers, their modes and asymptotics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit triangle rows as n,k,value records.
    Triangle {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n_max: usize,
        /// Multiply T(n,k) by (k+r)! (r-Stirling) or k! (other families).
        #[arg(long)]
        ordered: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Mode, SLC and Darroch report for each ordered row.
    Modes {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Sturm certificates of real-rootedness for each Fubini-type polynomial.
    Certify {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Convergence table of exact values and modes against the asymptotic laws.
    Asymptotics {
        #[command(flatten)]
        family: FamilyArgs,
        /// Comma-separated ascending n values.
        #[arg(long, value_delimiter = ',')]
        grid: Option<Vec<usize>>,
        /// Use the unordered Stirling rows and the n/log n mode law.
        #[arg(long)]
        classical: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run the oracle and identity suites.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        depth: DepthArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyName {
    Stirling,
    RStirling,
    Whitney,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DepthArg {
    Quick,
    Full,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long, allow_negative_numbers = true)]
    r: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i64>,
}

#[derive(Debug, Args)]
struct OutArgs {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutArgs {
    fn spec(&self) -> OutputSpec {
        OutputSpec {
            format: self.format,
            destination: self.out.clone(),
        }
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

type CmdResult = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

impl FamilyArgs {
    fn resolve(&self) -> Result<TriangleFamily, Failure> {
        match self.family {
            FamilyName::Stirling => {
                if self.r.is_some() || self.m.is_some() {
                    return Err(usage("--r and --m do not apply to --family stirling"));
                }
                Ok(TriangleFamily::Stirling)
            }
            FamilyName::RStirling => {
                if self.m.is_some() {
                    return Err(usage("--m does not apply to --family r-stirling"));
                }
                let r = self.r.ok_or_else(|| usage("--family r-stirling needs --r"))?;
                let r = u32::try_from(r).map_err(|_| usage(format!("--r must be a nonnegative integer, got {r}")))?;
                Ok(TriangleFamily::r_stirling(r))
            }
            FamilyName::Whitney => {
                if self.r.is_some() {
                    return Err(usage("--r does not apply to --family whitney"));
                }
                let m = self.m.ok_or_else(|| usage("--family whitney needs --m"))?;
                u32::try_from(m)
                    .ok()
                    .and_then(|m| TriangleFamily::whitney(m).ok())
                    .ok_or_else(|| usage(format!("--m must be a positive integer, got {m}")))
            }
        }
    }
}

fn emit(table: &Table, out: &OutArgs) -> CmdResult {
    table
        .emit(&out.spec())
        .map_err(|e| Failure::Check(format!("cannot write output: {e}")))
}

fn cmd_triangle(family: TriangleFamily, n_max: usize, ordered: bool, out: &OutArgs) -> CmdResult {
    let t = build_triangle(family, n_max);
    let mut table = Table::new(&["n", "k", "value"]);
    for n in 0..=n_max {
        let row = if ordered {
            ordered_row(&t, n).expect("row in range").coefficients
        } else {
            t.row(n).unwrap().to_vec()
        };
        for (k, v) in row.into_iter().enumerate() {
            table.push(vec![n.into(), k.into(), v.into()]);
        }
    }
    emit(&table, out)
}

fn cmd_modes(family: TriangleFamily, n_max: usize, out: &OutArgs) -> CmdResult {
    if n_max < 1 {
        return Err(usage("--n-max must be at least 1"));
    }
    let polys = fubini_polynomials(family, n_max + 1);
    let mut table = Table::new(&[
        "n",
        "mode",
        "plateau",
        "darroch_mean",
        "bound_holds",
        "slc",
    ]);
    let mut failed = Vec::new();
    for n in 0..=n_max {
        let report = darroch_localize(&polys[n]).map_err(|e| Failure::Check(e.to_string()))?;
        let closed = darroch_mean_closed_form(
            family,
            &polys[n].eval_at_one(),
            &polys[n + 1].eval_at_one(),
        );
        if !report.slc || !report.darroch_bound_holds || closed.as_ref() != Ok(&report.darroch_mean) {
            failed.push(n);
        }
        table.push(vec![
            n.into(),
            report.mode_index.into(),
            report.plateau_length.into(),
            report.darroch_mean.clone().into(),
            report.darroch_bound_holds.into(),
            report.slc.into(),
        ]);
    }
    emit(&table, out)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{family}: SLC or Darroch check failed at n = {failed:?}"
        )))
    }
}

fn cmd_certify(family: TriangleFamily, n_max: usize, out: &OutArgs) -> CmdResult {
    if n_max < 1 {
        return Err(usage("--n-max must be at least 1"));
    }
    let window = root_window(family);
    let mut table = Table::new(&[
        "n",
        "degree",
        "zero_root_multiplicity",
        "real_roots",
        "distinct_in_window",
        "window",
        "certified",
    ]);
    let mut failed = Vec::new();
    for (n, p) in fubini_polynomials(family, n_max).iter().enumerate().skip(1) {
        let cert = certify_real_rooted_in(p, &window).map_err(|e| Failure::Check(e.to_string()))?;
        let ok = cert.certified && cert.zero_root_multiplicity == expected_zero_root(family, n);
        if !ok {
            failed.push(n);
        }
        table.push(vec![
            n.into(),
            cert.degree.into(),
            cert.zero_root_multiplicity.into(),
            cert.real_roots_with_multiplicity.into(),
            cert.distinct_in_interval.into(),
            Cell::Text(window.to_string()),
            ok.into(),
        ]);
    }
    emit(&table, out)?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{family}: certificate failed at n = {failed:?}")))
    }
}

/// Worker cap from `ORDMODE_THREADS`; unset means all available cores.
fn threads_from_env() -> Result<usize, Failure> {
    match std::env::var("ORDMODE_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("ORDMODE_THREADS must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn cmd_asymptotics(
    family: TriangleFamily,
    grid: Option<&[usize]>,
    classical: bool,
    out: &OutArgs,
) -> CmdResult {
    let model = if classical {
        if family != TriangleFamily::Stirling {
            return Err(usage("--classical only applies to --family stirling"));
        }
        AsymptoticModel::classical_stirling()
    } else {
        AsymptoticModel::ordered(family)
    };
    let grid = grid.unwrap_or(&DEFAULT_GRID);
    let threads = threads_from_env()?;
    let rows = convergence_table(&model, grid, threads).map_err(|e| usage(e.to_string()))?;
    let mut table = Table::new(&[
        "n",
        "exact_log",
        "predicted_log",
        "value_ratio",
        "exact_mode",
        "predicted_mode",
        "mode_ratio",
    ]);
    for row in rows {
        table.push(vec![
            row.n.into(),
            row.exact_log.into(),
            row.predicted_log.into(),
            row.value_ratio.into(),
            row.exact_mode.into(),
            row.predicted_mode.into(),
            row.mode_ratio.into(),
        ]);
    }
    emit(&table, out)
}

fn cmd_verify(depth: DepthArg) -> CmdResult {
    let depth = match depth {
        DepthArg::Quick => Depth::Quick,
        DepthArg::Full => Depth::Full,
    };
    let results = verify::run(depth);
    for r in &results {
        println!("{r}");
    }
    let failed: Vec<_> = results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("verify failed suites: {}", failed.join(","))))
    }
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Triangle {
            family,
            n_max,
            ordered,
            out,
        } => cmd_triangle(family.resolve()?, n_max, ordered, &out),
        Command::Modes { family, n_max, out } => cmd_modes(family.resolve()?, n_max, &out),
        Command::Certify { family, n_max, out } => cmd_certify(family.resolve()?, n_max, &out),
        Command::Asymptotics {
            family,
            grid,
            classical,
            out,
        } => cmd_asymptotics(family.resolve()?, grid.as_deref(), classical, &out),
        Command::Verify { depth } => cmd_verify(depth),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("ordmode: usage: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("ordmode: usage: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("ordmode: failed: {msg}");
            ExitCode::from(1)
        }
    }
}
