use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use quartic_forms::cubicmap::{
    coeff_tensor, compose_left, compose_right, parse_matrix_file, AffineMap, CubicMap,
};
use quartic_forms::invariants::{discrepancy_report, forms, g_determinants, FormSource};
use quartic_forms::transforms::{composed_determinant_check, run_suite, SuiteConfig};

mod report;

/// Quartic-form invariants of cubic plane maps, in exact arithmetic.
#[derive(Parser)]
#[command(name = "quartic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the six determinants and six quartic forms of a map.
    Invariants {
        map: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Run every transformation check over random trials.
    #[command(group(ArgGroup::new("input").required(true).args(["map", "random"])))]
    Verify {
        /// Use this map's cubic part in every trial.
        map: Option<PathBuf>,
        /// Draw a random coefficient tensor in every trial.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Compose a map with an affine map and print the result as a map file.
    #[command(group(ArgGroup::new("side").required(true).args(["left", "right"])))]
    Compose {
        map: PathBuf,
        matrix: PathBuf,
        /// f = phi^{-1} o f~ (needs an invertible matrix).
        #[arg(long)]
        left: bool,
        /// f = f~ o phi.
        #[arg(long)]
        right: bool,
    },
    /// Tabulate the determinants of the right-composed map against
    /// det T times the forms evaluated at the entries of T.
    #[command(name = "check-thm43")]
    CheckThm43 {
        map: PathBuf,
        matrix: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the three constructions of each form symbolically.
    Discrepancies {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    json: bool,
    /// Which construction of the forms to use.
    #[arg(long, value_enum, default_value_t = Form::Derived)]
    form: Form,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Printed,
    Derived,
    Symmetrized,
}

impl From<Form> for FormSource {
    fn from(f: Form) -> Self {
        match f {
            Form::Printed => FormSource::Printed,
            Form::Derived => FormSource::Derived,
            Form::Symmetrized => FormSource::Symmetrized,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_map(path: &Path) -> Result<CubicMap> {
    CubicMap::parse(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn load_matrix(path: &Path) -> Result<AffineMap> {
    parse_matrix_file(&read(path)?).with_context(|| format!("{}", path.display()))
}

/// `Ok(true)` when everything checked holds.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Invariants { map, common } => {
            let f = coeff_tensor(&load_map(&map)?);
            let source = common.form.into();
            let g = g_determinants(&f);
            let w = forms(&f, source)?;
            let out = if common.json {
                report::invariants_json(&g, &w, source)
            } else {
                report::invariants_text(&g, &w, source)
            };
            print!("{out}");
            Ok(true)
        }
        Command::Verify {
            map,
            trials,
            seed,
            common,
            ..
        } => {
            let fixed = map
                .as_deref()
                .map(load_map)
                .transpose()?
                .map(|m| coeff_tensor(&m));
            let config = SuiteConfig {
                trials: trials as usize,
                seed,
                source: common.form.into(),
                fixed,
            };
            let rows = run_suite(&config);
            let out = if common.json {
                report::rows_json(&rows)
            } else {
                report::rows_text(&rows)
            };
            print!("{out}");
            Ok(rows.iter().all(|r| r.pass))
        }
        Command::Compose {
            map, matrix, left, ..
        } => {
            let f = load_map(&map)?;
            let phi = load_matrix(&matrix)?;
            let composed = if left {
                compose_left(&f, &phi)
                    .with_context(|| format!("{}: cannot compose on the left", matrix.display()))?
            } else {
                compose_right(&f, &phi)
            };
            print!("{}", composed.to_text());
            Ok(true)
        }
        Command::CheckThm43 {
            map,
            matrix,
            common,
        } => {
            let f = coeff_tensor(&load_map(&map)?);
            let t = load_matrix(&matrix)?.linear;
            let rows = composed_determinant_check(&f, &t, common.form.into())?;
            let out = if common.json {
                report::composed_json(&t, &rows)
            } else {
                report::composed_text(&t, &rows)
            };
            print!("{out}");
            Ok(rows.iter().all(|r| r.holds()))
        }
        Command::Discrepancies { json } => {
            let r = discrepancy_report()?;
            print!("{}", if json { r.to_json() } else { r.to_text() });
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
