use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qmono_cli::verify::{corrupted_kernel, reference_kernel, run_property_suite_with, SuiteConfig};
use qmono_cli::{report, scenario, CliError, Format, Result};

#[derive(Parser)]
#[command(
    name = "qmono",
    version,
    about = "Weighted monogamy and polygamy bounds for entanglement measures"
)]
struct Cli {
    /// Seed for the property suite
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Directory for CSV and SVG files
    #[arg(long, global = true, default_value = ".")]
    out: PathBuf,
    /// Which files a sweep writes
    #[arg(long, global = true, value_enum, default_value_t = Format::Both)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the measure vector of a scenario
    Measures {
        /// Scenario file, or `example1` / `example2`
        scenario: String,
    },
    /// Evaluate our bound and the comparison bounds at one exponent
    Bounds {
        scenario: String,
        /// α (monogamy) or β (polygamy)
        #[arg(long)]
        exponent: f64,
        /// Override the scenario's s
        #[arg(long)]
        s: Option<f64>,
    },
    /// Sweep the exponent range and write CSV and/or SVG
    Sweep { scenario: String },
    /// Run the seeded sampling checks of the kernel inequalities
    Verify {
        /// Tuples per Lemma-1 direction
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        /// Inflate the kernel to check that violations are reported
        #[arg(long, hide = true)]
        corrupt_kernel: bool,
    },
    /// Regenerate figure 1 (concurrence) or figure 2 (SCRENoA)
    Reproduce {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        figure: u8,
    },
}

fn sweep(sc: &scenario::Scenario, cli: &Cli) -> Result<()> {
    let res = qmono_cli::run_sweep(sc);
    for path in qmono_cli::write_outputs(&res, &cli.out, &sc.output, cli.format)? {
        println!("wrote {}", path.display());
    }
    print!("{}", report::sweep_summary(&res));
    for row in res.rows.iter().filter(|r| r.flags.error.is_some()) {
        eprintln!(
            "exponent {}: {}",
            row.exponent,
            row.flags.error.as_deref().unwrap_or_default()
        );
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Measures { scenario } => {
            let sc = scenario::load_scenario(scenario)?;
            print!("{}", report::measures_summary(&sc));
        }
        Command::Bounds {
            scenario,
            exponent,
            s,
        } => {
            let mut sc = scenario::load_scenario(scenario)?;
            if let Some(s) = s {
                sc.s = *s;
            }
            let rep = qmono_cli::evaluate(&sc, *exponent)?;
            print!("{}", report::bounds_summary(&sc, *exponent, &rep));
        }
        Command::Sweep { scenario } => sweep(&scenario::load_scenario(scenario)?, cli)?,
        Command::Verify {
            samples,
            corrupt_kernel,
        } => {
            let kernel = if *corrupt_kernel {
                corrupted_kernel
            } else {
                reference_kernel
            };
            let rep = run_property_suite_with(cli.seed, &SuiteConfig::scaled(*samples), kernel);
            print!("{rep}");
            if !rep.passed() {
                let failed: Vec<&str> = rep
                    .invariants
                    .iter()
                    .filter(|r| !r.passed())
                    .map(|r| r.name)
                    .collect();
                return Err(CliError::PropertyFailure(failed.join(", ")));
            }
        }
        Command::Reproduce { figure } => {
            let sc = match figure {
                1 => scenario::example1()?,
                _ => scenario::example2()?,
            };
            sweep(&sc, cli)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
