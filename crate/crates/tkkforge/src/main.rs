use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use tkk_core::exactla::Field;
use tkk_core::jordan::DEFAULT_SEED;
use tkkforge::commands::{run, Command, Options, Output};

#[derive(Parser)]
#[command(name = "tkkforge", version, about = "Exact TKK and uTKK constructions with graded Lie homology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// rational or p:<prime>
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write the structured report here
    #[arg(long, global = true)]
    report: Option<std::path::PathBuf>,
}

fn parse_field(s: &str) -> Result<Field, String> {
    match s {
        "rational" => Ok(Field::Rational),
        _ => {
            let p = s
                .strip_prefix("p:")
                .ok_or_else(|| format!("expected rational or p:<prime>, got {s:?}"))?;
            let p: u64 = p.parse().map_err(|_| format!("bad modulus {p:?}"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Options {
        field: cli.field,
        seed: cli.seed,
    };
    let start = Instant::now();
    let out = match run(&cli.command, &opts) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match out {
        Output::Text(t) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Output::Report(r) => {
            println!("{r}");
            eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
            if let Some(path) = &cli.report {
                if let Err(e) = std::fs::write(path, r.to_json()) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if r.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
