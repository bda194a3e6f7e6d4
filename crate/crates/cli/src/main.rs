use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zkloop_cli::commands::{self, Options};
use zkloop_cli::render::render;
use zkloop_cli::{parse, Report};
use zkloop_core::certificate::Certificate;

/// Homology, product decompositions and loop-space factors of
/// moment-angle complexes.
#[derive(Parser)]
#[command(name = "zkloop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Reject unknown fields, repeated vertices and non-maximal facets.
    #[arg(long, global = true)]
    strict: bool,

    /// Accept the document's `golod_assert` list. Assertions are recorded
    /// in the report and never checked.
    #[arg(long = "i-assert-golod", global = true)]
    i_assert_golod: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args)]
struct InputArg {
    /// Facet document, or `-` for standard input.
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Homology of K, of every member of C_K, and of Z_K.
    Homology(InputArg),
    /// Product-decomposition verdict with the rules that fired.
    Classify {
        #[command(flatten)]
        input: InputArg,
        /// Include the full pushout tree.
        #[arg(long)]
        embed_certificate: bool,
    },
    /// Primes to invert for the localized decomposition.
    Primes(InputArg),
    /// Loop-space factor catalog with Poincaré series.
    LoopFactors {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 12)]
        max_degree: u32,
        /// Also give the series with coefficients in F_p.
        #[arg(long, value_name = "P")]
        field: Option<u64>,
    },
    /// Build or check a pushout certificate.
    Certificate {
        #[command(flatten)]
        input: InputArg,
        /// Verify the tree.
        #[arg(long)]
        verify: bool,
        /// Check this tree (JSON) instead of building one; implies --verify.
        #[arg(long, value_name = "FILE")]
        tree: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<Vec<u8>, String> {
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| format!("standard input: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

type Runner = fn(&zkloop_cli::Input, &[u8], Vec<String>, &Options) -> zkloop_core::Result<Report>;

fn run(cli: Cli) -> Result<Report, String> {
    let mut options = Options {
        golod_confirmed: cli.i_assert_golod,
        ..Options::default()
    };
    let mut echo: Vec<String> = Vec::new();
    let (input_path, run): (&Path, Runner) = match &cli.command {
        Command::Homology(a) => {
            echo.push("homology".into());
            (&a.input, commands::homology)
        }
        Command::Classify {
            input,
            embed_certificate,
        } => {
            echo.push("classify".into());
            if *embed_certificate {
                echo.push("--embed-certificate".into());
            }
            options.embed_certificate = *embed_certificate;
            (&input.input, commands::classify)
        }
        Command::Primes(a) => {
            echo.push("primes".into());
            (&a.input, commands::primes)
        }
        Command::LoopFactors {
            input,
            max_degree,
            field,
        } => {
            echo.extend(["loop-factors".into(), "--max-degree".into(), max_degree.to_string()]);
            if let Some(p) = field {
                echo.extend(["--field".into(), p.to_string()]);
            }
            options.max_degree = *max_degree;
            options.field = *field;
            (&input.input, commands::loop_factors)
        }
        Command::Certificate { input, verify, tree } => {
            echo.push("certificate".into());
            if *verify {
                echo.push("--verify".into());
            }
            if let Some(path) = tree {
                let bytes = read(path)?;
                let parsed: Certificate = serde_json::from_slice(&bytes)
                    .map_err(|e| format!("{}: line {}: {e}", path.display(), e.line()))?;
                echo.extend(["--tree".into(), format!("sha256:{}", commands::sha256_hex(&bytes))]);
                options.tree = Some(parsed);
            }
            options.verify = *verify;
            (&input.input, commands::certificate)
        }
    };
    if cli.strict {
        echo.push("--strict".into());
    }
    if cli.i_assert_golod {
        echo.push("--i-assert-golod".into());
    }

    let raw = read(input_path)?;
    let text = std::str::from_utf8(&raw).map_err(|e| format!("{}: {e}", input_path.display()))?;
    let input = parse(text, cli.strict).map_err(|e| format!("{}: {e}", input_path.display()))?;
    if input.document.golod_assert.is_some() && !cli.i_assert_golod {
        return Err(format!(
            "{}: the document asserts rational Golodness; pass --i-assert-golod to accept the assertion",
            input_path.display()
        ));
    }
    run(&input, &raw, echo, &options).map_err(|e| format!("{}: {e}", input_path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok(report) => {
            let text = match format {
                Format::Text => render(&report),
                Format::Structured => serde_json::to_string_pretty(&report).expect("reports serialize") + "\n",
            };
            if std::io::stdout().write_all(text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
