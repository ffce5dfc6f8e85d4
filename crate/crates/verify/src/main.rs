use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use g2rat_core::exec::Exec;
use g2rat_verify::{emit_report, parse_coefficients, run_suite, Config, Format, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "g2rat", version, about = "Certify the rationality of the G2 adjoint quotient")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a group of checks and print a markdown summary.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// Only run checks whose id matches this pattern (`*` wildcards, comma lists).
        #[arg(long)]
        only: Option<String>,
        #[command(flatten)]
        opts: RunOpts,
    },
    /// Run the whole suite and write a report.
    Report {
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
        /// Output path; relative paths resolve against $G2RAT_REPORT_DIR when set.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        opts: RunOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    All,
    Weyl,
    LambdaChain,
    Prop1,
    Freeness,
    Twist,
}

impl Target {
    fn pattern(self) -> &'static str {
        match self {
            Target::All => "*",
            Target::Weyl => "weyl.*",
            Target::LambdaChain => "quotient.*,lambda-chain.*",
            Target::Prop1 => "prop1.*",
            Target::Freeness => "freeness.*",
            Target::Twist => "smooth.*,twist.*",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Md,
}

#[derive(Args)]
struct RunOpts {
    /// Characteristic for the differential checks; repeatable.
    #[arg(long = "char", value_name = "P")]
    chars: Vec<u64>,
    /// Monic cubic, constant term first.
    #[arg(long, allow_hyphen_values = true)]
    cubic: Option<String>,
    /// Monic quadratic, constant term first.
    #[arg(long, allow_hyphen_values = true)]
    quadratic: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Run every check on the calling thread.
    #[arg(long)]
    sequential: bool,
}

impl RunOpts {
    fn config(&self) -> Result<Config, String> {
        let mut c = Config { seed: self.seed, ..Config::default() };
        if !self.chars.is_empty() {
            c.prop1_primes = self.chars.clone();
        }
        if let Some(s) = &self.cubic {
            c.cubic = parse_coefficients(s).map_err(|e| e.to_string())?;
        }
        if let Some(s) = &self.quadratic {
            c.quadratic = parse_coefficients(s).map_err(|e| e.to_string())?;
        }
        if self.sequential {
            c.exec = Exec::Sequential;
        }
        Ok(c)
    }
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (pattern, opts, format, out) = match &cli.command {
        Command::Verify { target, only, opts } => (only.clone().unwrap_or_else(|| target.pattern().to_string()), opts, Format::Markdown, None),
        Command::Report { format, out, opts } => {
            let f = match format {
                ReportFormat::Json => Format::Json,
                ReportFormat::Md => Format::Markdown,
            };
            ("*".to_string(), opts, f, out.clone())
        }
    };
    let config = match opts.config() {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let report = match run_suite(&pattern, &config) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let text = emit_report(&report, format);
    match out {
        Some(path) => {
            let path = match std::env::var_os("G2RAT_REPORT_DIR") {
                Some(dir) if path.is_relative() => PathBuf::from(dir).join(path),
                _ => path,
            };
            if let Err(e) = std::fs::write(&path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::FAILURE;
            }
            eprintln!("wrote {} ({})", path.display(), report.overall);
        }
        None => print!("{text}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
