use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gvcenter_cli::{render, run, RunError};
use gvcenter_core::config::{Command, Format, SessionConfig};

#[derive(Parser)]
#[command(name = "gvcenter", version, about = "Drinfeld centers of pointed fusion categories and their ribbon GV structure")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Cocycle, pivotality and half-braiding checks
    Verify(Opts),
    /// List the simple objects of the center
    Simples(Opts),
    /// The four sphericity conditions
    Spherical(Opts),
    /// Conformal block dimensions up to the genus bound
    Blocks(Opts),
    /// Müger center, Picard group and ribbon GV extensions
    Classify(Opts),
    /// Everything above
    Report(Opts),
    /// Run the command named in the config file
    Run(Opts),
}

#[derive(Args)]
struct Opts {
    /// Session config (JSON)
    config: PathBuf,
    #[arg(long)]
    genus: Option<u64>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    #[arg(long)]
    cap_group_order: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

fn load(opts: &Opts, command: Option<Command>) -> Result<SessionConfig, RunError> {
    let text = std::fs::read_to_string(&opts.config).map_err(|e| RunError::Io {
        path: opts.config.display().to_string(),
        message: e.to_string(),
    })?;
    let mut cfg = SessionConfig::from_json(&text)?;
    if let Some(c) = command {
        cfg.command = c;
    }
    if let Some(g) = opts.genus {
        cfg.genus = g;
    }
    if let Some(f) = opts.format {
        cfg.format = match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Text => Format::Text,
        };
    }
    if let Some(cap) = opts.cap_group_order {
        cfg.caps.group_order = cap;
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (opts, command) = match &cli.command {
        Cmd::Verify(o) => (o, Some(Command::Verify)),
        Cmd::Simples(o) => (o, Some(Command::Simples)),
        Cmd::Spherical(o) => (o, Some(Command::Spherical)),
        Cmd::Blocks(o) => (o, Some(Command::Blocks)),
        Cmd::Classify(o) => (o, Some(Command::Classify)),
        Cmd::Report(o) => (o, Some(Command::Report)),
        Cmd::Run(o) => (o, None),
    };
    let format = match opts.format {
        Some(OutputFormat::Text) => Format::Text,
        _ => Format::Json,
    };
    let result = load(opts, command).and_then(|cfg| {
        let format = cfg.format;
        let session = cfg.validate()?;
        Ok((run(&session)?, format))
    });
    match result {
        Ok((doc, format)) => {
            print!("{}", render(&doc, format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            print!("{}", render(&e.to_json(), format));
            ExitCode::from(e.exit_code())
        }
    }
}
