use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use metabelian::cli::{run, Command, CommandKind, OutputFormat};

#[derive(Parser)]
#[command(name = "metabelian", version, about = "IA-automorphisms of free metabelian nilpotent Lie algebras")]
struct Args {
    /// Number of generators m (>= 2).
    #[arg(long)]
    rank: usize,
    /// Nilpotency class c (>= 2).
    #[arg(long)]
    class: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    output: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Normal form of a Lie expression.
    Normalize { expr: String },
    /// Bracket of two expressions.
    Bracket { left: String, right: String },
    /// Image in the wreath product.
    Embed { expr: String },
    /// Partial derivatives d/dy_i.
    Partials { expr: String },
    /// Jacobian matrix of an IA-endomorphism.
    Jacobian {
        #[arg(long)]
        phi: String,
    },
    /// Expansion of exp(ad u).
    ExpAd { expr: String },
    /// Jacobian of exp(ad u) in closed form.
    InnerJacobian { expr: String },
    /// w with exp(ad w) = exp(ad u) exp(ad v).
    Bch { left: String, right: String },
    /// Coefficients of the two-variable BCH series.
    GerritzenTable,
    /// phi ∘ psi.
    Compose {
        #[arg(long)]
        phi: String,
        #[arg(long)]
        psi: String,
    },
    Inverse {
        #[arg(long)]
        phi: String,
    },
    /// Canonical representative of Inn · psi with the inner factors.
    Reduce {
        #[arg(long)]
        psi: String,
    },
    IsInner {
        #[arg(long)]
        psi: String,
    },
    SameCoset {
        #[arg(long)]
        psi1: String,
        #[arg(long)]
        psi2: String,
    },
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let kind = match args.cmd {
        Cmd::Normalize { expr } => CommandKind::Normalize { expr },
        Cmd::Bracket { left, right } => CommandKind::Bracket { left, right },
        Cmd::Embed { expr } => CommandKind::Embed { expr },
        Cmd::Partials { expr } => CommandKind::Partials { expr },
        Cmd::Jacobian { phi } => CommandKind::Jacobian { phi },
        Cmd::ExpAd { expr } => CommandKind::ExpAd { expr },
        Cmd::InnerJacobian { expr } => CommandKind::InnerJacobian { expr },
        Cmd::Bch { left, right } => CommandKind::Bch { left, right },
        Cmd::GerritzenTable => CommandKind::GerritzenTable,
        Cmd::Compose { phi, psi } => CommandKind::Compose { phi, psi },
        Cmd::Inverse { phi } => CommandKind::Inverse { phi },
        Cmd::Reduce { psi } => CommandKind::Reduce { psi },
        Cmd::IsInner { psi } => CommandKind::IsInner { psi },
        Cmd::SameCoset { psi1, psi2 } => CommandKind::SameCoset { psi1, psi2 },
    };
    let out = run(&Command {
        rank: args.rank,
        class: args.class,
        output: match args.output {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        kind,
    });
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
