use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mindist_cli::{run, CliError, Command, Options, ProblemFile};
use mindist_core::{EnumerationBudget, MonomialOrder};

/// Minimum distance, footprint and Vasconcelos functions of graded ideals over prime fields.
#[derive(Parser)]
#[command(name = "mindist", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Problem description in JSON; `-` reads standard input.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<String>,
    /// Overrides the order of the problem: lex, grlex or grevlex.
    #[arg(long, global = true)]
    order: Option<MonomialOrder>,
    /// Largest number of candidates q^n - 1 to enumerate.
    #[arg(long, global = true, default_value_t = 1 << 24)]
    budget: u64,
    /// Also evaluate forms whose leading monomial is regular on the initial ideal.
    #[arg(long, global = true)]
    no_prune: bool,
    /// Treat the ideal as unmixed, enabling the bound checks.
    #[arg(long, global = true)]
    assert_unmixed: bool,
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Gröbner basis.
    Gb,
    /// Minimal generators of the initial ideal.
    Initial,
    /// Hilbert series numerator, dimension, degree and Hilbert function values.
    Hilbert {
        #[arg(long, default_value_t = 5)]
        max_d: u32,
    },
    /// Footprint function at degree d.
    Fp {
        #[arg(short)]
        d: u32,
    },
    /// Minimum distance function at degree d.
    Delta {
        #[arg(short)]
        d: u32,
    },
    /// Vasconcelos function at degree d.
    Vasconcelos {
        #[arg(short)]
        d: u32,
    },
    /// Rows d | H | delta | fp | vasconcelos for d = 1..=max-d.
    Table {
        #[arg(long)]
        max_d: u32,
    },
    /// Closed formula for a complete intersection with the given generator degrees.
    Ci {
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u64>,
        #[arg(short, conflicts_with = "max_d", required_unless_present = "max_d")]
        d: Option<u32>,
        #[arg(long)]
        max_d: Option<u32>,
    },
    /// Edge ideal, minimal vertex covers and induced matching number of a graph.
    EdgeIdeal,
    /// Labeling and witness monomial of a bipartite graph.
    Witness,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Gb => Command::Gb,
            Cmd::Initial => Command::Initial,
            Cmd::Hilbert { max_d } => Command::Hilbert { max_d },
            Cmd::Fp { d } => Command::Fp { d },
            Cmd::Delta { d } => Command::Delta { d },
            Cmd::Vasconcelos { d } => Command::Vasconcelos { d },
            Cmd::Table { max_d } => Command::Table { max_d },
            Cmd::Ci { degrees, d, max_d } => Command::Ci { degrees, d, max_d },
            Cmd::EdgeIdeal => Command::EdgeIdeal,
            Cmd::Witness => Command::Witness,
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    let io = |source| CliError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn execute(cli: Cli) -> Result<String, CliError> {
    let command: Command = cli.command.into();
    let common = cli.common;
    let input = match &common.input {
        Some(path) => Some(ProblemFile::parse(&read_input(path)?)?),
        None if command.needs_input() => {
            return Err(CliError::Input(format!("{} needs --input", command.name())))
        }
        None => None,
    };
    let opts = Options {
        order: common.order,
        budget: EnumerationBudget::new(common.budget, !common.no_prune)?,
        assert_unmixed: common.assert_unmixed,
    };
    let report = run(&command, input.as_ref(), &opts)?;
    Ok(if common.json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    })
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
