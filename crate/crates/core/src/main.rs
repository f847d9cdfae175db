use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use freebrace::cli::{self, Outcome};
use freebrace::{Budget, Op};

#[derive(Parser)]
#[command(name = "freebrace", version, about = "Computations in the free skew brace")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two expressions are equal in the free skew brace
    Eq {
        lhs: String,
        rhs: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Evaluate an expression in a finite brace under a generator map
    Eval {
        expr: String,
        /// Generator map file (`target <brace-file>` then `<symbol> = <index>` lines)
        #[arg(long)]
        map: PathBuf,
        /// Brace file overriding the map's target
        #[arg(long)]
        brace: Option<PathBuf>,
    },
    /// Print the reduced word an expression evaluates to
    NormalForm { expr: String },
    /// Enumerate brace tables of a given order
    Enumerate {
        order: usize,
        /// One representative per isomorphism class
        #[arg(long)]
        iso: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check every brace in a file
    Verify { file: PathBuf },
    /// Let one word act on another
    Act {
        #[arg(value_enum)]
        op: ActionKind,
        actor: String,
        target: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ActionKind {
    Dot,
    Colon,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = Budget::default().max_steps)]
    max_steps: usize,
    #[arg(long, default_value_t = Budget::default().max_word_len)]
    max_word_len: usize,
    #[arg(long, default_value_t = Budget::default().max_stratum)]
    max_stratum: u32,
    #[arg(long, default_value_t = Budget::default().max_brace_order)]
    max_brace_order: usize,
    #[arg(long, default_value_t = Budget::default().max_maps)]
    max_maps: usize,
}

impl From<BudgetArgs> for Budget {
    fn from(b: BudgetArgs) -> Budget {
        Budget {
            max_steps: b.max_steps,
            max_word_len: b.max_word_len,
            max_stratum: b.max_stratum,
            max_brace_order: b.max_brace_order,
            max_maps: b.max_maps,
        }
    }
}

fn run(command: Command) -> freebrace::Result<Outcome> {
    match command {
        Command::Eq { lhs, rhs, budget } => cli::cmd_eq(&lhs, &rhs, &budget.into()),
        Command::Eval { expr, map, brace } => cli::cmd_eval(&expr, &map, brace.as_deref()),
        Command::NormalForm { expr } => cli::cmd_normal_form(&expr),
        Command::Enumerate { order, iso, output } => cli::cmd_enumerate(order, iso, output.as_deref()),
        Command::Verify { file } => cli::cmd_verify(&file),
        Command::Act { op, actor, target } => {
            let op = match op {
                ActionKind::Dot => Op::Dot,
                ActionKind::Colon => Op::Colon,
            };
            cli::cmd_act(op, &actor, &target)
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let outcome = run(args.command).unwrap_or_else(|e| Outcome::from_error(&e));
    if outcome.code == cli::EXIT_ERROR {
        eprint!("{}", outcome.output);
    } else {
        print!("{}", outcome.output);
    }
    ExitCode::from(outcome.code as u8)
}
