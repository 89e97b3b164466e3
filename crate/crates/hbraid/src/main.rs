use clap::{Parser, Subcommand};

use hbraid::{
    cmd_artin, cmd_equal, cmd_fuzz, cmd_magnus, cmd_obstruction, cmd_torsion_check, is_prime,
    Verdict,
};

/// Exact calculator for welded braid words up to link-homotopy.
///
/// Braid words are whitespace-separated tokens: `s<k>` is the k-th classical
/// generator, `s<k>'` its inverse, `r<k>` the k-th virtual generator. Group
/// words use `x<k>` and `x<k>'`. Structured results go to standard output as
/// JSON; a human-readable summary goes to standard error. Exit codes:
/// 0 = equal/holds/pass, 1 = not-equal/fails, 2 = usage or parse error.
#[derive(Parser)]
#[command(name = "hbraid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two braid words are equal in the group
    Equal {
        /// Number of strands
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        strands: u32,
        word_a: String,
        word_b: String,
    },
    /// Print the Artin image of a braid word
    Artin {
        /// Number of strands
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        strands: u32,
        word: String,
    },
    /// Print the Magnus expansion of a group word
    Magnus {
        /// Number of generators
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        strands: u32,
        word: String,
    },
    /// Print the classicality and torsion obstruction report for a braid word
    Obstruction {
        /// Number of strands
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        strands: u32,
        word: String,
    },
    /// Replay the no-fixed-point check on random welded words
    #[command(name = "torsion-check")]
    TorsionCheck {
        /// Number of strands (a prime; other values get a warning)
        #[arg(short = 'p', value_parser = clap::value_parser!(u32).range(2..))]
        strands: u32,
        /// Number of random words to test
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        /// Maximum word length per trial
        #[arg(long = "max-len", default_value_t = 12)]
        max_len: u32,
        /// Master seed; fixed seeds give identical reports
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the randomized property suite
    Fuzz {
        /// Number of strands
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        strands: u32,
        /// Trials per property
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        /// Master seed; fixed seeds give identical reports
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(command: Command) -> Result<Verdict, hbraid_core::Error> {
    match command {
        Command::Equal {
            strands,
            word_a,
            word_b,
        } => cmd_equal(strands, &word_a, &word_b),
        Command::Artin { strands, word } => cmd_artin(strands, &word),
        Command::Magnus { strands, word } => cmd_magnus(strands, &word),
        Command::Obstruction { strands, word } => cmd_obstruction(strands, &word),
        Command::TorsionCheck {
            strands,
            trials,
            max_len,
            seed,
        } => {
            if !is_prime(strands) {
                eprintln!("warning: {strands} is not prime; the check is stated for primes");
            }
            Ok(cmd_torsion_check(strands, trials, max_len, seed))
        }
        Command::Fuzz {
            strands,
            trials,
            seed,
        } => Ok(cmd_fuzz(strands, trials, seed)),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(verdict) => {
            println!("{}", verdict.payload);
            eprintln!("{}", verdict.summary);
            std::process::exit(verdict.exit_code());
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
