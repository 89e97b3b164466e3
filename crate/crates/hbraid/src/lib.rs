//! Command implementations behind the `hbraid` binary. Each command returns a
//! [`Verdict`]: a JSON payload for standard output, a one-line summary for
//! standard error, and an outcome that fixes the process exit code
//! (0 = equal/holds/pass, 1 = not-equal/fails, 2 = usage or parse error).

use serde_json::{json, Value};

use hbraid_core::{
    artin_image, braid_separation, classicality_obstruction, harness, torsion_obstruction,
    BraidWord, Error, GroupWord,
};

/// How a command resolved; determines the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Equal,
    NotEqual,
    Holds,
    Fails,
    Report,
}

/// The result of one command invocation.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub command: &'static str,
    pub outcome: Outcome,
    /// Structured result, printed on standard output.
    pub payload: Value,
    /// Human-readable one-liner, printed on standard error.
    pub summary: String,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            Outcome::Equal | Outcome::Holds | Outcome::Report => 0,
            Outcome::NotEqual | Outcome::Fails => 1,
        }
    }
}

/// Decide whether two braid words spell the same group element. On
/// inequality the payload carries the first separating generator and both
/// expansions as a certificate.
pub fn cmd_equal(strands: u32, word_a: &str, word_b: &str) -> Result<Verdict, Error> {
    let a = BraidWord::parse(word_a, strands)?;
    let b = BraidWord::parse(word_b, strands)?;
    match braid_separation(&a, &b)? {
        None => Ok(Verdict {
            command: "equal",
            outcome: Outcome::Equal,
            payload: json!({ "equal": true }),
            summary: "equal".into(),
        }),
        Some(sep) => Ok(Verdict {
            command: "equal",
            outcome: Outcome::NotEqual,
            payload: json!({
                "equal": false,
                "separating_index": sep.index,
                "left_magnus": sep.left,
                "right_magnus": sep.right,
            }),
            summary: format!("not equal: images of x{} differ", sep.index),
        }),
    }
}

/// Emit the Artin image of a braid word.
pub fn cmd_artin(strands: u32, word: &str) -> Result<Verdict, Error> {
    let w = BraidWord::parse(word, strands)?;
    let image = artin_image(&w);
    Ok(Verdict {
        command: "artin",
        outcome: Outcome::Report,
        payload: serde_json::to_value(&image).expect("endomorphism serializes"),
        summary: format!("{image}"),
    })
}

/// Emit the Magnus expansion of a group word in canonical term order.
pub fn cmd_magnus(strands: u32, word: &str) -> Result<Verdict, Error> {
    let w = GroupWord::parse(word, strands)?;
    let p = w.magnus();
    Ok(Verdict {
        command: "magnus",
        outcome: Outcome::Report,
        payload: serde_json::to_value(&p).expect("polynomial serializes"),
        summary: format!("{p}"),
    })
}

/// Emit the obstruction report for a braid word: whether the action fixes
/// the full product (necessary for classicality), the top-degree coefficient
/// sum, and whether the cyclic shuffle moves the image.
pub fn cmd_obstruction(strands: u32, word: &str) -> Result<Verdict, Error> {
    let w = BraidWord::parse(word, strands)?;
    let classical = classicality_obstruction(&w);
    let torsion = torsion_obstruction(&w);
    let summary = format!(
        "classicality {}; top coefficient sum {}; shuffle {} the image",
        if classical.holds { "holds" } else { "fails" },
        torsion.f_value,
        if torsion.lambda_moves_it { "moves" } else { "fixes" },
    );
    Ok(Verdict {
        command: "obstruction",
        outcome: Outcome::Report,
        payload: json!({
            "f_value": torsion.f_value.to_string(),
            "lambda_moves_it": torsion.lambda_moves_it,
            "classical_obstruction_holds": classical.holds,
        }),
        summary,
    })
}

/// Replay the no-fixed-point check on random welded words.
pub fn cmd_torsion_check(p: u32, trials: u32, max_len: u32, seed: u64) -> Verdict {
    let report = harness::torsion_check(p, trials, max_len, seed);
    let outcome = if report.holds() {
        Outcome::Holds
    } else {
        Outcome::Fails
    };
    let summary = format!(
        "torsion check on {} strands: {}/{} trials passed",
        p, report.passes, report.trials
    );
    Verdict {
        command: "torsion-check",
        outcome,
        payload: serde_json::to_value(&report).expect("report serializes"),
        summary,
    }
}

/// Run the randomized property suite.
pub fn cmd_fuzz(strands: u32, trials: u32, seed: u64) -> Verdict {
    let report = harness::property_suite(strands, trials, seed);
    let outcome = if report.holds() {
        Outcome::Holds
    } else {
        Outcome::Fails
    };
    let summary = report
        .properties
        .iter()
        .map(|row| format!("{} {}/{}", row.name, row.passes, row.passes + row.failures))
        .collect::<Vec<_>>()
        .join(", ");
    Verdict {
        command: "fuzz",
        outcome,
        payload: serde_json::to_value(&report).expect("report serializes"),
        summary,
    }
}

/// Trial division is plenty at desk scale.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
