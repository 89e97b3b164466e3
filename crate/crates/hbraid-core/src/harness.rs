//! Randomized verification drivers: the torsion-freeness replay and the
//! property suite behind the `fuzz` command. Both are deterministic for a
//! fixed seed.

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::artin::{artin_image, generator_action, generator_conjugacy_check, torsion_obstruction};
use crate::braid::{Alphabet, BraidMove, BraidWord};
use crate::group::GroupWord;

/// Outcome of replaying the no-fixed-point check on random words.
#[derive(Debug, Clone, Serialize)]
pub struct TorsionCheckReport {
    pub p: u32,
    pub trials: u32,
    pub max_len: u32,
    pub seed: u64,
    pub passes: u32,
    pub failures: u32,
    /// First failing word, spelled in the braid grammar.
    pub counterexample: Option<String>,
}

impl TorsionCheckReport {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

/// For `trials` random welded words on `p` strands, assert that the action
/// keeps the top-degree coefficient sum at one and that the cyclic shuffle
/// moves the image of `x_1⋯x_p`. Any failure is an implementation bug, not a
/// mathematical possibility.
pub fn torsion_check(p: u32, trials: u32, max_len: u32, seed: u64) -> TorsionCheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = TorsionCheckReport {
        p,
        trials,
        max_len,
        seed,
        passes: 0,
        failures: 0,
        counterexample: None,
    };
    for _ in 0..trials {
        let len = rng.random_range(0..=max_len) as usize;
        let w = BraidWord::random_with(p, len, Alphabet::Welded, &mut rng);
        let t = torsion_obstruction(&w);
        if t.f_value == BigInt::one() && t.lambda_moves_it {
            report.passes += 1;
        } else {
            report.failures += 1;
            report.counterexample.get_or_insert_with(|| w.to_string());
        }
    }
    report
}

/// One row of the property suite.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub passes: u32,
    pub failures: u32,
}

/// Report of the four-property randomized suite.
#[derive(Debug, Clone, Serialize)]
pub struct PropertySuiteReport {
    pub n: u32,
    pub trials: u32,
    pub seed: u64,
    pub properties: Vec<PropertyReport>,
}

impl PropertySuiteReport {
    pub fn holds(&self) -> bool {
        self.properties.iter().all(|p| p.failures == 0)
    }
}

fn run_property<F: FnMut(&mut ChaCha8Rng) -> bool>(
    name: &'static str,
    trials: u32,
    seed: u64,
    mut trial: F,
) -> PropertyReport {
    // Each property gets its own stream so rows are independent of each other.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = PropertyReport {
        name,
        passes: 0,
        failures: 0,
    };
    for _ in 0..trials {
        if trial(&mut rng) {
            report.passes += 1;
        } else {
            report.failures += 1;
        }
    }
    report
}

/// Run the four randomized property checks on `n` strands: the action is a
/// homomorphism, word-level moves preserve it, it preserves the top-degree
/// coefficient sum, and every image has the conjugacy shape.
pub fn property_suite(n: u32, trials: u32, seed: u64) -> PropertySuiteReport {
    let homomorphism = run_property("homomorphism", trials, seed ^ 0x686f6d, |rng| {
        let a = BraidWord::random_with(n, rng.random_range(0..=8), Alphabet::Welded, rng);
        let b = BraidWord::random_with(n, rng.random_range(0..=8), Alphabet::Welded, rng);
        let ab = a.compose(&b).expect("same strand count");
        let composed = artin_image(&a)
            .compose(&artin_image(&b))
            .expect("same strand count");
        artin_image(&ab).equal(&composed).expect("same strand count")
    });

    let move_invariance = run_property("move_invariance", trials, seed ^ 0x6d6f76, |rng| {
        let w = BraidWord::random_with(n, rng.random_range(0..=10), Alphabet::Welded, rng);
        let image = artin_image(&w);
        for (mv, site) in w.applicable_moves() {
            let rewritten = w.apply_move(mv, site).expect("enumerated as applicable");
            if !artin_image(&rewritten).equal(&image).expect("same strand count") {
                return false;
            }
        }
        if n >= 2 {
            let site = rng.random_range(1..=w.len() + 1);
            let index = rng.random_range(1..n);
            let padded = w
                .apply_move(BraidMove::InsertVirtualPair { index }, site)
                .expect("insertion site in range");
            if !artin_image(&padded).equal(&image).expect("same strand count") {
                return false;
            }
        }
        true
    });

    let top_coefficient = run_property(
        "top_coefficient_invariance",
        trials,
        seed ^ 0x746f70,
        |rng| {
            if n < 2 {
                return true;
            }
            let g = BraidWord::random_with(n, 1, Alphabet::Welded, rng);
            let x = GroupWord::random_with(n, rng.random_range(0..=8), rng);
            let action = generator_action(&g.letters()[0], n).expect("index in range");
            let image = action.apply(&x).expect("same strand count");
            image.magnus().coefficient_sum_top() == x.magnus().coefficient_sum_top()
        },
    );

    let conjugacy = run_property("conjugacy_shape", trials, seed ^ 0x636a67, |rng| {
        let w = BraidWord::random_with(n, rng.random_range(0..=10), Alphabet::Welded, rng);
        generator_conjugacy_check(&w)
    });

    PropertySuiteReport {
        n,
        trials,
        seed,
        properties: vec![homomorphism, move_invariance, top_coefficient, conjugacy],
    }
}
