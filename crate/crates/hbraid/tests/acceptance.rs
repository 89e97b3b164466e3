//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measurements (visible under `--nocapture`). Run with
//! `cargo test --test acceptance`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hbraid::cmd_torsion_check;
use hbraid_core::{
    apply_word_action, artin_image, braid_equal, classicality_obstruction, generator_action,
    rf_equal, Alphabet, BraidMove, BraidWord, Endomorphism, GeneratorLetter, GroupWord,
    ReducedPolynomial,
};

fn gw(text: &str, n: u32) -> GroupWord {
    GroupWord::parse(text, n).unwrap()
}

fn assert_budget(start: Instant, budget: Duration, what: &str) -> Duration {
    let elapsed = start.elapsed();
    assert!(
        elapsed < budget,
        "{what} took {elapsed:?}, budget {budget:?}"
    );
    elapsed
}

/// Every conjugating generator on up to five strands fixes all generators
/// except the conjugated one, which maps to its conjugate by the other label.
#[test]
fn criterion_01_conjugating_generator_table() {
    let start = Instant::now();
    let mut checked = 0u32;
    for n in 2..=5u32 {
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let chi = BraidWord::conjugating_generator(i, j, n).unwrap();
                let image = artin_image(&chi);
                for k in 1..=n {
                    let expected = if k == i {
                        gw(&format!("x{j}' x{i} x{j}"), n)
                    } else {
                        gw(&format!("x{k}"), n)
                    };
                    assert!(
                        rf_equal(image.image(k), &expected).unwrap(),
                        "chi({i},{j}) on {n} strands moved x{k} to {}",
                        image.image(k)
                    );
                    checked += 1;
                }
            }
        }
    }
    let elapsed = assert_budget(start, Duration::from_secs(1), "criterion 1");
    println!("acceptance  1: PASS  conjugation table, {checked} images checked in {elapsed:?}");
}

/// The Artin image of a product is the composite of the images.
#[test]
fn criterion_02_homomorphism_on_random_pairs() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0201);
    for trial in 0..500 {
        let a = BraidWord::random_with(4, rng.random_range(0..=10), Alphabet::Welded, &mut rng);
        let b = BraidWord::random_with(4, rng.random_range(0..=10), Alphabet::Welded, &mut rng);
        let ab = a.compose(&b).unwrap();
        let composed = artin_image(&a).compose(&artin_image(&b)).unwrap();
        assert!(
            artin_image(&ab).equal(&composed).unwrap(),
            "trial {trial}: image of ({a})·({b}) is not the composite"
        );
    }
    let elapsed = assert_budget(start, Duration::from_secs(10), "criterion 2");
    println!("acceptance  2: PASS  homomorphism on 500 random pairs in {elapsed:?}");
}

/// Every applicable word-level move at every site, including virtual-pair
/// insertion at every site and index, preserves the Artin image.
#[test]
fn criterion_03_move_invariance() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0302);
    let mut rewrites = 0u64;
    for n in [3u32, 4] {
        for _ in 0..100 {
            let w = BraidWord::random_with(n, rng.random_range(0..=12), Alphabet::Welded, &mut rng);
            let image = artin_image(&w);
            for (mv, site) in w.applicable_moves() {
                let rewritten = w.apply_move(mv, site).unwrap();
                assert!(
                    artin_image(&rewritten).equal(&image).unwrap(),
                    "{mv:?} at site {site} changed the image of {w}"
                );
                rewrites += 1;
            }
            for site in 1..=w.len() + 1 {
                for index in 1..n {
                    let padded = w
                        .apply_move(BraidMove::InsertVirtualPair { index }, site)
                        .unwrap();
                    assert!(
                        artin_image(&padded).equal(&image).unwrap(),
                        "inserting r{index} pair at site {site} changed the image of {w}"
                    );
                    rewrites += 1;
                }
            }
        }
    }
    println!(
        "acceptance  3: PASS  {rewrites} rewrites preserved the image in {:?}",
        start.elapsed()
    );
}

/// Each single-letter action preserves the top-degree coefficient sum.
#[test]
fn criterion_04_top_coefficient_invariance() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0403);
    let mut checked = 0u64;
    for n in 2..=5u32 {
        let mut letters = Vec::new();
        for i in 1..n {
            letters.push(GeneratorLetter::classical(i, 1).unwrap());
            letters.push(GeneratorLetter::classical(i, -1).unwrap());
            letters.push(GeneratorLetter::virtual_crossing(i));
        }
        for letter in letters {
            let action = generator_action(&letter, n).unwrap();
            for _ in 0..200 {
                let x = GroupWord::random_with(n, rng.random_range(0..=8), &mut rng);
                let image = action.apply(&x).unwrap();
                assert_eq!(
                    image.magnus().coefficient_sum_top(),
                    x.magnus().coefficient_sum_top(),
                    "letter {letter} on {n} strands moved the top sum of {x}"
                );
                checked += 1;
            }
        }
    }
    println!(
        "acceptance  4: PASS  top-coefficient sum invariant over {checked} checks in {:?}",
        start.elapsed()
    );
}

/// The expansion of `x_1⋯x_n` has top coefficient sum one, for n up to 8,
/// with the monomial count bound respected.
#[test]
fn criterion_05_base_value_by_full_expansion() {
    let start = Instant::now();
    for n in 1..=8u32 {
        let p = GroupWord::full_product(n).magnus();
        assert_eq!(p.coefficient_sum_top(), BigInt::one(), "n = {n}");
        assert_eq!(p.term_count(), 1usize << n);
        assert!((p.term_count() as u128) <= ReducedPolynomial::max_term_count(n));
    }
    assert_eq!(ReducedPolynomial::max_term_count(8), 109_601);
    let elapsed = assert_budget(start, Duration::from_secs(5), "criterion 5");
    println!("acceptance  5: PASS  base expansion values for n ≤ 8 in {elapsed:?}");
}

/// Classical words always fix the full product; the cyclic shuffle never
/// does, and its witness is the rotated product.
#[test]
fn criterion_06_classicality() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0605);
    for n in 2..=5u32 {
        for _ in 0..50 {
            let w =
                BraidWord::random_with(n, rng.random_range(0..=10), Alphabet::Classical, &mut rng);
            let report = classicality_obstruction(&w);
            assert!(report.holds, "classical word {w} failed the fixed-word test");
        }
    }
    for n in 2..=6u32 {
        let report = classicality_obstruction(&BraidWord::cyclic_shift(n));
        assert!(!report.holds, "shuffle on {n} strands passed the test");
        let mut rotated = String::new();
        for i in 2..=n {
            rotated.push_str(&format!("x{i} "));
        }
        rotated.push_str("x1");
        assert_eq!(report.witness, gw(&rotated, n), "witness on {n} strands");
    }
    println!(
        "acceptance  6: PASS  classicality obstruction on 200 words + shuffles in {:?}",
        start.elapsed()
    );
}

/// Replay of the no-fixed-point check: no random welded word on 2, 3 or 5
/// strands yields a fixed point of the shuffled action.
#[test]
fn criterion_07_torsion_freeness_replay() {
    let start = Instant::now();
    for (p, seed) in [(2u32, 7u64), (3, 8), (5, 9)] {
        let verdict = cmd_torsion_check(p, 1000, 12, seed);
        assert_eq!(verdict.exit_code(), 0, "torsion check failed on {p} strands");
        assert_eq!(verdict.payload["passes"], serde_json::json!(1000));
        assert_eq!(verdict.payload["failures"], serde_json::json!(0));
        assert_eq!(verdict.payload["counterexample"], serde_json::Value::Null);
    }
    let elapsed = assert_budget(start, Duration::from_secs(60), "criterion 7");
    println!("acceptance  7: PASS  3000 torsion trials, zero counterexamples, in {elapsed:?}");
}

/// The cyclic shuffle on n strands has order exactly n.
#[test]
fn criterion_08_shuffle_order() {
    let start = Instant::now();
    for n in 1..=6u32 {
        let lam = BraidWord::cyclic_shift(n);
        let id = BraidWord::identity(n);
        assert!(
            braid_equal(&lam.power(n), &id).unwrap(),
            "shuffle^({n}) is not trivial on {n} strands"
        );
        for k in 1..n {
            assert!(
                !braid_equal(&lam.power(k), &id).unwrap(),
                "shuffle^{k} is trivial on {n} strands"
            );
        }
    }
    println!(
        "acceptance  8: PASS  shuffle order n for n ≤ 6 in {:?}",
        start.elapsed()
    );
}

/// Conjugating by the shuffle relabels a conjugating generator by the inverse
/// of the shuffle's permutation.
#[test]
fn criterion_09_shuffle_conjugation_relabels() {
    let start = Instant::now();
    for n in 2..=5u32 {
        let lam = BraidWord::cyclic_shift(n);
        let tau_inv = lam.permutation().inverse();
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let chi = BraidWord::conjugating_generator(i, j, n).unwrap();
                let conjugated = lam.compose(&chi).unwrap().compose(&lam.inverse()).unwrap();
                let relabeled =
                    BraidWord::conjugating_generator(tau_inv.apply(i), tau_inv.apply(j), n)
                        .unwrap();
                assert!(
                    braid_equal(&conjugated, &relabeled).unwrap(),
                    "conjugate of chi({i},{j}) on {n} strands is not chi({},{})",
                    tau_inv.apply(i),
                    tau_inv.apply(j)
                );
            }
        }
    }
    println!(
        "acceptance  9: PASS  shuffle conjugation relabeling for n ≤ 5 in {:?}",
        start.elapsed()
    );
}

/// An arrow product whose heads all avoid a component acts trivially on that
/// component's generator.
#[test]
fn criterion_10_headless_component_is_fixed() {
    let start = Instant::now();
    let n = 4u32;
    let mut rng = ChaCha8Rng::seed_from_u64(0x0a09);
    for trial in 0..100 {
        let k = rng.random_range(1..=n);
        let arrows: Vec<(u32, u32, i8)> = (0..rng.random_range(0..=6))
            .map(|_| {
                let head = loop {
                    let h = rng.random_range(1..=n);
                    if h != k {
                        break h;
                    }
                };
                let tail = loop {
                    let t = rng.random_range(1..=n);
                    if t != head {
                        break t;
                    }
                };
                let sign = if rng.random_bool(0.5) { 1 } else { -1 };
                (tail, head, sign)
            })
            .collect();
        let w = BraidWord::arrow_product(&arrows, n).unwrap();
        let x_k = GroupWord::generator(n, k).unwrap();
        let image = apply_word_action(&w, &x_k).unwrap();
        assert!(
            rf_equal(&image, &x_k).unwrap(),
            "trial {trial}: arrows {arrows:?} moved x{k}"
        );
    }
    println!(
        "acceptance 10: PASS  100 headless arrow products fix the spared generator in {:?}",
        start.elapsed()
    );
}

/// The defining relations of the reduced free group expand to one.
#[test]
fn criterion_11_relation_collapse() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0b0a);
    for trial in 0..200 {
        let n = rng.random_range(2..=4);
        let omega = GroupWord::random_with(n, rng.random_range(0..=6), &mut rng);
        let i = rng.random_range(1..=n);
        let x = GroupWord::generator(n, i).unwrap();
        let conj = omega.concat(&x).unwrap().concat(&omega.inverse()).unwrap();
        let relator = conj.commutator(&x).unwrap();
        assert!(
            relator.magnus().is_one(),
            "trial {trial}: [ω x{i} ω⁻¹, x{i}] with ω = {omega} did not collapse"
        );
    }
    println!(
        "acceptance 11: PASS  200 relator expansions collapse to one in {:?}",
        start.elapsed()
    );
}

/// Strand deletion commutes with stacking on words that preserve the kept
/// components, for keep-sets of sizes 2 and 3.
#[test]
fn criterion_12_strand_deletion_is_multiplicative() {
    let start = Instant::now();
    let n = 4u32;
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c0b);

    let admissible = |keep: &[u32], rng: &mut ChaCha8Rng| loop {
        let w = BraidWord::random_with(n, rng.random_range(0..=8), Alphabet::Welded, rng);
        if w.permutation().stabilizes(keep) {
            break w;
        }
    };

    for trial in 0..100 {
        for size in [2usize, 3] {
            // random keep-set of the requested size
            let mut keep: Vec<u32> = (1..=n).collect();
            for i in (1..keep.len()).rev() {
                let j = rng.random_range(0..=i);
                keep.swap(i, j);
            }
            keep.truncate(size);
            keep.sort_unstable();

            let a = admissible(&keep, &mut rng);
            let b = admissible(&keep, &mut rng);
            let ab = a.compose(&b).unwrap();
            let whole = ab.delete_strands(&keep).unwrap();
            let parts = a
                .delete_strands(&keep)
                .unwrap()
                .compose(&b.delete_strands(&keep).unwrap())
                .unwrap();
            assert!(
                braid_equal(&whole, &parts).unwrap(),
                "trial {trial}: deletion of keep {keep:?} broke on ({a})·({b})"
            );
        }
    }
    println!(
        "acceptance 12: PASS  deletion multiplicative on 200 admissible pairs in {:?}",
        start.elapsed()
    );
}

/// Composition convention sanity: both pinned checks hold at once.
#[test]
fn conventions_are_pinned_together() {
    for n in 2..=6u32 {
        let lam = BraidWord::cyclic_shift(n);
        let p = lam.permutation();
        assert_eq!(p.apply(1), n);
        for i in 2..=n {
            assert_eq!(p.apply(i), i - 1);
        }
        let img = artin_image(&lam);
        assert!(rf_equal(img.image(n), &gw("x1", n)).unwrap());
        assert!(img.equal(&artin_image(&lam)).unwrap());
        assert!(Endomorphism::identity(n)
            .equal(&artin_image(&lam.power(n)))
            .unwrap());
    }
}
