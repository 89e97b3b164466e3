//! The Artin action of welded braid words on the reduced free group, and the
//! equality decision and obstruction reports built on top of it.
//!
//! A braid word maps to the endomorphism sending each generator to a
//! conjugate of a generator; comparing images through the Magnus expansion
//! decides word equality exactly. Two obstructions come with the action:
//! classical words always fix the product `x_1⋯x_n`, and composing any word's
//! action with the cyclic shuffle always moves it, because the action
//! preserves the top-degree coefficient sum of the expansion.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::ReducedPolynomial;
use crate::braid::{BraidWord, GeneratorLetter, LetterKind};
use crate::group::{rf_equal, GroupWord};
use crate::perm::Permutation;
use crate::{Error, Result};

/// An endomorphism of the reduced free group on `strands` generators, stored
/// as the image word of each generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endomorphism {
    strands: u32,
    images: Vec<GroupWord>,
}

impl Endomorphism {
    pub fn identity(strands: u32) -> Self {
        let images = (1..=strands)
            .map(|i| GroupWord::generator(strands, i).expect("index in range"))
            .collect();
        Endomorphism { strands, images }
    }

    pub fn new(strands: u32, images: Vec<GroupWord>) -> Result<Self> {
        if images.len() != strands as usize {
            return Err(Error::MissingImage {
                index: images.len() as u32 + 1,
            });
        }
        for w in &images {
            if w.strands() != strands {
                return Err(Error::StrandMismatch {
                    left: strands,
                    right: w.strands(),
                });
            }
        }
        Ok(Endomorphism { strands, images })
    }

    /// Parse image words given in the group-word grammar.
    pub fn from_grammar(strands: u32, images: &[String]) -> Result<Self> {
        let images = images
            .iter()
            .map(|s| GroupWord::parse(s, strands))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, images)
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    /// Image of `x_i` (1-based).
    pub fn image(&self, i: u32) -> &GroupWord {
        &self.images[i as usize - 1]
    }

    pub fn images(&self) -> &[GroupWord] {
        &self.images
    }

    /// Apply to a word: substitute images into it and freely reduce.
    pub fn apply(&self, w: &GroupWord) -> Result<GroupWord> {
        if w.strands() != self.strands {
            return Err(Error::StrandMismatch {
                left: w.strands(),
                right: self.strands,
            });
        }
        Ok(w.substitute(&self.images)?.free_reduce())
    }

    /// `self ∘ other`: the endomorphism acting as `self(other(x))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(Endomorphism {
            strands: self.strands,
            images,
        })
    }

    /// Pointwise equality of images under the Magnus expansion.
    pub fn equal(&self, other: &Self) -> Result<bool> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        for (a, b) in self.images.iter().zip(&other.images) {
            if !rf_equal(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff for every `i` the degree-1 part of the expansion of the image
    /// of `x_i` is exactly `X_{perm⁻¹(i)}` with coefficient one. This is the
    /// shape every braid image must have: each generator goes to a conjugate
    /// of the generator indexed by the inverse permutation.
    pub fn has_conjugacy_shape(&self, perm: &Permutation) -> bool {
        if perm.degree() != self.strands {
            return false;
        }
        let inv = perm.inverse();
        for i in 1..=self.strands {
            let coeffs = self.image(i).magnus().degree_one_coefficients();
            let expected = inv.apply(i);
            for (k, c) in coeffs.iter().enumerate() {
                let want = if k as u32 + 1 == expected {
                    BigInt::one()
                } else {
                    BigInt::from(0)
                };
                if *c != want {
                    return false;
                }
            }
        }
        true
    }
}

impl Serialize for Endomorphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Endomorphism", 2)?;
        s.serialize_field("n", &self.strands)?;
        let images: Vec<String> = self.images.iter().map(|w| w.to_string()).collect();
        s.serialize_field("images", &images)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Endomorphism {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: u32,
            images: Vec<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        Endomorphism::from_grammar(repr.n, &repr.images).map_err(D::Error::custom)
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{} -> {}", i + 1, if w.is_empty() { "1" } else { "" })?;
            if !w.is_empty() {
                write!(f, "{w}")?;
            }
        }
        Ok(())
    }
}

/// The action of a single letter.
///
/// A virtual letter swaps the two adjacent generators. A positive classical
/// letter sends `x_i ↦ x_{i+1}` and `x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}`; the
/// negative letter is the tabulated inverse `x_i ↦ x_i x_{i+1} x_i⁻¹`,
/// `x_{i+1} ↦ x_i`, unit-tested to compose to the identity.
pub fn generator_action(letter: &GeneratorLetter, n: u32) -> Result<Endomorphism> {
    let i = letter.index;
    if i == 0 || i + 1 > n {
        return Err(Error::IndexOutOfRange {
            index: i,
            strands: n,
        });
    }
    let word = |text: &str| GroupWord::parse(text, n).expect("tabulated image parses");
    let mut endo = Endomorphism::identity(n);
    let (lo, hi) = (i as usize - 1, i as usize);
    match (letter.kind, letter.sign) {
        (LetterKind::Virtual, _) => {
            endo.images.swap(lo, hi);
        }
        (LetterKind::Classical, 1) => {
            endo.images[lo] = word(&format!("x{}", i + 1));
            endo.images[hi] = word(&format!("x{}' x{} x{}", i + 1, i, i + 1));
        }
        (LetterKind::Classical, _) => {
            endo.images[lo] = word(&format!("x{} x{} x{}'", i, i + 1, i));
            endo.images[hi] = word(&format!("x{}", i));
        }
    }
    Ok(endo)
}

/// The Artin image of a braid word: letters act in spelling order, so the
/// image of a product is the composite of the images,
/// `image(a·b) = image(a) ∘ image(b)`.
pub fn artin_image(w: &BraidWord) -> Endomorphism {
    let mut acc = Endomorphism::identity(w.strands());
    for letter in w.letters() {
        let g = generator_action(letter, w.strands()).expect("word letters are in range");
        acc = acc.compose(&g).expect("strand counts agree");
    }
    acc
}

/// `image(w)(target)` without materializing the full endomorphism: the word
/// is folded letter by letter over the target, reducing as it goes.
pub fn apply_word_action(w: &BraidWord, target: &GroupWord) -> Result<GroupWord> {
    if w.strands() != target.strands() {
        return Err(Error::StrandMismatch {
            left: w.strands(),
            right: target.strands(),
        });
    }
    let mut out = target.free_reduce();
    for letter in w.letters().iter().rev() {
        let g = generator_action(letter, w.strands())?;
        out = g.apply(&out)?;
    }
    Ok(out)
}

/// Certificate that two braid words differ: the first generator whose images
/// have distinct expansions, with both expansions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub index: u32,
    pub left: ReducedPolynomial,
    pub right: ReducedPolynomial,
}

/// Locate the first generator separating the Artin images of `a` and `b`,
/// or `None` when the words are equal in the group.
pub fn braid_separation(a: &BraidWord, b: &BraidWord) -> Result<Option<Separation>> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    let fa = artin_image(a);
    let fb = artin_image(b);
    for i in 1..=a.strands() {
        let left = fa.image(i).magnus();
        let right = fb.image(i).magnus();
        if left != right {
            return Ok(Some(Separation { index: i, left, right }));
        }
    }
    Ok(None)
}

/// Decide equality in the group of welded braids up to link-homotopy. The
/// Artin action is faithful there, so this is a complete decision procedure.
pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    Ok(braid_separation(a, b)?.is_none())
}

/// Result of the classicality test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalityReport {
    /// Whether the action fixes `x_1 x_2 ⋯ x_n`. Every classical braid does,
    /// so `false` certifies the word is not classical; `true` is inconclusive.
    pub holds: bool,
    /// The image of `x_1 x_2 ⋯ x_n`, freely reduced.
    pub witness: GroupWord,
}

/// Test the necessary condition for a welded word to be a classical braid:
/// its action must fix the full product of generators.
pub fn classicality_obstruction(w: &BraidWord) -> ClassicalityReport {
    let full = GroupWord::full_product(w.strands());
    let witness = apply_word_action(w, &full).expect("strand counts agree");
    let holds = rf_equal(&witness, &full).expect("strand counts agree");
    ClassicalityReport { holds, witness }
}

/// The two torsion invariants of a word's action on `x_1 x_2 ⋯ x_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionObstruction {
    /// Top-degree coefficient sum of the expansion of the image of the full
    /// product. The action preserves it, so it always equals one.
    pub f_value: BigInt,
    /// Whether the cyclic shuffle moves the image of the full product. For
    /// two or more strands this always holds: a fixed point would need the
    /// top-degree sum to vanish modulo `n`.
    pub lambda_moves_it: bool,
}

pub fn torsion_obstruction(w: &BraidWord) -> TorsionObstruction {
    let n = w.strands();
    let full = GroupWord::full_product(n);
    let image = apply_word_action(w, &full).expect("strand counts agree");
    let f_value = image.magnus().coefficient_sum_top();
    let shifted = apply_word_action(&BraidWord::cyclic_shift(n), &image)
        .expect("strand counts agree");
    let lambda_moves_it = !rf_equal(&shifted, &image).expect("strand counts agree");
    TorsionObstruction {
        f_value,
        lambda_moves_it,
    }
}

/// Sound partial certificate of the conjugacy shape of a braid image: each
/// generator image must have degree-1 part exactly the generator prescribed
/// by the inverse of the word's permutation.
pub fn generator_conjugacy_check(w: &BraidWord) -> bool {
    artin_image(w).has_conjugacy_shape(&w.permutation())
}
