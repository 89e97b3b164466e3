//! Words in the reduced free group and their Magnus expansion.
//!
//! Words are never normalized; two words are compared by expanding both into
//! the square-free polynomial algebra, where a generator maps to `1 + X_i`
//! and its inverse to `1 - X_i` (an exact inverse, since `X_i² = 0`).

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::ReducedPolynomial;
use crate::{Error, Result};

/// A single signed generator occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupLetter {
    pub index: u32,
    pub sign: i8,
}

impl GroupLetter {
    pub fn new(index: u32, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidSign { sign });
        }
        Ok(GroupLetter { index, sign })
    }

    pub fn inverse(&self) -> Self {
        GroupLetter {
            index: self.index,
            sign: -self.sign,
        }
    }
}

/// A word in the generators `x_1, …, x_n`; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupWord {
    strands: u32,
    letters: Vec<GroupLetter>,
}

impl GroupWord {
    pub fn identity(strands: u32) -> Self {
        GroupWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: u32, letters: Vec<GroupLetter>) -> Result<Self> {
        for l in &letters {
            if l.index == 0 || l.index > strands {
                return Err(Error::IndexOutOfRange {
                    index: l.index,
                    strands,
                });
            }
            if l.sign != 1 && l.sign != -1 {
                return Err(Error::InvalidSign { sign: l.sign });
            }
        }
        Ok(GroupWord { strands, letters })
    }

    /// The one-letter word `x_i`.
    pub fn generator(strands: u32, i: u32) -> Result<Self> {
        Self::new(strands, vec![GroupLetter::new(i, 1)?])
    }

    /// The word `x_1 x_2 ⋯ x_n`.
    pub fn full_product(strands: u32) -> Self {
        GroupWord {
            strands,
            letters: (1..=strands).map(|i| GroupLetter { index: i, sign: 1 }).collect(),
        }
    }

    /// Parse whitespace-separated tokens `x<k>` / `x<k>'`.
    pub fn parse(text: &str, strands: u32) -> Result<Self> {
        let mut letters = Vec::new();
        for (position, token) in tokenize(text) {
            let bad = |message: String| Error::Parse { position, message };
            let rest = token
                .strip_prefix('x')
                .ok_or_else(|| bad(format!("expected x<k> or x<k>', found {token:?}")))?;
            let (digits, sign) = match rest.strip_suffix('\'') {
                Some(d) => (d, -1),
                None => (rest, 1),
            };
            let index: u32 = digits
                .parse()
                .map_err(|_| bad(format!("bad generator index in {token:?}")))?;
            if index == 0 || index > strands {
                return Err(Error::IndexOutOfRange { index, strands });
            }
            letters.push(GroupLetter { index, sign });
        }
        Ok(GroupWord { strands, letters })
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[GroupLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reversed, sign-flipped letters.
    pub fn inverse(&self) -> Self {
        GroupWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(GroupWord {
            strands: self.strands,
            letters,
        })
    }

    /// The commutator `self · other · self⁻¹ · other⁻¹`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.concat(other)?
            .concat(&self.inverse())?
            .concat(&other.inverse())
    }

    /// Iterated cancellation of adjacent `x_i x_i⁻¹` pairs.
    pub fn free_reduce(&self) -> Self {
        let mut stack: Vec<GroupLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(top) if top.index == l.index && top.sign == -l.sign => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        GroupWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// Replace each `x_i^{±1}` by `images[i-1]^{±1}` and concatenate. The
    /// result is returned raw (not freely reduced).
    pub fn substitute(&self, images: &[GroupWord]) -> Result<Self> {
        let mut letters = Vec::new();
        for l in &self.letters {
            let image = images
                .get(l.index as usize - 1)
                .ok_or(Error::MissingImage { index: l.index })?;
            if l.sign > 0 {
                letters.extend_from_slice(&image.letters);
            } else {
                letters.extend(image.letters.iter().rev().map(|g| g.inverse()));
            }
        }
        let strands = images
            .first()
            .map(|w| w.strands)
            .unwrap_or(self.strands);
        Ok(GroupWord { strands, letters })
    }

    /// Expansion in the square-free algebra: the product over letters of
    /// `1 + X_i` (positive) or `1 - X_i` (negative).
    pub fn magnus(&self) -> ReducedPolynomial {
        let mut p = ReducedPolynomial::one(self.strands);
        for l in &self.letters {
            p.mul_binomial(l.index, l.sign);
        }
        p
    }

    /// Uniform i.i.d. letters from `{x_1^{±1}, …, x_n^{±1}}`; deterministic
    /// for a fixed seed. Empty when `strands` is zero.
    pub fn random(strands: u32, length: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(strands, length, &mut rng)
    }

    pub fn random_with<R: Rng>(strands: u32, length: usize, rng: &mut R) -> Self {
        if strands == 0 {
            return GroupWord::identity(0);
        }
        let letters = (0..length)
            .map(|_| GroupLetter {
                index: rng.random_range(1..=strands),
                sign: if rng.random_bool(0.5) { 1 } else { -1 },
            })
            .collect();
        GroupWord { strands, letters }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{}", l.index)?;
            if l.sign < 0 {
                write!(f, "'")?;
            }
        }
        Ok(())
    }
}

/// Split into whitespace-separated tokens with their byte offsets.
pub(crate) fn tokenize(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.split_whitespace().map(move |tok| {
        let position = tok.as_ptr() as usize - text.as_ptr() as usize;
        (position, tok)
    })
}

/// True iff the two words have equal Magnus expansions. This is the engine's
/// notion of equality in the reduced free group; the test suite
/// cross-validates it against insertion of the group's defining relations.
pub fn rf_equal(a: &GroupWord, b: &GroupWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(a.magnus() == b.magnus())
}
