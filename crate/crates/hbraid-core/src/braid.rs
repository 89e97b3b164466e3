//! Welded braid words: parsing, stacking, permutations, word-level isotopy
//! moves, strand deletion and the named generator families.
//!
//! Words are plain letter sequences and are never auto-normalized; two words
//! spell the same group element exactly when their Artin images agree, which
//! is decided in [`crate::artin`].

use std::fmt;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::group::tokenize;
use crate::perm::Permutation;
use crate::{Error, Result};

/// Crossing species of a letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LetterKind {
    Classical,
    Virtual,
}

/// One generator occurrence. Virtual letters are involutions and always carry
/// sign `+1`; classical letters carry `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorLetter {
    pub kind: LetterKind,
    pub index: u32,
    pub sign: i8,
}

impl GeneratorLetter {
    pub fn classical(index: u32, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidSign { sign });
        }
        Ok(GeneratorLetter {
            kind: LetterKind::Classical,
            index,
            sign,
        })
    }

    pub fn virtual_crossing(index: u32) -> Self {
        GeneratorLetter {
            kind: LetterKind::Virtual,
            index,
            sign: 1,
        }
    }

    pub fn inverse(&self) -> Self {
        match self.kind {
            LetterKind::Classical => GeneratorLetter {
                sign: -self.sign,
                ..*self
            },
            // involution
            LetterKind::Virtual => *self,
        }
    }

    pub fn is_classical(&self) -> bool {
        self.kind == LetterKind::Classical
    }
}

impl fmt::Display for GeneratorLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LetterKind::Classical => {
                write!(f, "s{}", self.index)?;
                if self.sign < 0 {
                    write!(f, "'")?;
                }
            }
            LetterKind::Virtual => write!(f, "r{}", self.index)?,
        }
        Ok(())
    }
}

/// Letter pools for random word generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    /// Classical letters with both signs.
    Classical,
    /// Virtual letters only.
    Virtual,
    /// Both species.
    Welded,
}

/// Word-level isotopy rewrites. Every move maps a word to another spelling of
/// the same group element; this is exercised against the Artin action by the
/// test suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidMove {
    /// Delete an adjacent `s_i s_i⁻¹` or `s_i⁻¹ s_i` pair.
    Cancel,
    /// Delete an adjacent `r_i r_i` pair.
    VirtualCancel,
    /// Insert an `r_index r_index` pair in front of the site.
    InsertVirtualPair { index: u32 },
    /// Swap two adjacent letters whose indices differ by at least 2.
    FarCommute,
    /// `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}`, uniform sign.
    BraidRelation,
    /// `r_i r_{i+1} r_i = r_{i+1} r_i r_{i+1}`.
    VirtualBraidRelation,
    /// `r_i r_{i+1} s_i^± = s_{i+1}^± r_i r_{i+1}`.
    MixedRelation,
    /// `r_i s_{i+1} s_i = s_{i+1} s_i r_{i+1}` and its inverse form
    /// `s_i⁻¹ s_{i+1}⁻¹ r_i = r_{i+1} s_i⁻¹ s_{i+1}⁻¹`.
    OverCommute,
}

impl BraidMove {
    /// The moves that rewrite an existing pattern (insertions excluded).
    pub const PATTERN_MOVES: [BraidMove; 7] = [
        BraidMove::Cancel,
        BraidMove::VirtualCancel,
        BraidMove::FarCommute,
        BraidMove::BraidRelation,
        BraidMove::VirtualBraidRelation,
        BraidMove::MixedRelation,
        BraidMove::OverCommute,
    ];
}

/// A welded braid word on `strands` strands, read left-to-right as a diagram
/// is read top-to-bottom. The empty word is the trivial braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: u32,
    letters: Vec<GeneratorLetter>,
}

impl BraidWord {
    pub fn identity(strands: u32) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: u32, letters: Vec<GeneratorLetter>) -> Result<Self> {
        for l in &letters {
            Self::check_letter(l, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    fn check_letter(l: &GeneratorLetter, strands: u32) -> Result<()> {
        if l.index == 0 || l.index + 1 > strands {
            return Err(Error::IndexOutOfRange {
                index: l.index,
                strands,
            });
        }
        if l.sign != 1 && l.sign != -1 || (l.kind == LetterKind::Virtual && l.sign != 1) {
            return Err(Error::InvalidSign { sign: l.sign });
        }
        Ok(())
    }

    /// Parse whitespace-separated tokens `s<k>`, `s<k>'`, `r<k>`; an
    /// apostrophe on `r` is accepted and normalized away.
    pub fn parse(text: &str, strands: u32) -> Result<Self> {
        let mut letters = Vec::new();
        for (position, token) in tokenize(text) {
            let bad = |message: String| Error::Parse { position, message };
            let mut chars = token.chars();
            let head = chars.next().unwrap();
            let rest = &token[head.len_utf8()..];
            let (digits, primed) = match rest.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (rest, false),
            };
            let index: u32 = digits
                .parse()
                .map_err(|_| bad(format!("bad generator index in {token:?}")))?;
            let letter = match head {
                's' => GeneratorLetter {
                    kind: LetterKind::Classical,
                    index,
                    sign: if primed { -1 } else { 1 },
                },
                // r's inverse is itself
                'r' => GeneratorLetter::virtual_crossing(index),
                _ => return Err(bad(format!("expected s<k> or r<k>, found {token:?}"))),
            };
            if index == 0 || index + 1 > strands {
                return Err(Error::IndexOutOfRange { index, strands });
            }
            letters.push(letter);
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn letters(&self) -> &[GeneratorLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The one-letter word `s_i^sign`.
    pub fn classical_generator(strands: u32, i: u32, sign: i8) -> Result<Self> {
        Self::new(strands, vec![GeneratorLetter::classical(i, sign)?])
    }

    /// The one-letter word `r_i`.
    pub fn virtual_generator(strands: u32, i: u32) -> Result<Self> {
        Self::new(strands, vec![GeneratorLetter::virtual_crossing(i)])
    }

    /// Stacking: `self` then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Reversed sequence with each letter inverted.
    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `self` stacked `k` times.
    pub fn power(&self, k: u32) -> Self {
        let mut letters = Vec::with_capacity(self.letters.len() * k as usize);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// The permutation sending each component's start position to its end
    /// position. Under stacking, `perm(a·b) = perm(b) ∘ perm(a)`.
    pub fn permutation(&self) -> Permutation {
        let n = self.strands as usize;
        // comp_at[p-1] = component currently occupying position p
        let mut comp_at: Vec<u32> = (1..=self.strands).collect();
        for l in &self.letters {
            comp_at.swap(l.index as usize - 1, l.index as usize);
        }
        let mut images = vec![0u32; n];
        for (p, &c) in comp_at.iter().enumerate() {
            images[c as usize - 1] = p as u32 + 1;
        }
        Permutation::from_images(images).expect("positions form a bijection")
    }

    /// The cyclic shuffle `r_1 r_2 ⋯ r_{n-1}` (empty for n = 1).
    pub fn cyclic_shift(n: u32) -> Self {
        let letters = (1..n).map(GeneratorLetter::virtual_crossing).collect();
        BraidWord { strands: n, letters }
    }

    /// The pure generator whose Artin image conjugates `x_i` by `x_j`:
    /// `r_i ⋯ r_{j-2} s_{j-1} r_{j-1} ⋯ r_i` for `i < j`, and
    /// `r_{i-1} ⋯ r_j s_j r_{j+1} ⋯ r_{i-1}` for `j < i`.
    pub fn conjugating_generator(i: u32, j: u32, n: u32) -> Result<Self> {
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidPair { i, j, strands: n });
        }
        let mut letters = Vec::new();
        if i < j {
            for k in i..=j.saturating_sub(2) {
                letters.push(GeneratorLetter::virtual_crossing(k));
            }
            letters.push(GeneratorLetter::classical(j - 1, 1)?);
            for k in (i..=j - 1).rev() {
                letters.push(GeneratorLetter::virtual_crossing(k));
            }
        } else {
            for k in (j..=i - 1).rev() {
                letters.push(GeneratorLetter::virtual_crossing(k));
            }
            letters.push(GeneratorLetter::classical(j, 1)?);
            for k in j + 1..=i - 1 {
                letters.push(GeneratorLetter::virtual_crossing(k));
            }
        }
        Ok(BraidWord { strands: n, letters })
    }

    /// Product of conjugating generators read off a list of arrows. The arrow
    /// `(tail, head, sign)` contributes the generator conjugating the head
    /// component by the tail component, or its inverse for negative sign.
    pub fn arrow_product(arrows: &[(u32, u32, i8)], n: u32) -> Result<Self> {
        let mut word = BraidWord::identity(n);
        for &(tail, head, sign) in arrows {
            if sign != 1 && sign != -1 {
                return Err(Error::InvalidSign { sign });
            }
            let chi = Self::conjugating_generator(head, tail, n)?;
            let factor = if sign > 0 { chi } else { chi.inverse() };
            word = word.compose(&factor)?;
        }
        Ok(word)
    }

    /// Apply the rewrite `mv` at the 1-based letter position `site`.
    pub fn apply_move(&self, mv: BraidMove, site: usize) -> Result<Self> {
        let not_here = Err(Error::MoveNotApplicable { site });
        if site == 0 {
            return not_here;
        }
        let at = site - 1;
        let len = self.letters.len();

        if let BraidMove::InsertVirtualPair { index } = mv {
            if site > len + 1 {
                return not_here;
            }
            let r = GeneratorLetter::virtual_crossing(index);
            Self::check_letter(&r, self.strands)?;
            let mut letters = self.letters.clone();
            letters.splice(at..at, [r, r]);
            return Ok(BraidWord {
                strands: self.strands,
                letters,
            });
        }

        let window = match mv {
            BraidMove::Cancel | BraidMove::VirtualCancel | BraidMove::FarCommute => 2,
            _ => 3,
        };
        if at + window > len {
            return not_here;
        }
        let w = &self.letters[at..at + window];
        let replacement: Vec<GeneratorLetter> = match mv {
            BraidMove::Cancel => {
                if w[0].is_classical() && w[1].is_classical() && w[0].index == w[1].index
                    && w[0].sign == -w[1].sign
                {
                    Vec::new()
                } else {
                    return not_here;
                }
            }
            BraidMove::VirtualCancel => {
                if !w[0].is_classical() && !w[1].is_classical() && w[0].index == w[1].index {
                    Vec::new()
                } else {
                    return not_here;
                }
            }
            BraidMove::FarCommute => {
                if w[0].index.abs_diff(w[1].index) >= 2 {
                    vec![w[1], w[0]]
                } else {
                    return not_here;
                }
            }
            BraidMove::BraidRelation => {
                if w.iter().all(|l| l.is_classical())
                    && w[0] == w[2]
                    && w[0].sign == w[1].sign
                    && w[0].index.abs_diff(w[1].index) == 1
                {
                    vec![w[1], w[0], w[1]]
                } else {
                    return not_here;
                }
            }
            BraidMove::VirtualBraidRelation => {
                if w.iter().all(|l| !l.is_classical())
                    && w[0] == w[2]
                    && w[0].index.abs_diff(w[1].index) == 1
                {
                    vec![w[1], w[0], w[1]]
                } else {
                    return not_here;
                }
            }
            BraidMove::MixedRelation => {
                let (a, b, c) = (w[0], w[1], w[2]);
                if !a.is_classical() && !b.is_classical() && c.is_classical()
                    && b.index == a.index + 1 && c.index == a.index
                {
                    // r_i r_{i+1} s_i^± → s_{i+1}^± r_i r_{i+1}
                    vec![GeneratorLetter::classical(a.index + 1, c.sign)?, a, b]
                } else if a.is_classical() && !b.is_classical() && !c.is_classical()
                    && a.index == b.index + 1 && c.index == b.index + 1
                {
                    // s_{i+1}^± r_i r_{i+1} → r_i r_{i+1} s_i^±
                    vec![b, c, GeneratorLetter::classical(b.index, a.sign)?]
                } else {
                    return not_here;
                }
            }
            BraidMove::OverCommute => {
                let (a, b, c) = (w[0], w[1], w[2]);
                if !a.is_classical() && b.is_classical() && c.is_classical()
                    && b.sign == 1 && c.sign == 1
                    && b.index == a.index + 1 && c.index == a.index
                {
                    // r_i s_{i+1} s_i → s_{i+1} s_i r_{i+1}
                    vec![b, c, GeneratorLetter::virtual_crossing(a.index + 1)]
                } else if a.is_classical() && b.is_classical() && !c.is_classical()
                    && a.sign == 1 && b.sign == 1
                    && a.index == b.index + 1 && c.index == b.index + 1
                {
                    // s_{i+1} s_i r_{i+1} → r_i s_{i+1} s_i
                    vec![GeneratorLetter::virtual_crossing(b.index), a, b]
                } else if a.is_classical() && b.is_classical() && !c.is_classical()
                    && a.sign == -1 && b.sign == -1
                    && b.index == a.index + 1 && c.index == a.index
                {
                    // s_i⁻¹ s_{i+1}⁻¹ r_i → r_{i+1} s_i⁻¹ s_{i+1}⁻¹
                    vec![GeneratorLetter::virtual_crossing(a.index + 1), a, b]
                } else if !a.is_classical() && b.is_classical() && c.is_classical()
                    && b.sign == -1 && c.sign == -1
                    && a.index == b.index + 1 && c.index == b.index + 1
                {
                    // r_{i+1} s_i⁻¹ s_{i+1}⁻¹ → s_i⁻¹ s_{i+1}⁻¹ r_i
                    vec![b, c, GeneratorLetter::virtual_crossing(b.index)]
                } else {
                    return not_here;
                }
            }
            BraidMove::InsertVirtualPair { .. } => unreachable!(),
        };
        for l in &replacement {
            Self::check_letter(l, self.strands)?;
        }
        let mut letters = self.letters.clone();
        letters.splice(at..at + window, replacement);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Every `(move, site)` pair at which a pattern rewrite applies.
    pub fn applicable_moves(&self) -> Vec<(BraidMove, usize)> {
        let mut out = Vec::new();
        for site in 1..=self.letters.len() {
            for mv in BraidMove::PATTERN_MOVES {
                if self.apply_move(mv, site).is_ok() {
                    out.push((mv, site));
                }
            }
        }
        out
    }

    /// Restrict to the components in `keep` (labels are start positions).
    /// Crossings incident to a discarded component are dropped and the rest
    /// are re-indexed by the order of the kept strands. The word's permutation
    /// must map `keep` onto itself.
    pub fn delete_strands(&self, keep: &[u32]) -> Result<Self> {
        let mut kept: Vec<u32> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if kept.is_empty() {
            return Err(Error::InvalidKeepSet {
                reason: "empty keep set".into(),
            });
        }
        if let Some(&c) = kept.iter().find(|&&c| c == 0 || c > self.strands) {
            return Err(Error::InvalidKeepSet {
                reason: format!("component {c} out of range"),
            });
        }
        if !self.permutation().stabilizes(&kept) {
            return Err(Error::InvalidKeepSet {
                reason: "permutation does not preserve the keep set".into(),
            });
        }

        let is_kept = |c: u32| kept.binary_search(&c).is_ok();
        let mut comp_at: Vec<u32> = (1..=self.strands).collect();
        let mut letters = Vec::new();
        for l in &self.letters {
            let p = l.index as usize - 1;
            let (c1, c2) = (comp_at[p], comp_at[p + 1]);
            if is_kept(c1) && is_kept(c2) {
                // rank of position p+1 among kept-occupied positions
                let rank = comp_at[..=p].iter().filter(|&&c| is_kept(c)).count() as u32;
                letters.push(GeneratorLetter {
                    kind: l.kind,
                    index: rank,
                    sign: l.sign,
                });
            }
            comp_at.swap(p, p + 1);
        }
        Ok(BraidWord {
            strands: kept.len() as u32,
            letters,
        })
    }

    /// Uniform i.i.d. letters from the chosen alphabet; deterministic for a
    /// fixed seed. On one strand there are no generators and the word is
    /// empty.
    pub fn random(strands: u32, length: usize, alphabet: Alphabet, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(strands, length, alphabet, &mut rng)
    }

    pub fn random_with<R: Rng>(
        strands: u32,
        length: usize,
        alphabet: Alphabet,
        rng: &mut R,
    ) -> Self {
        if strands < 2 {
            return BraidWord::identity(strands);
        }
        let span = strands - 1;
        let pool = match alphabet {
            Alphabet::Classical => 2 * span,
            Alphabet::Virtual => span,
            Alphabet::Welded => 3 * span,
        };
        let letters = (0..length)
            .map(|_| {
                let r = rng.random_range(0..pool);
                let (slot, index) = (r / span, r % span + 1);
                match (alphabet, slot) {
                    (Alphabet::Virtual, _) => GeneratorLetter::virtual_crossing(index),
                    (_, 0) => GeneratorLetter {
                        kind: LetterKind::Classical,
                        index,
                        sign: 1,
                    },
                    (_, 1) => GeneratorLetter {
                        kind: LetterKind::Classical,
                        index,
                        sign: -1,
                    },
                    _ => GeneratorLetter::virtual_crossing(index),
                }
            })
            .collect();
        BraidWord { strands, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
