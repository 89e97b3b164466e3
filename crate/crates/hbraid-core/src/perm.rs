//! Permutations of `{1, …, n}` in image-table form.

use crate::{Error, Result};

/// A bijection of `{1, …, n}`. `images[i-1]` is the image of `i` (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Build from an image table; rejects anything that is not a bijection.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::InvalidPermutation);
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping `i` and `i+1`.
    pub fn adjacent_swap(n: u32, i: u32) -> Result<Self> {
        if i == 0 || i + 1 > n {
            return Err(Error::IndexOutOfRange { index: i, strands: n });
        }
        let mut images: Vec<u32> = (1..=n).collect();
        images.swap(i as usize - 1, i as usize);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> u32 {
        self.images.len() as u32
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: u32) -> u32 {
        self.images[i as usize - 1]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// True iff the set `keep` is mapped onto itself.
    pub fn stabilizes(&self, keep: &[u32]) -> bool {
        keep.iter().all(|&c| keep.contains(&self.apply(c)))
    }
}
