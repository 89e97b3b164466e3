//! Exact computation with welded braid words up to link-homotopy.
//!
//! The engine decides word equality through the Artin action on the reduced
//! free group: a braid word is mapped to an endomorphism, endomorphism images
//! are compared through their Magnus expansions in the square-free
//! noncommutative polynomial algebra, and every answer is exact (integer
//! coefficients, no truncation). On top of the word problem the crate exposes
//! the classicality and torsion obstructions together with randomized
//! verification harnesses.
//!
//! All values are immutable after construction and every operation is a pure
//! function; randomness always enters through an explicit seed.

pub mod algebra;
pub mod artin;
pub mod braid;
pub mod group;
pub mod harness;
pub mod perm;

mod error;

pub use error::{Error, Result};

pub use algebra::{Monomial, PolyTerm, ReducedPolynomial};
pub use artin::{
    apply_word_action, artin_image, braid_equal, braid_separation, classicality_obstruction,
    generator_action, generator_conjugacy_check, torsion_obstruction, ClassicalityReport,
    Endomorphism, Separation, TorsionObstruction,
};
pub use braid::{Alphabet, BraidMove, BraidWord, GeneratorLetter, LetterKind};
pub use group::{rf_equal, GroupLetter, GroupWord};
pub use harness::{
    property_suite, torsion_check, PropertyReport, PropertySuiteReport, TorsionCheckReport,
};
pub use perm::Permutation;
