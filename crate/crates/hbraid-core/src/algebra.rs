//! Exact arithmetic in the algebra of noncommuting polynomials over the
//! integers in which any monomial with a repeated variable is zero.
//!
//! Monomials are sequences of pairwise-distinct variable indices, so on `n`
//! variables the algebra is a free abelian group of rank
//! `N(n) = Σ_{k=0}^{n} n!/(n-k)!` and all computations terminate exactly.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::perm::Permutation;
use crate::{Error, Result};

/// A product of pairwise-distinct variables; the empty product is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    indices: Vec<u32>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial { indices: Vec::new() }
    }

    /// Build from an index sequence, rejecting repeats.
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        for (k, &i) in indices.iter().enumerate() {
            if indices[..k].contains(&i) {
                return Err(Error::RepeatedIndex);
            }
        }
        Ok(Monomial { indices })
    }

    pub fn variable(i: u32) -> Self {
        Monomial { indices: vec![i] }
    }

    pub fn degree(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    /// Concatenation, or `None` when the product vanishes on a repeat.
    pub fn concat(&self, other: &Monomial) -> Option<Monomial> {
        for i in &other.indices {
            if self.indices.contains(i) {
                return None;
            }
        }
        let mut indices = Vec::with_capacity(self.indices.len() + other.indices.len());
        indices.extend_from_slice(&self.indices);
        indices.extend_from_slice(&other.indices);
        Some(Monomial { indices })
    }

}

// Canonical term order: degree first, then lexicographic on the index
// sequence. Serialization and equality hashing rely on it.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.indices.cmp(&other.indices))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.indices.is_empty() {
            return write!(f, "1");
        }
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "X{i}")?;
        }
        Ok(())
    }
}

/// One serialized term: `{"m": [indices…], "c": "coefficient"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub m: Vec<u32>,
    pub c: String,
}

/// An integer-coefficient sum of square-free monomials on `strands` variables.
///
/// Zero coefficients are never stored; terms are kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedPolynomial {
    strands: u32,
    terms: BTreeMap<Monomial, BigInt>,
}

impl ReducedPolynomial {
    pub fn zero(strands: u32) -> Self {
        ReducedPolynomial {
            strands,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(strands: u32) -> Self {
        Self::constant(strands, BigInt::one())
    }

    pub fn constant(strands: u32, value: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::unit(), value);
        }
        ReducedPolynomial { strands, terms }
    }

    /// The polynomial `X_i`.
    pub fn variable(strands: u32, i: u32) -> Result<Self> {
        if i == 0 || i > strands {
            return Err(Error::IndexOutOfRange { index: i, strands });
        }
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::variable(i), BigInt::one());
        Ok(ReducedPolynomial { strands, terms })
    }

    /// Build from explicit terms; like coefficients are merged and zeros drop.
    pub fn from_terms<I>(strands: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut out = ReducedPolynomial::zero(strands);
        for (m, c) in terms {
            if let Some(&i) = m.indices.iter().find(|&&i| i == 0 || i > strands) {
                return Err(Error::IndexOutOfRange { index: i, strands });
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn strands(&self) -> u32 {
        self.strands
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .is_some_and(|c| c.is_one())
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    fn check_strands(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        ReducedPolynomial {
            strands: self.strands,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Product in the square-free algebra: index sequences concatenate and any
    /// monomial with a repeated variable vanishes.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        let mut out = ReducedPolynomial::zero(self.strands);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some(m) = ma.concat(mb) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        Ok(out)
    }

    /// In-place right multiplication by `1 + sign·X_i`. This is the only
    /// product shape the Magnus expansion of a word needs.
    pub(crate) fn mul_binomial(&mut self, i: u32, sign: i8) {
        let mut extra: Vec<(Monomial, BigInt)> = Vec::new();
        for (m, c) in &self.terms {
            if let Some(ext) = m.concat(&Monomial::variable(i)) {
                let c = if sign >= 0 { c.clone() } else { -c };
                extra.push((ext, c));
            }
        }
        for (m, c) in extra {
            self.add_term(m, c);
        }
    }

    /// Sum of the coefficients of the monomials of degree exactly `strands`.
    pub fn coefficient_sum_top(&self) -> BigInt {
        let n = self.strands as usize;
        self.terms
            .iter()
            .filter(|(m, _)| m.degree() == n)
            .map(|(_, c)| c)
            .sum()
    }

    /// Replace every index `i` by `perm(i)`; coefficients are untouched.
    pub fn permute_variables(&self, perm: &Permutation) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let indices = m.indices.iter().map(|&i| perm.apply(i)).collect();
                (Monomial { indices }, c.clone())
            })
            .collect();
        ReducedPolynomial {
            strands: self.strands,
            terms,
        }
    }

    /// Coefficient of `X_i` for each `i`, indexed `1..=n` at `[i-1]`.
    pub fn degree_one_coefficients(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.strands as usize];
        for (m, c) in &self.terms {
            if m.degree() == 1 {
                out[m.indices[0] as usize - 1] = c.clone();
            }
        }
        out
    }

    /// Upper bound on the number of distinct monomials on `n` variables:
    /// `Σ_{k=0}^{n} n!/(n-k)!`.
    pub fn max_term_count(n: u32) -> u128 {
        let mut total: u128 = 0;
        for k in 0..=n {
            let mut falling: u128 = 1;
            for j in 0..k {
                falling *= (n - j) as u128;
            }
            total += falling;
        }
        total
    }

    /// Serialized terms in canonical order (the documented JSON form).
    pub fn to_json_terms(&self) -> Vec<PolyTerm> {
        self.terms
            .iter()
            .map(|(m, c)| PolyTerm {
                m: m.indices.clone(),
                c: c.to_string(),
            })
            .collect()
    }

    /// Rebuild from serialized terms; the strand count travels out-of-band.
    pub fn from_json_terms(strands: u32, terms: &[PolyTerm]) -> Result<Self> {
        let mut parsed = Vec::with_capacity(terms.len());
        for t in terms {
            let m = Monomial::new(t.m.clone())?;
            let c: BigInt = t.c.parse().map_err(|_| Error::Parse {
                position: 0,
                message: format!("bad coefficient {:?}", t.c),
            })?;
            parsed.push((m, c));
        }
        Self::from_terms(strands, parsed)
    }
}

impl Serialize for ReducedPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.to_json_terms();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for t in &terms {
            seq.serialize_element(t)?;
        }
        seq.end()
    }
}

impl fmt::Display for ReducedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}·{m}")?;
            }
        }
        Ok(())
    }
}
