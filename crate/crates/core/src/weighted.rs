//! Finite weighted sets of patterns and their algebra.

use std::collections::BTreeMap;
use std::ops::Deref;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::digits::{check_base, Word};
use crate::error::{Error, Result};

/// A finite map from patterns to nonzero integer weights, in a fixed
/// context `(b, m)`. Entries are kept in lexicographic word order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedSet {
    base: u32,
    modulus: u32,
    entries: BTreeMap<Word, BigInt>,
}

impl WeightedSet {
    pub fn empty(base: u32, modulus: u32) -> Result<Self> {
        check_base(base)?;
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(WeightedSet {
            base,
            modulus,
            entries: BTreeMap::new(),
        })
    }

    /// Builds a set from `(word, weight)` pairs; repeated words have their
    /// weights summed and zero totals are dropped.
    pub fn from_entries<I>(base: u32, modulus: u32, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, BigInt)>,
    {
        let mut set = WeightedSet::empty(base, modulus)?;
        for (w, c) in entries {
            set.add_weight(w, c)?;
        }
        Ok(set)
    }

    /// Convenience constructor from digit strings (`base <= 10`).
    pub fn from_pairs<'a, I>(base: u32, modulus: u32, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, i64)>,
    {
        let entries = pairs
            .into_iter()
            .map(|(s, c)| Ok((Word::parse(base, s)?, BigInt::from(c))))
            .collect::<Result<Vec<_>>>()?;
        WeightedSet::from_entries(base, modulus, entries)
    }

    pub fn add_weight(&mut self, w: Word, c: BigInt) -> Result<()> {
        if w.base() != self.base {
            return Err(Error::InvalidBase(w.base()));
        }
        if !w.is_valid_pattern() {
            return Err(Error::ZeroPattern);
        }
        let slot = self.entries.entry(w).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.entries.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.entries.iter()
    }

    pub fn weight(&self, w: &Word) -> BigInt {
        self.entries.get(w).cloned().unwrap_or_default()
    }

    pub fn is_proper(&self) -> bool {
        self.entries.keys().all(|w| !w.has_leading_zero())
    }

    fn check_context(&self, other: &WeightedSet) -> Result<()> {
        if self.base != other.base || self.modulus != other.modulus {
            return Err(Error::ContextMismatch(
                self.base,
                self.modulus,
                other.base,
                other.modulus,
            ));
        }
        Ok(())
    }

    /// `S1 ⊕ S2`: pointwise sum of weights.
    pub fn oplus(&self, other: &WeightedSet) -> Result<WeightedSet> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (w, c) in other.iter() {
            out.add_weight(w.clone(), c.clone())?;
        }
        Ok(out)
    }

    /// Negates every weight; the resulting sequence is the complex conjugate.
    pub fn negate(&self) -> WeightedSet {
        WeightedSet {
            base: self.base,
            modulus: self.modulus,
            entries: self.entries.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    /// Longest pattern length, `None` for the empty set.
    pub fn max_pattern_length(&self) -> Option<usize> {
        self.entries.keys().map(Word::len).max()
    }

    /// Weights reduced into `[0, m)`, dropping those divisible by `m`.
    /// The pattern sequence only depends on this reduction.
    pub fn reduced(&self) -> WeightedSet {
        let m = BigInt::from(self.modulus);
        WeightedSet {
            base: self.base,
            modulus: self.modulus,
            entries: self
                .entries
                .iter()
                .map(|(w, c)| (w.clone(), c.mod_floor(&m)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Rewrites every pattern with a leading zero, `(c, 0v)`, as
    /// `(c, v) ⊕ Σ_{d=1}^{b-1} (-c, dv)` until no leading zeros remain.
    /// The weighted count `e_{b,S}` is unchanged.
    pub fn properize(&self) -> ProperWeightedSet {
        let mut set = self.clone();
        while let Some(w) = set.entries.keys().find(|w| w.has_leading_zero()).cloned() {
            let c = set.entries.remove(&w).expect("key just found");
            let v = w.tail();
            for d in 1..self.base {
                let dv = v.prepend(d).expect("digit below base");
                set.add_weight(dv, -c.clone()).expect("same context");
            }
            set.add_weight(v, c)
                .expect("tail of a pattern with leading zero is a pattern");
        }
        ProperWeightedSet(set)
    }
}

/// A weighted set in which no pattern has a leading zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperWeightedSet(WeightedSet);

impl ProperWeightedSet {
    pub fn new(set: WeightedSet) -> Result<Self> {
        if set.is_proper() {
            Ok(ProperWeightedSet(set))
        } else {
            Err(Error::ImproperWord)
        }
    }

    pub fn into_inner(self) -> WeightedSet {
        self.0
    }

    /// Splits by first letter: element `k - 1` holds the patterns starting
    /// with digit `k`, for `k = 1, .., b-1`.
    pub fn decompose(&self) -> Vec<ProperWeightedSet> {
        (1..self.base())
            .map(|k| {
                let entries = self
                    .iter()
                    .filter(|(w, _)| w.first() == Some(k))
                    .map(|(w, c)| (w.clone(), c.clone()))
                    .collect();
                ProperWeightedSet(WeightedSet {
                    base: self.base(),
                    modulus: self.modulus(),
                    entries,
                })
            })
            .collect()
    }

    pub fn reduced(&self) -> ProperWeightedSet {
        ProperWeightedSet(self.0.reduced())
    }
}

impl Deref for ProperWeightedSet {
    type Target = WeightedSet;

    fn deref(&self) -> &WeightedSet {
        &self.0
    }
}
