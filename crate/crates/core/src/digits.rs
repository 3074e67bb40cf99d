//! Base-b expansions and occurrence counting.
//!
//! Expansions follow the infinite-leading-zeros convention: the expansion of
//! `n` is its canonical digit string preceded by as many zeros as needed. A
//! pattern is a nonempty word with at least one nonzero digit, so no
//! occurrence can lie entirely inside the zero prefix and padding with
//! `|w| - 1` zeros is enough to see every occurrence.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::weighted::WeightedSet;

pub(crate) fn check_base(base: u32) -> Result<()> {
    if base < 2 {
        Err(Error::InvalidBase(base))
    } else {
        Ok(())
    }
}

/// A finite word over the alphabet `{0, .., b-1}`, most-significant digit first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    base: u32,
    digits: Vec<u32>,
}

impl Word {
    pub fn new(base: u32, digits: Vec<u32>) -> Result<Self> {
        check_base(base)?;
        if let Some(&digit) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::DigitOutOfRange { digit, base });
        }
        Ok(Word { base, digits })
    }

    /// A word usable as a counting pattern: nonempty with a nonzero digit.
    pub fn pattern(base: u32, digits: Vec<u32>) -> Result<Self> {
        let w = Word::new(base, digits)?;
        if !w.is_valid_pattern() {
            return Err(Error::ZeroPattern);
        }
        Ok(w)
    }

    /// Parses a digit string such as `"0011"`. Only meaningful for `base <= 10`.
    pub fn parse(base: u32, s: &str) -> Result<Self> {
        check_base(base)?;
        if base > 10 {
            return Err(Error::StringWordBase(base));
        }
        let digits = s
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Spec(format!("invalid digit character {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(base, digits)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn first(&self) -> Option<u32> {
        self.digits.first().copied()
    }

    /// The word with its first letter removed (`w'`).
    pub fn tail(&self) -> Word {
        Word {
            base: self.base,
            digits: self.digits.get(1..).unwrap_or(&[]).to_vec(),
        }
    }

    /// The word `d` followed by `self`.
    pub fn prepend(&self, d: u32) -> Result<Word> {
        let mut digits = Vec::with_capacity(self.len() + 1);
        digits.push(d);
        digits.extend_from_slice(&self.digits);
        Word::new(self.base, digits)
    }

    pub fn has_leading_zero(&self) -> bool {
        self.first() == Some(0)
    }

    pub fn is_valid_pattern(&self) -> bool {
        self.digits.iter().any(|&d| d != 0)
    }

    /// `(w)_b`, the integer spelled by the word.
    pub fn value(&self) -> BigUint {
        word_value(self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base <= 10 {
            for d in &self.digits {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

/// The canonical expansion of a nonnegative integer, paddable on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    value: BigUint,
    word: Word,
}

impl Expansion {
    pub fn new(value: BigUint, base: u32) -> Result<Self> {
        let word = to_digits(&value, base)?;
        Ok(Expansion { value, word })
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// Canonical digits, empty for zero.
    pub fn digits(&self) -> &[u32] {
        self.word.digits()
    }

    /// The digits left-padded with zeros to at least `len` positions.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let d = self.word.digits();
        let mut out = vec![0; len.saturating_sub(d.len())];
        out.extend_from_slice(d);
        out
    }
}

/// Most-significant-first digits of `n`; the empty word for zero.
pub fn to_digits(n: &BigUint, base: u32) -> Result<Word> {
    check_base(base)?;
    let digits = if n.is_zero() {
        Vec::new()
    } else if base <= 256 {
        n.to_radix_be(base).into_iter().map(u32::from).collect()
    } else {
        let b = BigUint::from(base);
        let mut rest = n.clone();
        let mut out = Vec::new();
        while !rest.is_zero() {
            let (q, r) = rest.div_rem(&b);
            out.push(r.to_u32().expect("remainder below base"));
            rest = q;
        }
        out.reverse();
        out
    };
    Ok(Word { base, digits })
}

/// Fast path of [`to_digits`] for machine integers, writing into `out`.
pub fn digits_u64_into(mut n: u64, base: u32, out: &mut Vec<u32>) {
    out.clear();
    let b = u64::from(base);
    while n > 0 {
        out.push((n % b) as u32);
        n /= b;
    }
    out.reverse();
}

pub fn to_digits_u64(n: u64, base: u32) -> Result<Word> {
    check_base(base)?;
    let mut digits = Vec::new();
    digits_u64_into(n, base, &mut digits);
    Ok(Word { base, digits })
}

pub fn word_value(w: &Word) -> BigUint {
    let b = BigUint::from(w.base);
    w.digits
        .iter()
        .fold(BigUint::zero(), |acc, &d| acc * &b + BigUint::from(d))
}

/// Counts (possibly overlapping) occurrences of `pattern` in `digits`
/// left-padded with `pattern.len() - 1` zeros. The caller guarantees that
/// `pattern` is nonempty.
pub fn count_in_digits(pattern: &[u32], digits: &[u32]) -> u64 {
    let k = pattern.len();
    debug_assert!(k > 0);
    let pad = k - 1;
    let total = pad + digits.len();
    if total < k {
        return 0;
    }
    let at = |i: usize| if i < pad { 0 } else { digits[i - pad] };
    (0..=total - k)
        .filter(|&start| (0..k).all(|j| at(start + j) == pattern[j]))
        .count() as u64
}

/// `e_{b,w}(n)`: number of occurrences of `w` in the base-b expansion of `n`.
pub fn count_occurrences(w: &Word, n: &BigUint) -> Result<u64> {
    if !w.is_valid_pattern() {
        return Err(Error::ZeroPattern);
    }
    let digits = to_digits(n, w.base)?;
    Ok(count_in_digits(w.digits(), digits.digits()))
}

/// `e_{b,S}(n)`: the weighted sum of occurrence counts.
pub fn eval_weighted(s: &WeightedSet, n: &BigUint) -> BigInt {
    let digits = to_digits(n, s.base()).expect("weighted set has a valid base");
    eval_weighted_digits(s, digits.digits())
}

pub fn eval_weighted_u64(s: &WeightedSet, n: u64) -> BigInt {
    let mut digits = Vec::new();
    digits_u64_into(n, s.base(), &mut digits);
    eval_weighted_digits(s, &digits)
}

fn eval_weighted_digits(s: &WeightedSet, digits: &[u32]) -> BigInt {
    s.iter()
        .map(|(w, c)| c * BigInt::from(count_in_digits(w.digits(), digits)))
        .sum()
}

/// `e_{b,S}(n) mod m`; the sequence value is `exp(2 pi i k / m)` for the result `k`.
pub fn a_exponent(s: &WeightedSet, n: &BigUint) -> u32 {
    reduce_mod(&eval_weighted(s, n), s.modulus())
}

pub fn a_exponent_u64(s: &WeightedSet, n: u64) -> u32 {
    reduce_mod(&eval_weighted_u64(s, n), s.modulus())
}

pub(crate) fn reduce_mod(x: &BigInt, m: u32) -> u32 {
    x.mod_floor(&BigInt::from(m))
        .to_u32()
        .expect("residue below modulus")
}

/// Largest window table [`ExponentScanner`] will build.
const SCANNER_TABLE_LIMIT: usize = 1 << 20;

/// Evaluates `a_exponent` by a single left-to-right pass over the digits.
///
/// The state is the last `l - 1` digits read (initially zeros); reading a
/// digit completes a window of `l` digits whose table entry is the total
/// weight mod m of the patterns that end there. Falls back to direct counting
/// when `b^l` exceeds the table limit.
#[derive(Debug, Clone)]
pub struct ExponentScanner {
    base: u32,
    modulus: u32,
    /// `b^(l-1)`; the state space size.
    states: usize,
    table: Option<Vec<u32>>,
    fallback: WeightedSet,
}

impl ExponentScanner {
    pub fn new(s: &WeightedSet) -> Self {
        let base = s.base();
        let modulus = s.modulus();
        let l = s.max_pattern_length().unwrap_or(1).max(1);
        let size = (base as usize).checked_pow(l as u32);
        let table = size.filter(|&n| n <= SCANNER_TABLE_LIMIT).map(|size| {
            let mut window = vec![0u32; l];
            (0..size)
                .map(|idx| {
                    let mut rest = idx;
                    for slot in window.iter_mut().rev() {
                        *slot = (rest % base as usize) as u32;
                        rest /= base as usize;
                    }
                    let total: BigInt = s
                        .iter()
                        .filter(|(w, _)| window.ends_with(w.digits()))
                        .map(|(_, c)| c.clone())
                        .sum();
                    reduce_mod(&total, modulus)
                })
                .collect()
        });
        let states = size.map(|n| n / base as usize).unwrap_or(0);
        ExponentScanner {
            base,
            modulus,
            states,
            table,
            fallback: s.clone(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn exponent(&self, n: u64) -> u32 {
        let Some(table) = &self.table else {
            return a_exponent_u64(&self.fallback, n);
        };
        let b = u64::from(self.base);
        // Collect digits least-significant first, then scan from the top.
        let mut buf = [0u32; 64];
        let mut len = 0;
        let mut rest = n;
        while rest > 0 {
            buf[len] = (rest % b) as u32;
            rest /= b;
            len += 1;
        }
        let mut state = 0usize;
        let mut acc = 0u32;
        for &d in buf[..len].iter().rev() {
            let window = state * self.base as usize + d as usize;
            acc += table[window];
            if acc >= self.modulus {
                acc -= self.modulus;
            }
            state = window % self.states.max(1);
        }
        acc
    }
}
