//! Window functions and the block substitution that generates a pattern
//! sequence as the limit of `u_{t+1} = u_t φ_{S_1}(u_t) ··· φ_{S_{b-1}}(u_t)`.
//!
//! Words over the unit circle are stored as exponent residues mod m.

use std::ops::Range;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::digits::{a_exponent_u64, reduce_mod, Word};
use crate::error::{Error, Result};
use crate::weighted::{ProperWeightedSet, WeightedSet};

/// A finite word over the m-th roots of unity; entry `k` stands for `ζ_m^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentWord {
    modulus: u32,
    data: Vec<u32>,
}

impl ExponentWord {
    pub fn new(modulus: u32, data: Vec<u32>) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        if let Some(&digit) = data.iter().find(|&&k| k >= modulus) {
            return Err(Error::DigitOutOfRange {
                digit,
                base: modulus,
            });
        }
        Ok(ExponentWord { modulus, data })
    }

    pub fn zeros(modulus: u32, len: usize) -> Self {
        ExponentWord {
            modulus,
            data: vec![0; len],
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.data
    }

    pub fn truncate(&mut self, len: usize) {
        self.data.truncate(len);
    }

    pub fn is_prefix_of(&self, other: &ExponentWord) -> bool {
        self.modulus == other.modulus && other.data.starts_with(&self.data)
    }
}

/// The window of a proper pattern `w`: the interval `(α¹, α²]` with
/// `α¹ = (w')_b / b^{|w|-1}` and `α² = ((w')_b + 1) / b^{|w|-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    start: BigUint,
    denom: BigUint,
}

impl Window {
    pub fn lower(&self) -> BigRational {
        BigRational::new(self.start.clone().into(), self.denom.clone().into())
    }

    pub fn upper(&self) -> BigRational {
        BigRational::new((&self.start + 1u32).into(), self.denom.clone().into())
    }

    /// `b^{|w|-1}`, the number of windows of this size tiling `(0, 1]`.
    pub fn denominator(&self) -> &BigUint {
        &self.denom
    }

    /// Zero-based positions `j - 1` of a word of length `len` with
    /// `α¹·len < j ≤ α²·len`.
    pub fn positions(&self, len: usize) -> Result<Range<usize>> {
        let denom = self
            .denom
            .to_usize()
            .filter(|&d| d > 0 && len.is_multiple_of(d));
        let Some(denom) = denom else {
            return Err(Error::LengthNotDivisible {
                len,
                required: self.denom.to_usize().unwrap_or(usize::MAX),
            });
        };
        let width = len / denom;
        let start = self.start.to_usize().expect("start below denominator") * width;
        Ok(start..start + width)
    }
}

pub fn window_of(w: &Word) -> Result<Window> {
    if w.is_empty() {
        return Err(Error::ZeroPattern);
    }
    if w.has_leading_zero() {
        return Err(Error::ImproperWord);
    }
    let start = w.tail().value();
    let denom = BigUint::from(w.base()).pow((w.len() - 1) as u32);
    Ok(Window { start, denom })
}

/// `φ_{b,m,S}(v)`: every pattern `(c, w)` of `s` multiplies the positions of
/// its window by `ζ^c`.
pub fn apply_window_set(s: &ProperWeightedSet, v: &ExponentWord) -> Result<ExponentWord> {
    if s.modulus() != v.modulus() {
        return Err(Error::FieldMismatch(s.modulus(), v.modulus()));
    }
    let mut out = v.data.clone();
    let m = s.modulus();
    for (w, c) in s.iter() {
        let shift = reduce_mod(c, m);
        for j in window_of(w)?.positions(v.len())? {
            out[j] = (out[j] + shift) % m;
        }
    }
    Ok(ExponentWord {
        modulus: m,
        data: out,
    })
}

/// The generating substitution of a weighted set.
#[derive(Debug, Clone)]
pub struct Substitution {
    base: u32,
    modulus: u32,
    max_len: usize,
    /// Per first letter `k = 1..b-1`, the exponent shift of each of the
    /// `b^{l-1}` equal cells of a stage word.
    profiles: Vec<Vec<u32>>,
    seed: ExponentWord,
}

impl Substitution {
    /// Fails with [`Error::Degenerate`] when the properized set is empty.
    pub fn new(s: &WeightedSet) -> Result<Self> {
        let proper = s.properize();
        let max_len = proper.max_pattern_length().ok_or(Error::Degenerate)?;
        let (base, modulus) = (s.base(), s.modulus());
        let cells = checked_pow(base, max_len - 1)?;
        let zero = ExponentWord::zeros(modulus, cells);
        let profiles = proper
            .reduced()
            .decompose()
            .iter()
            .map(|part| apply_window_set(part, &zero).map(ExponentWord::into_vec))
            .collect::<Result<Vec<_>>>()?;
        let seed_len = checked_pow(base, max_len)?;
        let seed = ExponentWord {
            modulus,
            data: (0..seed_len as u64).map(|n| a_exponent_u64(s, n)).collect(),
        };
        Ok(Substitution {
            base,
            modulus,
            max_len,
            profiles,
            seed,
        })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `l`, the longest properized pattern.
    pub fn max_pattern_length(&self) -> usize {
        self.max_len
    }

    /// `u_0`, of length `b^l`.
    pub fn seed(&self) -> &ExponentWord {
        &self.seed
    }

    /// One substitution step, `u ↦ u φ_{S_1}(u) ··· φ_{S_{b-1}}(u)`.
    pub fn step(&self, u: &ExponentWord) -> Result<ExponentWord> {
        let mut out = u.data.clone();
        self.extend_into(&mut out, u.len(), usize::MAX)?;
        Ok(ExponentWord {
            modulus: self.modulus,
            data: out,
        })
    }

    /// Appends the blocks `φ_{S_k}(u)` for `u = out[..len]`, stopping as soon
    /// as `out` reaches `limit` entries.
    fn extend_into(&self, out: &mut Vec<u32>, len: usize, limit: usize) -> Result<()> {
        let cells = self.profiles.first().map_or(1, Vec::len);
        if !len.is_multiple_of(cells) {
            return Err(Error::LengthNotDivisible {
                len,
                required: cells,
            });
        }
        let width = len / cells;
        let m = self.modulus;
        for profile in &self.profiles {
            if out.len() >= limit {
                break;
            }
            let take = len.min(limit - out.len());
            out.reserve(take);
            for j in 0..take {
                out.push((out[j] + profile[j / width]) % m);
            }
        }
        Ok(())
    }

    /// The first `len` terms of the limit word, materializing only the blocks
    /// needed to reach `len`.
    pub fn prefix(&self, len: usize) -> ExponentWord {
        let mut out = self.seed.data.clone();
        while out.len() < len {
            let stage_len = out.len();
            self.extend_into(&mut out, stage_len, len)
                .expect("stage lengths are multiples of b^l");
        }
        out.truncate(len);
        ExponentWord {
            modulus: self.modulus,
            data: out,
        }
    }

    /// The successive stage words `u_0, u_1, ...`.
    pub fn stages(&self) -> impl Iterator<Item = ExponentWord> + '_ {
        std::iter::successors(Some(self.seed.clone()), |u| self.step(u).ok())
    }
}

fn checked_pow(base: u32, exp: usize) -> Result<usize> {
    (base as usize)
        .checked_pow(exp as u32)
        .ok_or_else(|| Error::Spec(format!("{base}^{exp} does not fit in memory")))
}

/// `u_0`: the first `b^l` sequence exponents by direct evaluation.
pub fn seed_word(s: &WeightedSet) -> Result<ExponentWord> {
    Ok(Substitution::new(s)?.seed)
}

/// The first `target_len` exponents of `a_{b,m,S}` generated by substitution.
/// A degenerate set yields the constant word of zeros.
pub fn iterate(s: &WeightedSet, target_len: usize) -> Result<ExponentWord> {
    match Substitution::new(s) {
        Ok(sub) => Ok(sub.prefix(target_len)),
        Err(Error::Degenerate) => Ok(ExponentWord::zeros(s.modulus(), target_len)),
        Err(e) => Err(e),
    }
}

/// Exponents of `a_{b,m,S}(n)` for `n < len` by direct counting.
pub fn direct_prefix(s: &WeightedSet, len: usize) -> ExponentWord {
    let scanner = crate::digits::ExponentScanner::new(s);
    ExponentWord {
        modulus: s.modulus(),
        data: (0..len as u64).map(|n| scanner.exponent(n)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(b: u32, m: u32, pairs: &[(&str, i64)]) -> WeightedSet {
        WeightedSet::from_pairs(b, m, pairs.iter().copied()).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn base_three_mix() -> WeightedSet {
        set(
            3,
            3,
            &[("1", 1), ("10", 1), ("12", 1), ("11", 2), ("22", 2)],
        )
    }

    #[test]
    fn windows_of_base_three_mix() {
        let w12 = window_of(&Word::parse(3, "12").unwrap()).unwrap();
        assert_eq!((w12.lower(), w12.upper()), (q(2, 3), q(1, 1)));
        let w10 = window_of(&Word::parse(3, "10").unwrap()).unwrap();
        assert_eq!((w10.lower(), w10.upper()), (q(0, 1), q(1, 3)));
        let w1 = window_of(&Word::parse(3, "1").unwrap()).unwrap();
        assert_eq!((w1.lower(), w1.upper()), (q(0, 1), q(1, 1)));
        assert_eq!(w12.positions(9).unwrap(), 6..9);
    }

    #[test]
    fn improper_window_rejected() {
        assert_eq!(
            window_of(&Word::parse(3, "02").unwrap()),
            Err(Error::ImproperWord)
        );
    }

    #[test]
    fn window_set_on_base_three_mix() {
        let parts = base_three_mix().properize().decompose();
        let v = ExponentWord::zeros(3, 9);
        let s2 = apply_window_set(&parts[1], &v).unwrap();
        assert_eq!(s2.as_slice(), &[0, 0, 0, 0, 0, 0, 2, 2, 2]);
        // S_1 = {1, 10, 12 with weight 1; 11 with weight 2}.
        let s1 = apply_window_set(&parts[0], &v).unwrap();
        assert_eq!(s1.as_slice(), &[2, 2, 2, 0, 0, 0, 2, 2, 2]);
    }

    #[test]
    fn empty_window_set_is_identity() {
        let empty = WeightedSet::empty(3, 3).unwrap().properize();
        let v = ExponentWord::new(3, vec![0, 1, 2, 1]).unwrap();
        assert_eq!(apply_window_set(&empty, &v).unwrap(), v);
    }

    #[test]
    fn thue_morse_window() {
        let s1 = set(2, 2, &[("1", 1)]).properize();
        let v = ExponentWord::new(2, vec![0, 1]).unwrap();
        assert_eq!(apply_window_set(&s1, &v).unwrap().as_slice(), &[1, 0]);
    }

    #[test]
    fn window_length_must_divide() {
        let s = set(3, 3, &[("12", 1)]).properize();
        let v = ExponentWord::zeros(3, 4);
        assert_eq!(
            apply_window_set(&s, &v),
            Err(Error::LengthNotDivisible {
                len: 4,
                required: 3
            })
        );
    }

    #[test]
    fn seeds() {
        let tm = set(2, 2, &[("1", 1)]);
        assert_eq!(seed_word(&tm).unwrap().as_slice(), &[0, 1]);
        let u = set(2, 2, &[("1", 1), ("10", 1), ("11", 1)]);
        assert_eq!(seed_word(&u).unwrap().as_slice(), &[0, 1, 0, 1]);
        let zero_mod = set(2, 3, &[("1", 3), ("11", 6)]);
        assert_eq!(seed_word(&zero_mod).unwrap().as_slice(), &[0, 0, 0, 0]);
        assert_eq!(
            seed_word(&set(2, 2, &[("1", 1), ("1", -1)])),
            Err(Error::Degenerate)
        );
    }

    #[test]
    fn base_three_mix_seed_by_direct_evaluation() {
        // n = 1, 4, 7 have expansions 1, 11, 21: e = 1, 2·1 + 1·2 = 4, 1.
        let u0 = seed_word(&base_three_mix()).unwrap();
        assert_eq!(u0.as_slice()[1], 1);
        assert_eq!(u0.as_slice()[4], 1);
        assert_eq!(u0.as_slice()[7], 1);
    }

    #[test]
    fn thue_morse_first_step() {
        let sub = Substitution::new(&set(2, 2, &[("1", 1)])).unwrap();
        let u1 = sub.step(sub.seed()).unwrap();
        assert_eq!(u1.as_slice(), &[0, 1, 1, 0]);
    }

    #[test]
    fn periodic_set_is_alternating() {
        let u = set(2, 2, &[("1", 1), ("10", 1), ("11", 1)]);
        let w = iterate(&u, 1 << 10).unwrap();
        assert!(w
            .as_slice()
            .iter()
            .enumerate()
            .all(|(n, &k)| k == (n % 2) as u32));
    }

    #[test]
    fn iterate_matches_direct() {
        let s = set(3, 6, &[("1", 2), ("002", 1), ("21", -1)]);
        let len = 3usize.pow(3 + 3);
        assert_eq!(iterate(&s, len).unwrap(), direct_prefix(&s, len));
    }

    #[test]
    fn degenerate_iterate_is_constant() {
        let w = iterate(&WeightedSet::empty(3, 5).unwrap(), 10).unwrap();
        assert_eq!(w.as_slice(), &[0; 10]);
    }

    #[test]
    fn prefix_stable_stages() {
        let sub = Substitution::new(&set(3, 4, &[("12", 1), ("2", 3)])).unwrap();
        let stages: Vec<_> = sub.stages().take(4).collect();
        for pair in stages.windows(2) {
            assert!(pair[0].is_prefix_of(&pair[1]));
            assert_eq!(pair[1].len(), pair[0].len() * 3);
        }
    }
}
