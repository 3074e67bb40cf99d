#![allow(dead_code)]

use num_bigint::BigInt;
use patseq::{WeightedSet, Word};
use rand::Rng;

/// Digits of `n` in base `b`, most significant first, by repeated division.
pub fn oracle_digits(mut n: u64, b: u32) -> Vec<u32> {
    let mut out = Vec::new();
    while n > 0 {
        out.insert(0, (n % b as u64) as u32);
        n /= b as u64;
    }
    out
}

/// Overlapping occurrences of `w` in the expansion of `n` padded with
/// `|w| - 1` zeros, by comparing every window.
pub fn oracle_count(w: &[u32], n: u64, b: u32) -> i64 {
    let mut padded = vec![0; w.len() - 1];
    padded.extend(oracle_digits(n, b));
    padded.windows(w.len()).filter(|win| *win == w).count() as i64
}

pub fn oracle_exponent(s: &WeightedSet, n: u64) -> u32 {
    let m = s.modulus() as i64;
    let total: i64 = s
        .iter()
        .map(|(w, c)| i64::try_from(c).unwrap() * oracle_count(w.digits(), n, s.base()))
        .sum();
    total.rem_euclid(m) as u32
}

/// A random spec: b in {2,3,4,5}, m in {2,3,4,6}, at most four patterns of
/// length at most three (leading zeros allowed), weights in [-5, 5].
pub fn random_spec<R: Rng>(rng: &mut R) -> WeightedSet {
    let b = [2u32, 3, 4, 5][rng.gen_range(0..4)];
    let m = [2u32, 3, 4, 6][rng.gen_range(0..4)];
    random_spec_in(rng, b, m)
}

pub fn random_spec_in<R: Rng>(rng: &mut R, b: u32, m: u32) -> WeightedSet {
    let mut s = WeightedSet::empty(b, m).unwrap();
    for _ in 0..rng.gen_range(1..=4) {
        let len = rng.gen_range(1..=3);
        let digits: Vec<u32> = (0..len).map(|_| rng.gen_range(0..b)).collect();
        if digits.iter().all(|&d| d == 0) {
            continue;
        }
        let weight = loop {
            let c: i64 = rng.gen_range(-5..=5);
            if c != 0 {
                break c;
            }
        };
        s.add_weight(Word::new(b, digits).unwrap(), BigInt::from(weight))
            .unwrap();
    }
    s
}

pub fn spec(b: u32, m: u32, pairs: &[(&str, i64)]) -> WeightedSet {
    WeightedSet::from_pairs(b, m, pairs.iter().copied()).unwrap()
}

pub fn base_three_mix() -> WeightedSet {
    spec(
        3,
        3,
        &[("1", 1), ("10", 1), ("12", 1), ("11", 2), ("22", 2)],
    )
}

pub fn periodic_set() -> WeightedSet {
    spec(2, 2, &[("1", 1), ("10", 1), ("11", 1)])
}

pub fn thue_morse() -> WeightedSet {
    spec(2, 2, &[("1", 1)])
}

pub fn rudin_shapiro() -> WeightedSet {
    spec(2, 2, &[("11", 1)])
}
