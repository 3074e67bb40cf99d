//! Brute-force partial sums `S_N = Σ_{n<N} a(n)` kept exactly as residue
//! class counters: `S_N = Σ_k c[k] ζ^k` with `Σ_k c[k] = N`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycElem, CyclotomicField};
use crate::digits::ExponentScanner;
use crate::transfer::residue_counts_to_elem;
use crate::weighted::WeightedSet;

const CHUNK: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartialSumRow {
    pub n: u64,
    pub counts: Vec<u64>,
    pub abs_sum: f64,
    pub mean_abs: f64,
}

impl PartialSumRow {
    fn from_counts(n: u64, counts: Vec<u64>) -> Self {
        let (re, im) = counts_to_complex(&counts);
        let abs_sum = re.hypot(im);
        let mean_abs = if n == 0 { 0.0 } else { abs_sum / n as f64 };
        PartialSumRow {
            n,
            counts,
            abs_sum,
            mean_abs,
        }
    }

    pub fn exact_sum(&self, field: &CyclotomicField) -> CycElem {
        residue_counts_to_elem(field, &self.counts)
    }
}

/// `Σ_k counts[k]·exp(2πik/m)` in floating point.
pub fn counts_to_complex(counts: &[u64]) -> (f64, f64) {
    let m = counts.len() as f64;
    counts
        .iter()
        .enumerate()
        .fold((0.0, 0.0), |(re, im), (k, &c)| {
            let angle = std::f64::consts::TAU * k as f64 / m;
            (re + c as f64 * angle.cos(), im + c as f64 * angle.sin())
        })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PartialSumTrace {
    pub base: u32,
    pub modulus: u32,
    pub rows: Vec<PartialSumRow>,
}

impl PartialSumTrace {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("N");
        for k in 0..self.modulus {
            out.push_str(&format!(",c_{k}"));
        }
        out.push_str(",abs_sum,mean_abs\n");
        for row in &self.rows {
            out.push_str(&row.n.to_string());
            for c in &row.counts {
                out.push_str(&format!(",{c}"));
            }
            out.push_str(&format!(",{:.12},{:.12}\n", row.abs_sum, row.mean_abs));
        }
        out
    }
}

/// `1, b, b², ..` up to `n_max`, followed by `n_max` itself when it is not
/// a power of `b`.
pub fn power_checkpoints(base: u32, n_max: u64) -> Vec<u64> {
    let mut out: Vec<u64> = std::iter::successors(Some(1u64), |&p| p.checked_mul(u64::from(base)))
        .take_while(|&p| p <= n_max)
        .collect();
    if out.last() != Some(&n_max) && n_max > 0 {
        out.push(n_max);
    }
    out
}

fn count_range(scanner: &ExponentScanner, range: std::ops::Range<u64>) -> Vec<u64> {
    let mut counts = vec![0u64; scanner.modulus() as usize];
    for n in range {
        counts[scanner.exponent(n) as usize] += 1;
    }
    counts
}

fn add_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Counters at every checkpoint, computed over disjoint ranges in parallel.
pub fn partial_sums(s: &WeightedSet, checkpoints: &[u64]) -> PartialSumTrace {
    let scanner = ExponentScanner::new(s);
    let mut points = checkpoints.to_vec();
    points.sort_unstable();
    points.dedup();
    let m = s.modulus() as usize;

    let mut segments = Vec::with_capacity(points.len());
    let mut lo = 0;
    for &hi in &points {
        segments.push(lo..hi);
        lo = hi;
    }
    let per_segment: Vec<Vec<u64>> = segments
        .into_par_iter()
        .map(|seg| {
            let starts: Vec<u64> = (seg.start..seg.end).step_by(CHUNK as usize).collect();
            starts
                .into_par_iter()
                .map(|a| count_range(&scanner, a..(a + CHUNK).min(seg.end)))
                .reduce(|| vec![0; m], add_counts)
        })
        .collect();

    let mut running = vec![0u64; m];
    let rows = points
        .iter()
        .zip(per_segment)
        .map(|(&n, seg)| {
            running = add_counts(running.clone(), seg);
            PartialSumRow::from_counts(n, running.clone())
        })
        .collect();
    PartialSumTrace {
        base: s.base(),
        modulus: s.modulus(),
        rows,
    }
}

/// Single-threaded reference for [`partial_sums`].
pub fn partial_sums_sequential(s: &WeightedSet, checkpoints: &[u64]) -> PartialSumTrace {
    let scanner = ExponentScanner::new(s);
    let mut points = checkpoints.to_vec();
    points.sort_unstable();
    points.dedup();
    let mut counts = vec![0u64; s.modulus() as usize];
    let mut n = 0;
    let mut rows = Vec::new();
    for &target in &points {
        while n < target {
            counts[scanner.exponent(n) as usize] += 1;
            n += 1;
        }
        rows.push(PartialSumRow::from_counts(target, counts.clone()));
    }
    PartialSumTrace {
        base: s.base(),
        modulus: s.modulus(),
        rows,
    }
}
