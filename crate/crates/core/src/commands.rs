//! The operations behind the `patseq` binary, returning rendered output so
//! they can be driven from tests.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::Serialize;

use crate::cyclotomic::CyclotomicField;
use crate::digits::{a_exponent_u64, count_occurrences, eval_weighted_u64, Word};
use crate::error::{Error, Result};
use crate::substitution::{direct_prefix, iterate, ExponentWord};
use crate::sums::{partial_sums, power_checkpoints};
use crate::transfer::{advance, block_sums, build_matrix, star_decide, StarDecision};
use crate::weighted::WeightedSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Direct,
    Substitution,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// `e_{b,w}(n)` for a word given as a digit string or comma-separated list.
pub fn count(spec: &WeightedSet, word: &str, n: &str) -> Result<u64> {
    let word = parse_word(spec.base(), word)?;
    let n: BigUint = n
        .trim()
        .parse()
        .map_err(|_| Error::Spec(format!("{n:?} is not a nonnegative integer")))?;
    count_occurrences(&word, &n)
}

pub fn parse_word(base: u32, text: &str) -> Result<Word> {
    let text = text.trim();
    if text.contains(',') || text.starts_with('[') {
        let digits = text
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(',')
            .map(|d| {
                d.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Spec(format!("bad digit {d:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(base, digits)
    } else {
        Word::parse(base, text)
    }
}

/// Rounds to 12 decimals and clears negative zero.
fn clean(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn root_value(k: u32, m: u32) -> (f64, f64) {
    let angle = std::f64::consts::TAU * f64::from(k) / f64::from(m);
    (clean(angle.cos()), clean(angle.sin()))
}

#[derive(Serialize)]
struct SeqTerm {
    n: usize,
    k: u32,
    re: f64,
    im: f64,
}

pub fn sequence(spec: &WeightedSet, len: usize, method: Method) -> Result<ExponentWord> {
    match method {
        Method::Direct => Ok(direct_prefix(spec, len)),
        Method::Substitution => iterate(spec, len),
    }
}

/// One line `n,k,re,im` per term (CSV) or an array of objects (JSON).
pub fn seq_output(
    spec: &WeightedSet,
    len: usize,
    method: Method,
    format: OutputFormat,
) -> Result<String> {
    let word = sequence(spec, len, method)?;
    let m = spec.modulus();
    match format {
        OutputFormat::Csv => {
            let mut out = String::from("n,k,re,im\n");
            for (n, &k) in word.as_slice().iter().enumerate() {
                let (re, im) = root_value(k, m);
                writeln!(out, "{n},{k},{re:.12},{im:.12}").expect("write to string");
            }
            Ok(out)
        }
        OutputFormat::Json => {
            let terms: Vec<SeqTerm> = word
                .as_slice()
                .iter()
                .enumerate()
                .map(|(n, &k)| {
                    let (re, im) = root_value(k, m);
                    SeqTerm { n, k, re, im }
                })
                .collect();
            Ok(to_json(&terms))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Checkpoints {
    Powers,
    List(Vec<u64>),
}

impl std::str::FromStr for Checkpoints {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "pow" {
            return Ok(Checkpoints::Powers);
        }
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Spec(format!("bad checkpoint {p:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Checkpoints::List)
    }
}

pub fn sums_output(
    spec: &WeightedSet,
    n_max: u64,
    checkpoints: &Checkpoints,
    format: OutputFormat,
) -> Result<String> {
    if n_max == 0 {
        return Err(Error::Spec("--nmax must be at least 1".into()));
    }
    let points = match checkpoints {
        Checkpoints::Powers => power_checkpoints(spec.base(), n_max),
        Checkpoints::List(list) => list.iter().copied().filter(|&n| n <= n_max).collect(),
    };
    let trace = partial_sums(spec, &points);
    Ok(match format {
        OutputFormat::Csv => trace.to_csv(),
        OutputFormat::Json => to_json(&trace),
    })
}

pub fn decide(spec: &WeightedSet) -> Result<StarDecision> {
    star_decide(spec)
}

pub fn decision_json(d: &StarDecision) -> String {
    to_json(d)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "[{tag}] {}: {}", c.name, c.detail).expect("write to string");
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        writeln!(out, "{passed}/{} checks passed", self.checks.len()).expect("write to string");
        out
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

fn first_mismatch(a: &[u32], b: &[u32]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

/// Cross-checks every route on one spec over `n < b^{l+depth}`.
pub fn verify(spec: &WeightedSet, depth: u32) -> Result<VerifyReport> {
    let b = spec.base();
    let m = spec.modulus();
    let proper = spec.properize();
    let l = proper.max_pattern_length().unwrap_or(0);
    let horizon = (b as u64)
        .checked_pow(l as u32 + depth)
        .filter(|&h| h <= 1 << 32)
        .ok_or_else(|| Error::Spec(format!("horizon {b}^{} is too large", l as u32 + depth)))?;
    let mut report = VerifyReport { checks: Vec::new() };

    // Properization.
    let bad = (0..horizon).find(|&n| eval_weighted_u64(spec, n) != eval_weighted_u64(&proper, n));
    report.push(
        "properization",
        bad.is_none() && proper.is_proper(),
        match bad {
            None => format!(
                "e_S = e_S' for n < {horizon}; {} proper patterns",
                proper.len()
            ),
            Some(n) => format!("weighted counts differ at n = {n}"),
        },
    );

    // Decomposition shape.
    let parts = proper.decompose();
    let mut rebuilt = WeightedSet::empty(b, m)?;
    let mut letters_ok = parts.len() == (b - 1) as usize;
    for (k, part) in parts.iter().enumerate() {
        letters_ok &= part.iter().all(|(w, _)| w.first() == Some(k as u32 + 1));
        rebuilt = rebuilt.oplus(part)?;
    }
    let sizes: Vec<String> = parts.iter().map(|p| p.len().to_string()).collect();
    report.push(
        "decomposition",
        letters_ok && rebuilt == *proper,
        format!("{} parts with sizes [{}]", parts.len(), sizes.join(", ")),
    );

    // Product law over the decomposition and against the conjugate.
    let neg = spec.negate();
    let bad = (0..horizon).find(|&n| {
        let total: u32 = parts.iter().map(|p| a_exponent_u64(p, n)).sum::<u32>() % m;
        let own = a_exponent_u64(spec, n);
        total != own || !(own + a_exponent_u64(&neg, n)).is_multiple_of(m)
    });
    report.push(
        "product law",
        bad.is_none(),
        match bad {
            None => format!("a_S = Π a_(S_k) and a_S·a_(-S) = 1 for n < {horizon}"),
            Some(n) => format!("exponents disagree at n = {n}"),
        },
    );

    // Substitution against direct evaluation.
    let len = horizon as usize;
    let subst = iterate(spec, len)?;
    let direct = direct_prefix(spec, len);
    let mismatch = first_mismatch(subst.as_slice(), direct.as_slice());
    report.push(
        "substitution fixed point",
        mismatch.is_none(),
        match mismatch {
            None => format!("iterate = direct for n < {len}"),
            Some(n) => format!("first mismatch at n = {n}"),
        },
    );

    // Transfer recursion against block sums, and the sum identity.
    if proper.is_empty() {
        report.push(
            "transfer recursion",
            true,
            "degenerate set, no matrix".into(),
        );
    } else {
        let field = CyclotomicField::new(m)?;
        let mat = build_matrix(spec)?;
        let mut a = block_sums(spec, 0, &field)?;
        let mut failed = None;
        for t in 0..=depth {
            let direct = block_sums(spec, t, &field)?;
            if a != direct {
                failed = Some(t);
                break;
            }
            let total = a.total(&field);
            let expected = crate::transfer::residue_counts_to_elem(
                &field,
                &crate::sums::partial_sums(spec, &[(b as u64).pow(l as u32 + t)]).rows[0].counts,
            );
            if total != expected {
                failed = Some(t);
                break;
            }
            if t < depth {
                a = advance(&mat, &a, &field)?;
            }
        }
        report.push(
            "transfer recursion",
            failed.is_none(),
            match failed {
                None => format!("M^t A(0) = A(t) and Σ A(t) = S_(b^(l+t)) for t <= {depth}"),
                Some(t) => format!("mismatch at stage t = {t}"),
            },
        );
    }

    Ok(report)
}
