//! Transfer matrices, block-sum vectors and the exact mean-zero decision.
//!
//! For a weighted set with longest (properized) pattern length `l`, the
//! block sums `A(t)(j) = Σ_{n=(j-1)b^t}^{j b^t - 1} a(n)`, `1 ≤ j ≤ b^l`,
//! satisfy `A(t+1) = M A(t)` for a sparse `b^l × b^l` matrix `M` whose entries
//! are zero or m-th roots of unity. The Cesàro mean of `a` vanishes iff `b`
//! is not an eigenvalue of `M` or `M^{b-1} A(0) = 0`.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycElem, CyclotomicField};
use crate::digits::ExponentScanner;
use crate::error::{Error, Result};
use crate::substitution::{apply_window_set, ExponentWord};
use crate::weighted::WeightedSet;

/// The sparse matrix `M_{b,m,S}`. Row `x = s·b^{l-1} + r` (1-based `r`) has
/// its `b` nonzero entries in columns `(r-1)b + 1 ..= (r-1)b + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferMatrix {
    base: u32,
    modulus: u32,
    max_len: usize,
    /// Zero-based `(column, exponent)` pairs per row.
    rows: Vec<Vec<(usize, u32)>>,
}

impl TransferMatrix {
    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `l`.
    pub fn max_pattern_length(&self) -> usize {
        self.max_len
    }

    /// `b^l`.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, x: usize) -> &[(usize, u32)] {
        &self.rows[x]
    }

    /// Exponent of the zero-based entry `(x, y)`, `None` when the entry is 0.
    pub fn entry(&self, x: usize, y: usize) -> Option<u32> {
        self.rows[x].iter().find(|(c, _)| *c == y).map(|&(_, k)| k)
    }

    /// Dense rendering with `Some(k)` for `ζ^k` and `None` for zero.
    pub fn to_dense(&self) -> Vec<Vec<Option<u32>>> {
        (0..self.dim())
            .map(|x| (0..self.dim()).map(|y| self.entry(x, y)).collect())
            .collect()
    }
}

/// `A(t)`: exact block sums at stage `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSumVector {
    pub stage: u32,
    pub entries: Vec<CycElem>,
}

impl BlockSumVector {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycElem::is_zero)
    }

    /// Sum of all entries, i.e. `Σ_{n < b^{l+t}} a(n)`.
    pub fn total(&self, field: &CyclotomicField) -> CycElem {
        self.entries
            .iter()
            .fold(field.zero(), |acc, e| field.add(&acc, e))
    }
}

struct Layout {
    max_len: usize,
    dim: usize,
}

fn layout(s: &WeightedSet) -> Result<Layout> {
    let max_len = s
        .properize()
        .max_pattern_length()
        .ok_or(Error::Degenerate)?;
    let dim = (s.base() as usize)
        .checked_pow(max_len as u32)
        .ok_or_else(|| Error::Spec(format!("b^l overflows for l = {max_len}")))?;
    Ok(Layout { max_len, dim })
}

/// `V_0, .., V_{b-1}` of length `b^l`: `V_0` is all ones and
/// `V_k = φ_{b,m,S_k}(V_0)`.
pub fn build_v(s: &WeightedSet) -> Result<Vec<ExponentWord>> {
    let Layout { dim, .. } = layout(s)?;
    let v0 = ExponentWord::zeros(s.modulus(), dim);
    let mut out = vec![v0.clone()];
    for part in s.properize().decompose() {
        out.push(apply_window_set(&part, &v0)?);
    }
    Ok(out)
}

pub fn build_matrix(s: &WeightedSet) -> Result<TransferMatrix> {
    let Layout { max_len, dim } = layout(s)?;
    let v = build_v(s)?;
    let b = s.base() as usize;
    let band = dim / b;
    let mut rows = vec![Vec::new(); dim];
    for (sdigit, vs) in v.iter().enumerate() {
        for r in 0..band {
            rows[sdigit * band + r] = (0..b)
                .map(|t| {
                    let y = r * b + t;
                    (y, vs.as_slice()[y])
                })
                .collect();
        }
    }
    Ok(TransferMatrix {
        base: s.base(),
        modulus: s.modulus(),
        max_len,
        rows,
    })
}

/// `A(t)` by direct summation of the sequence.
pub fn block_sums(s: &WeightedSet, t: u32, field: &CyclotomicField) -> Result<BlockSumVector> {
    let Layout { dim, .. } = layout(s)?;
    check_field(field, s.modulus())?;
    let scanner = ExponentScanner::new(s);
    let block = (s.base() as u64).pow(t);
    let m = s.modulus() as usize;
    let entries = (0..dim as u64)
        .map(|j| {
            let mut counts = vec![0u64; m];
            for n in j * block..(j + 1) * block {
                counts[scanner.exponent(n) as usize] += 1;
            }
            residue_counts_to_elem(field, &counts)
        })
        .collect();
    Ok(BlockSumVector { stage: t, entries })
}

/// `Σ_k counts[k]·ζ^k` as an exact field element.
pub fn residue_counts_to_elem(field: &CyclotomicField, counts: &[u64]) -> CycElem {
    counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .fold(field.zero(), |acc, (k, &c)| {
            let term = field.mul(&field.from_integer(c), &field.root_of_unity(k as u32));
            field.add(&acc, &term)
        })
}

fn check_field(field: &CyclotomicField, modulus: u32) -> Result<()> {
    if field.modulus() != modulus {
        return Err(Error::FieldMismatch(field.modulus(), modulus));
    }
    Ok(())
}

/// `A(t+1) = M A(t)`.
pub fn advance(
    m: &TransferMatrix,
    a: &BlockSumVector,
    field: &CyclotomicField,
) -> Result<BlockSumVector> {
    check_field(field, m.modulus)?;
    if a.entries.len() != m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            got: a.entries.len(),
        });
    }
    let entries = m
        .rows
        .iter()
        .map(|row| {
            let mut acc = field.zero();
            for &(y, k) in row {
                if !a.entries[y].is_zero() {
                    field.add_assign(&mut acc, &field.mul_root(&a.entries[y], k));
                }
            }
            acc
        })
        .collect();
    Ok(BlockSumVector {
        stage: a.stage + 1,
        entries,
    })
}

/// Pivot choice for exact elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pivot {
    /// Topmost nonzero entry of the column.
    First,
    /// Bottommost nonzero entry of the column.
    Last,
}

/// Exact determinant by Gaussian elimination over the cyclotomic field.
pub fn determinant(mut rows: Vec<Vec<CycElem>>, field: &CyclotomicField, pivot: Pivot) -> CycElem {
    let n = rows.len();
    let mut det = field.one();
    for col in 0..n {
        let mut candidates = (col..n).filter(|&r| !rows[r][col].is_zero());
        let found = match pivot {
            Pivot::First => candidates.next(),
            Pivot::Last => candidates.next_back(),
        };
        let Some(p) = found else {
            return field.zero();
        };
        if p != col {
            rows.swap(p, col);
            det = field.neg(&det);
        }
        let inv = field.inv(&rows[col][col]).expect("pivot is nonzero");
        det = field.mul(&det, &rows[col][col]);
        let (upper, lower) = rows.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = field.mul(&row[col], &inv);
            for c in col..n {
                if !pivot_row[c].is_zero() {
                    let d = field.mul(&factor, &pivot_row[c]);
                    row[c] = field.sub(&row[c], &d);
                }
            }
        }
    }
    det
}

/// Dense `b·I - M` over the field.
pub fn shifted_matrix(m: &TransferMatrix, field: &CyclotomicField) -> Vec<Vec<CycElem>> {
    let n = m.dim();
    let b = field.from_integer(m.base);
    (0..n)
        .map(|x| {
            let mut row = vec![field.zero(); n];
            for &(y, k) in m.row(x) {
                row[y] = field.neg(&field.root_of_unity(k));
            }
            row[x] = field.add(&row[x], &b);
            row
        })
        .collect()
}

/// Outcome of the eigenvalue test with its certificate `det(b·I - M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueTest {
    pub is_eigenvalue: bool,
    pub det: CycElem,
}

pub fn is_b_eigenvalue(m: &TransferMatrix, field: &CyclotomicField) -> Result<EigenvalueTest> {
    is_b_eigenvalue_with(m, field, Pivot::First)
}

pub fn is_b_eigenvalue_with(
    m: &TransferMatrix,
    field: &CyclotomicField,
    pivot: Pivot,
) -> Result<EigenvalueTest> {
    check_field(field, m.modulus)?;
    let det = determinant(shifted_matrix(m, field), field, pivot);
    Ok(EigenvalueTest {
        is_eigenvalue: det.is_zero(),
        det,
    })
}

/// `M^{b-1} A(0) = 0`.
pub fn kernel_condition(
    m: &TransferMatrix,
    a0: &BlockSumVector,
    field: &CyclotomicField,
) -> Result<bool> {
    let mut a = a0.clone();
    for _ in 1..m.base {
        a = advance(m, &a, field)?;
    }
    Ok(a.is_zero())
}

/// Smallest `e ≤ b^l` with `M^e A(0) = 0`, if any. Beyond `b^l` steps the
/// iterates can no longer reach zero.
pub fn annihilating_power(
    m: &TransferMatrix,
    a0: &BlockSumVector,
    field: &CyclotomicField,
) -> Result<Option<usize>> {
    let mut a = a0.clone();
    for e in 0..=m.dim() {
        if a.is_zero() {
            return Ok(Some(e));
        }
        if e < m.dim() {
            a = advance(m, &a, field)?;
        }
    }
    Ok(None)
}

/// Serializable outcome of the mean-zero decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarDecision {
    pub holds: bool,
    pub b_is_eigenvalue: bool,
    pub kernel_condition: bool,
    /// Power-basis coefficients of `det(b·I - M)`.
    pub det_certificate: Vec<String>,
    pub dimensions: usize,
    pub l: usize,
    /// Smallest `e ≤ b^l` with `M^e A(0) = 0`.
    pub annihilating_power: Option<usize>,
    /// The sequence is constantly 1; no matrix was built.
    pub degenerate: bool,
}

impl StarDecision {
    fn degenerate() -> Self {
        StarDecision {
            holds: false,
            b_is_eigenvalue: true,
            kernel_condition: false,
            det_certificate: vec!["0".to_string()],
            dimensions: 1,
            l: 0,
            annihilating_power: None,
            degenerate: true,
        }
    }
}

/// Decides whether `(1/N) Σ_{n<N} a_{b,m,S}(n) → 0`.
pub fn star_decide(s: &WeightedSet) -> Result<StarDecision> {
    if s.properize().reduced().is_empty() {
        return Ok(StarDecision::degenerate());
    }
    let field = CyclotomicField::new(s.modulus())?;
    let m = build_matrix(s)?;
    let a0 = block_sums(s, 0, &field)?;
    let eig = is_b_eigenvalue(&m, &field)?;
    let kernel = kernel_condition(&m, &a0, &field)?;
    Ok(StarDecision {
        holds: !eig.is_eigenvalue || kernel,
        b_is_eigenvalue: eig.is_eigenvalue,
        kernel_condition: kernel,
        det_certificate: eig.det.coeff_strings(),
        dimensions: m.dim(),
        l: m.max_len,
        annihilating_power: annihilating_power(&m, &a0, &field)?,
        degenerate: false,
    })
}

/// Orthogonality of `a_{S1}` and `a_{S2}`: the mean of `a_{S1}·conj(a_{S2})`,
/// which is the sequence of `S1 ⊕ (-S2)`.
pub fn orthogonality_decide(s1: &WeightedSet, s2: &WeightedSet) -> Result<StarDecision> {
    star_decide(&s1.oplus(&s2.negate())?)
}
