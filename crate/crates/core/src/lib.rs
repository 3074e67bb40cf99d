//! Generalized pattern sequences over base-b expansions.
//!
//! For a finite weighted set `S` of digit patterns, `e_{b,S}(n)` is the
//! weighted number of occurrences of the patterns in the base-b expansion of
//! `n` (with infinitely many leading zeros) and
//! `a_{b,m,S}(n) = exp(2πi·e_{b,S}(n)/m)`. Thue–Morse is `S = {(1, "1")}` and
//! Rudin–Shapiro is `S = {(1, "11")}`, both with `b = m = 2`.
//!
//! The crate provides
//!
//! - exact occurrence counting and the weighted-set algebra ([`digits`],
//!   [`weighted`]),
//! - generation of `a_{b,m,S}` as the fixed point of a block substitution
//!   built from window functions ([`substitution`]),
//! - the transfer matrix relating block sums at consecutive scales and the
//!   exact decision of whether the Cesàro mean vanishes ([`transfer`]), on
//!   top of exact cyclotomic arithmetic ([`cyclotomic`]),
//! - brute-force partial sums, pattern-set documents and the command layer
//!   of the `patseq` binary ([`sums`], [`specfile`], [`commands`]).
//!
//! ```
//! use patseq::{star_decide, WeightedSet};
//!
//! let thue_morse = WeightedSet::from_pairs(2, 2, [("1", 1)]).unwrap();
//! let d = star_decide(&thue_morse).unwrap();
//! assert!(d.holds && !d.b_is_eigenvalue);
//! ```

pub mod commands;
pub mod cyclotomic;
pub mod digits;
pub mod error;
pub mod specfile;
pub mod substitution;
pub mod sums;
pub mod transfer;
pub mod weighted;

pub use cyclotomic::{CycElem, CyclotomicField};
pub use digits::{a_exponent, count_occurrences, eval_weighted, Word};
pub use error::{Error, Result};
pub use specfile::PatternSpecFile;
pub use substitution::{iterate, ExponentWord, Substitution};
pub use transfer::{build_matrix, orthogonality_decide, star_decide, StarDecision, TransferMatrix};
pub use weighted::{ProperWeightedSet, WeightedSet};
