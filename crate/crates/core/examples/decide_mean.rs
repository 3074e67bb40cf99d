//! Exact decision of whether the mean of a pattern sequence vanishes, next
//! to the empirical mean.

use patseq::sums::partial_sums;
use patseq::{star_decide, WeightedSet};

fn main() -> patseq::Result<()> {
    let cases = [
        ("Thue-Morse", WeightedSet::from_pairs(2, 2, [("1", 1)])?),
        ("Rudin-Shapiro", WeightedSet::from_pairs(2, 2, [("11", 1)])?),
        (
            "(1,-1)-periodic",
            WeightedSet::from_pairs(2, 2, [("1", 1), ("10", 1), ("11", 1)])?,
        ),
        (
            "parity of n, m = 3",
            WeightedSet::from_pairs(2, 3, [("1", 1), ("10", -1), ("11", -1)])?,
        ),
        (
            "base 3",
            WeightedSet::from_pairs(3, 3, [("1", 1), ("10", 1), ("12", 1), ("11", 2), ("22", 2)])?,
        ),
        ("empty", WeightedSet::empty(2, 2)?),
    ];
    for (name, s) in &cases {
        let d = star_decide(s)?;
        let n = (s.base() as u64).pow(12);
        let mean = partial_sums(s, &[n]).rows[0].mean_abs;
        println!(
            "{name:<20} mean -> 0: {:<5} (b eigenvalue: {}, kernel: {}), |S_N|/N at N = {n}: {mean:.5}",
            d.holds, d.b_is_eigenvalue, d.kernel_condition
        );
    }
    Ok(())
}
