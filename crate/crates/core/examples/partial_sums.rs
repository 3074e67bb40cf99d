//! Exact partial sums at powers of the base, written as CSV.

use patseq::sums::{partial_sums, power_checkpoints};
use patseq::WeightedSet;

fn main() -> patseq::Result<()> {
    let rs = WeightedSet::from_pairs(2, 2, [("11", 1)])?;
    let trace = partial_sums(&rs, &power_checkpoints(2, 1 << 22));
    print!("{}", trace.to_csv());
    let worst = trace
        .rows
        .iter()
        .map(|r| r.abs_sum / (r.n as f64).sqrt())
        .fold(0.0, f64::max);
    eprintln!("max |S_N|/sqrt(N) at these checkpoints: {worst:.4}");
    Ok(())
}
