//! Orthogonality of two pattern sequences over the same base and modulus.

use patseq::{orthogonality_decide, WeightedSet};

fn main() -> patseq::Result<()> {
    let tm = WeightedSet::from_pairs(2, 2, [("1", 1)])?;
    let rs = WeightedSet::from_pairs(2, 2, [("11", 1)])?;
    let tens = WeightedSet::from_pairs(2, 2, [("10", 1)])?;
    for (a, sa) in [("TM", &tm), ("RS", &rs)] {
        for (b, sb) in [("TM", &tm), ("RS", &rs), ("10", &tens)] {
            let d = orthogonality_decide(sa, sb)?;
            println!("{a} vs {b:<3}: orthogonal = {}", d.holds);
        }
    }
    Ok(())
}
