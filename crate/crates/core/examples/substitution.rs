//! Growing a sequence by repeated window substitution and comparing each
//! stage with direct evaluation.

use patseq::substitution::{direct_prefix, Substitution};
use patseq::WeightedSet;

fn main() -> patseq::Result<()> {
    let s = WeightedSet::from_pairs(3, 3, [("1", 1), ("10", 1), ("12", 1), ("11", 2), ("22", 2)])?;
    let sub = Substitution::new(&s)?;
    println!(
        "l = {}, seed = {:?}",
        sub.max_pattern_length(),
        sub.seed().as_slice()
    );

    for (t, stage) in sub.stages().take(5).enumerate() {
        let direct = direct_prefix(&s, stage.len());
        println!(
            "u_{t}: length {:>4}, matches direct evaluation: {}",
            stage.len(),
            stage == direct
        );
    }
    println!("first 30 exponents: {:?}", sub.prefix(30).as_slice());
    Ok(())
}
