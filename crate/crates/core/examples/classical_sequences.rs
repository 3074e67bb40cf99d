//! Thue-Morse and Rudin-Shapiro as pattern sequences.

use patseq::{iterate, WeightedSet};

fn signs(s: &WeightedSet, len: usize) -> patseq::Result<String> {
    Ok(iterate(s, len)?
        .as_slice()
        .iter()
        .map(|&k| if k == 0 { '+' } else { '-' })
        .collect())
}

fn main() -> patseq::Result<()> {
    let tm = WeightedSet::from_pairs(2, 2, [("1", 1)])?;
    let rs = WeightedSet::from_pairs(2, 2, [("11", 1)])?;
    println!("Thue-Morse    {}", signs(&tm, 64)?);
    println!("Rudin-Shapiro {}", signs(&rs, 64)?);

    let base3 = WeightedSet::from_pairs(3, 3, [("1", 1), ("2", 2)])?;
    let word = iterate(&base3, 27)?;
    println!("digit sum mod 3 in base 3: {:?}", word.as_slice());
    Ok(())
}
