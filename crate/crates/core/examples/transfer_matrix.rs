//! The transfer matrix and the block sums it propagates.

use patseq::cyclotomic::CyclotomicField;
use patseq::transfer::{advance, block_sums, build_matrix};
use patseq::WeightedSet;

fn main() -> patseq::Result<()> {
    let s = WeightedSet::from_pairs(2, 2, [("1", 1), ("10", 1), ("11", 1)])?;
    let m = build_matrix(&s)?;
    println!("M ({0}x{0}), entries are exponents of -1:", m.dim());
    for row in m.to_dense() {
        let cells: Vec<String> = row
            .iter()
            .map(|e| e.map_or(".".to_string(), |k| k.to_string()))
            .collect();
        println!("  {}", cells.join(" "));
    }

    let field = CyclotomicField::new(s.modulus())?;
    let mut a = block_sums(&s, 0, &field)?;
    for t in 0..4 {
        let direct = block_sums(&s, t, &field)?;
        let shown: Vec<String> = a
            .entries
            .iter()
            .map(|e| format!("{:?}", field.to_complex(e).0))
            .collect();
        println!(
            "A({t}) = [{}], equals direct sums: {}",
            shown.join(", "),
            a == direct
        );
        a = advance(&m, &a, &field)?;
    }
    Ok(())
}
