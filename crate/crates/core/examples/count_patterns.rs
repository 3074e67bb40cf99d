//! Occurrence counts of digit patterns, leading zeros included.

use num_bigint::BigUint;
use patseq::digits::{count_occurrences, eval_weighted_u64, to_digits_u64};
use patseq::{WeightedSet, Word};

fn main() -> patseq::Result<()> {
    let w = Word::parse(2, "0011")?;
    for n in [6u64, 51, 1 << 20] {
        let count = count_occurrences(&w, &BigUint::from(n))?;
        println!(
            "{n} = {}_2 contains {w} {count} time(s)",
            to_digits_u64(n, 2)?
        );
    }

    let s = WeightedSet::from_pairs(3, 3, [("1", 1), ("12", 2), ("002", -1)])?;
    let listed: Vec<String> = s.iter().map(|(w, c)| format!("{w}:{c}")).collect();
    println!("\nweighted counts for {{{}}}", listed.join(", "));
    for n in 0..12u64 {
        println!(
            "  n = {n:>2} ({:>3}_3): e = {}",
            to_digits_u64(n, 3)?.to_string(),
            eval_weighted_u64(&s, n)
        );
    }

    let p = s.properize();
    println!("\nwithout leading zeros:");
    for (w, c) in p.iter() {
        println!("  {w:>4} -> {c}");
    }
    Ok(())
}
