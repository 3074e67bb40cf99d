//! Exact arithmetic with roots of unity.

use patseq::cyclotomic::{cyclotomic_poly, euler_phi, CyclotomicField};

fn main() -> patseq::Result<()> {
    for m in [1, 2, 3, 4, 6, 12, 105] {
        let phi = cyclotomic_poly(m);
        println!("Phi_{m} (degree {}): {phi}", euler_phi(m));
    }

    let f = CyclotomicField::new(12)?;
    let z = f.root_of_unity(1);
    let x = f.add(&f.one(), &f.mul(&f.from_integer(3), &z));
    let inv = f.inv(&x)?;
    println!("\n(1 + 3z)^-1 = {:?}", inv.coeff_strings());
    println!("check: {:?}", f.mul(&x, &inv).coeff_strings());
    println!("z^12 = 1: {}", f.pow(&z, 12) == f.one());
    let (re, im) = f.to_complex(&x);
    println!("1 + 3z ~ {re:.6} + {im:.6}i");
    Ok(())
}
