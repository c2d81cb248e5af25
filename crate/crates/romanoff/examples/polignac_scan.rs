//! Odd numbers with no representation p + 2^k (de Polignac numbers),
//! scanned up to 2000. Euler's classical counterexamples 127 and 959
//! appear along with the rest of the verified list.
//!
//! Run with: cargo run --release --example polignac_scan

use romanoff::analysis::polignac_check;
use romanoff::sieve::build_prime_table;

fn main() -> romanoff::Result<()> {
    let table = build_prime_table(2000)?;

    let mut non_representable = Vec::new();
    for n in (5..=1999u64).step_by(2) {
        if polignac_check(&table, n, true)?.is_empty() {
            non_representable.push(n);
        }
    }
    println!("odd n <= 2000 with no representation p + 2^k:");
    println!("{non_representable:?}");
    println!(
        "({} values; 127 and 959 are Euler's counterexamples)",
        non_representable.len()
    );

    // A representable case for contrast, with its witnesses.
    let witnesses = polignac_check(&table, 9, true)?;
    println!("\nwitnesses for 9: {witnesses:?} (pairs of prime and exponent)");
    Ok(())
}
