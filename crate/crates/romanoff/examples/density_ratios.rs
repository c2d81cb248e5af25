//! Measured constants of the two-sided sumset density bounds
//!
//!   (x/ln x) min(B(x), ln x / lnln x)  <<  S(x)  <<  (x/ln x) min(B(x), ln x)
//!
//! reported per grid point without pass/fail (the implied constants are
//! not fixed by theory).
//!
//! Run with: cargo run --release --example density_ratios

use romanoff::analysis::density_diagnostic;
use romanoff::bsets::BSetSpec;
use romanoff::sieve::build_prime_table;

fn main() -> romanoff::Result<()> {
    let table = build_prime_table(1_000_000)?;
    let grid: Vec<u64> = (4..=6).map(|e| 10u64.pow(e)).collect();

    let families = [
        ("powers of two", BSetSpec::powers_of_two(true)),
        ("2^(a^2)", BSetSpec::two_pow_squares(true)),
        ("blocks m=2", BSetSpec::primorial_blocks(2)?),
        ("singleton {1}", BSetSpec::explicit(vec![1])?),
    ];

    println!(
        "{:<16} {:>9} {:>9} {:>9} {:>12} {:>12}",
        "B", "x", "S(x)", "B(x)", "upper ratio", "lower ratio"
    );
    for (name, spec) in families {
        for row in density_diagnostic(&table, &spec, &grid)? {
            println!(
                "{:<16} {:>9} {:>9} {:>9} {:>12.4} {:>12.4}",
                name, row.x, row.s_x, row.b_x, row.upper_ratio, row.lower_ratio
            );
        }
    }
    println!("\nfor B = {{1}} the upper ratio reduces to pi(x-1) ln x / x, a prime");
    println!("number theorem sanity check near 1.");
    Ok(())
}
