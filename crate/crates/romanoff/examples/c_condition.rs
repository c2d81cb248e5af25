//! Measured c-condition ratios B(cx)/B(x) for the built-in families at
//! c = 1/2. A set satisfies the c-condition when these ratios stay bounded
//! away from 0; the block construction in particular keeps them >= 1/2.
//!
//! Run with: cargo run --release --example c_condition

use romanoff::bsets::{c_condition_report, BSetSpec};
use romanoff::sieve::build_prime_table;

fn main() -> romanoff::Result<()> {
    let table = build_prime_table(10_000_000)?;
    let grid: Vec<u64> = (3..=7).map(|e| 10u64.pow(e)).collect();

    let families = [
        ("powers of two", BSetSpec::powers_of_two(true)),
        ("2^(a^2)", BSetSpec::two_pow_squares(true)),
        ("primorial blocks m=2", BSetSpec::primorial_blocks(2)?),
        ("primorial blocks m=3", BSetSpec::primorial_blocks(3)?),
    ];

    for (name, spec) in families {
        let report = c_condition_report(&table, &spec, 0.5, &grid)?;
        println!(
            "{name}: min B(x/2)/B(x) = {} ({:.4})",
            report.min_ratio,
            report.min_ratio.to_f64()
        );
        for row in &report.rows {
            println!(
                "  x = {:>9}: B(x/2) = {:>8}, B(x) = {:>8}, ratio = {:.4}",
                row.x, row.b_cx, row.b_x, row.ratio
            );
        }
        println!();
    }
    Ok(())
}
