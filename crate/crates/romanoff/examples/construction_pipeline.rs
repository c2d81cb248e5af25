//! The block-construction pipeline over a grid: per x, the exact counting
//! lower bound on B(x), the exact sumset count S(x) against x/logloglog x,
//! and the three-part pair partition with its reference bounds.
//!
//! This is the library call behind `romanoff thm2`.
//!
//! Run with: cargo run --release --example construction_pipeline

use romanoff::analysis::construction_report;
use romanoff::sieve::build_prime_table;

fn main() -> romanoff::Result<()> {
    let table = build_prime_table(1_000_000)?;
    let grid = vec![10_000u64, 100_000, 1_000_000];

    for m in [2u32, 3] {
        println!("m = {m}, s = 1:");
        println!(
            "{:>9} {:>3} {:>8} {:>6} {:>9} {:>9} {:>8}",
            "x", "l", "B(x)", "lower", "S(x)", "x/lllog", "S ratio"
        );
        for row in construction_report(&table, m, &grid, Some(1))? {
            println!(
                "{:>9} {:>3} {:>8} {:>6} {:>9} {:>9.0} {:>8.4}",
                row.x, row.ell, row.b_x, row.lower_ok, row.s_x, row.ref_x_lllog, row.s_ratio
            );
        }
        println!();
    }

    // The partition detail for one configuration.
    let rows = construction_report(&table, 2, &[1_000_000], Some(2))?;
    let r = &rows[0];
    println!("partition at x = 10^6, m = 2, s = 2:");
    println!(
        "  part1 (p > p_l, j >= s) = {:>13}  [coprime-count bound {:.0}]",
        r.part1, r.bound1
    );
    println!(
        "  part2 (p <= p_l, j >= s) = {:>12}  [block-size bound {:.0}]",
        r.part2, r.bound2
    );
    println!(
        "  part3 (j < s)            = {:>12}  [trivial bound {:.0}]",
        r.part3, r.bound3
    );
    println!(
        "  total pairs              = {:>12}  (= part1 + part2 + part3, exact)",
        r.total_pairs
    );
    Ok(())
}
