//! The primorial-block set B: per-block table, the monotone-growth index
//! j0, and the exact counting lower bound B(x) vs (x - e^((l-1)^m))/d_l - 3.
//!
//! Run with: cargo run --release --example primorial_blocks

use romanoff::analysis::ell_of;
use romanoff::bsets::{self, exp_floor, BSetSpec};
use romanoff::sieve::build_prime_table;

fn main() -> romanoff::Result<()> {
    let table = build_prime_table(1000)?;

    for m in [2u32, 3] {
        let jmax = bsets::max_block_index(m).unwrap();
        println!("m = {m}: blocks B_j = {{ d_j | n }} ∩ [e^(j^{m}), e^((j+1)^{m})), j <= {jmax}");
        println!(
            "{:>3} {:>10} {:>12} {:>24} {:>24}",
            "j", "d_j", "lo", "hi", "|B_j|"
        );
        for j in 1..=jmax.min(5) {
            let b = bsets::primorial_block(&table, m, j)?;
            println!(
                "{:>3} {:>10} {:>12} {:>24} {:>24}",
                b.j, b.d_j, b.lo, b.hi, b.cardinality
            );
        }
        let j0 = bsets::find_j0(&table, m, jmax.min(5))?;
        println!("strictly increasing from j0 = {}\n", j0.j0);
    }

    // Counting lower bound, decided in exact integer arithmetic.
    let m = 2u32;
    let spec = BSetSpec::primorial_blocks(m)?;
    println!("B(x) against (x - exp((l-1)^2))/d_l - 3 for m = 2:");
    println!(
        "{:>12} {:>3} {:>10} {:>14} {:>6}",
        "x", "l", "B(x)", "lower bound", "holds"
    );
    for exp in 3..=10u32 {
        let x = 10u64.pow(exp);
        let ell = ell_of(x, m)?;
        let b_x = bsets::bset_count(&table, &spec, x)?;
        let d_ell = table.primorial(ell)?;
        let t_prev = (ell - 1).pow(m);
        let bound = (x as f64 - (t_prev as f64).exp()) / d_ell as f64 - 3.0;
        let holds = (b_x as u128 + 3) * d_ell as u128 + exp_floor(t_prev).unwrap() >= x as u128;
        println!("{x:>12} {ell:>3} {b_x:>10} {bound:>14.1} {holds:>6}");
    }
    Ok(())
}
