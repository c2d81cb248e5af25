//! Moment statistics of the truncated representation function and the
//! Cauchy-Schwarz support bound: S_alpha(x) >= M1^2 / M2, exactly.
//!
//! Run with: cargo run --release --example moments_cauchy_schwarz

use romanoff::bsets::BSetSpec;
use romanoff::sieve::build_prime_table;
use romanoff::sumset::{moments, truncation_threshold};

fn main() -> romanoff::Result<()> {
    let table = build_prime_table(1_000_000)?;
    let spec = BSetSpec::powers_of_two(true);

    println!("B = powers of two, thresholds b < (ln x)^(1/alpha)");
    println!(
        "{:>9} {:>6} {:>9} {:>9} {:>9} {:>9} {:>9} {:>8}",
        "x", "alpha", "M1", "M2", "S_alpha", "S", "M1^2/M2", "thr"
    );
    for &(x, alpha) in &[
        (10_000u64, 1.0),
        (10_000, 0.5),
        (100_000, 0.5),
        (1_000_000, 0.5),
        (1_000_000, 1.0 / 3.0),
    ] {
        let st = moments(&table, &spec, x, alpha)?;
        println!(
            "{x:>9} {alpha:>6.3} {:>9} {:>9} {:>9} {:>9} {:>9} {:>8.1}",
            st.m1,
            st.m2,
            st.s_alpha,
            st.s,
            st.cs_lower_bound,
            truncation_threshold(x, alpha)
        );
        assert!(st.m1 as u128 * st.m1 as u128 <= st.m2 as u128 * st.s_alpha as u128);
    }

    // Equality case: B = {1} makes the counting function constant on its
    // support, so M1^2 = M2 * S_alpha exactly.
    let singleton = BSetSpec::explicit(vec![1])?;
    let st = moments(&table, &singleton, 100_000, 0.25)?;
    println!(
        "\nB = {{1}}: M1 = M2 = S_alpha = {} (Cauchy-Schwarz is an equality here)",
        st.m1
    );
    Ok(())
}
