//! Tour of the prime table: pi(x), Chebyshev theta, primorials, nth primes,
//! and Mertens products.
//!
//! Run with: cargo run --release --example sieve_stats

use romanoff::sieve::build_prime_table;

fn main() -> romanoff::Result<()> {
    let table = build_prime_table(10_000_000)?;

    println!(
        "{:>12} {:>10} {:>14} {:>12}",
        "x", "pi(x)", "theta(x)", "theta/x"
    );
    for exp in 1..=7u32 {
        let x = 10u64.pow(exp);
        let pi = table.prime_count(x)?;
        let theta = table.chebyshev_theta(x)?;
        println!("{x:>12} {pi:>10} {theta:>14.4} {:>12.6}", theta / x as f64);
    }

    println!("\nprimorials d_k = p_1 ... p_k:");
    for k in [1u32, 4, 10, 15] {
        println!("  d_{k:<2} = {}", table.primorial(k)?);
    }
    println!(
        "  d_16 overflows u64: {:?}",
        table.primorial(16).unwrap_err().to_string()
    );

    println!(
        "\nnth primes: p_1 = {}, p_25 = {}, p_664579 = {}",
        table.nth_prime(1)?,
        table.nth_prime(25)?,
        table.nth_prime(664_579)?,
    );

    // Mertens: v(y) ln y converges to exp(-gamma) = 0.5614594836...
    println!("\n{:>10} {:>14} {:>14}", "y", "prod(1-1/p)", "v ln y");
    for exp in 1..=7u32 {
        let y = 10u64.pow(exp);
        let v = table.mertens_product(y)?;
        println!("{y:>10} {v:>14.8} {:>14.6}", v * (y as f64).ln());
    }
    Ok(())
}
