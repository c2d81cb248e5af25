//! Explicit B-set files: the one-integer-per-line format with # comments,
//! loaded, counted, and fed through the sumset counter.
//!
//! Run with: cargo run --release --example explicit_file

use std::io::Write;

use romanoff::bsets::{bset_count, enumerate_bset, BSetSpec};
use romanoff::sieve::build_prime_table;
use romanoff::sumset::sumset_count;

fn main() -> romanoff::Result<()> {
    let path = std::env::temp_dir().join("squares.bset");
    let mut f = std::fs::File::create(&path)?;
    writeln!(f, "# perfect squares up to 400")?;
    for a in 1..=20u64 {
        writeln!(f, "{}", a * a)?;
    }
    drop(f);

    let spec = BSetSpec::explicit_from_file(&path)?;
    let table = build_prime_table(10_000)?;

    println!("members <= 100: {:?}", enumerate_bset(&table, &spec, 100)?);
    println!("B(400) = {}", bset_count(&table, &spec, 400)?);
    println!(
        "S(10^4) = #{{n <= 10^4 : n = p + a^2}} = {}",
        sumset_count(&table, &spec, 10_000)?
    );

    // Malformed input is rejected with the offending line number.
    std::fs::write(&path, "4\n1\n")?;
    match BSetSpec::explicit_from_file(&path) {
        Err(e) => println!("unsorted file rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    std::fs::remove_file(&path).ok();
    Ok(())
}
