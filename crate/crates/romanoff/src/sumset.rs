//! Representation functions and sumset counters for S = {p + b}.
//!
//! Two truncation conventions coexist deliberately: the pointwise function
//! f_alpha(n) admits b < (ln n)^(1/alpha), while the counting function
//! S_alpha(x) and the moment machinery admit b < (ln x)^(1/alpha). Both are
//! provided ([`rep_count_truncated`] is pointwise; everything keyed on x is
//! per-x) and no reconciliation between them is attempted.
//!
//! Sumset counting is bitmap based: the dense prime bitmap up to x is
//! OR-shifted once per b and the accumulator popcounted, which makes the
//! count exact and O(|B| * x / 64).

use serde::Serialize;

use crate::bsets::{enumerate_bset, BSetSpec};
use crate::error::{Error, Result};
use crate::sieve::PrimeTable;

/// Comparisons against the real threshold (ln v)^(1/alpha) use strict
/// inequality and exclude values within this margin of the boundary.
pub const THRESHOLD_MARGIN: f64 = 1e-12;

/// Truncated lists beyond this length abort with a resource error.
pub const MAX_TRUNCATED_MEMBERS: usize = 1 << 16;

/// Per-n second-moment accumulation is used up to this x; beyond it the
/// pairwise route applies and the truncated list must stay small.
const PER_N_LIMIT: u64 = 1 << 24;
const PAIRWISE_MAX_MEMBERS: usize = 64;

/// Cap on total (p, b) pairs walked by the exact second moment.
const PAIR_WORK_CAP: u64 = 4_000_000_000;

/// (ln v)^(1/alpha); the truncation threshold at scale v.
pub fn truncation_threshold(v: u64, alpha: f64) -> f64 {
    (v as f64).ln().powf(1.0 / alpha)
}

fn admits(b: u64, threshold: f64) -> bool {
    (b as f64) < threshold - THRESHOLD_MARGIN
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::domain(format!(
            "alpha must be positive and finite, got {alpha}"
        )));
    }
    Ok(())
}

/// Members b ∈ B with b ≤ x - 2 and b < (ln x)^(1/alpha).
pub fn truncated_members(
    table: &PrimeTable,
    spec: &BSetSpec,
    x: u64,
    alpha: f64,
) -> Result<Vec<u64>> {
    check_alpha(alpha)?;
    if x < 3 {
        return Err(Error::domain(format!(
            "truncated operations need x >= 3, got {x}"
        )));
    }
    let threshold = truncation_threshold(x, alpha);
    let mut members = enumerate_bset(table, spec, x - 2)?;
    members.retain(|&b| admits(b, threshold));
    Ok(members)
}

/// f(n) = #{(p, b) : p + b = n, p prime, b ∈ B}.
pub fn rep_count(table: &PrimeTable, spec: &BSetSpec, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::domain(format!("rep_count needs n >= 2, got {n}")));
    }
    if n > table.limit() {
        return Err(Error::range(format!(
            "rep_count({n}) beyond sieve limit {}",
            table.limit()
        )));
    }
    let members = enumerate_bset(table, spec, n - 2)?;
    Ok(members.iter().filter(|&&b| table.is_prime(n - b)).count() as u64)
}

/// f_alpha(n): as [`rep_count`] restricted to b < (ln n)^(1/alpha).
pub fn rep_count_truncated(table: &PrimeTable, spec: &BSetSpec, n: u64, alpha: f64) -> Result<u64> {
    check_alpha(alpha)?;
    if n < 3 {
        return Err(Error::domain(format!(
            "rep_count_truncated needs n >= 3, got {n}"
        )));
    }
    if n > table.limit() {
        return Err(Error::range(format!(
            "rep_count_truncated({n}) beyond sieve limit {}",
            table.limit()
        )));
    }
    let threshold = truncation_threshold(n, alpha);
    let members = enumerate_bset(table, spec, n - 2)?;
    Ok(members
        .iter()
        .filter(|&&b| admits(b, threshold) && table.is_prime(n - b))
        .count() as u64)
}

/// dst |= src << shift, truncated to dst's length.
fn or_shifted(dst: &mut [u64], src: &[u64], shift: usize) {
    let (s_w, s_b) = (shift / 64, shift % 64);
    if s_b == 0 {
        for i in (s_w..dst.len()).rev() {
            dst[i] |= src[i - s_w];
        }
    } else {
        for i in (s_w..dst.len()).rev() {
            let lo = src[i - s_w] << s_b;
            let hi = if i > s_w {
                src[i - s_w - 1] >> (64 - s_b)
            } else {
                0
            };
            dst[i] |= lo | hi;
        }
    }
}

fn count_sums(table: &PrimeTable, x: u64, members: &[u64]) -> u64 {
    if x < 3 || members.is_empty() {
        return 0;
    }
    let primes = table.full_bitmap(x);
    let mut acc = vec![0u64; primes.len()];
    for &b in members {
        debug_assert!(b + 2 <= x);
        or_shifted(&mut acc, &primes, b as usize);
    }
    // Shifted prime bits may land past x inside the final word.
    let tail = (x as usize + 1) % 64;
    if tail != 0 {
        *acc.last_mut().unwrap() &= (1u64 << tail) - 1;
    }
    acc.iter().map(|w| w.count_ones() as u64).sum()
}

/// S(x) = #{n ≤ x : n = p + b, p prime, b ∈ B}.
pub fn sumset_count(table: &PrimeTable, spec: &BSetSpec, x: u64) -> Result<u64> {
    if x > table.limit() {
        return Err(Error::range(format!(
            "sumset_count({x}) beyond sieve limit {}",
            table.limit()
        )));
    }
    if x < 3 {
        return Ok(0);
    }
    let members = enumerate_bset(table, spec, x - 2)?;
    Ok(count_sums(table, x, &members))
}

/// S_alpha(x): as [`sumset_count`] restricted to b < (ln x)^(1/alpha).
pub fn truncated_sumset_count(
    table: &PrimeTable,
    spec: &BSetSpec,
    x: u64,
    alpha: f64,
) -> Result<u64> {
    if x > table.limit() {
        return Err(Error::range(format!(
            "truncated_sumset_count({x}) beyond sieve limit {}",
            table.limit()
        )));
    }
    let members = truncated_members(table, spec, x, alpha)?;
    Ok(count_sums(table, x, &members))
}

/// Exact moment statistics of the per-x truncated representation function
/// g(n) = #{(p, b) : p + b = n, b < (ln x)^(1/alpha)} for n ≤ x.
///
/// `m1` and `m2` are the exact first and second moments of g; `s_alpha` is
/// the size of g's support (the truncated sumset count) and `s` the full
/// sumset count. `diag` and `offdiag` are the two relaxed second-moment
/// terms: diag = |B_trunc| * pi(x) and offdiag sums the pair counts
/// pi_2(x, b2 - b1) over b1 < b2, so m2 ≤ diag + 2 * offdiag always.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RepStats {
    pub x: u64,
    pub alpha: f64,
    #[serde(rename = "M1")]
    pub m1: u64,
    #[serde(rename = "M2")]
    pub m2: u64,
    #[serde(rename = "S_alpha")]
    pub s_alpha: u64,
    #[serde(rename = "S")]
    pub s: u64,
    pub diag: u64,
    pub offdiag: u64,
    pub cs_lower_bound: u64,
}

/// Compute [`RepStats`] for (B, x, alpha). The four structural inequalities
/// (Cauchy-Schwarz, support ordering, m2 vs its relaxation) are asserted
/// before returning.
pub fn moments(table: &PrimeTable, spec: &BSetSpec, x: u64, alpha: f64) -> Result<RepStats> {
    if x > table.limit() {
        return Err(Error::range(format!(
            "moments({x}) beyond sieve limit {}",
            table.limit()
        )));
    }
    let members = truncated_members(table, spec, x, alpha)?;
    if members.len() > MAX_TRUNCATED_MEMBERS {
        return Err(Error::resource(format!(
            "truncated b-list has {} members (cap {MAX_TRUNCATED_MEMBERS}); increase alpha",
            members.len()
        )));
    }

    let pi_x = table.prime_count(x)?;
    let m1: u64 = members
        .iter()
        .map(|&b| table.prime_count(x - b).unwrap())
        .sum();
    let diag = members.len() as u64 * pi_x;

    // m1 is exactly the number of (p, b) pairs the per-n pass walks.
    if m1 > PAIR_WORK_CAP {
        return Err(Error::resource(format!(
            "second moment at x = {x} would walk {m1} pairs (cap {PAIR_WORK_CAP}); increase alpha"
        )));
    }

    let (m2, s_alpha) = if x <= PER_N_LIMIT {
        let (m2, support, m1_check) = second_moment_per_n(table, x, &members);
        assert_eq!(m1, m1_check, "per-n pass disagrees with sum of pi(x - b)");
        (m2, support)
    } else if members.len() <= PAIRWISE_MAX_MEMBERS {
        let m2 = second_moment_pairwise(table, x, &members);
        (m2, count_sums(table, x, &members))
    } else {
        return Err(Error::resource(format!(
            "x = {x} with {} truncated members is beyond the second-moment budget; \
             increase alpha or reduce x",
            members.len()
        )));
    };

    let offdiag = offdiag_pair_sum(table, x, &members)?;
    let s = sumset_count(table, spec, x)?;

    assert!(
        (m1 as u128) * (m1 as u128) <= (m2 as u128) * (s_alpha as u128),
        "Cauchy-Schwarz"
    );
    assert!(s_alpha <= s, "truncated support exceeds full support");
    assert!(s <= x, "sumset count exceeds x");
    assert!(
        (m2 as u128) <= diag as u128 + 2 * offdiag as u128,
        "m2 relaxation"
    );

    let cs_lower_bound = if m2 == 0 {
        0
    } else {
        ((m1 as u128 * m1 as u128) / m2 as u128) as u64
    };

    Ok(RepStats {
        x,
        alpha,
        m1,
        m2,
        s_alpha,
        s,
        diag,
        offdiag,
        cs_lower_bound,
    })
}

/// One pass over all (p, b) pairs, accumulating g(n) in a dense array.
/// Returns (m2, support size, pairs walked).
fn second_moment_per_n(table: &PrimeTable, x: u64, members: &[u64]) -> (u64, u64, u64) {
    let mut counts = vec![0u32; x as usize + 1];
    let primes = table.full_bitmap(x);
    let mut pairs = 0u64;
    for &b in members {
        let max_p = x - b;
        'words: for (wi, &w) in primes.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let p = (wi * 64) as u64 + w.trailing_zeros() as u64;
                if p > max_p {
                    break 'words;
                }
                counts[(p + b) as usize] += 1;
                pairs += 1;
                w &= w - 1;
            }
        }
    }
    let mut m2 = 0u64;
    let mut support = 0u64;
    for &g in &counts {
        if g > 0 {
            m2 += g as u64 * g as u64;
            support += 1;
        }
    }
    (m2, support, pairs)
}

/// m2 = m1 + 2 * sum over b1 < b2 of #{(p1, p2): p1 - p2 = b2 - b1,
/// p1 ≤ x - b1}; the diagonal of the exact second moment is m1 itself.
fn second_moment_pairwise(table: &PrimeTable, x: u64, members: &[u64]) -> u64 {
    let m1: u64 = members
        .iter()
        .map(|&b| table.prime_count(x - b).unwrap())
        .sum();
    let mut off = 0u64;
    for (i, &b1) in members.iter().enumerate() {
        for &b2 in &members[i + 1..] {
            off += table.pair_count_any(x - b1, b2 - b1);
        }
    }
    m1 + 2 * off
}

/// sum over b1 < b2 of pi_2(x, b2 - b1), memoized over repeated gaps: each
/// distinct gap costs one bitmap pass regardless of its multiplicity.
fn offdiag_pair_sum(table: &PrimeTable, x: u64, members: &[u64]) -> Result<u64> {
    if members.len() < 2 {
        return Ok(0);
    }
    let mut mult: std::collections::HashMap<u64, u64> = std::collections::HashMap::new();
    for (i, &b1) in members.iter().enumerate() {
        for &b2 in &members[i + 1..] {
            *mult.entry(b2 - b1).or_insert(0) += 1;
        }
    }
    if mult.len() as u64 * (x / 128 + 1) > PAIR_WORK_CAP {
        return Err(Error::resource(format!(
            "off-diagonal sum needs {} distinct-gap passes at x = {x}; increase alpha",
            mult.len()
        )));
    }
    let mut total: u128 = 0;
    for (&h, &m) in &mult {
        total += table.pair_count_any(x, h) as u128 * m as u128;
    }
    u64::try_from(total)
        .map_err(|_| Error::resource("off-diagonal pair sum exceeds u64".to_string()))
}
