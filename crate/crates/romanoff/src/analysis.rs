//! Diagnostic pipelines over grids of x: the de Polignac scan, Chebyshev
//! bound tables, the three-part pair partition for the block construction,
//! and the reports comparing counting functions against x / logloglog x.
//!
//! Integer quantities (counts, partitions) are exact; real-valued bound
//! columns are evaluated with implied constant 1 and reported as measured
//! ratios, never asserted.

use serde::Serialize;

use crate::bsets::{
    bset_count, clamped_block, exp_floor, pow_checked, primorial_block, validate_grid, BSetSpec,
};
use crate::error::{Error, Result};
use crate::sieve::{Kahan, PrimeTable};
use crate::sumset::{moments, sumset_count, truncated_members};

/// All ways to write odd n as p + 2^k with 2^k < n, as (p, k) pairs in
/// ascending k. Empty output means n is a de Polignac number.
pub fn polignac_check(
    table: &PrimeTable,
    n: u64,
    include_zero_exponent: bool,
) -> Result<Vec<(u64, u32)>> {
    if n.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "polignac_check needs odd n, got {n}"
        )));
    }
    if n <= 3 {
        return Err(Error::domain(format!(
            "polignac_check needs n > 3, got {n}"
        )));
    }
    if n > table.limit() {
        return Err(Error::range(format!(
            "polignac_check({n}) beyond sieve limit {}",
            table.limit()
        )));
    }
    let mut witnesses = Vec::new();
    let mut k: u32 = if include_zero_exponent { 0 } else { 1 };
    while (1u64 << k) <= n - 2 {
        let p = n - (1 << k);
        if table.is_prime(p) {
            witnesses.push((p, k));
        }
        k += 1;
    }
    Ok(witnesses)
}

/// The block index ell with exp(ell^m) ≤ x < exp((ell+1)^m), for x ≥ 3.
pub fn ell_of(x: u64, m: u32) -> Result<u32> {
    if m < 2 {
        return Err(Error::domain(format!(
            "block parameter m must be >= 2, got {m}"
        )));
    }
    if x < 3 {
        return Err(Error::domain(format!(
            "ell_of needs x >= 3 (x >= e), got {x}"
        )));
    }
    let mut ell = 1u32;
    loop {
        let t_next = match pow_checked(ell + 1, m) {
            Some(t) if t <= crate::bsets::MAX_EXP_ARG as u64 => t as u32,
            // exp((ell+1)^m) > 2^127 > x: done.
            _ => return Ok(ell),
        };
        if x as u128 > exp_floor(t_next).unwrap() {
            ell += 1;
        } else {
            return Ok(ell);
        }
    }
}

/// x / ln(ln(ln x)); defined for x ≥ 16 (x > e^e).
pub fn x_over_lllog(x: u64) -> Result<f64> {
    if x < 16 {
        return Err(Error::domain(format!(
            "x/logloglog x needs x > e^e ≈ 15.15, got {x}"
        )));
    }
    let xf = x as f64;
    Ok(xf / xf.ln().ln().ln())
}

/// One row of the Chebyshev bound table at index ell: theta(p_ell) against
/// 2 ell ln ell, and theta(p_(ell-1)) against (2/3) ell ln ell.
#[derive(Debug, Clone, Serialize)]
pub struct ChebyshevRow {
    pub ell: u32,
    pub theta_ell: f64,
    pub upper_rhs: f64,
    pub upper_ok: bool,
    pub theta_prev: f64,
    pub lower_rhs: f64,
    pub lower_ok: bool,
}

#[derive(Debug, Clone)]
pub struct ChebyshevReport {
    pub rows: Vec<ChebyshevRow>,
    pub upper_all_ok: bool,
    /// Smallest ell in the window from which the lower inequality holds
    /// through ell_max; None if it fails at ell_max itself.
    pub lower_holds_from: Option<u32>,
}

/// Evaluate both Chebyshev-type inequalities for ell in [ell_min, ell_max].
/// Failures are recorded per row, not asserted; the bounds are asymptotic
/// and the lower one genuinely fails at small ell.
pub fn chebyshev_bound_check(
    table: &PrimeTable,
    ell_min: u32,
    ell_max: u32,
) -> Result<ChebyshevReport> {
    if ell_min < 2 || ell_min > ell_max {
        return Err(Error::domain(format!(
            "need 2 <= ell_min <= ell_max, got [{ell_min}, {ell_max}]"
        )));
    }
    // One pass: running theta over the first ell_max primes.
    table.nth_prime(ell_max as u64)?; // range check up front
    let mut rows = Vec::with_capacity((ell_max - ell_min + 1) as usize);
    let mut acc = Kahan::default();
    let mut theta_prev = 0.0f64;
    for (idx, p) in table.primes().take(ell_max as usize).enumerate() {
        let ell = idx as u32 + 1;
        acc.add((p as f64).ln());
        let theta_ell = acc.value();
        if ell >= ell_min {
            let lf = ell as f64;
            let upper_rhs = 2.0 * lf * lf.ln();
            let lower_rhs = (2.0 / 3.0) * lf * lf.ln();
            rows.push(ChebyshevRow {
                ell,
                theta_ell,
                upper_rhs,
                upper_ok: theta_ell < upper_rhs,
                theta_prev,
                lower_rhs,
                lower_ok: theta_prev > lower_rhs,
            });
        }
        theta_prev = acc.value();
    }
    let upper_all_ok = rows.iter().all(|r| r.upper_ok);
    let mut lower_holds_from = None;
    for row in rows.iter().rev() {
        if row.lower_ok {
            lower_holds_from = Some(row.ell);
        } else {
            break;
        }
    }
    Ok(ChebyshevReport {
        rows,
        upper_all_ok,
        lower_holds_from,
    })
}

/// #{n ≤ x : gcd(n, d_s) = 1} by inclusion-exclusion over the 2^s squarefree
/// divisors of d_s = p_1 ... p_s.
pub fn coprime_count(table: &PrimeTable, x: u64, s: u32) -> Result<u64> {
    if s < 1 {
        return Err(Error::domain("coprime_count needs s >= 1".to_string()));
    }
    if s > 25 {
        return Err(Error::resource(format!(
            "2^{s} inclusion-exclusion terms; s capped at 25"
        )));
    }
    let primes: Vec<u64> = table.primes().take(s as usize).collect();
    if primes.len() < s as usize {
        return Err(Error::range(format!(
            "coprime_count needs the first {s} primes, beyond sieve limit {}",
            table.limit()
        )));
    }
    let mut total: i128 = 0;
    for mask in 0u32..(1 << s) {
        let mut k: u128 = 1;
        for (i, &p) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                k *= p as u128;
            }
        }
        let term = (x as u128 / k) as i128;
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total as u64)
}

/// Exact three-way partition of the pairs (p, b) with p + b ≤ x for the
/// block construction, plus the three reference bounds at constant 1.
///
/// part1: p > p_ell, b in a block with s ≤ j; part2: p ≤ p_ell, same blocks;
/// part3: b in a block with j < s. Every sum in parts 1 and 2 is coprime to
/// d_s (the member is divisible by d_s, the prime is larger than p_s).
#[derive(Debug, Clone, Serialize)]
pub struct PartitionReport {
    pub m: u32,
    pub s: u32,
    pub x: u64,
    pub ell: u32,
    pub part1: u64,
    pub part2: u64,
    pub part3: u64,
    pub bound1: f64,
    pub bound2: f64,
    pub bound3: f64,
    pub total_pairs: u64,
}

pub fn pair_partition(table: &PrimeTable, m: u32, s: u32, x: u64) -> Result<PartitionReport> {
    let ell = ell_of(x, m)?;
    if s < 1 || s > ell {
        return Err(Error::domain(format!(
            "s must lie in 1..=ell = {ell}, got {s}"
        )));
    }
    if x > table.limit() {
        return Err(Error::range(format!(
            "pair_partition({x}) beyond sieve limit {}",
            table.limit()
        )));
    }
    let p_ell = table.nth_prime(ell as u64)?;
    let d_s = table.primorial(s)?;

    let (mut part1, mut part2, mut part3) = (0u64, 0u64, 0u64);
    let mut total_pairs = 0u64;
    if x >= 3 {
        let mut j = 1u32;
        while let Some((lo, hi, d)) = clamped_block(table, m, j, x - 2)? {
            let mut b = lo.div_ceil(d) * d;
            while b <= hi {
                let pi_xb = table.prime_count(x - b).unwrap();
                total_pairs += pi_xb;
                if j < s {
                    part3 += pi_xb;
                } else {
                    debug_assert_eq!(b % d_s, 0, "member of block {j} not divisible by d_s");
                    let capped = table.prime_count(p_ell.min(x - b)).unwrap();
                    part2 += capped;
                    part1 += pi_xb - capped;
                }
                b += d;
            }
            j += 1;
        }
    }
    assert_eq!(
        part1 + part2 + part3,
        total_pairs,
        "partition must be exact"
    );

    let xf = x as f64;
    let p_s = table.nth_prime(s as u64)?;
    let bound1 = xf * table.mertens_product(p_s)? + (2.0f64).powi(s as i32);
    let lx = xf.ln();
    let mf = m as f64;
    let bound2 = xf * lx.powf(2.0 / mf) * (-(1.0 / (2.0 * mf)) * lx.powf(1.0 / mf) * lx.ln()).exp();
    let bound3 = s as f64 * block_cardinality_f64(table, m, s)? * table.prime_count(x)? as f64;

    Ok(PartitionReport {
        m,
        s,
        x,
        ell,
        part1,
        part2,
        part3,
        bound1,
        bound2,
        bound3,
        total_pairs,
    })
}

/// |B_j| as f64: exact when the block is representable, otherwise from the
/// real block boundaries.
fn block_cardinality_f64(table: &PrimeTable, m: u32, j: u32) -> Result<f64> {
    match primorial_block(table, m, j) {
        Ok(block) => Ok(block.cardinality as f64),
        Err(Error::BlockOverflow { .. }) => {
            let t_lo = pow_checked(j, m).unwrap() as f64;
            let t_hi = (j as f64 + 1.0).powi(m as i32);
            let d = table.primorial(j)? as f64;
            Ok((t_hi.exp() - t_lo.exp()) / d)
        }
        Err(e) => Err(e),
    }
}

/// The cutoff s = max(1, floor((ln ln x)^(1/2m)) - 1); `clamped` is set when
/// the formula fell below 1 (which it does for every desk-scale x).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutoffChoice {
    pub s: u32,
    pub clamped: bool,
}

pub fn default_s(x: u64, m: u32) -> CutoffChoice {
    let lnln = (x as f64).ln().ln();
    from_lnln(lnln, m)
}

fn from_lnln(lnln_x: f64, m: u32) -> CutoffChoice {
    let raw = lnln_x.powf(1.0 / (2.0 * m as f64)).floor() - 1.0;
    if raw >= 1.0 {
        CutoffChoice {
            s: raw as u32,
            clamped: false,
        }
    } else {
        CutoffChoice {
            s: 1,
            clamped: true,
        }
    }
}

/// One grid row of the second-moment (lower bound) pipeline.
#[derive(Debug, Clone, Serialize)]
pub struct MomentRow {
    pub x: u64,
    pub alpha: f64,
    #[serde(rename = "M1")]
    pub m1: u64,
    #[serde(rename = "M2")]
    pub m2: u64,
    #[serde(rename = "S_alpha")]
    pub s_alpha: u64,
    pub cs_lower_bound: u64,
    /// x / logloglog x.
    pub ref_x_lllog: f64,
    /// (M1^2 / M2) / (x / logloglog x).
    pub cs_ratio: f64,
    /// |B ∩ [1, (ln x)^(1/alpha))|.
    pub b_threshold: u64,
    /// Measured constant in M1 >= kappa (x / ln x) B((ln x)^(1/alpha)).
    pub kappa: f64,
    /// B(x) / x^alpha; the growth hypothesis measured at this x.
    pub hyp_ratio: f64,
    pub hypothesis_ok: bool,
}

/// Per-x moment statistics with the Cauchy-Schwarz support bound compared
/// against x / logloglog x. Rows also carry the measured constant of the
/// first-moment lower bound and a finite-x check of B(x) vs x^alpha.
pub fn moment_report(
    table: &PrimeTable,
    spec: &BSetSpec,
    alpha: f64,
    grid: &[u64],
) -> Result<Vec<MomentRow>> {
    if grid.is_empty() {
        return Ok(Vec::new());
    }
    validate_grid(grid, 16)?;
    let mut rows = Vec::with_capacity(grid.len());
    for &x in grid {
        let stats = moments(table, spec, x, alpha)?;
        let ref_x_lllog = x_over_lllog(x)?;
        let cs_real = if stats.m2 == 0 {
            0.0
        } else {
            stats.m1 as f64 * stats.m1 as f64 / stats.m2 as f64
        };
        let b_threshold = truncated_members(table, spec, x, alpha)?.len() as u64;
        let kappa = if b_threshold == 0 {
            0.0
        } else {
            stats.m1 as f64 * (x as f64).ln() / (x as f64 * b_threshold as f64)
        };
        let b_x = bset_count(table, spec, x)?;
        let hyp_ratio = b_x as f64 / (x as f64).powf(alpha);
        assert!(
            stats.cs_lower_bound <= stats.s_alpha,
            "floor(M1^2/M2) must not exceed S_alpha"
        );
        rows.push(MomentRow {
            x,
            alpha,
            m1: stats.m1,
            m2: stats.m2,
            s_alpha: stats.s_alpha,
            cs_lower_bound: stats.cs_lower_bound,
            ref_x_lllog,
            cs_ratio: cs_real / ref_x_lllog,
            b_threshold,
            kappa,
            hyp_ratio,
            hypothesis_ok: hyp_ratio >= 1.0,
        });
    }
    Ok(rows)
}

/// One grid row of the block-construction pipeline.
#[derive(Debug, Clone, Serialize)]
pub struct ConstructionRow {
    pub x: u64,
    pub m: u32,
    pub ell: u32,
    pub s: u32,
    pub s_clamped: bool,
    pub b_x: u64,
    /// (x - exp((ell-1)^m)) / d_ell - 3.
    pub b_lower_bound: f64,
    /// The lower bound above, decided in exact integer arithmetic.
    pub lower_ok: bool,
    pub s_x: u64,
    pub ref_x_lllog: f64,
    /// S(x) / (x / logloglog x).
    pub s_ratio: f64,
    pub part1: u64,
    pub part2: u64,
    pub part3: u64,
    pub bound1: f64,
    pub bound2: f64,
    pub bound3: f64,
    pub total_pairs: u64,
}

/// Per-x diagnostics of the primorial-block construction: the counting
/// lower bound, the exact sumset count against x / logloglog x, and the
/// pair partition at s (given, or the default cutoff).
pub fn construction_report(
    table: &PrimeTable,
    m: u32,
    grid: &[u64],
    s_override: Option<u32>,
) -> Result<Vec<ConstructionRow>> {
    if grid.is_empty() {
        return Ok(Vec::new());
    }
    validate_grid(grid, 16)?;
    let spec = BSetSpec::primorial_blocks(m)?;
    let mut rows = Vec::with_capacity(grid.len());
    for &x in grid {
        let ell = ell_of(x, m)?;
        let (s, s_clamped) = match s_override {
            Some(s) => (s, false),
            None => {
                let c = default_s(x, m);
                (c.s, c.clamped)
            }
        };
        let part = pair_partition(table, m, s, x)?;
        let b_x = bset_count(table, &spec, x)?;
        let d_ell = table.primorial(ell)?;
        let t_prev = pow_checked(ell - 1, m).unwrap() as u32;
        let exp_prev = exp_floor(t_prev).unwrap();
        let b_lower_bound = (x as f64 - (t_prev as f64).exp()) / d_ell as f64 - 3.0;
        let lower_ok = (b_x as u128 + 3) * d_ell as u128 + exp_prev >= x as u128;
        let s_x = sumset_count(table, &spec, x)?;
        let ref_x_lllog = x_over_lllog(x)?;
        rows.push(ConstructionRow {
            x,
            m,
            ell,
            s,
            s_clamped,
            b_x,
            b_lower_bound,
            lower_ok,
            s_x,
            ref_x_lllog,
            s_ratio: s_x as f64 / ref_x_lllog,
            part1: part.part1,
            part2: part.part2,
            part3: part.part3,
            bound1: part.bound1,
            bound2: part.bound2,
            bound3: part.bound3,
            total_pairs: part.total_pairs,
        });
    }
    Ok(rows)
}

/// One row of the two-sided density diagnostic.
#[derive(Debug, Clone, Serialize)]
pub struct DensityRow {
    pub x: u64,
    pub s_x: u64,
    pub b_x: u64,
    /// S ln x / (x min(B, ln x)): the upper-bound constant.
    pub upper_ratio: f64,
    /// S ln x lnln x / (x min(B lnln x, ln x)): the lower-bound constant.
    pub lower_ratio: f64,
}

/// Measured constants of the two-sided sumset bounds
/// (x/ln x) min(B(x), ln x / lnln x) ≪ S(x) ≪ (x/ln x) min(B(x), ln x).
/// No pass/fail: the implied constants are unknown.
pub fn density_diagnostic(
    table: &PrimeTable,
    spec: &BSetSpec,
    grid: &[u64],
) -> Result<Vec<DensityRow>> {
    if grid.is_empty() {
        return Ok(Vec::new());
    }
    validate_grid(grid, 16)?;
    let mut rows = Vec::with_capacity(grid.len());
    for &x in grid {
        let s_x = sumset_count(table, spec, x)?;
        let b_x = bset_count(table, spec, x)?;
        let xf = x as f64;
        let lx = xf.ln();
        let llx = lx.ln();
        let upper_den = xf * (b_x as f64).min(lx);
        let lower_den = xf * (b_x as f64 * llx).min(lx);
        rows.push(DensityRow {
            x,
            s_x,
            b_x,
            upper_ratio: if upper_den > 0.0 {
                s_x as f64 * lx / upper_den
            } else {
                0.0
            },
            lower_ratio: if lower_den > 0.0 {
                s_x as f64 * lx * llx / lower_den
            } else {
                0.0
            },
        });
    }
    Ok(rows)
}
