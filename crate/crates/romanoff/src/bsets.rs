//! The B-set families: constructors, enumeration, counting, the c-condition
//! report, and the primorial-block construction.
//!
//! The block construction takes a parameter m >= 2 and sets, for j >= 1,
//!
//! ```text
//! B_j = { n : d_j | n } ∩ [exp(j^m), exp((j+1)^m))      d_j = p_1 p_2 ... p_j
//! B   = union of all B_j
//! ```
//!
//! Block interval endpoints are exact integers: lo is the smallest integer
//! at least exp(j^m) and hi the largest integer below exp((j+1)^m), both
//! obtained from an exact big-integer evaluation of floor(e^t) (see
//! [`exp_floor`]), so no floating-point boundary case can misplace a member.

use std::path::Path;

use num_bigint::BigUint;
use once_cell::sync::Lazy;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sieve::{PrimeTable, Rational};

/// Largest exponent t with e^t < 2^127; beyond this block boundaries are not
/// representable and operations report a range error instead of approximating.
pub const MAX_EXP_ARG: u32 = 88;

/// floor(e^t) for integer t, exactly, or None when t > [`MAX_EXP_ARG`].
///
/// Evaluated as floor(A^t / D^t) where A/D is the truncated Taylor series of
/// e with 64 terms (error below 1e-89), so the deficit of (A/D)^t against e^t
/// stays under 1e-50 for every supported t; e^t is irrational for t >= 1, so
/// the floor is unaffected.
pub fn exp_floor(t: u32) -> Option<u128> {
    static TABLE: Lazy<Vec<u128>> = Lazy::new(|| {
        let terms = 64u32;
        let mut a = BigUint::from(0u32);
        let mut term = BigUint::from(1u32);
        for k in (0..=terms).rev() {
            a += &term;
            if k > 0 {
                term *= k;
            }
        }
        let d = term; // terms!
        (0..=MAX_EXP_ARG)
            .map(|t| {
                let val = a.pow(t) / d.pow(t);
                u128::try_from(&val).expect("e^t fits u128 for t <= 88")
            })
            .collect()
    });
    TABLE.get(t as usize).copied()
}

/// Declarative description of a B-set.
#[derive(Debug, Clone, PartialEq)]
pub enum BSetSpec {
    /// {2^k : k >= 0} or {2^k : k >= 1}.
    PowersOfTwo { include_zero_exponent: bool },
    /// {2^(a^2) : a >= 0} or with a >= 1.
    TwoPowSquares { include_zero_exponent: bool },
    /// The primorial-block union described in the module docs; m >= 2.
    PrimorialBlocks { m: u32 },
    /// Explicit strictly increasing positive integers.
    Explicit { members: Vec<u64> },
}

impl BSetSpec {
    pub fn powers_of_two(include_zero_exponent: bool) -> BSetSpec {
        BSetSpec::PowersOfTwo {
            include_zero_exponent,
        }
    }

    pub fn two_pow_squares(include_zero_exponent: bool) -> BSetSpec {
        BSetSpec::TwoPowSquares {
            include_zero_exponent,
        }
    }

    pub fn primorial_blocks(m: u32) -> Result<BSetSpec> {
        if m < 2 {
            return Err(Error::domain(format!(
                "block parameter m must be >= 2, got {m}"
            )));
        }
        Ok(BSetSpec::PrimorialBlocks { m })
    }

    /// Validates that `members` is strictly increasing and positive.
    pub fn explicit(members: Vec<u64>) -> Result<BSetSpec> {
        for (i, &b) in members.iter().enumerate() {
            if b == 0 {
                return Err(Error::Input {
                    line: i + 1,
                    msg: "members must be >= 1".into(),
                });
            }
            if i > 0 && members[i - 1] >= b {
                return Err(Error::Input {
                    line: i + 1,
                    msg: format!("not strictly increasing: {} after {}", b, members[i - 1]),
                });
            }
        }
        Ok(BSetSpec::Explicit { members })
    }

    /// Load an explicit set from a file: ASCII decimal, one integer per
    /// line, strictly ascending; `#` starts a comment.
    pub fn explicit_from_file(path: impl AsRef<Path>) -> Result<BSetSpec> {
        let text = std::fs::read_to_string(path.as_ref())?;
        let mut members = Vec::new();
        let mut prev: Option<u64> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let b: u64 = body.parse().map_err(|e| Error::Input {
                line,
                msg: format!("expected a positive integer, got {body:?} ({e})"),
            })?;
            if b == 0 {
                return Err(Error::Input {
                    line,
                    msg: "members must be >= 1".into(),
                });
            }
            if let Some(p) = prev {
                if p >= b {
                    return Err(Error::Input {
                        line,
                        msg: format!("not strictly increasing: {b} after {p}"),
                    });
                }
            }
            prev = Some(b);
            members.push(b);
        }
        Ok(BSetSpec::Explicit { members })
    }
}

/// One primorial block B_j with exact integer interval endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub j: u32,
    pub d_j: u64,
    /// Smallest integer >= exp(j^m).
    pub lo: u128,
    /// Largest integer < exp((j+1)^m).
    pub hi: u128,
    pub cardinality: u128,
}

/// Largest block index j such that exp((j+1)^m) is representable, or None
/// when not even block 1 fits (m >= 7).
pub fn max_block_index(m: u32) -> Option<u32> {
    let mut j = 0u32;
    while pow_checked(j + 2, m).is_some_and(|t| t <= MAX_EXP_ARG as u64) {
        j += 1;
    }
    if j == 0 {
        None
    } else {
        Some(j)
    }
}

pub(crate) fn pow_checked(base: u32, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u64)?;
        if acc > u32::MAX as u64 {
            return None;
        }
    }
    Some(acc)
}

/// Block B_j for parameters (m, j), with exact endpoints and cardinality.
pub fn primorial_block(table: &PrimeTable, m: u32, j: u32) -> Result<Block> {
    if m < 2 {
        return Err(Error::domain(format!(
            "block parameter m must be >= 2, got {m}"
        )));
    }
    if j < 1 {
        return Err(Error::domain("block index j must be >= 1".to_string()));
    }
    let max_j = max_block_index(m).ok_or(Error::BlockOverflow { m, j, max_j: 0 })?;
    let t_hi = pow_checked(j + 1, m).filter(|&t| t <= MAX_EXP_ARG as u64);
    let (Some(t_hi), true) = (t_hi, j <= max_j) else {
        return Err(Error::BlockOverflow { m, j, max_j });
    };
    let t_lo = pow_checked(j, m).expect("j^m <= (j+1)^m");
    let lo = exp_floor(t_lo as u32).unwrap() + 1;
    let hi = exp_floor(t_hi as u32).unwrap();
    let d_j = table.primorial(j)?;
    let d = d_j as u128;
    let cardinality = hi / d - (lo - 1) / d;
    Ok(Block {
        j,
        d_j,
        lo,
        hi,
        cardinality,
    })
}

/// Per-block bounds clamped to a u64 search limit x; None when the block
/// starts beyond x. Blocks whose upper boundary exceeds u64 are truncated at
/// x, which loses nothing for counting members <= x.
pub(crate) fn clamped_block(
    table: &PrimeTable,
    m: u32,
    j: u32,
    x: u64,
) -> Result<Option<(u64, u64, u64)>> {
    let t_lo = match pow_checked(j, m) {
        Some(t) if t <= MAX_EXP_ARG as u64 => t as u32,
        _ => return Ok(None), // lo >= e^89 > u64::MAX >= x
    };
    let lo = exp_floor(t_lo).unwrap() + 1;
    if lo > x as u128 {
        return Ok(None);
    }
    let hi = match pow_checked(j + 1, m) {
        Some(t) if t <= MAX_EXP_ARG as u64 => exp_floor(t as u32).unwrap().min(x as u128),
        _ => x as u128,
    };
    let d_j = table.primorial(j)?;
    Ok(Some((lo as u64, hi as u64, d_j)))
}

/// All members of B not exceeding x, ascending. `x = 0` yields the empty set.
pub fn enumerate_bset(table: &PrimeTable, spec: &BSetSpec, x: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    match spec {
        BSetSpec::PowersOfTwo {
            include_zero_exponent,
        } => {
            let mut b: u64 = if *include_zero_exponent { 1 } else { 2 };
            while b <= x {
                out.push(b);
                if b > x / 2 {
                    break;
                }
                b *= 2;
            }
        }
        BSetSpec::TwoPowSquares {
            include_zero_exponent,
        } => {
            let a0 = if *include_zero_exponent { 0u32 } else { 1 };
            for a in a0..=7 {
                let e = a * a;
                if e >= 64 {
                    break;
                }
                let b = 1u64 << e;
                if b <= x {
                    out.push(b);
                }
            }
        }
        BSetSpec::PrimorialBlocks { m } => {
            if *m < 2 {
                return Err(Error::domain(format!(
                    "block parameter m must be >= 2, got {m}"
                )));
            }
            let mut j = 1u32;
            while let Some((lo, hi, d)) = clamped_block(table, *m, j, x)? {
                let mut k = lo.div_ceil(d);
                while k * d <= hi {
                    out.push(k * d);
                    k += 1;
                }
                j += 1;
            }
        }
        BSetSpec::Explicit { members } => {
            out.extend(members.iter().copied().take_while(|&b| b <= x));
        }
    }
    Ok(out)
}

/// |B ∩ [1, x]|. For the block construction this is a closed form per block
/// rather than an enumeration.
pub fn bset_count(table: &PrimeTable, spec: &BSetSpec, x: u64) -> Result<u64> {
    match spec {
        BSetSpec::PowersOfTwo {
            include_zero_exponent,
        } => {
            if x == 0 {
                return Ok(0);
            }
            // #{k >= k0 : 2^k <= x} = floor(log2 x) + 1 - k0
            let top = 63 - x.leading_zeros() as u64;
            Ok(top + if *include_zero_exponent { 1 } else { 0 })
        }
        BSetSpec::TwoPowSquares { .. } => Ok(enumerate_bset(table, spec, x)?.len() as u64),
        BSetSpec::PrimorialBlocks { m } => {
            if *m < 2 {
                return Err(Error::domain(format!(
                    "block parameter m must be >= 2, got {m}"
                )));
            }
            let mut total = 0u64;
            let mut j = 1u32;
            while let Some((lo, hi, d)) = clamped_block(table, *m, j, x)? {
                total += hi / d - (lo - 1) / d;
                j += 1;
            }
            Ok(total)
        }
        BSetSpec::Explicit { members } => Ok(members.partition_point(|&b| b <= x) as u64),
    }
}

/// One grid point of a c-condition report.
#[derive(Debug, Clone, Serialize)]
pub struct CcondRow {
    pub x: u64,
    pub b_cx: u64,
    pub b_x: u64,
    pub ratio: f64,
}

/// Measured B(cx)/B(x) over a grid; ratios are exact rationals b_cx / b_x.
#[derive(Debug, Clone)]
pub struct CcondReport {
    pub c: f64,
    pub rows: Vec<CcondRow>,
    pub min_ratio: Rational,
}

/// Evaluate B(cx)/B(x) over the grid (cx is floored to an integer). Errors
/// if the grid is empty, not ascending, or if B(x) = 0 somewhere.
pub fn c_condition_report(
    table: &PrimeTable,
    spec: &BSetSpec,
    c: f64,
    grid: &[u64],
) -> Result<CcondReport> {
    if !(c > 0.0 && c < 1.0) {
        return Err(Error::domain(format!("c must lie in (0,1), got {c}")));
    }
    validate_grid(grid, 1)?;
    let mut rows = Vec::with_capacity(grid.len());
    let mut min_ratio: Option<Rational> = None;
    for &x in grid {
        let b_x = bset_count(table, spec, x)?;
        if b_x == 0 {
            return Err(Error::domain(format!(
                "B({x}) = 0; c-condition ratio undefined"
            )));
        }
        let cx = (c * x as f64).floor() as u64;
        let b_cx = bset_count(table, spec, cx)?;
        let ratio = Rational::new(b_cx as u128, b_x as u128);
        min_ratio = Some(match min_ratio {
            None => ratio,
            // a/b < c/d  ⟺  a d < c b
            Some(cur) if ratio.numer * cur.denom < cur.numer * ratio.denom => ratio,
            Some(cur) => cur,
        });
        rows.push(CcondRow {
            x,
            b_cx,
            b_x,
            ratio: b_cx as f64 / b_x as f64,
        });
    }
    Ok(CcondReport {
        c,
        rows,
        min_ratio: min_ratio.unwrap(),
    })
}

/// Block cardinalities |B_1| .. |B_jmax| and the smallest j0 from which the
/// sequence is strictly increasing through jmax.
#[derive(Debug, Clone)]
pub struct J0Report {
    pub m: u32,
    pub j0: u32,
    pub cardinalities: Vec<u128>,
}

pub fn find_j0(table: &PrimeTable, m: u32, jmax: u32) -> Result<J0Report> {
    if jmax < 1 {
        return Err(Error::domain("jmax must be >= 1".to_string()));
    }
    let cardinalities: Vec<u128> = (1..=jmax)
        .map(|j| primorial_block(table, m, j).map(|b| b.cardinality))
        .collect::<Result<_>>()?;
    let mut j0 = jmax;
    for j in (1..jmax).rev() {
        // indices are 1-based; cardinalities[j-1] is |B_j|
        if cardinalities[(j - 1) as usize] < cardinalities[j as usize] {
            j0 = j;
        } else {
            break;
        }
    }
    Ok(J0Report {
        m,
        j0,
        cardinalities,
    })
}

/// Shared grid validation: ascending, every entry >= min.
pub(crate) fn validate_grid(grid: &[u64], min: u64) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::domain("grid must be nonempty".to_string()));
    }
    for (i, &x) in grid.iter().enumerate() {
        if x < min {
            return Err(Error::domain(format!("grid value {x} below minimum {min}")));
        }
        if i > 0 && grid[i - 1] >= x {
            return Err(Error::domain("grid must be strictly ascending".to_string()));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sieve::build_prime_table;
    use once_cell::sync::Lazy;
    use proptest::prelude::*;

    static TABLE: Lazy<PrimeTable> = Lazy::new(|| build_prime_table(1_000_000).unwrap());

    #[test]
    fn exp_floor_pins() {
        assert_eq!(exp_floor(0), Some(1));
        assert_eq!(exp_floor(1), Some(2));
        assert_eq!(exp_floor(4), Some(54));
        assert_eq!(exp_floor(9), Some(8103));
        assert_eq!(exp_floor(16), Some(8_886_110));
        assert_eq!(exp_floor(89), None);
    }

    #[test]
    fn exp_floor_tracks_f64_everywhere() {
        for t in 0..=MAX_EXP_ARG {
            let exact = exp_floor(t).unwrap() as f64;
            let float = (t as f64).exp();
            assert!(
                (exact - float).abs() <= 1e-9 * float + 1.0,
                "t={t}: exact {exact} vs f64 {float}"
            );
        }
    }

    #[test]
    fn exp_floor_term_count_is_stable() {
        // Re-derive with a longer series; the floors must agree.
        let terms = 96u32;
        let mut a = BigUint::from(0u32);
        let mut term = BigUint::from(1u32);
        for k in (0..=terms).rev() {
            a += &term;
            if k > 0 {
                term *= k;
            }
        }
        let d = term;
        for t in 0..=MAX_EXP_ARG {
            let val = u128::try_from(&(a.pow(t) / d.pow(t))).unwrap();
            assert_eq!(exp_floor(t), Some(val), "t={t}");
        }
    }

    #[test]
    fn block_pins() {
        let b = primorial_block(&TABLE, 2, 1).unwrap();
        assert_eq!((b.d_j, b.lo, b.hi, b.cardinality), (2, 3, 54, 26));

        let b = primorial_block(&TABLE, 2, 2).unwrap();
        assert_eq!((b.d_j, b.lo, b.hi, b.cardinality), (6, 55, 8103, 1341));

        let b = primorial_block(&TABLE, 3, 1).unwrap();
        assert_eq!((b.d_j, b.lo, b.hi), (2, 3, 2980));
        assert_eq!(b.cardinality, 1489);
    }

    #[test]
    fn block_cardinality_matches_enumeration() {
        for (m, j) in [(2u32, 1u32), (2, 2), (3, 1)] {
            let b = primorial_block(&TABLE, m, j).unwrap();
            let mut count = 0u128;
            let mut n = b.lo;
            while n <= b.hi {
                if n.is_multiple_of(b.d_j as u128) {
                    count += 1;
                }
                n += 1;
            }
            assert_eq!(count, b.cardinality, "m={m} j={j}");
        }
    }

    #[test]
    fn block_overflow_carries_max_j() {
        // m=2: (j+1)^2 <= 88 allows j <= 8.
        assert_eq!(max_block_index(2), Some(8));
        assert_eq!(max_block_index(3), Some(3));
        assert_eq!(max_block_index(7), None);
        match primorial_block(&TABLE, 2, 9) {
            Err(Error::BlockOverflow {
                m: 2,
                j: 9,
                max_j: 8,
            }) => {}
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    proptest! {
        #[test]
        fn blocks_are_disjoint_and_adjacent_ordered(m in 2u32..=4, j in 1u32..=2) {
            if let (Ok(a), Ok(b)) = (
                primorial_block(&TABLE, m, j),
                primorial_block(&TABLE, m, j + 1),
            ) {
                prop_assert!(a.hi < b.lo);
            }
        }

        #[test]
        fn count_equals_enumeration_len(x in 0u64..=1_000_000) {
            for spec in [
                BSetSpec::powers_of_two(true),
                BSetSpec::powers_of_two(false),
                BSetSpec::two_pow_squares(true),
                BSetSpec::primorial_blocks(2).unwrap(),
                BSetSpec::primorial_blocks(3).unwrap(),
            ] {
                let n = enumerate_bset(&TABLE, &spec, x).unwrap().len() as u64;
                prop_assert_eq!(bset_count(&TABLE, &spec, x).unwrap(), n);
            }
        }

        #[test]
        fn count_is_nondecreasing(x in 0u64..=999_999) {
            let spec = BSetSpec::primorial_blocks(2).unwrap();
            prop_assert!(
                bset_count(&TABLE, &spec, x).unwrap() <= bset_count(&TABLE, &spec, x + 1).unwrap()
            );
        }
    }

    #[test]
    fn membership_is_consistent_with_blocks() {
        let spec = BSetSpec::primorial_blocks(2).unwrap();
        let members = enumerate_bset(&TABLE, &spec, 20_000).unwrap();
        let set: std::collections::HashSet<u64> = members.iter().copied().collect();
        assert_eq!(set.len(), members.len(), "duplicates");
        for n in 1..=20_000u64 {
            let mut in_some_block = false;
            for j in 1..=3u32 {
                let b = primorial_block(&TABLE, 2, j).unwrap();
                if (b.lo..=b.hi).contains(&(n as u128)) && n % b.d_j == 0 {
                    in_some_block = true;
                }
            }
            assert_eq!(set.contains(&n), in_some_block, "n={n}");
        }
    }

    #[test]
    fn enumerate_pins() {
        assert_eq!(
            enumerate_bset(&TABLE, &BSetSpec::powers_of_two(true), 20).unwrap(),
            vec![1, 2, 4, 8, 16]
        );
        assert_eq!(
            enumerate_bset(&TABLE, &BSetSpec::powers_of_two(false), 20).unwrap(),
            vec![2, 4, 8, 16]
        );
        assert_eq!(
            enumerate_bset(&TABLE, &BSetSpec::two_pow_squares(true), 600).unwrap(),
            vec![1, 2, 16, 512]
        );

        let spec = BSetSpec::primorial_blocks(2).unwrap();
        let members = enumerate_bset(&TABLE, &spec, 100).unwrap();
        let mut expect: Vec<u64> = (2..=27).map(|k| 2 * k).collect(); // 4..54
        expect.extend([60, 66, 72, 78, 84, 90, 96]);
        assert_eq!(members, expect);
        assert_eq!(bset_count(&TABLE, &spec, 100).unwrap(), 33);
    }

    #[test]
    fn count_pins_at_edges() {
        assert_eq!(
            bset_count(&TABLE, &BSetSpec::powers_of_two(true), 1).unwrap(),
            1
        );
        assert_eq!(
            bset_count(&TABLE, &BSetSpec::powers_of_two(false), 1).unwrap(),
            0
        );
        for spec in [
            BSetSpec::powers_of_two(true),
            BSetSpec::two_pow_squares(true),
            BSetSpec::primorial_blocks(2).unwrap(),
        ] {
            assert_eq!(bset_count(&TABLE, &spec, 0).unwrap(), 0);
        }
    }

    #[test]
    fn growth_lower_bound_holds_on_grid() {
        // B(x) >= (x - exp((l-1)^m)) / d_l - 3, checked in exact integers:
        // (B(x) + 3) d_l + floor(exp((l-1)^m)) >= x.
        for m in [2u32, 3] {
            let spec = BSetSpec::primorial_blocks(m).unwrap();
            for &x in &[1_000u64, 5_000, 20_000, 100_000, 1_000_000] {
                let ell = crate::analysis::ell_of(x, m).unwrap();
                let bx = bset_count(&TABLE, &spec, x).unwrap();
                let d_ell = TABLE.primorial(ell).unwrap();
                let t = pow_checked(ell - 1, m).unwrap() as u32;
                let lhs = (bx as u128 + 3) * d_ell as u128 + exp_floor(t).unwrap();
                assert!(lhs >= x as u128, "m={m} x={x}");
            }
        }
    }

    #[test]
    fn explicit_round_trip() {
        let dir = std::env::temp_dir();
        let path = dir.join("romanoff_bset_roundtrip.txt");
        std::fs::write(&path, "# header comment\n3\n5 # inline\n\n10\n").unwrap();
        let spec = BSetSpec::explicit_from_file(&path).unwrap();
        let members = enumerate_bset(&TABLE, &spec, 100).unwrap();
        assert_eq!(members, vec![3, 5, 10]);

        // Re-ingest what we enumerate: identical set.
        let text: String = members.iter().map(|b| format!("{b}\n")).collect();
        std::fs::write(&path, text).unwrap();
        let again = BSetSpec::explicit_from_file(&path).unwrap();
        assert_eq!(spec, again);
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn explicit_errors_carry_line_numbers() {
        let dir = std::env::temp_dir();
        let path = dir.join("romanoff_bset_bad.txt");
        std::fs::write(&path, "3\n5\n4\n").unwrap();
        match BSetSpec::explicit_from_file(&path) {
            Err(Error::Input { line: 3, .. }) => {}
            other => panic!("expected line-3 input error, got {other:?}"),
        }
        std::fs::write(&path, "3\nxyz\n").unwrap();
        match BSetSpec::explicit_from_file(&path) {
            Err(Error::Input { line: 2, .. }) => {}
            other => panic!("expected line-2 input error, got {other:?}"),
        }
        std::fs::remove_file(&path).ok();
    }

    #[test]
    fn ccond_pins() {
        let r =
            c_condition_report(&TABLE, &BSetSpec::powers_of_two(true), 0.5, &[16, 1024]).unwrap();
        assert_eq!((r.rows[0].b_cx, r.rows[0].b_x), (4, 5));
        assert_eq!((r.rows[1].b_cx, r.rows[1].b_x), (10, 11));
        assert_eq!(r.min_ratio, Rational::new(4, 5));

        let uniform = BSetSpec::explicit((1..=100).collect()).unwrap();
        let r = c_condition_report(&TABLE, &uniform, 0.5, &[100]).unwrap();
        assert_eq!(r.min_ratio, Rational::new(1, 2));

        let blocks = BSetSpec::primorial_blocks(2).unwrap();
        let r = c_condition_report(&TABLE, &blocks, 0.5, &[1_000_000]).unwrap();
        let min = r.min_ratio;
        assert!(min.numer * 2 >= min.denom, "B(x/2) >= B(x)/2 failed: {min}");
    }

    #[test]
    fn ccond_rejects_empty_counts() {
        let spec = BSetSpec::powers_of_two(false);
        assert!(matches!(
            c_condition_report(&TABLE, &spec, 0.5, &[1]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn j0_windows() {
        let r = find_j0(&TABLE, 2, 5).unwrap();
        assert_eq!(r.cardinalities[0], 26);
        assert_eq!(r.cardinalities[1], 1341);
        assert_eq!(r.cardinalities[2], 295_933);
        assert!(r.cardinalities.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(r.j0, 1);

        let r = find_j0(&TABLE, 3, 3).unwrap();
        assert_eq!(r.cardinalities.len(), 3);
        assert_eq!(r.cardinalities[0], 1489);
        assert_eq!(r.j0, 1);

        let r = find_j0(&TABLE, 2, 1).unwrap();
        assert_eq!(r.j0, 1);
    }
}
