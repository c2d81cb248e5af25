//! Prime infrastructure: a segmented, odd-only sieve of Eratosthenes with
//! cumulative counts for fast pi(x) queries, plus the small analytic
//! quantities built on top of it (Chebyshev theta, primorials, Mertens
//! products, prime-pair counts, radical products).
//!
//! The bitmap stores one bit per odd integer: bit k represents 2k+1, so a
//! table up to `limit` costs about `limit/16` bytes. Construction sieves
//! segment by segment (default segment 2^18 bits) so the auxiliary memory
//! beyond the output bitmap is O(sqrt(limit) + segment).

use crate::error::{Error, Result};

/// Bits per cumulative-count chunk (64 words of 64 bits).
const CHUNK_WORDS: usize = 64;
const CHUNK_BITS: usize = CHUNK_WORDS * 64;

/// Smallest accepted sieving segment, in bits.
pub const MIN_SEGMENT_BITS: usize = 1 << 12;
/// Largest accepted sieving segment, in bits.
pub const MAX_SEGMENT_BITS: usize = 1 << 24;

/// Construction knobs for [`PrimeTable`].
#[derive(Debug, Clone)]
pub struct SieveOptions {
    /// Bits sieved per segment; must lie in
    /// [`MIN_SEGMENT_BITS`, `MAX_SEGMENT_BITS`].
    pub segment_bits: usize,
    /// Hard cap on the table's allocation (bitmap + counts + base sieve).
    pub memory_budget_bytes: u64,
}

impl Default for SieveOptions {
    fn default() -> Self {
        SieveOptions {
            segment_bits: 1 << 18,
            memory_budget_bytes: 256 << 20,
        }
    }
}

/// Immutable primality table over `[2, limit]`.
///
/// Safe for concurrent reads; every query is a pure function of the table.
/// Limits of 2^33 and beyond work as long as the memory budget allows
/// roughly `limit/16` bytes for the bitmap.
pub struct PrimeTable {
    limit: u64,
    /// Bit k set ⟺ 2k+1 is prime (bit 0, the number 1, is always clear).
    words: Vec<u64>,
    /// `cum[i]` = number of set bits in `words[..i * CHUNK_WORDS]`.
    cum: Vec<u64>,
    /// Number of valid bits (= number of odd integers ≤ limit).
    nbits: usize,
}

impl std::fmt::Debug for PrimeTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PrimeTable")
            .field("limit", &self.limit)
            .field("words", &self.words.len())
            .finish()
    }
}

/// Build a table with default options. See [`PrimeTable::build_with`].
pub fn build_prime_table(limit: u64) -> Result<PrimeTable> {
    PrimeTable::build_with(limit, &SieveOptions::default())
}

impl PrimeTable {
    pub fn build(limit: u64) -> Result<PrimeTable> {
        build_prime_table(limit)
    }

    pub fn build_with(limit: u64, opts: &SieveOptions) -> Result<PrimeTable> {
        if limit < 2 {
            return Err(Error::domain(format!(
                "sieve limit must be >= 2, got {limit}"
            )));
        }
        if !(MIN_SEGMENT_BITS..=MAX_SEGMENT_BITS).contains(&opts.segment_bits) {
            return Err(Error::domain(format!(
                "segment_bits must be in [{MIN_SEGMENT_BITS}, {MAX_SEGMENT_BITS}], got {}",
                opts.segment_bits
            )));
        }

        let nbits = limit.div_ceil(2) as usize;
        let nwords = nbits.div_ceil(64);
        let nchunks = nwords.div_ceil(CHUNK_WORDS);
        let sqrt_limit = limit.isqrt();

        let estimated = 8 * (nwords as u64 + nchunks as u64 + 1) + (sqrt_limit + 1);
        if estimated > opts.memory_budget_bytes {
            return Err(Error::resource(format!(
                "sieving to {limit} needs about {estimated} bytes, over the memory budget of {} bytes",
                opts.memory_budget_bytes
            )));
        }

        // Base primes up to sqrt(limit) from a plain bool sieve.
        let base = simple_bool_sieve(sqrt_limit);
        let base_odd: Vec<u64> = (3..=sqrt_limit)
            .step_by(2)
            .filter(|&n| base[n as usize])
            .collect();

        let mut words = vec![u64::MAX; nwords];
        // 1 is not prime.
        words[0] &= !1u64;

        // next_strike[i]: bit index of the next multiple of base_odd[i] to clear.
        // Odd multiples of p are 2p apart, i.e. p bits apart; start at p^2.
        let mut next_strike: Vec<usize> =
            base_odd.iter().map(|&p| ((p * p) / 2) as usize).collect();

        let seg_bits = opts.segment_bits;
        let mut seg_start = 0usize;
        while seg_start < nbits {
            let seg_end = (seg_start + seg_bits).min(nbits);
            for (i, &p) in base_odd.iter().enumerate() {
                let step = p as usize;
                let mut k = next_strike[i];
                while k < seg_end {
                    words[k / 64] &= !(1u64 << (k % 64));
                    k += step;
                }
                next_strike[i] = k;
            }
            seg_start = seg_end;
        }

        // Clear the tail of the last word so popcounts are exact.
        let tail = nbits % 64;
        if tail != 0 {
            words[nwords - 1] &= (1u64 << tail) - 1;
        }

        let mut cum = Vec::with_capacity(nchunks + 1);
        cum.push(0u64);
        let mut running = 0u64;
        for chunk in words.chunks(CHUNK_WORDS) {
            running += chunk.iter().map(|w| w.count_ones() as u64).sum::<u64>();
            cum.push(running);
        }

        Ok(PrimeTable {
            limit,
            words,
            cum,
            nbits,
        })
    }

    /// Inclusive upper bound of the sieved range.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Primality of n. Panics if `n > limit`.
    pub fn is_prime(&self, n: u64) -> bool {
        assert!(
            n <= self.limit,
            "is_prime({n}) beyond sieve limit {}",
            self.limit
        );
        if n == 2 {
            return true;
        }
        if n < 2 || n.is_multiple_of(2) {
            return false;
        }
        let k = (n / 2) as usize;
        self.words[k / 64] & (1u64 << (k % 64)) != 0
    }

    fn check_range(&self, x: u64, what: &str) -> Result<()> {
        if x > self.limit {
            return Err(Error::range(format!(
                "{what}({x}) beyond sieve limit {}",
                self.limit
            )));
        }
        Ok(())
    }

    /// Number of set bits among the first `nb` bits.
    fn count_bits_below(&self, nb: usize) -> u64 {
        let nb = nb.min(self.nbits);
        let full_chunks = nb / CHUNK_BITS;
        let mut count = self.cum[full_chunks];
        let mut w = full_chunks * CHUNK_WORDS;
        let last_word = nb / 64;
        while w < last_word {
            count += self.words[w].count_ones() as u64;
            w += 1;
        }
        let rem = nb % 64;
        if rem != 0 && last_word < self.words.len() {
            count += (self.words[last_word] & ((1u64 << rem) - 1)).count_ones() as u64;
        }
        count
    }

    /// pi(x): the number of primes ≤ x.
    pub fn prime_count(&self, x: u64) -> Result<u64> {
        self.check_range(x, "prime_count")?;
        if x < 2 {
            return Ok(0);
        }
        // Odd primes ≤ x occupy bits 0..=(x-1)/2, plus one for the prime 2.
        Ok(self.count_bits_below(x.div_ceil(2) as usize) + 1)
    }

    /// Iterate primes in ascending order.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        std::iter::once(2).chain(
            self.words
                .iter()
                .enumerate()
                .flat_map(|(wi, &w)| WordBits {
                    word: w,
                    base: wi * 64,
                })
                .map(|k| 2 * k as u64 + 1),
        )
    }

    /// theta(x) = sum of ln p over primes p ≤ x, accumulated in ascending
    /// order with Kahan compensation. The result is accurate to a few ulps
    /// of the sum (absolute error under 1e-9 up to x ≈ 10^7; ulp-limited,
    /// about 2e-8, near x = 10^8).
    pub fn chebyshev_theta(&self, x: u64) -> Result<f64> {
        self.check_range(x, "chebyshev_theta")?;
        let mut acc = Kahan::default();
        for p in self.primes().take_while(|&p| p <= x) {
            acc.add((p as f64).ln());
        }
        Ok(acc.value())
    }

    /// The i-th prime, 1-indexed (nth_prime(1) = 2).
    pub fn nth_prime(&self, i: u64) -> Result<u64> {
        if i == 0 {
            return Err(Error::domain("nth_prime index is 1-based".to_string()));
        }
        if i == 1 {
            return Ok(2);
        }
        let target = i - 1; // rank among odd primes
        let total = *self.cum.last().unwrap();
        if target > total {
            return Err(Error::range(format!(
                "nth_prime({i}) exceeds the table (only {} primes ≤ {})",
                total + 1,
                self.limit
            )));
        }
        // Largest chunk boundary with fewer than `target` bits before it;
        // the target-th set bit lives inside that chunk.
        let chunk = self.cum.partition_point(|&v| v < target) - 1;
        let mut seen = self.cum[chunk];
        let mut w = chunk * CHUNK_WORDS;
        loop {
            let ones = self.words[w].count_ones() as u64;
            if seen + ones >= target {
                let mut word = self.words[w];
                let mut need = target - seen;
                loop {
                    let tz = word.trailing_zeros() as usize;
                    need -= 1;
                    if need == 0 {
                        let k = w * 64 + tz;
                        return Ok(2 * k as u64 + 1);
                    }
                    word &= word - 1;
                }
            }
            seen += ones;
            w += 1;
        }
    }

    /// d_k = p_1 p_2 ... p_k, exactly. Errors if the product leaves u64.
    pub fn primorial(&self, k: u32) -> Result<u64> {
        if k == 0 {
            return Err(Error::domain("primorial index must be >= 1".to_string()));
        }
        let mut product: u64 = 1;
        let mut taken = 0u32;
        for p in self.primes() {
            product = product
                .checked_mul(p)
                .ok_or(Error::PrimorialOverflow { k })?;
            taken += 1;
            if taken == k {
                return Ok(product);
            }
        }
        Err(Error::range(format!(
            "primorial({k}) needs the {k}-th prime, beyond sieve limit {}",
            self.limit
        )))
    }

    /// prod_{p ≤ y} (1 - 1/p), ascending. Requires y ≥ 2.
    pub fn mertens_product(&self, y: u64) -> Result<f64> {
        if y < 2 {
            return Err(Error::domain(format!(
                "mertens_product needs y >= 2, got {y}"
            )));
        }
        self.check_range(y, "mertens_product")?;
        let mut product = 1.0f64;
        for p in self.primes().take_while(|&p| p <= y) {
            product *= 1.0 - 1.0 / p as f64;
        }
        Ok(product)
    }

    /// Number of prime pairs (p, q) with q - p = h and q ≤ x, i.e. both
    /// members ≤ x, together with the sieve-bound reference value
    /// (x / ln^2 x) * prod_{p|h}(1 + 1/p) taken with constant 1.
    pub fn prime_pair_count(&self, x: u64, h: u64) -> Result<PairCountResult> {
        if h == 0 || !h.is_multiple_of(2) {
            return Err(Error::domain(format!(
                "pair gap must be even and nonzero, got {h}"
            )));
        }
        self.check_range(x, "prime_pair_count")?;
        let count = self.pair_count_upto(x, h);
        let bound_rhs = if x >= 2 {
            let lx = (x as f64).ln();
            x as f64 / (lx * lx) * radical_product(h).to_f64()
        } else {
            0.0
        };
        Ok(PairCountResult {
            x,
            h,
            count,
            bound_rhs,
        })
    }

    /// #{(p, q): p, q prime, q - p = h, q ≤ y} for even h ≥ 2.
    ///
    /// Both members are odd (q = h + 2 would be even), so this scans odd
    /// prime bits q ∈ (h, y] and tests q - h.
    pub(crate) fn pair_count_upto(&self, y: u64, h: u64) -> u64 {
        debug_assert!(h >= 2 && h.is_multiple_of(2));
        if y <= h {
            return 0;
        }
        let mut count = 0u64;
        // q odd prime, h < q ≤ y, q - h prime. Bit 0 (the number 1) is
        // always clear, so q - h = 1 is handled for free.
        let lo_bit = (h / 2) as usize; // q > h ⟺ bit(q) ≥ bit(h+1) = h/2
        let hi_bit = y.div_ceil(2) as usize; // bits < hi_bit ⟺ q ≤ y
        for wi in lo_bit / 64..self.words.len() {
            let mut w = self.words[wi];
            if wi == lo_bit / 64 {
                w &= !0u64 << (lo_bit % 64);
            }
            while w != 0 {
                let k = wi * 64 + w.trailing_zeros() as usize;
                if k >= hi_bit {
                    return count;
                }
                let q = 2 * k as u64 + 1;
                let j = ((q - h) / 2) as usize;
                if self.words[j / 64] & (1u64 << (j % 64)) != 0 {
                    count += 1;
                }
                w &= w - 1;
            }
        }
        count
    }

    /// Same count as [`Self::pair_count_upto`] via a whole-word AND of the odd
    /// bitmap with itself shifted by h/2 bits. O(y/64) regardless of density;
    /// used by the moment machinery where one call per b-pair is made.
    pub(crate) fn pair_count_word_and(&self, y: u64, h: u64) -> u64 {
        debug_assert!(h >= 2 && h.is_multiple_of(2));
        if y <= h {
            return 0;
        }
        let shift = (h / 2) as usize;
        let (s_w, s_b) = (shift / 64, shift % 64);
        let hi_bit = y.div_ceil(2) as usize; // count bits strictly below
        let last_word = (hi_bit - 1) / 64;
        let mut count = 0u64;
        for wi in 0..=last_word.min(self.words.len() - 1) {
            let a = if wi >= s_w { self.words[wi - s_w] } else { 0 };
            let shifted = if s_b == 0 {
                a
            } else {
                let b = if wi > s_w {
                    self.words[wi - s_w - 1]
                } else {
                    0
                };
                (a << s_b) | (b >> (64 - s_b))
            };
            let mut v = self.words[wi] & shifted;
            if wi == last_word && !hi_bit.is_multiple_of(64) {
                v &= (1u64 << (hi_bit % 64)) - 1;
            }
            count += v.count_ones() as u64;
        }
        count
    }

    /// Prime pairs at any positive gap, both members ≤ y. Odd gaps force the
    /// smaller member to be 2, so the count is 0 or 1.
    pub(crate) fn pair_count_any(&self, y: u64, h: u64) -> u64 {
        debug_assert!(h >= 1);
        if h % 2 == 1 {
            u64::from(2 + h <= y && self.is_prime(2 + h))
        } else {
            self.pair_count_word_and(y, h)
        }
    }

    /// Dense bitmap with bit n set ⟺ n prime, for n ≤ x. Used by the
    /// shift-or sumset counters.
    pub(crate) fn full_bitmap(&self, x: u64) -> Vec<u64> {
        debug_assert!(x <= self.limit);
        let nbits = x as usize + 1;
        let mut bits = vec![0u64; nbits.div_ceil(64)];
        if x >= 2 {
            bits[0] |= 1 << 2;
        }
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let k = wi * 64 + w.trailing_zeros() as usize;
                let n = 2 * k + 1;
                if n as u64 > x {
                    return bits;
                }
                bits[n / 64] |= 1u64 << (n % 64);
                w &= w - 1;
            }
        }
        bits
    }
}

/// Result of a prime-pair count: the exact count and the reference bound.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct PairCountResult {
    pub x: u64,
    pub h: u64,
    pub count: u64,
    pub bound_rhs: f64,
}

impl PairCountResult {
    /// Measured count / bound_rhs; the implied constant of the sieve bound.
    pub fn ratio(&self) -> f64 {
        if self.bound_rhs > 0.0 {
            self.count as f64 / self.bound_rhs
        } else {
            0.0
        }
    }
}

/// Exact nonnegative rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    pub numer: u128,
    pub denom: u128,
}

impl Rational {
    pub fn new(numer: u128, denom: u128) -> Rational {
        assert!(denom != 0, "zero denominator");
        let g = gcd_u128(numer, denom);
        Rational {
            numer: numer / g,
            denom: denom / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.numer as f64 / self.denom as f64
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b.max(1);
    }
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// prod_{p | h} (1 + 1/p) as an exact reduced rational, by trial division.
/// The empty product (h = 1) is 1/1.
pub fn radical_product(h: u64) -> Rational {
    assert!(h >= 1, "radical_product needs h >= 1");
    let mut numer: u128 = 1;
    let mut denom: u128 = 1;
    let mut rest = h;
    let mut push = |p: u64| {
        numer *= p as u128 + 1;
        denom *= p as u128;
    };
    if rest.is_multiple_of(2) {
        push(2);
        while rest.is_multiple_of(2) {
            rest /= 2;
        }
    }
    let mut d = 3u64;
    while d as u128 * d as u128 <= rest as u128 {
        if rest.is_multiple_of(d) {
            push(d);
            while rest.is_multiple_of(d) {
                rest /= d;
            }
        }
        d += 2;
    }
    if rest > 1 {
        push(rest);
    }
    Rational::new(numer, denom)
}

/// Compensated (Kahan) accumulator.
#[derive(Default)]
pub(crate) struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    pub(crate) fn add(&mut self, v: f64) {
        let y = v - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum
    }
}

/// Plain bool sieve up to n inclusive; independent of the segmented path
/// and also used by tests as a cross-check.
pub(crate) fn simple_bool_sieve(n: u64) -> Vec<bool> {
    let n = n as usize;
    let mut is_prime = vec![true; n + 1];
    if n >= 1 {
        is_prime[0] = false;
        is_prime[1] = false;
    } else {
        is_prime[0] = false;
    }
    let mut i = 2usize;
    while i * i <= n {
        if is_prime[i] {
            let mut j = i * i;
            while j <= n {
                is_prime[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is_prime
}

struct WordBits {
    word: u64,
    base: usize,
}

impl Iterator for WordBits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_prime_trial(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2u64;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn small_tables() {
        let t = build_prime_table(10).unwrap();
        let primes: Vec<u64> = t.primes().collect();
        assert_eq!(primes, vec![2, 3, 5, 7]);

        let t2 = build_prime_table(2).unwrap();
        assert_eq!(t2.primes().collect::<Vec<_>>(), vec![2]);
        assert!(t2.is_prime(2));
        assert!(!t2.is_prime(1));
    }

    #[test]
    fn limit_below_two_rejected() {
        assert!(matches!(build_prime_table(1), Err(Error::Domain(_))));
        assert!(matches!(build_prime_table(0), Err(Error::Domain(_))));
    }

    #[test]
    fn prime_count_matches_trial_division_exhaustively() {
        let t = build_prime_table(100_000).unwrap();
        let mut pi = 0u64;
        for x in 0..=100_000u64 {
            if is_prime_trial(x) {
                pi += 1;
            }
            if x >= 1 {
                assert_eq!(t.prime_count(x).unwrap(), pi, "pi({x})");
            }
        }
    }

    #[test]
    fn prime_count_pins() {
        let t = build_prime_table(1_000_000).unwrap();
        assert_eq!(t.prime_count(1).unwrap(), 0);
        assert_eq!(t.prime_count(10).unwrap(), 4);
        assert_eq!(t.prime_count(100).unwrap(), 25);
        assert_eq!(t.prime_count(1_000_000).unwrap(), 78_498);
        assert!(matches!(t.prime_count(1_000_001), Err(Error::Range(_))));
    }

    #[test]
    fn segmented_matches_simple_sieve_to_1e7() {
        let n = 10_000_000u64;
        let t = build_prime_table(n).unwrap();
        let simple = simple_bool_sieve(n);
        // Bit-for-bit: every odd bit of the table equals the bool sieve.
        for k in 0..t.nbits {
            let m = 2 * k as u64 + 1;
            let bit = t.words[k / 64] & (1u64 << (k % 64)) != 0;
            assert_eq!(bit, simple[m as usize], "disagree at {m}");
        }
        let expect: u64 = simple.iter().filter(|&&b| b).count() as u64;
        assert_eq!(t.prime_count(n).unwrap(), expect);
        assert_eq!(expect, 664_579);
    }

    #[test]
    fn segment_size_variants_agree() {
        let opts_small = SieveOptions {
            segment_bits: 1 << 12,
            ..Default::default()
        };
        let opts_big = SieveOptions {
            segment_bits: 1 << 20,
            ..Default::default()
        };
        let a = PrimeTable::build_with(1_000_003, &opts_small).unwrap();
        let b = PrimeTable::build_with(1_000_003, &opts_big).unwrap();
        assert_eq!(a.words, b.words);
    }

    #[test]
    fn bad_segment_bits_rejected() {
        let opts = SieveOptions {
            segment_bits: 1 << 10,
            ..Default::default()
        };
        assert!(matches!(
            PrimeTable::build_with(100, &opts),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn memory_budget_enforced() {
        let opts = SieveOptions {
            memory_budget_bytes: 1 << 20,
            ..Default::default()
        };
        let err = PrimeTable::build_with(100_000_000, &opts).unwrap_err();
        match err {
            Error::Resource(msg) => assert!(msg.contains("1048576"), "budget not named: {msg}"),
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn theta_pins() {
        let t = build_prime_table(1000).unwrap();
        assert_eq!(t.chebyshev_theta(1).unwrap(), 0.0);
        assert!((t.chebyshev_theta(2).unwrap() - 2f64.ln()).abs() < 1e-15);
        assert!((t.chebyshev_theta(10).unwrap() - 210f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn theta_is_nondecreasing_with_log_p_jumps() {
        let t = build_prime_table(10_000).unwrap();
        let mut prev = 0.0f64;
        for x in 2..=10_000u64 {
            let cur = t.chebyshev_theta(x).unwrap();
            if t.is_prime(x) {
                assert!((cur - prev - (x as f64).ln()).abs() < 1e-9, "jump at {x}");
            } else {
                assert_eq!(cur, prev, "theta moved at composite {x}");
            }
            prev = cur;
        }
    }

    #[test]
    fn nth_prime_pins() {
        let t = build_prime_table(1000).unwrap();
        assert_eq!(t.nth_prime(1).unwrap(), 2);
        assert_eq!(t.nth_prime(4).unwrap(), 7);
        assert_eq!(t.nth_prime(25).unwrap(), 97);
        assert_eq!(t.nth_prime(168).unwrap(), 997);
        assert!(matches!(t.nth_prime(169), Err(Error::Range(_))));
    }

    #[test]
    fn nth_prime_agrees_with_enumeration() {
        let t = build_prime_table(100_000).unwrap();
        for (i, p) in t.primes().enumerate() {
            assert_eq!(t.nth_prime(i as u64 + 1).unwrap(), p);
        }
    }

    #[test]
    fn primorial_pins_and_recurrence() {
        let t = build_prime_table(100).unwrap();
        assert_eq!(t.primorial(1).unwrap(), 2);
        assert_eq!(t.primorial(4).unwrap(), 210);

        // Exact oracle product in u128, then checked to fit 64 bits.
        let primes: Vec<u64> = t.primes().take(15).collect();
        let wide: u128 = primes.iter().map(|&p| p as u128).product();
        assert!(wide <= u64::MAX as u128);
        assert_eq!(t.primorial(15).unwrap(), wide as u64);
        assert_eq!(wide as u64, 614_889_782_588_491_410);

        for k in 2..=15u32 {
            let d = t.primorial(k).unwrap();
            let prev = t.primorial(k - 1).unwrap();
            let p = t.nth_prime(k as u64).unwrap();
            assert_eq!(d, prev * p);
        }

        assert!(matches!(
            t.primorial(16),
            Err(Error::PrimorialOverflow { k: 16 })
        ));
    }

    #[test]
    fn mertens_pins() {
        let t = build_prime_table(1_000_000).unwrap();
        assert_eq!(t.mertens_product(2).unwrap(), 0.5);
        assert!((t.mertens_product(10).unwrap() - 8.0 / 35.0).abs() < 1e-15);
        assert!(matches!(t.mertens_product(1), Err(Error::Domain(_))));

        // Mertens limit: v * ln y near exp(-gamma) = 0.5614594836...
        let v = t.mertens_product(1_000_000).unwrap();
        let scaled = v * (1_000_000f64).ln();
        assert!((scaled - 0.56146).abs() / 0.56146 < 0.05, "got {scaled}");
    }

    #[test]
    fn mertens_strictly_decreasing_at_primes_only() {
        let t = build_prime_table(500).unwrap();
        let mut prev = t.mertens_product(2).unwrap();
        for y in 3..=500u64 {
            let cur = t.mertens_product(y).unwrap();
            if t.is_prime(y) {
                assert!(cur < prev, "no drop at prime {y}");
            } else {
                assert_eq!(cur, prev, "moved at composite {y}");
            }
            prev = cur;
        }
    }

    #[test]
    fn pair_count_pins() {
        let t = build_prime_table(1000).unwrap();
        assert_eq!(t.prime_pair_count(30, 2).unwrap().count, 4);
        assert_eq!(t.prime_pair_count(30, 4).unwrap().count, 4);
        assert_eq!(t.prime_pair_count(3, 2).unwrap().count, 0);
        assert!(matches!(t.prime_pair_count(30, 3), Err(Error::Domain(_))));
        assert!(matches!(t.prime_pair_count(30, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn pair_count_matches_double_loop_oracle() {
        let t = build_prime_table(2000).unwrap();
        let simple = simple_bool_sieve(2000);
        for h in [2u64, 4, 6, 10, 30, 100] {
            for x in [2u64, 3, 50, 999, 2000] {
                let mut expect = 0u64;
                for q in 2..=x {
                    if simple[q as usize] && q > h && simple[(q - h) as usize] {
                        expect += 1;
                    }
                }
                assert_eq!(
                    t.prime_pair_count(x, h).unwrap().count,
                    expect,
                    "x={x} h={h}"
                );
            }
        }
    }

    #[test]
    fn pair_count_routes_agree() {
        let t = build_prime_table(200_000).unwrap();
        for h in (2u64..=100).step_by(2) {
            for y in [h, h + 1, 1000, 54_321, 199_999, 200_000] {
                assert_eq!(
                    t.pair_count_upto(y, h),
                    t.pair_count_word_and(y, h),
                    "y={y} h={h}"
                );
            }
        }
    }

    #[test]
    fn pair_count_odd_gaps() {
        let t = build_prime_table(1000).unwrap();
        assert_eq!(t.pair_count_any(100, 1), 1); // (2, 3)
        assert_eq!(t.pair_count_any(100, 3), 1); // (2, 5)
        assert_eq!(t.pair_count_any(100, 7), 0); // 9 composite
        assert_eq!(t.pair_count_any(4, 3), 0); // 5 > 4
    }

    #[test]
    fn pair_count_monotone_in_x_and_zero_for_large_h() {
        let t = build_prime_table(5000).unwrap();
        let mut prev = 0u64;
        for x in (100..=5000).step_by(97) {
            let c = t.prime_pair_count(x, 6).unwrap().count;
            assert!(c >= prev);
            prev = c;
        }
        assert_eq!(t.prime_pair_count(100, 100).unwrap().count, 0);
        assert_eq!(t.prime_pair_count(100, 102).unwrap().count, 0);
    }

    #[test]
    fn radical_product_pins() {
        assert_eq!(radical_product(1), Rational::new(1, 1));
        assert_eq!(radical_product(2), Rational::new(3, 2));
        assert_eq!(radical_product(12), Rational::new(2, 1));
        assert_eq!(radical_product(30), Rational::new(12, 5)); // (3/2)(4/3)(6/5)
    }

    proptest::proptest! {
        #[test]
        fn radical_product_depends_only_on_the_squarefree_kernel(h in 1u64..=1_000_000) {
            // rad(h) by trial division, independent of the implementation.
            let mut rad = 1u64;
            let mut rest = h;
            let mut d = 2u64;
            while d * d <= rest {
                if rest % d == 0 {
                    rad *= d;
                    while rest % d == 0 {
                        rest /= d;
                    }
                }
                d += 1;
            }
            rad *= rest.max(1);
            let v = radical_product(h);
            proptest::prop_assert_eq!(v, radical_product(rad));
            proptest::prop_assert!(v.numer >= v.denom, "value below 1: {}", v);
        }
    }

    /// Heavy: sieves to 2^33 (~550 MiB, tens of seconds). Run on demand with
    /// `cargo test -p romanoff --lib -- --ignored`.
    #[test]
    #[ignore]
    fn sieve_to_2_pow_33() {
        let opts = SieveOptions {
            memory_budget_bytes: 1 << 30,
            ..Default::default()
        };
        let t = PrimeTable::build_with(1u64 << 33, &opts).unwrap();
        assert_eq!(t.prime_count(1u64 << 32).unwrap(), 203_280_221);
        assert_eq!(t.prime_count(1u64 << 33).unwrap(), 393_615_806);
    }

    #[test]
    fn full_bitmap_matches_is_prime() {
        let t = build_prime_table(10_000).unwrap();
        let bits = t.full_bitmap(777);
        for n in 0..=777u64 {
            let b = bits[(n / 64) as usize] & (1u64 << (n % 64)) != 0;
            assert_eq!(b, t.is_prime(n), "bitmap disagrees at {n}");
        }
    }
}
