//! romanoff: desk-scale computations around Romanoff-type additive problems.
//!
//! The toolkit studies sumsets S = {p + b : p prime, b in B} for various
//! integer sets B. It provides:
//!
//! - [`sieve`]: segmented prime table with pi(x), Chebyshev theta, primorials,
//!   Mertens products, prime-pair counts, and radical products;
//! - [`bsets`]: the built-in B-set families (powers of two, 2^(a^2), the
//!   primorial-block construction, explicit files), counting and the
//!   c-condition check;
//! - [`sumset`]: representation functions f and their truncations, bitmap
//!   sumset counters S(x), and exact first/second moments with the
//!   Cauchy-Schwarz support bound;
//! - [`analysis`]: end-to-end diagnostic pipelines (de Polignac scan,
//!   Chebyshev bound tables, the three-part pair partition, and the
//!   grid reports comparing S(x) against x / logloglog x);
//! - [`report`]: CSV and JSONL emission for every report row type.
//!
//! Everything is exact integer arithmetic where the quantity is an integer;
//! real-valued reference bounds are reported as measured ratios rather than
//! asserted, since their implied constants are not fixed.
//!
//! See the `examples/` directory for one runnable program per capability and
//! the `romanoff` binary for the command-line front end.

pub mod analysis;
pub mod bsets;
pub mod error;
pub mod report;
pub mod sieve;
pub mod sumset;

pub use error::{Error, Result};
pub use sieve::{build_prime_table, PrimeTable, SieveOptions};
