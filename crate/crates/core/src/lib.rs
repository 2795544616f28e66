//! Linear codes over Gaussian-integer residue fields under the Mannheim metric.
//!
//! ```
//! use mannheim::{GaussPrime, LinearCode, Metric, PrimeContext};
//!
//! let ctx = PrimeContext::shared(GaussPrime::new(2, 3)?)?;
//! let code = LinearCode::from_generator(ctx, vec![vec![1, 0, 2], vec![0, 1, 4]])?;
//! assert_eq!(code.min_distance(Metric::Mannheim, mannheim::DEFAULT_BUDGET)?, 3);
//! # Ok::<(), mannheim::Error>(())
//! ```

pub mod arith;
pub mod error;
pub mod fp;
pub mod gint;
pub mod ring;
pub mod leelift;
pub mod codes;
pub mod bounds;
pub mod selfdual;
pub mod decode;

pub use error::{Error, Result, DEFAULT_BUDGET};
pub use gint::{GaussPrime, Gaussian};
pub use ring::PrimeContext;
pub use codes::{LinearCode, Metric};
pub use selfdual::{ExactSimplex, FloatSimplex};

/// Arbitrary-precision Gaussian integer.
pub type GaussInt = Gaussian<num_bigint::BigInt>;
/// Machine-word Gaussian integer for residue tables.
pub type SmallGaussInt = Gaussian<i64>;
