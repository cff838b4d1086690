//! Exact abundancy-index arithmetic and the number theory built on it.
//!
//! - [`arith`]: σ, `I(n) = σ(n)/n`, perfect/abundant/deficient, classical bounds.
//! - [`outlaw`]: decides whether a rational is an abundancy index.
//! - [`superabundant`]: enumerates superabundant numbers two independent ways.
//! - [`rh`]: certified checks of Robin's and Lagarias's inequalities.
//!
//! No floating point is used in any decision; transcendental bounds are
//! enclosed in balls with rigorous radii (see [`ball`]) and compared exactly
//! against rational indices.

pub mod arith;
pub mod cache;
pub mod ball;
pub mod error;
pub mod factor;
pub mod outlaw;
pub mod perfect;
pub mod primes;
pub mod ratio;
pub mod rh;
pub mod superabundant;

pub use arith::{abundancy_index, classify, index_bounds, sigma, Classification, Tag};
pub use error::{Error, Result};
pub use factor::{factorize, Factorization};
pub use outlaw::{OutlawCertificate, OutlawRule, OutlawVerdict};
pub use ratio::ExactRatio;
