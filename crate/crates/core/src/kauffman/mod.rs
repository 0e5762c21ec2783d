//! Kauffman's regular-isotopy polynomial `Λ(a, z)`.
//!
//! Conventions: an unknot diagram without crossings evaluates to 1,
//! `Λ(D+) + Λ(D-) = z (Λ(D0) + Λ(D∞))`, and a positive curl contributes a
//! factor `a`.

mod engine;
mod poly;
mod truncate;

pub use engine::{delta_unlink, lambda, CacheMode, LambdaEngine, CACHE_ENV};
pub use poly::{mirror_poly, poly_add, poly_mul, poly_shift, LaurentPoly2};
pub use truncate::{degree_bound_holds, top_rows, truncate, TruncatedLambda, TruncationError};
