#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod arith;
pub mod cycles;
pub mod dynatomic;
pub mod error;
pub mod factor;
pub(crate) mod modp;
pub mod numfield;
pub mod poly;
pub mod property_a;

pub use arith::BigRational;
pub use error::{Error, Result};
pub use factor::{factor_over_q, is_irreducible, rational_roots, Factorization};
pub use poly::{BiPoly, IntPoly, RatPoly};
