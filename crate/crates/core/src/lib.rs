#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod expr;
pub mod fgl;
pub mod graded;
pub mod hopfeval;
pub mod ivp;
pub mod linalg;
pub mod opring;
pub mod rational;
pub mod series;
pub mod split;
pub mod stirling;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/stirling.md")]
    mod stirling {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
    #[doc = include_str!("../../../book/src/ivp.md")]
    mod ivp {}
    #[doc = include_str!("../../../book/src/fgl.md")]
    mod fgl {}
    #[doc = include_str!("../../../book/src/hopf.md")]
    mod hopf {}
    #[doc = include_str!("../../../book/src/split.md")]
    mod split {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
