//! Superspace Vandermonde modules.

pub mod error;
pub mod modules;
pub mod operators;
pub mod perm;
pub mod qlinalg;
pub mod rational;
pub mod superspace;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use perm::Perm;
pub use rational::Q;
pub use superspace::{Bidegree, SuperMonomial, SuperPolynomial};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/overview.md")]
    mod overview {}
    #[doc = include_str!("../../../book/src/superspace.md")]
    mod superspace {}
    #[doc = include_str!("../../../book/src/operators.md")]
    mod operators {}
    #[doc = include_str!("../../../book/src/symfunc.md")]
    mod symfunc {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/verify.md")]
    mod verify {}
    #[doc = include_str!("../../../book/src/conventions.md")]
    mod conventions {}
}
