//! Exact q-expansions of Jacobi forms, the ring of weak Jacobi forms, and the
//! genera built from them.

pub mod check;
pub mod claims;
pub mod error;
pub mod rat;
pub mod forms;
pub mod genus;
pub mod identities;
pub mod lift;
pub mod linalg;
pub mod ring;
pub mod specials;
pub mod series;

pub use error::{Error, Result};
pub use rat::Rat;

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../README.md")]
    pub mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    pub mod series {}
    #[doc = include_str!("../../../book/src/forms.md")]
    pub mod forms {}
    #[doc = include_str!("../../../book/src/ring.md")]
    pub mod ring {}
    #[doc = include_str!("../../../book/src/genus.md")]
    pub mod genus {}
    #[doc = include_str!("../../../book/src/specials.md")]
    pub mod specials {}
    #[doc = include_str!("../../../book/src/lift.md")]
    pub mod lift {}
}
