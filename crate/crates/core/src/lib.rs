pub mod commutant;
pub mod error;
pub mod gaudin;
pub mod exact;
pub mod hw;
pub mod lie;
pub mod report;

pub use error::{Error, Result};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    mod algebras {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/gaudin.md")]
    mod gaudin {}
    #[doc = include_str!("../../../book/src/commutant.md")]
    mod commutant {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
