pub mod confspace;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod matroid;
pub mod model;
pub mod orlik_solomon;

pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod book_introduction {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/arrangements.md")]
mod book_arrangements {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/orlik-solomon.md")]
mod book_orlik_solomon {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/geometry.md")]
mod book_geometry {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/gysin-model.md")]
mod book_gysin_model {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/blowup.md")]
mod book_blowup {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/configuration-spaces.md")]
mod book_configuration_spaces {}
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
