//! Guide chapters, compiled as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/words.md")]
pub mod words {}

#[doc = include_str!("../../../book/src/diagrams.md")]
pub mod diagrams {}

#[doc = include_str!("../../../book/src/seifert.md")]
pub mod seifert {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/average_genus.md")]
pub mod average_genus {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
