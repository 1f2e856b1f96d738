//! Edit measurement with LZ77 compression.
//!
//! The distance from a source text `S` to a target `T` is the number of LZ77
//! phrases needed to encode `T` when `S` may be copied from. It counts moved,
//! duplicated and deleted blocks as single operations, which character-level
//! edit distances do not.
//!
//! ```
//! use lzdist::distance::compression_distance;
//!
//! let d = compression_distance(&"the cat sat on the mat".into(), &"on the mat the cat sat".into())?;
//! assert_eq!(d.value, 3);
//! # Ok::<(), lzdist::Error>(())
//! ```
//!
//! Modules:
//!
//! * [`suffix_array`], [`lz77`] and [`distance`]: the distance itself;
//! * [`baselines`]: Levenshtein, BLEU, ROUGE-L and TER;
//! * [`stats`]: correlation, regression and nearest neighbours;
//! * [`dataset`]: record files and a simulator with known effort;
//! * [`eval`]: correlation reports against measured effort;
//! * [`llm`]: generating edits through a chat-completion endpoint.

pub mod baselines;
pub mod dataset;
pub mod distance;
pub mod error;
pub mod eval;
pub mod llm;
pub mod lz77;
pub mod stats;
pub mod suffix_array;
pub mod text;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/distance.md")]
    struct Distance;
    #[doc = include_str!("../../../book/src/baselines.md")]
    struct Baselines;
    #[doc = include_str!("../../../book/src/statistics.md")]
    struct Statistics;
    #[doc = include_str!("../../../book/src/datasets.md")]
    struct Datasets;
    #[doc = include_str!("../../../book/src/evaluation.md")]
    struct Evaluation;
    #[doc = include_str!("../../../book/src/generation.md")]
    struct Generation;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
