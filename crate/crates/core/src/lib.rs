//! Braid group word problem solved by acting with half-twists on a
//! link-list encoding of a geometric base of the punctured disk.
//!
//! ```
//! use braid_gbase::{words_equal, BraidWord};
//!
//! let a = BraidWord::parse("1 2 1", 3).unwrap();
//! let b = BraidWord::parse("2 1 2", 3).unwrap();
//! assert!(words_equal(&a, &b).unwrap());
//! ```

pub mod bench;
pub mod error;
pub mod gbase;
pub mod oracle;
pub mod reduce;
pub mod solver;
pub mod twist;
pub mod word;

pub use error::{Error, Result};
pub use gbase::{validate, GBaseWord, Link, Position, Violation, ViolationKind};
pub use oracle::{free_reduce, letter_image, oracle_equal, word_image, ArtinOracle, FreeWord};
pub use reduce::{find_forbidden_sequence, reduce, reduce_with_stats, ReduceStats};
pub use solver::{is_identity, normal_form, process_word, words_equal, LetterStats, Processed};
pub use twist::{apply_letter, find_local_runs, LocalRun, TwistStats, UCase};
pub use word::{BraidWord, Letter, Permutation, Sign};
