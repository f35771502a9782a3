//! Increasing tableaux and their combinatorics: Hecke insertion, K-Knuth
//! equivalence of words, K-jeu-de-taquin slides and rectification, complete
//! enumeration of equivalence classes over a bounded alphabet, and criteria
//! for unique rectification targets.
//!
//! The crate is organized in layers:
//!
//! - [`core`] defines cells, shapes, fillings, tableaux, and words.
//! - [`insertion`] inserts letters and words into tableaux.
//! - [`equivalence`] decides word equivalence by local moves and tracks the
//!   induced permutations.
//! - [`jdt`] slides skew tableaux and collects their rectifications.
//! - [`classes`] enumerates all tableaux over an alphabet and partitions
//!   them into insertion-equivalence classes.
//! - [`urt`] detects tableaux that are the unique rectification of every
//!   tableau in their class.

pub mod classes;
pub mod core;
mod error;
pub mod equivalence;
pub mod insertion;
pub mod jdt;
pub mod urt;

pub use classes::{
    compute_partition, enumerate_universe, is_urt_exhaustive, is_urt_exhaustive_with,
    triangle_block_tableau, Census, ClassPartition, IntervalCounterexample, TableauUniverse,
};
pub use crate::core::{
    addable_corners, col_word, hook_arm_leg, hook_closure_predicates, inner_corners, is_hook_shape,
    is_partition, is_reading_word, is_repetitive_reading_word, is_right_alignable, outer_hook,
    partition_contains, right_alignment, row_word, CanonicalKey, Cell, Filling, HookClosures,
    Shape, Tableau, Word,
};
pub use error::{Error, Result};
pub use equivalence::{
    equivalent_through, hecke_permutation, hecke_product, kknuth_neighbors, primitive_pairs,
    words_equivalent, HeckePerm, PrimitivePair, PrimitivePairKind,
};
pub use insertion::{
    column_insert_letter, insert_letter, insert_word, insert_word_into, trace_insertion,
    InsertionTrace,
};
pub use jdt::{forward_slide, rectifications, rectify, reverse_slide, swap, DottedFilling, SlideCell};
pub use urt::{
    hook_class_members, hook_equivalent_partner, hook_is_urt, is_fat_hook_union_urt, is_minimal,
    is_superstandard, is_urt_right_alignable, minimal_tableau, non_urt_witness,
    non_urt_witness_pair, structural_urt_verdict, superstandard_tableau, two_row_equivalent_pair,
    Verdict,
};

/// Runs every code block in the guide under `book/` as a documentation
/// test, so the guide cannot drift away from the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/tableaux.md")]
    mod tableaux {}
    #[doc = include_str!("../../../book/src/insertion.md")]
    mod insertion {}
    #[doc = include_str!("../../../book/src/equivalence.md")]
    mod equivalence {}
    #[doc = include_str!("../../../book/src/jeu-de-taquin.md")]
    mod jeu_de_taquin {}
    #[doc = include_str!("../../../book/src/classes.md")]
    mod classes {}
    #[doc = include_str!("../../../book/src/urt.md")]
    mod urt {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
