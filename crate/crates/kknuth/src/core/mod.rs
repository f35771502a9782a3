//! Cells, shapes, fillings, tableaux, and words.
//!
//! Conventions used throughout the crate:
//!
//! - Cells are written `(row, col)` in matrix coordinates, 1-indexed, with
//!   rows increasing downward and columns increasing rightward.
//! - Letters and labels are positive integers.
//! - A filling is increasing when its labels strictly increase along every
//!   row and down every column; equivalently, `f(a) < f(b)` whenever cell
//!   `a` is weakly northwest of cell `b` and the two cells differ.

mod cell;
mod filling;
mod ops;
mod word;

pub use cell::{addable_corners, inner_corners, is_partition, partition_contains, Cell, Shape};
pub use filling::{CanonicalKey, Filling, Tableau};
pub use ops::{
    col_word, hook_arm_leg, hook_closure_predicates, is_hook_shape, is_reading_word,
    is_repetitive_reading_word, is_right_alignable, outer_hook, right_alignment, row_word,
    HookClosures,
};
pub use word::Word;
