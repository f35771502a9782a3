//! Insertion of letters and words into straight increasing tableaux.
//!
//! A letter inserted into a row either lands at the end of the row, bumps
//! the smallest larger entry into the next row, or leaves the tableau
//! unchanged when neither would keep the tableau increasing. Because rows
//! may absorb a letter without growing, the map from words to tableaux is
//! many-to-one in a stronger sense than for classical row insertion: words
//! of different lengths can share an insertion tableau.

use std::collections::BTreeSet;

use crate::core::{Tableau, Word};
use crate::error::{Error, Result};

/// Inserts `x` into `rows`, the row vectors of a straight increasing
/// tableau. Returns true if any row changed.
///
/// Rows hold strictly increasing entries and lengths weakly decrease; both
/// invariants are preserved. Empty rows are never stored.
pub(crate) fn insert_letter_into_rows(rows: &mut Vec<Vec<u32>>, x: u32) -> bool {
    let mut changed = false;
    let mut x = x;
    for r in 0.. {
        if r == rows.len() {
            // x lands in a fresh row only if the cell above it is smaller.
            if r == 0 || rows[r - 1][0] < x {
                rows.push(vec![x]);
                changed = true;
            }
            return changed;
        }
        let last = *rows[r].last().expect("no empty rows");
        if x >= last {
            // x is at least every entry: adjoin at the end, or stop if the
            // new cell would break the strict increase along its row or
            // stick out under a too-short row above.
            let len = rows[r].len();
            if last < x && (r == 0 || (rows[r - 1].len() > len && rows[r - 1][len] < x)) {
                rows[r].push(x);
                changed = true;
            }
            return changed;
        }
        // y: the smallest entry strictly larger than x. Replace it when the
        // replacement stays increasing; either way y moves to the next row.
        let idx = rows[r].partition_point(|&e| e <= x);
        let y = rows[r][idx];
        let left_ok = idx == 0 || rows[r][idx - 1] < x;
        let above_ok = r == 0 || rows[r - 1][idx] < x;
        if left_ok && above_ok {
            rows[r][idx] = x;
            changed = true;
        }
        x = y;
    }
    unreachable!()
}

/// Inserts every letter of `w` in order, starting from `rows`.
/// Returns true if any letter changed the tableau.
pub(crate) fn insert_word_into_rows(rows: &mut Vec<Vec<u32>>, letters: &[u32]) -> bool {
    let mut changed = false;
    for &x in letters {
        changed |= insert_letter_into_rows(rows, x);
    }
    changed
}

/// Inserts one letter into a straight tableau.
///
/// Returns the new tableau and whether it differs from the input; the
/// insertion absorbs the letter without any change when no row can accept
/// it. Errors if `t` is not straight or `x` is 0.
pub fn insert_letter(t: &Tableau, x: u32) -> Result<(Tableau, bool)> {
    if x == 0 {
        return Err(Error::ZeroLetter);
    }
    let mut rows = t.straight_rows().ok_or(Error::NotStraight)?;
    let changed = insert_letter_into_rows(&mut rows, x);
    let result = Tableau::from_rows(&rows).expect("insertion preserves increasing tableaux");
    Ok((result, changed))
}

/// Inserts one letter down the columns instead of the rows: transposes,
/// row-inserts, and transposes back.
pub fn column_insert_letter(t: &Tableau, x: u32) -> Result<(Tableau, bool)> {
    let (result, changed) = insert_letter(&t.transpose(), x)?;
    Ok((result.transpose(), changed))
}

/// The insertion tableau of a word: letters inserted left to right into the
/// empty tableau.
pub fn insert_word(w: &Word) -> Tableau {
    let mut rows = Vec::new();
    insert_word_into_rows(&mut rows, w.letters());
    Tableau::from_rows(&rows).expect("insertion preserves increasing tableaux")
}

/// Inserts every letter of `w` in order into `t`.
pub fn insert_word_into(t: &Tableau, w: &Word) -> Result<Tableau> {
    let mut rows = t.straight_rows().ok_or(Error::NotStraight)?;
    insert_word_into_rows(&mut rows, w.letters());
    Ok(Tableau::from_rows(&rows).expect("insertion preserves increasing tableaux"))
}

/// The record of inserting a word letter by letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionTrace {
    /// The insertion tableau of the whole word.
    pub result: Tableau,
    /// True if any prefix step changed the tableau; equivalently, the word
    /// was nonempty.
    pub changed: bool,
    /// The 1-indexed positions `r` at which the insertion tableau of the
    /// length-`r` prefix differs from that of the length-`r-1` prefix.
    pub active_indices: BTreeSet<usize>,
}

/// Inserts `w` into the empty tableau, recording which letters changed the
/// tableau.
pub fn trace_insertion(w: &Word) -> InsertionTrace {
    let mut rows = Vec::new();
    let mut active_indices = BTreeSet::new();
    for (i, &x) in w.letters().iter().enumerate() {
        if insert_letter_into_rows(&mut rows, x) {
            active_indices.insert(i + 1);
        }
    }
    InsertionTrace {
        result: Tableau::from_rows(&rows).expect("insertion preserves increasing tableaux"),
        changed: !active_indices.is_empty(),
        active_indices,
    }
}
