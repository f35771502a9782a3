//! Operations connecting words, shapes, and tableaux.

use std::collections::HashMap;

use crate::core::cell::{Cell, Shape};
use crate::core::filling::{Filling, Tableau};
use crate::core::word::Word;
use crate::error::{Error, Result};

/// The row reading word: rows bottom to top, each left to right.
pub fn row_word(t: &Tableau) -> Word {
    let mut letters = Vec::with_capacity(t.len());
    for (_, row) in t.filling().row_groups().into_iter().rev() {
        letters.extend(row);
    }
    Word::new(letters).expect("tableau labels are positive")
}

/// The column reading word: columns left to right, each bottom to top.
pub fn col_word(t: &Tableau) -> Word {
    let mut letters = Vec::with_capacity(t.len());
    for (_, col) in t.filling().transpose().row_groups() {
        letters.extend(col.into_iter().rev());
    }
    Word::new(letters).expect("tableau labels are positive")
}

/// A dynamically sized bit set keyed by cell index.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Mask(Vec<u64>);

impl Mask {
    fn full(n: usize) -> Mask {
        let mut words = vec![u64::MAX; n.div_ceil(64)];
        if n % 64 != 0 {
            *words.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
        }
        Mask(words)
    }

    fn test(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1u64 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

/// Indices of remaining cells that no other remaining cell is weakly
/// southwest of; these are the cells a reading may list next.
fn sw_minimal(cells: &[(Cell, u32)], mask: &Mask) -> Vec<usize> {
    (0..cells.len())
        .filter(|&i| mask.test(i))
        .filter(|&i| {
            (0..cells.len()).all(|j| {
                j == i || !mask.test(j) || !cells[j].0.weakly_sw_of(cells[i].0)
            })
        })
        .collect()
}

/// True if `w` lists every cell label exactly once in an order that puts a
/// cell before everything it is weakly southwest of.
pub fn is_reading_word(w: &Word, t: &Tableau) -> bool {
    let cells: Vec<(Cell, u32)> = t.cells().collect();
    if w.len() != cells.len() {
        return false;
    }
    fn rec(
        w: &[u32],
        cells: &[(Cell, u32)],
        mask: Mask,
        memo: &mut HashMap<Mask, bool>,
    ) -> bool {
        if mask.is_empty() {
            return true;
        }
        if let Some(&known) = memo.get(&mask) {
            return known;
        }
        // Each step consumes one cell, so the count of cleared bits is the
        // number of letters already read.
        let pos = (0..cells.len()).filter(|&i| !mask.test(i)).count();
        let next = w[pos];
        let ok = sw_minimal(cells, &mask)
            .into_iter()
            .filter(|&i| cells[i].1 == next)
            .any(|i| {
                let mut rest = mask.clone();
                rest.clear(i);
                rec(w, cells, rest, memo)
            });
        memo.insert(mask, ok);
        ok
    }
    rec(w.letters(), &cells, Mask::full(cells.len()), &mut HashMap::new())
}

/// True if `w` reads the cells of `f` in a weakly-southwest-compatible
/// order in which a cell may be read again any number of times before it is
/// finally consumed, and every cell is eventually consumed.
pub fn is_repetitive_reading_word(w: &Word, f: &Filling) -> bool {
    let cells: Vec<(Cell, u32)> = f.cells().collect();
    fn rec(
        w: &[u32],
        cells: &[(Cell, u32)],
        pos: usize,
        mask: Mask,
        memo: &mut HashMap<(usize, Mask), bool>,
    ) -> bool {
        if pos == w.len() {
            return mask.is_empty();
        }
        if let Some(&known) = memo.get(&(pos, mask.clone())) {
            return known;
        }
        let matching: Vec<usize> = sw_minimal(cells, &mask)
            .into_iter()
            .filter(|&i| cells[i].1 == w[pos])
            .collect();
        let ok = (!matching.is_empty() && rec(w, cells, pos + 1, mask.clone(), memo))
            || matching.iter().any(|&i| {
                let mut rest = mask.clone();
                rest.clear(i);
                rec(w, cells, pos + 1, rest, memo)
            });
        memo.insert((pos, mask), ok);
        ok
    }
    rec(w.letters(), &cells, 0, Mask::full(cells.len()), &mut HashMap::new())
}

/// Labels of the first row and of the first column.
pub fn outer_hook(t: &Tableau) -> (Word, Word) {
    let row: Vec<u32> = t.cells().filter(|(c, _)| c.row == 1).map(|(_, v)| v).collect();
    let mut col: Vec<(u32, u32)> = t
        .cells()
        .filter(|(c, _)| c.col == 1)
        .map(|(c, v)| (c.row, v))
        .collect();
    col.sort_unstable();
    (
        Word::new(row).expect("tableau labels are positive"),
        Word::new(col.into_iter().map(|(_, v)| v).collect()).expect("tableau labels are positive"),
    )
}

/// True if the shape is a nonempty straight hook: one row plus one column.
pub fn is_hook_shape(s: &Shape) -> bool {
    match s.partition() {
        Some(parts) => !parts.is_empty() && parts.iter().skip(1).all(|&p| p <= 1),
        None => false,
    }
}

/// The arm (first-row labels after the corner) and leg (first-column labels
/// below the corner) of a hook-shaped tableau.
pub fn hook_arm_leg(t: &Tableau) -> Result<(Word, Word)> {
    if !is_hook_shape(&t.shape()) {
        return Err(Error::NotHook);
    }
    let (row, col) = outer_hook(t);
    let arm = Word::new(row.letters()[1..].to_vec()).expect("labels are positive");
    let leg = Word::new(col.letters()[1..].to_vec()).expect("labels are positive");
    Ok((arm, leg))
}

/// Pushes every row of a straight tableau flush against its last column.
///
/// Row `i` moves right by `lambda_1 - lambda_i`. The result is a filling of
/// the right-aligned shape; it need not be increasing.
pub fn right_alignment(t: &Tableau) -> Result<Filling> {
    let parts = t.shape().partition().ok_or(Error::NotStraight)?;
    let width = parts.first().copied().unwrap_or(0);
    Filling::from_pairs(t.cells().map(|(c, v)| {
        let shift = width - parts[c.row as usize - 1];
        (Cell::new(c.row, c.col + shift), v)
    }))
}

/// True if the right alignment of a straight tableau is increasing.
pub fn is_right_alignable(t: &Tableau) -> Result<bool> {
    Ok(right_alignment(t)?.is_increasing())
}

/// Which hook closure conditions a shape satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookClosures {
    pub nw: bool,
    pub ne: bool,
    pub se: bool,
}

/// Tests the three hook closure conditions.
///
/// For cells `x = (i1, j1)` weakly southwest of `y = (i2, j2)`, the
/// northwest condition demands the elbow through `(i2, j1)`: column `j1`
/// from row `i2` to `i1` and row `i2` from column `j1` to `j2`. The
/// southeast condition demands the elbow through `(i1, j2)`. For `x` weakly
/// southeast of `y`, the northeast condition demands the elbow through
/// `(i2, j1)`. Straight shapes satisfy the northwest and northeast
/// conditions; skew shapes always satisfy the northeast condition; shapes
/// satisfying both the northwest and southeast conditions are exactly the
/// vertical mirror images of skew shapes.
pub fn hook_closure_predicates(s: &Shape) -> HookClosures {
    let cells: Vec<Cell> = s.cells().collect();
    let col_run = |col: u32, r1: u32, r2: u32| (r1..=r2).all(|r| s.contains(Cell::new(r, col)));
    let row_run = |row: u32, c1: u32, c2: u32| (c1..=c2).all(|c| s.contains(Cell::new(row, c)));
    let mut closures = HookClosures { nw: true, ne: true, se: true };
    for &x in &cells {
        for &y in &cells {
            if x == y {
                continue;
            }
            if x.weakly_sw_of(y) {
                closures.nw &= col_run(x.col, y.row, x.row) && row_run(y.row, x.col, y.col);
                closures.se &= col_run(y.col, y.row, x.row) && row_run(x.row, x.col, y.col);
            }
            if x.weakly_se_of(y) {
                closures.ne &= col_run(x.col, y.row, x.row) && row_run(y.row, y.col, x.col);
            }
        }
    }
    closures
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tableau(rows: &[&[u32]]) -> Tableau {
        Tableau::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reading_words_of_a_three_row_tableau() {
        let t = tableau(&[&[1, 3, 4, 5], &[2, 4, 5], &[4]]);
        assert_eq!(row_word(&t), w("42451345"));
        assert_eq!(col_word(&t), w("42143545"));
        for valid in ["42451345", "42143545", "42145345", "42413545"] {
            assert!(is_reading_word(&w(valid), &t), "{valid}");
        }
        // The southwest corner label 4 must come first.
        assert!(!is_reading_word(&w("24451345"), &t));
        // Wrong multiset and wrong length.
        assert!(!is_reading_word(&w("42451344"), &t));
        assert!(!is_reading_word(&w("4245134"), &t));
    }

    #[test]
    fn reading_words_of_skew_and_empty_shapes() {
        let t = Tableau::from_skew_rows(&[4, 3, 3], &[3, 2], &[vec![2], vec![2], vec![1, 3, 4]])
            .unwrap();
        assert_eq!(row_word(&t), w("13422"));
        assert!(is_reading_word(&row_word(&t), &t));
        assert!(is_reading_word(&col_word(&t), &t));
        assert_eq!(row_word(&Tableau::empty()), Word::empty());
        assert!(is_reading_word(&Word::empty(), &Tableau::empty()));
    }

    #[test]
    fn repetitive_readings_may_revisit_cells() {
        let f = Filling::from_pairs([
            (Cell::new(1, 1), 1),
            (Cell::new(1, 2), 2),
            (Cell::new(1, 3), 4),
            (Cell::new(2, 1), 3),
            (Cell::new(2, 2), 5),
            (Cell::new(2, 3), 6),
            (Cell::new(3, 3), 7),
        ])
        .unwrap();
        for valid in ["7356124", "3152764", "3715624", "3357516264", "3751576244"] {
            assert!(is_repetitive_reading_word(&w(valid), &f), "{valid}");
        }
        assert!(!is_repetitive_reading_word(&w("1234567"), &f));
        assert!(is_repetitive_reading_word(&Word::empty(), &Filling::empty()));
        assert!(!is_repetitive_reading_word(&Word::empty(), &f));
        assert!(!is_repetitive_reading_word(&w("1"), &Filling::empty()));
    }

    #[test]
    fn every_reading_word_is_repetitive() {
        let t = tableau(&[&[1, 3, 4, 5], &[2, 4, 5], &[4]]);
        for word in ["42451345", "42143545", "42145345", "42413545"] {
            assert!(is_repetitive_reading_word(&w(word), t.filling()));
        }
    }

    #[test]
    fn outer_hook_and_arm_leg() {
        let t = tableau(&[&[1, 2, 3, 4], &[2], &[4]]);
        let (row, col) = outer_hook(&t);
        assert_eq!((row, col), (w("1234"), w("124")));
        let (arm, leg) = hook_arm_leg(&t).unwrap();
        assert_eq!((arm, leg), (w("234"), w("24")));
        assert!(hook_arm_leg(&tableau(&[&[1, 2], &[2, 3]])).is_err());
        // Single row and single column are hooks.
        assert!(hook_arm_leg(&tableau(&[&[1, 2, 3]])).is_ok());
        assert!(hook_arm_leg(&tableau(&[&[1], &[2]])).is_ok());
        assert!(hook_arm_leg(&Tableau::empty()).is_err());
    }

    #[test]
    fn right_alignment_examples() {
        let t = tableau(&[&[1, 2], &[3]]);
        let aligned = right_alignment(&t).unwrap();
        assert_eq!(aligned.get(Cell::new(2, 2)), Some(3));
        assert!(is_right_alignable(&t).unwrap());
        // Moving the 2 under the 3 breaks the increase.
        let t = tableau(&[&[1, 3], &[2]]);
        assert!(!is_right_alignable(&t).unwrap());
        let skew =
            Tableau::from_skew_rows(&[2, 1], &[1], &[vec![1], vec![1]]).unwrap();
        assert!(right_alignment(&skew).is_err());
    }

    #[test]
    fn closure_predicates_on_sample_shapes() {
        let shape = |cells: &[(u32, u32)]| {
            Shape::from_cells(cells.iter().map(|&(r, c)| Cell::new(r, c)))
        };
        let nw_only = shape(&[(1, 2), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)]);
        assert_eq!(
            hook_closure_predicates(&nw_only),
            HookClosures { nw: true, ne: false, se: false }
        );
        let ne_only = shape(&[(1, 5), (2, 2), (2, 3), (2, 4), (3, 3), (3, 4)]);
        assert_eq!(
            hook_closure_predicates(&ne_only),
            HookClosures { nw: false, ne: true, se: false }
        );
        let se_only = shape(&[(1, 2), (2, 2), (3, 1), (3, 2), (3, 3)]);
        assert_eq!(
            hook_closure_predicates(&se_only),
            HookClosures { nw: false, ne: false, se: true }
        );
        let none = shape(&[(1, 2), (2, 1), (2, 2), (2, 3), (3, 2)]);
        assert_eq!(
            hook_closure_predicates(&none),
            HookClosures { nw: false, ne: false, se: false }
        );
    }

    #[test]
    fn straight_shapes_satisfy_all_closures_and_skew_satisfies_ne() {
        // Straight shapes are northwest- and northeast-hook-closed, but the
        // southeast elbow through (i1, j2) can stick out of them.
        let straight = Shape::from_partition(&[3, 2]).unwrap();
        assert_eq!(
            hook_closure_predicates(&straight),
            HookClosures { nw: true, ne: true, se: false }
        );
        let rectangle = Shape::from_partition(&[3, 3]).unwrap();
        assert_eq!(
            hook_closure_predicates(&rectangle),
            HookClosures { nw: true, ne: true, se: true }
        );
        let skew = Shape::skew(&[4, 3, 3], &[3, 2]).unwrap();
        assert_eq!(
            hook_closure_predicates(&skew),
            HookClosures { nw: false, ne: true, se: false }
        );
        let tiny = Shape::skew(&[2, 1], &[1]).unwrap();
        assert_eq!(
            hook_closure_predicates(&tiny),
            HookClosures { nw: false, ne: true, se: false }
        );
        assert_eq!(
            hook_closure_predicates(&Shape::empty()),
            HookClosures { nw: true, ne: true, se: true }
        );
    }
}
