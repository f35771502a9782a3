//! Structural criteria for unique rectification targets and explicit
//! constructions of tableaux that are provably not such targets.
//!
//! A straight tableau is a unique rectification target when its insertion
//! equivalence class is a singleton, so that every skew tableau in the
//! class of its row word rectifies to it alone. The exhaustive test
//! [`crate::classes::is_urt_exhaustive`] decides this by enumerating the
//! class, which is feasible only on small alphabets. This module offers
//! sufficient criteria that certify many tableaux directly (minimal,
//! superstandard, right-alignable, and fat-hook unions), an exact
//! characterization on hook shapes, local equivalences on hooks, and a
//! witness construction producing a non-singleton tableau of every shape
//! that admits one.

use std::collections::{BTreeSet, HashSet};
use std::iter::once;

use crate::classes::is_urt_exhaustive;
use crate::core::{
    hook_arm_leg, is_hook_shape, is_right_alignable, Cell, Filling, Shape, Tableau, Word,
};
use crate::error::{Error, Result};
use crate::insertion::{column_insert_letter, insert_letter};

type Rows = Vec<Vec<u32>>;

/// Outcome of a structural test.
///
/// The criteria here are sound but not complete, so a tableau can be
/// certified, refuted, or left undecided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// The tableau is certainly a unique rectification target.
    Yes,
    /// The tableau is certainly not a unique rectification target.
    No,
    /// The structural criteria cannot decide.
    Unknown,
}

/// The tableau of the given straight shape whose entry at `(i, j)` is
/// `i + j - 1`, the smallest value any increasing filling allows there.
///
/// Minimal tableaux are unique rectification targets.
pub fn minimal_tableau(shape: &Shape) -> Result<Tableau> {
    let parts = shape.partition().ok_or(Error::NotStraight)?;
    let rows: Rows = parts
        .iter()
        .enumerate()
        .map(|(r, &len)| (0..len).map(|c| r as u32 + c + 1).collect())
        .collect();
    Ok(Tableau::from_rows(&rows).expect("the minimal filling is increasing"))
}

/// The standard tableau of the given straight shape that fills the first
/// row with `1..=λ₁`, the second row with the next `λ₂` values, and so on.
///
/// Superstandard tableaux are unique rectification targets.
pub fn superstandard_tableau(shape: &Shape) -> Result<Tableau> {
    let parts = shape.partition().ok_or(Error::NotStraight)?;
    let mut next = 1;
    let rows: Rows = parts
        .iter()
        .map(|&len| {
            let row = (next..next + len).collect();
            next += len;
            row
        })
        .collect();
    Ok(Tableau::from_rows(&rows).expect("consecutive rows are increasing"))
}

/// True if `t` is straight and every entry at `(i, j)` equals `i + j - 1`.
pub fn is_minimal(t: &Tableau) -> bool {
    t.is_straight() && t.cells().all(|(c, v)| v == c.row + c.col - 1)
}

/// True if `t` is straight and its row-major reading is `1, 2, ..., |t|`.
pub fn is_superstandard(t: &Tableau) -> bool {
    match t.straight_rows() {
        Some(rows) => rows.iter().flatten().copied().eq(1..=t.len() as u32),
        None => false,
    }
}

/// True if `t` is straight and pushing every row flush right keeps the
/// columns increasing. Right-alignable tableaux are unique rectification
/// targets; the converse fails, so `false` is not a refutation.
pub fn is_urt_right_alignable(t: &Tableau) -> bool {
    is_right_alignable(t).unwrap_or(false)
}

fn initial_hook_arm_leg(t: &Tableau) -> Result<(Word, Word)> {
    let (arm, leg) = hook_arm_leg(t)?;
    if !t.is_initial() {
        return Err(Error::NotInitial);
    }
    Ok((arm, leg))
}

fn consecutive(word: &[u32]) -> bool {
    word.windows(2).all(|w| w[1] == w[0] + 1)
}

/// Exact test on initial hook tableaux: such a hook is a unique
/// rectification target precisely when its arm and its leg are both runs
/// of consecutive integers.
///
/// Unlike the other criteria this is an equivalence, so `false` refutes.
pub fn hook_is_urt(t: &Tableau) -> Result<bool> {
    let (arm, leg) = initial_hook_arm_leg(t)?;
    Ok(consecutive(&arm) && consecutive(&leg))
}

/// For an initial hook whose arm has an internal gap, the tableau obtained
/// by adding one box at `(2, 2)` holding the upper end of the first gap.
///
/// The result is insertion equivalent to `t` yet distinct, so `t` is not a
/// unique rectification target. Returns `None` when the arm has no gap.
pub fn hook_equivalent_partner(t: &Tableau) -> Result<Option<Tableau>> {
    let (arm, _) = initial_hook_arm_leg(t)?;
    let Some(gap) = arm.windows(2).find(|w| w[1] - w[0] > 1) else {
        return Ok(None);
    };
    let labels = t.cells().chain(once((Cell::new(2, 2), gap[1]))).collect();
    let filling = Filling::new(labels).expect("the added box is a fresh cell");
    Ok(Some(
        Tableau::new(filling).expect("the gap label fits strictly between its neighbors"),
    ))
}

/// Every tableau reachable from an initial hook by row inserting arm
/// labels followed by a gap and column inserting leg labels followed by a
/// gap, over all subsets and orders of those labels.
///
/// Every result lies in the insertion class of `t`; the class may contain
/// further tableaux not of this form.
pub fn hook_class_members(t: &Tableau) -> Result<BTreeSet<Tableau>> {
    let (arm, leg) = initial_hook_arm_leg(t)?;
    let gap_lowers = |w: &[u32]| -> Vec<u32> {
        w.windows(2).filter(|p| p[1] - p[0] >= 2).map(|p| p[0]).collect()
    };
    let row_letters = gap_lowers(&arm);
    let col_letters = gap_lowers(&leg);
    let mut members = BTreeSet::new();
    let mut seen = HashSet::new();
    let mut stack = vec![(t.clone(), 0u32, 0u32)];
    while let Some((current, used_rows, used_cols)) = stack.pop() {
        if !seen.insert((current.clone(), used_rows, used_cols)) {
            continue;
        }
        for (idx, &x) in row_letters.iter().enumerate() {
            if used_rows & (1 << idx) == 0 {
                let (next, _) = insert_letter(&current, x).expect("labels are positive");
                stack.push((next, used_rows | (1 << idx), used_cols));
            }
        }
        for (idx, &x) in col_letters.iter().enumerate() {
            if used_cols & (1 << idx) == 0 {
                let (next, _) = column_insert_letter(&current, x).expect("labels are positive");
                stack.push((next, used_rows, used_cols | (1 << idx)));
            }
        }
        members.insert(current);
    }
    Ok(members)
}

fn two_row_rows(j: u32, k: u32) -> (Rows, Rows) {
    assert!(k >= 1 && j >= k + 2, "the two-row family needs k >= 1 and j >= k + 2");
    let mut first: Vec<u32> = (1..=k + 1).collect();
    first.extend(k + 3..=j + 1);
    let mut second: Vec<u32> = (2..=k).collect();
    second.push(k + 2);
    let mut extended = second.clone();
    extended.push(k + 3);
    (vec![first.clone(), second], vec![first, extended])
}

/// A two-row tableau of shape `(j, k)` paired with its extension by one
/// box, the smallest family of equivalent-but-distinct straight tableaux.
///
/// The first row is `1, ..., k+1, k+3, ..., j+1` and the second row is
/// `2, ..., k, k+2`; the extension appends `k + 3` to the second row. Both
/// arise by inserting the letter `k + 1` once respectively twice into a
/// common tableau, so they are insertion equivalent and neither is a
/// unique rectification target.
///
/// # Panics
/// Panics unless `k >= 1` and `j >= k + 2`.
pub fn two_row_equivalent_pair(j: u32, k: u32) -> (Tableau, Tableau) {
    let (base, extended) = two_row_rows(j, k);
    (
        Tableau::from_rows(&base).expect("the two-row pattern is increasing"),
        Tableau::from_rows(&extended).expect("the extended pattern is increasing"),
    )
}

fn conjugate(parts: &[u32]) -> Vec<u32> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|c| parts.iter().take_while(|&&p| p >= c).count() as u32)
        .collect()
}

fn transpose_rows(rows: &[Vec<u32>]) -> Rows {
    let width = rows.first().map_or(0, |r| r.len());
    (0..width)
        .map(|c| rows.iter().map_while(|row| row.get(c).copied()).collect())
        .collect()
}

/// Embeds a two-row pattern pair at rows `i0 + 1` and `i0 + 2` (1-indexed)
/// of the given shape: rows above are minimal, the patterns are shifted up
/// by `i0`, and rows below are consecutive runs above the running maximum.
fn embed_pair(parts: &[u32], i0: usize, witness_block: &Rows, partner_block: &Rows) -> (Rows, Rows) {
    let shift = i0 as u32;
    let prefix: Rows = (0..i0)
        .map(|r| (0..parts[r]).map(|c| r as u32 + c + 1).collect())
        .collect();
    let place = |block: &Rows| -> Rows {
        let mut rows = prefix.clone();
        rows.extend(
            block
                .iter()
                .map(|row| row.iter().map(|&v| v + shift).collect::<Vec<u32>>()),
        );
        rows
    };
    let mut witness = place(witness_block);
    let mut partner = place(partner_block);
    let mut running = witness.iter().flatten().copied().max().unwrap_or(0);
    debug_assert_eq!(
        running,
        partner.iter().flatten().copied().max().unwrap_or(0),
        "both patterns share their largest label"
    );
    for &len in &parts[i0 + 2..] {
        let row: Vec<u32> = (1..=len).map(|c| running + c).collect();
        running += len;
        witness.push(row.clone());
        partner.push(row);
    }
    (witness, partner)
}

fn witness_pair_rows(parts: &[u32]) -> Option<(Rows, Rows)> {
    if parts.is_empty() || parts.iter().all(|&p| p == parts[0]) || parts == [2, 1] {
        return None;
    }
    // A row followed by a row at least two boxes shorter hosts the two-row
    // pattern directly.
    if let Some(i) =
        (0..parts.len() - 1).find(|&i| parts[i] >= parts[i + 1] + 2 && parts[i + 1] > 0)
    {
        let (base, extended) = two_row_rows(parts[i], parts[i + 1]);
        return Some(embed_pair(parts, i, &base, &extended));
    }
    // Otherwise try the transpose, whose witness transposes back.
    let flipped = conjugate(parts);
    if (0..flipped.len() - 1).any(|i| flipped[i] >= flipped[i + 1] + 2 && flipped[i + 1] > 0) {
        let (witness, partner) =
            witness_pair_rows(&flipped).expect("the transposed shape has a row gap");
        return Some((transpose_rows(&witness), transpose_rows(&partner)));
    }
    // Remaining shapes are a full-width block over a strict staircase:
    // (k^i, k-1, ..., k-m) with k > m >= 1.
    let k = parts[0];
    let i = parts.iter().take_while(|&&p| p == k).count();
    debug_assert!(
        parts[i..].iter().enumerate().all(|(d, &p)| p + d as u32 + 1 == k),
        "every shape without a two-box step in either direction is a block over a staircase"
    );
    if k >= 3 {
        let (base, extended) = two_row_rows(k, k - 2);
        // The extended pattern has shape (k, k-1), matching rows i and
        // i+1 of the staircase; the shorter pattern is its partner.
        return Some(embed_pair(parts, i - 1, &extended, &base));
    }
    // k == 2: the transpose is a taller staircase with k >= 3.
    let (witness, partner) =
        witness_pair_rows(&conjugate(parts)).expect("the transpose is a block over a staircase");
    Some((transpose_rows(&witness), transpose_rows(&partner)))
}

/// A tableau of the given straight shape that is provably not a unique
/// rectification target, or `None` exactly when the shape is a rectangle
/// or `(2, 1)`, where no such tableau exists.
pub fn non_urt_witness(shape: &Shape) -> Result<Option<Tableau>> {
    Ok(non_urt_witness_pair(shape)?.map(|(witness, _)| witness))
}

/// Like [`non_urt_witness`], also returning a distinct insertion-equivalent
/// tableau certifying that the witness's class has at least two members.
pub fn non_urt_witness_pair(shape: &Shape) -> Result<Option<(Tableau, Tableau)>> {
    let parts = shape.partition().ok_or(Error::NotStraight)?;
    Ok(witness_pair_rows(&parts).map(|(witness, partner)| {
        (
            Tableau::from_rows(&witness).expect("the witness is increasing"),
            Tableau::from_rows(&partner).expect("the partner is increasing"),
        )
    }))
}

/// Certifies the corner tableau of a fat-hook union: structural criteria
/// first, then the exhaustive engine when the alphabet is small.
fn corner_verdict(u: &Tableau) -> Verdict {
    let s = u.standardize();
    match structural_urt_verdict(&s).expect("corner tableaux are straight") {
        Verdict::Unknown if s.max_label() <= 7 => {
            if is_urt_exhaustive(&s).expect("standardized tableaux lie in their universe") {
                Verdict::Yes
            } else {
                Verdict::No
            }
        }
        verdict => verdict,
    }
}

/// Tests whether `t` is the union of a minimal tableau of fat-hook shape
/// `(a^b, c^d)` with `a >= c` and a corner tableau `U` that is itself a
/// unique rectification target; such unions are unique rectification
/// targets.
///
/// `U` sits strictly southeast of the minimal part, in rows below `b` and
/// columns beyond `c`, and all its labels exceed every minimal label. The
/// corner tableau is certified by [`structural_urt_verdict`] after
/// standardizing, falling back to the exhaustive engine when its alphabet
/// has at most seven letters; if every decomposition leaves the corner
/// undecided the verdict is [`Verdict::Unknown`].
pub fn is_fat_hook_union_urt(t: &Tableau) -> Verdict {
    let Some(rows) = t.straight_rows() else {
        return Verdict::No;
    };
    if rows.is_empty() {
        return Verdict::No;
    }
    let width = rows[0].len();
    let minimal_at = |r: usize, c: usize| rows[r][c] == (r + c + 1) as u32;
    let mut undecided = false;
    for b in 1..=rows.len() {
        if rows[b - 1].len() != width || !(0..width).all(|c| minimal_at(b - 1, c)) {
            break;
        }
        let lower = &rows[b..];
        let c_max = lower.iter().map(Vec::len).min().unwrap_or(width).min(width);
        for c in 0..=c_max {
            // Entries of the minimal part are fixed, so once a column
            // fails every wider minimal part fails too.
            if c > 0 && !(0..lower.len()).all(|d| minimal_at(b + d, c - 1)) {
                break;
            }
            let corner: Rows = lower
                .iter()
                .map(|row| row[c..].to_vec())
                .take_while(|row| !row.is_empty())
                .collect();
            if corner.is_empty() {
                // The whole tableau is minimal of fat-hook shape.
                return Verdict::Yes;
            }
            let mut floor = (b + width - 1) as u32;
            if c > 0 {
                floor = floor.max((b + lower.len() + c - 1) as u32);
            }
            if corner.iter().flatten().any(|&v| v <= floor) {
                // A larger corner column range may still work; keep going.
                continue;
            }
            let corner_t =
                Tableau::from_rows(&corner).expect("a corner of an increasing tableau is increasing");
            match corner_verdict(&corner_t) {
                Verdict::Yes => return Verdict::Yes,
                Verdict::Unknown => undecided = true,
                Verdict::No => {}
            }
        }
    }
    if undecided {
        Verdict::Unknown
    } else {
        Verdict::No
    }
}

/// Combines every structural criterion into one verdict for a straight
/// tableau.
///
/// The class of a tableau maps to the class of its standardization under
/// relabeling, so the tableau is standardized first. Initial hooks are
/// decided exactly in both directions; elsewhere the criteria are merely
/// sufficient, so failure yields [`Verdict::Unknown`] rather than
/// [`Verdict::No`].
pub fn structural_urt_verdict(t: &Tableau) -> Result<Verdict> {
    if !t.is_straight() {
        return Err(Error::NotStraight);
    }
    let s = t.standardize();
    if is_minimal(&s) || is_superstandard(&s) || is_urt_right_alignable(&s) {
        return Ok(Verdict::Yes);
    }
    if is_hook_shape(&s.shape()) {
        let urt = hook_is_urt(&s).expect("standardized tableaux are initial");
        return Ok(if urt { Verdict::Yes } else { Verdict::No });
    }
    Ok(match is_fat_hook_union_urt(&s) {
        Verdict::Yes => Verdict::Yes,
        _ => Verdict::Unknown,
    })
}
