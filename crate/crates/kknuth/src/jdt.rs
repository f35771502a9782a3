//! Jeu-de-taquin slides for increasing tableaux, and rectification.
//!
//! A slide marks some cells with dots and then exchanges dots with labels,
//! one label value at a time. The exchange is simultaneous, so a dot next
//! to two equal labels absorbs both (labels can merge as they pass a dot)
//! and a label next to two dots lands in both (labels can duplicate).
//! Because of this, sliding a skew tableau to a straight shape by different
//! sequences of dot placements can produce different straight tableaux; all
//! of them are collected by [`rectifications`].

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::core::{addable_corners, inner_corners, Cell, Filling, Tableau};
use crate::error::{Error, Result};

/// The content of one cell during a slide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SlideCell {
    /// An empty cell a label may move into.
    Dot,
    /// An ordinary label.
    Label(u32),
}

/// A filling whose cells hold labels or dots.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DottedFilling {
    cells: BTreeMap<Cell, SlideCell>,
}

impl DottedFilling {
    /// Marks `dots` on top of the cells of `t`.
    ///
    /// The dotted cells must be disjoint from the cells of `t`.
    pub fn new(t: &Tableau, dots: &BTreeSet<Cell>) -> Result<DottedFilling> {
        let mut cells: BTreeMap<Cell, SlideCell> = t
            .cells()
            .map(|(c, v)| (c, SlideCell::Label(v)))
            .collect();
        for &dot in dots {
            if cells.insert(dot, SlideCell::Dot).is_some() {
                return Err(Error::InvalidSlideCells);
            }
        }
        Ok(DottedFilling { cells })
    }

    /// The content at `cell`, if any.
    pub fn get(&self, cell: Cell) -> Option<SlideCell> {
        self.cells.get(&cell).copied()
    }

    /// `(cell, content)` pairs in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, SlideCell)> + '_ {
        self.cells.iter().map(|(&c, &v)| (c, v))
    }

    /// The dotted cells.
    pub fn dots(&self) -> BTreeSet<Cell> {
        self.cells()
            .filter(|&(_, v)| v == SlideCell::Dot)
            .map(|(c, _)| c)
            .collect()
    }

    /// The labeled cells, with the dots removed.
    pub fn labels(&self) -> Filling {
        Filling::from_pairs(self.cells().filter_map(|(c, v)| match v {
            SlideCell::Label(l) => Some((c, l)),
            SlideCell::Dot => None,
        }))
        .expect("labels are positive")
    }
}

fn neighbors(c: Cell) -> impl Iterator<Item = Cell> {
    let mut out = Vec::with_capacity(4);
    out.push(Cell::new(c.row + 1, c.col));
    out.push(Cell::new(c.row, c.col + 1));
    if c.row > 1 {
        out.push(Cell::new(c.row - 1, c.col));
    }
    if c.col > 1 {
        out.push(Cell::new(c.row, c.col - 1));
    }
    out.into_iter()
}

/// Exchanges the contents `s` and `t` across adjacency, simultaneously:
/// every `s`-cell with a `t`-neighbor becomes `t`, and every `t`-cell with
/// an `s`-neighbor becomes `s`. All decisions read the original filling.
pub fn swap(f: &DottedFilling, s: SlideCell, t: SlideCell) -> DottedFilling {
    let flips = |from: SlideCell, to: SlideCell, c: Cell| {
        f.get(c) == Some(from) && neighbors(c).any(|nb| f.get(nb) == Some(to))
    };
    DottedFilling {
        cells: f
            .cells()
            .map(|(c, v)| {
                let new = if flips(s, t, c) {
                    t
                } else if flips(t, s, c) {
                    s
                } else {
                    v
                };
                (c, new)
            })
            .collect(),
    }
}

/// The label interval `[a, b]` a slide sweeps over, or `None` for a tableau
/// with no labels.
fn label_range(t: &Tableau) -> Option<(u32, u32)> {
    let support = t.support();
    Some((*support.first()?, *support.last()?))
}

/// Slides `t` toward the northwest, starting from the dotted cells `from`.
///
/// `from` must be a nonempty subset of the maximally southeast cells of the
/// inner shape of `t`. Dots exchange with each label value in increasing
/// order; the cells holding dots at the end are deleted. Labels can merge,
/// so the result can have fewer cells than `t`.
pub fn forward_slide(t: &Tableau, from: &BTreeSet<Cell>) -> Result<Tableau> {
    let (_, inner) = t.shape().skew_decomposition().ok_or(Error::NotSkew)?;
    let corners: BTreeSet<Cell> = inner_corners(&inner).into_iter().collect();
    if from.is_empty() || !from.is_subset(&corners) {
        return Err(Error::InvalidSlideCells);
    }
    let mut dotted = DottedFilling::new(t, from)?;
    if let Some((a, b)) = label_range(t) {
        for v in a..=b {
            dotted = swap(&dotted, SlideCell::Dot, SlideCell::Label(v));
        }
    }
    Tableau::new(dotted.labels())
}

/// Slides `t` toward the southeast, starting from the dotted cells `from`.
///
/// `from` must be a nonempty subset of the cells just outside the outer
/// shape of `t` whose north and west neighbors lie inside it (or on the
/// boundary). Dots exchange with each label value in decreasing order;
/// labels can duplicate, so the result can have more cells than `t`.
pub fn reverse_slide(t: &Tableau, from: &BTreeSet<Cell>) -> Result<Tableau> {
    let (outer, _) = t.shape().skew_decomposition().ok_or(Error::NotSkew)?;
    let corners: BTreeSet<Cell> = addable_corners(&outer).into_iter().collect();
    if from.is_empty() || !from.is_subset(&corners) {
        return Err(Error::InvalidSlideCells);
    }
    let mut dotted = DottedFilling::new(t, from)?;
    if let Some((a, b)) = label_range(t) {
        for v in (a..=b).rev() {
            dotted = swap(&dotted, SlideCell::Dot, SlideCell::Label(v));
        }
    }
    Tableau::new(dotted.labels())
}

/// Rectifies `t` by sliding from every inner corner at every step.
///
/// This is one deterministic choice of rectification order; other orders
/// may reach other straight tableaux.
pub fn rectify(t: &Tableau) -> Result<Tableau> {
    let mut cur = t.clone();
    loop {
        let (_, inner) = cur.shape().skew_decomposition().ok_or(Error::NotSkew)?;
        let corners: BTreeSet<Cell> = inner_corners(&inner).into_iter().collect();
        if corners.is_empty() {
            return Ok(cur);
        }
        cur = forward_slide(&cur, &corners)?;
    }
}

/// Every straight tableau reachable from `t` by forward slides, over all
/// choices of starting cells at every step.
///
/// Each slide consumes at least one inner-shape cell, so the search space
/// is finite; intermediate tableaux are deduplicated.
pub fn rectifications(t: &Tableau) -> Result<BTreeSet<Tableau>> {
    t.shape().skew_decomposition().ok_or(Error::NotSkew)?;
    let mut results = BTreeSet::new();
    let mut seen: HashSet<Tableau> = HashSet::new();
    let mut stack = vec![t.clone()];
    seen.insert(t.clone());
    while let Some(cur) = stack.pop() {
        let (_, inner) = cur
            .shape()
            .skew_decomposition()
            .expect("slides preserve skew shapes");
        let corners = inner_corners(&inner);
        if corners.is_empty() {
            results.insert(cur);
            continue;
        }
        assert!(corners.len() < usize::BITS as usize);
        for bits in 1..(1usize << corners.len()) {
            let from: BTreeSet<Cell> = corners
                .iter()
                .enumerate()
                .filter(|&(i, _)| bits >> i & 1 == 1)
                .map(|(_, &c)| c)
                .collect();
            let next = forward_slide(&cur, &from)?;
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    Ok(results)
}
