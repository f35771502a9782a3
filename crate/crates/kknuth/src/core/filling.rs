//! Fillings and increasing tableaux.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::core::cell::{Cell, Shape};
use crate::error::{Error, Result};

/// An assignment of positive-integer labels to a finite set of cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filling {
    labels: BTreeMap<Cell, u32>,
}

impl Filling {
    /// The empty filling.
    pub fn empty() -> Filling {
        Filling::default()
    }

    /// Wraps a label map, rejecting the label 0.
    pub fn new(labels: BTreeMap<Cell, u32>) -> Result<Filling> {
        if labels.values().any(|&v| v == 0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Filling { labels })
    }

    /// Builds a filling from `(cell, label)` pairs.
    ///
    /// Later pairs must not revisit a cell.
    pub fn from_pairs<I: IntoIterator<Item = (Cell, u32)>>(pairs: I) -> Result<Filling> {
        let mut labels = BTreeMap::new();
        for (cell, label) in pairs {
            if label == 0 {
                return Err(Error::ZeroLetter);
            }
            if labels.insert(cell, label).is_some() {
                return Err(Error::RowMismatch);
            }
        }
        Ok(Filling { labels })
    }

    /// The underlying shape.
    pub fn shape(&self) -> Shape {
        Shape::from_cells(self.labels.keys().copied())
    }

    /// The label at `cell`, if present.
    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.labels.get(&cell).copied()
    }

    /// `(cell, label)` pairs in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.labels.iter().map(|(&c, &v)| (c, v))
    }

    /// Number of cells.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// True if no cell is filled.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The set of labels that occur.
    pub fn support(&self) -> BTreeSet<u32> {
        self.labels.values().copied().collect()
    }

    /// The largest label, or 0 for the empty filling.
    pub fn max_label(&self) -> u32 {
        self.labels.values().copied().max().unwrap_or(0)
    }

    /// True if the support is exactly `{1, ..., max_label}`.
    pub fn is_initial(&self) -> bool {
        self.support().len() as u32 == self.max_label()
    }

    /// True if labels strictly increase toward the southeast: whenever cell
    /// `a` is weakly northwest of a different cell `b`, the label at `a` is
    /// strictly smaller.
    ///
    /// For row- and column-contiguous shapes this is the usual condition
    /// that rows increase rightward and columns increase downward; stated
    /// pairwise it also constrains cells that face each other across gaps.
    pub fn is_increasing(&self) -> bool {
        // Row-major iteration lists every weakly-NW-comparable pair with the
        // northwest cell first.
        let cells: Vec<(Cell, u32)> = self.cells().collect();
        for (i, &(a, va)) in cells.iter().enumerate() {
            for &(b, vb) in &cells[i + 1..] {
                if a.weakly_nw_of(b) && va >= vb {
                    return false;
                }
            }
        }
        true
    }

    /// Relabels by the unique order isomorphism onto `{1, ..., k}`, where
    /// `k` is the number of distinct labels.
    pub fn standardize(&self) -> Filling {
        let ranks: Vec<u32> = self.support().into_iter().collect();
        Filling {
            labels: self
                .labels
                .iter()
                .map(|(&c, v)| (c, ranks.binary_search(v).unwrap() as u32 + 1))
                .collect(),
        }
    }

    /// Reflects the filling across the main diagonal.
    pub fn transpose(&self) -> Filling {
        Filling {
            labels: self
                .labels
                .iter()
                .map(|(&c, &v)| (Cell::new(c.col, c.row), v))
                .collect(),
        }
    }

    /// Keeps only the cells whose labels lie in `a..=b`, in place.
    pub fn restrict(&self, a: u32, b: u32) -> Result<Filling> {
        if a > b {
            return Err(Error::EmptyInterval { a, b });
        }
        Ok(Filling {
            labels: self
                .labels
                .iter()
                .filter(|(_, &v)| a <= v && v <= b)
                .map(|(&c, &v)| (c, v))
                .collect(),
        })
    }

    /// Labels of each nonempty row, top to bottom and left to right, with
    /// their row indices.
    pub(crate) fn row_groups(&self) -> Vec<(u32, Vec<u32>)> {
        let mut rows: Vec<(u32, Vec<u32>)> = Vec::new();
        for (cell, label) in self.cells() {
            match rows.last_mut() {
                Some((row, labels)) if *row == cell.row => labels.push(label),
                _ => rows.push((cell.row, vec![label])),
            }
        }
        rows
    }
}

/// Identifies a straight tableau: sorted row lengths plus row-major entries.
pub type CanonicalKey = (Vec<u32>, Vec<u32>);

/// An increasing filling.
///
/// The shape may be straight, skew, or arbitrary; operations that need a
/// particular kind of shape say so and return an error otherwise.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau {
    filling: Filling,
}

impl Tableau {
    /// The empty tableau.
    pub fn empty() -> Tableau {
        Tableau::default()
    }

    /// Checks that `filling` is increasing and wraps it.
    pub fn new(filling: Filling) -> Result<Tableau> {
        if !filling.is_increasing() {
            return Err(Error::NotIncreasing);
        }
        Ok(Tableau { filling })
    }

    /// Builds a straight tableau from left-justified rows.
    ///
    /// Row lengths must weakly decrease and the labels must increase along
    /// rows and columns. Trailing empty rows are ignored.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Tableau> {
        let mut rows = rows.to_vec();
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        let lengths: Vec<u32> = rows.iter().map(|r| r.len() as u32).collect();
        if !crate::core::cell::is_partition(&lengths) {
            return Err(Error::NotPartition);
        }
        let pairs = rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &v)| (Cell::new(i as u32 + 1, j as u32 + 1), v))
        });
        Tableau::new(Filling::from_pairs(pairs)?)
    }

    /// Builds a skew tableau of shape `outer / inner` from the labels of
    /// each row, left to right. Empty rows are given as empty lists.
    pub fn from_skew_rows(outer: &[u32], inner: &[u32], rows: &[Vec<u32>]) -> Result<Tableau> {
        let shape = Shape::skew(outer, inner)?;
        if rows.len() != outer.len() {
            return Err(Error::RowMismatch);
        }
        let mut pairs = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            let skip = inner.get(i).copied().unwrap_or(0);
            if skip + row.len() as u32 != outer[i] {
                return Err(Error::RowMismatch);
            }
            for (j, &v) in row.iter().enumerate() {
                pairs.push((Cell::new(i as u32 + 1, skip + j as u32 + 1), v));
            }
        }
        debug_assert_eq!(pairs.len(), shape.len());
        Tableau::new(Filling::from_pairs(pairs)?)
    }

    /// The underlying filling.
    pub fn filling(&self) -> &Filling {
        &self.filling
    }

    /// Unwraps the underlying filling.
    pub fn into_filling(self) -> Filling {
        self.filling
    }

    /// The underlying shape.
    pub fn shape(&self) -> Shape {
        self.filling.shape()
    }

    /// The label at `cell`, if present.
    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.filling.get(cell)
    }

    /// `(cell, label)` pairs in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.filling.cells()
    }

    /// Number of cells.
    pub fn len(&self) -> usize {
        self.filling.len()
    }

    /// True if the tableau has no cells.
    pub fn is_empty(&self) -> bool {
        self.filling.is_empty()
    }

    /// The set of labels that occur.
    pub fn support(&self) -> BTreeSet<u32> {
        self.filling.support()
    }

    /// The largest label, or 0 for the empty tableau.
    pub fn max_label(&self) -> u32 {
        self.filling.max_label()
    }

    /// True if the support is exactly `{1, ..., max_label}`.
    pub fn is_initial(&self) -> bool {
        self.filling.is_initial()
    }

    /// True if the shape is a Young diagram.
    pub fn is_straight(&self) -> bool {
        self.shape().is_straight()
    }

    /// Row label vectors for a straight tableau, or `None` otherwise.
    pub fn straight_rows(&self) -> Option<Vec<Vec<u32>>> {
        if !self.is_straight() {
            return None;
        }
        Some(self.filling.row_groups().into_iter().map(|(_, row)| row).collect())
    }

    /// Relabels by the unique order isomorphism onto `{1, ..., k}`.
    ///
    /// Equal labels stay equal, so the result is again increasing.
    pub fn standardize(&self) -> Tableau {
        Tableau {
            filling: self.filling.standardize(),
        }
    }

    /// Reflects across the main diagonal; the result is again increasing.
    pub fn transpose(&self) -> Tableau {
        Tableau {
            filling: self.filling.transpose(),
        }
    }

    /// Keeps only the cells whose labels lie in `a..=b`, in place.
    ///
    /// The result is an increasing filling but its shape is generally
    /// neither straight nor skew, so it is returned as a `Filling`.
    pub fn restrict(&self, a: u32, b: u32) -> Result<Filling> {
        self.filling.restrict(a, b)
    }

    /// Sorted row lengths together with the row-major entry list.
    ///
    /// Straight tableaux are determined by their key; the engine and the
    /// snapshot format index tableaux this way.
    pub fn canonical_key(&self) -> CanonicalKey {
        let mut lengths = self.shape().row_lengths();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        let entries = self.cells().map(|(_, v)| v).collect();
        (lengths, entries)
    }
}

/// The JSON forms of a tableau.
///
/// Straight tableaux serialize as `{"rows": [[...], ...]}` and skew ones as
/// `{"skew": {"outer": [...], "inner": [...], "rows": [[...], ...]}}` with
/// row labels listed left to right. Any other shape falls back to
/// `{"cells": [[row, col, label], ...]}`. All three forms are accepted when
/// deserializing.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum TableauRepr {
    Rows { rows: Vec<Vec<u32>> },
    Skew { skew: SkewRepr },
    Cells { cells: Vec<(u32, u32, u32)> },
}

#[derive(Serialize, Deserialize)]
struct SkewRepr {
    outer: Vec<u32>,
    inner: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

impl From<&Tableau> for TableauRepr {
    fn from(t: &Tableau) -> TableauRepr {
        if let Some(rows) = t.straight_rows() {
            return TableauRepr::Rows { rows };
        }
        if let Some((outer, inner)) = t.shape().skew_decomposition() {
            let mut rows = vec![Vec::new(); outer.len()];
            for (cell, label) in t.cells() {
                rows[cell.row as usize - 1].push(label);
            }
            return TableauRepr::Skew {
                skew: SkewRepr { outer, inner, rows },
            };
        }
        TableauRepr::Cells {
            cells: t.cells().map(|(c, v)| (c.row, c.col, v)).collect(),
        }
    }
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;

    fn try_from(repr: TableauRepr) -> Result<Tableau> {
        match repr {
            TableauRepr::Rows { rows } => Tableau::from_rows(&rows),
            TableauRepr::Skew { skew } => {
                Tableau::from_skew_rows(&skew.outer, &skew.inner, &skew.rows)
            }
            TableauRepr::Cells { cells } => {
                if cells.iter().any(|&(r, c, _)| r == 0 || c == 0) {
                    return Err(Error::RowMismatch);
                }
                Tableau::new(Filling::from_pairs(
                    cells.into_iter().map(|(r, c, v)| (Cell::new(r, c), v)),
                )?)
            }
        }
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Tableau, D::Error> {
        let repr = TableauRepr::deserialize(deserializer)?;
        Tableau::try_from(repr).map_err(serde::de::Error::custom)
    }
}
