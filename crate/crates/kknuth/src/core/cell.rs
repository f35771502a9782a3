//! Cells and finite cell sets.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A cell in matrix coordinates: rows increase downward, columns rightward,
/// both starting at 1.
///
/// The derived order is row-major, so sorted containers iterate cells row by
/// row and left to right within a row.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    /// Creates a cell.
    ///
    /// # Panics
    ///
    /// Panics if `row` or `col` is 0; coordinates are 1-indexed.
    pub fn new(row: u32, col: u32) -> Cell {
        assert!(row >= 1 && col >= 1, "cells are 1-indexed");
        Cell { row, col }
    }

    /// True if `self` is weakly above and weakly left of `other`.
    pub fn weakly_nw_of(self, other: Cell) -> bool {
        self.row <= other.row && self.col <= other.col
    }

    /// True if `self` is weakly below and weakly left of `other`.
    pub fn weakly_sw_of(self, other: Cell) -> bool {
        self.row >= other.row && self.col <= other.col
    }

    /// True if `self` is weakly below and weakly right of `other`.
    pub fn weakly_se_of(self, other: Cell) -> bool {
        self.row >= other.row && self.col >= other.col
    }
}

/// A finite set of cells.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    cells: BTreeSet<Cell>,
}

impl Shape {
    /// The empty shape.
    pub fn empty() -> Shape {
        Shape::default()
    }

    /// Builds a shape from arbitrary cells; duplicates collapse.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Shape {
        Shape {
            cells: cells.into_iter().collect(),
        }
    }

    /// The straight shape whose row `i` holds cells `(i, 1..=parts[i-1])`.
    ///
    /// `parts` must be weakly decreasing; trailing zeros are allowed.
    pub fn from_partition(parts: &[u32]) -> Result<Shape> {
        if !is_partition(parts) {
            return Err(Error::NotPartition);
        }
        let mut cells = BTreeSet::new();
        for (i, &len) in parts.iter().enumerate() {
            for j in 1..=len {
                cells.insert(Cell::new(i as u32 + 1, j));
            }
        }
        Ok(Shape { cells })
    }

    /// The skew shape `outer / inner`: row `i` holds columns
    /// `inner[i-1]+1 ..= outer[i-1]`.
    pub fn skew(outer: &[u32], inner: &[u32]) -> Result<Shape> {
        if !is_partition(outer) || !is_partition(inner) {
            return Err(Error::NotPartition);
        }
        if !partition_contains(outer, inner) {
            return Err(Error::InnerNotContained);
        }
        let mut cells = BTreeSet::new();
        for (i, &len) in outer.iter().enumerate() {
            let skip = inner.get(i).copied().unwrap_or(0);
            for j in skip + 1..=len {
                cells.insert(Cell::new(i as u32 + 1, j));
            }
        }
        Ok(Shape { cells })
    }

    /// Number of cells.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    /// True if the shape has no cells.
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Membership test.
    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    /// Largest row index, or 0 for the empty shape.
    pub fn max_row(&self) -> u32 {
        self.cells.iter().map(|c| c.row).max().unwrap_or(0)
    }

    /// Largest column index, or 0 for the empty shape.
    pub fn max_col(&self) -> u32 {
        self.cells.iter().map(|c| c.col).max().unwrap_or(0)
    }

    /// Cell counts for rows `1..=max_row`.
    pub fn row_lengths(&self) -> Vec<u32> {
        let mut lens = vec![0; self.max_row() as usize];
        for c in &self.cells {
            lens[c.row as usize - 1] += 1;
        }
        lens
    }

    /// True if the shape is a Young diagram: closed under moving up and left.
    pub fn is_straight(&self) -> bool {
        self.cells.iter().all(|c| {
            (c.row == 1 || self.contains(Cell::new(c.row - 1, c.col)))
                && (c.col == 1 || self.contains(Cell::new(c.row, c.col - 1)))
        })
    }

    /// Row lengths as a partition, if the shape is straight.
    pub fn partition(&self) -> Option<Vec<u32>> {
        if self.is_straight() {
            Some(self.row_lengths())
        } else {
            None
        }
    }

    /// Writes the shape as `outer / inner` with the smallest possible outer
    /// partition, or `None` if the cells do not form a skew shape.
    ///
    /// Straight shapes decompose with an empty inner partition.
    pub fn skew_decomposition(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        if self.is_empty() {
            return Some((Vec::new(), Vec::new()));
        }
        let max_row = self.max_row() as usize;
        let mut bounds = vec![None; max_row];
        for c in &self.cells {
            let entry = bounds[c.row as usize - 1].get_or_insert((c.col, c.col));
            entry.0 = entry.0.min(c.col);
            entry.1 = entry.1.max(c.col);
        }
        let mut outer = vec![0; max_row];
        let mut inner = vec![0; max_row];
        for i in (0..max_row).rev() {
            let below = if i + 1 < max_row { outer[i + 1] } else { 0 };
            match bounds[i] {
                Some((lo, hi)) => {
                    // Rows of a skew shape are contiguous runs of columns.
                    if hi - lo + 1 != self.cells.iter().filter(|c| c.row as usize == i + 1).count() as u32 {
                        return None;
                    }
                    outer[i] = hi;
                    inner[i] = lo - 1;
                }
                None => {
                    outer[i] = below;
                    inner[i] = below;
                }
            }
            if outer[i] < below || (i + 1 < max_row && inner[i] < inner[i + 1]) {
                return None;
            }
        }
        while outer.last() == Some(&0) {
            outer.pop();
        }
        while inner.last() == Some(&0) {
            inner.pop();
        }
        Some((outer, inner))
    }

    /// The shape reflected across the main diagonal.
    pub fn transpose(&self) -> Shape {
        Shape::from_cells(self.cells.iter().map(|c| Cell::new(c.col, c.row)))
    }
}

/// True if `parts` is weakly decreasing.
pub fn is_partition(parts: &[u32]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

/// True if `inner[i] <= outer[i]` for every row, treating missing rows as 0.
pub fn partition_contains(outer: &[u32], inner: &[u32]) -> bool {
    (0..inner.len().max(outer.len())).all(|i| {
        inner.get(i).copied().unwrap_or(0) <= outer.get(i).copied().unwrap_or(0)
    })
}

/// Cells that can be added to a straight shape so it stays straight.
///
/// These are the positions `(i, parts[i-1] + 1)` where the row above is
/// strictly longer, plus the start of the first empty row. Corners are
/// returned top to bottom and always occupy distinct rows and columns.
pub fn addable_corners(parts: &[u32]) -> Vec<Cell> {
    let mut corners = Vec::new();
    let rows = parts.iter().take_while(|&&p| p > 0).count();
    for i in 0..rows {
        if i == 0 || parts[i - 1] > parts[i] {
            corners.push(Cell::new(i as u32 + 1, parts[i] + 1));
        }
    }
    corners.push(Cell::new(rows as u32 + 1, 1));
    corners
}

/// Cells of a straight shape with no cell below or to the right.
///
/// These are the positions `(i, parts[i-1])` where the row below is strictly
/// shorter, returned top to bottom.
pub fn inner_corners(parts: &[u32]) -> Vec<Cell> {
    let rows = parts.iter().take_while(|&&p| p > 0).count();
    let mut corners = Vec::new();
    for i in 0..rows {
        let below = if i + 1 < rows { parts[i + 1] } else { 0 };
        if parts[i] > below {
            corners.push(Cell::new(i as u32 + 1, parts[i]));
        }
    }
    corners
}
