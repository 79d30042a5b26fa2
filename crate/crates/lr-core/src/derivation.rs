//! Shape surgery and the derived bound partitions.
//!
//! Sorting the row sizes of a region gives its left-top standardization;
//! sorting column sizes and transposing gives the top-left standardization.
//! Deleting the top `i` cells of every column, or a chosen set of rows,
//! yields smaller regions whose standardizations bound the content tails of
//! LR tableaux in generalized dominance order.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::{CellRegion, Partition, SkewShape};

/// A strictly increasing set of 0-based row indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RowDeletionIndex {
    rows: Vec<usize>,
}

impl RowDeletionIndex {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if !rows.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::RowIndicesNotIncreasing(rows));
        }
        Ok(RowDeletionIndex { rows })
    }

    /// Parses 1-based indices such as `1,3`.
    pub fn from_one_based(rows: &[usize]) -> Result<Self> {
        for &r in rows {
            if r == 0 {
                return Err(Error::RowIndexOutOfRange { index: 0, rows: 0 });
            }
        }
        Self::new(rows.iter().map(|&r| r - 1).collect())
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn check_range(&self, rows: usize) -> Result<()> {
        match self.rows.last() {
            Some(&r) if r >= rows => Err(Error::RowIndexOutOfRange {
                index: r + 1,
                rows,
            }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for RowDeletionIndex {
    /// 1-based, comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", r + 1)?;
        }
        Ok(())
    }
}

/// Row sizes of the region, sorted weakly decreasing.
pub fn left_top_standardization(region: &CellRegion) -> Partition {
    let mut sizes = region.row_sizes();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(sizes.into_iter().map(|s| s as u32).collect())
        .expect("sorted positive sizes form a partition")
}

/// Transpose of the weakly decreasing column sizes of the region.
pub fn top_left_standardization(region: &CellRegion) -> Partition {
    let mut sizes = region.column_sizes();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(sizes.into_iter().map(|s| s as u32).collect())
        .expect("sorted positive sizes form a partition")
        .transpose()
}

/// Deletes the top `i` cells present in each column of the shape. Gaps left
/// by the inner partition do not count toward the depth.
pub fn truncate_columns(shape: &SkewShape, i: usize) -> CellRegion {
    let mut depth: BTreeMap<usize, usize> = BTreeMap::new();
    let mut cells = Vec::new();
    // row-major order visits each column top to bottom
    for (r, c) in shape.cells() {
        let d = depth.entry(c).or_insert(0);
        *d += 1;
        if *d > i {
            cells.push((r, c));
        }
    }
    CellRegion::from_cells(cells)
}

/// Deletes the chosen rows and packs the remaining rows upward, keeping
/// every cell's column.
pub fn delete_rows(shape: &SkewShape, idx: &RowDeletionIndex) -> Result<CellRegion> {
    Ok(delete_rows_shape(shape, idx)?.region())
}

/// Same deletion, keeping the result anchored as a skew shape. Subsequences
/// of weakly decreasing row bounds stay weakly decreasing, so the packed
/// rows always form one.
pub fn delete_rows_shape(shape: &SkewShape, idx: &RowDeletionIndex) -> Result<SkewShape> {
    idx.check_range(shape.rows())?;
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for r in 0..shape.rows() {
        if idx.rows().binary_search(&r).is_err() {
            outer.push(shape.outer().part(r));
            inner.push(shape.inner().part(r));
        }
    }
    SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)
}

/// The i-th lower derivation: left-top standardization after deleting the
/// top `i` cells of every column. `i = 0` standardizes the shape itself.
pub fn lower_derivation(shape: &SkewShape, i: usize) -> Partition {
    left_top_standardization(&truncate_columns(shape, i))
}

/// The upper derivation for a set of deleted rows; the empty set
/// standardizes the shape itself.
pub fn upper_derivation(shape: &SkewShape, idx: &RowDeletionIndex) -> Result<Partition> {
    Ok(top_left_standardization(&delete_rows(shape, idx)?))
}
