//! Integer partitions, skew shapes, cell regions and the dominance orders.
//!
//! Rows and columns are 0-based everywhere inside the crate; the 1-based
//! convention of the usual (i,j) grid pictures applies only to text input
//! and output.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros. Fails on interior zeros
    /// or parts that increase.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InteriorZero(parts));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The part at `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// |λ|, the number of cells of the Young diagram.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Conjugate partition: column sizes of the diagram.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Containment of Young diagrams: every row of `inner` fits in ours.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && (0..inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// Generalized dominance order: prefix sums compared up to the shorter
    /// length, vacuously true when either side is empty.
    pub fn gdom_le(&self, other: &Partition) -> bool {
        let n = self.len().min(other.len());
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..n {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a > b {
                return false;
            }
        }
        true
    }

    /// Dominance order on partitions of the same integer.
    pub fn dom_le(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(self.gdom_le(other))
    }

    /// Drops the first `j` parts; a partition with at most `j` parts tails to ∅.
    pub fn tail(&self, j: usize) -> Partition {
        Partition {
            parts: self.parts.get(j..).unwrap_or(&[]).to_vec(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"4,3,2"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(s.to_string(), "partition"))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A skew shape γ/λ: the cells of `outer` not in `inner`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Containment {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of rows, counting rows of the outer partition.
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Half-open column range `[start, end)` of row `i`, 0-based.
    pub fn row_range(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i) as usize, self.outer.part(i) as usize)
    }

    /// Length of row `i`.
    pub fn row_len(&self, i: usize) -> usize {
        let (s, e) = self.row_range(i);
        e - s
    }

    /// Number of cells.
    pub fn num_cells(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.num_cells() == 0
    }

    /// Cells in row-major order, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.rows()).flat_map(move |r| {
            let (s, e) = self.row_range(r);
            (s..e).map(move |c| (r, c))
        })
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        let (r, c) = cell;
        r < self.rows() && {
            let (s, e) = self.row_range(r);
            (s..e).contains(&c)
        }
    }

    /// The transposed shape γᵀ/λᵀ.
    pub fn transpose(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.transpose(),
            inner: self.inner.transpose(),
        }
    }

    pub fn region(&self) -> CellRegion {
        CellRegion::from_cells(self.cells())
    }
}

/// A 0-based (row, column) coordinate.
pub type Cell = (usize, usize);

/// An arbitrary finite set of cells. Derived regions produced by column
/// truncation or row deletion are generally not skew shapes, so they are
/// carried as plain cell sets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CellRegion {
    cells: BTreeSet<Cell>,
}

impl CellRegion {
    pub fn from_cells(iter: impl IntoIterator<Item = Cell>) -> Self {
        CellRegion {
            cells: iter.into_iter().collect(),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn is_subset(&self, other: &CellRegion) -> bool {
        self.cells.is_subset(&other.cells)
    }

    /// Nonzero row sizes, in no particular order.
    pub fn row_sizes(&self) -> Vec<usize> {
        sizes_by(self.cells.iter().map(|&(r, _)| r))
    }

    /// Nonzero column sizes, in no particular order.
    pub fn column_sizes(&self) -> Vec<usize> {
        sizes_by(self.cells.iter().map(|&(_, c)| c))
    }

    /// Mirror across the main diagonal.
    pub fn transpose(&self) -> CellRegion {
        CellRegion::from_cells(self.cells.iter().map(|&(r, c)| (c, r)))
    }
}

fn sizes_by(keys: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut counts = std::collections::BTreeMap::new();
    for k in keys {
        *counts.entry(k).or_insert(0usize) += 1;
    }
    counts.into_values().collect()
}

/// Builds γ/λ, checking containment.
pub fn skew(gamma: &Partition, lambda: &Partition) -> Result<SkewShape> {
    SkewShape::new(gamma.clone(), lambda.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("4,3,2").parts(), &[4, 3, 2]);
        assert!(p("").parts().is_empty());
        assert_eq!(p("3,2,0,0"), p("3,2"));
        assert_eq!(p("4,3,2").to_string(), "4,3,2");
        assert_eq!(Partition::empty().to_string(), "");
        assert!("2,3".parse::<Partition>().is_err());
        assert!("4,0,2".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p("4,3,2").transpose(), p("3,3,2,1"));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p("1,1,1").transpose(), p("3"));
    }

    #[test]
    fn transpose_is_involution_small_box_exhaustive() {
        // every partition with at most 12 parts, each at most 12
        let mut n = 0u64;
        for q in crate::survey::enumerate_partitions_in_box(12, 12) {
            assert_eq!(q.transpose().transpose(), q);
            n += 1;
        }
        assert_eq!(n, 2_704_156); // C(24,12)
    }

    #[test]
    fn containment() {
        assert!(p("4,3,2").contains(&p("2,1")));
        assert!(!p("2,2").contains(&p("3")));
        assert!(p("4,3,2").contains(&Partition::empty()));
        assert!(!p("2").contains(&p("1,1")));
    }

    #[test]
    fn gdom_examples() {
        assert!(p("7,7,5,4,1").gdom_le(&p("10,8,5,1")));
        assert!(Partition::empty().gdom_le(&p("3,1")));
        assert!(p("3,1").gdom_le(&Partition::empty()));
        assert!(!p("3,3").gdom_le(&p("4,1")));
    }

    #[test]
    fn dom_examples() {
        assert!(p("2,2").dom_le(&p("3,1")).unwrap());
        assert!(!p("3,1").dom_le(&p("2,2")).unwrap());
        assert!(p("3,1").dom_le(&p("3,1")).unwrap());
        assert!(p("2,2").dom_le(&p("4")).unwrap());
        assert!(matches!(
            p("2,2").dom_le(&p("3")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn skew_shapes() {
        let s = skew(&p("3,3,2"), &p("2,1")).unwrap();
        assert_eq!(s.num_cells(), 5);
        let mut sizes: Vec<usize> = (0..s.rows()).map(|i| s.row_len(i)).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 2]);

        let empty = skew(&p("2,1"), &p("2,1")).unwrap();
        assert!(empty.is_empty());

        assert!(skew(&p("2"), &p("3")).is_err());
    }

    #[test]
    fn regions() {
        let s = skew(&p("2,1"), &p("1")).unwrap();
        let cells: Vec<Cell> = s.region().cells().collect();
        assert_eq!(cells, vec![(0, 1), (1, 0)]);

        assert_eq!(
            skew(&p("1"), &Partition::empty()).unwrap().region().len(),
            1
        );
        assert!(skew(&p("2"), &p("2")).unwrap().region().is_empty());
    }

    #[test]
    fn region_size_matches_partition_sizes_in_box() {
        for gamma in crate::survey::enumerate_partitions_in_box(6, 6) {
            for lambda in crate::survey::enumerate_partitions_in_box(6, 6) {
                if !gamma.contains(&lambda) {
                    continue;
                }
                let s = skew(&gamma, &lambda).unwrap();
                assert_eq!(s.region().len() as u64, gamma.size() - lambda.size());
            }
        }
    }

    #[test]
    fn tail_drops_leading_parts() {
        assert_eq!(p("5,4,2").tail(0), p("5,4,2"));
        assert_eq!(p("5,4,2").tail(2), p("2"));
        assert_eq!(p("5,4,2").tail(3), Partition::empty());
        assert_eq!(p("5,4,2").tail(7), Partition::empty());
    }
}
