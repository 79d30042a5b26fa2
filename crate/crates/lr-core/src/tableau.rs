//! Skew tableaux, reading words, and the lattice-word test.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{Cell, CellRegion, Partition, SkewShape};

/// A finite sequence of positive integer letters.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True when every prefix contains at least as many (k-1)s as ks, for
    /// every letter k ≥ 2.
    pub fn is_lattice(&self) -> bool {
        let max = self.letters.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0u32; max + 1];
        for &x in &self.letters {
            let x = x as usize;
            counts[x] += 1;
            if x >= 2 && counts[x] > counts[x - 1] {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.letters {
            if x < 10 {
                write!(f, "{x}")?;
            } else {
                write!(f, "({x})")?;
            }
        }
        Ok(())
    }
}

/// Label multiplicities: `counts()[i]` is how many times label i+1 occurs.
/// Canonical form carries no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Content {
    counts: Vec<u32>,
}

impl Content {
    pub fn new(mut counts: Vec<u32>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        Content { counts }
    }

    pub fn from_labels<'a>(labels: impl Iterator<Item = &'a u32>) -> Self {
        let mut counts = Vec::new();
        for &x in labels {
            let i = (x - 1) as usize;
            if i >= counts.len() {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
        }
        Content::new(counts)
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// Multiplicity of `label` (1-based).
    pub fn count(&self, label: u32) -> u32 {
        self.counts.get((label - 1) as usize).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// The content as a partition, when the counts happen to weakly decrease.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.counts.clone()).ok()
    }
}

impl From<&Partition> for Content {
    fn from(p: &Partition) -> Self {
        Content::new(p.parts().to_vec())
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A labeling of every cell of a skew shape with a positive integer.
///
/// Semi-standardness is a property checked by [`SkewTableau::is_semistandard`],
/// not an invariant of the type: non-semi-standard fillings must be
/// representable so they can be rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTableau {
    shape: SkewShape,
    // row-major, matching shape.cells()
    labels: Vec<u32>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, labels: Vec<u32>) -> Result<Self> {
        if labels.len() as u64 != shape.num_cells() {
            return Err(Error::InvalidTableau(format!(
                "{} labels for a shape with {} cells",
                labels.len(),
                shape.num_cells()
            )));
        }
        if labels.contains(&0) {
            return Err(Error::InvalidTableau("label 0".into()));
        }
        Ok(SkewTableau { shape, labels })
    }

    /// Builds a tableau from per-row label lists (skipping inner cells).
    pub fn from_rows(shape: SkewShape, rows: &[Vec<u32>]) -> Result<Self> {
        if rows.len() != shape.rows() {
            return Err(Error::InvalidTableau(format!(
                "{} label rows for a shape with {} rows",
                rows.len(),
                shape.rows()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i) {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} labels, expected {}",
                    i + 1,
                    row.len(),
                    shape.row_len(i)
                )));
            }
        }
        SkewTableau::new(shape, rows.concat())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Labels in row-major order.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label_at(&self, cell: Cell) -> Option<u32> {
        if !self.shape.contains_cell(cell) {
            return None;
        }
        let (r, c) = cell;
        let offset: usize = (0..r).map(|i| self.shape.row_len(i)).sum();
        let (s, _) = self.shape.row_range(r);
        Some(self.labels[offset + (c - s)])
    }

    pub fn cells_with_labels(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.shape.cells().zip(self.labels.iter().copied())
    }

    pub fn content(&self) -> Content {
        Content::from_labels(self.labels.iter())
    }

    /// Labels read right to left within each row, rows top to bottom.
    pub fn reverse_reading_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.labels.len());
        let mut offset = 0;
        for i in 0..self.shape.rows() {
            let n = self.shape.row_len(i);
            letters.extend(self.labels[offset..offset + n].iter().rev());
            offset += n;
        }
        Word::new(letters)
    }

    /// Rows weakly increase left to right; columns strictly increase top to
    /// bottom. Only vertically adjacent cells of the region are compared, so
    /// disconnected components of a skew shape impose no cross constraints.
    pub fn is_semistandard(&self) -> bool {
        let rows = self.shape.rows();
        for r in 0..rows {
            let (s, e) = self.shape.row_range(r);
            for c in s..e {
                let x = self.label_at((r, c)).unwrap();
                if c + 1 < e && x > self.label_at((r, c + 1)).unwrap() {
                    return false;
                }
                if let Some(below) = self.label_at((r + 1, c)) {
                    if below <= x {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Littlewood-Richardson: semi-standard with a lattice reverse word.
    pub fn is_lr(&self) -> bool {
        self.is_semistandard() && self.reverse_reading_word().is_lattice()
    }
}

impl fmt::Display for SkewTableau {
    /// One line per row; inner cells print as `.`, labels as integers,
    /// separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.shape.rows() {
            if r > 0 {
                writeln!(f)?;
            }
            let (s, e) = self.shape.row_range(r);
            let mut first = true;
            for _ in 0..s {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, ".")?;
                first = false;
            }
            for c in s..e {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.label_at((r, c)).unwrap())?;
                first = false;
            }
        }
        Ok(())
    }
}

impl FromStr for SkewTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut outer = Vec::new();
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for line in s.lines() {
            if line.trim().is_empty() {
                continue;
            }
            let mut dots = 0u32;
            let mut labels = Vec::new();
            for tok in line.split_whitespace() {
                if tok == "." {
                    if !labels.is_empty() {
                        return Err(Error::Parse(line.into(), "tableau row"));
                    }
                    dots += 1;
                } else {
                    let x: u32 = tok
                        .parse()
                        .map_err(|_| Error::Parse(line.into(), "tableau row"))?;
                    if x == 0 {
                        return Err(Error::Parse(line.into(), "tableau row"));
                    }
                    labels.push(x);
                }
            }
            inner.push(dots);
            outer.push(dots + labels.len() as u32);
            rows.push(labels);
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        SkewTableau::from_rows(shape, &rows)
    }
}

/// A labeling of an arbitrary cell region. Row bumping and label stripping
/// pass through fillings whose support is no longer a skew shape; this type
/// carries those.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RegionTableau {
    labels: BTreeMap<Cell, u32>,
}

impl RegionTableau {
    pub fn new(labels: BTreeMap<Cell, u32>) -> Self {
        RegionTableau { labels }
    }

    pub fn labels(&self) -> &BTreeMap<Cell, u32> {
        &self.labels
    }

    pub fn region(&self) -> CellRegion {
        CellRegion::from_cells(self.labels.keys().copied())
    }

    pub fn content(&self) -> Content {
        Content::from_labels(self.labels.values())
    }

    pub fn reverse_reading_word(&self) -> Word {
        // BTreeMap iterates row-major left to right; flip each row.
        let mut letters = Vec::with_capacity(self.labels.len());
        let mut row_start = 0;
        let mut current_row = None;
        for (&(r, _), &x) in &self.labels {
            if current_row != Some(r) {
                letters[row_start..].reverse();
                row_start = letters.len();
                current_row = Some(r);
            }
            letters.push(x);
        }
        letters[row_start..].reverse();
        Word::new(letters)
    }

    pub fn is_semistandard(&self) -> bool {
        self.labels.iter().all(|(&(r, c), &x)| {
            self.labels.get(&(r, c + 1)).is_none_or(|&right| x <= right)
                && self.labels.get(&(r + 1, c)).is_none_or(|&below| x < below)
        })
    }

    pub fn is_lr(&self) -> bool {
        self.is_semistandard() && self.reverse_reading_word().is_lattice()
    }

    /// Removes every cell labeled at most `bound`.
    pub fn strip_labels_up_to(&self, bound: u32) -> RegionTableau {
        RegionTableau {
            labels: self
                .labels
                .iter()
                .filter(|&(_, &x)| x > bound)
                .map(|(&c, &x)| (c, x))
                .collect(),
        }
    }

    /// Subtracts `shift` from every label; every label must exceed it.
    pub fn shift_labels_down(&self, shift: u32) -> Result<RegionTableau> {
        let mut labels = BTreeMap::new();
        for (&c, &x) in &self.labels {
            if x <= shift {
                return Err(Error::InvalidTableau(format!(
                    "label {x} cannot shift down by {shift}"
                )));
            }
            labels.insert(c, x - shift);
        }
        Ok(RegionTableau { labels })
    }
}

impl From<&SkewTableau> for RegionTableau {
    fn from(t: &SkewTableau) -> Self {
        RegionTableau {
            labels: t.cells_with_labels().collect(),
        }
    }
}
