//! Ballot sequences and tilings of LR tableaux.
//!
//! A ballot sequence is a chain of labeled cells k, k-1, ..., each lower
//! label strictly above and weakly right of the next. A semi-standard skew
//! tableau is LR exactly when its cells can be partitioned into such chains,
//! and the greedy extraction below builds one canonical partition whenever it
//! exists.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Cell;
use crate::tableau::SkewTableau;

/// A chain of labeled cells with consecutive labels descending to some
/// lowest label. Pure ballot sequences descend to 1; chains left behind by
/// row bumping may stop higher ("ballot-like").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallotSequence {
    // (cell, label), labels strictly descending by one
    entries: Vec<(Cell, u32)>,
}

impl BallotSequence {
    /// No validity check here: candidate sequences must be representable so
    /// [`verify_tiling`] can reject them.
    pub fn new(entries: Vec<(Cell, u32)>) -> Self {
        BallotSequence { entries }
    }

    pub fn entries(&self) -> &[(Cell, u32)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn highest_label(&self) -> Option<u32> {
        self.entries.first().map(|&(_, l)| l)
    }

    pub fn lowest_label(&self) -> Option<u32> {
        self.entries.last().map(|&(_, l)| l)
    }

    /// Labels descend by exactly one and every step goes strictly up and
    /// weakly right.
    pub fn is_valid(&self, lowest_must_be_one: bool) -> bool {
        if self.entries.is_empty() {
            return false;
        }
        for w in self.entries.windows(2) {
            let ((r_hi, c_hi), l_hi) = w[0];
            let ((r_lo, c_lo), l_lo) = w[1];
            if l_lo + 1 != l_hi || r_lo >= r_hi || c_lo < c_hi {
                return false;
            }
        }
        !lowest_must_be_one || self.lowest_label() == Some(1)
    }
}

impl fmt::Display for BallotSequence {
    /// `[(4,1),4],[(3,4),3],[(2,4),2],[(1,5),1]` with 1-based coordinates.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &((r, c), l)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[({},{}),{}]", r + 1, c + 1, l)?;
        }
        Ok(())
    }
}

/// A list of sequences meant to cover a tableau's cells exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    sequences: Vec<BallotSequence>,
}

impl Tiling {
    pub fn new(sequences: Vec<BallotSequence>) -> Self {
        Tiling { sequences }
    }

    pub fn sequences(&self) -> &[BallotSequence] {
        &self.sequences
    }

    /// Cell -> sequence index, or `None` when some cell is claimed twice.
    pub fn owner_map(&self) -> Option<BTreeMap<Cell, usize>> {
        let mut owner = BTreeMap::new();
        for (k, seq) in self.sequences.iter().enumerate() {
            for &(cell, _) in seq.entries() {
                if owner.insert(cell, k).is_some() {
                    return None;
                }
            }
        }
        Some(owner)
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, seq) in self.sequences.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "B{} = {}", k + 1, seq)?;
        }
        Ok(())
    }
}

/// Greedy canonical tiling: repeatedly start at the topmost-then-rightmost
/// cell carrying the largest remaining label and chain downward in labels,
/// each time taking the rightmost admissible cell of the highest admissible
/// row. Fails exactly on tableaux that are not LR.
pub fn canonical_tiling(t: &SkewTableau) -> Result<Tiling> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let mut remaining: BTreeMap<Cell, u32> = t.cells_with_labels().collect();
    let mut sequences = Vec::new();
    while !remaining.is_empty() {
        let max = remaining.values().copied().max().unwrap();
        // topmost row first, rightmost within it
        let start = remaining
            .iter()
            .filter(|&(_, &l)| l == max)
            .map(|(&cell, _)| cell)
            .min_by_key(|&(r, c)| (r, std::cmp::Reverse(c)))
            .unwrap();
        let mut entries = vec![(start, max)];
        remaining.remove(&start);
        let (mut row, mut col) = start;
        for label in (1..max).rev() {
            let next = remaining
                .iter()
                .filter(|&(&(r, c), &l)| l == label && r < row && c >= col)
                .map(|(&cell, _)| cell)
                .min_by_key(|&(r, c)| (r, std::cmp::Reverse(c)));
            match next {
                Some(cell) => {
                    entries.push((cell, label));
                    remaining.remove(&cell);
                    (row, col) = cell;
                }
                None => {
                    return Err(Error::NoTiling {
                        label: label + 1,
                        row: row + 1,
                        col: col + 1,
                    })
                }
            }
        }
        sequences.push(BallotSequence::new(entries));
    }
    Ok(Tiling::new(sequences))
}

/// Checks a candidate tiling against a tableau: the sequences must cover
/// every labeled cell exactly once with matching labels, and each sequence
/// must be a valid chain. With `strict` every chain must descend to label 1.
pub fn verify_tiling(t: &SkewTableau, tiling: &Tiling, strict: bool) -> bool {
    let Some(owner) = tiling.owner_map() else {
        return false;
    };
    if owner.len() as u64 != t.shape().num_cells() {
        return false;
    }
    for seq in tiling.sequences() {
        if !seq.is_valid(strict) {
            return false;
        }
        for &(cell, label) in seq.entries() {
            if t.label_at(cell) != Some(label) {
                return false;
            }
        }
    }
    true
}
