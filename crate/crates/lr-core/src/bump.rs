//! Row bumping on tiled tableaux.
//!
//! Bumping a labeled cell walks down its chain: the label moves onto the
//! cell of the next lower label, which moves on in turn, until the chain's
//! lowest label is pushed out of the tableau and the bumped cell itself is
//! vacated. When a move would break semi-standardness the chain trades its
//! tail with the chain owning the offending neighbor; such trades touch
//! membership only, never the filling, so each one may be retried in place.
//!
//! Bumping a whole row right to left and then packing the emptied row away
//! deletes that row from the shape while removing exactly its size from the
//! bottom of the content.

use std::collections::BTreeMap;

use crate::ballot::{canonical_tiling, verify_tiling, BallotSequence, Tiling};
use crate::derivation::RowDeletionIndex;
use crate::error::{Error, Result};
use crate::partition::Cell;
use crate::tableau::{Content, RegionTableau, SkewTableau};

/// A semi-standard filling together with a partition of its cells into
/// ballot-like chains. Mid-bump fillings routinely outgrow skew shapes, so
/// the cells are carried as a plain region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiledTableau {
    labels: BTreeMap<Cell, u32>,
    // entries sorted by strictly descending label
    sequences: Vec<Vec<(Cell, u32)>>,
    owner: BTreeMap<Cell, usize>,
}

impl TiledTableau {
    /// Pairs a tableau with its canonical tiling.
    pub fn from_canonical(t: &SkewTableau) -> Result<Self> {
        let tiling = canonical_tiling(t)?;
        Self::new(t, &tiling)
    }

    /// Pairs a tableau with a given tiling, which must cover it exactly
    /// with valid ballot-like chains.
    pub fn new(t: &SkewTableau, tiling: &Tiling) -> Result<Self> {
        if !t.is_semistandard() {
            return Err(Error::NotSemistandard);
        }
        if !verify_tiling(t, tiling, false) {
            return Err(Error::MalformedTiling("tiling does not fit the tableau".into()));
        }
        let sequences: Vec<Vec<(Cell, u32)>> = tiling
            .sequences()
            .iter()
            .map(|s| s.entries().to_vec())
            .collect();
        let owner = tiling.owner_map().expect("verified tilings have unique owners");
        Ok(TiledTableau {
            labels: t.cells_with_labels().collect(),
            sequences,
            owner,
        })
    }

    pub fn filling(&self) -> RegionTableau {
        RegionTableau::new(self.labels.clone())
    }

    pub fn content(&self) -> Content {
        Content::from_labels(self.labels.values())
    }

    pub fn tiling(&self) -> Tiling {
        Tiling::new(
            self.sequences
                .iter()
                .filter(|s| !s.is_empty())
                .map(|s| BallotSequence::new(s.clone()))
                .collect(),
        )
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Internal consistency: chains valid and covering, filling
    /// semi-standard.
    pub fn check(&self) -> bool {
        let mut seen = 0;
        for seq in self.sequences.iter().filter(|s| !s.is_empty()) {
            if !BallotSequence::new(seq.clone()).is_valid(false) {
                return false;
            }
            for &(cell, label) in seq {
                if self.labels.get(&cell) != Some(&label) {
                    return false;
                }
                seen += 1;
            }
        }
        seen == self.labels.len() && self.filling().is_semistandard()
    }

    /// Bumps the label at `cell` up its chain, vacating the cell and
    /// removing one copy of the chain's lowest label.
    pub fn bump_cell(&self, cell: Cell) -> Result<TiledTableau> {
        let mut next = self.clone();
        next.bump_cell_in_place(cell)?;
        Ok(next)
    }

    fn bump_cell_in_place(&mut self, cell: Cell) -> Result<()> {
        let label = *self.labels.get(&cell).ok_or(Error::UnlabeledCell {
            row: cell.0 + 1,
            col: cell.1 + 1,
        })?;
        let k = *self.owner.get(&cell).ok_or_else(|| {
            Error::MalformedTiling(format!("cell ({},{}) has no chain", cell.0 + 1, cell.1 + 1))
        })?;
        let pos = self.sequences[k]
            .iter()
            .position(|&(c, l)| c == cell && l == label)
            .ok_or_else(|| Error::MalformedTiling("owner map disagrees with chains".into()))?;
        self.sequences[k].remove(pos);
        self.labels.remove(&cell);
        self.owner.remove(&cell);

        let mut hand = label;
        let mut repairs_at_level = 0usize;
        loop {
            let Some(pos) = self.sequences[k].iter().position(|&(_, l)| l + 1 == hand) else {
                // the chain ends here; `hand` leaves the tableau
                return Ok(());
            };
            let target = self.sequences[k][pos].0;
            let (row, col) = target;

            // a matching label directly below blocks the strict column
            if let Some(&below) = self.labels.get(&(row + 1, col)) {
                debug_assert!(below >= hand);
                if below == hand {
                    self.swap_tails(k, (row + 1, col), hand)?;
                    repairs_at_level += 1;
                    if repairs_at_level > self.sequences.len() {
                        return Err(Error::BumpRepairLoop { label: hand });
                    }
                    continue;
                }
            }
            // a smaller label directly to the right blocks the weak row
            if let Some(&right) = self.labels.get(&(row, col + 1)) {
                debug_assert!(right + 1 >= hand);
                if right < hand {
                    let rightmost = self
                        .labels
                        .range((row, col + 1)..=(row, usize::MAX))
                        .filter(|&(_, &l)| l + 1 == hand)
                        .map(|(&c, _)| c)
                        .next_back()
                        .expect("the blocking label is itself a candidate");
                    self.swap_tails(k, rightmost, hand)?;
                    repairs_at_level += 1;
                    if repairs_at_level > self.sequences.len() {
                        return Err(Error::BumpRepairLoop { label: hand });
                    }
                    continue;
                }
            }

            self.labels.insert(target, hand);
            self.sequences[k][pos].1 = hand;
            hand -= 1;
            repairs_at_level = 0;
        }
    }

    /// Exchanges the sub-chains strictly below `level` between the chain
    /// `k` and the chain owning `other_cell`. Both tails carry the same
    /// labels, so the filling is untouched.
    fn swap_tails(&mut self, k: usize, other_cell: Cell, level: u32) -> Result<()> {
        let r = *self.owner.get(&other_cell).ok_or_else(|| {
            Error::MalformedTiling(format!(
                "cell ({},{}) has no chain",
                other_cell.0 + 1,
                other_cell.1 + 1
            ))
        })?;
        if r == k {
            return Err(Error::MalformedTiling(
                "repair would swap a chain with itself".into(),
            ));
        }
        let cut_k = self.sequences[k].partition_point(|&(_, l)| l >= level);
        let cut_r = self.sequences[r].partition_point(|&(_, l)| l >= level);
        let tail_k: Vec<_> = self.sequences[k].split_off(cut_k);
        let tail_r: Vec<_> = self.sequences[r].split_off(cut_r);
        for &(c, _) in &tail_r {
            self.owner.insert(c, k);
        }
        for &(c, _) in &tail_k {
            self.owner.insert(c, r);
        }
        self.sequences[k].extend(tail_r);
        self.sequences[r].extend(tail_k);
        Ok(())
    }

    /// Bumps every cell of the row right to left, then packs the emptied
    /// row away. The resulting shape is the original with that row deleted,
    /// and for a strict tiling the content drops by the row's size at
    /// label 1.
    pub fn bump_row(&self, row: usize) -> Result<TiledTableau> {
        self.bump_row_traced(row, |_| {})
    }

    /// Same as [`bump_row`](Self::bump_row), invoking the callback after
    /// every single-cell bump.
    pub fn bump_row_traced(
        &self,
        row: usize,
        mut visit: impl FnMut(&TiledTableau),
    ) -> Result<TiledTableau> {
        let cells: Vec<Cell> = self
            .labels
            .range((row, 0)..=(row, usize::MAX))
            .map(|(&c, _)| c)
            .collect();
        if cells.is_empty() {
            return Err(Error::EmptyRow { row: row + 1 });
        }
        let mut next = self.clone();
        for &cell in cells.iter().rev() {
            next.bump_cell_in_place(cell)?;
            visit(&next);
        }
        Ok(next.pack_out_row(row))
    }

    /// Shifts every cell below `row` up by one; `row` itself must be empty.
    fn pack_out_row(&self, row: usize) -> TiledTableau {
        let move_cell = |(r, c): Cell| if r > row { (r - 1, c) } else { (r, c) };
        TiledTableau {
            labels: self
                .labels
                .iter()
                .map(|(&cell, &l)| (move_cell(cell), l))
                .collect(),
            sequences: self
                .sequences
                .iter()
                .map(|s| s.iter().map(|&(cell, l)| (move_cell(cell), l)).collect())
                .collect(),
            owner: self
                .owner
                .iter()
                .map(|(&cell, &k)| (move_cell(cell), k))
                .collect(),
        }
    }

    /// Bumps the given rows of the original tableau in order, adjusting the
    /// indices for the rows already removed.
    pub fn iterated_bump(&self, idx: &RowDeletionIndex) -> Result<TiledTableau> {
        let mut next = self.clone();
        for (removed, &r) in idx.rows().iter().enumerate() {
            next = next.bump_row(r - removed)?;
        }
        Ok(next)
    }

    /// Grid rendering with chain subscripts, `3_2` meaning label 3 in the
    /// second chain.
    pub fn render(&self) -> String {
        let Some(max_row) = self.labels.keys().map(|&(r, _)| r).max() else {
            return String::new();
        };
        let max_col = self.labels.keys().map(|&(_, c)| c).max().unwrap();
        let mut out = String::new();
        for r in 0..=max_row {
            if r > 0 {
                out.push('\n');
            }
            let mut line = Vec::new();
            for c in 0..=max_col {
                match self.labels.get(&(r, c)) {
                    Some(&l) => line.push(format!("{}_{}", l, self.owner[&(r, c)] + 1)),
                    None => line.push(".".into()),
                }
            }
            while line.last().map(String::as_str) == Some(".") {
                line.pop();
            }
            out.push_str(&line.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::delete_rows;
    use crate::partition::skew;

    fn tiled(s: &str) -> TiledTableau {
        TiledTableau::from_canonical(&s.parse().unwrap()).unwrap()
    }

    fn worked_example() -> TiledTableau {
        tiled(
            ". . . . . . 1 1 1 1 1\n\
             . . . . . 1 2 2 2 2\n\
             . . . . 1 2 3\n\
             . . . . 3 3\n\
             . . 2 2 4 4\n\
             . . 3 4\n\
             . 3 4 5",
        )
    }

    #[test]
    fn worked_example_is_set_up_correctly() {
        let t = worked_example();
        assert!(t.check());
        assert_eq!(t.content().counts(), &[7, 7, 5, 4, 1]);
        assert_eq!(t.sequences.len(), 7);
    }

    #[test]
    fn bump_single_cell_out_of_the_sixth_row() {
        let t = worked_example();
        let bumped = t.bump_cell((5, 3)).unwrap();
        assert!(bumped.check());
        assert_eq!(bumped.content().counts(), &[6, 7, 5, 4, 1]);
        // the bumped cell is gone, the sixth row shrank to one cell
        assert!(!bumped.labels.contains_key(&(5, 3)));
        let row6: Vec<Cell> = bumped
            .labels
            .range((5, 0)..=(5, usize::MAX))
            .map(|(&c, _)| c)
            .collect();
        assert_eq!(row6, vec![(5, 2)]);

        // only the bumped chain's cells may differ from the original
        let k = t.owner[&(5, 3)];
        let mut allowed: std::collections::BTreeSet<Cell> =
            bumped.sequences[k].iter().map(|&(c, _)| c).collect();
        allowed.insert((5, 3));
        for (cell, label) in &t.labels {
            if bumped.labels.get(cell) != Some(label) {
                assert!(allowed.contains(cell), "unexpected change at {cell:?}");
            }
        }
    }

    #[test]
    fn bump_whole_sixth_row() {
        let t = worked_example();
        let shape = skew(
            &"11,10,7,6,6,4,4".parse().unwrap(),
            &"6,5,4,4,2,2,1".parse().unwrap(),
        )
        .unwrap();
        let bumped = t.bump_row(5).unwrap();
        assert!(bumped.check());
        assert_eq!(bumped.content().counts(), &[5, 7, 5, 4, 1]);
        let expected =
            delete_rows(&shape, &RowDeletionIndex::new(vec![5]).unwrap()).unwrap();
        assert_eq!(bumped.filling().region(), expected);
    }

    #[test]
    fn bump_a_lone_cell_empties_the_tableau() {
        let t = tiled("1");
        let bumped = t.bump_cell((0, 0)).unwrap();
        assert!(bumped.is_empty());
    }

    #[test]
    fn bump_the_bottom_of_a_column() {
        // labels 1,2 in one column form a single chain; bumping the 2
        // leaves a single cell labeled 2 at the top
        let t = tiled("1\n2");
        let bumped = t.bump_cell((1, 0)).unwrap();
        assert!(bumped.check());
        assert_eq!(bumped.labels.len(), 1);
        assert_eq!(bumped.labels.get(&(0, 0)), Some(&2));
        assert_eq!(bumped.content().counts(), &[0, 1]);
    }

    #[test]
    fn bump_row_on_a_single_row_tableau() {
        let t = tiled("1 1 1");
        let bumped = t.bump_row(0).unwrap();
        assert!(bumped.is_empty());
    }

    #[test]
    fn errors() {
        let t = tiled("1 1\n2 2");
        assert!(matches!(
            t.bump_cell((3, 3)),
            Err(Error::UnlabeledCell { .. })
        ));
        assert!(matches!(t.bump_row(4), Err(Error::EmptyRow { .. })));
        let empty_row = tiled(". 1\n1 2");
        // shape (2,2)/(1): row indices past the region are empty
        assert!(matches!(empty_row.bump_row(2), Err(Error::EmptyRow { .. })));
    }

    #[test]
    fn iterated_bump_matches_single_bumps() {
        let t = worked_example();
        assert_eq!(t.iterated_bump(&RowDeletionIndex::default()).unwrap(), t);
        assert_eq!(
            t.iterated_bump(&RowDeletionIndex::new(vec![5]).unwrap())
                .unwrap(),
            t.bump_row(5).unwrap()
        );
    }

    #[test]
    fn iterated_bump_over_all_rows_empties_every_small_tableau() {
        for gamma in crate::survey::enumerate_partitions_in_box(2, 2) {
            for lambda in crate::survey::enumerate_partitions_in_box(2, 2) {
                if !gamma.contains(&lambda) {
                    continue;
                }
                let shape = skew(&gamma, &lambda).unwrap();
                if shape.is_empty() {
                    continue;
                }
                let min = crate::coefficient::minimal_content_tableau(&shape).unwrap();
                let t = TiledTableau::from_canonical(&min).unwrap();
                let nonempty: Vec<usize> =
                    (0..shape.rows()).filter(|&r| shape.row_len(r) > 0).collect();
                // delete bottom-up so earlier deletions do not shift later ones,
                // then the same thing through the index arithmetic
                let mut current = t.clone();
                for &r in nonempty.iter().rev() {
                    current = current.bump_row(r).unwrap();
                }
                assert!(current.is_empty());
                let all = t
                    .iterated_bump(&RowDeletionIndex::new(nonempty).unwrap())
                    .unwrap();
                assert!(all.is_empty());
            }
        }
    }

    #[test]
    fn bump_contract_on_small_lr_tableaux() {
        // shape and content move exactly as the row deletion dictates
        for gamma in crate::survey::enumerate_partitions_in_box(3, 3) {
            for lambda in crate::survey::enumerate_partitions_in_box(3, 3) {
                if !gamma.contains(&lambda) {
                    continue;
                }
                let shape = skew(&gamma, &lambda).unwrap();
                if shape.is_empty() {
                    continue;
                }
                for mu in crate::survey::enumerate_partitions_in_box(
                    shape.rows(),
                    shape.num_cells() as usize,
                ) {
                    if mu.size() != shape.num_cells() {
                        continue;
                    }
                    for t in crate::coefficient::enumerate_lr_tableaux(&shape, &mu) {
                        let tiled = TiledTableau::from_canonical(&t).unwrap();
                        for r in (0..shape.rows()).filter(|&r| shape.row_len(r) > 0) {
                            let bumped = tiled.bump_row(r).unwrap();
                            assert!(bumped.check());
                            let expected_region = delete_rows(
                                &shape,
                                &RowDeletionIndex::new(vec![r]).unwrap(),
                            )
                            .unwrap();
                            assert_eq!(bumped.filling().region(), expected_region);
                            let mut expected_counts = mu.parts().to_vec();
                            expected_counts[0] -= shape.row_len(r) as u32;
                            assert_eq!(
                                bumped.content(),
                                Content::new(expected_counts)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn stripped_chains_after_iterated_bumps_stay_lr() {
        // removing labels up to j from a j-fold bump and shifting leaves an
        // LR filling whose content tail respects its own column bound
        use crate::derivation::{top_left_standardization, upper_derivation};
        use itertools::Itertools;
        for gamma in crate::survey::enumerate_partitions_in_box(3, 3) {
            for lambda in crate::survey::enumerate_partitions_in_box(3, 3) {
                if !gamma.contains(&lambda) {
                    continue;
                }
                let shape = skew(&gamma, &lambda).unwrap();
                if shape.is_empty() {
                    continue;
                }
                let nonempty: Vec<usize> =
                    (0..shape.rows()).filter(|&r| shape.row_len(r) > 0).collect();
                for mu in crate::survey::enumerate_partitions_in_box(
                    shape.rows(),
                    shape.num_cells() as usize,
                ) {
                    if mu.size() != shape.num_cells() {
                        continue;
                    }
                    for t in crate::coefficient::enumerate_lr_tableaux(&shape, &mu) {
                        let tiled = TiledTableau::from_canonical(&t).unwrap();
                        for j in 1..=nonempty.len() {
                            for rows in nonempty.iter().copied().combinations(j) {
                                let idx = RowDeletionIndex::new(rows.clone()).unwrap();
                                let bumped = tiled.iterated_bump(&idx).unwrap();
                                // the deficit equals the total size of the
                                // deleted rows, all of it above position j
                                let deleted: u64 =
                                    rows.iter().map(|&r| shape.row_len(r) as u64).sum();
                                assert_eq!(
                                    bumped.content().total(),
                                    mu.size() - deleted
                                );
                                let stripped = bumped
                                    .filling()
                                    .strip_labels_up_to(j as u32)
                                    .shift_labels_down(j as u32)
                                    .unwrap();
                                assert!(stripped.is_lr());
                                assert_eq!(
                                    stripped.content(),
                                    Content::from(&mu.tail(j))
                                );
                                let tail = mu.tail(j);
                                assert!(tail.gdom_le(&top_left_standardization(
                                    &stripped.region()
                                )));
                                assert!(tail
                                    .gdom_le(&upper_derivation(&shape, &idx).unwrap()));
                            }
                        }
                    }
                }
            }
        }
    }
}
