//! Exact Littlewood-Richardson coefficients by tableau enumeration.
//!
//! Cells are filled in the order of the reverse reading word (rows top to
//! bottom, right to left within a row), so the lattice condition becomes a
//! running prefix-count check and dead branches are cut at the first bad
//! placement.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, SkewShape};
use crate::tableau::SkewTableau;

/// The number of LR tableaux of a given shape and content.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct LrCount(u64);

impl LrCount {
    pub fn value(&self) -> u64 {
        self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0 > 0
    }
}

impl std::fmt::Display for LrCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Filler<'a> {
    // reading order; per cell: lower bound source and remaining column depth
    cells: Vec<Cell>,
    above_pos: Vec<Option<usize>>,
    right_pos: Vec<Option<usize>>,
    below_count: Vec<u32>,
    mu: &'a [u32],
    labels: Vec<u32>,
    counts: Vec<u32>,
}

impl<'a> Filler<'a> {
    fn new(shape: &SkewShape, mu: &'a Partition) -> Filler<'a> {
        let mut cells = Vec::with_capacity(shape.num_cells() as usize);
        for r in 0..shape.rows() {
            let (s, e) = shape.row_range(r);
            cells.extend((s..e).rev().map(|c| (r, c)));
        }
        let pos: BTreeMap<Cell, usize> =
            cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let above_pos = cells
            .iter()
            .map(|&(r, c)| (r > 0).then(|| pos.get(&(r - 1, c)).copied()).flatten())
            .collect();
        let right_pos = cells.iter().map(|&(r, c)| pos.get(&(r, c + 1)).copied()).collect();
        let below_count = cells
            .iter()
            .map(|&(r, c)| {
                let mut n = 0;
                while shape.contains_cell((r + 1 + n as usize, c)) {
                    n += 1;
                }
                n
            })
            .collect();
        let m = mu.len();
        Filler {
            cells,
            above_pos,
            right_pos,
            below_count,
            mu: mu.parts(),
            labels: Vec::new(),
            counts: vec![0; m + 1],
        }
    }

    /// Depth-first over all LR fillings, smallest label first. The visitor
    /// sees labels in reading order and returns `false` to stop the search.
    fn run(&mut self, visit: &mut impl FnMut(&Filler) -> bool) -> bool {
        let i = self.labels.len();
        if i == self.cells.len() {
            return visit(self);
        }
        let m = self.mu.len() as u32;
        let lo = match self.above_pos[i] {
            Some(p) => self.labels[p] + 1,
            None => 1,
        };
        let hi = match self.right_pos[i] {
            Some(p) => self.labels[p],
            None => m,
        }
        .min(m - self.below_count[i].min(m));
        for x in lo..=hi {
            let xi = x as usize;
            if self.counts[xi] >= self.mu[xi - 1] {
                continue;
            }
            if x >= 2 && self.counts[xi] >= self.counts[xi - 1] {
                continue;
            }
            self.labels.push(x);
            self.counts[xi] += 1;
            let keep_going = self.run(visit);
            self.counts[xi] -= 1;
            self.labels.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    /// Reading-order labels rearranged to row-major.
    fn row_major_labels(&self, shape: &SkewShape) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.labels.len());
        let mut offset = 0;
        for r in 0..shape.rows() {
            let n = shape.row_len(r);
            out.extend(self.labels[offset..offset + n].iter().rev());
            offset += n;
        }
        out
    }
}

fn for_each_lr_tableau(
    shape: &SkewShape,
    mu: &Partition,
    visit: &mut impl FnMut(&Filler) -> bool,
) {
    if mu.size() != shape.num_cells() {
        return;
    }
    if mu.is_empty() {
        // the empty filling of an empty shape
        let mut filler = Filler::new(shape, mu);
        visit(&mut filler);
        return;
    }
    Filler::new(shape, mu).run(visit);
}

/// All LR tableaux of the shape with content `mu`, in the deterministic
/// backtracking order. A content whose size differs from the shape yields
/// the empty list.
pub fn enumerate_lr_tableaux(shape: &SkewShape, mu: &Partition) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    for_each_lr_tableau(shape, mu, &mut |filler| {
        let labels = filler.row_major_labels(shape);
        out.push(SkewTableau::new(shape.clone(), labels).expect("filler output is well formed"));
        true
    });
    out
}

/// The LR coefficient. Degenerate inputs (inner not contained, sizes that
/// do not add up) count zero tableaux rather than failing.
pub fn lr_coefficient(gamma: &Partition, lambda: &Partition, mu: &Partition) -> Result<LrCount> {
    if !gamma.contains(lambda) || lambda.size() + mu.size() != gamma.size() {
        return Ok(LrCount(0));
    }
    let shape = SkewShape::new(gamma.clone(), lambda.clone())?;
    let mut count = 0u64;
    let mut overflow = false;
    for_each_lr_tableau(&shape, mu, &mut |_| match count.checked_add(1) {
        Some(c) => {
            count = c;
            true
        }
        None => {
            overflow = true;
            false
        }
    });
    if overflow {
        return Err(Error::Overflow);
    }
    Ok(LrCount(count))
}

/// Whether the coefficient is positive, stopping at the first witness.
pub fn lr_positive(gamma: &Partition, lambda: &Partition, mu: &Partition) -> bool {
    if !gamma.contains(lambda) || lambda.size() + mu.size() != gamma.size() {
        return false;
    }
    let Ok(shape) = SkewShape::new(gamma.clone(), lambda.clone()) else {
        return false;
    };
    let mut found = false;
    for_each_lr_tableau(&shape, mu, &mut |_| {
        found = true;
        false
    });
    found
}

/// The unique LR tableau whose content is the sorted row sizes of the
/// shape: peel the rightmost `min` cells of every nonempty row, label them
/// by the row's position among the active rows, and repeat on what is left.
pub fn minimal_content_tableau(shape: &SkewShape) -> Result<SkewTableau> {
    if shape.is_empty() {
        return Err(Error::EmptyShape);
    }
    let mut labels: BTreeMap<Cell, u32> = BTreeMap::new();
    let mut end: Vec<usize> = (0..shape.rows()).map(|r| shape.row_range(r).1).collect();
    loop {
        let active: Vec<usize> = (0..shape.rows())
            .filter(|&r| end[r] > shape.row_range(r).0)
            .collect();
        if active.is_empty() {
            break;
        }
        let m = active
            .iter()
            .map(|&r| end[r] - shape.row_range(r).0)
            .min()
            .unwrap();
        for (ordinal, &r) in active.iter().enumerate() {
            for c in end[r] - m..end[r] {
                labels.insert((r, c), ordinal as u32 + 1);
            }
            end[r] -= m;
        }
    }
    from_label_map(shape, &labels)
}

/// The unique LR tableau whose content is the top-left standardization of
/// the shape: every cell is labeled by its depth in its own column.
pub fn maximal_content_tableau(shape: &SkewShape) -> Result<SkewTableau> {
    if shape.is_empty() {
        return Err(Error::EmptyShape);
    }
    let mut depth: BTreeMap<usize, u32> = BTreeMap::new();
    let mut labels = BTreeMap::new();
    for (r, c) in shape.cells() {
        let d = depth.entry(c).or_insert(0);
        *d += 1;
        labels.insert((r, c), *d);
    }
    from_label_map(shape, &labels)
}

fn from_label_map(shape: &SkewShape, labels: &BTreeMap<Cell, u32>) -> Result<SkewTableau> {
    let row_major = shape
        .cells()
        .map(|cell| labels.get(&cell).copied().expect("every cell labeled"))
        .collect();
    SkewTableau::new(shape.clone(), row_major)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::{lower_derivation, top_left_standardization};
    use crate::partition::skew;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn the_two_tableaux_of_the_running_example() {
        let shape = skew(&p("4,3,2"), &p("2,1")).unwrap();
        let found = enumerate_lr_tableaux(&shape, &p("3,2,1"));
        let rendered: Vec<String> = found.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            rendered,
            vec![". . 1 1\n. 1 2\n2 3", ". . 1 1\n. 2 2\n1 3"]
        );
        assert_eq!(
            lr_coefficient(&p("4,3,2"), &p("2,1"), &p("3,2,1"))
                .unwrap()
                .value(),
            2
        );
        assert!(lr_positive(&p("4,3,2"), &p("2,1"), &p("3,2,1")));
    }

    #[test]
    fn empty_shape_and_degenerate_inputs() {
        let empty = skew(&p("3,1"), &p("3,1")).unwrap();
        assert_eq!(enumerate_lr_tableaux(&empty, &Partition::empty()).len(), 1);
        assert_eq!(
            lr_coefficient(&p("3,1"), &p("3,1"), &Partition::empty())
                .unwrap()
                .value(),
            1
        );
        // inner not contained, and sizes that do not add up
        assert_eq!(lr_coefficient(&p("2"), &p("3"), &p("1")).unwrap().value(), 0);
        assert_eq!(
            lr_coefficient(&p("3,2"), &p("1"), &p("2,1")).unwrap().value(),
            0
        );
        assert!(!lr_positive(&p("2"), &p("3"), &p("1")));
    }

    #[test]
    fn column_strictness_kills_wide_contents() {
        let shape = skew(&p("3,3,2"), &p("2,1")).unwrap();
        assert!(enumerate_lr_tableaux(&shape, &p("5")).is_empty());
    }

    #[test]
    fn every_enumerated_tableau_is_lr_with_the_requested_content() {
        let shape = skew(&p("4,3,2"), &p("2,1")).unwrap();
        for mu in crate::survey::enumerate_partitions_in_box(4, 6) {
            for t in enumerate_lr_tableaux(&shape, &mu) {
                assert!(t.is_lr());
                assert_eq!(t.content(), crate::tableau::Content::from(&mu));
            }
        }
    }

    #[test]
    fn minimal_content_construction() {
        let shape = skew(&p("4,3,2"), &p("2,1")).unwrap();
        let t = minimal_content_tableau(&shape).unwrap();
        assert!(t.is_lr());
        assert_eq!(t.content().counts(), &[2, 2, 2]);
        assert_eq!(lower_derivation(&shape, 0), p("2,2,2"));
        assert_eq!(enumerate_lr_tableaux(&shape, &p("2,2,2")), vec![t]);

        let row = skew(&p("4"), &Partition::empty()).unwrap();
        assert_eq!(
            minimal_content_tableau(&row).unwrap().labels(),
            &[1, 1, 1, 1]
        );

        let strip = skew(&p("1,1,1"), &Partition::empty()).unwrap();
        assert_eq!(minimal_content_tableau(&strip).unwrap().labels(), &[1, 2, 3]);

        let empty = skew(&p("2"), &p("2")).unwrap();
        assert!(matches!(
            minimal_content_tableau(&empty),
            Err(Error::EmptyShape)
        ));
    }

    #[test]
    fn maximal_content_construction() {
        let shape = skew(&p("5,4,4,1"), &p("2,1")).unwrap();
        let t = maximal_content_tableau(&shape).unwrap();
        assert!(t.is_lr());
        assert_eq!(t.content().counts(), &[5, 4, 2]);
        assert_eq!(top_left_standardization(&shape.region()), p("5,4,2"));

        let column = skew(&p("1,1,1"), &Partition::empty()).unwrap();
        assert_eq!(maximal_content_tableau(&column).unwrap().labels(), &[1, 2, 3]);

        let row = skew(&p("3"), &Partition::empty()).unwrap();
        assert_eq!(maximal_content_tableau(&row).unwrap().labels(), &[1, 1, 1]);
    }

    #[test]
    fn extremal_contents_are_unique_witnesses_in_a_small_box() {
        for gamma in crate::survey::enumerate_partitions_in_box(3, 3) {
            for lambda in crate::survey::enumerate_partitions_in_box(3, 3) {
                if !gamma.contains(&lambda) {
                    continue;
                }
                let shape = skew(&gamma, &lambda).unwrap();
                if shape.is_empty() {
                    continue;
                }
                let lo = lower_derivation(&shape, 0);
                let hi = top_left_standardization(&shape.region());
                assert_eq!(lr_coefficient(&gamma, &lambda, &lo).unwrap().value(), 1);
                assert_eq!(lr_coefficient(&gamma, &lambda, &hi).unwrap().value(), 1);
                assert_eq!(
                    enumerate_lr_tableaux(&shape, &lo),
                    vec![minimal_content_tableau(&shape).unwrap()]
                );
                assert_eq!(
                    enumerate_lr_tableaux(&shape, &hi),
                    vec![maximal_content_tableau(&shape).unwrap()]
                );
            }
        }
    }
}
