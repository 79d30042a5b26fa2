//! Exhaustive box census: exact positivity versus filter survival.
//!
//! For every outer shape in an n×k box, every contained inner shape, and
//! every candidate content of the right size from the same box, the census
//! records whether the coefficient is actually positive and whether the
//! bound filter lets the triple through, bucketed by skew size. Work is
//! split by outer shape and merged by bucket, so the output is independent
//! of worker count and scheduling.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::coefficient::lr_positive;
use crate::error::{Error, Result};
use crate::filter::{filter_triple, FilterConfig, Verdict};
use crate::partition::Partition;

/// Lazily yields every partition with at most `rows` parts, each at most
/// `cols`, in lexicographic order starting from the empty partition.
pub fn enumerate_partitions_in_box(rows: usize, cols: usize) -> PartitionsInBox {
    PartitionsInBox {
        rows,
        cols: cols as u32,
        stack: Vec::new(),
        started: false,
    }
}

pub struct PartitionsInBox {
    rows: usize,
    cols: u32,
    stack: Vec<u32>,
    started: bool,
}

impl Iterator for PartitionsInBox {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if !self.started {
            self.started = true;
            return Some(Partition::empty());
        }
        if self.stack.len() < self.rows && self.cols >= 1 {
            self.stack.push(1);
        } else {
            loop {
                let last = self.stack.pop()?;
                let bound = self.stack.last().map_or(self.cols, |&p| p.min(self.cols));
                if last < bound {
                    self.stack.push(last + 1);
                    break;
                }
            }
        }
        Some(Partition::new(self.stack.clone()).expect("stack is weakly decreasing"))
    }
}

/// One census bucket.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    /// Skew size |γ/λ| of the bucket.
    pub size: u64,
    /// Triples with a genuinely positive coefficient.
    pub true_positive: u64,
    /// Triples the filter does not eliminate.
    pub surviving: u64,
    /// Survivors with a zero coefficient.
    pub false_pass: u64,
    /// All candidate triples in the bucket; not part of the wire formats.
    #[serde(skip)]
    pub candidates: u64,
}

#[derive(Debug, Clone)]
pub struct SurveyConfig {
    pub box_rows: usize,
    pub box_cols: usize,
    pub filter: FilterConfig,
    /// Worker threads; 0 picks the library default.
    pub workers: usize,
}

impl SurveyConfig {
    pub fn square(n: usize) -> Self {
        SurveyConfig {
            box_rows: n,
            box_cols: n,
            filter: FilterConfig::all(),
            workers: 0,
        }
    }
}

#[derive(Default, Clone, Copy)]
struct Bucket {
    candidates: u64,
    true_positive: u64,
    surviving: u64,
}

/// Runs the census. Fails if any bucket ends up with a survivor count
/// below its positive count, which the soundness of the bounds rules out.
pub fn survey(cfg: &SurveyConfig) -> Result<Vec<SurveyRow>> {
    let started = Instant::now();
    let partitions: Vec<Partition> =
        enumerate_partitions_in_box(cfg.box_rows, cfg.box_cols).collect();
    let mut by_size: BTreeMap<u64, Vec<Partition>> = BTreeMap::new();
    for p in &partitions {
        by_size.entry(p.size()).or_default().push(p.clone());
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Survey(e.to_string()))?;

    let done = AtomicUsize::new(0);
    let total = partitions.len();
    let step = (total / 20).max(1);
    let merged: BTreeMap<u64, Bucket> = pool.install(|| {
        partitions
            .par_iter()
            .map(|gamma| {
                let mut local: BTreeMap<u64, Bucket> = BTreeMap::new();
                for lambda in &partitions {
                    if !gamma.contains(lambda) {
                        continue;
                    }
                    let size = gamma.size() - lambda.size();
                    let bucket = local.entry(size).or_default();
                    for mu in by_size.get(&size).map_or(&[][..], |v| v) {
                        bucket.candidates += 1;
                        if lr_positive(gamma, lambda, mu) {
                            bucket.true_positive += 1;
                        }
                        if filter_triple(gamma, lambda, mu, &cfg.filter).verdict
                            == Verdict::Survives
                        {
                            bucket.surviving += 1;
                        }
                    }
                }
                let n = done.fetch_add(1, Ordering::Relaxed) + 1;
                if n % step == 0 || n == total {
                    eprintln!(
                        "survey: {n}/{total} outer shapes, {:.1}s",
                        started.elapsed().as_secs_f64()
                    );
                }
                local
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (size, bucket) in b {
                    let e = a.entry(size).or_default();
                    e.candidates += bucket.candidates;
                    e.true_positive += bucket.true_positive;
                    e.surviving += bucket.surviving;
                }
                a
            })
    });

    let mut rows = Vec::with_capacity(merged.len());
    for (size, bucket) in merged {
        let false_pass = bucket.surviving.checked_sub(bucket.true_positive).ok_or_else(|| {
            Error::Survey(format!(
                "bucket {size} has {} positives but only {} survivors",
                bucket.true_positive, bucket.surviving
            ))
        })?;
        eprintln!(
            "survey: size {size}: {} candidates, {} positive, {} surviving",
            bucket.candidates, bucket.true_positive, bucket.surviving
        );
        rows.push(SurveyRow {
            size,
            true_positive: bucket.true_positive,
            surviving: bucket.surviving,
            false_pass,
            candidates: bucket.candidates,
        });
    }
    Ok(rows)
}

/// Candidate triples per bucket, computed by pure counting.
pub fn count_candidate_triples(rows: usize, cols: usize) -> BTreeMap<u64, u64> {
    let partitions: Vec<Partition> = enumerate_partitions_in_box(rows, cols).collect();
    let mut per_size: BTreeMap<u64, u64> = BTreeMap::new();
    for p in &partitions {
        *per_size.entry(p.size()).or_default() += 1;
    }
    let mut out: BTreeMap<u64, u64> = BTreeMap::new();
    for gamma in &partitions {
        for lambda in &partitions {
            if gamma.contains(lambda) {
                let size = gamma.size() - lambda.size();
                *out.entry(size).or_default() += per_size.get(&size).copied().unwrap_or(0);
            }
        }
    }
    out
}

/// `size,true_positive,surviving,false_pass` with LF line endings.
pub fn survey_csv(rows: &[SurveyRow]) -> String {
    let mut out = String::from("size,true_positive,surviving,false_pass\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.size, r.true_positive, r.surviving, r.false_pass
        ));
    }
    out
}

pub fn survey_json(cfg: &SurveyConfig, rows: &[SurveyRow], runtime_seconds: f64) -> serde_json::Value {
    json!({
        "config": {
            "box": [cfg.box_rows, cfg.box_cols],
            "families": cfg.filter.family_names(),
            "max_upper_j": cfg.filter.max_upper_subset_size(),
        },
        "rows": rows,
        "runtime_seconds": runtime_seconds,
    })
}
