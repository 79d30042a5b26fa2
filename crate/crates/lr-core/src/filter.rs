//! Necessary conditions for positive LR coefficients.
//!
//! Every lower derivation of the skew shape must sit below the matching
//! content tail in generalized dominance order, and every upper derivation
//! must sit above it. The coefficient is symmetric under swapping the two
//! inner partitions and under transposing all three, which yields four
//! variants of each bound; a triple failing any enabled bound cannot be
//! positive. Surviving all bounds proves nothing: the filter is sound, not
//! complete.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::derivation::{lower_derivation, upper_derivation, RowDeletionIndex};
use crate::error::{Error, Result};
use crate::partition::{Partition, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Direction {
    Lower,
    Upper,
}

/// The four shape/content pairings a positive triple must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Variant {
    /// γ/λ against μ
    Direct,
    /// γ/μ against λ
    Swapped,
    /// γᵀ/λᵀ against μᵀ
    Transposed,
    /// γᵀ/μᵀ against λᵀ
    SwappedTransposed,
}

impl Variant {
    pub const ALL: [Variant; 4] = [
        Variant::Direct,
        Variant::Swapped,
        Variant::Transposed,
        Variant::SwappedTransposed,
    ];

    pub fn index(self) -> u8 {
        match self {
            Variant::Direct => 1,
            Variant::Swapped => 2,
            Variant::Transposed => 3,
            Variant::SwappedTransposed => 4,
        }
    }

    pub fn from_index(i: u8) -> Option<Variant> {
        Variant::ALL.into_iter().find(|v| v.index() == i)
    }
}

/// One family of bounds: a direction crossed with a variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundFamily {
    pub direction: Direction,
    pub variant: Variant,
}

/// Which bound families to evaluate, and an optional cap on how many rows
/// an upper-bound deletion set may contain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterConfig {
    enabled: BTreeSet<BoundFamily>,
    max_upper_subset_size: Option<usize>,
}

impl FilterConfig {
    /// All eight families, exhaustive row subsets.
    pub fn all() -> Self {
        let enabled = Variant::ALL
            .into_iter()
            .flat_map(|variant| {
                [Direction::Lower, Direction::Upper]
                    .into_iter()
                    .map(move |direction| BoundFamily { direction, variant })
            })
            .collect();
        FilterConfig {
            enabled,
            max_upper_subset_size: None,
        }
    }

    pub fn new(
        enabled: BTreeSet<BoundFamily>,
        max_upper_subset_size: Option<usize>,
    ) -> Result<Self> {
        if enabled.is_empty() {
            return Err(Error::EmptyFilterConfig);
        }
        Ok(FilterConfig {
            enabled,
            max_upper_subset_size,
        })
    }

    /// Restricts to the given variants (by 1-based index), keeping both
    /// directions unless further restricted.
    pub fn restrict(
        variants: &[u8],
        lower: bool,
        upper: bool,
        max_upper_subset_size: Option<usize>,
    ) -> Result<Self> {
        let mut enabled = BTreeSet::new();
        for &i in variants {
            let variant = Variant::from_index(i)
                .ok_or_else(|| Error::Parse(i.to_string(), "bound variant"))?;
            if lower {
                enabled.insert(BoundFamily {
                    direction: Direction::Lower,
                    variant,
                });
            }
            if upper {
                enabled.insert(BoundFamily {
                    direction: Direction::Upper,
                    variant,
                });
            }
        }
        FilterConfig::new(enabled, max_upper_subset_size)
    }

    pub fn enabled(&self) -> &BTreeSet<BoundFamily> {
        &self.enabled
    }

    pub fn is_enabled(&self, family: BoundFamily) -> bool {
        self.enabled.contains(&family)
    }

    pub fn max_upper_subset_size(&self) -> Option<usize> {
        self.max_upper_subset_size
    }

    /// Stable names for reports: `lower1`, `upper3`, ...
    pub fn family_names(&self) -> Vec<String> {
        self.enabled
            .iter()
            .map(|f| {
                format!(
                    "{}{}",
                    match f.direction {
                        Direction::Lower => "lower",
                        Direction::Upper => "upper",
                    },
                    f.variant.index()
                )
            })
            .collect()
    }
}

impl Default for FilterConfig {
    fn default() -> Self {
        FilterConfig::all()
    }
}

/// The first inequality that failed, with both sides as evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundFailure {
    /// How many leading content parts were dropped before comparing.
    pub j: usize,
    /// Deleted rows (0-based) for upper bounds; empty for lower bounds.
    pub rows: Vec<usize>,
    pub lhs: Partition,
    pub rhs: Partition,
}

/// Why a triple was eliminated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// |λ| + |μ| differs from |γ|.
    SizeMismatch { expected: u64, actual: u64 },
    /// λ ⊄ γ (`swapped: false`) or μ ⊄ γ (`swapped: true`).
    NotContained { swapped: bool },
    /// A dominance bound failed.
    Bound {
        family: BoundFamily,
        failure: BoundFailure,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Eliminated,
    Survives,
}

/// The outcome of filtering one triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Number of dominance comparisons evaluated.
    pub checks_performed: u64,
}

fn check_lower(
    shape: &SkewShape,
    content: &Partition,
    checks: &mut u64,
) -> Option<BoundFailure> {
    for j in 0.. {
        let derived = lower_derivation(shape, j);
        if derived.is_empty() {
            return None;
        }
        let tail = content.tail(j);
        *checks += 1;
        if !derived.gdom_le(&tail) {
            return Some(BoundFailure {
                j,
                rows: Vec::new(),
                lhs: derived,
                rhs: tail,
            });
        }
    }
    unreachable!("lower derivations empty out");
}

fn check_upper(
    shape: &SkewShape,
    content: &Partition,
    cap: Option<usize>,
    checks: &mut u64,
) -> Option<BoundFailure> {
    let n = shape.rows();
    let limit = cap.unwrap_or(n).min(n);
    for j in 0..=limit {
        for rows in (0..n).combinations(j) {
            let idx = RowDeletionIndex::new(rows.clone()).expect("combinations increase");
            let derived = upper_derivation(shape, &idx).expect("indices in range");
            let tail = content.tail(j);
            *checks += 1;
            if !tail.gdom_le(&derived) {
                return Some(BoundFailure {
                    j,
                    rows,
                    lhs: tail,
                    rhs: derived,
                });
            }
        }
    }
    None
}

/// All lower bounds for one shape/content pairing; `None` means they hold.
pub fn lower_bounds_hold(shape: &SkewShape, mu: &Partition) -> Option<BoundFailure> {
    let mut checks = 0;
    check_lower(shape, mu, &mut checks)
}

/// All upper bounds for one shape/content pairing; `None` means they hold.
pub fn upper_bounds_hold(
    shape: &SkewShape,
    mu: &Partition,
    cfg: &FilterConfig,
) -> Option<BoundFailure> {
    let mut checks = 0;
    check_upper(shape, mu, cfg.max_upper_subset_size(), &mut checks)
}

/// Runs every enabled bound family against the triple, in a fixed order:
/// variants 1 through 4, lower before upper, deletion depth ascending, row
/// sets lexicographic. The witness reports the first failure.
pub fn filter_triple(
    gamma: &Partition,
    lambda: &Partition,
    mu: &Partition,
    cfg: &FilterConfig,
) -> FilterReport {
    let eliminated = |witness, checks| FilterReport {
        verdict: Verdict::Eliminated,
        witness: Some(witness),
        checks_performed: checks,
    };

    if lambda.size() + mu.size() != gamma.size() {
        return eliminated(
            Witness::SizeMismatch {
                expected: gamma.size(),
                actual: lambda.size() + mu.size(),
            },
            0,
        );
    }
    if !gamma.contains(lambda) {
        return eliminated(Witness::NotContained { swapped: false }, 0);
    }
    // γ/μ must also exist: the coefficient counts tableaux of that shape too
    if !gamma.contains(mu) {
        return eliminated(Witness::NotContained { swapped: true }, 0);
    }

    let gamma_t = gamma.transpose();
    let mut checks = 0u64;
    for variant in Variant::ALL {
        let (shape, content) = match variant {
            Variant::Direct => (
                SkewShape::new(gamma.clone(), lambda.clone()),
                mu.clone(),
            ),
            Variant::Swapped => (SkewShape::new(gamma.clone(), mu.clone()), lambda.clone()),
            Variant::Transposed => (
                SkewShape::new(gamma_t.clone(), lambda.transpose()),
                mu.transpose(),
            ),
            Variant::SwappedTransposed => (
                SkewShape::new(gamma_t.clone(), mu.transpose()),
                lambda.transpose(),
            ),
        };
        let shape = shape.expect("containment checked above");
        for direction in [Direction::Lower, Direction::Upper] {
            let family = BoundFamily { direction, variant };
            if !cfg.is_enabled(family) {
                continue;
            }
            let failure = match direction {
                Direction::Lower => check_lower(&shape, &content, &mut checks),
                Direction::Upper => {
                    check_upper(&shape, &content, cfg.max_upper_subset_size(), &mut checks)
                }
            };
            if let Some(failure) = failure {
                return eliminated(Witness::Bound { family, failure }, checks);
            }
        }
    }
    FilterReport {
        verdict: Verdict::Survives,
        witness: None,
        checks_performed: checks,
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(match self {
            Verdict::Eliminated => "ELIMINATED",
            Verdict::Survives => "SURVIVES",
        })
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("witness", 6)?;
        match self {
            Witness::SizeMismatch { .. } => {
                st.serialize_field("family", "size")?;
                st.serialize_field("variant", &Option::<u8>::None)?;
                st.serialize_field("j", &Option::<usize>::None)?;
                st.serialize_field("rows", &Option::<Vec<usize>>::None)?;
                st.serialize_field("lhs", &Option::<String>::None)?;
                st.serialize_field("rhs", &Option::<String>::None)?;
            }
            Witness::NotContained { swapped } => {
                st.serialize_field("family", "containment")?;
                st.serialize_field("variant", &Option::<u8>::None)?;
                st.serialize_field("j", &Option::<usize>::None)?;
                st.serialize_field("rows", &Option::<Vec<usize>>::None)?;
                st.serialize_field("lhs", if *swapped { "mu" } else { "lambda" })?;
                st.serialize_field("rhs", "gamma")?;
            }
            Witness::Bound { family, failure } => {
                st.serialize_field(
                    "family",
                    match family.direction {
                        Direction::Lower => "lower",
                        Direction::Upper => "upper",
                    },
                )?;
                st.serialize_field("variant", &family.variant.index())?;
                st.serialize_field("j", &failure.j)?;
                let rows_1based: Vec<usize> = failure.rows.iter().map(|r| r + 1).collect();
                st.serialize_field("rows", &rows_1based)?;
                st.serialize_field("lhs", &failure.lhs.to_string())?;
                st.serialize_field("rhs", &failure.rhs.to_string())?;
            }
        }
        st.end()
    }
}

impl Serialize for FilterReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("report", 3)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("witness", &self.witness)?;
        st.serialize_field("checks_performed", &self.checks_performed)?;
        st.end()
    }
}
