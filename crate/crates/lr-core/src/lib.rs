//! Littlewood-Richardson coefficients and dominance-order positivity bounds.
//!
//! The crate computes LR coefficients exactly by enumerating LR tableaux of
//! a skew shape, builds canonical ballot tilings, derives the lower and
//! upper bound partitions that any positive content must satisfy in
//! generalized dominance order, and runs an exhaustive box census comparing
//! true positivity against filter survival.

pub mod ballot;
pub mod bump;
pub mod coefficient;
pub mod derivation;
pub mod error;
pub mod filter;
pub mod partition;
pub mod survey;
pub mod tableau;

pub use ballot::{canonical_tiling, verify_tiling, BallotSequence, Tiling};
pub use bump::TiledTableau;
pub use coefficient::{
    enumerate_lr_tableaux, lr_coefficient, lr_positive, maximal_content_tableau,
    minimal_content_tableau, LrCount,
};
pub use derivation::{
    delete_rows, delete_rows_shape, left_top_standardization, lower_derivation,
    top_left_standardization, truncate_columns, upper_derivation, RowDeletionIndex,
};
pub use error::{Error, Result};
pub use filter::{
    filter_triple, lower_bounds_hold, upper_bounds_hold, BoundFailure, BoundFamily, Direction,
    FilterConfig, FilterReport, Variant, Verdict, Witness,
};
pub use partition::{skew, Cell, CellRegion, Partition, SkewShape};
pub use survey::{
    count_candidate_triples, enumerate_partitions_in_box, survey, survey_csv, survey_json,
    SurveyConfig, SurveyRow,
};
pub use tableau::{Content, RegionTableau, SkewTableau, Word};
