//! Toolkit for the projection gap of weak antichains in Z^n.
//!
//! For a finite A in Z^n the gap is sum_i |pi_i(A)| - |A|, where pi_i drops
//! the i-th coordinate. The crate provides:
//!
//! - core geometry: point sets, projections, the gap, structural predicates
//!   ([`geometry`]);
//! - a concrete total order on the zero-hull X_n whose initial segments are
//!   conjectured extremal ([`order`]);
//! - compression operators that push a weak antichain toward a down-set of
//!   X_n without increasing the gap ([`compress`]);
//! - closed-form extremal quantities, lower bounds, and witness
//!   constructions ([`bounds`]);
//! - an exhaustive search oracle over down-sets of X_n for small
//!   parameters ([`oracle`]);
//! - plain-text I/O for point sets, certificates, and tables ([`textio`]);
//! - a self-checking harness of randomized and exhaustive properties
//!   ([`verify`]).
//!
//! Axes are numbered 1..=n everywhere in the public API.

pub mod bounds;
pub mod compress;
pub mod error;
pub mod geometry;
pub mod oracle;
pub mod order;
pub mod textio;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{
    construct_a_n, gap_report, is_down_set, is_subset_of_x, is_weak_antichain,
    loomis_whitney_check, normalize_translate, project, GapReport, LoomisWhitneyReport, Point,
    PointSet,
};
pub use order::{
    compare_balanced, compare_positive, initial_segment, is_initial_segment,
    positive_initial_segment, rank, InitialSegment,
};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::geometry::{Point, PointSet};

    pub fn pt(coords: &[i64]) -> Point {
        Point::from_slice(coords).expect("test point")
    }

    pub fn set(dim: usize, points: &[&[i64]]) -> PointSet {
        PointSet::from_points(dim, points.iter().map(|c| pt(c))).expect("test set")
    }
}
