//! The balanced order on X_n (the nonnegative points with a zero
//! coordinate), its initial segments and ranks, and the induced order on the
//! strictly positive orthant.
//!
//! For distinct x, y let T = {i : x_i != y_i}. Then x < y iff the maximum of
//! x over T is smaller than the maximum of y over T, or the maxima tie and
//! the largest axis where x attains its maximum (within T) is smaller than
//! the corresponding axis for y. This is a total order on X_n, and it
//! extends the coordinatewise order.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geometry::{x_box_points, x_box_size, Point, PointSet, MATERIALIZE_LIMIT};

/// Comparator core, shared by every ordering in the crate. Callers guarantee
/// equal dimensions; membership in X_n is not consulted, which lets the same
/// rule order embedded positive points.
pub(crate) fn cmp_balanced_unchecked(x: &Point, y: &Point) -> Ordering {
    debug_assert_eq!(x.dim(), y.dim());
    // Track max value and largest attaining axis over the disagreement set.
    let mut x_max = i64::MIN;
    let mut x_arg = 0usize;
    let mut y_max = i64::MIN;
    let mut y_arg = 0usize;
    for (k, (&a, &b)) in x.coords().iter().zip(y.coords()).enumerate() {
        if a != b {
            if a >= x_max {
                x_max = a;
                x_arg = k + 1;
            }
            if b >= y_max {
                y_max = b;
                y_arg = k + 1;
            }
        }
    }
    if x_arg == 0 {
        // Empty disagreement set: identical points.
        return Ordering::Equal;
    }
    match x_max.cmp(&y_max) {
        Ordering::Equal => x_arg.cmp(&y_arg),
        unequal => unequal,
    }
}

/// Compares two points of X_n in the balanced order.
pub fn compare_balanced(x: &Point, y: &Point) -> Result<Ordering> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            got: y.dim(),
        });
    }
    if x.dim() < 2 {
        return Err(Error::DimensionTooSmall {
            got: x.dim(),
            min: 2,
        });
    }
    for p in [x, y] {
        if !p.in_x() {
            return Err(Error::NotInX(p.clone()));
        }
    }
    Ok(cmp_balanced_unchecked(x, y))
}

pub(crate) fn embed_zero(u: &Point, axis: usize) -> Point {
    u.insert_axis0(axis - 1, 0)
}

/// Compares strictly positive points under the order induced by inserting a
/// zero coordinate at `axis` (1-based, in 1..=dim+1) and comparing the
/// embedded points in the balanced order. The zero coordinates agree, so
/// they never enter the disagreement set and the result does not depend on
/// the chosen axis.
pub fn compare_positive(u: &Point, v: &Point, axis: usize) -> Result<Ordering> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: u.dim(),
            got: v.dim(),
        });
    }
    if axis == 0 || axis > u.dim() + 1 {
        return Err(Error::AxisOutOfRange {
            axis,
            dim: u.dim() + 1,
        });
    }
    for p in [u, v] {
        if !p.is_strictly_positive() {
            return Err(Error::NotStrictlyPositive(p.clone()));
        }
    }
    Ok(cmp_balanced_unchecked(
        &embed_zero(u, axis),
        &embed_zero(v, axis),
    ))
}

/// The m smallest points of X_n in the balanced order, kept in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialSegment {
    dim: usize,
    points: Vec<Point>,
}

impl InitialSegment {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Elements in increasing balanced order.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn to_point_set(&self) -> PointSet {
        PointSet::from_points(self.dim, self.points.iter().cloned())
            .expect("segment points are distinct")
    }
}

/// Segment enumeration shared with the compression operators, which need the
/// degenerate one-dimensional case X_1 = {(0)}.
pub(crate) fn segment_points(dim: usize, m: usize) -> Result<Vec<Point>> {
    if dim == 0 {
        return Err(Error::DimensionTooSmall { got: 0, min: 1 });
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    if dim == 1 {
        if m == 1 {
            return Ok(vec![Point::from_slice(&[0]).expect("origin")]);
        }
        return Err(Error::SegmentExhausted { dim: 1, size: m });
    }
    if m as u128 > MATERIALIZE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "segment of {m} points exceeds the materialization limit {MATERIALIZE_LIMIT}"
        )));
    }
    // Smallest box [0, side-1]^dim holding at least m points of X_dim. The
    // order extends ordering by max coordinate, so the full segment lies in
    // this box: any point outside has a coordinate >= side and therefore
    // comes after all box points.
    let mut side: u64 = 1;
    while x_box_size(dim, side)? < m as u128 {
        side += 1;
    }
    let count = x_box_size(dim, side)?;
    if count > MATERIALIZE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "segment enumeration box holds {count} points (limit {MATERIALIZE_LIMIT})"
        )));
    }
    let mut points = x_box_points(dim, (side - 1) as i64);
    points.sort_by(cmp_balanced_unchecked);
    points.truncate(m);
    Ok(points)
}

/// The initial segment of size m of the balanced order on X_n. Always a
/// down-set in X_n.
pub fn initial_segment(dim: usize, m: usize) -> Result<InitialSegment> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { got: dim, min: 2 });
    }
    let points = segment_points(dim, m)?;
    Ok(InitialSegment { dim, points })
}

/// The k smallest strictly positive points under [`compare_positive`] with
/// the given embedding axis, in increasing order. The order itself is
/// axis-independent; the axis only names the embedding.
pub fn positive_initial_segment(dim: usize, axis: usize, k: usize) -> Result<Vec<Point>> {
    if dim == 0 {
        return Err(Error::DimensionTooSmall { got: 0, min: 1 });
    }
    if axis == 0 || axis > dim + 1 {
        return Err(Error::AxisOutOfRange { axis, dim: dim + 1 });
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    if k as u128 > MATERIALIZE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "segment of {k} points exceeds the materialization limit {MATERIALIZE_LIMIT}"
        )));
    }
    // Smallest box [1, side]^dim with side^dim >= k; as above, the embedded
    // order extends ordering by max coordinate, so the first k points lie in
    // the box.
    let d = u32::try_from(dim).map_err(|_| Error::Overflow("box size"))?;
    let mut side: u64 = 1;
    while (side as u128).pow(d) < k as u128 {
        side += 1;
    }
    let count = (side as u128).pow(d);
    if count > MATERIALIZE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "segment enumeration box holds {count} points (limit {MATERIALIZE_LIMIT})"
        )));
    }
    let mut points = positive_box_points(dim, side as i64);
    let axis0 = axis - 1;
    points.sort_by(|a, b| {
        cmp_balanced_unchecked(&a.insert_axis0(axis0, 0), &b.insert_axis0(axis0, 0))
    });
    points.truncate(k);
    Ok(points)
}

/// Points of [1, side]^dim via an odometer, last coordinate fastest.
fn positive_box_points(dim: usize, side: i64) -> Vec<Point> {
    debug_assert!(side >= 1);
    let mut out = Vec::new();
    let mut cur = vec![1i64; dim];
    loop {
        out.push(Point::from_slice(&cur).expect("positive box point"));
        let mut k = dim;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < side {
                cur[k] += 1;
                break;
            }
            cur[k] = 1;
            if k == 0 {
                return out;
            }
        }
    }
}

/// 0-based position of x in the balanced order on X_n: the number of points
/// strictly below it. Computed by enumerating the box [0, max(x)]^n, which
/// contains every predecessor.
pub fn rank(x: &Point) -> Result<u64> {
    if !x.in_x() {
        return Err(Error::NotInX(x.clone()));
    }
    if x.dim() == 1 {
        return Ok(0);
    }
    let side = (x.max_coord() as u64) + 1;
    let count = x_box_size(x.dim(), side)?;
    if count > MATERIALIZE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "rank enumeration box holds {count} points (limit {MATERIALIZE_LIMIT})"
        )));
    }
    let below = x_box_points(x.dim(), x.max_coord())
        .iter()
        .filter(|y| cmp_balanced_unchecked(y, x) == Ordering::Less)
        .count();
    Ok(below as u64)
}

/// True iff A consists of the |A| smallest points of X_n.
pub fn is_initial_segment(a: &PointSet) -> Result<bool> {
    for p in a.iter() {
        if !p.in_x() {
            return Err(Error::NotInX(p.clone()));
        }
    }
    if a.dim() == 1 {
        // X_1 = {(0)}, so any subset is a segment.
        return Ok(true);
    }
    let segment = segment_points(a.dim(), a.len())?;
    Ok(segment.iter().all(|p| a.contains(p)))
}
