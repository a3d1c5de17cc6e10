//! Points, point sets, projections, the gap functional, and structural
//! predicates. Axes are numbered 1..=n throughout the public API.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Cap on the number of points any constructor is willing to materialize.
pub(crate) const MATERIALIZE_LIMIT: u128 = 5_000_000;

/// An integer vector in Z^n, n >= 1. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: Vec<i64>,
}

impl Point {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::DimensionTooSmall { got: 0, min: 1 });
        }
        Ok(Point { coords })
    }

    pub fn from_slice(coords: &[i64]) -> Result<Self> {
        Point::new(coords.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coordinate at `axis` (1-based). Panics if the axis is out of range.
    pub fn coord(&self, axis: usize) -> i64 {
        assert!(axis >= 1 && axis <= self.coords.len(), "axis out of range");
        self.coords[axis - 1]
    }

    pub fn max_coord(&self) -> i64 {
        *self.coords.iter().max().expect("points are nonempty")
    }

    pub fn has_zero(&self) -> bool {
        self.coords.contains(&0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.coords.iter().all(|&c| c > 0)
    }

    /// Membership in X_n: nonnegative with at least one zero coordinate.
    pub fn in_x(&self) -> bool {
        self.is_nonnegative() && self.has_zero()
    }

    /// True iff every coordinate of `self` is strictly below the matching
    /// coordinate of `other`.
    pub fn strictly_dominated_by(&self, other: &Point) -> bool {
        self.dim() == other.dim() && self.coords.iter().zip(&other.coords).all(|(a, b)| a < b)
    }

    pub(crate) fn drop_axis0(&self, axis0: usize) -> Point {
        let mut coords = Vec::with_capacity(self.coords.len() - 1);
        coords.extend_from_slice(&self.coords[..axis0]);
        coords.extend_from_slice(&self.coords[axis0 + 1..]);
        Point { coords }
    }

    pub(crate) fn with_axis0(&self, axis0: usize, value: i64) -> Point {
        let mut coords = self.coords.clone();
        coords[axis0] = value;
        Point { coords }
    }

    pub(crate) fn insert_axis0(&self, axis0: usize, value: i64) -> Point {
        let mut coords = Vec::with_capacity(self.coords.len() + 1);
        coords.extend_from_slice(&self.coords[..axis0]);
        coords.push(value);
        coords.extend_from_slice(&self.coords[axis0..]);
        Point { coords }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite, duplicate-free set of points of uniform dimension.
///
/// Iteration order is lexicographic and deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: BTreeSet<Point>,
}

impl PointSet {
    pub fn empty(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionTooSmall { got: 0, min: 1 });
        }
        Ok(PointSet {
            dim,
            points: BTreeSet::new(),
        })
    }

    /// Builds a set from points of dimension `dim`. A duplicate point is an
    /// error: callers producing multisets have a logic bug we must surface.
    pub fn from_points<I>(dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = Point>,
    {
        let mut set = PointSet::empty(dim)?;
        for p in points {
            set.insert_checked(p)?;
        }
        Ok(set)
    }

    /// Builds a set from an iterator whose repeats are expected and collapse,
    /// as in the image of a projection.
    pub(crate) fn from_points_dedup<I>(dim: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = Point>,
    {
        let mut set = PointSet::empty(dim)?;
        for p in points {
            if p.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: p.dim(),
                });
            }
            set.points.insert(p);
        }
        Ok(set)
    }

    fn insert_checked(&mut self, p: Point) -> Result<()> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.dim(),
            });
        }
        if !self.points.insert(p.clone()) {
            return Err(Error::DuplicatePoint(p));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    /// Per-axis maxima, or None for the empty set.
    pub fn coordinate_maxima(&self) -> Option<Vec<i64>> {
        if self.is_empty() {
            return None;
        }
        let mut maxima = vec![i64::MIN; self.dim];
        for p in &self.points {
            for (m, &c) in maxima.iter_mut().zip(p.coords()) {
                *m = (*m).max(c);
            }
        }
        Some(maxima)
    }

    fn coordinate_minima(&self) -> Option<Vec<i64>> {
        if self.is_empty() {
            return None;
        }
        let mut minima = vec![i64::MAX; self.dim];
        for p in &self.points {
            for (m, &c) in minima.iter_mut().zip(p.coords()) {
                *m = (*m).min(c);
            }
        }
        Some(minima)
    }
}

pub(crate) fn check_axis(axis: usize, dim: usize) -> Result<usize> {
    if axis == 0 || axis > dim {
        return Err(Error::AxisOutOfRange { axis, dim });
    }
    Ok(axis - 1)
}

/// Projection along `axis`: drop that coordinate from every point and
/// collapse repeats.
pub fn project(a: &PointSet, axis: usize) -> Result<PointSet> {
    if a.dim() < 2 {
        return Err(Error::DimensionTooSmall {
            got: a.dim(),
            min: 2,
        });
    }
    let axis0 = check_axis(axis, a.dim())?;
    PointSet::from_points_dedup(a.dim() - 1, a.iter().map(|p| p.drop_axis0(axis0)))
}

/// Per-axis projection sizes together with the gap
/// (sum of projection sizes minus the size of the set).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub size: u64,
    pub projection_sizes: Vec<u64>,
    pub gap: i64,
}

pub fn gap_report(a: &PointSet) -> Result<GapReport> {
    if a.dim() < 2 {
        return Err(Error::DimensionTooSmall {
            got: a.dim(),
            min: 2,
        });
    }
    let mut projection_sizes = Vec::with_capacity(a.dim());
    for axis0 in 0..a.dim() {
        let image: BTreeSet<Point> = a.iter().map(|p| p.drop_axis0(axis0)).collect();
        projection_sizes.push(image.len() as u64);
    }
    let total: u64 = projection_sizes.iter().sum();
    let gap = i64::try_from(total as i128 - a.len() as i128).map_err(|_| Error::Overflow("gap"))?;
    Ok(GapReport {
        size: a.len() as u64,
        projection_sizes,
        gap,
    })
}

/// Finds a pair (x, y) with every coordinate of x strictly below y, if any.
pub(crate) fn find_strict_domination(a: &PointSet) -> Option<(Point, Point)> {
    // Quadratic scan; fine at the set sizes this toolkit targets.
    for x in a.iter() {
        for y in a.iter() {
            if x.strictly_dominated_by(y) {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}

/// A weak antichain contains no pair with x_i < y_i for every i.
pub fn is_weak_antichain(a: &PointSet) -> Result<bool> {
    if a.dim() < 2 {
        return Err(Error::DimensionTooSmall {
            got: a.dim(),
            min: 2,
        });
    }
    Ok(find_strict_domination(a).is_none())
}

/// Down-set check over Z_{>=0}^n: closure under decrementing any single
/// positive coordinate, which by induction is equivalent to closure under
/// coordinatewise decrease.
pub fn is_down_set(a: &PointSet) -> Result<bool> {
    for p in a.iter() {
        if !p.is_nonnegative() {
            return Err(Error::NegativeCoordinate(p.clone()));
        }
    }
    for p in a.iter() {
        for axis0 in 0..a.dim() {
            if p.coords()[axis0] > 0 {
                let pred = p.with_axis0(axis0, p.coords()[axis0] - 1);
                if !a.contains(&pred) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// True iff every element is nonnegative with at least one zero coordinate.
pub fn is_subset_of_x(a: &PointSet) -> bool {
    a.iter().all(|p| p.in_x())
}

/// Translates the set so that every coordinate attains minimum 0. Preserves
/// the size, every projection size, weak-antichain status, and the gap.
pub fn normalize_translate(a: &PointSet) -> Result<PointSet> {
    let minima = a.coordinate_minima().ok_or(Error::EmptySet)?;
    let translated = a.iter().map(|p| {
        let coords: Option<Vec<i64>> = p
            .coords()
            .iter()
            .zip(&minima)
            .map(|(&c, &m)| c.checked_sub(m))
            .collect();
        coords.map(|c| Point { coords: c })
    });
    let mut points = Vec::with_capacity(a.len());
    for p in translated {
        points.push(p.ok_or(Error::Overflow("translation"))?);
    }
    Ok(PointSet::from_points(a.dim(), points).expect("translation preserves distinctness"))
}

/// Points of X_n with every coordinate in [0, max], enumerated by the position
/// of the first zero coordinate: entries before it are in [1, max], entries
/// after it in [0, max]. The blocks are disjoint and cover the whole slab.
pub(crate) fn x_box_points(dim: usize, max: i64) -> Vec<Point> {
    debug_assert!(dim >= 1 && max >= 0);
    let mut out = Vec::new();
    for first_zero in 0..dim {
        let lows: Vec<i64> = (0..dim)
            .map(|k| if k < first_zero { 1 } else { 0 })
            .collect();
        let highs: Vec<i64> = (0..dim)
            .map(|k| if k == first_zero { 0 } else { max })
            .collect();
        if lows.iter().zip(&highs).any(|(l, h)| l > h) {
            continue;
        }
        let mut cur = lows.clone();
        'block: loop {
            out.push(Point {
                coords: cur.clone(),
            });
            // Odometer over the block, last coordinate fastest.
            let mut k = dim;
            loop {
                if k == 0 {
                    break 'block;
                }
                k -= 1;
                if cur[k] < highs[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = lows[k];
            }
        }
    }
    out
}

/// Number of points of X_n with coordinates in [0, side-1]; that is,
/// side^n - (side-1)^n.
pub(crate) fn x_box_size(dim: usize, side: u64) -> Result<u128> {
    let d = u32::try_from(dim).map_err(|_| Error::Overflow("box size"))?;
    let outer = (side as u128)
        .checked_pow(d)
        .ok_or(Error::Overflow("box size"))?;
    let inner = ((side - 1) as u128)
        .checked_pow(d)
        .ok_or(Error::Overflow("box size"))?;
    Ok(outer - inner)
}

/// The slab A_N: points of the box [0, side-1]^n having at least one zero
/// coordinate. Its size is side^n - (side-1)^n.
pub fn construct_a_n(dim: usize, side: u64) -> Result<PointSet> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { got: dim, min: 2 });
    }
    if side == 0 {
        return Err(Error::InvalidArgument("side must be at least 1".into()));
    }
    let size = x_box_size(dim, side)?;
    if size > MATERIALIZE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "slab would hold {size} points (limit {MATERIALIZE_LIMIT})"
        )));
    }
    let max = i64::try_from(side - 1).map_err(|_| Error::Overflow("slab coordinates"))?;
    let points = x_box_points(dim, max);
    debug_assert_eq!(points.len() as u128, size);
    PointSet::from_points(dim, points)
}

/// Both sides of the product-of-projections inequality
/// |S|^(d-1) <= prod_i |pi_i(S)|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoomisWhitneyReport {
    pub lhs: u128,
    pub rhs: u128,
    pub holds: bool,
}

/// Evaluates |S|^(d-1) and the product of the d projection sizes. `holds`
/// is a theorem for every finite set; a false value signals a bug.
pub fn loomis_whitney_check(s: &PointSet) -> Result<LoomisWhitneyReport> {
    if s.dim() < 2 {
        return Err(Error::DimensionTooSmall {
            got: s.dim(),
            min: 2,
        });
    }
    let d = u32::try_from(s.dim()).map_err(|_| Error::Overflow("exponent"))?;
    let lhs = (s.len() as u128)
        .checked_pow(d - 1)
        .ok_or(Error::Overflow("|S|^(d-1)"))?;
    let mut rhs: u128 = 1;
    for axis in 1..=s.dim() {
        let image = project(s, axis)?;
        rhs = rhs
            .checked_mul(image.len() as u128)
            .ok_or(Error::Overflow("projection product"))?;
    }
    Ok(LoomisWhitneyReport {
        lhs,
        rhs,
        holds: lhs <= rhs,
    })
}
