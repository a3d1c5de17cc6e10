//! Compression operators: bottom layers and the layer decomposition, the
//! single-axis compression C_i, the complete compression CC_i, the balanced
//! compression CCC_i with its slice decomposition, the reduction pipeline
//! from weak antichains to down-sets of X_n, and the derived set S(A).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geometry::{
    check_axis, find_strict_domination, normalize_translate, Point, PointSet, MATERIALIZE_LIMIT,
};
use crate::order::{positive_initial_segment, segment_points};

/// Elements of A minimal in their projection fiber along `axis`: x is kept
/// iff no other element agrees with x off the axis and has a smaller
/// coordinate on it. Accepts arbitrary integer coordinates.
pub fn bottom_layer(a: &PointSet, axis: usize) -> Result<PointSet> {
    let axis0 = check_axis(axis, a.dim())?;
    let mut best: BTreeMap<Vec<i64>, Point> = BTreeMap::new();
    for p in a.iter() {
        let mut key = p.coords().to_vec();
        key.remove(axis0);
        match best.entry(key) {
            Entry::Occupied(mut slot) => {
                if p.coords()[axis0] < slot.get().coords()[axis0] {
                    slot.insert(p.clone());
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(p.clone());
            }
        }
    }
    Ok(PointSet::from_points(a.dim(), best.into_values()).expect("one element per fiber"))
}

/// The layers A_1..A_n and whatever is left over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub layers: Vec<PointSet>,
    pub remainder: PointSet,
}

impl LayerDecomposition {
    /// A set is layer-decomposable when the layers exhaust it. Every weak
    /// antichain is; the converse fails.
    pub fn is_complete(&self) -> bool {
        self.remainder.is_empty()
    }
}

fn set_difference(a: &PointSet, b: &PointSet) -> PointSet {
    PointSet::from_points(a.dim(), a.iter().filter(|p| !b.contains(p)).cloned())
        .expect("filtering preserves distinctness")
}

/// Peels bottom layers axis by axis: A_i is the bottom layer along axis i of
/// what the first i-1 layers left behind.
pub fn layer_decomposition(a: &PointSet) -> LayerDecomposition {
    let mut remaining = a.clone();
    let mut layers = Vec::with_capacity(a.dim());
    for axis in 1..=a.dim() {
        let layer = bottom_layer(&remaining, axis).expect("axis is in range");
        remaining = set_difference(&remaining, &layer);
        layers.push(layer);
    }
    LayerDecomposition {
        layers,
        remainder: remaining,
    }
}

fn require_nonnegative(a: &PointSet) -> Result<()> {
    for p in a.iter() {
        if !p.is_nonnegative() {
            return Err(Error::NegativeCoordinate(p.clone()));
        }
    }
    Ok(())
}

/// C_i: zero the `axis` coordinate of every bottom-layer element. Preserves
/// the size — each fiber contributes one bottom element, and a fiber whose
/// minimum is positive contains no point with coordinate 0 to collide with.
pub fn i_compress(a: &PointSet, axis: usize) -> Result<PointSet> {
    let axis0 = check_axis(axis, a.dim())?;
    require_nonnegative(a)?;
    let bottom = bottom_layer(a, axis)?;
    let moved = a.iter().map(|p| {
        if bottom.contains(p) {
            p.with_axis0(axis0, 0)
        } else {
            p.clone()
        }
    });
    let result = PointSet::from_points(a.dim(), moved).expect("compression cannot merge points");
    debug_assert_eq!(result.len(), a.len());
    Ok(result)
}

/// True iff the bottom layer along `axis` is exactly the zero slice, i.e.
/// C_i fixes the set.
pub fn is_i_compressed(a: &PointSet, axis: usize) -> Result<bool> {
    let axis0 = check_axis(axis, a.dim())?;
    let bottom = bottom_layer(a, axis)?;
    let zero_slice = PointSet::from_points(
        a.dim(),
        a.iter().filter(|p| p.coords()[axis0] == 0).cloned(),
    )
    .expect("filtering preserves distinctness");
    Ok(bottom == zero_slice)
}

/// CC_i: within each fiber along `axis`, reassign the coordinates to
/// 0..k-1 in order. Preserves size and membership in X_n, never increases
/// any projection, and strictly decreases the total coordinate sum whenever
/// it changes the set.
pub fn complete_compress(a: &PointSet, axis: usize) -> Result<PointSet> {
    let axis0 = check_axis(axis, a.dim())?;
    require_nonnegative(a)?;
    let mut fibers: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    for p in a.iter() {
        let mut key = p.coords().to_vec();
        key.remove(axis0);
        fibers.entry(key).or_default().push(p.coords()[axis0]);
    }
    let mut points = Vec::with_capacity(a.len());
    for (key, mut coords) in fibers {
        coords.sort_unstable();
        for (new_coord, _) in coords.iter().enumerate() {
            let mut full = key.clone();
            full.insert(axis0, new_coord as i64);
            points.push(Point::new(full).expect("fiber key is nonempty or axis exists"));
        }
    }
    let result = PointSet::from_points(a.dim(), points)
        .expect("fibers are disjoint and coordinates within a fiber are distinct");
    debug_assert_eq!(result.len(), a.len());
    Ok(result)
}

/// Outcome of [`reduce_to_downset`] plus how many complete-compression
/// passes ran (including the final pass that verified the fixed point).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub result: PointSet,
    pub complete_passes: usize,
}

/// Reduces a weak antichain to a down-set of X_n with the same size and no
/// larger projections: translate to the nonnegative orthant, apply C_1..C_n
/// once in order, then cycle complete compressions over all axes until a
/// full pass changes nothing. Each change strictly lowers the total
/// coordinate sum, so the loop terminates.
pub fn reduce_to_downset(a: &PointSet) -> Result<PointSet> {
    Ok(reduce_to_downset_detailed(a)?.result)
}

pub fn reduce_to_downset_detailed(a: &PointSet) -> Result<Reduction> {
    if a.dim() < 2 {
        return Err(Error::DimensionTooSmall {
            got: a.dim(),
            min: 2,
        });
    }
    if let Some((dominated, dominating)) = find_strict_domination(a) {
        return Err(Error::NotAWeakAntichain(dominating, dominated));
    }
    if a.is_empty() {
        return Ok(Reduction {
            result: a.clone(),
            complete_passes: 0,
        });
    }
    let mut current = normalize_translate(a)?;
    for axis in 1..=a.dim() {
        current = i_compress(&current, axis)?;
    }
    let mut complete_passes = 0;
    loop {
        complete_passes += 1;
        let mut changed = false;
        for axis in 1..=a.dim() {
            let next = complete_compress(&current, axis)?;
            if next != current {
                changed = true;
                current = next;
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert_eq!(current.len(), a.len());
    debug_assert!(crate::geometry::is_subset_of_x(&current));
    debug_assert!(crate::geometry::is_down_set(&current).unwrap_or(false));
    Ok(Reduction {
        result: current,
        complete_passes,
    })
}

fn validate_down_set_in_x(a: &PointSet) -> Result<()> {
    for p in a.iter() {
        if !p.in_x() {
            return Err(Error::NotInX(p.clone()));
        }
    }
    for p in a.iter() {
        for axis0 in 0..a.dim() {
            if p.coords()[axis0] > 0 {
                let pred = p.with_axis0(axis0, p.coords()[axis0] - 1);
                if !a.contains(&pred) {
                    return Err(Error::NotADownSet(pred));
                }
            }
        }
    }
    Ok(())
}

/// A down-set of X_n split along one axis: layer a holds the remaining
/// coordinates of elements with axis-coordinate a that keep a zero among
/// those coordinates; the block holds the strictly positive remainders,
/// whose axis-coordinate is necessarily 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceDecomposition {
    pub ambient_dim: usize,
    pub axis: usize,
    /// Layer a at index a; nested downward for down-set inputs.
    pub layers: Vec<PointSet>,
    pub block: PointSet,
}

impl SliceDecomposition {
    /// Inverse of [`slice_decomposition`]: reinsert the axis coordinate.
    pub fn reassemble(&self) -> Result<PointSet> {
        let axis0 = check_axis(self.axis, self.ambient_dim)?;
        let mut points = Vec::new();
        for (a, layer) in self.layers.iter().enumerate() {
            for u in layer.iter() {
                points.push(u.insert_axis0(axis0, a as i64));
            }
        }
        for u in self.block.iter() {
            points.push(u.insert_axis0(axis0, 0));
        }
        PointSet::from_points(self.ambient_dim, points)
    }

    pub fn size(&self) -> usize {
        self.layers.iter().map(PointSet::len).sum::<usize>() + self.block.len()
    }
}

/// Splits a down-set of X_n along `axis` into slice layers and the strictly
/// positive block.
pub fn slice_decomposition(a: &PointSet, axis: usize) -> Result<SliceDecomposition> {
    let axis0 = check_axis(axis, a.dim())?;
    if a.dim() < 2 {
        return Err(Error::DimensionTooSmall {
            got: a.dim(),
            min: 2,
        });
    }
    validate_down_set_in_x(a)?;
    let mut layer_points: BTreeMap<i64, Vec<Point>> = BTreeMap::new();
    let mut block_points: Vec<Point> = Vec::new();
    for p in a.iter() {
        let u = p.drop_axis0(axis0);
        if u.is_strictly_positive() {
            // p is in X_n, so its zero must sit on the dropped axis.
            debug_assert_eq!(p.coords()[axis0], 0);
            block_points.push(u);
        } else {
            layer_points.entry(p.coords()[axis0]).or_default().push(u);
        }
    }
    let layer_count = layer_points
        .keys()
        .next_back()
        .map_or(0, |&max| max as usize + 1);
    let mut layers = Vec::with_capacity(layer_count);
    for a_idx in 0..layer_count {
        let pts = layer_points.remove(&(a_idx as i64)).unwrap_or_default();
        layers.push(PointSet::from_points(a.dim() - 1, pts).expect("distinct within a slice"));
    }
    let block =
        PointSet::from_points(a.dim() - 1, block_points).expect("distinct within the block");
    Ok(SliceDecomposition {
        ambient_dim: a.dim(),
        axis,
        layers,
        block,
    })
}

/// CCC_i: replace every slice layer by the initial segment of the balanced
/// order on X_{n-1} of the same size, and the block by the first |block|
/// strictly positive points of the induced order; reassemble along `axis`.
/// Preserves size and down-set structure, never decreases |S|, and never
/// increases the gap.
pub fn balanced_compress(a: &PointSet, axis: usize) -> Result<PointSet> {
    let decomposition = slice_decomposition(a, axis)?;
    let axis0 = axis - 1;
    let mut points = Vec::with_capacity(a.len());
    for (a_idx, layer) in decomposition.layers.iter().enumerate() {
        for u in segment_points(a.dim() - 1, layer.len())? {
            points.push(u.insert_axis0(axis0, a_idx as i64));
        }
    }
    for u in positive_initial_segment(a.dim() - 1, axis, decomposition.block.len())? {
        points.push(u.insert_axis0(axis0, 0));
    }
    let result = PointSet::from_points(a.dim(), points).expect("replacement slices stay disjoint");
    debug_assert_eq!(result.len(), a.len());
    Ok(result)
}

/// S(A): the strictly positive points all of whose single-coordinate
/// zeroings lie in A. Finite because each surviving coordinate is bounded by
/// the matching coordinate maximum of A; the search box extends one past
/// those maxima.
pub fn compute_s(a: &PointSet) -> Result<PointSet> {
    if a.dim() < 2 {
        return Err(Error::DimensionTooSmall {
            got: a.dim(),
            min: 2,
        });
    }
    for p in a.iter() {
        if !p.in_x() {
            return Err(Error::NotInX(p.clone()));
        }
    }
    let dim = a.dim();
    let maxima = match a.coordinate_maxima() {
        Some(m) => m,
        None => return PointSet::empty(dim),
    };
    let bounds: Vec<i64> = maxima.iter().map(|&m| m + 1).collect();
    let mut volume: u128 = 1;
    for &b in &bounds {
        volume = volume
            .checked_mul(b as u128)
            .ok_or(Error::Overflow("candidate box"))?;
    }
    if volume > MATERIALIZE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "candidate box holds {volume} points (limit {MATERIALIZE_LIMIT})"
        )));
    }
    let mut found = Vec::new();
    let mut cur = vec![1i64; dim];
    'scan: loop {
        let candidate = Point::from_slice(&cur).expect("candidate point");
        let all_zeroings_present = (0..dim).all(|k| a.contains(&candidate.with_axis0(k, 0)));
        if all_zeroings_present {
            found.push(candidate);
        }
        let mut k = dim;
        loop {
            if k == 0 {
                break 'scan;
            }
            k -= 1;
            if cur[k] < bounds[k] {
                cur[k] += 1;
                continue 'scan;
            }
            cur[k] = 1;
        }
    }
    Ok(PointSet::from_points(dim, found).expect("box enumeration is duplicate-free"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{construct_a_n, gap_report, is_down_set, is_subset_of_x, project};
    use crate::order::initial_segment;
    use crate::testutil::set;

    #[test]
    fn bottom_layer_cases() {
        let a = set(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(bottom_layer(&a, 1).unwrap(), set(2, &[&[0, 0], &[0, 1]]));

        let single = set(3, &[&[4, -1, 2]]);
        for axis in 1..=3 {
            assert_eq!(bottom_layer(&single, axis).unwrap(), single);
        }

        // For a down-set, the bottom layer along any axis is the zero slice.
        let d = construct_a_n(3, 3).unwrap();
        for axis in 1..=3 {
            let expected =
                PointSet::from_points(3, d.iter().filter(|p| p.coord(axis) == 0).cloned()).unwrap();
            assert_eq!(bottom_layer(&d, axis).unwrap(), expected);
        }

        assert!(matches!(
            bottom_layer(&a, 3),
            Err(Error::AxisOutOfRange { .. })
        ));
    }

    #[test]
    fn layer_decomposition_cases() {
        let d = layer_decomposition(&set(2, &[&[0, 0], &[1, 0]]));
        assert_eq!(d.layers[0], set(2, &[&[0, 0]]));
        assert_eq!(d.layers[1], set(2, &[&[1, 0]]));
        assert!(d.is_complete());

        let d = layer_decomposition(&set(2, &[&[0, 0], &[0, 1], &[1, 0], &[1, 1]]));
        assert_eq!(d.layers[0], set(2, &[&[0, 0], &[0, 1]]));
        assert_eq!(d.layers[1], set(2, &[&[1, 0]]));
        assert_eq!(d.remainder, set(2, &[&[1, 1]]));
        assert!(!d.is_complete());

        let d = layer_decomposition(&PointSet::empty(4).unwrap());
        assert!(d.layers.iter().all(PointSet::is_empty));
        assert!(d.is_complete());
    }

    #[test]
    fn layer_remainder_empty_for_weak_antichains() {
        let samples = [
            set(2, &[&[0, 3], &[4, 0], &[2, 2]]),
            set(3, &[&[0, 5, 2], &[3, 0, 9], &[7, 7, 0], &[1, 1, 0]]),
            construct_a_n(3, 3).unwrap(),
        ];
        for a in &samples {
            assert!(layer_decomposition(a).is_complete());
        }
    }

    #[test]
    fn i_compress_cases() {
        let a = set(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            i_compress(&a, 1).unwrap(),
            set(2, &[&[0, 0], &[0, 1], &[1, 1]])
        );

        let once = i_compress(&a, 1).unwrap();
        assert_eq!(i_compress(&once, 1).unwrap(), once);

        let tricky = set(3, &[&[2, 1, 1], &[1, 1, 1], &[0, 2, 2], &[5, 1, 2]]);
        for axis in 1..=3 {
            assert_eq!(i_compress(&tricky, axis).unwrap().len(), tricky.len());
        }

        assert!(matches!(
            i_compress(&set(2, &[&[-1, 0]]), 1),
            Err(Error::NegativeCoordinate(_))
        ));
    }

    #[test]
    fn is_i_compressed_cases() {
        assert!(is_i_compressed(&set(2, &[&[0, 0], &[0, 1]]), 1).unwrap());
        assert!(!is_i_compressed(&set(2, &[&[1, 0]]), 1).unwrap());
        let a = set(3, &[&[2, 1, 1], &[1, 1, 1], &[0, 2, 2], &[5, 1, 2]]);
        for axis in 1..=3 {
            assert!(is_i_compressed(&i_compress(&a, axis).unwrap(), axis).unwrap());
        }
    }

    #[test]
    fn complete_compress_cases() {
        let a = set(2, &[&[2, 0], &[5, 0], &[0, 1]]);
        assert_eq!(
            complete_compress(&a, 1).unwrap(),
            set(2, &[&[0, 0], &[1, 0], &[0, 1]])
        );

        let d = construct_a_n(3, 3).unwrap();
        for axis in 1..=3 {
            assert_eq!(complete_compress(&d, axis).unwrap(), d);
        }
    }

    #[test]
    fn complete_compress_monotonicity() {
        let coord_sum =
            |s: &PointSet| -> i64 { s.iter().map(|p| p.coords().iter().sum::<i64>()).sum() };
        let samples = [
            set(2, &[&[2, 0], &[5, 0], &[0, 1]]),
            set(3, &[&[0, 3, 0], &[0, 1, 0], &[2, 0, 0], &[0, 0, 4]]),
            set(3, &[&[0, 5, 2], &[3, 0, 2], &[3, 5, 0], &[0, 0, 0]]),
        ];
        for a in &samples {
            for axis in 1..=a.dim() {
                let c = complete_compress(a, axis).unwrap();
                assert_eq!(c.len(), a.len());
                if is_subset_of_x(a) {
                    assert!(is_subset_of_x(&c));
                }
                for j in 1..=a.dim() {
                    assert!(
                        project(&c, j).unwrap().len() <= project(a, j).unwrap().len(),
                        "axis {axis} projection {j}"
                    );
                }
                if c != *a {
                    assert!(coord_sum(&c) < coord_sum(a));
                }
            }
        }
    }

    #[test]
    fn reduce_pipeline_trace() {
        let a = set(2, &[&[3, 5], &[7, 2]]);
        let reduction = reduce_to_downset_detailed(&a).unwrap();
        assert_eq!(reduction.result, set(2, &[&[0, 0], &[0, 1]]));
        // Normalized coordinate sum is 7, so at most 8 passes may run.
        assert!(reduction.complete_passes <= 8);
    }

    #[test]
    fn reduce_fixes_down_sets() {
        let d = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[0, 2]]);
        assert_eq!(reduce_to_downset(&d).unwrap(), d);
        for side in 1..=3 {
            let slab = construct_a_n(3, side).unwrap();
            assert_eq!(reduce_to_downset(&slab).unwrap(), slab);
        }
    }

    #[test]
    fn reduce_postconditions() {
        let samples = [
            set(2, &[&[5, -3], &[4, 10], &[-7, 20]]),
            set(3, &[&[0, 5, 2], &[3, 0, 9], &[7, 7, 0], &[1, 1, 0]]),
        ];
        for a in &samples {
            let before = gap_report(a).unwrap();
            let r = reduce_to_downset(a).unwrap();
            assert_eq!(r.len(), a.len());
            assert!(is_subset_of_x(&r));
            assert!(is_down_set(&r).unwrap());
            let after = gap_report(&r).unwrap();
            for (b, c) in before.projection_sizes.iter().zip(&after.projection_sizes) {
                assert!(c <= b);
            }
        }
    }

    #[test]
    fn reduce_rejects_dominating_pairs_and_accepts_empty() {
        let err = reduce_to_downset(&set(2, &[&[0, 0], &[1, 1]])).unwrap_err();
        assert!(matches!(err, Error::NotAWeakAntichain(_, _)));
        let empty = PointSet::empty(3).unwrap();
        assert_eq!(reduce_to_downset(&empty).unwrap(), empty);
    }

    #[test]
    fn slice_decomposition_cases() {
        let a = set(
            3,
            &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]],
        );
        let d = slice_decomposition(&a, 3).unwrap();
        assert_eq!(d.layers.len(), 2);
        assert_eq!(d.layers[0], set(2, &[&[0, 0], &[1, 0], &[0, 1]]));
        assert_eq!(d.layers[1], set(2, &[&[0, 0]]));
        assert_eq!(d.block, set(2, &[&[1, 1]]));
        assert_eq!(d.reassemble().unwrap(), a);

        let b = set(2, &[&[0, 0]]);
        let d = slice_decomposition(&b, 2).unwrap();
        assert_eq!(d.layers.len(), 1);
        assert_eq!(d.layers[0], set(1, &[&[0]]));
        assert!(d.block.is_empty());
        assert_eq!(d.reassemble().unwrap(), b);
    }

    #[test]
    fn slice_layers_nest_for_down_sets() {
        let d = construct_a_n(3, 3).unwrap();
        for axis in 1..=3 {
            let s = slice_decomposition(&d, axis).unwrap();
            assert_eq!(s.size(), d.len());
            for w in s.layers.windows(2) {
                assert!(w[1].iter().all(|u| w[0].contains(u)), "axis {axis}");
            }
            assert_eq!(s.reassemble().unwrap(), d);
        }
    }

    #[test]
    fn slice_rejects_bad_input() {
        assert!(matches!(
            slice_decomposition(&set(2, &[&[0, 1]]), 1),
            Err(Error::NotADownSet(_))
        ));
        assert!(matches!(
            slice_decomposition(&set(2, &[&[1, 1]]), 1),
            Err(Error::NotInX(_))
        ));
    }

    #[test]
    fn balanced_compress_cases() {
        let a = set(3, &[&[0, 0, 0], &[0, 1, 0], &[0, 2, 0]]);
        assert_eq!(
            balanced_compress(&a, 3).unwrap(),
            set(3, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]])
        );

        for m in [0usize, 1, 5, 9, 12] {
            let seg = initial_segment(3, m).unwrap().to_point_set();
            for axis in 1..=3 {
                assert_eq!(balanced_compress(&seg, axis).unwrap(), seg, "m {m}");
            }
        }

        for side in 1..=3u64 {
            let slab = construct_a_n(3, side).unwrap();
            for axis in 1..=3 {
                assert_eq!(balanced_compress(&slab, axis).unwrap(), slab);
            }
        }
    }

    #[test]
    fn balanced_compress_improves_invariants() {
        // A non-segment down-set: a bare column of height 3.
        let a = set(3, &[&[0, 0, 0], &[0, 1, 0], &[0, 2, 0]]);
        for axis in 1..=3 {
            let c = balanced_compress(&a, axis).unwrap();
            assert_eq!(c.len(), a.len());
            assert!(is_down_set(&c).unwrap());
            assert!(is_subset_of_x(&c));
            assert!(
                gap_report(&c).unwrap().gap <= gap_report(&a).unwrap().gap,
                "axis {axis}"
            );
            assert!(compute_s(&c).unwrap().len() >= compute_s(&a).unwrap().len());
        }
    }

    #[test]
    fn balanced_compress_two_dimensional() {
        // n = 2: slice layers live in X_1 = {(0)} and the block in Z_{>0}.
        let a = set(2, &[&[0, 0], &[1, 0], &[0, 1], &[2, 0]]);
        for axis in 1..=2 {
            let c = balanced_compress(&a, axis).unwrap();
            assert_eq!(c.len(), a.len());
            assert!(is_down_set(&c).unwrap());
            assert!(is_subset_of_x(&c));
        }
    }

    #[test]
    fn compute_s_cases() {
        assert_eq!(
            compute_s(&set(2, &[&[0, 0], &[1, 0], &[0, 1]])).unwrap(),
            set(2, &[&[1, 1]])
        );
        assert!(compute_s(&set(2, &[&[0, 0], &[1, 0]])).unwrap().is_empty());
        let a2 = construct_a_n(3, 2).unwrap();
        assert_eq!(compute_s(&a2).unwrap(), set(3, &[&[1, 1, 1]]));
        assert!(compute_s(&PointSet::empty(2).unwrap()).unwrap().is_empty());
        assert!(matches!(
            compute_s(&set(2, &[&[1, 1]])),
            Err(Error::NotInX(_))
        ));
    }

    #[test]
    fn compute_s_of_larger_slabs() {
        // S(A_N) is the full positive box [1, N-1]^n.
        for side in 2..=4u64 {
            let s = compute_s(&construct_a_n(3, side).unwrap()).unwrap();
            assert_eq!(s.len() as u64, (side - 1).pow(3));
            assert!(s
                .iter()
                .all(|p| p.is_strictly_positive() && p.max_coord() < side as i64));
        }
    }
}
