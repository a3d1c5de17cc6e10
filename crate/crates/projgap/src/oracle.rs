//! Exhaustive search oracle: exact minimum gap and maximum |S| over all
//! down-sets in X_n of a given size, independent of the structure theorems,
//! plus an unrestricted weak-antichain spot check over a coordinate box.
//!
//! Enumeration of down-sets is provably complete: a down-set of size m
//! containing a point with some coordinate equal to k contains the whole
//! chain of k+1 points below it, so every coordinate is at most m-1 and the
//! universe X_n with coordinates in [0, m-1] suffices. Practical budgets:
//! n=2 up to m=10, n=3 up to m=12, and n=4 up to m=9 run comfortably;
//! beyond that the node limit refuses loudly rather than truncating.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering as AtomicOrdering};
use std::sync::Mutex;

use crate::bounds::{ExtremalCertificate, Method, Quantity};
use crate::compress::compute_s;
use crate::error::{Error, Result};
use crate::geometry::{gap_report, x_box_points, x_box_size, Point, PointSet, MATERIALIZE_LIMIT};
use crate::order::cmp_balanced_unchecked;

/// Default ceiling on search-tree nodes before the oracle refuses.
pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;

/// Which candidate space the oracle searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Down-sets of X_n. Complete for minimum gap and maximum |S| by the
    /// reduction lemma and the coordinate-chain argument.
    DownSetsInX,
    /// All weak antichains inside [0, coordinate_bound]^n. A spot check
    /// only; certificates are labeled non-exhaustive.
    AllWeakAntichains,
}

/// Tuning for the brute-force searches.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub mode: SearchMode,
    /// Largest coordinate value allowed in candidates; defaults to m-1,
    /// which is complete for down-set search. Must be at least 1 if given.
    pub coordinate_bound: Option<u64>,
    pub worker_count: usize,
    /// Ceiling on search-tree nodes; None disables the check.
    pub node_limit: Option<u64>,
    /// Evaluate only one representative per coordinate-permutation orbit.
    /// Sound for gap and |S|, which are permutation-invariant.
    pub symmetry_reduction: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: SearchMode::DownSetsInX,
            coordinate_bound: None,
            worker_count: 1,
            node_limit: Some(DEFAULT_NODE_LIMIT),
            symmetry_reduction: false,
        }
    }
}

#[derive(Clone, Copy)]
enum Goal {
    MinGap,
    MaxS,
}

impl Goal {
    fn evaluate(self, set: &PointSet) -> Result<i64> {
        match self {
            Goal::MinGap => Ok(gap_report(set)?.gap),
            Goal::MaxS => Ok(compute_s(set)?.len() as i64),
        }
    }

    fn improves(self, new: i64, current: i64) -> bool {
        match self {
            Goal::MinGap => new < current,
            Goal::MaxS => new > current,
        }
    }

    fn quantity(self) -> Quantity {
        match self {
            Goal::MinGap => Quantity::Gap,
            Goal::MaxS => Quantity::SSize,
        }
    }

    fn empty_value(self) -> i64 {
        0
    }
}

struct Budget<'a> {
    counter: &'a AtomicU64,
    limit: Option<u64>,
}

impl Budget<'_> {
    fn charge(&self) -> Result<()> {
        let used = self.counter.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        match self.limit {
            Some(limit) if used > limit => Err(Error::BudgetExceeded(format!(
                "search budget of {limit} nodes exhausted"
            ))),
            _ => Ok(()),
        }
    }
}

/// Candidate points with, for the down-set mode, the indices of each
/// point's single-step predecessors.
struct Universe {
    dim: usize,
    points: Vec<Point>,
    preds: Vec<Vec<usize>>,
}

fn check_universe_size(count: u128) -> Result<()> {
    if count > MATERIALIZE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "candidate universe holds {count} points (limit {MATERIALIZE_LIMIT})"
        )));
    }
    Ok(())
}

/// X_n with coordinates in [0, bound], sorted by the balanced order, with
/// predecessor links. Decrementing a positive coordinate of a point of X_n
/// keeps it in X_n and in the box, so every predecessor is present.
fn build_ideal_universe(dim: usize, bound: i64) -> Result<Universe> {
    check_universe_size(x_box_size(dim, bound as u64 + 1)?)?;
    let mut points = x_box_points(dim, bound);
    points.sort_by(cmp_balanced_unchecked);
    let mut index: HashMap<Vec<i64>, usize> = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        index.insert(p.coords().to_vec(), i);
    }
    let preds = points
        .iter()
        .map(|p| {
            (0..dim)
                .filter(|&k| p.coords()[k] > 0)
                .map(|k| {
                    let mut c = p.coords().to_vec();
                    c[k] -= 1;
                    *index.get(&c).expect("predecessor stays in the box")
                })
                .collect()
        })
        .collect();
    Ok(Universe { dim, points, preds })
}

/// The full box [0, bound]^n in ascending lexicographic order.
fn build_box_universe(dim: usize, bound: i64) -> Result<Vec<Point>> {
    let d = u32::try_from(dim).map_err(|_| Error::Overflow("box size"))?;
    check_universe_size((bound as u128 + 1).pow(d))?;
    let mut out = Vec::new();
    let mut cur = vec![0i64; dim];
    loop {
        out.push(Point::from_slice(&cur).expect("box point"));
        let mut k = dim;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if cur[k] < bound {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
        }
    }
}

fn build_set(dim: usize, points: &[Point], chosen: &[usize]) -> PointSet {
    PointSet::from_points(dim, chosen.iter().map(|&i| points[i].clone()))
        .expect("chosen indices are distinct")
}

/// Depth-first canonical growth: extend with universe indices above the
/// last chosen one whose predecessors are all present. The balanced order
/// is a linear extension of the coordinatewise order, so sorting any
/// down-set yields a chain of down-set prefixes; each down-set is reached
/// by exactly that one path.
fn explore_ideals(
    u: &Universe,
    target: usize,
    chosen: &mut Vec<usize>,
    present: &mut Vec<bool>,
    budget: &Budget<'_>,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if chosen.len() == target {
        return visit(chosen);
    }
    let start = chosen.last().map_or(0, |&i| i + 1);
    let needed = target - chosen.len();
    for idx in start..u.points.len() {
        if u.points.len() - idx < needed {
            break;
        }
        if u.preds[idx].iter().all(|&p| present[p]) {
            budget.charge()?;
            chosen.push(idx);
            present[idx] = true;
            let outcome = explore_ideals(u, target, chosen, present, budget, visit);
            let popped = chosen.pop().expect("just pushed");
            present[popped] = false;
            outcome?;
        }
    }
    Ok(())
}

/// Same canonical growth over arbitrary subsets of the box, pruning any
/// extension that would create a strictly dominating pair.
fn explore_antichains(
    points: &[Point],
    target: usize,
    chosen: &mut Vec<usize>,
    budget: &Budget<'_>,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    if chosen.len() == target {
        return visit(chosen);
    }
    let start = chosen.last().map_or(0, |&i| i + 1);
    let needed = target - chosen.len();
    for idx in start..points.len() {
        if points.len() - idx < needed {
            break;
        }
        let p = &points[idx];
        let compatible = chosen.iter().all(|&c| {
            let q = &points[c];
            !q.strictly_dominated_by(p) && !p.strictly_dominated_by(q)
        });
        if compatible {
            budget.charge()?;
            chosen.push(idx);
            let outcome = explore_antichains(points, target, chosen, budget, visit);
            chosen.pop();
            outcome?;
        }
    }
    Ok(())
}

fn all_permutations(k: usize, perm: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == perm.len() {
        return f(perm);
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        let keep_going = all_permutations(k + 1, perm, f);
        perm.swap(k, i);
        if !keep_going {
            return false;
        }
    }
    true
}

/// True iff the set is the lexicographically smallest member of its orbit
/// under coordinate permutations.
fn is_orbit_canonical(set: &PointSet) -> bool {
    let original: Vec<Vec<i64>> = set.iter().map(|p| p.coords().to_vec()).collect();
    let mut perm: Vec<usize> = (0..set.dim()).collect();
    all_permutations(0, &mut perm, &mut |perm| {
        if perm.iter().enumerate().all(|(i, &v)| i == v) {
            return true;
        }
        let mut mapped: Vec<Vec<i64>> = original
            .iter()
            .map(|v| perm.iter().map(|&k| v[k]).collect())
            .collect();
        mapped.sort();
        mapped >= original
    })
}

type BranchBest = Option<(i64, PointSet)>;

struct SearchPlan {
    dim: usize,
    target: usize,
    goal: Goal,
    symmetry: bool,
}

impl SearchPlan {
    fn visit_leaf(&self, points: &[Point], chosen: &[usize], best: &mut BranchBest) -> Result<()> {
        let set = build_set(self.dim, points, chosen);
        if self.symmetry && !is_orbit_canonical(&set) {
            return Ok(());
        }
        let value = self.goal.evaluate(&set)?;
        let better = match best {
            Some((current, _)) => self.goal.improves(value, *current),
            None => true,
        };
        if better {
            *best = Some((value, set));
        }
        Ok(())
    }
}

enum Space {
    Ideals(Universe),
    Antichains(Vec<Point>),
}

impl Space {
    fn points(&self) -> &[Point] {
        match self {
            Space::Ideals(u) => &u.points,
            Space::Antichains(pts) => pts,
        }
    }

    fn explore(
        &self,
        target: usize,
        seed: &[usize],
        budget: &Budget<'_>,
        visit: &mut dyn FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        let mut chosen = seed.to_vec();
        match self {
            Space::Ideals(u) => {
                let mut present = vec![false; u.points.len()];
                for &i in seed {
                    present[i] = true;
                }
                explore_ideals(u, target, &mut chosen, &mut present, budget, visit)
            }
            Space::Antichains(pts) => explore_antichains(pts, target, &mut chosen, budget, visit),
        }
    }
}

fn run_branch(
    space: &Space,
    plan: &SearchPlan,
    seed: &[usize],
    budget: &Budget<'_>,
) -> Result<BranchBest> {
    let mut best: BranchBest = None;
    space.explore(plan.target, seed, budget, &mut |chosen| {
        plan.visit_leaf(space.points(), chosen, &mut best)
    })?;
    Ok(best)
}

fn search(dim: usize, m: usize, opts: &SearchOptions, goal: Goal) -> Result<ExtremalCertificate> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { got: dim, min: 2 });
    }
    if opts.worker_count == 0 {
        return Err(Error::InvalidArgument(
            "worker_count must be positive".into(),
        ));
    }
    if opts.coordinate_bound == Some(0) {
        return Err(Error::InvalidArgument(
            "coordinate_bound must be at least 1".into(),
        ));
    }
    if matches!(opts.mode, SearchMode::AllWeakAntichains) && matches!(goal, Goal::MaxS) {
        return Err(Error::InvalidArgument(
            "|S| maximization is defined over down-sets in X_n; use the down-set mode".into(),
        ));
    }

    let exhaustive = |bound: u64| match opts.mode {
        SearchMode::DownSetsInX => Some(bound >= m.saturating_sub(1) as u64),
        SearchMode::AllWeakAntichains => Some(false),
    };

    if m == 0 {
        return Ok(ExtremalCertificate {
            dim,
            size: 0,
            value: goal.empty_value(),
            witness: PointSet::empty(dim)?,
            method: Method::BruteForce,
            quantity: goal.quantity(),
            exhaustive: exhaustive(0),
        });
    }

    let bound = opts.coordinate_bound.unwrap_or((m - 1) as u64);
    let bound_i = i64::try_from(bound).map_err(|_| Error::Overflow("coordinate bound"))?;
    let space = match opts.mode {
        SearchMode::DownSetsInX => Space::Ideals(build_ideal_universe(dim, bound_i)?),
        SearchMode::AllWeakAntichains => Space::Antichains(build_box_universe(dim, bound_i)?),
    };
    let plan = SearchPlan {
        dim,
        target: m,
        goal,
        symmetry: opts.symmetry_reduction,
    };

    let node_counter = AtomicU64::new(0);
    let budget = Budget {
        counter: &node_counter,
        limit: opts.node_limit,
    };

    // Split the canonical tree at depth 2 into independent branch seeds.
    let seed_depth = m.min(2);
    let mut seeds: Vec<Vec<usize>> = Vec::new();
    space.explore(seed_depth, &[], &budget, &mut |chosen| {
        seeds.push(chosen.to_vec());
        Ok(())
    })?;

    let workers = opts.worker_count.min(seeds.len()).max(1);
    let mut outcomes: Vec<(usize, Result<BranchBest>)> = if workers <= 1 {
        seeds
            .iter()
            .enumerate()
            .map(|(i, seed)| (i, run_branch(&space, &plan, seed, &budget)))
            .collect()
    } else {
        let cursor = AtomicUsize::new(0);
        let collected: Mutex<Vec<(usize, Result<BranchBest>)>> = Mutex::new(Vec::new());
        std::thread::scope(|scope| {
            for _ in 0..workers {
                scope.spawn(|| loop {
                    let i = cursor.fetch_add(1, AtomicOrdering::Relaxed);
                    if i >= seeds.len() {
                        break;
                    }
                    let outcome = run_branch(&space, &plan, &seeds[i], &budget);
                    collected
                        .lock()
                        .expect("no panics hold the lock")
                        .push((i, outcome));
                });
            }
        });
        collected.into_inner().expect("scope joined all workers")
    };
    outcomes.sort_by_key(|(i, _)| *i);

    // Deterministic reduction: earlier branches win ties, so the witness is
    // the first optimum in canonical generation order regardless of the
    // worker count.
    let mut best: BranchBest = None;
    for (_, outcome) in outcomes {
        if let Some((value, witness)) = outcome? {
            let better = match &best {
                Some((current, _)) => goal.improves(value, *current),
                None => true,
            };
            if better {
                best = Some((value, witness));
            }
        }
    }
    match best {
        Some((value, witness)) => Ok(ExtremalCertificate {
            dim,
            size: m,
            value,
            witness,
            method: Method::BruteForce,
            quantity: goal.quantity(),
            exhaustive: exhaustive(bound),
        }),
        None => Err(Error::InvalidArgument(format!(
            "no candidate of size {m} exists within coordinate bound {bound}"
        ))),
    }
}

/// Exact minimum gap over the chosen search space, with a witness attaining
/// it. Complete (and labeled exhaustive) in the down-set mode.
pub fn min_gap_bruteforce(
    dim: usize,
    m: usize,
    opts: &SearchOptions,
) -> Result<ExtremalCertificate> {
    search(dim, m, opts, Goal::MinGap)
}

/// Exact maximum of |S(A)| over down-sets in X_n of size m, with a witness.
pub fn max_s_bruteforce(dim: usize, m: usize, opts: &SearchOptions) -> Result<ExtremalCertificate> {
    search(dim, m, opts, Goal::MaxS)
}

/// Streams every down-set of X_n of size m exactly once, in canonical
/// generation order. Yields one final error if the node budget runs out.
pub fn enumerate_downsets(dim: usize, m: usize) -> Result<DownSetIter> {
    DownSetIter::new(dim, m, Some(DEFAULT_NODE_LIMIT))
}

/// As [`enumerate_downsets`], with an explicit node budget (None = no cap).
pub fn enumerate_downsets_bounded(
    dim: usize,
    m: usize,
    node_limit: Option<u64>,
) -> Result<DownSetIter> {
    DownSetIter::new(dim, m, node_limit)
}

/// Iterator over all down-sets in X_n of a fixed size; see
/// [`enumerate_downsets`].
pub struct DownSetIter {
    universe: Universe,
    target: usize,
    chosen: Vec<usize>,
    present: Vec<bool>,
    cursors: Vec<usize>,
    nodes_used: u64,
    node_limit: Option<u64>,
    done: bool,
}

impl DownSetIter {
    fn new(dim: usize, m: usize, node_limit: Option<u64>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::DimensionTooSmall { got: dim, min: 2 });
        }
        let universe = if m == 0 {
            Universe {
                dim,
                points: Vec::new(),
                preds: Vec::new(),
            }
        } else {
            build_ideal_universe(dim, (m - 1) as i64)?
        };
        let size = universe.points.len();
        Ok(DownSetIter {
            universe,
            target: m,
            chosen: Vec::new(),
            present: vec![false; size],
            cursors: vec![0],
            nodes_used: 0,
            node_limit,
            done: false,
        })
    }
}

impl Iterator for DownSetIter {
    type Item = Result<PointSet>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if self.target == 0 {
            self.done = true;
            return Some(PointSet::empty(self.universe.dim));
        }
        loop {
            let depth = self.chosen.len();
            let mut descended = false;
            while self.cursors[depth] < self.universe.points.len() {
                let idx = self.cursors[depth];
                self.cursors[depth] += 1;
                if self.universe.points.len() - idx < self.target - depth {
                    self.cursors[depth] = self.universe.points.len();
                    break;
                }
                if self.universe.preds[idx].iter().all(|&p| self.present[p]) {
                    self.nodes_used += 1;
                    if let Some(limit) = self.node_limit {
                        if self.nodes_used > limit {
                            self.done = true;
                            return Some(Err(Error::BudgetExceeded(format!(
                                "enumeration budget of {limit} nodes exhausted"
                            ))));
                        }
                    }
                    self.chosen.push(idx);
                    self.present[idx] = true;
                    if self.chosen.len() == self.target {
                        let set = build_set(self.universe.dim, &self.universe.points, &self.chosen);
                        let popped = self.chosen.pop().expect("just pushed");
                        self.present[popped] = false;
                        return Some(Ok(set));
                    }
                    self.cursors.push(idx + 1);
                    descended = true;
                    break;
                }
            }
            if descended {
                continue;
            }
            if self.chosen.is_empty() {
                self.done = true;
                return None;
            }
            self.cursors.pop();
            let popped = self.chosen.pop().expect("nonempty");
            self.present[popped] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::g_exact;
    use crate::geometry::{is_down_set, is_subset_of_x};
    use crate::order::initial_segment;
    use crate::testutil::set;

    fn collect_downsets(dim: usize, m: usize) -> Vec<PointSet> {
        enumerate_downsets(dim, m)
            .unwrap()
            .collect::<Result<Vec<_>>>()
            .unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(collect_downsets(2, 1), vec![set(2, &[&[0, 0]])]);

        let two = collect_downsets(2, 2);
        assert_eq!(
            two,
            vec![set(2, &[&[0, 0], &[1, 0]]), set(2, &[&[0, 0], &[0, 1]]),]
        );

        assert_eq!(collect_downsets(2, 3).len(), 3);
        assert_eq!(collect_downsets(3, 0), vec![PointSet::empty(3).unwrap()]);
    }

    #[test]
    fn enumeration_counts() {
        // Ideal counts of X_2 and X_3 by size, frozen from an independent
        // computation.
        let x2_expected = [1usize, 1, 2, 3, 4, 5, 6];
        for (m, want) in x2_expected.iter().enumerate() {
            assert_eq!(collect_downsets(2, m).len(), *want, "X_2 size {m}");
        }
        let x3_expected = [1usize, 1, 3, 6, 13, 24, 48, 86, 159];
        for (m, want) in x3_expected.iter().enumerate() {
            assert_eq!(collect_downsets(3, m).len(), *want, "X_3 size {m}");
        }
    }

    #[test]
    fn enumeration_is_sound_and_duplicate_free() {
        let sets = collect_downsets(3, 5);
        for s in &sets {
            assert_eq!(s.len(), 5);
            assert!(is_subset_of_x(s));
            assert!(is_down_set(s).unwrap());
        }
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    fn combinations(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
        fn rec(
            start: usize,
            n: usize,
            k: usize,
            acc: &mut Vec<usize>,
            f: &mut impl FnMut(&[usize]),
        ) {
            if acc.len() == k {
                f(acc);
                return;
            }
            for i in start..n {
                if n - i < k - acc.len() {
                    break;
                }
                acc.push(i);
                rec(i + 1, n, k, acc, f);
                acc.pop();
            }
        }
        rec(0, n, k, &mut Vec::new(), f);
    }

    #[test]
    fn enumeration_matches_subset_filter() {
        // Independent completeness check: filter all size-m subsets of the
        // bounded universe for the down-set property and compare counts.
        for (dim, m_max) in [(2usize, 6usize), (3, 4)] {
            for m in 1..=m_max {
                let universe = x_box_points(dim, m as i64 - 1);
                let mut filtered = 0usize;
                combinations(universe.len(), m, &mut |idxs| {
                    let s = PointSet::from_points(dim, idxs.iter().map(|&i| universe[i].clone()))
                        .unwrap();
                    if is_down_set(&s).unwrap() {
                        filtered += 1;
                    }
                });
                assert_eq!(
                    collect_downsets(dim, m).len(),
                    filtered,
                    "dim {dim} size {m}"
                );
            }
        }
    }

    #[test]
    fn min_gap_small_cases() {
        let c = min_gap_bruteforce(2, 3, &SearchOptions::default()).unwrap();
        assert_eq!(c.value, 1);
        assert_eq!(c.witness.len(), 3);
        assert!(is_down_set(&c.witness).unwrap());
        assert_eq!(c.exhaustive, Some(true));
        assert_eq!(c.method, Method::BruteForce);

        assert_eq!(
            min_gap_bruteforce(3, 7, &SearchOptions::default())
                .unwrap()
                .value,
            5
        );

        let c = min_gap_bruteforce(4, 0, &SearchOptions::default()).unwrap();
        assert_eq!(c.value, 0);
        assert!(c.witness.is_empty());
    }

    #[test]
    fn min_gap_matches_segments() {
        for m in 0..=7 {
            assert_eq!(
                min_gap_bruteforce(2, m, &SearchOptions::default())
                    .unwrap()
                    .value,
                g_exact(2, m).unwrap().value,
                "n=2 m={m}"
            );
        }
        for m in 0..=8 {
            assert_eq!(
                min_gap_bruteforce(3, m, &SearchOptions::default())
                    .unwrap()
                    .value,
                g_exact(3, m).unwrap().value,
                "n=3 m={m}"
            );
        }
    }

    #[test]
    fn max_s_small_cases() {
        let c = max_s_bruteforce(2, 3, &SearchOptions::default()).unwrap();
        assert_eq!(c.value, 1);
        assert_eq!(c.witness, set(2, &[&[0, 0], &[1, 0], &[0, 1]]));
        assert_eq!(c.quantity, Quantity::SSize);

        assert_eq!(
            max_s_bruteforce(2, 2, &SearchOptions::default())
                .unwrap()
                .value,
            0
        );
        assert_eq!(
            max_s_bruteforce(3, 0, &SearchOptions::default())
                .unwrap()
                .value,
            0
        );
    }

    #[test]
    fn max_s_matches_segments() {
        let expected = [0i64, 0, 0, 1, 2, 4, 6];
        for (m, want) in expected.iter().enumerate() {
            let c = max_s_bruteforce(2, m, &SearchOptions::default()).unwrap();
            assert_eq!(c.value, *want, "m = {m}");
            let seg = initial_segment(2, m).unwrap().to_point_set();
            assert_eq!(
                compute_s(&seg).unwrap().len() as i64,
                *want,
                "segment m = {m}"
            );
        }
    }

    #[test]
    fn worker_count_does_not_change_results() {
        for goal_max_s in [false, true] {
            let single = SearchOptions {
                worker_count: 1,
                ..SearchOptions::default()
            };
            let multi = SearchOptions {
                worker_count: 3,
                ..SearchOptions::default()
            };
            let (a, b) = if goal_max_s {
                (
                    max_s_bruteforce(3, 7, &single).unwrap(),
                    max_s_bruteforce(3, 7, &multi).unwrap(),
                )
            } else {
                (
                    min_gap_bruteforce(3, 7, &single).unwrap(),
                    min_gap_bruteforce(3, 7, &multi).unwrap(),
                )
            };
            assert_eq!(a.value, b.value);
            assert_eq!(a.witness, b.witness);
        }
    }

    #[test]
    fn node_budget_refuses_loudly() {
        let opts = SearchOptions {
            node_limit: Some(3),
            ..SearchOptions::default()
        };
        assert!(matches!(
            min_gap_bruteforce(3, 7, &opts),
            Err(Error::BudgetExceeded(_))
        ));

        let items: Vec<_> = enumerate_downsets_bounded(3, 6, Some(10))
            .unwrap()
            .collect();
        assert!(matches!(items.last(), Some(Err(Error::BudgetExceeded(_)))));
    }

    #[test]
    fn antichain_mode_spot_check() {
        let opts = SearchOptions {
            mode: SearchMode::AllWeakAntichains,
            ..SearchOptions::default()
        };
        let c = min_gap_bruteforce(2, 3, &opts).unwrap();
        assert_eq!(c.value, 1);
        assert_eq!(c.exhaustive, Some(false));

        assert!(matches!(
            max_s_bruteforce(2, 3, &opts),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn symmetry_reduction_preserves_values() {
        for m in 4..=7 {
            let plain = min_gap_bruteforce(3, m, &SearchOptions::default()).unwrap();
            let reduced = min_gap_bruteforce(
                3,
                m,
                &SearchOptions {
                    symmetry_reduction: true,
                    ..SearchOptions::default()
                },
            )
            .unwrap();
            assert_eq!(plain.value, reduced.value, "m = {m}");
        }
    }

    #[test]
    fn starved_bound_is_an_error() {
        let opts = SearchOptions {
            coordinate_bound: Some(1),
            ..SearchOptions::default()
        };
        assert!(matches!(
            min_gap_bruteforce(2, 4, &opts),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            min_gap_bruteforce(
                2,
                3,
                &SearchOptions {
                    coordinate_bound: Some(0),
                    ..SearchOptions::default()
                }
            ),
            Err(Error::InvalidArgument(_))
        ));
    }
}
