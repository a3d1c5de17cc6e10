//! Randomized and exhaustive property suites with deterministic, seedable
//! reports. Failures are collected and rendered, never thrown: the report
//! says which property failed, on how many cases, and shows the first
//! counterexample.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::{
    c_const, evaluate_bound, g_exact, segment_gap_profile, slab_gap_formula, slab_size,
    witness_construction,
};
use crate::compress::{
    balanced_compress, complete_compress, compute_s, i_compress, is_i_compressed,
    layer_decomposition, reduce_to_downset_detailed,
};
use crate::error::Result;
use crate::geometry::{
    construct_a_n, gap_report, is_down_set, is_subset_of_x, loomis_whitney_check,
    normalize_translate, project, Point, PointSet,
};
use crate::oracle::{enumerate_downsets, max_s_bruteforce, min_gap_bruteforce, SearchOptions};
use crate::order::{cmp_balanced_unchecked, compare_positive, embed_zero, initial_segment};

/// Which property families to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Lemmas,
    Extremal,
    All,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Lemmas => "lemmas",
            Suite::Extremal => "extremal",
            Suite::All => "all",
        };
        f.write_str(name)
    }
}

/// Knobs for a verification run. The same configuration always produces the
/// same report, byte for byte.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub suite: Suite,
    /// Largest ambient dimension exercised by randomized properties.
    pub n_max: usize,
    /// Largest random set size, and the cap for exhaustive sweeps.
    pub m_max: usize,
    pub seed: u64,
    /// Cases per randomized property.
    pub cases: u64,
    /// Worker threads for the exhaustive-search comparisons.
    pub workers: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            suite: Suite::All,
            n_max: 4,
            m_max: 10,
            seed: 0,
            cases: 1000,
            workers: 1,
        }
    }
}

/// One property's tally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Full run: configuration echo plus one outcome per property.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub outcomes: Vec<PropertyOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(PropertyOutcome::passed)
    }

    /// Deterministic plain-text rendering: same config, same bytes.
    pub fn render(&self) -> String {
        let cfg = &self.config;
        let mut out = format!(
            "verify suite={} n-max={} m-max={} seed={} cases={}\n",
            cfg.suite, cfg.n_max, cfg.m_max, cfg.seed, cfg.cases
        );
        for o in &self.outcomes {
            let status = if o.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {} cases={} failures={}\n",
                o.name, o.cases, o.failures
            ));
            if let Some(first) = &o.first_failure {
                out.push_str(&format!("  first failure: {first}\n"));
            }
        }
        let failed = self.outcomes.iter().filter(|o| !o.passed()).count();
        if failed == 0 {
            out.push_str(&format!(
                "result: PASS ({} properties)\n",
                self.outcomes.len()
            ));
        } else {
            out.push_str(&format!(
                "result: FAIL ({failed} of {} properties failed)\n",
                self.outcomes.len()
            ));
        }
        out
    }
}

/// Runs the configured suites. Infallible: internal errors count as property
/// failures and show up in the report.
pub fn run_verify(cfg: &VerifyConfig) -> VerifyReport {
    let cfg = VerifyConfig {
        n_max: cfg.n_max.max(2),
        m_max: cfg.m_max.max(1),
        workers: cfg.workers.max(1),
        ..cfg.clone()
    };
    let mut outcomes = Vec::new();
    if matches!(cfg.suite, Suite::Lemmas | Suite::All) {
        lemma_suite(&cfg, &mut outcomes);
    }
    if matches!(cfg.suite, Suite::Extremal | Suite::All) {
        extremal_suite(&cfg, &mut outcomes);
    }
    VerifyReport {
        config: cfg,
        outcomes,
    }
}

// ---------------------------------------------------------------------------
// Harness

/// Independent stream per property so adding a property never shifts the
/// random inputs of the others.
fn prop_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn run_cases(
    name: &str,
    cases: u64,
    mut check: impl FnMut(u64) -> std::result::Result<(), String>,
) -> PropertyOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    for case in 0..cases {
        if let Err(msg) = check(case) {
            failures += 1;
            if first_failure.is_none() {
                first_failure = Some(format!("case {case}: {msg}"));
            }
        }
    }
    PropertyOutcome {
        name: name.to_string(),
        cases,
        failures,
        first_failure,
    }
}

fn fail(msg: String) -> std::result::Result<(), String> {
    Err(msg)
}

fn err_str<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("unexpected error: {e}"))
}

fn dim_for_case(case: u64, n_max: usize) -> usize {
    2 + (case as usize) % (n_max - 1)
}

fn brief(a: &PointSet) -> String {
    let coords: Vec<String> = a.iter().map(|p| format!("({p})")).collect();
    format!("{{{}}}", coords.join(", "))
}

// ---------------------------------------------------------------------------
// Random generators

fn random_point(rng: &mut ChaCha8Rng, dim: usize, lo: i64, hi: i64) -> Point {
    let coords: Vec<i64> = (0..dim).map(|_| rng.random_range(lo..=hi)).collect();
    Point::new(coords).expect("dim is positive")
}

fn random_x_point(rng: &mut ChaCha8Rng, dim: usize, hi: i64) -> Point {
    let mut coords: Vec<i64> = (0..dim).map(|_| rng.random_range(0..=hi)).collect();
    let zero_at = rng.random_range(0..dim);
    coords[zero_at] = 0;
    Point::new(coords).expect("dim is positive")
}

fn gen_weak_antichain(rng: &mut ChaCha8Rng, dim: usize, max_size: usize) -> PointSet {
    let target = rng.random_range(0..=max_size);
    let mut chosen: Vec<Point> = Vec::new();
    let mut attempts = 0;
    while chosen.len() < target && attempts < 30 * (target + 1) {
        attempts += 1;
        let p = random_point(rng, dim, -2, 5);
        if chosen.contains(&p) {
            continue;
        }
        let compatible = chosen
            .iter()
            .all(|q| !q.strictly_dominated_by(&p) && !p.strictly_dominated_by(q));
        if compatible {
            chosen.push(p);
        }
    }
    PointSet::from_points(dim, chosen).expect("points were deduplicated")
}

fn gen_nonneg_set(rng: &mut ChaCha8Rng, dim: usize, max_size: usize) -> PointSet {
    let target = rng.random_range(0..=max_size);
    let mut points = std::collections::BTreeSet::new();
    for _ in 0..target {
        points.insert(random_point(rng, dim, 0, 4));
    }
    PointSet::from_points(dim, points).expect("set iteration is duplicate-free")
}

fn gen_x_subset(rng: &mut ChaCha8Rng, dim: usize, max_size: usize) -> PointSet {
    let target = rng.random_range(0..=max_size);
    let mut points = std::collections::BTreeSet::new();
    for _ in 0..target {
        points.insert(random_x_point(rng, dim, 4));
    }
    PointSet::from_points(dim, points).expect("set iteration is duplicate-free")
}

/// Grows a down-set of X_n one point at a time, always choosing uniformly
/// among the points whose predecessors are all present.
fn gen_down_set(rng: &mut ChaCha8Rng, dim: usize, max_size: usize) -> PointSet {
    let target = rng.random_range(0..=max_size);
    let mut chosen = std::collections::BTreeSet::new();
    for _ in 0..target {
        let pool = addable_points(&chosen, dim);
        if pool.is_empty() {
            break;
        }
        let pick = rng.random_range(0..pool.len());
        chosen.insert(pool[pick].clone());
    }
    PointSet::from_points(dim, chosen).expect("set iteration is duplicate-free")
}

fn addable_points(chosen: &std::collections::BTreeSet<Point>, dim: usize) -> Vec<Point> {
    let origin = Point::new(vec![0; dim]).expect("dim is positive");
    if !chosen.contains(&origin) {
        return vec![origin];
    }
    let mut pool = std::collections::BTreeSet::new();
    for p in chosen {
        for axis0 in 0..dim {
            let s = p.with_axis0(axis0, p.coords()[axis0] + 1);
            if !s.in_x() || chosen.contains(&s) {
                continue;
            }
            let ready = (0..dim).all(|k| {
                s.coords()[k] == 0 || chosen.contains(&s.with_axis0(k, s.coords()[k] - 1))
            });
            if ready {
                pool.insert(s);
            }
        }
    }
    pool.into_iter().collect()
}

// ---------------------------------------------------------------------------
// Lemma suite

fn lemma_suite(cfg: &VerifyConfig, out: &mut Vec<PropertyOutcome>) {
    out.push(prop_gap_nonnegative(cfg, 1));
    out.push(prop_projection_containment(cfg, 2));
    out.push(prop_complete_compression(cfg, 3));
    out.push(prop_reduction_postconditions(cfg, 4));
    out.push(prop_balanced_compression(cfg, 5));
    out.push(prop_layer_decomposable(cfg, 6));
    out.push(prop_staged_compression(cfg, 7));
    out.push(prop_pipeline_structure(cfg, 8));
    out.push(order_axioms_with(
        "balanced-order-total",
        &cmp_balanced_unchecked,
        prop_rng(cfg.seed, 9),
        cfg.cases,
        cfg.n_max,
    ));
    out.push(prop_order_extension(cfg, 10));
    out.push(prop_positive_embedding(cfg, 11));
    out.push(check_s_set_order_closed(30));
    out.push(prop_loomis_whitney(cfg, 13));
    out.push(prop_normalize_gap(cfg, 14));
    out.push(check_fixed_point_structure(cfg.m_max.min(12)));
}

fn prop_gap_nonnegative(cfg: &VerifyConfig, index: u64) -> PropertyOutcome {
    let mut rng = prop_rng(cfg.seed, index);
    run_cases("weak-antichain-gap-nonnegative", cfg.cases, |case| {
        let dim = dim_for_case(case, cfg.n_max);
        let a = gen_weak_antichain(&mut rng, dim, cfg.m_max);
        let report = err_str(gap_report(&a))?;
        if report.gap < 0 {
            return fail(format!("gap {} for {}", report.gap, brief(&a)));
        }
        Ok(())
    })
}

fn prop_projection_containment(cfg: &VerifyConfig, index: u64) -> PropertyOutcome {
    let mut rng = prop_rng(cfg.seed, index);
    run_cases("compression-projection-containment", cfg.cases, |case| {
        let dim = dim_for_case(case, cfg.n_max);
        let a = gen_nonneg_set(&mut rng, dim, cfg.m_max);
        let i = rng.random_range(1..=dim);
        let mut j = rng.random_range(1..=dim - 1);
        if j >= i {
            j += 1;
        }
        let compressed = err_str(i_compress(&a, i))?;
        let lhs = err_str(project(&compressed, j))?;
        let image = err_str(project(&a, j))?;
        let image_axis = if i < j { i } else { i - 1 };
        let rhs = err_str(i_compress(&image, image_axis))?;
        for p in lhs.iter() {
            if !rhs.contains(p) {
                return fail(format!(
                    "({p}) in project(compress(A,{i}),{j}) missing from compress(project(A,{j}),{image_axis}) for A={}",
                    brief(&a)
                ));
            }
        }
        if lhs.len() > image.len() {
            return fail(format!(
                "axis-{j} projection grew from {} to {} under compression along axis {i} for A={}",
                image.len(),
                lhs.len(),
                brief(&a)
            ));
        }
        Ok(())
    })
}

fn prop_complete_compression(cfg: &VerifyConfig, index: u64) -> PropertyOutcome {
    let mut rng = prop_rng(cfg.seed, index);
    run_cases("complete-compression-monotone", cfg.cases, |case| {
        let dim = dim_for_case(case, cfg.n_max);
        let a = gen_x_subset(&mut rng, dim, cfg.m_max);
        let i = rng.random_range(1..=dim);
        let b = err_str(complete_compress(&a, i))?;
        if b.len() != a.len() {
            return fail(format!("size changed {} -> {}", a.len(), b.len()));
        }
        if !is_subset_of_x(&b) {
            return fail(format!("left X_n: {}", brief(&b)));
        }
        for j in 1..=dim {
            let before = err_str(project(&a, j))?.len();
            let after = err_str(project(&b, j))?.len();
            if after > before {
                return fail(format!(
                    "axis-{j} projection grew {before} -> {after} under complete compression along {i} for A={}",
                    brief(&a)
                ));
            }
        }
        let sum = |s: &PointSet| -> i64 { s.iter().map(|p| p.coords().iter().sum::<i64>()).sum() };
        if b != a && sum(&b) >= sum(&a) {
            return fail(format!(
                "changed the set without lowering the coordinate sum: {} -> {}",
                brief(&a),
                brief(&b)
            ));
        }
        Ok(())
    })
}

fn prop_reduction_postconditions(cfg: &VerifyConfig, index: u64) -> PropertyOutcome {
    let mut rng = prop_rng(cfg.seed, index);
    run_cases("reduction-postconditions", cfg.cases, |case| {
        let dim = dim_for_case(case, cfg.n_max);
        let a = gen_weak_antichain(&mut rng, dim, cfg.m_max);
        let reduction = err_str(reduce_to_downset_detailed(&a))?;
        let b = &reduction.result;
        if b.len() != a.len() {
            return fail(format!("size changed {} -> {}", a.len(), b.len()));
        }
        if !is_subset_of_x(b) {
            return fail(format!("result left X_n: {}", brief(b)));
        }
        if !err_str(is_down_set(b))? {
            return fail(format!("result is not a down-set: {}", brief(b)));
        }
        if a.is_empty() {
            return Ok(());
        }
        let before = err_str(gap_report(&a))?;
        let after = err_str(gap_report(b))?;
        for (j, (x, y)) in before
            .projection_sizes
            .iter()
            .zip(&after.projection_sizes)
            .enumerate()
        {
            if y > x {
                return fail(format!(
                    "axis-{} projection grew {x} -> {y} for A={}",
                    j + 1,
                    brief(&a)
                ));
            }
        }
        if after.gap > before.gap {
            return fail(format!("gap grew {} -> {}", before.gap, after.gap));
        }
        let normalized = err_str(normalize_translate(&a))?;
        let weight: i64 = normalized
            .iter()
            .map(|p| p.coords().iter().sum::<i64>())
            .sum();
        let budget = weight as usize + 1;
        if reduction.complete_passes > budget {
            return fail(format!(
                "{} complete passes exceeds the weight bound {budget}",
                reduction.complete_passes
            ));
        }
        Ok(())
    })
}

fn prop_balanced_compression(cfg: &VerifyConfig, index: u64) -> PropertyOutcome {
    let mut rng = prop_rng(cfg.seed, index);
    run_cases("balanced-compression-monotone", cfg.cases, |case| {
        let dim = dim_for_case(case, cfg.n_max);
        let a = gen_down_set(&mut rng, dim, cfg.m_max);
        let axis = rng.random_range(1..=dim);
        let b = err_str(balanced_compress(&a, axis))?;
        if b.len() != a.len() {
            return fail(format!("size changed {} -> {}", a.len(), b.len()));
        }
        if !err_str(is_down_set(&b))? {
            return fail(format!(
                "not a down-set after axis-{axis} compression of {}",
                brief(&a)
            ));
        }
        let s_before = err_str(compute_s(&a))?.len();
        let s_after = err_str(compute_s(&b))?.len();
        if s_after < s_before {
            return fail(format!(
                "|S| dropped {s_before} -> {s_after} for A={}",
                brief(&a)
            ));
        }
        let gap_before = err_str(gap_report(&a))?.gap;
        let gap_after = err_str(gap_report(&b))?.gap;
        if gap_after > gap_before {
            return fail(format!(
                "gap grew {gap_before} -> {gap_after} for A={}",
                brief(&a)
            ));
        }
        Ok(())
    })
}

fn prop_layer_decomposable(cfg: &VerifyConfig, index: u64) -> PropertyOutcome {
    let mut rng = prop_rng(cfg.seed, index);
    run_cases("weak-antichain-layer-decomposable", cfg.cases, |case| {
        let dim = dim_for_case(case, cfg.n_max);
        let a = gen_weak_antichain(&mut rng, dim, cfg.m_max);
        let decomposition = layer_decomposition(&a);
        if !decomposition.is_complete() {
            return fail(format!(
                "remainder {} for A={}",
                brief(&decomposition.remainder),
                brief(&a)
            ));
        }
        Ok(())
    })
}

fn prop_staged_compression(cfg: &VerifyConfig, index: u64) -> PropertyOutcome {
    let mut rng = prop_rng(cfg.seed, index);
    run_cases("staged-compression-preserved", cfg.cases, |case| {
        let dim = dim_for_case(case, cfg.n_max);
        let a = gen_weak_antichain(&mut rng, dim, cfg.m_max);
        if a.is_empty() {
            return Ok(());
        }
        let mut current = err_str(normalize_translate(&a))?;
        for i in 1..=dim {
            current = err_str(i_compress(&current, i))?;
            for k in 1..=i {
                if !err_str(is_i_compressed(&current, k))? {
                    return fail(format!(
                        "stage {i} broke axis-{k} compression for A={}",
                        brief(&a)
                    ));
                }
            }
            if !layer_decomposition(&current).is_complete() {
                return fail(format!(
                    "stage {i} broke layer-decomposability for A={}",
                    brief(&a)
                ));
            }
        }
        Ok(())
    })
}

fn prop_pipeline_structure(cfg: &VerifyConfig, index: u64) -> PropertyOutcome {
    let mut rng = prop_rng(cfg.seed, index);
    run_cases("pipeline-layer-structure", cfg.cases, |case| {
        let dim = dim_for_case(case, cfg.n_max);
        let a = gen_weak_antichain(&mut rng, dim, cfg.m_max);
        if a.is_empty() {
            return Ok(());
        }
        let mut current = err_str(normalize_translate(&a))?;
        for i in 1..=dim {
            current = err_str(i_compress(&current, i))?;
        }
        if !is_subset_of_x(&current) {
            return fail(format!("pipeline output left X_n: {}", brief(&current)));
        }
        let decomposition = layer_decomposition(&current);
        if !decomposition.is_complete() {
            return fail("pipeline output is not layer-decomposable".to_string());
        }
        for (k0, layer) in decomposition.layers.iter().enumerate() {
            let expected = PointSet::from_points(
                dim,
                current
                    .iter()
                    .filter(|p| p.coords()[k0] == 0 && p.coords()[..k0].iter().all(|&c| c != 0))
                    .cloned(),
            )
            .expect("filtering preserves distinctness");
            if layer != &expected {
                return fail(format!(
                    "layer {} is {} but the zero pattern selects {}",
                    k0 + 1,
                    brief(layer),
                    brief(&expected)
                ));
            }
        }
        Ok(())
    })
}

/// Total-order axioms for an arbitrary comparator on X_n points; the suite
/// passes the production comparator, tests pass corrupted ones.
fn order_axioms_with(
    name: &str,
    cmp: &dyn Fn(&Point, &Point) -> Ordering,
    mut rng: ChaCha8Rng,
    cases: u64,
    n_max: usize,
) -> PropertyOutcome {
    run_cases(name, cases, |case| {
        let dim = dim_for_case(case, n_max);
        let x = random_x_point(&mut rng, dim, 4);
        let y = random_x_point(&mut rng, dim, 4);
        let z = random_x_point(&mut rng, dim, 4);
        if cmp(&x, &x) != Ordering::Equal {
            return fail(format!("({x}) does not compare equal to itself"));
        }
        if cmp(&x, &y) == Ordering::Equal && x != y {
            return fail(format!("distinct ({x}) and ({y}) compare equal"));
        }
        if cmp(&x, &y) != cmp(&y, &x).reverse() {
            return fail(format!("({x}) vs ({y}) is not antisymmetric"));
        }
        if cmp(&x, &y) != Ordering::Greater
            && cmp(&y, &z) != Ordering::Greater
            && cmp(&x, &z) == Ordering::Greater
        {
            return fail(format!("({x}) <= ({y}) <= ({z}) but ({x}) > ({z})"));
        }
        Ok(())
    })
}

fn prop_order_extension(cfg: &VerifyConfig, index: u64) -> PropertyOutcome {
    let mut rng = prop_rng(cfg.seed, index);
    run_cases("balanced-order-extension", cfg.cases, |case| {
        let dim = dim_for_case(case, cfg.n_max);
        let x = random_x_point(&mut rng, dim, 4);
        let y = random_x_point(&mut rng, dim, 4);
        let le = x.coords().iter().zip(y.coords()).all(|(a, b)| a <= b);
        if le && x != y && cmp_balanced_unchecked(&x, &y) != Ordering::Less {
            return fail(format!(
                "({x}) is coordinatewise below ({y}) but does not compare less"
            ));
        }
        if x.max_coord() < y.max_coord() && cmp_balanced_unchecked(&x, &y) != Ordering::Less {
            return fail(format!(
                "max ({x}) < max ({y}) but the points do not compare less"
            ));
        }
        Ok(())
    })
}

fn prop_positive_embedding(cfg: &VerifyConfig, index: u64) -> PropertyOutcome {
    let mut rng = prop_rng(cfg.seed, index);
    run_cases("positive-order-axis-independent", cfg.cases, |case| {
        let dim = dim_for_case(case, cfg.n_max) - 1;
        let u = random_point(&mut rng, dim, 1, 5);
        let v = random_point(&mut rng, dim, 1, 5);
        let reference = err_str(compare_positive(&u, &v, 1))?;
        for axis in 2..=dim + 1 {
            let got = err_str(compare_positive(&u, &v, axis))?;
            if got != reference {
                return fail(format!(
                    "({u}) vs ({v}) flips from {reference:?} to {got:?} at axis {axis}"
                ));
            }
        }
        let embedded = cmp_balanced_unchecked(&embed_zero(&u, 1), &embed_zero(&v, 1));
        if embedded != reference {
            return fail(format!(
                "({u}) vs ({v}) disagrees with the zero-embedded comparison"
            ));
        }
        Ok(())
    })
}

/// For every initial segment I of X_2 up to the given size: S(I) is closed
/// downward under the induced positive order.
pub fn check_s_set_order_closed(max_size: usize) -> PropertyOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    let mut cases = 0;
    for m in 0..=max_size {
        cases += 1;
        let segment = match initial_segment(2, m) {
            Ok(s) => s.to_point_set(),
            Err(e) => {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(format!("segment size {m}: {e}"));
                }
                continue;
            }
        };
        let s = match compute_s(&segment) {
            Ok(s) => s,
            Err(e) => {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(format!("S of segment size {m}: {e}"));
                }
                continue;
            }
        };
        let mut bad = None;
        'outer: for v in s.iter() {
            let hi = v.max_coord();
            for a in 1..=hi {
                for b in 1..=hi {
                    let u = Point::new(vec![a, b]).expect("pair");
                    let below =
                        compare_positive(&u, v, 1).expect("strictly positive pairs compare");
                    if below == Ordering::Less && !s.contains(&u) {
                        bad = Some(format!(
                            "segment size {m}: ({u}) precedes ({v}) in S but is missing"
                        ));
                        break 'outer;
                    }
                }
            }
        }
        if let Some(msg) = bad {
            failures += 1;
            if first_failure.is_none() {
                first_failure = Some(msg);
            }
        }
    }
    PropertyOutcome {
        name: "s-set-order-closed".to_string(),
        cases,
        failures,
        first_failure,
    }
}

fn prop_loomis_whitney(cfg: &VerifyConfig, index: u64) -> PropertyOutcome {
    let mut rng = prop_rng(cfg.seed, index);
    run_cases("loomis-whitney-inequality", cfg.cases, |case| {
        let dim = dim_for_case(case, cfg.n_max);
        let s = gen_nonneg_set(&mut rng, dim, cfg.m_max);
        let report = err_str(loomis_whitney_check(&s))?;
        if !report.holds {
            return fail(format!(
                "|S|^(n-1) = {} exceeds the projection product {} for S={}",
                report.lhs,
                report.rhs,
                brief(&s)
            ));
        }
        Ok(())
    })
}

fn prop_normalize_gap(cfg: &VerifyConfig, index: u64) -> PropertyOutcome {
    let mut rng = prop_rng(cfg.seed, index);
    run_cases("normalize-preserves-gap", cfg.cases, |case| {
        let dim = dim_for_case(case, cfg.n_max);
        let size = 1 + (case as usize) % cfg.m_max;
        let mut points = std::collections::BTreeSet::new();
        for _ in 0..size {
            points.insert(random_point(&mut rng, dim, -3, 5));
        }
        let a = PointSet::from_points(dim, points).expect("set iteration is duplicate-free");
        let b = err_str(normalize_translate(&a))?;
        let before = err_str(gap_report(&a))?;
        let after = err_str(gap_report(&b))?;
        if before.size != after.size
            || before.projection_sizes != after.projection_sizes
            || before.gap != after.gap
        {
            return fail(format!(
                "gap report changed under translation for A={}",
                brief(&a)
            ));
        }
        for axis0 in 0..dim {
            let min = b.iter().map(|p| p.coords()[axis0]).min().expect("nonempty");
            if min != 0 {
                return fail(format!(
                    "axis {} minimum is {min} after normalization",
                    axis0 + 1
                ));
            }
        }
        Ok(())
    })
}

/// Every down-set of X_3 fixed by the balanced compression along all axes
/// satisfies the boundary structure: whenever y is in the set, x is not, and
/// x precedes y in the balanced order, x has exactly one zero coordinate;
/// and if x and y also agree on some coordinate, the shared values are zero
/// and y has a second zero coordinate.
pub fn check_fixed_point_structure(m_max: usize) -> PropertyOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    let mut cases = 0;
    let record = |msg: String, failures: &mut u64, first: &mut Option<String>| {
        *failures += 1;
        if first.is_none() {
            *first = Some(msg);
        }
    };
    for m in 1..=m_max {
        let iter = match enumerate_downsets(3, m) {
            Ok(it) => it,
            Err(e) => {
                record(
                    format!("enumeration failed at size {m}: {e}"),
                    &mut failures,
                    &mut first_failure,
                );
                continue;
            }
        };
        for item in iter {
            let a = match item {
                Ok(a) => a,
                Err(e) => {
                    record(
                        format!("enumeration failed at size {m}: {e}"),
                        &mut failures,
                        &mut first_failure,
                    );
                    continue;
                }
            };
            let mut fixed = true;
            for axis in 1..=3 {
                match balanced_compress(&a, axis) {
                    Ok(b) => {
                        if b != a {
                            fixed = false;
                            break;
                        }
                    }
                    Err(e) => {
                        record(
                            format!("compression failed on {}: {e}", brief(&a)),
                            &mut failures,
                            &mut first_failure,
                        );
                        fixed = false;
                        break;
                    }
                }
            }
            if !fixed {
                continue;
            }
            cases += 1;
            if let Some(msg) = fixed_point_violation(&a) {
                record(msg, &mut failures, &mut first_failure);
            }
        }
    }
    PropertyOutcome {
        name: "ccc-fixed-point-structure".to_string(),
        cases,
        failures,
        first_failure,
    }
}

fn fixed_point_violation(a: &PointSet) -> Option<String> {
    let maxima = a.coordinate_maxima()?;
    let hi = maxima.into_iter().max().unwrap_or(0);
    let universe = crate::geometry::x_box_points(3, hi);
    for x in &universe {
        if a.contains(x) {
            continue;
        }
        for y in a.iter() {
            if cmp_balanced_unchecked(x, y) != Ordering::Less {
                continue;
            }
            let x_zeros = x.coords().iter().filter(|&&c| c == 0).count();
            if x_zeros != 1 {
                return Some(format!(
                    "({x}) below ({y}) outside {} has {x_zeros} zero coordinates",
                    brief(a)
                ));
            }
            let shared: Vec<usize> = (0..3).filter(|&k| x.coords()[k] == y.coords()[k]).collect();
            if shared.is_empty() {
                continue;
            }
            if shared.iter().any(|&k| x.coords()[k] != 0) {
                return Some(format!(
                    "({x}) below ({y}) outside {} shares a nonzero coordinate",
                    brief(a)
                ));
            }
            let y_zeros = y.coords().iter().filter(|&&c| c == 0).count();
            if y_zeros < 2 {
                return Some(format!(
                    "({x}) below ({y}) outside {} shares a zero but ({y}) has no second zero",
                    brief(a)
                ));
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Extremal suite

fn extremal_suite(cfg: &VerifyConfig, out: &mut Vec<PropertyOutcome>) {
    out.push(check_segments_match_slabs(cfg.n_max.min(4), 5));
    out.push(check_segments_ccc_fixed(
        cfg.n_max.min(4),
        cfg.m_max.min(50),
    ));
    out.push(check_slab_gap_exact(cfg.n_max.min(5), 6));
    out.push(check_oracle_gap_agreement(cfg));
    out.push(check_oracle_s_agreement(cfg));
    out.push(check_downset_count_closed_form(cfg.m_max.min(8)));
    out.push(check_lower_bound(cfg.n_max.min(4), 2000));
    out.push(check_ratio_trend());
    out.push(check_witness_decomposition(cfg.n_max.min(4)));
}

/// The first N^n - (N-1)^n points of X_n in the balanced order form exactly
/// the slab construction.
pub fn check_segments_match_slabs(n_max: usize, side_max: u64) -> PropertyOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    let mut cases = 0;
    for dim in 2..=n_max.max(2) {
        for side in 1..=side_max {
            cases += 1;
            let result = (|| -> std::result::Result<(), String> {
                let m = err_str(slab_size(dim, side))? as usize;
                let slab = err_str(construct_a_n(dim, side))?;
                let segment = err_str(initial_segment(dim, m))?.to_point_set();
                if segment != slab {
                    return fail(format!(
                        "n={dim} N={side}: segment of size {m} is not the slab"
                    ));
                }
                Ok(())
            })();
            if let Err(msg) = result {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(msg);
                }
            }
        }
    }
    PropertyOutcome {
        name: "segments-match-slabs".to_string(),
        cases,
        failures,
        first_failure,
    }
}

/// Initial segments are fixed points of the balanced compression on every
/// axis.
pub fn check_segments_ccc_fixed(n_max: usize, m_max: usize) -> PropertyOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    let mut cases = 0;
    for dim in 2..=n_max.max(2) {
        for m in 0..=m_max {
            cases += 1;
            let result = (|| -> std::result::Result<(), String> {
                let segment = err_str(initial_segment(dim, m))?.to_point_set();
                for axis in 1..=dim {
                    let compressed = err_str(balanced_compress(&segment, axis))?;
                    if compressed != segment {
                        return fail(format!(
                            "n={dim} m={m}: segment moved under axis-{axis} compression"
                        ));
                    }
                }
                Ok(())
            })();
            if let Err(msg) = result {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(msg);
                }
            }
        }
    }
    PropertyOutcome {
        name: "segments-ccc-fixed".to_string(),
        cases,
        failures,
        first_failure,
    }
}

fn check_slab_gap_exact(n_max: usize, side_max: u64) -> PropertyOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    let mut cases = 0;
    for dim in 2..=n_max.max(2) {
        for side in 1..=side_max {
            cases += 1;
            let result = (|| -> std::result::Result<(), String> {
                let m = err_str(slab_size(dim, side))? as usize;
                let expected = err_str(slab_gap_formula(dim, side))?;
                let cert = err_str(g_exact(dim, m))?;
                if cert.value != expected {
                    return fail(format!(
                        "n={dim} N={side}: exact gap {} differs from the closed form {expected}",
                        cert.value
                    ));
                }
                Ok(())
            })();
            if let Err(msg) = result {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(msg);
                }
            }
        }
    }
    PropertyOutcome {
        name: "slab-gap-closed-form".to_string(),
        cases,
        failures,
        first_failure,
    }
}

fn check_oracle_gap_agreement(cfg: &VerifyConfig) -> PropertyOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    let mut cases = 0;
    let opts = SearchOptions {
        worker_count: cfg.workers,
        ..SearchOptions::default()
    };
    let ranges: [(usize, usize); 3] = [(2, 10), (3, 12), (4, 9)];
    for (dim, cap) in ranges {
        if dim > cfg.n_max {
            continue;
        }
        for m in 0..=cap.min(cfg.m_max) {
            cases += 1;
            let result = (|| -> std::result::Result<(), String> {
                let brute = err_str(min_gap_bruteforce(dim, m, &opts))?;
                let exact = err_str(g_exact(dim, m))?;
                if brute.value != exact.value {
                    return fail(format!(
                        "n={dim} m={m}: exhaustive search found {} but the segment gives {}",
                        brute.value, exact.value
                    ));
                }
                Ok(())
            })();
            if let Err(msg) = result {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(msg);
                }
            }
        }
    }
    PropertyOutcome {
        name: "search-matches-segments-gap".to_string(),
        cases,
        failures,
        first_failure,
    }
}

fn check_oracle_s_agreement(cfg: &VerifyConfig) -> PropertyOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    let mut cases = 0;
    let opts = SearchOptions {
        worker_count: cfg.workers,
        ..SearchOptions::default()
    };
    for dim in [2usize, 3] {
        if dim > cfg.n_max {
            continue;
        }
        for m in 0..=10usize.min(cfg.m_max) {
            cases += 1;
            let result = (|| -> std::result::Result<(), String> {
                let brute = err_str(max_s_bruteforce(dim, m, &opts))?;
                let segment = err_str(initial_segment(dim, m))?.to_point_set();
                let s = err_str(compute_s(&segment))?;
                if brute.value != s.len() as i64 {
                    return fail(format!(
                        "n={dim} m={m}: exhaustive search found |S| = {} but the segment gives {}",
                        brute.value,
                        s.len()
                    ));
                }
                Ok(())
            })();
            if let Err(msg) = result {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(msg);
                }
            }
        }
    }
    PropertyOutcome {
        name: "search-matches-segments-s".to_string(),
        cases,
        failures,
        first_failure,
    }
}

/// Down-sets of X_2 of size m are exactly the hook shapes with arm lengths
/// (s, t), s + t - 1 = m, so there are m of them (one empty set at m = 0).
fn check_downset_count_closed_form(m_max: usize) -> PropertyOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    let mut cases = 0;
    for m in 0..=m_max {
        cases += 1;
        let expected = if m == 0 { 1 } else { m };
        let result = (|| -> std::result::Result<(), String> {
            let mut count = 0usize;
            for item in err_str(enumerate_downsets(2, m))? {
                err_str(item)?;
                count += 1;
            }
            if count != expected {
                return fail(format!(
                    "m={m}: counted {count} down-sets, expected {expected}"
                ));
            }
            Ok(())
        })();
        if let Err(msg) = result {
            failures += 1;
            if first_failure.is_none() {
                first_failure = Some(msg);
            }
        }
    }
    PropertyOutcome {
        name: "downset-count-closed-form".to_string(),
        cases,
        failures,
        first_failure,
    }
}

fn check_lower_bound(n_max: usize, m_max: usize) -> PropertyOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    let mut cases = 0;
    for dim in [3usize, 4] {
        if dim > n_max {
            continue;
        }
        let (profile, c) = match (segment_gap_profile(dim, m_max), c_const(dim)) {
            (Ok(p), Ok(c)) => (p, c),
            (Err(e), _) | (_, Err(e)) => {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(format!("n={dim}: {e}"));
                }
                continue;
            }
        };
        let exponent = 1.0 - 1.0 / (dim as f64 - 1.0);
        for (m, &gap) in profile.iter().enumerate() {
            cases += 1;
            let bound = if m == 0 {
                0.0
            } else {
                c * (m as f64).powf(exponent)
            };
            if (gap as f64) < bound - 1e-9 {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(format!(
                        "n={dim} m={m}: exact gap {gap} is below the bound {bound:.6}"
                    ));
                }
            }
        }
    }
    PropertyOutcome {
        name: "lower-bound-holds".to_string(),
        cases,
        failures,
        first_failure,
    }
}

fn check_ratio_trend() -> PropertyOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    let mut cases = 0;
    let result = (|| -> std::result::Result<(), String> {
        let mut ratios = Vec::new();
        for side in [5u64, 10, 20] {
            let m = err_str(slab_size(3, side))? as usize;
            let eval = err_str(evaluate_bound(3, m))?;
            let ratio = eval
                .ratio
                .ok_or_else(|| format!("m={m}: ratio undefined"))?;
            ratios.push(ratio);
        }
        if !(ratios[0] > ratios[1] && ratios[1] > ratios[2]) {
            return fail(format!(
                "ratios {ratios:?} at slab sizes 5, 10, 20 are not decreasing"
            ));
        }
        if ratios[2] > 1.05 {
            return fail(format!(
                "ratio {} at the largest slab exceeds 1.05",
                ratios[2]
            ));
        }
        Ok(())
    })();
    cases += 1;
    if let Err(msg) = result {
        failures += 1;
        first_failure = Some(msg);
    }
    PropertyOutcome {
        name: "bound-ratio-trend".to_string(),
        cases,
        failures,
        first_failure,
    }
}

fn check_witness_decomposition(n_max: usize) -> PropertyOutcome {
    let mut failures = 0;
    let mut first_failure = None;
    let mut cases = 0;
    for dim in [3usize, 4] {
        if dim > n_max {
            continue;
        }
        let (lo, hi) = if dim == 3 { (8, 30) } else { (16, 40) };
        for m in lo..=hi {
            cases += 1;
            let result = witness_decomposition_case(dim, m);
            if let Err(msg) = result {
                failures += 1;
                if first_failure.is_none() {
                    first_failure = Some(format!("n={dim} m={m}: {msg}"));
                }
            }
        }
    }
    PropertyOutcome {
        name: "witness-gap-decomposition".to_string(),
        cases,
        failures,
        first_failure,
    }
}

fn witness_decomposition_case(dim: usize, m: usize) -> std::result::Result<(), String> {
    let cert = err_str(witness_construction(dim, m))?;
    if cert.witness.len() != m {
        return fail(format!(
            "witness has {} points, wanted {m}",
            cert.witness.len()
        ));
    }
    if !err_str(crate::geometry::is_weak_antichain(&cert.witness))? {
        return fail("witness is not a weak antichain".to_string());
    }
    let report = err_str(gap_report(&cert.witness))?;
    if report.gap != cert.value {
        return fail(format!(
            "certificate value {} differs from the witness gap {}",
            cert.value, report.gap
        ));
    }
    let mut side = 1u64;
    while err_str(slab_size(dim, side + 1))? as usize <= m {
        side += 1;
    }
    let slab = err_str(construct_a_n(dim, side))?;
    let block = PointSet::from_points(
        dim,
        cert.witness.iter().filter(|p| !slab.contains(p)).cloned(),
    )
    .map_err(|e| format!("block extraction failed: {e}"))?;
    for p in block.iter() {
        if p.coords()[0] != 0 {
            return fail(format!(
                "block point ({p}) does not lie on the first axis slice"
            ));
        }
    }
    // The block sits at first coordinate zero with the other coordinates at
    // least the slab side, so its projections are disjoint from the slab's
    // on every axis and the gap splits additively.
    let block_gap = if block.is_empty() {
        0
    } else {
        err_str(gap_report(&block))?.gap
    };
    let slab_gap = err_str(slab_gap_formula(dim, side))?;
    if cert.value != slab_gap + block_gap {
        return fail(format!(
            "gap {} does not split into slab {slab_gap} plus block {block_gap}",
            cert.value
        ));
    }
    Ok(())
}
