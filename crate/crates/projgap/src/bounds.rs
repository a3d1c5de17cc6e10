//! Exact minimum gaps via initial segments, the asymptotic constant and
//! lower bound, near-extremal witness constructions, and table generation.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{construct_a_n, gap_report, x_box_size, Point, PointSet};
use crate::order::segment_points;

/// How a certificate's value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Theorem-backed: the witness is the extremal initial segment.
    InitialSegment,
    /// Certified by exhaustive search.
    BruteForce,
    /// Explicit near-extremal construction; an upper bound, not a minimum.
    WitnessConstruction,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::InitialSegment => "initial-segment",
            Method::BruteForce => "brute-force",
            Method::WitnessConstruction => "witness-construction",
        };
        f.write_str(s)
    }
}

/// Which functional the certificate's value measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Gap,
    SSize,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Gap => "gap",
            Quantity::SSize => "s-size",
        })
    }
}

/// An extremal value together with the witness set attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalCertificate {
    pub dim: usize,
    pub size: usize,
    pub value: i64,
    pub witness: PointSet,
    pub method: Method,
    pub quantity: Quantity,
    /// Some(true) for searches that provably covered the whole space,
    /// Some(false) for box-restricted spot checks, None when the value rests
    /// on a theorem rather than a search.
    pub exhaustive: Option<bool>,
}

/// The constant c_n = (n-1) n^{1/(n-1)} / 2 governing the asymptotic
/// minimum gap c_n m^{1-1/(n-1)}.
pub fn c_const(dim: usize) -> Result<f64> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { got: dim, min: 2 });
    }
    let n = dim as f64;
    Ok(0.5 * (n - 1.0) * n.powf(1.0 / (n - 1.0)))
}

/// The minimum gap over weak antichains of size m in Z^n, realized by the
/// initial segment of the balanced order.
pub fn g_exact(dim: usize, m: usize) -> Result<ExtremalCertificate> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { got: dim, min: 2 });
    }
    let witness =
        PointSet::from_points(dim, segment_points(dim, m)?).expect("segment points are distinct");
    let value = gap_report(&witness)?.gap;
    Ok(ExtremalCertificate {
        dim,
        size: m,
        value,
        witness,
        method: Method::InitialSegment,
        quantity: Quantity::Gap,
        exhaustive: None,
    })
}

/// One row comparing the exact minimum gap against the analytic lower bound.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundEvaluation {
    pub dim: usize,
    pub size: usize,
    pub c_n: f64,
    pub bound: f64,
    pub exact: i64,
    /// exact / bound; absent at m = 0 where the bound is 0.
    pub ratio: Option<f64>,
}

fn bound_value(c_n: f64, dim: usize, m: usize) -> f64 {
    if m == 0 {
        // m^{1-1/(n-1)} is 0^0 at n = 2; define the bound as 0 to match
        // the exact value g(n, 0) = 0.
        return 0.0;
    }
    let exponent = 1.0 - 1.0 / (dim as f64 - 1.0);
    c_n * (m as f64).powf(exponent)
}

fn assemble_evaluation(dim: usize, m: usize, exact: i64) -> Result<BoundEvaluation> {
    let c_n = c_const(dim)?;
    let bound = bound_value(c_n, dim, m);
    let ratio = if m == 0 {
        None
    } else {
        Some(exact as f64 / bound)
    };
    Ok(BoundEvaluation {
        dim,
        size: m,
        c_n,
        bound,
        exact,
        ratio,
    })
}

/// Evaluates the analytic bound c_n m^{1-1/(n-1)} next to the exact value.
pub fn evaluate_bound(dim: usize, m: usize) -> Result<BoundEvaluation> {
    assemble_evaluation(dim, m, g_exact(dim, m)?.value)
}

/// Gaps of all initial segments of size 0..=m_max in one incremental sweep:
/// entry m is the gap of the size-m segment. Equivalent to calling
/// [`g_exact`] for each size, but one enumeration serves every prefix.
pub fn segment_gap_profile(dim: usize, m_max: usize) -> Result<Vec<i64>> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { got: dim, min: 2 });
    }
    let points = segment_points(dim, m_max)?;
    let mut images: Vec<HashSet<Vec<i64>>> = vec![HashSet::new(); dim];
    let mut profile = Vec::with_capacity(m_max + 1);
    profile.push(0);
    let mut total_projections: i64 = 0;
    for (idx, p) in points.iter().enumerate() {
        for (axis0, image) in images.iter_mut().enumerate() {
            let mut key = p.coords().to_vec();
            key.remove(axis0);
            if image.insert(key) {
                total_projections += 1;
            }
        }
        profile.push(total_projections - (idx as i64 + 1));
    }
    Ok(profile)
}

/// One [`BoundEvaluation`] row per size in m_from..=m_to.
pub fn gap_table(dim: usize, m_from: usize, m_to: usize) -> Result<Vec<BoundEvaluation>> {
    if m_from > m_to {
        return Err(Error::InvalidArgument(format!(
            "empty size range {m_from}..{m_to}"
        )));
    }
    let profile = segment_gap_profile(dim, m_to)?;
    (m_from..=m_to)
        .map(|m| assemble_evaluation(dim, m, profile[m]))
        .collect()
}

/// |A_N| = N^n - (N-1)^n as a checked integer.
pub fn slab_size(dim: usize, side: u64) -> Result<u64> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { got: dim, min: 2 });
    }
    if side == 0 {
        return Err(Error::InvalidArgument("side must be at least 1".into()));
    }
    u64::try_from(x_box_size(dim, side)?).map_err(|_| Error::Overflow("slab size"))
}

/// gap(A_N) in closed form: n N^{n-1} - N^n + (N-1)^n.
pub fn slab_gap_formula(dim: usize, side: u64) -> Result<i64> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall { got: dim, min: 2 });
    }
    if side == 0 {
        return Err(Error::InvalidArgument("side must be at least 1".into()));
    }
    let d = u32::try_from(dim).map_err(|_| Error::Overflow("slab gap"))?;
    let n = side as i128;
    let value = (dim as i128)
        .checked_mul(n.checked_pow(d - 1).ok_or(Error::Overflow("slab gap"))?)
        .ok_or(Error::Overflow("slab gap"))?
        - n.checked_pow(d).ok_or(Error::Overflow("slab gap"))?
        + (n - 1).checked_pow(d).ok_or(Error::Overflow("slab gap"))?;
    i64::try_from(value).map_err(|_| Error::Overflow("slab gap"))
}

fn integer_root(value: u64, degree: u32) -> u64 {
    // Largest t with t^degree <= value; float estimate corrected exactly.
    debug_assert!(degree >= 1);
    let mut t = (value as f64).powf(1.0 / degree as f64).floor() as u64;
    while t
        .saturating_add(1)
        .checked_pow(degree)
        .is_some_and(|p| p <= value)
    {
        t += 1;
    }
    while t > 0 && t.checked_pow(degree).is_none_or(|p| p > value) {
        t -= 1;
    }
    t
}

/// A weak antichain of size m whose gap is close to the minimum: the slab
/// A_N for the largest N with |A_N| <= m, topped up with a block of
/// m - |A_N| points at coordinate heights N.. in the hyperplane x_1 = 0.
/// The block's projections avoid the slab's in every axis (this needs
/// n >= 3), so the gap splits as gap(A_N) + gap(B).
pub fn witness_construction(dim: usize, m: usize) -> Result<ExtremalCertificate> {
    if dim < 3 {
        return Err(Error::DimensionTooSmall { got: dim, min: 3 });
    }
    if m == 0 {
        return Err(Error::InvalidArgument(
            "witness construction needs a positive size".into(),
        ));
    }
    // Largest side with slab size <= m.
    let mut side: u64 = 1;
    while x_box_size(dim, side + 1)? <= m as u128 {
        side += 1;
    }
    let slab_points = slab_size(dim, side)? as usize;
    let slab = construct_a_n(dim, side)?;
    let extra = m - slab_points;

    let next_gap = x_box_size(dim, side + 1)? - slab_points as u128;
    let next_gap = u64::try_from(next_gap).map_err(|_| Error::Overflow("layer count"))?;
    let edge = integer_root(next_gap, dim as u32 - 1);
    let capacity = (edge + 1).checked_pow(dim as u32 - 1);
    assert!(
        capacity.is_some_and(|c| c as usize >= extra),
        "block box side {edge} cannot hold {extra} points"
    );

    // First `extra` points of {0} x [side, side+edge]^{n-1}, ascending
    // lexicographically.
    let lo = side as i64;
    let hi = (side + edge) as i64;
    let mut block = Vec::with_capacity(extra);
    let mut cur = vec![lo; dim - 1];
    while block.len() < extra {
        let mut coords = Vec::with_capacity(dim);
        coords.push(0);
        coords.extend_from_slice(&cur);
        block.push(Point::new(coords).expect("block point"));
        let mut k = dim - 1;
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            if cur[k] < hi {
                cur[k] += 1;
                break;
            }
            cur[k] = lo;
        }
    }

    let witness = PointSet::from_points(dim, slab.iter().cloned().chain(block))
        .expect("block coordinates exceed slab coordinates");
    debug_assert_eq!(witness.len(), m);
    let value = gap_report(&witness)?.gap;
    Ok(ExtremalCertificate {
        dim,
        size: m,
        value,
        witness,
        method: Method::WitnessConstruction,
        quantity: Quantity::Gap,
        exhaustive: None,
    })
}
