//! Discrete metric laboratories: uniform interval partitions, discretized
//! circles, weighted-graph metrics, and the composition-law checker.
//!
//! Two band conventions coexist here and are deliberately kept apart:
//! thresholding *point* distances `d < eps` gives the band
//! `N = max{m : m/p < eps}`, while requiring whole half-open *cells*
//! `U_k = [k/p, (k+1)/p)` to fit inside the relation gives
//! `N = max{m : (m+1)/p <= eps}` — exactly one less whenever `eps·p` is not
//! an integer. Conflating the two silently shifts the band width by one, so
//! both are exposed under explicit names.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::band_relation_raw;
use crate::relation::{FiniteMetric, Relation};

/// Threshold value admitting exact comparison against grid fractions
/// `k / p`.
///
/// Strict inequalities at `d = eps` are semantically load-bearing, so
/// comparisons must not depend on floating-point rounding at integer
/// boundaries. A finite double is itself a rational `mantissa · 2^exp` and
/// is compared exactly; a decimal string like `"0.2"` is kept as the exact
/// rational `2/10` rather than its nearest double.
#[derive(Clone, Debug, PartialEq)]
pub enum Eps {
    Float(f64),
    /// `units / 10^scale`, parsed from a decimal string.
    Decimal {
        units: u128,
        scale: u32,
    },
}

impl Eps {
    /// Parse a plain decimal string: optional integer part, optional
    /// fraction, no exponent. At most 18 fractional digits.
    pub fn parse_decimal(s: &str) -> Result<Eps> {
        let s = s.trim();
        let bad = |msg: &str| Error::parse(format!("eps value {s:?}"), msg);
        let (int_part, frac_part) = match s.split_once('.') {
            Some((a, b)) => (a, b),
            None => (s, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad("empty decimal"));
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(bad("expected digits and at most one decimal point"));
        }
        if frac_part.len() > 18 {
            return Err(bad("more than 18 fractional digits"));
        }
        let mut units: u128 = 0;
        for c in int_part.chars().chain(frac_part.chars()) {
            units = units
                .checked_mul(10)
                .and_then(|u| u.checked_add((c as u8 - b'0') as u128))
                .ok_or_else(|| bad("value too large"))?;
        }
        Ok(Eps::Decimal {
            units,
            scale: frac_part.len() as u32,
        })
    }

    /// Nearest double, for display and for building ε-relations from
    /// decimal thresholds.
    pub fn approx(&self) -> f64 {
        match *self {
            Eps::Float(x) => x,
            Eps::Decimal { units, scale } => units as f64 / 10f64.powi(scale as i32),
        }
    }

    pub fn is_positive(&self) -> bool {
        match *self {
            Eps::Float(x) => x > 0.0,
            Eps::Decimal { units, .. } => units > 0,
        }
    }

    /// Exact test `self >= num / den`.
    pub fn ge_ratio(&self, num: u64, den: u64) -> bool {
        assert!(den > 0);
        match *self {
            Eps::Float(x) => float_ge_ratio(x, num, den),
            Eps::Decimal { units, scale } => {
                // units / 10^scale >= num / den  ⟺  units · den >= num · 10^scale
                let lhs = units.checked_mul(den as u128);
                let rhs = (num as u128).checked_mul(10u128.pow(scale));
                match (lhs, rhs) {
                    (Some(l), Some(r)) => l >= r,
                    // overflow only for astronomically large operands;
                    // fall back to the double approximation
                    _ => self.approx() >= num as f64 / den as f64,
                }
            }
        }
    }

    /// Exact test `self > num / den`.
    pub fn gt_ratio(&self, num: u64, den: u64) -> bool {
        self.ge_ratio(num, den) && !ratio_eq(self, num, den)
    }
}

fn ratio_eq(eps: &Eps, num: u64, den: u64) -> bool {
    match *eps {
        Eps::Float(x) => float_ge_ratio(x, num, den) && float_le_ratio(x, num, den),
        Eps::Decimal { units, scale } => {
            match (
                units.checked_mul(den as u128),
                (num as u128).checked_mul(10u128.pow(scale)),
            ) {
                (Some(l), Some(r)) => l == r,
                _ => false,
            }
        }
    }
}

/// Decompose a finite positive double into `mantissa · 2^exp`.
fn decompose(x: f64) -> (u64, i32) {
    assert!(x.is_finite() && x > 0.0);
    let bits = x.to_bits();
    let raw_exp = ((bits >> 52) & 0x7ff) as i32;
    let frac = bits & ((1u64 << 52) - 1);
    if raw_exp == 0 {
        (frac, -1074) // subnormal
    } else {
        (frac | 1 << 52, raw_exp - 1075)
    }
}

/// Exact `x >= num / den` for a double `x`, via
/// `mant · den · 2^exp >= num` in extended integers. `None` from a checked
/// multiply means the corresponding side exceeds `u128`, which settles the
/// comparison since the other side is known to fit.
fn float_ge_ratio(x: f64, num: u64, den: u64) -> bool {
    if x <= 0.0 {
        return num == 0;
    }
    if num == 0 {
        return true;
    }
    let (mant, exp) = decompose(x);
    if exp >= 0 {
        if exp >= 64 {
            return true;
        }
        (mant as u128)
            .checked_mul(den as u128)
            .and_then(|v| v.checked_mul(1u128 << exp))
            .is_none_or(|lhs| lhs >= num as u128)
    } else {
        // mant·den < 2^117, so once the shift reaches 117 the right side wins
        let shift = (-exp) as u32;
        if shift >= 117 {
            return false;
        }
        match (num as u128).checked_mul(1u128 << shift) {
            Some(rhs) => (mant as u128) * (den as u128) >= rhs,
            None => false,
        }
    }
}

/// Exact `x <= num / den` for a double `x`.
fn float_le_ratio(x: f64, num: u64, den: u64) -> bool {
    if x <= 0.0 {
        return true;
    }
    if num == 0 {
        return false;
    }
    let (mant, exp) = decompose(x);
    if exp >= 0 {
        if exp >= 64 {
            return false;
        }
        (mant as u128)
            .checked_mul(den as u128)
            .and_then(|v| v.checked_mul(1u128 << exp))
            .is_some_and(|lhs| lhs <= num as u128)
    } else {
        let shift = (-exp) as u32;
        if shift >= 117 {
            return true;
        }
        match (num as u128).checked_mul(1u128 << shift) {
            Some(rhs) => (mant as u128) * (den as u128) <= rhs,
            None => true,
        }
    }
}

/// Uniform partition of `[0, 1)` into `p` half-open cells
/// `U_k = [k/p, (k+1)/p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPartition {
    p: usize,
}

impl IntervalPartition {
    pub fn new(p: usize) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidParameter(
                "partition needs p >= 1 cells".into(),
            ));
        }
        Ok(IntervalPartition { p })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Bounds `[k/p, (k+1)/p)` of cell `k`.
    pub fn cell(&self, k: usize) -> (f64, f64) {
        assert!(k < self.p);
        (k as f64 / self.p as f64, (k + 1) as f64 / self.p as f64)
    }
}

/// The relation on partition cells: `U_k × U_l` is included exactly when
/// the whole rectangle sits inside the ε-relation, i.e. when the
/// (non-attained) sup distance `(|k-l| + 1)/p` is at most `eps`. Returns
/// the relation and its band width `N = max{m : (m+1)/p <= eps}`.
///
/// Requires `eps > 1/p`, so that every diagonal cell satisfies
/// `U_k × U_k ⊆ R_eps`.
pub fn partition_relation(p: usize, eps: &Eps) -> Result<(Relation, usize)> {
    if p == 0 {
        return Err(Error::InvalidParameter(
            "partition needs p >= 1 cells".into(),
        ));
    }
    if !eps.gt_ratio(1, p as u64) {
        return Err(Error::InvalidParameter(format!(
            "eps = {} must exceed the cell width 1/{p}",
            eps.approx()
        )));
    }
    // Largest m in [0, p-1] with (m + 1)/p <= eps; the predicate is
    // monotone, so binary search with exact comparisons.
    let mut lo = 0usize; // invariant: predicate holds at lo
    let mut hi = p - 1;
    debug_assert!(eps.ge_ratio(1, p as u64));
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if eps.ge_ratio(mid as u64 + 1, p as u64) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let band = lo;
    Ok((band_relation_raw(p, band), band))
}

/// Convenience wrapper for a double threshold (compared exactly as the
/// rational the double denotes).
pub fn partition_relation_f64(p: usize, eps: f64) -> Result<(Relation, usize)> {
    partition_relation(p, &Eps::Float(eps))
}

/// Point-distance band of the discretized circle: `max{m : m/p < eps}`,
/// the circulant band width of `circle_metric(p).epsilon_relation(eps)`.
///
/// A float threshold uses the same rounded-double comparison as
/// [`FiniteMetric::epsilon_relation`]; a decimal threshold is compared as
/// an exact rational.
pub fn circle_point_band(p: usize, eps: &Eps) -> usize {
    let below = |m: usize| match *eps {
        Eps::Float(x) => (m as f64 / p as f64) < x,
        Eps::Decimal { .. } => eps.gt_ratio(m as u64, p as u64),
    };
    // monotone predicate m/p < eps on m in [0, floor(p/2)]
    let mut lo = 0usize;
    let mut hi = p / 2;
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if below(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// Point-distance band on the interval grid `{0, 1/p, ..., (p-1)/p}`:
/// `max{m : m/p < eps}` capped at `p - 1`. One more than the cell band of
/// [`partition_relation`] away from integer boundaries of `eps·p`.
pub fn interval_point_band(p: usize, eps: &Eps) -> usize {
    let below = |m: usize| match *eps {
        Eps::Float(x) => (m as f64 / p as f64) < x,
        Eps::Decimal { .. } => eps.gt_ratio(m as u64, p as u64),
    };
    let mut lo = 0usize;
    let mut hi = p - 1;
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        if below(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// All-pairs shortest-path metric of a connected weighted graph.
pub fn graph_metric(n: usize, weighted_edges: &[(usize, usize, f64)]) -> Result<FiniteMetric> {
    if n == 0 {
        return Err(Error::InvalidParameter("empty point set".into()));
    }
    let mut adjacency: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for (k, &(i, j, len)) in weighted_edges.iter().enumerate() {
        if i >= n || j >= n {
            return Err(Error::Parse {
                location: format!("edges[{k}]"),
                message: format!("endpoint out of range for n = {n}"),
            });
        }
        if i == j {
            return Err(Error::Parse {
                location: format!("edges[{k}]"),
                message: "self-loop edges are not allowed".into(),
            });
        }
        if !len.is_finite() || len <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "edges[{k}]: edge length must be positive and finite, got {len}"
            )));
        }
        adjacency[i].push((j, len));
        adjacency[j].push((i, len));
    }
    let mut dist = vec![f64::INFINITY; n * n];
    for source in 0..n {
        // Dijkstra without a heap; n stays desk-scale.
        let d = &mut dist[source * n..(source + 1) * n];
        d[source] = 0.0;
        let mut done = vec![false; n];
        for _ in 0..n {
            let mut best = None;
            for x in 0..n {
                if !done[x] && d[x].is_finite() && best.is_none_or(|b: usize| d[x] < d[b]) {
                    best = Some(x);
                }
            }
            let Some(x) = best else { break };
            done[x] = true;
            for &(y, len) in &adjacency[x] {
                if d[x] + len < d[y] {
                    d[y] = d[x] + len;
                }
            }
        }
        if d.iter().any(|v| !v.is_finite()) {
            return Err(Error::Disconnected(
                "graph metric requires a connected graph".into(),
            ));
        }
    }
    // Symmetrize: per-source Dijkstra can disagree across sources by
    // rounding in summation order; take the smaller value.
    for i in 0..n {
        for j in i + 1..n {
            let d = dist[i * n + j].min(dist[j * n + i]);
            dist[i * n + j] = d;
            dist[j * n + i] = d;
        }
    }
    Ok(FiniteMetric::from_parts_unchecked(n, dist))
}

/// Arc-length metric of `p` equally spaced points on a circle of
/// circumference 1: `dist(i, j) = min(|i-j|, p-|i-j|)/p`. The diameter is
/// `floor(p/2)/p`.
pub fn circle_metric(p: usize) -> Result<FiniteMetric> {
    if p < 3 {
        return Err(Error::InvalidParameter(format!(
            "circle discretization needs p >= 3, got {p}"
        )));
    }
    let mut dist = vec![0.0; p * p];
    for i in 0..p {
        for j in 0..p {
            let d = i.abs_diff(j);
            dist[i * p + j] = d.min(p - d) as f64 / p as f64;
        }
    }
    Ok(FiniteMetric::from_parts_unchecked(p, dist))
}

/// Result of comparing `R_eps1 * R_eps2` against `R_{eps1+eps2}`.
#[derive(Clone, Debug, Serialize)]
pub struct CompositionCheck {
    /// Equality of the two relations.
    pub holds: bool,
    /// Pairs in `R_{eps1+eps2}` with no eps-midpoint; nonempty exactly when
    /// the finite metric fails the path-metric midpoint property at this
    /// scale.
    pub missing_pairs: Vec<(usize, usize)>,
    /// Pairs in the composition that exceed `R_{eps1+eps2}`; always empty
    /// for a valid metric (the inclusion direction of the composition law).
    pub extra_pairs: Vec<(usize, usize)>,
}

/// Compare the symmetrized composition of two ε-relations with the
/// ε-sum relation.
pub fn composition_law_check(m: &FiniteMetric, eps1: f64, eps2: f64) -> CompositionCheck {
    assert!(eps1 > 0.0 && eps2 > 0.0, "thresholds must be positive");
    let r1 = m.epsilon_relation(eps1);
    let r2 = m.epsilon_relation(eps2);
    let composed = r1.symmetrized_compose(&r2).unwrap();
    let target = m.epsilon_relation(eps1 + eps2);
    let missing_pairs: Vec<(usize, usize)> = target
        .adj()
        .pairs_not_in(composed.adj())
        .into_iter()
        .filter(|&(i, j)| i < j)
        .collect();
    let extra_pairs: Vec<(usize, usize)> = composed
        .adj()
        .pairs_not_in(target.adj())
        .into_iter()
        .filter(|&(i, j)| i < j)
        .collect();
    CompositionCheck {
        holds: missing_pairs.is_empty() && extra_pairs.is_empty(),
        missing_pairs,
        extra_pairs,
    }
}
