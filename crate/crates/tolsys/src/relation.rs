//! Tolerance relations on finite point sets and the finite metrics that
//! induce them.
//!
//! A [`Relation`] is a reflexive symmetric boolean adjacency structure on
//! `n` points, stored as a dense bit matrix. Composition follows the set
//! convention `(x, y) ∈ R1 ∘ R2 ⟺ ∃z: (x, z) ∈ R1 ∧ (z, y) ∈ R2`; the raw
//! composition of two symmetric relations need not be symmetric, so it is
//! returned as a plain [`BoolMatrix`] and only the symmetrized composition
//! `R1 ∘ R2 ∪ R2 ∘ R1` is a `Relation` again.

use crate::error::{Error, Result};

/// Dense square boolean matrix, bit-packed by rows.
///
/// This is the raw carrier for relations and their (possibly asymmetric)
/// compositions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoolMatrix {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BoolMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n > 0, "empty point set");
        let words_per_row = n.div_ceil(64);
        BoolMatrix {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BoolMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        let word = self.bits[i * self.words_per_row + j / 64];
        word >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        debug_assert!(i < self.n && j < self.n);
        let idx = i * self.words_per_row + j / 64;
        let mask = 1u64 << (j % 64);
        if value {
            self.bits[idx] |= mask;
        } else {
            self.bits[idx] &= !mask;
        }
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    /// OR the row `src` of `other` into row `dst` of `self`.
    fn or_row_from(&mut self, dst: usize, other: &BoolMatrix, src: usize) {
        let (d, s) = (dst * self.words_per_row, src * other.words_per_row);
        for w in 0..self.words_per_row {
            self.bits[d + w] |= other.bits[s + w];
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i))
    }

    /// Entrywise `self ≤ other`.
    pub fn le(&self, other: &BoolMatrix) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Boolean matrix product: `result[i][j] = ∃z: self[i][z] ∧ other[z][j]`.
    pub fn product(&self, other: &BoolMatrix) -> Result<BoolMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut out = BoolMatrix::zeros(self.n);
        for i in 0..self.n {
            let row = self.row(i);
            for (w, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let z = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    out.or_row_from(i, other, z);
                }
            }
        }
        Ok(out)
    }

    /// Index pairs `(i, j)` where `self` is true and `other` is false.
    pub fn pairs_not_in(&self, other: &BoolMatrix) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(i, j) && !other.get(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BoolMatrix {}x{}:", self.n, self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Reflexive symmetric boolean relation on `n` points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    adj: BoolMatrix,
}

impl Relation {
    /// The diagonal relation (every point related only to itself).
    pub fn identity(n: usize) -> Self {
        Relation {
            adj: BoolMatrix::identity(n),
        }
    }

    /// The full relation `X × X`.
    pub fn full(n: usize) -> Self {
        let mut adj = BoolMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                adj.set(i, j, true);
            }
        }
        Relation { adj }
    }

    /// Build from a list of unordered off-diagonal pairs; loops are implicit.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = BoolMatrix::identity(n);
        for &(i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({i}, {j}) out of range for n = {n}"
                )));
            }
            adj.set(i, j, true);
            adj.set(j, i, true);
        }
        Ok(Relation { adj })
    }

    /// Wrap an adjacency matrix, validating reflexivity and symmetry.
    pub fn from_adjacency(adj: BoolMatrix) -> Result<Self> {
        if !adj.is_reflexive() {
            return Err(Error::InvariantViolation(
                "adjacency is not reflexive".into(),
            ));
        }
        if !adj.is_symmetric() {
            return Err(Error::InvariantViolation(
                "adjacency is not symmetric".into(),
            ));
        }
        Ok(Relation { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.n
    }

    pub fn adj(&self) -> &BoolMatrix {
        &self.adj
    }

    #[inline]
    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.adj.get(i, j)
    }

    /// Off-diagonal unordered pairs in the relation.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n() {
            for j in i + 1..self.n() {
                if self.contains(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_full(&self) -> bool {
        (0..self.n()).all(|i| (0..self.n()).all(|j| self.contains(i, j)))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                if !self.contains(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.contains(j, k) && !self.contains(i, k) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Raw composition `self ∘ other`. Reflexive, but in general not
    /// symmetric, hence returned as a bare boolean matrix.
    pub fn compose(&self, other: &Relation) -> Result<BoolMatrix> {
        self.adj.product(&other.adj)
    }

    /// Symmetrized composition `self ∘ other ∪ other ∘ self`; always a
    /// valid relation.
    pub fn symmetrized_compose(&self, other: &Relation) -> Result<Relation> {
        let ab = self.adj.product(&other.adj)?;
        let ba = other.adj.product(&self.adj)?;
        let mut adj = ab;
        for (w, word) in adj.bits.iter_mut().enumerate() {
            *word |= ba.bits[w];
        }
        debug_assert!(adj.is_symmetric() && adj.is_reflexive());
        Ok(Relation { adj })
    }

    /// Smallest equivalence relation containing `self`, together with its
    /// equivalence classes (listed in order of their smallest member).
    pub fn transitive_closure(&self) -> (Relation, Vec<Vec<usize>>) {
        let classes = self.components();
        let mut adj = BoolMatrix::zeros(self.n());
        for class in &classes {
            for &i in class {
                for &j in class {
                    adj.set(i, j, true);
                }
            }
        }
        (Relation { adj }, classes)
    }

    /// Connected components of the underlying graph, each sorted, listed in
    /// order of their smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut class = vec![start];
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for (y, seen_y) in seen.iter_mut().enumerate() {
                    if !*seen_y && self.contains(x, y) {
                        *seen_y = true;
                        class.push(y);
                        queue.push_back(y);
                    }
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Graph distances from `source` (edges are the off-diagonal pairs);
    /// `None` entries are unreachable.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<u32>> {
        let n = self.n();
        let mut dist = vec![None; n];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for (y, dist_y) in dist.iter_mut().enumerate() {
                if dist_y.is_none() && y != x && self.contains(x, y) {
                    *dist_y = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Graph diameter, or `None` when the relation is disconnected.
    ///
    /// Clamped below by 1: a single point (or the full relation) has
    /// diameter 1, matching the convention that the associated operator
    /// system is already an algebra after one product. Circulant band
    /// relations take a closed-form fast path, cross-checked against
    /// breadth-first search in the test suite.
    pub fn diameter(&self) -> Option<u32> {
        if let Some(width) = self.circulant_band_width() {
            let half = (self.n() / 2) as u32;
            return Some(if width == 0 {
                // identity on one or two points
                if self.n() == 1 {
                    1
                } else {
                    return None;
                }
            } else {
                half.div_ceil(width).max(1)
            });
        }
        let mut max = 0u32;
        for source in 0..self.n() {
            for d in self.bfs_distances(source) {
                {
                    let d = d?;
                    max = max.max(d)
                }
            }
        }
        Some(max.max(1))
    }

    /// Detect circulant band structure: `adj[i][j] ⟺ min(|i−j|, n−|i−j|) ≤ w`.
    /// Returns the width `w` when the relation has this form.
    pub fn circulant_band_width(&self) -> Option<u32> {
        let n = self.n();
        // Candidate width from the first row.
        let circ = |i: usize, j: usize| {
            let d = i.abs_diff(j);
            d.min(n - d)
        };
        let mut width = 0usize;
        for j in 1..n {
            if self.contains(0, j) {
                width = width.max(circ(0, j));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if self.contains(i, j) != (circ(i, j) <= width) {
                    return None;
                }
            }
        }
        Some(width as u32)
    }
}

impl std::fmt::Debug for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Relation on {} points, edges {:?}",
            self.n(),
            self.edges()
        )
    }
}

/// Slack for the triangle-inequality validation: distances assembled from
/// decimal input or shortest-path sums can violate the exact inequality by
/// a few ulps.
pub const TRIANGLE_SLACK: f64 = 1e-12;

/// Symmetric distance matrix with zero diagonal satisfying the triangle
/// inequality.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteMetric {
    n: usize,
    dist: Vec<f64>,
}

impl FiniteMetric {
    /// Validate and wrap a row-major distance matrix.
    pub fn new(n: usize, dist: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("empty point set".into()));
        }
        if dist.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "distance matrix has {} entries, expected {}",
                dist.len(),
                n * n
            )));
        }
        let m = FiniteMetric { n, dist };
        m.validate()?;
        Ok(m)
    }

    /// Wrap without validation; for internal constructions whose invariants
    /// hold by construction (closed-form metrics, shortest-path matrices).
    pub(crate) fn from_parts_unchecked(n: usize, dist: Vec<f64>) -> Self {
        debug_assert_eq!(dist.len(), n * n);
        FiniteMetric { n, dist }
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for x in 0..n {
            if self.dist(x, x) != 0.0 {
                return Err(Error::InvariantViolation(format!(
                    "dist[{x}][{x}] = {} must be 0",
                    self.dist(x, x)
                )));
            }
            for y in 0..n {
                let d = self.dist(x, y);
                if !d.is_finite() {
                    return Err(Error::InvariantViolation(format!(
                        "dist[{x}][{y}] = {d} is not finite"
                    )));
                }
                if x != y && d <= 0.0 {
                    return Err(Error::InvariantViolation(format!(
                        "dist[{x}][{y}] = {d} must be positive"
                    )));
                }
                if d != self.dist(y, x) {
                    return Err(Error::InvariantViolation(format!(
                        "dist[{x}][{y}] = {d} differs from dist[{y}][{x}] = {}",
                        self.dist(y, x)
                    )));
                }
            }
        }
        let scale = self.diameter_value().max(1.0);
        for x in 0..n {
            for y in 0..n {
                let dxy = self.dist(x, y);
                for z in 0..n {
                    if dxy > self.dist(x, z) + self.dist(z, y) + TRIANGLE_SLACK * scale {
                        return Err(Error::InvariantViolation(format!(
                            "triangle inequality fails: dist[{x}][{y}] = {dxy} > \
                             dist[{x}][{z}] + dist[{z}][{y}] = {}",
                            self.dist(x, z) + self.dist(z, y)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dist(&self, x: usize, y: usize) -> f64 {
        self.dist[x * self.n + y]
    }

    /// Largest distance (the metric diameter δ).
    pub fn diameter_value(&self) -> f64 {
        self.dist.iter().cloned().fold(0.0, f64::max)
    }

    /// The tolerance relation `d(x, y) < eps` (strict inequality).
    pub fn epsilon_relation(&self, eps: f64) -> Relation {
        assert!(eps > 0.0, "eps must be positive");
        let mut adj = BoolMatrix::identity(self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                if self.dist(x, y) < eps {
                    adj.set(x, y, true);
                }
            }
        }
        Relation { adj }
    }

    /// Whether `subset` is a single class of the equivalence relation
    /// generated by `d < eps` restricted to it.
    pub fn is_eps_connected(&self, eps: f64, subset: &[usize]) -> Result<bool> {
        if subset.is_empty() {
            return Err(Error::InvalidParameter(
                "eps-connectivity of the empty subset is undefined".into(),
            ));
        }
        for &x in subset {
            if x >= self.n {
                return Err(Error::InvalidParameter(format!(
                    "subset index {x} out of range for n = {}",
                    self.n
                )));
            }
        }
        let relation = self.epsilon_relation(eps);
        Ok(restrict_connected(&relation, subset))
    }
}

/// Equivalence classes generated by the restriction of `relation` to
/// `subset`, as sorted index sets into the ambient point set, in order of
/// first appearance.
pub fn restricted_components(relation: &Relation, subset: &[usize]) -> Vec<Vec<usize>> {
    let k = subset.len();
    let mut assigned = vec![false; k];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..k {
        if assigned[start] {
            continue;
        }
        let mut class = Vec::new();
        let mut queue = std::collections::VecDeque::from([start]);
        assigned[start] = true;
        while let Some(a) = queue.pop_front() {
            class.push(subset[a]);
            for b in 0..k {
                if !assigned[b] && relation.contains(subset[a], subset[b]) {
                    assigned[b] = true;
                    queue.push_back(b);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// Whether the restriction of `relation` to `subset` generates a single
/// equivalence class on `subset`. Indices may repeat; the empty subset is
/// the caller's responsibility.
pub fn restrict_connected(relation: &Relation, subset: &[usize]) -> bool {
    subset.is_empty() || restricted_components(relation, subset).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Relation {
        Relation::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn line_metric(points: &[f64]) -> FiniteMetric {
        let n = points.len();
        let mut dist = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                dist[i * n + j] = (points[i] - points[j]).abs();
            }
        }
        FiniteMetric::new(n, dist).unwrap()
    }

    #[test]
    fn path_composed_with_itself_is_full() {
        let r = path3();
        let sq = r.compose(&r).unwrap();
        assert!((0..3).all(|i| (0..3).all(|j| sq.get(i, j))));
    }

    #[test]
    fn identity_composition_is_identity_morphism() {
        let r = path3();
        let id = Relation::identity(3);
        assert_eq!(r.compose(&id).unwrap(), *r.adj());
        assert_eq!(id.compose(&r).unwrap(), *r.adj());
        assert_eq!(r.symmetrized_compose(&id).unwrap(), r);
    }

    #[test]
    fn composition_dimension_mismatch() {
        let r = path3();
        let s = Relation::identity(4);
        assert!(matches!(
            r.compose(&s),
            Err(Error::DimensionMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn band1_squared_is_band2() {
        // |i-j| <= 1 on 5 points, composed with itself -> |i-j| <= 2.
        let band1 = Relation::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let sq = band1.symmetrized_compose(&band1).unwrap();
        for i in 0..5usize {
            for j in 0..5usize {
                assert_eq!(sq.contains(i, j), i.abs_diff(j) <= 2, "({i}, {j})");
            }
        }
    }

    #[test]
    fn raw_composition_can_be_asymmetric() {
        let r1 = Relation::from_edges(3, &[(0, 1)]).unwrap();
        let r2 = Relation::from_edges(3, &[(1, 2)]).unwrap();
        let raw = r1.compose(&r2).unwrap();
        assert!(raw.get(0, 2));
        assert!(!raw.get(2, 0));
        assert!(!raw.is_symmetric());
        let sym = r1.symmetrized_compose(&r2).unwrap();
        assert!(sym.contains(0, 2) && sym.contains(2, 0));
    }

    #[test]
    fn closure_of_path_is_full() {
        let (closure, classes) = path3().transitive_closure();
        assert!(closure.is_full());
        assert_eq!(classes, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn closure_of_identity_is_identity() {
        let (closure, classes) = Relation::identity(4).transitive_closure();
        assert_eq!(closure, Relation::identity(4));
        assert_eq!(classes.len(), 4);
    }

    #[test]
    fn closure_of_two_disjoint_edges() {
        let r = Relation::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let (_, classes) = r.transitive_closure();
        assert_eq!(classes, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn closure_is_fixed_point_of_self_composition() {
        // Exhaustive over all relations on up to 5 points.
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            for mask in 0..1u32 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let r = Relation::from_edges(n, &edges).unwrap();
                let mut power = r.clone();
                loop {
                    let next = power.symmetrized_compose(&power).unwrap();
                    if next == power {
                        break;
                    }
                    power = next;
                }
                assert_eq!(power, r.transitive_closure().0, "n = {n}, mask = {mask}");
            }
        }
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(Relation::full(5).diameter(), Some(1));
        assert_eq!(path3().diameter(), Some(2));
        // band p=5, N=2: distance(0,4) = ceil(4/2) = 2
        let band =
            Relation::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
                .unwrap();
        assert_eq!(band.diameter(), Some(2));
        // disconnected
        let r = Relation::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(r.diameter(), None);
        // single point
        assert_eq!(Relation::identity(1).diameter(), Some(1));
    }

    #[test]
    fn diameter_one_iff_full() {
        for n in 2..=4usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            for mask in 0..1u32 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let r = Relation::from_edges(n, &edges).unwrap();
                assert_eq!(r.diameter() == Some(1), r.is_full());
            }
        }
    }

    #[test]
    fn circulant_band_width_detection() {
        let c6 =
            Relation::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(c6.circulant_band_width(), Some(1));
        assert_eq!(c6.diameter(), Some(3));
        assert_eq!(path3().circulant_band_width(), None);
        assert_eq!(Relation::full(4).circulant_band_width(), Some(2));
        // the identity is the width-0 circulant band; disconnected for n >= 2
        assert_eq!(Relation::identity(3).circulant_band_width(), Some(0));
        assert_eq!(Relation::identity(3).diameter(), None);
    }

    #[test]
    fn epsilon_relation_on_the_line() {
        let m = line_metric(&[0.0, 0.5, 1.0]);
        let r = m.epsilon_relation(0.6);
        assert!(r.contains(0, 1) && r.contains(1, 2));
        assert!(!r.contains(0, 2));
        // eps beyond the diameter -> full
        assert!(m.epsilon_relation(1.5).is_full());
        // strict inequality: ties at d = eps are excluded
        let tied = m.epsilon_relation(0.5);
        assert!(!tied.contains(0, 1));
    }

    #[test]
    fn cycle_metric_gives_circulant_band() {
        // C6 with unit edges: d(i,j) = min(|i-j|, 6-|i-j|)
        let n = 6;
        let mut dist = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                let d = i.abs_diff(j);
                dist[i * n + j] = d.min(n - d) as f64;
            }
        }
        let m = FiniteMetric::new(n, dist).unwrap();
        let r = m.epsilon_relation(1.5);
        assert_eq!(r.circulant_band_width(), Some(1));
    }

    #[test]
    fn eps_connectivity() {
        let m = line_metric(&[0.0, 0.5, 1.0]);
        assert!(m.is_eps_connected(0.6, &[0]).unwrap());
        assert!(!m.is_eps_connected(0.6, &[0, 2]).unwrap());
        assert!(m.is_eps_connected(0.6, &[0, 1, 2]).unwrap());
        assert!(m.is_eps_connected(0.6, &[]).is_err());
    }

    #[test]
    fn bitset_rows_work_across_word_boundaries() {
        // n = 70 spans two 64-bit words per row
        let n = 70;
        let band = crate::invariants::band_relation(n, 3).unwrap();
        assert_eq!(band.diameter(), Some(23)); // ceil(69/3)
        // brute-force composition on the far side of the word boundary
        let sq = band.symmetrized_compose(&band).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(sq.contains(i, j), i.abs_diff(j) <= 6, "({i}, {j})");
            }
        }
        let circ = crate::invariants::circulant_band_relation(130, 4).unwrap();
        assert_eq!(circ.circulant_band_width(), Some(4));
        assert_eq!(circ.diameter(), Some(65u32.div_ceil(4)));
    }

    #[test]
    fn metric_validation_rejects_violations() {
        // asymmetric
        assert!(FiniteMetric::new(2, vec![0.0, 1.0, 2.0, 0.0]).is_err());
        // nonzero diagonal
        assert!(FiniteMetric::new(2, vec![0.1, 1.0, 1.0, 0.0]).is_err());
        // zero off-diagonal
        assert!(FiniteMetric::new(2, vec![0.0, 0.0, 0.0, 0.0]).is_err());
        // triangle violation: d(0,2) = 5 > 1 + 1
        let bad = vec![
            0.0, 1.0, 5.0, //
            1.0, 0.0, 1.0, //
            5.0, 1.0, 0.0,
        ];
        assert!(FiniteMetric::new(3, bad).is_err());
    }
}
