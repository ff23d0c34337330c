//! The operator system of a tolerance relation, realized as the subspace
//! of complex matrices supported on the relation's pattern.
//!
//! The entrywise (Schur) product with the relation's 0/1 matrix is the
//! projection onto this subspace. Positivity questions reduce to hermitian
//! eigenvalue computations; support questions reduce to boolean matrix
//! algebra, cross-checked here by products of generic random elements.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::relation::{BoolMatrix, Relation};

/// Entries with magnitude at or below this threshold count as structural
/// zeros when reading off the support of a product of generic elements.
/// Generic entries are O(1), so this sits 12 orders below signal.
pub const SUPPORT_TOL: f64 = 1e-12;

/// Default relative tolerance for positive-semidefiniteness tests.
pub const PSD_TOL: f64 = 1e-9;

/// Complex matrix supported on a relation's pattern.
#[derive(Clone, Debug, PartialEq)]
pub struct PatternMatrix {
    relation: Relation,
    entries: DMatrix<Complex64>,
}

impl PatternMatrix {
    /// Validate that `entries` vanishes off the pattern.
    pub fn new(relation: Relation, entries: DMatrix<Complex64>) -> Result<Self> {
        let n = relation.n();
        if entries.nrows() != n || entries.ncols() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: entries.nrows(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                if !relation.contains(i, j) && entries[(i, j)] != Complex64::ZERO {
                    return Err(Error::InvariantViolation(format!(
                        "entry ({i}, {j}) = {} lies off the support pattern",
                        entries[(i, j)]
                    )));
                }
            }
        }
        Ok(PatternMatrix { relation, entries })
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn entries(&self) -> &DMatrix<Complex64> {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.relation.n()
    }

    /// Nonzero pattern of the entries (magnitude above [`SUPPORT_TOL`]).
    pub fn support(&self) -> BoolMatrix {
        nonzero_pattern(&self.entries)
    }

    /// Generic element of the operator system: independent real and
    /// imaginary parts uniform on [-1, 1] at every pattern position.
    pub fn random(relation: &Relation, rng: &mut ChaCha8Rng) -> Self {
        let n = relation.n();
        let mut entries = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if relation.contains(i, j) {
                    let re = rng.random_range(-1.0..=1.0);
                    let im = rng.random_range(-1.0..=1.0);
                    entries[(i, j)] = Complex64::new(re, im);
                }
            }
        }
        PatternMatrix {
            relation: relation.clone(),
            entries,
        }
    }

    /// Random hermitian element supported on the pattern.
    pub fn random_hermitian(relation: &Relation, rng: &mut ChaCha8Rng) -> Self {
        let n = relation.n();
        let mut entries = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                if relation.contains(i, j) {
                    if i == j {
                        entries[(i, i)] = Complex64::new(rng.random_range(-1.0..=1.0), 0.0);
                    } else {
                        let v = Complex64::new(
                            rng.random_range(-1.0..=1.0),
                            rng.random_range(-1.0..=1.0),
                        );
                        entries[(i, j)] = v;
                        entries[(j, i)] = v.conj();
                    }
                }
            }
        }
        PatternMatrix {
            relation: relation.clone(),
            entries,
        }
    }
}

/// Nonzero pattern of a complex matrix at the [`SUPPORT_TOL`] threshold.
pub fn nonzero_pattern(m: &DMatrix<Complex64>) -> BoolMatrix {
    let n = m.nrows();
    let mut out = BoolMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            if m[(i, j)].norm() > SUPPORT_TOL {
                out.set(i, j, true);
            }
        }
    }
    out
}

/// The 0/1 matrix of a relation as a complex matrix.
pub fn indicator_matrix(r: &Relation) -> DMatrix<Complex64> {
    let n = r.n();
    DMatrix::from_fn(n, n, |i, j| {
        if r.contains(i, j) {
            Complex64::ONE
        } else {
            Complex64::ZERO
        }
    })
}

/// Entrywise product with the relation's 0/1 matrix: the projection of an
/// arbitrary matrix onto the operator system. Idempotent and linear.
pub fn schur_project(r: &Relation, b: &DMatrix<Complex64>) -> Result<PatternMatrix> {
    let n = r.n();
    if b.nrows() != n || b.ncols() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: b.nrows(),
        });
    }
    let entries = DMatrix::from_fn(n, n, |i, j| {
        if r.contains(i, j) {
            b[(i, j)]
        } else {
            Complex64::ZERO
        }
    });
    Ok(PatternMatrix {
        relation: r.clone(),
        entries,
    })
}

/// Max entrywise deviation from hermitian symmetry.
pub fn hermitian_deviation(h: &DMatrix<Complex64>) -> f64 {
    let n = h.nrows();
    let mut dev: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            dev = dev.max((h[(i, j)] - h[(j, i)].conj()).norm());
        }
    }
    dev
}

/// Eigenvalues of a hermitian matrix, ascending. The input is symmetrized
/// first so that eigensolver backward error does not depend on roundoff in
/// the caller's assembly.
pub fn hermitian_eigenvalues(h: &DMatrix<Complex64>) -> Vec<f64> {
    let sym = (h + h.adjoint()).scale(0.5);
    let mut eigs: Vec<f64> = sym.symmetric_eigenvalues().iter().cloned().collect();
    eigs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    eigs
}

/// Positive-semidefiniteness at relative tolerance `tol`: the smallest
/// eigenvalue must be at least `-tol * max(1, ||h||)`, with the spectral
/// norm of the (hermitian) input. Errors if the input deviates from
/// hermitian symmetry by more than `tol * max(1, max-entry)`.
pub fn is_psd(h: &DMatrix<Complex64>, tol: f64) -> Result<bool> {
    let scale = h.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
    let dev = hermitian_deviation(h);
    if dev > tol.max(f64::EPSILON) * scale {
        return Err(Error::NotHermitian {
            deviation: dev,
            tolerance: tol * scale,
        });
    }
    let eigs = hermitian_eigenvalues(h);
    let min = eigs.first().copied().unwrap_or(0.0);
    let norm = eigs.iter().fold(0.0f64, |a, &e| a.max(e.abs()));
    Ok(min >= -tol * norm.max(1.0))
}

/// Whether the relation's 0/1 matrix satisfies all triangle inequalities
/// `L[i][j] + L[j][k] - L[i][k] <= 1`. For a reflexive symmetric relation
/// this coincides with transitivity and with positive-semidefiniteness of
/// the 0/1 matrix.
pub fn is_equivalence_via_triangle(r: &Relation) -> bool {
    let n = r.n();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lij = r.contains(i, j) as u8;
                let ljk = r.contains(j, k) as u8;
                let lik = r.contains(i, k) as u8;
                if lij + ljk > 1 + lik {
                    return false;
                }
            }
        }
    }
    true
}

/// Union over `trials` random draws of the nonzero pattern of
/// `A·B + B'·A'` with `A, A'` generic in the system of `r1` and `B, B'`
/// generic in the system of `r2`. For generic entries this equals the
/// symmetrized composition of the two relations.
pub fn product_span_support(
    r1: &Relation,
    r2: &Relation,
    trials: usize,
    seed: u64,
) -> Result<BoolMatrix> {
    if r1.n() != r2.n() {
        return Err(Error::DimensionMismatch {
            left: r1.n(),
            right: r2.n(),
        });
    }
    assert!(trials >= 1, "at least one trial required");
    let n = r1.n();
    let mut union = BoolMatrix::zeros(n);
    let mut rng = crate::verify::seeded_rng(seed, 0);
    for _ in 0..trials {
        let a = PatternMatrix::random(r1, &mut rng);
        let b = PatternMatrix::random(r2, &mut rng);
        let b2 = PatternMatrix::random(r2, &mut rng);
        let a2 = PatternMatrix::random(r1, &mut rng);
        let product = a.entries() * b.entries() + b2.entries() * a2.entries();
        let pattern = nonzero_pattern(&product);
        for i in 0..n {
            for j in 0..n {
                if pattern.get(i, j) {
                    union.set(i, j, true);
                }
            }
        }
    }
    Ok(union)
}

/// Support-level brute-force oracle for the propagation number.
///
/// Iterates the boolean self-composition `R, R*R, R*R*R, ...` and returns
/// the first exponent whose pattern is closed under composition, together
/// with the equivalence-class sizes of the transitive closure (the block
/// sizes of the generated algebra).
pub fn generated_algebra_degree(r: &Relation) -> (u32, Vec<usize>) {
    let (_, classes) = r.transitive_closure();
    let blocks: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    let mut power = r.clone();
    let mut degree = 1u32;
    loop {
        let squared = power.symmetrized_compose(&power).unwrap();
        if squared == power {
            return (degree, blocks);
        }
        power = power.symmetrized_compose(r).unwrap();
        degree += 1;
    }
}

/// Element of the k-th matrix level over an operator system: a k×k array
/// of blocks sharing one support pattern, assembled as one kn×kn matrix.
#[derive(Clone, Debug)]
pub struct MatrixLevelElement {
    relation: Relation,
    k: usize,
    blocks: Vec<DMatrix<Complex64>>,
}

impl MatrixLevelElement {
    /// `blocks` in row-major block order, each n×n and supported on `relation`.
    pub fn new(relation: Relation, k: usize, blocks: Vec<DMatrix<Complex64>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter(
                "matrix level k must be positive".into(),
            ));
        }
        if blocks.len() != k * k {
            return Err(Error::InvalidParameter(format!(
                "expected {} blocks, got {}",
                k * k,
                blocks.len()
            )));
        }
        for (idx, block) in blocks.iter().enumerate() {
            PatternMatrix::new(relation.clone(), block.clone())
                .map_err(|e| Error::InvariantViolation(format!("block {idx}: {e}")))?;
        }
        Ok(MatrixLevelElement {
            relation,
            k,
            blocks,
        })
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The kn×kn matrix with block (a, b) in rows a·n..(a+1)·n.
    pub fn assemble(&self) -> DMatrix<Complex64> {
        let n = self.relation.n();
        let mut out = DMatrix::zeros(self.k * n, self.k * n);
        for a in 0..self.k {
            for b in 0..self.k {
                let block = &self.blocks[a * self.k + b];
                for i in 0..n {
                    for j in 0..n {
                        out[(a * n + i, b * n + j)] = block[(i, j)];
                    }
                }
            }
        }
        out
    }
}

/// Positivity in the k-th matrix level: the assembled kn×kn matrix is
/// positive semidefinite (the cone inherited from the ambient matrix
/// algebra).
pub fn level_positive(e: &MatrixLevelElement, tol: f64) -> Result<bool> {
    is_psd(&e.assemble(), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::Relation;
    use approx::assert_abs_diff_eq;

    fn path3() -> Relation {
        Relation::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    /// The indefinite 0/1 matrix of the 3-point path.
    fn path3_indicator() -> DMatrix<Complex64> {
        indicator_matrix(&path3())
    }

    #[test]
    fn schur_projection_examples() {
        let ones = DMatrix::from_element(3, 3, Complex64::ONE);
        // full relation: projection is the identity map
        let full = schur_project(&Relation::full(3), &ones).unwrap();
        assert_eq!(full.entries(), &ones);
        // the identity matrix survives any pattern (diagonal is always present)
        let eye = DMatrix::identity(3, 3);
        let projected = schur_project(&Relation::identity(3), &eye).unwrap();
        assert_eq!(projected.entries(), &eye);
        // all-ones onto the path pattern
        let onto_path = schur_project(&path3(), &ones).unwrap();
        assert_eq!(onto_path.entries(), &path3_indicator());
    }

    #[test]
    fn schur_projection_is_idempotent() {
        let r = path3();
        let mut rng = crate::verify::seeded_rng(7, 0);
        let b = DMatrix::from_fn(3, 3, |_, _| {
            Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
        });
        let once = schur_project(&r, &b).unwrap();
        let twice = schur_project(&r, once.entries()).unwrap();
        assert_eq!(once.entries(), twice.entries());
        // entrywise contraction
        for i in 0..3 {
            for j in 0..3 {
                assert!(once.entries()[(i, j)].norm() <= b[(i, j)].norm());
            }
        }
    }

    #[test]
    fn path_indicator_min_eigenvalue_is_one_minus_sqrt_two() {
        let eigs = hermitian_eigenvalues(&path3_indicator());
        assert_abs_diff_eq!(eigs[0], 1.0 - 2.0f64.sqrt(), epsilon = 1e-12);
        assert!(!is_psd(&path3_indicator(), PSD_TOL).unwrap());
    }

    #[test]
    fn psd_examples() {
        assert!(is_psd(&DMatrix::identity(4, 4), PSD_TOL).unwrap());
        // Gram matrix A* A is PSD
        let mut rng = crate::verify::seeded_rng(11, 0);
        let a = DMatrix::from_fn(5, 5, |_, _| {
            Complex64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
        });
        let gram = a.adjoint() * &a;
        assert!(is_psd(&gram, PSD_TOL).unwrap());
        // non-hermitian input is rejected
        let mut bad = DMatrix::identity(3, 3);
        bad[(0, 1)] = Complex64::new(1.0, 0.0);
        assert!(matches!(
            is_psd(&bad, PSD_TOL),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn triangle_inequality_examples() {
        assert!(is_equivalence_via_triangle(&Relation::identity(4)));
        assert!(!is_equivalence_via_triangle(&path3()));
        // union of disjoint cliques is an equivalence relation
        let cliques = Relation::from_edges(5, &[(0, 1), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(is_equivalence_via_triangle(&cliques));
    }

    #[test]
    fn product_span_examples() {
        let id = Relation::identity(4);
        let support = product_span_support(&id, &id, 4, 3).unwrap();
        assert_eq!(support, *Relation::identity(4).adj());

        let band1 = Relation::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let support = product_span_support(&band1, &band1, 8, 3).unwrap();
        let expected = band1.symmetrized_compose(&band1).unwrap();
        assert_eq!(support, *expected.adj());
    }

    #[test]
    fn product_support_contained_in_composition() {
        // pattern(A · B) ⊆ compose(pattern A, pattern B), exactly; with
        // generic entries the inclusion is an equality
        let mut rng = crate::verify::seeded_rng(5, 0);
        for trial in 0..50u64 {
            let r1 = crate::verify::random_relation(5, 0.4, &mut rng);
            let r2 = crate::verify::random_relation(5, 0.4, &mut rng);
            let a = PatternMatrix::random(&r1, &mut rng);
            let b = PatternMatrix::random(&r2, &mut rng);
            let product = a.entries() * b.entries();
            let pattern = nonzero_pattern(&product);
            let composed = r1.compose(&r2).unwrap();
            assert!(pattern.le(&composed), "trial {trial}");
            assert_eq!(pattern, composed, "generic equality, trial {trial}");
        }
    }

    #[test]
    fn generated_algebra_degree_examples() {
        assert_eq!(generated_algebra_degree(&Relation::full(4)), (1, vec![4]));
        assert_eq!(generated_algebra_degree(&path3()), (2, vec![3]));
        assert_eq!(
            generated_algebra_degree(&Relation::identity(3)),
            (1, vec![1, 1, 1])
        );
    }

    #[test]
    fn algebra_closure_iff_transitive() {
        // the system is closed under products at support level iff the
        // relation is transitive
        for n in 1..=4usize {
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
                let closed = r.compose(&r).unwrap().le(r.adj());
                assert_eq!(closed, r.is_transitive(), "n = {n}, mask = {mask}");
            }
        }
    }

    #[test]
    fn level_positivity_via_schur_complement() {
        // [[tI, x], [x*, tI]] is PSD exactly when t >= ||x||
        let r = path3();
        let mut rng = crate::verify::seeded_rng(13, 0);
        let x = PatternMatrix::random(&r, &mut rng);
        let opnorm = x
            .entries()
            .clone()
            .svd(false, false)
            .singular_values
            .iter()
            .fold(0.0f64, |a, &s| a.max(s));
        let block = |t: f64| {
            let eye = DMatrix::from_diagonal_element(3, 3, Complex64::new(t, 0.0));
            MatrixLevelElement::new(
                r.clone(),
                2,
                vec![eye.clone(), x.entries().clone(), x.entries().adjoint(), eye],
            )
            .unwrap()
        };
        assert!(level_positive(&block(opnorm * 1.01), PSD_TOL).unwrap());
        assert!(!level_positive(&block(opnorm * 0.99), PSD_TOL).unwrap());
        // k = 1, identity diagonal
        let one = MatrixLevelElement::new(r, 1, vec![DMatrix::identity(3, 3)]).unwrap();
        assert!(level_positive(&one, PSD_TOL).unwrap());
    }

    #[test]
    fn pattern_matrix_rejects_off_support_entries() {
        let mut entries = DMatrix::zeros(3, 3);
        entries[(0, 2)] = Complex64::ONE;
        assert!(PatternMatrix::new(path3(), entries).is_err());
    }
}
