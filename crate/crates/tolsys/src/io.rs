//! File formats.
//!
//! - Relation (JSON): `{"n": 4, "edges": [[0, 1], ...]}` with 0-based
//!   indices, loops implicit, unordered pairs; alternatively
//!   `{"n": 4, "adj": [[true, ...], ...]}` with the full boolean matrix.
//! - Finite metric (CSV): n rows of n comma-separated decimals.
//! - Pattern matrix (JSON): `{"relation": {...}, "entries": [[i, j, re, im], ...]}`.
//! - Hermitian functional (JSON): `{"relation": {...}, "rep": [[i, j, re, im], ...]}`
//!   listing only `i <= j`; the mirror entries are implied.
//! - Vector (JSON): `{"v": [[re, im], ...]}`, unit norm.
//!
//! Loaders validate every structural invariant and reject violations with
//! a line/entry diagnostic.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::opsys::PatternMatrix;
use crate::relation::{BoolMatrix, FiniteMetric, Relation};
use crate::states::{HermitianFunctional, VectorState};

#[derive(Debug, Serialize, Deserialize)]
struct RelationFile {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    adj: Option<Vec<Vec<bool>>>,
}

fn json_error(e: &serde_json::Error) -> Error {
    Error::parse(
        format!("line {}, column {}", e.line(), e.column()),
        e.to_string(),
    )
}

fn relation_from_file(file: RelationFile) -> Result<Relation> {
    if file.n == 0 {
        return Err(Error::parse("n", "point count must be positive"));
    }
    match (file.edges, file.adj) {
        (Some(edges), None) => {
            for (k, &(i, j)) in edges.iter().enumerate() {
                if i >= file.n || j >= file.n {
                    return Err(Error::parse(
                        format!("edges[{k}]"),
                        format!("index ({i}, {j}) out of range for n = {}", file.n),
                    ));
                }
            }
            Relation::from_edges(file.n, &edges)
        }
        (None, Some(rows)) => {
            if rows.len() != file.n || rows.iter().any(|r| r.len() != file.n) {
                return Err(Error::parse(
                    "adj",
                    format!("adjacency must be {n}x{n}", n = file.n),
                ));
            }
            let mut adj = BoolMatrix::zeros(file.n);
            for (i, row) in rows.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    adj.set(i, j, v);
                }
            }
            Relation::from_adjacency(adj)
        }
        (Some(_), Some(_)) => Err(Error::parse(
            "edges/adj",
            "provide either an edge list or an adjacency matrix, not both",
        )),
        (None, None) => Err(Error::parse(
            "edges",
            "missing edge list (or adjacency matrix)",
        )),
    }
}

pub fn relation_from_json(text: &str) -> Result<Relation> {
    let file: RelationFile = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    relation_from_file(file)
}

pub fn relation_to_json(r: &Relation) -> String {
    let file = RelationFile {
        n: r.n(),
        edges: Some(r.edges()),
        adj: None,
    };
    serde_json::to_string_pretty(&file).expect("relation serialization")
}

pub fn load_relation(path: &std::path::Path) -> Result<Relation> {
    relation_from_json(&std::fs::read_to_string(path)?)
}

/// Parse a CSV distance matrix: n rows of n comma-separated decimals.
pub fn metric_from_csv(text: &str) -> Result<FiniteMetric> {
    let rows: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let n = rows.len();
    if n == 0 {
        return Err(Error::parse("row 1", "empty distance matrix"));
    }
    let mut dist = vec![0.0; n * n];
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != n {
            return Err(Error::parse(
                format!("row {}", i + 1),
                format!("expected {n} columns, found {}", cells.len()),
            ));
        }
        for (j, cell) in cells.iter().enumerate() {
            dist[i * n + j] = cell.trim().parse::<f64>().map_err(|e| {
                Error::parse(format!("row {}, column {}", i + 1, j + 1), e.to_string())
            })?;
        }
    }
    FiniteMetric::new(n, dist)
}

pub fn load_metric(path: &std::path::Path) -> Result<FiniteMetric> {
    metric_from_csv(&std::fs::read_to_string(path)?)
}

pub fn metric_to_csv(m: &FiniteMetric) -> String {
    (0..m.n())
        .map(|i| {
            (0..m.n())
                .map(|j| m.dist(i, j).to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Debug, Serialize, Deserialize)]
struct WeightedGraphFile {
    n: usize,
    edges: Vec<(usize, usize, f64)>,
}

/// Weighted-graph input: `{"n": 4, "edges": [[i, j, length], ...]}`;
/// builds the shortest-path metric.
pub fn graph_metric_from_json(text: &str) -> Result<FiniteMetric> {
    let file: WeightedGraphFile = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    crate::metric::graph_metric(file.n, &file.edges)
}

pub fn load_graph_metric(path: &std::path::Path) -> Result<FiniteMetric> {
    graph_metric_from_json(&std::fs::read_to_string(path)?)
}

#[derive(Debug, Serialize, Deserialize)]
struct PatternMatrixFile {
    relation: RelationFile,
    entries: Vec<(usize, usize, f64, f64)>,
}

pub fn pattern_matrix_from_json(text: &str) -> Result<PatternMatrix> {
    let file: PatternMatrixFile = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    let relation = relation_from_file(file.relation)?;
    let n = relation.n();
    let mut entries = DMatrix::zeros(n, n);
    for (k, &(i, j, re, im)) in file.entries.iter().enumerate() {
        if i >= n || j >= n {
            return Err(Error::parse(
                format!("entries[{k}]"),
                format!("index ({i}, {j}) out of range for n = {n}"),
            ));
        }
        entries[(i, j)] = Complex64::new(re, im);
    }
    PatternMatrix::new(relation, entries)
}

pub fn pattern_matrix_to_json(b: &PatternMatrix) -> String {
    let n = b.n();
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let z = b.entries()[(i, j)];
            if z != Complex64::ZERO {
                entries.push((i, j, z.re, z.im));
            }
        }
    }
    let file = PatternMatrixFile {
        relation: RelationFile {
            n,
            edges: Some(b.relation().edges()),
            adj: None,
        },
        entries,
    };
    serde_json::to_string_pretty(&file).expect("pattern matrix serialization")
}

pub fn load_pattern_matrix(path: &std::path::Path) -> Result<PatternMatrix> {
    pattern_matrix_from_json(&std::fs::read_to_string(path)?)
}

#[derive(Debug, Serialize, Deserialize)]
struct FunctionalFile {
    relation: RelationFile,
    rep: Vec<(usize, usize, f64, f64)>,
}

/// Hermitian functional: upper-triangle entries `(i, j, re, im)` with
/// `i <= j`; `(j, i)` is the conjugate, diagonal entries must be real.
pub fn functional_from_json(text: &str) -> Result<HermitianFunctional> {
    let file: FunctionalFile = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    let relation = relation_from_file(file.relation)?;
    let n = relation.n();
    let mut rep = DMatrix::zeros(n, n);
    let mut seen = std::collections::HashSet::new();
    for (k, &(i, j, re, im)) in file.rep.iter().enumerate() {
        let location = format!("rep[{k}]");
        if i >= n || j >= n {
            return Err(Error::parse(
                location,
                format!("index ({i}, {j}) out of range for n = {n}"),
            ));
        }
        if i > j {
            return Err(Error::parse(location, "entries must satisfy i <= j"));
        }
        if i == j && im != 0.0 {
            return Err(Error::parse(location, "diagonal entries must be real"));
        }
        if !seen.insert((i, j)) {
            return Err(Error::parse(
                location,
                format!("duplicate entry ({i}, {j})"),
            ));
        }
        rep[(i, j)] = Complex64::new(re, im);
        if i != j {
            rep[(j, i)] = Complex64::new(re, -im);
        }
    }
    HermitianFunctional::new(relation, rep)
}

pub fn functional_to_json(phi: &HermitianFunctional) -> String {
    let n = phi.n();
    let mut rep = Vec::new();
    for i in 0..n {
        for j in i..n {
            let z = phi.rep()[(i, j)];
            if z != Complex64::ZERO {
                rep.push((i, j, z.re, z.im));
            }
        }
    }
    let file = FunctionalFile {
        relation: RelationFile {
            n,
            edges: Some(phi.relation().edges()),
            adj: None,
        },
        rep,
    };
    serde_json::to_string_pretty(&file).expect("functional serialization")
}

pub fn load_functional(path: &std::path::Path) -> Result<HermitianFunctional> {
    functional_from_json(&std::fs::read_to_string(path)?)
}

#[derive(Debug, Serialize, Deserialize)]
struct VectorFile {
    v: Vec<(f64, f64)>,
}

pub fn vector_from_json(text: &str) -> Result<VectorState> {
    let file: VectorFile = serde_json::from_str(text).map_err(|e| json_error(&e))?;
    let v = DVector::from_iterator(
        file.v.len(),
        file.v.iter().map(|&(re, im)| Complex64::new(re, im)),
    );
    VectorState::new(v)
}

pub fn vector_to_json(v: &VectorState) -> String {
    let file = VectorFile {
        v: v.vector().iter().map(|z| (z.re, z.im)).collect(),
    };
    serde_json::to_string_pretty(&file).expect("vector serialization")
}

pub fn load_vector(path: &std::path::Path) -> Result<VectorState> {
    vector_from_json(&std::fs::read_to_string(path)?)
}
