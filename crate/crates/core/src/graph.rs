//! Quaternion unit gain graphs and their matrices.
//!
//! Each edge is stored once, with the gain of its stored orientation
//! `from → to`. The reverse orientation always carries the conjugate gain.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::config::DEFAULT_TOL;
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quat::Quaternion;

#[derive(Debug, Clone, PartialEq)]
pub struct OrientedEdge {
    pub id: String,
    pub from: usize,
    pub to: usize,
    /// Gain of the orientation `from → to`.
    pub gain: Quaternion,
}

impl OrientedEdge {
    pub fn new(id: impl Into<String>, from: usize, to: usize, gain: Quaternion) -> Self {
        Self {
            id: id.into(),
            from,
            to,
            gain,
        }
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other(&self, v: usize) -> Option<usize> {
        if v == self.from {
            Some(self.to)
        } else if v == self.to {
            Some(self.from)
        } else {
            None
        }
    }
}

/// How to build the Laplacian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaplacianRoute {
    /// `D(Γ) - A(G)`.
    DegreeMinusAdjacency,
    /// `H(G) H(G)*`.
    IncidenceProduct,
}

/// A simple graph with unit quaternion gains on its oriented edges.
#[derive(Debug, Clone, PartialEq)]
pub struct GainGraph {
    labels: Vec<String>,
    edges: Vec<OrientedEdge>,
    // (min, max) endpoint pair -> edge index
    index: BTreeMap<(usize, usize), usize>,
    neighbors: Vec<Vec<usize>>,
}

impl GainGraph {
    /// Validates a graph: distinct labels, in-range endpoints, no loops or
    /// parallel edges, unit gains (within the default tolerance).
    pub fn new(labels: Vec<String>, edges: Vec<OrientedEdge>) -> Result<Self> {
        let n = labels.len();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut index = BTreeMap::new();
        let mut neighbors = vec![Vec::new(); n];
        for (k, e) in edges.iter().enumerate() {
            for v in [e.from, e.to] {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, size: n });
                }
            }
            if e.from == e.to {
                return Err(Error::SelfLoop { edge: k });
            }
            if !e.gain.is_unit(DEFAULT_TOL) {
                return Err(Error::NonUnitGain {
                    edge: k,
                    norm: e.gain.norm(),
                });
            }
            let key = (e.from.min(e.to), e.from.max(e.to));
            if index.insert(key, k).is_some() {
                return Err(Error::MultiEdge { edge: k });
            }
            neighbors[e.from].push(e.to);
            neighbors[e.to].push(e.from);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Self {
            labels,
            edges,
            index,
            neighbors,
        })
    }

    /// Graph on vertices `v1 … vn` with edges `e1 … em` given as
    /// `(from, to, gain)` with zero-based endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize, Quaternion)]) -> Result<Self> {
        let labels = (1..=n).map(|i| format!("v{i}")).collect();
        let edges = edges
            .iter()
            .enumerate()
            .map(|(k, &(from, to, gain))| OrientedEdge::new(format!("e{}", k + 1), from, to, gain))
            .collect();
        Self::new(labels, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[OrientedEdge] {
        &self.edges
    }

    pub fn edge_between(&self, i: usize, j: usize) -> Option<usize> {
        self.index.get(&(i.min(j), i.max(j))).copied()
    }

    /// `φ(e_ij)`, the gain of the orientation `i → j`.
    pub fn gain(&self, i: usize, j: usize) -> Option<Quaternion> {
        let e = &self.edges[self.edge_between(i, j)?];
        Some(if e.from == i { e.gain } else { e.gain.conj() })
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// `n×m` incidence matrix: column `k` for `e_k = (i → j)` has `1` in row
    /// `j` and `-φ(e_ij)` in row `i`.
    pub fn incidence_matrix(&self) -> QMatrix {
        let mut h = QMatrix::zeros(self.vertex_count(), self.edge_count());
        for (k, e) in self.edges.iter().enumerate() {
            h[(e.to, k)] = Quaternion::ONE;
            h[(e.from, k)] = -e.gain;
        }
        h
    }

    /// Hermitian adjacency matrix with `a_ij = φ(e_ij)`.
    pub fn adjacency_matrix(&self) -> QMatrix {
        let n = self.vertex_count();
        let mut a = QMatrix::zeros(n, n);
        for e in &self.edges {
            a[(e.from, e.to)] = e.gain;
            a[(e.to, e.from)] = e.gain.conj();
        }
        a
    }

    pub fn laplacian(&self, route: LaplacianRoute) -> QMatrix {
        match route {
            LaplacianRoute::DegreeMinusAdjacency => {
                let mut l = self.adjacency_matrix();
                let n = self.vertex_count();
                for i in 0..n {
                    for j in 0..n {
                        l[(i, j)] = -l[(i, j)];
                    }
                    l[(i, i)] = Quaternion::real(self.degree(i) as f64);
                }
                l
            }
            LaplacianRoute::IncidenceProduct => self.incidence_matrix().gram_rows(),
        }
    }

    /// Builds the Laplacian both ways and returns `D - A` after checking that
    /// the two agree within `tol`.
    pub fn laplacian_checked(&self, tol: f64) -> Result<QMatrix> {
        let l = self.laplacian(LaplacianRoute::DegreeMinusAdjacency);
        let h = self.laplacian(LaplacianRoute::IncidenceProduct);
        let deviation = l.max_abs_diff(&h).unwrap_or(f64::INFINITY);
        if deviation > tol {
            return Err(Error::RouteMismatch { deviation });
        }
        Ok(l)
    }

    /// Left-to-right product of oriented-edge gains along a walk.
    pub fn walk_gain(&self, walk: &[usize]) -> Result<Quaternion> {
        let n = self.vertex_count();
        if let Some(&v) = walk.iter().find(|&&v| v >= n) {
            return Err(Error::IndexOutOfRange { index: v, size: n });
        }
        walk.windows(2).try_fold(Quaternion::ONE, |acc, w| {
            let g = self.gain(w[0], w[1]).ok_or(Error::NotAWalk {
                from: w[0],
                to: w[1],
            })?;
            Ok(acc * g)
        })
    }

    /// Balance test by potential propagation.
    ///
    /// In each component a breadth-first spanning tree assigns
    /// `θ(root) = 1` and `θ(j) = θ(i) φ(e_ij)` along tree edges; the graph is
    /// balanced iff every edge satisfies `|θ(i) φ(e_ij) - θ(j)| <= tol`.
    pub fn is_balanced(&self, tol: f64) -> bool {
        let n = self.vertex_count();
        let mut theta: Vec<Option<Quaternion>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if theta[root].is_some() {
                continue;
            }
            theta[root] = Some(Quaternion::ONE);
            queue.push_back(root);
            while let Some(i) = queue.pop_front() {
                let ti = theta[i].expect("visited");
                for &j in &self.neighbors[i] {
                    if theta[j].is_none() {
                        theta[j] = Some(ti * self.gain(i, j).expect("adjacent"));
                        queue.push_back(j);
                    }
                }
            }
        }
        self.edges.iter().all(|e| {
            let ti = theta[e.from].expect("assigned");
            let tj = theta[e.to].expect("assigned");
            (ti * e.gain).dist(&tj) <= tol
        })
    }

    /// Switching by vertex potentials: `φ'(e_ij) = conj(θ_i) φ(e_ij) θ_j`.
    pub fn switched(&self, theta: &[Quaternion]) -> Result<GainGraph> {
        if theta.len() != self.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} potentials for {} vertices",
                theta.len(),
                self.vertex_count()
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let g = theta[e.from].conj() * e.gain * theta[e.to];
                Ok(OrientedEdge::new(
                    e.id.clone(),
                    e.from,
                    e.to,
                    g.normalized()?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        GainGraph::new(self.labels.clone(), edges)
    }

    /// Report for the cycle through `cycle` (open or closed vertex list),
    /// using the canonical representative.
    pub fn cycle_report(&self, cycle: &[usize]) -> Result<CycleReport> {
        let open = open_cycle(cycle);
        if open.len() < 3 {
            return Err(Error::DimensionMismatch(format!(
                "a cycle needs at least 3 vertices, got {}",
                open.len()
            )));
        }
        let vertices = canonical_cycle(open);
        let gain = self.walk_gain(&vertices)?;
        Ok(CycleReport::new(vertices, gain))
    }

    /// Every simple cycle of length `3..=max_len`, once each, in canonical
    /// form. Fails when more than `budget` cycles exist.
    pub fn enumerate_cycles(&self, max_len: usize, budget: u64) -> Result<Vec<CycleReport>> {
        let n = self.vertex_count();
        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut path = Vec::with_capacity(n);
        let mut on_path = vec![false; n];
        for start in 0..n {
            path.push(start);
            on_path[start] = true;
            self.extend_cycles(start, max_len, budget, &mut path, &mut on_path, &mut found)?;
            on_path[start] = false;
            path.pop();
        }
        found
            .into_iter()
            .map(|mut c| {
                c.push(c[0]);
                let gain = self.walk_gain(&c)?;
                Ok(CycleReport::new(c, gain))
            })
            .collect()
    }

    fn extend_cycles(
        &self,
        start: usize,
        max_len: usize,
        budget: u64,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        found: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let last = *path.last().expect("non-empty path");
        for &next in &self.neighbors[last] {
            if next == start && path.len() >= 3 && path[1] < last {
                if found.len() as u64 >= budget {
                    return Err(Error::BudgetExceeded {
                        needed: budget + 1,
                        budget,
                    });
                }
                found.push(path.clone());
            }
            if next <= start || on_path[next] || path.len() >= max_len {
                continue;
            }
            path.push(next);
            on_path[next] = true;
            self.extend_cycles(start, max_len, budget, path, on_path, found)?;
            on_path[next] = false;
            path.pop();
        }
        Ok(())
    }
}

fn open_cycle(cycle: &[usize]) -> &[usize] {
    match cycle {
        [first, .., last] if first == last && cycle.len() > 1 => &cycle[..cycle.len() - 1],
        _ => cycle,
    }
}

/// Rotates to the smallest vertex and orients toward its smaller cycle
/// neighbour; returns the closed walk.
fn canonical_cycle(open: &[usize]) -> Vec<usize> {
    let l = open.len();
    let (pos, _) = open
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| **v)
        .expect("non-empty cycle");
    let forward = open[(pos + 1) % l];
    let backward = open[(pos + l - 1) % l];
    let mut out: Vec<usize> = if forward <= backward {
        (0..l).map(|t| open[(pos + t) % l]).collect()
    } else {
        (0..l).map(|t| open[(pos + l - t) % l]).collect()
    };
    out.push(out[0]);
    out
}

/// `(-1)^s l_{c1c2} l_{c2c3} ⋯ l_{cs c1}` for a cycle given by its vertices.
pub fn cycle_gain_from_laplacian(l: &QMatrix, cycle: &[usize]) -> Result<Quaternion> {
    let open = open_cycle(cycle);
    let s = open.len();
    let mut prod = Quaternion::ONE;
    for t in 0..s {
        let (r, c) = (open[t], open[(t + 1) % s]);
        if r >= l.rows() || c >= l.cols() {
            return Err(Error::IndexOutOfRange {
                index: r.max(c),
                size: l.rows(),
            });
        }
        let entry = l[(r, c)];
        if entry.is_zero() {
            return Err(Error::ZeroEntry { row: r, col: c });
        }
        prod *= entry;
    }
    Ok(if s.is_multiple_of(2) { prod } else { -prod })
}

/// A cycle with its gain and its contribution `|1 - φ(C)|²`.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleReport {
    /// Closed vertex sequence (first vertex repeated at the end).
    pub vertices: Vec<usize>,
    pub gain: Quaternion,
    pub contribution: f64,
}

impl CycleReport {
    pub fn new(vertices: Vec<usize>, gain: Quaternion) -> Self {
        let d = Quaternion::ONE - gain;
        let contribution = (d * d.conj()).re();
        Self {
            vertices,
            gain,
            contribution,
        }
    }

    /// Number of edges on the cycle.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_neutral(&self, tol: f64) -> bool {
        self.gain.dist(&Quaternion::ONE) <= tol
    }
}
