//! Reductions of a gain graph and the reduction-sum form of `det L(G)`.
//!
//! A reduction selects a set of vertices (rows of the incidence matrix) and
//! a set of edges (columns). A selected edge with only one selected endpoint
//! is a half-edge; an edge with none is a free loop and is not allowed.
//! With every vertex selected, the determinant of the Laplacian is the sum,
//! over reductions with `|E(R)| = |V(G)|` whose components are all unicyclic,
//! of `Π |1 - φ(C)|²` over their cycles.

use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::{binomial, Combinations};
use crate::config::Config;
use crate::det::det_hermitian;
use crate::error::{Error, Result};
use crate::graph::{CycleReport, GainGraph};
use crate::sum::CompensatedSum;

/// Selected vertex and edge indices, both sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Reduction {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Reduction {
    pub fn new(graph: &GainGraph, mut rows: Vec<usize>, mut cols: Vec<usize>) -> Result<Self> {
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        let n = graph.vertex_count();
        let m = graph.edge_count();
        if let Some(&v) = rows.iter().find(|&&v| v >= n) {
            return Err(Error::IndexOutOfRange { index: v, size: n });
        }
        if let Some(&k) = cols.iter().find(|&&k| k >= m) {
            return Err(Error::IndexOutOfRange { index: k, size: m });
        }
        for &k in &cols {
            let e = &graph.edges()[k];
            if rows.binary_search(&e.from).is_err() && rows.binary_search(&e.to).is_err() {
                return Err(Error::FreeLoop { edge: k });
            }
        }
        Ok(Self { rows, cols })
    }

    /// All vertices and the given edges.
    pub fn full_vertex(graph: &GainGraph, cols: Vec<usize>) -> Result<Self> {
        Self::new(graph, (0..graph.vertex_count()).collect(), cols)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Unicyclic,
    HalfEdgeTree,
    /// Fewer edges than vertices.
    Deficient,
    /// More edges than vertices.
    Excessive,
}

impl ComponentKind {
    pub fn is_unicycle_like(self) -> bool {
        matches!(self, ComponentKind::Unicyclic | ComponentKind::HalfEdgeTree)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReductionComponent {
    pub vertices: Vec<usize>,
    /// Edges (full and half) attached to this component.
    pub edges: Vec<usize>,
    pub half_edges: usize,
    pub kind: ComponentKind,
    /// Present exactly for unicyclic components.
    pub cycle: Option<CycleReport>,
}

/// Every reduction with all vertices selected and `|V(G)|` edges, in
/// lexicographic order of edge sets. Empty when `|E| < |V|`.
pub fn enumerate_full_vertex_reductions(graph: &GainGraph, budget: u64) -> Result<Vec<Reduction>> {
    let n = graph.vertex_count();
    let m = graph.edge_count();
    let count = binomial(m, n);
    if count > budget {
        return Err(Error::BudgetExceeded {
            needed: count,
            budget,
        });
    }
    Combinations::new(m, n)
        .map(|cols| Reduction::full_vertex(graph, cols))
        .collect()
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so component order is stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Splits a reduction into connected components and labels each one.
///
/// Components are ordered by their smallest vertex.
pub fn classify(reduction: &Reduction, graph: &GainGraph) -> Result<Vec<ReductionComponent>> {
    let n = graph.vertex_count();
    let mut selected = vec![false; n];
    for &v in &reduction.rows {
        selected[v] = true;
    }
    let mut dsu = Dsu::new(n);
    for &k in &reduction.cols {
        let e = &graph.edges()[k];
        if selected[e.from] && selected[e.to] {
            dsu.union(e.from, e.to);
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    let mut comps: Vec<ReductionComponent> = Vec::new();
    for &v in &reduction.rows {
        let r = dsu.find(v);
        if slot[r] == usize::MAX {
            slot[r] = comps.len();
            roots.push(r);
            comps.push(ReductionComponent {
                vertices: Vec::new(),
                edges: Vec::new(),
                half_edges: 0,
                kind: ComponentKind::Deficient,
                cycle: None,
            });
        }
        comps[slot[r]].vertices.push(v);
    }
    for &k in &reduction.cols {
        let e = &graph.edges()[k];
        let anchor = if selected[e.from] { e.from } else { e.to };
        let c = &mut comps[slot[dsu.find(anchor)]];
        c.edges.push(k);
        if !(selected[e.from] && selected[e.to]) {
            c.half_edges += 1;
        }
    }
    for c in &mut comps {
        let (nv, ne) = (c.vertices.len(), c.edges.len());
        c.kind = if ne > nv {
            ComponentKind::Excessive
        } else if ne < nv {
            ComponentKind::Deficient
        } else if c.half_edges == 0 {
            ComponentKind::Unicyclic
        } else {
            // connected through nv - 1 full edges, so exactly one half-edge
            ComponentKind::HalfEdgeTree
        };
        if c.kind == ComponentKind::Unicyclic {
            let cycle = prune_to_cycle(graph, &c.vertices, &c.edges);
            c.cycle = Some(graph.cycle_report(&cycle)?);
        }
    }
    Ok(comps)
}

/// Strips degree-1 vertices until only the unique cycle is left, then
/// returns it as an open vertex walk.
fn prune_to_cycle(graph: &GainGraph, vertices: &[usize], edges: &[usize]) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut alive = vec![false; n];
    let mut degree = vec![0usize; n];
    for &v in vertices {
        alive[v] = true;
    }
    for &k in edges {
        let e = &graph.edges()[k];
        degree[e.from] += 1;
        degree[e.to] += 1;
    }
    let mut stack: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|&v| degree[v] == 1)
        .collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &k in edges {
            if let Some(u) = graph.edges()[k].other(v) {
                if alive[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        stack.push(u);
                    }
                }
            }
        }
    }
    let on_cycle: Vec<usize> = vertices.iter().copied().filter(|&v| alive[v]).collect();
    let start = on_cycle[0];
    let mut walk = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = edges
            .iter()
            .filter_map(|&k| graph.edges()[k].other(cur))
            .find(|&u| alive[u] && u != prev)
            .expect("cycle vertex has two cycle neighbours");
        if next == start {
            break;
        }
        walk.push(next);
        prev = cur;
        cur = next;
    }
    walk
}

/// `det L(R)` with `L(R) = H(R) H(R)*` built from the incidence submatrix.
pub fn det_reduction_direct(reduction: &Reduction, graph: &GainGraph, cfg: &Config) -> Result<f64> {
    if !reduction.is_square() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "reduction has {} vertices and {} edges",
            reduction.rows.len(),
            reduction.cols.len()
        )));
    }
    let h = graph
        .incidence_matrix()
        .submatrix(&reduction.rows, &reduction.cols)?;
    det_hermitian(&h.gram_rows(), cfg)
}

/// `det L(R)` from the component structure: zero unless every component is
/// unicyclic or a half-edge tree, otherwise `Π |1 - φ(C)|²`.
pub fn det_reduction_combinatorial(reduction: &Reduction, graph: &GainGraph) -> Result<f64> {
    if !reduction.is_square() {
        return Err(Error::DimensionMismatch(alloc::format!(
            "reduction has {} vertices and {} edges",
            reduction.rows.len(),
            reduction.cols.len()
        )));
    }
    let comps = classify(reduction, graph)?;
    Ok(product_of_contributions(&comps))
}

pub fn product_of_contributions(comps: &[ReductionComponent]) -> f64 {
    let mut prod = 1.0;
    for c in comps {
        match c.kind {
            ComponentKind::Unicyclic => {
                prod *= c
                    .cycle
                    .as_ref()
                    .expect("unicyclic has a cycle")
                    .contribution
            }
            ComponentKind::HalfEdgeTree => {}
            ComponentKind::Deficient | ComponentKind::Excessive => return 0.0,
        }
    }
    prod
}

/// `det L(G)` as the permutation-sum Hermitian determinant of `D - A`.
pub fn det_laplacian_direct(graph: &GainGraph, cfg: &Config) -> Result<f64> {
    let l = graph.laplacian_checked(cfg.tol)?;
    det_hermitian(&l, cfg)
}

/// `det L(G)` as the sum over full-vertex unicycle-like reductions of the
/// product of their cycle contributions.
pub fn det_laplacian_combinatorial(graph: &GainGraph, cfg: &Config) -> Result<f64> {
    let mut acc = CompensatedSum::new();
    for r in enumerate_full_vertex_reductions(graph, cfg.subset_budget)? {
        acc.add(det_reduction_combinatorial(&r, graph)?);
    }
    Ok(acc.value())
}

/// `det L(G) = Σ 4^ω₁ 2^ω₂` for gains in `{±1, ±𝐢, ±𝐣, ±𝐤}`, with `ω₁`
/// cycles of gain `-1` and `ω₂` cycles of gain `±𝐢, ±𝐣, ±𝐤` per reduction.
pub fn det_laplacian_unit_gains(graph: &GainGraph, cfg: &Config) -> Result<f64> {
    for (k, e) in graph.edges().iter().enumerate() {
        if e.gain.lipschitz_unit_index(cfg.tol).is_none() {
            return Err(Error::GainsNotInLipschitzUnits { edge: k });
        }
    }
    let mut total = 0u64;
    'reductions: for r in enumerate_full_vertex_reductions(graph, cfg.subset_budget)? {
        let (mut real, mut imaginary) = (0u32, 0u32);
        for c in classify(&r, graph)? {
            match c.kind {
                ComponentKind::Unicyclic => {
                    let gain = c.cycle.expect("unicyclic has a cycle").gain;
                    // products of Lipschitz units stay in the group
                    match gain.lipschitz_unit_index(cfg.tol) {
                        Some(0) => continue 'reductions,
                        Some(1) => real += 1,
                        Some(_) => imaginary += 1,
                        None => unreachable!("cycle gain left the Lipschitz units"),
                    }
                }
                ComponentKind::HalfEdgeTree => {}
                ComponentKind::Deficient | ComponentKind::Excessive => continue 'reductions,
            }
        }
        total += 4u64.pow(real) * 2u64.pow(imaginary);
    }
    Ok(total as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quaternion;

    const S: f64 = core::f64::consts::FRAC_1_SQRT_2;

    fn q(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion::new(w, x, y, z).unwrap()
    }

    fn worked_example() -> GainGraph {
        GainGraph::from_edges(
            4,
            &[
                (3, 0, q(0.0, S, S, 0.0)),
                (0, 1, Quaternion::I),
                (1, 2, q(0.0, S, 0.0, S)),
                (2, 0, Quaternion::J),
                (2, 3, Quaternion::K),
            ],
        )
        .unwrap()
    }

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn five_reductions_of_worked_example() {
        let g = worked_example();
        let rs = enumerate_full_vertex_reductions(&g, 100).unwrap();
        let sets: Vec<Vec<usize>> = rs.iter().map(|r| r.cols().to_vec()).collect();
        // zero-based edge sets; {1,2,3,5}, {1,2,3,4}, {2,3,4,5}, {1,2,4,5}, {1,3,4,5} one-based
        for beta in [
            vec![0, 1, 2, 4],
            vec![0, 1, 2, 3],
            vec![1, 2, 3, 4],
            vec![0, 1, 3, 4],
            vec![0, 2, 3, 4],
        ] {
            assert!(sets.contains(&beta));
        }
        assert_eq!(rs.len(), 5);
    }

    #[test]
    fn reduction_contributions() {
        let g = worked_example();
        let beta1 = Reduction::full_vertex(&g, vec![0, 1, 2, 4]).unwrap();
        let comps = classify(&beta1, &g).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].kind, ComponentKind::Unicyclic);
        assert!((det_reduction_combinatorial(&beta1, &g).unwrap() - 1.0).abs() < 1e-12);
        assert!((det_reduction_direct(&beta1, &g, &cfg()).unwrap() - 1.0).abs() < 1e-9);

        let beta2 = Reduction::full_vertex(&g, vec![0, 1, 2, 3]).unwrap();
        let comps = classify(&beta2, &g).unwrap();
        assert_eq!(comps[0].cycle.as_ref().unwrap().vertices, vec![0, 1, 2, 0]);
        let expected = 2.0 - core::f64::consts::SQRT_2;
        assert!((det_reduction_combinatorial(&beta2, &g).unwrap() - expected).abs() < 1e-12);
        assert!((det_reduction_direct(&beta2, &g, &cfg()).unwrap() - expected).abs() < 1e-9);
    }

    #[test]
    fn worked_example_total() {
        let g = worked_example();
        let expected = 9.0 - 4.0 * core::f64::consts::SQRT_2;
        let comb = det_laplacian_combinatorial(&g, &cfg()).unwrap();
        let direct = det_laplacian_direct(&g, &cfg()).unwrap();
        assert!((comb - expected).abs() < 1e-12);
        assert!((direct - expected).abs() < 1e-9);
    }

    #[test]
    fn trees_have_no_full_reductions() {
        let tree =
            GainGraph::from_edges(3, &[(0, 1, Quaternion::I), (1, 2, Quaternion::J)]).unwrap();
        assert!(enumerate_full_vertex_reductions(&tree, 10)
            .unwrap()
            .is_empty());
        assert_eq!(det_laplacian_combinatorial(&tree, &cfg()).unwrap(), 0.0);
        let cyc = GainGraph::from_edges(
            3,
            &[
                (0, 1, Quaternion::I),
                (1, 2, Quaternion::J),
                (2, 0, Quaternion::K),
            ],
        )
        .unwrap();
        assert_eq!(enumerate_full_vertex_reductions(&cyc, 10).unwrap().len(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let g = worked_example();
        assert_eq!(
            enumerate_full_vertex_reductions(&g, 4),
            Err(Error::BudgetExceeded {
                needed: 5,
                budget: 4
            })
        );
    }

    #[test]
    fn half_edge_tree_and_free_loops() {
        // path v1 - v2 - v3 ; drop v3 but keep its edge
        let path =
            GainGraph::from_edges(3, &[(0, 1, Quaternion::I), (1, 2, q(0.5, 0.5, -0.5, 0.5))])
                .unwrap();
        let r = Reduction::new(&path, vec![0, 1], vec![0, 1]).unwrap();
        let comps = classify(&r, &path).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].kind, ComponentKind::HalfEdgeTree);
        assert_eq!(comps[0].half_edges, 1);
        assert_eq!(det_reduction_combinatorial(&r, &path).unwrap(), 1.0);
        assert!((det_reduction_direct(&r, &path, &cfg()).unwrap() - 1.0).abs() < 1e-9);

        assert_eq!(
            Reduction::new(&path, vec![0], vec![1]),
            Err(Error::FreeLoop { edge: 1 })
        );
    }

    #[test]
    fn excessive_components_force_zero() {
        let g = worked_example();
        let r = Reduction::new(&g, vec![0, 1, 2, 3], vec![1, 2, 3, 0]).unwrap();
        assert!(classify(&r, &g)
            .unwrap()
            .iter()
            .all(|c| c.kind.is_unicycle_like()));
        let r = Reduction::new(&g, vec![0, 1, 2], vec![1, 2, 3]).unwrap();
        assert_eq!(classify(&r, &g).unwrap()[0].kind, ComponentKind::Unicyclic);
        // triangle v1 v2 v3 plus e5 cut to a half-edge at v3: 3 vertices, 4 edges
        let r = Reduction::new(&g, vec![0, 1, 2], vec![1, 2, 3, 4]).unwrap();
        let comps = classify(&r, &g).unwrap();
        assert_eq!(comps[0].kind, ComponentKind::Excessive);
        assert_eq!(product_of_contributions(&comps), 0.0);
        assert!(det_reduction_combinatorial(&r, &g).is_err());
    }

    #[test]
    fn lipschitz_triangles() {
        let tri = |gains: [Quaternion; 3]| {
            GainGraph::from_edges(3, &[(0, 1, gains[0]), (1, 2, gains[1]), (2, 0, gains[2])])
                .unwrap()
        };
        let i = Quaternion::I;
        let one = Quaternion::ONE;
        let c = cfg();
        assert_eq!(det_laplacian_unit_gains(&tri([i, i, i]), &c).unwrap(), 2.0);
        assert_eq!(
            det_laplacian_unit_gains(&tri([one, one, -one]), &c).unwrap(),
            4.0
        );
        assert_eq!(
            det_laplacian_unit_gains(&tri([one, one, one]), &c).unwrap(),
            0.0
        );
        assert!((det_laplacian_direct(&tri([i, i, i]), &c).unwrap() - 2.0).abs() < 1e-9);
        assert!((det_laplacian_direct(&tri([one, one, -one]), &c).unwrap() - 4.0).abs() < 1e-9);
        assert!(matches!(
            det_laplacian_unit_gains(&worked_example(), &c),
            Err(Error::GainsNotInLipschitzUnits { edge: 0 })
        ));
    }
}
