//! Seeded random instances: quaternions, matrices and gain graphs.
//!
//! Graphs are a uniform labelled spanning tree (Prüfer code) plus extra
//! edges drawn uniformly from the non-edges, each with a random orientation.

use qgain_core::{GainGraph, QMatrix, Quaternion};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform on the unit 3-sphere: four standard normals, normalized.
pub fn unit_quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    loop {
        let c: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
        let q = Quaternion::from_components(c).expect("normals are finite");
        if q.norm() > 1e-6 {
            return q.normalized().expect("nonzero");
        }
    }
}

/// Components uniform in `[-1, 1)`.
pub fn quaternion<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    let c: [f64; 4] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
    Quaternion::from_components(c).expect("finite")
}

pub fn lipschitz_unit<R: Rng + ?Sized>(rng: &mut R) -> Quaternion {
    *Quaternion::LIPSCHITZ_UNITS.choose(rng).expect("nonempty")
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> QMatrix {
    let data = (0..rows * cols).map(|_| quaternion(rng)).collect();
    QMatrix::new(rows, cols, data).expect("length matches")
}

pub fn square_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> QMatrix {
    matrix(rng, n, n)
}

/// `B + B*` for a random square `B`.
pub fn hermitian_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> QMatrix {
    let b = square_matrix(rng, n);
    b.add(&b.conj_transpose()).expect("same shape")
}

/// Edges of a uniform labelled tree on `n` vertices.
pub fn tree_edges<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Connected graph with `n` vertices and `min(m, n(n-1)/2)` edges (at
/// least `n - 1`), gains from `gain(rng, from, to)`.
pub fn graph_with<R, F>(rng: &mut R, n: usize, m: usize, mut gain: F) -> GainGraph
where
    R: Rng + ?Sized,
    F: FnMut(&mut R, usize, usize) -> Quaternion,
{
    let mut pairs = tree_edges(rng, n);
    let mut present = vec![vec![false; n]; n];
    for &(a, b) in &pairs {
        present[a][b] = true;
        present[b][a] = true;
    }
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|&(a, b)| !present[a][b])
        .collect();
    while pairs.len() < m && !missing.is_empty() {
        let k = rng.random_range(0..missing.len());
        pairs.push(missing.swap_remove(k));
    }
    let edges: Vec<_> = pairs
        .into_iter()
        .map(|(a, b)| {
            let (from, to) = if rng.random_bool(0.5) { (a, b) } else { (b, a) };
            (from, to, gain(rng, from, to))
        })
        .collect();
    GainGraph::from_edges(n, &edges).expect("generated graphs are simple with unit gains")
}

pub fn unit_gain_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> GainGraph {
    graph_with(rng, n, m, |r, _, _| unit_quaternion(r))
}

pub fn lipschitz_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> GainGraph {
    graph_with(rng, n, m, |r, _, _| lipschitz_unit(r))
}

pub fn tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GainGraph {
    unit_gain_graph(rng, n, 0)
}

/// Balanced by construction: `φ(e_ij) = θ_i conj(θ_j)` for random unit
/// potentials `θ`.
pub fn balanced_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> GainGraph {
    let theta: Vec<Quaternion> = (0..n).map(|_| unit_quaternion(rng)).collect();
    graph_with(rng, n, m, |_, i, j| {
        (theta[i] * theta[j].conj()).normalized().expect("unit")
    })
}

/// Cycle on `n` vertices with edges `v_n → v_1` then `v_j → v_{j+1}`, in
/// that column order, and its gain read along `v_1 → v_2 → ⋯ → v_n → v_1`.
pub fn cycle<R: Rng + ?Sized>(rng: &mut R, n: usize) -> (GainGraph, Quaternion) {
    let gains: Vec<Quaternion> = (0..n).map(|_| unit_quaternion(rng)).collect();
    let mut edges = vec![(n - 1, 0, gains[n - 1])];
    edges.extend((0..n - 1).map(|j| (j, j + 1, gains[j])));
    let g = GainGraph::from_edges(n, &edges).expect("simple cycle");
    let closed: Vec<usize> = (0..n).chain([0]).collect();
    let phi = g.walk_gain(&closed).expect("cycle walk");
    (g, phi)
}

/// A `len`-cycle on vertices `0..len` with `pendants` further vertices
/// hung off as trees. Returns the graph and the closed cycle walk.
pub fn unicyclic<R: Rng + ?Sized>(
    rng: &mut R,
    len: usize,
    pendants: usize,
) -> (GainGraph, Vec<usize>) {
    let n = len + pendants;
    let mut edges: Vec<(usize, usize, Quaternion)> = Vec::with_capacity(n);
    edges.push((len - 1, 0, unit_quaternion(rng)));
    for j in 0..len - 1 {
        edges.push((j, j + 1, unit_quaternion(rng)));
    }
    for v in len..n {
        let u = rng.random_range(0..v);
        let (from, to) = if rng.random_bool(0.5) { (u, v) } else { (v, u) };
        edges.push((from, to, unit_quaternion(rng)));
    }
    let g = GainGraph::from_edges(n, &edges).expect("simple unicyclic graph");
    (g, (0..len).chain([0]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_are_spanning() {
        let mut rng = seeded(7);
        for n in 1..=9 {
            let edges = tree_edges(&mut rng, n);
            assert_eq!(edges.len(), n.saturating_sub(1));
            let g = GainGraph::from_edges(
                n,
                &edges
                    .iter()
                    .map(|&(a, b)| (a, b, Quaternion::ONE))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            // a tree on n vertices with n-1 edges is connected iff acyclic
            assert!(g.enumerate_cycles(n, 1000).unwrap().is_empty());
        }
    }

    #[test]
    fn graph_sizes() {
        let mut rng = seeded(1);
        let g = unit_gain_graph(&mut rng, 5, 7);
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 7));
        let k4 = unit_gain_graph(&mut rng, 4, 100);
        assert_eq!(k4.edge_count(), 6);
        assert!(g.edges().iter().all(|e| e.gain.is_unit(1e-12)));
    }

    #[test]
    fn same_seed_same_graph() {
        let a = unit_gain_graph(&mut seeded(3), 6, 8);
        let b = unit_gain_graph(&mut seeded(3), 6, 8);
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn balanced_construction_is_balanced() {
        let mut rng = seeded(11);
        for _ in 0..10 {
            assert!(balanced_graph(&mut rng, 6, 9).is_balanced(1e-9));
        }
    }

    #[test]
    fn cycle_orientation() {
        let (g, phi) = cycle(&mut seeded(2), 5);
        assert_eq!((g.edges()[0].from, g.edges()[0].to), (4, 0));
        assert_eq!((g.edges()[3].from, g.edges()[3].to), (2, 3));
        let product = (0..5).fold(Quaternion::ONE, |acc, j| acc * g.edges()[(j + 1) % 5].gain);
        assert!(phi.approx_eq(&product, 1e-15));
    }
}
