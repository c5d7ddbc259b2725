//! Cross-checks between determinant routes and the randomized lemma suite.
//!
//! Every lemma runs on its own ChaCha stream derived from the suite seed, so
//! a report depends only on `(seed, trials)` and changing one lemma does not
//! shift the instances drawn by another.

use std::fmt::Display;

use log::debug;
use qgain_core::adjoint::complex_adjoint;
use qgain_core::det::{cdet, det_hermitian, principal_minor_sum, rdet};
use qgain_core::graph::cycle_gain_from_laplacian;
use qgain_core::reductions::{
    det_laplacian_combinatorial, det_laplacian_direct, det_laplacian_unit_gains,
    det_reduction_combinatorial, det_reduction_direct, enumerate_full_vertex_reductions,
};
use qgain_core::{Config, GainGraph, LaplacianRoute, QMatrix, Quaternion, Reduction};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::document::GraphDocument;
use crate::format::sig12;
use crate::random;

/// Permutation-sum routes are compared absolutely at this level.
pub const DEFAULT_TOL: f64 = 1e-9;

/// The elimination-based adjoint oracle is compared relatively at this level.
pub const ORACLE_RELATIVE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub graph_descriptor: String,
    #[serde(serialize_with = "optional_real")]
    pub det_direct: Option<f64>,
    #[serde(serialize_with = "optional_real")]
    pub det_combinatorial: Option<f64>,
    /// `det χ(L)`, the square of the Laplacian determinant.
    #[serde(serialize_with = "optional_real")]
    pub det_oracle_squared: Option<f64>,
    #[serde(serialize_with = "real")]
    pub max_discrepancy: f64,
    pub lemma_results: Vec<LemmaResult>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaResult {
    pub name: String,
    pub passed: bool,
    /// The offending input, present exactly when the lemma failed.
    pub witness: Option<Value>,
}

fn real<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&sig12(*x))
}

fn optional_real<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&sig12(*v)),
        None => s.serialize_none(),
    }
}

impl VerificationReport {
    fn empty(descriptor: String) -> Self {
        Self {
            graph_descriptor: descriptor,
            det_direct: None,
            det_combinatorial: None,
            det_oracle_squared: None,
            max_discrepancy: 0.0,
            lemma_results: Vec::new(),
            passed: true,
        }
    }

    /// Combine a graph cross-check with a lemma-suite report.
    pub fn merge(self, other: VerificationReport) -> Self {
        Self {
            graph_descriptor: format!("{}; {}", self.graph_descriptor, other.graph_descriptor),
            det_direct: self.det_direct.or(other.det_direct),
            det_combinatorial: self.det_combinatorial.or(other.det_combinatorial),
            det_oracle_squared: self.det_oracle_squared.or(other.det_oracle_squared),
            max_discrepancy: self.max_discrepancy.max(other.max_discrepancy),
            lemma_results: self
                .lemma_results
                .into_iter()
                .chain(other.lemma_results)
                .collect(),
            passed: self.passed && other.passed,
        }
    }

    pub fn failed_lemmas(&self) -> impl Iterator<Item = &LemmaResult> {
        self.lemma_results.iter().filter(|r| !r.passed)
    }

    pub fn lemma(&self, name: &str) -> Option<&LemmaResult> {
        self.lemma_results.iter().find(|r| r.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

pub fn describe(graph: &GainGraph) -> String {
    format!("n={}, m={}", graph.vertex_count(), graph.edge_count())
}

/// `det L(G)` three ways: the Hermitian determinant of `D - A`, the sum over
/// reductions, and the square root of the complex-adjoint determinant.
pub fn cross_check(graph: &GainGraph, tol: f64) -> qgain_core::Result<VerificationReport> {
    cross_check_with(graph, tol, &Config::default())
}

pub fn cross_check_with(
    graph: &GainGraph,
    tol: f64,
    cfg: &Config,
) -> qgain_core::Result<VerificationReport> {
    let direct = det_laplacian_direct(graph, cfg)?;
    let combinatorial = det_laplacian_combinatorial(graph, cfg)?;
    let l = graph.laplacian_checked(cfg.tol)?;
    let squared = complex_adjoint(&l).det()?;
    // L is positive semi-definite, so the nonnegative root is the right one
    let root = squared.re.max(0.0).sqrt();

    let route_gap = (direct - combinatorial).abs();
    let oracle_gap = (root - direct).abs().max((root - combinatorial).abs());
    let oracle_tol = tol.max(ORACLE_RELATIVE_TOL * direct.abs().max(1.0));
    let squared_tol = ORACLE_RELATIVE_TOL * squared.re.abs().max(1.0);
    let passed = route_gap <= tol && oracle_gap <= oracle_tol && squared.im.abs() <= squared_tol;
    debug!(
        "cross check {}: direct {direct}, combinatorial {combinatorial}, oracle {root}",
        describe(graph)
    );
    Ok(VerificationReport {
        det_direct: Some(direct),
        det_combinatorial: Some(combinatorial),
        det_oracle_squared: Some(squared.re),
        max_discrepancy: route_gap.max(oracle_gap),
        passed,
        ..VerificationReport::empty(describe(graph))
    })
}

/// Exhaustive balance test: every simple cycle is neutral.
pub fn balance_oracle(graph: &GainGraph, cfg: &Config) -> qgain_core::Result<bool> {
    let cycles = graph.enumerate_cycles(graph.vertex_count(), cfg.cycle_budget)?;
    Ok(cycles.iter().all(|c| c.is_neutral(cfg.tol)))
}

/// Determinant configurations used by the suite. Row and column
/// determinants are configured separately so a fault injected into one
/// reading can be caught by comparison with the other.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    pub row: Config,
    pub column: Config,
    pub tol: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            row: Config::default(),
            column: Config::default(),
            tol: DEFAULT_TOL,
        }
    }
}

pub fn run_lemma_suite(seed: u64, trials: usize) -> VerificationReport {
    run_lemma_suite_with(seed, trials, &SuiteConfig::default())
}

pub fn run_lemma_suite_with(seed: u64, trials: usize, cfg: &SuiteConfig) -> VerificationReport {
    let mut report = VerificationReport::empty(format!("lemma suite seed={seed} trials={trials}"));
    if trials == 0 {
        return report;
    }
    for (k, (name, lemma)) in LEMMAS.iter().enumerate() {
        let mut rng = random::seeded(seed);
        rng.set_stream(k as u64);
        let mut witness = None;
        for trial in 0..trials {
            match lemma(&mut rng, cfg) {
                Ok(gap) => report.max_discrepancy = report.max_discrepancy.max(gap),
                Err(w) => {
                    witness = Some(json!({ "trial": trial, "detail": w }));
                    break;
                }
            }
        }
        report.passed &= witness.is_none();
        report.lemma_results.push(LemmaResult {
            name: (*name).to_string(),
            passed: witness.is_none(),
            witness,
        });
    }
    report
}

/// `Ok(discrepancy)` on success, `Err(witness)` on failure.
type Check = Result<f64, Value>;
type Lemma = fn(&mut ChaCha8Rng, &SuiteConfig) -> Check;

const LEMMAS: &[(&str, Lemma)] = &[
    ("hermitian-determinant-equality", hermitian_equality),
    ("conjugation-duality", conjugation_duality),
    ("row-combination-invariance", row_combination),
    ("column-combination-invariance", column_combination),
    ("principal-minor-sum-equality", principal_minor_sums),
    ("gram-nonnegativity", gram_nonnegative),
    ("tree-lemma", tree_lemma),
    ("cycle-lemma", cycle_lemma),
    ("unicyclic-lemma", unicyclic_lemma),
    ("half-edge-tree-lemma", half_edge_tree_lemma),
    ("reduction-route-equality", reduction_routes),
    ("main-theorem", main_theorem),
    ("lipschitz-corollary", lipschitz_corollary),
    ("balanced-implies-singular", balanced_direction),
    ("unbalanced-implies-nonsingular", unbalanced_direction),
    (
        "cycle-gain-representative-invariance",
        cycle_representatives,
    ),
    ("laplacian-route-agreement", laplacian_routes),
    ("oracle-consistency", oracle_consistency),
];

pub fn matrix_json(a: &QMatrix) -> Value {
    let rows: Vec<Value> = (0..a.rows())
        .map(|i| Value::from_iter((0..a.cols()).map(|j| json!(a[(i, j)].components()))))
        .collect();
    Value::Array(rows)
}

pub fn graph_json(g: &GainGraph) -> Value {
    serde_json::to_value(GraphDocument::from_graph(g)).expect("documents always serialize")
}

fn fail(input: &Value, why: impl Display) -> Value {
    json!({ "input": input, "reason": why.to_string() })
}

fn within(gap: f64, tol: f64, input: &Value, what: &str) -> Check {
    if gap <= tol {
        Ok(gap)
    } else {
        Err(fail(
            input,
            format!("{what}: discrepancy {gap:e} exceeds {tol:e}"),
        ))
    }
}

fn edge_count_for<R: Rng + ?Sized>(rng: &mut R, n: usize, extra: usize) -> usize {
    rng.random_range(n..=n + extra)
}

fn hermitian_equality(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(2..=5);
    let a = random::hermitian_matrix(rng, n);
    let input = json!({ "matrix": matrix_json(&a) });
    let mut dets = Vec::with_capacity(2 * n);
    for i in 0..n {
        dets.push(rdet(&a, i, &s.row).map_err(|e| fail(&input, e))?);
        dets.push(cdet(&a, i, &s.column).map_err(|e| fail(&input, e))?);
    }
    let spread = dets
        .iter()
        .flat_map(|p| dets.iter().map(move |q| p.max_abs_diff(q)))
        .fold(0.0, f64::max);
    let residue = dets.iter().map(Quaternion::im_norm).fold(0.0, f64::max);
    within(
        spread.max(residue),
        s.tol,
        &input,
        "row/column determinants",
    )
}

fn conjugation_duality(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(1..=4);
    let a = random::square_matrix(rng, n);
    let input = json!({ "matrix": matrix_json(&a) });
    let at = a.conj_transpose();
    let mut gap: f64 = 0.0;
    for i in 0..n {
        let lhs = rdet(&at, i, &s.row).map_err(|e| fail(&input, e))?;
        let rhs = cdet(&a, i, &s.column).map_err(|e| fail(&input, e))?.conj();
        gap = gap.max(lhs.max_abs_diff(&rhs));
    }
    within(gap, s.tol, &input, "rdet(A*) against conj cdet(A)")
}

fn combination_terms(rng: &mut ChaCha8Rng, n: usize, skip: usize) -> Vec<(Quaternion, usize)> {
    (0..n)
        .filter(|&k| k != skip)
        .map(|k| (random::quaternion(rng), k))
        .collect()
}

fn row_combination(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(2..=5);
    let a = random::hermitian_matrix(rng, n);
    let i = rng.random_range(0..n);
    let terms = combination_terms(rng, n, i);
    let input = json!({ "matrix": matrix_json(&a), "row": i });
    let det = det_hermitian(&a, &s.row).map_err(|e| fail(&input, e))?;
    let b = a.add_left_row_combination(i, &terms);
    let r = rdet(&b, i, &s.row).map_err(|e| fail(&input, e))?;
    within(
        r.max_abs_diff(&Quaternion::real(det)),
        s.tol * det.abs().max(1.0),
        &input,
        "rdet after row combination",
    )
}

fn column_combination(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(2..=5);
    let a = random::hermitian_matrix(rng, n);
    let j = rng.random_range(0..n);
    let terms = combination_terms(rng, n, j);
    let input = json!({ "matrix": matrix_json(&a), "column": j });
    let det = det_hermitian(&a, &s.row).map_err(|e| fail(&input, e))?;
    let b = a.add_right_col_combination(j, &terms);
    let c = cdet(&b, j, &s.column).map_err(|e| fail(&input, e))?;
    within(
        c.max_abs_diff(&Quaternion::real(det)),
        s.tol * det.abs().max(1.0),
        &input,
        "cdet after column combination",
    )
}

fn principal_minor_sums(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let (r, c) = (rng.random_range(1..=4), rng.random_range(1..=4));
    let b = random::matrix(rng, r, c);
    let input = json!({ "matrix": matrix_json(&b) });
    let (left, right) = (b.gram_rows(), b.gram_cols());
    let mut gap: f64 = 0.0;
    for k in 1..=r.min(c) {
        let x = principal_minor_sum(&left, k, &s.row).map_err(|e| fail(&input, e))?;
        let y = principal_minor_sum(&right, k, &s.row).map_err(|e| fail(&input, e))?;
        gap = gap.max((x - y).abs() / x.abs().max(1.0));
    }
    within(gap, s.tol, &input, "principal minor sums of AA* and A*A")
}

fn gram_nonnegative(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let (r, c) = (rng.random_range(1..=4), rng.random_range(1..=4));
    let b = random::matrix(rng, r, c);
    let input = json!({ "matrix": matrix_json(&b) });
    let x = det_hermitian(&b.gram_rows(), &s.row).map_err(|e| fail(&input, e))?;
    let y = det_hermitian(&b.gram_cols(), &s.row).map_err(|e| fail(&input, e))?;
    let worst = x.min(y);
    if worst >= -s.tol {
        Ok(0.0)
    } else {
        Err(fail(&input, format!("negative Gram determinant {worst:e}")))
    }
}

fn tree_lemma(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(2..=7);
    let g = random::tree(rng, n);
    let input = graph_json(&g);
    let det = det_laplacian_direct(&g, &s.row).map_err(|e| fail(&input, e))?;
    within(det.abs(), s.tol, &input, "tree Laplacian determinant")
}

fn cycle_lemma(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(3..=7);
    let (g, phi) = random::cycle(rng, n);
    let input = graph_json(&g);
    let expected = (Quaternion::ONE - phi).norm_sqr();
    let det = det_laplacian_direct(&g, &s.row).map_err(|e| fail(&input, e))?;
    let r = rdet(&g.incidence_matrix(), 0, &s.row).map_err(|e| fail(&input, e))?;
    let gap = (det - expected)
        .abs()
        .max(r.max_abs_diff(&(Quaternion::ONE - phi)));
    within(gap, s.tol, &input, "cycle determinant against |1 - φ(C)|²")
}

fn unicyclic_lemma(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let len = rng.random_range(3..=5);
    let pendants = rng.random_range(0..=3);
    let (g, walk) = random::unicyclic(rng, len, pendants);
    let input = graph_json(&g);
    let phi = g.walk_gain(&walk).map_err(|e| fail(&input, e))?;
    let expected = (Quaternion::ONE - phi).norm_sqr();
    let det = det_laplacian_direct(&g, &s.row).map_err(|e| fail(&input, e))?;
    let comb = det_laplacian_combinatorial(&g, &s.row).map_err(|e| fail(&input, e))?;
    let gap = (det - expected).abs().max((comb - expected).abs());
    within(
        gap,
        s.tol,
        &input,
        "unicyclic determinant against its cycle",
    )
}

fn half_edge_tree_lemma(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(2..=7);
    let g = random::tree(rng, n);
    let input = graph_json(&g);
    let cols: Vec<usize> = (0..g.edge_count()).collect();
    let mut gap: f64 = 0.0;
    for leaf in (0..n).filter(|&v| g.degree(v) == 1) {
        let rows: Vec<usize> = (0..n).filter(|&v| v != leaf).collect();
        let r = Reduction::new(&g, rows, cols.clone()).map_err(|e| fail(&input, e))?;
        let direct = det_reduction_direct(&r, &g, &s.row).map_err(|e| fail(&input, e))?;
        let comb = det_reduction_combinatorial(&r, &g).map_err(|e| fail(&input, e))?;
        gap = gap.max((direct - 1.0).abs()).max((comb - 1.0).abs());
    }
    within(
        gap,
        s.tol,
        &input,
        "pendant-deleted tree determinant against 1",
    )
}

fn reduction_routes(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(3..=5);
    let m = edge_count_for(rng, n, 2);
    let g = random::unit_gain_graph(rng, n, m);
    let input = graph_json(&g);
    let mut gap: f64 = 0.0;
    for r in
        enumerate_full_vertex_reductions(&g, s.row.subset_budget).map_err(|e| fail(&input, e))?
    {
        let direct = det_reduction_direct(&r, &g, &s.row).map_err(|e| fail(&input, e))?;
        let comb = det_reduction_combinatorial(&r, &g).map_err(|e| fail(&input, e))?;
        gap = gap.max((direct - comb).abs());
    }
    within(gap, s.tol, &input, "reduction determinant routes")
}

fn main_theorem(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(3..=6);
    let m = edge_count_for(rng, n, 3);
    let g = random::unit_gain_graph(rng, n, m);
    let input = graph_json(&g);
    let direct = det_laplacian_direct(&g, &s.row).map_err(|e| fail(&input, e))?;
    let comb = det_laplacian_combinatorial(&g, &s.row).map_err(|e| fail(&input, e))?;
    within(
        (direct - comb).abs(),
        s.tol,
        &input,
        "direct against combinatorial",
    )
}

fn lipschitz_corollary(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(3..=6);
    let m = edge_count_for(rng, n, 3);
    let g = random::lipschitz_graph(rng, n, m);
    let input = graph_json(&g);
    let count = det_laplacian_unit_gains(&g, &s.row).map_err(|e| fail(&input, e))?;
    let direct = det_laplacian_direct(&g, &s.row).map_err(|e| fail(&input, e))?;
    let comb = det_laplacian_combinatorial(&g, &s.row).map_err(|e| fail(&input, e))?;
    let gap = (count - direct).abs().max((count - comb).abs());
    within(gap, s.tol, &input, "unit-gain count against both routes")
}

fn balance_checks(
    g: &GainGraph,
    s: &SuiteConfig,
    input: &Value,
) -> Result<(f64, bool, bool), Value> {
    let det = det_laplacian_direct(g, &s.row).map_err(|e| fail(input, e))?;
    let oracle = balance_oracle(g, &s.row).map_err(|e| fail(input, e))?;
    Ok((det, g.is_balanced(s.tol), oracle))
}

fn balanced_direction(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(3..=6);
    let m = edge_count_for(rng, n, 3);
    let g = random::balanced_graph(rng, n, m);
    let input = graph_json(&g);
    let (det, balanced, oracle) = balance_checks(&g, s, &input)?;
    if det.abs() <= s.tol && balanced && oracle {
        Ok(det.abs())
    } else {
        Err(fail(
            &input,
            format!("det {det:e}, is_balanced {balanced}, oracle {oracle}"),
        ))
    }
}

fn unbalanced_direction(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(3..=6);
    let m = edge_count_for(rng, n, 3);
    let g = certified_unbalanced(rng, n, m);
    let input = graph_json(&g);
    let (det, balanced, oracle) = balance_checks(&g, s, &input)?;
    if det > 1e-6 && !balanced && !oracle {
        Ok(0.0)
    } else {
        Err(fail(
            &input,
            format!("det {det:e}, is_balanced {balanced}, oracle {oracle}"),
        ))
    }
}

/// A random unit-gain graph with `m >= n` edges that has a cycle whose gain
/// is far from 1.
pub fn certified_unbalanced<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> GainGraph {
    let m = m.max(n);
    loop {
        let g = random::unit_gain_graph(rng, n, m);
        let certified = g
            .enumerate_cycles(n, u64::MAX)
            .expect("no budget")
            .iter()
            .any(|c| c.gain.dist(&Quaternion::ONE) > 1e-3);
        if certified {
            return g;
        }
    }
}

fn cycle_representatives(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(3..=6);
    let m = edge_count_for(rng, n, 3);
    let g = random::unit_gain_graph(rng, n, m);
    let input = graph_json(&g);
    let l = g.laplacian(LaplacianRoute::DegreeMinusAdjacency);
    let cycles = g
        .enumerate_cycles(n, s.row.cycle_budget)
        .map_err(|e| fail(&input, e))?;
    let mut gap: f64 = 0.0;
    for c in &cycles {
        let open = &c.vertices[..c.vertices.len() - 1];
        let len = open.len();
        for start in 0..len {
            for reverse in [false, true] {
                let walk: Vec<usize> = (0..=len)
                    .map(|t| {
                        let k = if reverse {
                            start + len * 2 - t
                        } else {
                            start + t
                        };
                        open[k % len]
                    })
                    .collect();
                let w = g.walk_gain(&walk).map_err(|e| fail(&input, e))?;
                let from_l = cycle_gain_from_laplacian(&l, &walk).map_err(|e| fail(&input, e))?;
                gap = gap
                    .max((w.re() - c.gain.re()).abs())
                    .max((w.im_norm() - c.gain.im_norm()).abs())
                    .max(w.max_abs_diff(&from_l));
            }
        }
    }
    within(gap, s.tol, &input, "cycle gain representatives")
}

fn laplacian_routes(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(2..=7);
    let m = edge_count_for(rng, n, 4);
    let g = random::unit_gain_graph(rng, n, m);
    let input = graph_json(&g);
    let a = g.laplacian(LaplacianRoute::DegreeMinusAdjacency);
    let b = g.laplacian(LaplacianRoute::IncidenceProduct);
    let gap = a.max_abs_diff(&b).unwrap_or(f64::INFINITY);
    within(gap, s.tol, &input, "D - A against H H*")
}

fn oracle_consistency(rng: &mut ChaCha8Rng, s: &SuiteConfig) -> Check {
    let n = rng.random_range(3..=6);
    let m = edge_count_for(rng, n, 3);
    let g = random::unit_gain_graph(rng, n, m);
    let input = graph_json(&g);
    let report = cross_check_with(&g, s.tol, &s.row).map_err(|e| fail(&input, e))?;
    if report.passed {
        Ok(report.max_discrepancy)
    } else {
        Err(fail(
            &input,
            format!("routes disagree by {:e}", report.max_discrepancy),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qgain_core::LeaderOrder;

    fn path(n: usize) -> GainGraph {
        let edges: Vec<_> = (0..n - 1).map(|j| (j, j + 1, Quaternion::J)).collect();
        GainGraph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn path_cross_check() {
        let report = cross_check(&path(4), DEFAULT_TOL).unwrap();
        assert!(report.passed);
        assert_eq!(report.det_direct, Some(0.0));
        assert_eq!(report.det_combinatorial, Some(0.0));
        assert!(report.det_oracle_squared.unwrap().abs() < 1e-12);
    }

    #[test]
    fn random_graph_cross_check() {
        let g = random::unit_gain_graph(&mut random::seeded(0), 5, 7);
        let report = cross_check(&g, DEFAULT_TOL).unwrap();
        assert!(report.passed);
        assert!(report.max_discrepancy <= 1e-9);
    }

    #[test]
    fn trees_pass_the_balance_oracle() {
        let g = random::tree(&mut random::seeded(4), 7);
        assert!(balance_oracle(&g, &Config::default()).unwrap());
    }

    #[test]
    fn zero_trials_is_vacuous() {
        let report = run_lemma_suite(0, 0);
        assert!(report.passed);
        assert!(report.lemma_results.is_empty());
    }

    #[test]
    fn suite_passes_and_is_deterministic() {
        let a = run_lemma_suite(0, 5);
        assert!(a.passed, "{}", a.to_json());
        assert_eq!(a.lemma_results.len(), LEMMAS.len());
        assert_eq!(a.to_json(), run_lemma_suite(0, 5).to_json());
    }

    #[test]
    fn scrambled_column_order_is_caught() {
        let cfg = SuiteConfig {
            column: Config::default().with_leader_order(LeaderOrder::SwappedLeaders),
            ..SuiteConfig::default()
        };
        let report = run_lemma_suite_with(0, 25, &cfg);
        assert!(!report.passed);
        let duality = report.lemma("conjugation-duality").unwrap();
        assert!(!duality.passed);
        assert!(duality.witness.as_ref().unwrap()["detail"]["input"]["matrix"].is_array());
    }

    #[test]
    fn report_json_uses_decimal_strings() {
        let report = cross_check(&path(3), DEFAULT_TOL).unwrap();
        let v: Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["detDirect"], "0");
        assert_eq!(v["graphDescriptor"], "n=3, m=2");
        assert!(v["lemmaResults"].as_array().unwrap().is_empty());
    }
}
