//! One-stop cross-checking: build a spec's graph, run the exact searches,
//! evaluate every applicable closed-form prediction and structural claim,
//! and report agreement. Checks outside a prediction's family come back
//! `OutOfScope`; exact searches that hit their work budget come back
//! `Skipped`. Neither counts against `pass`, only real disagreements do.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::ser::Serializer;
use serde::Serialize;

use crate::error::Error;
use crate::graph::{DistanceMatrix, IdealGraph};
use crate::metric::{
    is_resolving, metric_dimension_exact, predicted_basis, predicted_metric_dimension,
    WorkBudget, DEFAULT_SEARCH_BUDGET,
};
use crate::ring::RingSpec;
use crate::strong::{
    build_srg_definitional, build_srg_structural, independence_number,
    predicted_independence_number, predicted_max_independent_set, predicted_srg_vertex_count,
    predicted_strong_metric_dimension, srg_structure, strong_metric_dimension_oracle,
    SrgStructure,
};

/// A computed or predicted quantity that may be inapplicable (no covering
/// theorem) or not computed (budget ran out). Serializes as the plain value,
/// `"out_of_scope"`, or `"skipped"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scoped<T> {
    Value(T),
    OutOfScope,
    Skipped,
}

impl<T> Scoped<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Scoped::Value(t) => Some(t),
            _ => None,
        }
    }
}

impl<T: Serialize> Serialize for Scoped<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Scoped::Value(t) => t.serialize(s),
            Scoped::OutOfScope => s.serialize_str("out_of_scope"),
            Scoped::Skipped => s.serialize_str("skipped"),
        }
    }
}

fn scope<T>(r: Result<T, Error>) -> Result<Scoped<T>, Error> {
    match r {
        Ok(v) => Ok(Scoped::Value(v)),
        Err(Error::OutOfTheoremScope) => Ok(Scoped::OutOfScope),
        Err(Error::BudgetExceeded) => Ok(Scoped::Skipped),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// work cap for the exact metric dimension search
    pub metric_budget: u64,
    /// work cap for the independence number search
    pub mis_budget: u64,
    /// work cap for the brute-force strong dimension oracle
    pub sdim_oracle_budget: u64,
    /// the oracle enumerates subsets, so it only runs on graphs this small
    pub sdim_oracle_max_vertices: usize,
    pub run_sdim_oracle: bool,
    /// refuse specs with more vertices than this outright
    pub max_vertices: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            metric_budget: DEFAULT_SEARCH_BUDGET,
            mis_budget: DEFAULT_SEARCH_BUDGET,
            sdim_oracle_budget: DEFAULT_SEARCH_BUDGET,
            sdim_oracle_max_vertices: 16,
            run_sdim_oracle: true,
            max_vertices: 100_000,
        }
    }
}

/// Everything checked for one spec. `pass` is true when no in-scope,
/// actually-computed quantity disagreed; `failures` lists the rest.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub spec: Vec<u32>,
    pub spec_display: String,
    pub vertex_count: u64,
    pub edge_count: u64,
    pub connected: bool,
    pub diameter: Option<u32>,
    pub dim_exact: Scoped<u64>,
    pub dim_predicted: Scoped<u64>,
    pub basis_witness_valid: Scoped<bool>,
    pub srg_vertex_count: Scoped<u64>,
    pub srg_vertex_count_predicted: Scoped<u64>,
    pub srg_structural_matches: Scoped<bool>,
    pub srg_component_sizes: Scoped<Vec<usize>>,
    pub srg_components_expected: Scoped<bool>,
    pub beta_exact: Scoped<u64>,
    pub beta_predicted: Scoped<u64>,
    pub mis_witness_valid: Scoped<bool>,
    pub sdim_reduction: Scoped<u64>,
    pub sdim_oracle: Scoped<u64>,
    pub sdim_predicted: Scoped<u64>,
    pub distance_three_rule_holds: Scoped<bool>,
    pub pass: bool,
    pub failures: Vec<String>,
    pub timings_ms: BTreeMap<String, u128>,
}

fn push_if_mismatch<T: PartialEq + std::fmt::Debug>(
    failures: &mut Vec<String>,
    what: &str,
    exact: &Scoped<T>,
    predicted: &Scoped<T>,
) {
    if let (Scoped::Value(a), Scoped::Value(b)) = (exact, predicted) {
        if a != b {
            failures.push(format!("{what}: exact {a:?} != predicted {b:?}"));
        }
    }
}

fn push_if_false(failures: &mut Vec<String>, what: &str, flag: &Scoped<bool>) {
    if let Scoped::Value(false) = flag {
        failures.push(format!("{what} check failed"));
    }
}

/// The distance-3 characterization for product specs: two vertices lie at
/// distance exactly 3 precisely when both are all-or-nothing ideals and each
/// is the other's complement.
pub fn distance_three_rule(graph: &IdealGraph, dist: &DistanceMatrix) -> bool {
    let spec = graph.spec();
    let n = graph.vertex_count();
    let in_m: Vec<bool> = graph.vertices().iter().map(|v| v.is_in_m(spec)).collect();
    let comp: Vec<Option<usize>> = graph
        .vertices()
        .iter()
        .map(|v| v.complement(spec).ok().and_then(|c| graph.index_of(&c)))
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            let at_three = dist.raw(u, v) == 3;
            let rule = in_m[u] && in_m[v] && comp[u] == Some(v);
            if at_three != rule {
                return false;
            }
        }
    }
    true
}

fn expected_srg_shape(spec: &RingSpec, shape: &SrgStructure) -> Scoped<bool> {
    let m = spec.non_field_count();
    let n = spec.field_count();
    match (m, n) {
        (0, n) if n >= 3 => Scoped::Value(shape.field_pairs_isolated && shape.rest_connected),
        (m, 0) if m >= 2 => {
            if spec.chain_lengths() == [1, 1] {
                // the one disconnected member of the family
                Scoped::Value(shape.component_sizes == vec![3, 2, 2])
            } else {
                Scoped::Value(shape.component_sizes.len() == 1)
            }
        }
        (m, n) if m >= 1 && n >= 1 => {
            Scoped::Value(shape.field_pairs_isolated && shape.rest_connected)
        }
        _ => Scoped::OutOfScope,
    }
}

pub fn verify_spec(spec: &RingSpec, config: &VerifyConfig) -> Result<VerificationReport, Error> {
    let expected_vertices = spec.vertex_count();
    if expected_vertices > config.max_vertices {
        return Err(Error::OverflowingSpec {
            got: expected_vertices as u128,
            limit: config.max_vertices,
        });
    }
    let mut failures = Vec::new();
    let mut timings = BTreeMap::new();
    let total_start = Instant::now();

    let t = Instant::now();
    let graph = IdealGraph::build(spec);
    timings.insert("build".into(), t.elapsed().as_millis());
    if graph.vertex_count() as u64 != expected_vertices {
        failures.push(format!(
            "vertex count: built {} != formula {}",
            graph.vertex_count(),
            expected_vertices
        ));
    }

    let t = Instant::now();
    let dist = graph.distances();
    timings.insert("distances".into(), t.elapsed().as_millis());
    let connected = graph.vertex_count() > 0 && dist.all_finite();

    let diameter = if connected { Some(graph.diameter(&dist)?) } else { None };
    if let Some(d) = diameter {
        if d > 3 {
            failures.push(format!("diameter {d} exceeds 3 on a connected spec"));
        }
    }

    // metric dimension and its closed form
    let dim_predicted = scope(predicted_metric_dimension(spec))?;
    let dim_exact = if connected {
        let t = Instant::now();
        let mut budget = WorkBudget::new(config.metric_budget);
        let r = scope(
            metric_dimension_exact(&graph, &dist, &mut budget).map(|r| r.dimension as u64),
        )?;
        timings.insert("dim".into(), t.elapsed().as_millis());
        r
    } else {
        Scoped::Skipped
    };
    push_if_mismatch(&mut failures, "metric dimension", &dim_exact, &dim_predicted);

    let basis_witness_valid = if !connected {
        Scoped::Skipped
    } else {
        match predicted_basis(spec) {
            Err(Error::OutOfTheoremScope) => Scoped::OutOfScope,
            Err(e) => return Err(e),
            Ok(witness) => {
                let idx: Option<Vec<usize>> =
                    witness.iter().map(|v| graph.index_of(v)).collect();
                let ok = match idx {
                    None => false,
                    Some(idx) => {
                        dim_predicted.value() == Some(&(witness.len() as u64))
                            && is_resolving(&idx, &dist)?
                    }
                };
                Scoped::Value(ok)
            }
        }
    };
    push_if_false(&mut failures, "predicted basis", &basis_witness_valid);

    // strong resolving graph, its shape, and the strong dimension chain
    let mut srg_vertex_count = Scoped::Skipped;
    let mut srg_structural_matches = Scoped::Skipped;
    let mut srg_component_sizes = Scoped::Skipped;
    let mut srg_components_expected = Scoped::Skipped;
    let mut beta_exact = Scoped::Skipped;
    let mut mis_witness_valid = Scoped::Skipped;
    let mut sdim_reduction = Scoped::Skipped;
    let mut sdim_oracle = Scoped::Skipped;
    let mut distance_three_rule_holds = Scoped::Skipped;
    let srg_vertex_count_predicted = scope(predicted_srg_vertex_count(spec))?;
    let beta_predicted = scope(predicted_independence_number(spec))?;
    let sdim_predicted = scope(predicted_strong_metric_dimension(spec))?;

    if connected {
        distance_three_rule_holds = Scoped::Value(distance_three_rule(&graph, &dist));

        let t = Instant::now();
        let srg = build_srg_definitional(&graph, &dist)?;
        timings.insert("srg".into(), t.elapsed().as_millis());
        srg_vertex_count = Scoped::Value(srg.vertex_count() as u64);

        srg_structural_matches = match build_srg_structural(&graph) {
            Err(Error::OutOfTheoremScope) => Scoped::OutOfScope,
            Err(e) => return Err(e),
            Ok(structural) => Scoped::Value(
                structural.base_index() == srg.base_index()
                    && structural.edges() == srg.edges(),
            ),
        };

        let shape = srg_structure(&srg);
        srg_components_expected = expected_srg_shape(spec, &shape);
        srg_component_sizes = Scoped::Value(shape.component_sizes);

        let t = Instant::now();
        let mut budget = WorkBudget::new(config.mis_budget);
        beta_exact = scope(independence_number(&srg, &mut budget).map(|m| m.size as u64))?;
        timings.insert("beta".into(), t.elapsed().as_millis());
        if let Scoped::Value(beta) = beta_exact {
            sdim_reduction = Scoped::Value(srg.vertex_count() as u64 - beta);
        }

        mis_witness_valid = match predicted_max_independent_set(spec) {
            Err(Error::OutOfTheoremScope) => Scoped::OutOfScope,
            Err(e) => return Err(e),
            Ok(witness) => {
                let pos: Option<Vec<usize>> = witness
                    .iter()
                    .map(|v| {
                        graph
                            .index_of(v)
                            .and_then(|b| srg.base_index().iter().position(|&x| x == b))
                    })
                    .collect();
                let ok = match pos {
                    None => false,
                    Some(pos) => {
                        let independent = pos.iter().enumerate().all(|(i, &a)| {
                            pos[i + 1..].iter().all(|&b| !srg.adjacent(a, b))
                        });
                        independent
                            && beta_predicted.value() == Some(&(witness.len() as u64))
                    }
                };
                Scoped::Value(ok)
            }
        };

        if config.run_sdim_oracle
            && graph.vertex_count() <= config.sdim_oracle_max_vertices
        {
            let t = Instant::now();
            let mut budget = WorkBudget::new(config.sdim_oracle_budget);
            sdim_oracle = scope(
                strong_metric_dimension_oracle(&dist, &mut budget).map(|(k, _)| k as u64),
            )?;
            timings.insert("sdim_oracle".into(), t.elapsed().as_millis());
        }
    }

    push_if_mismatch(
        &mut failures,
        "srg vertex count",
        &srg_vertex_count,
        &srg_vertex_count_predicted,
    );
    push_if_false(&mut failures, "structural srg", &srg_structural_matches);
    push_if_false(&mut failures, "srg component shape", &srg_components_expected);
    push_if_mismatch(&mut failures, "independence number", &beta_exact, &beta_predicted);
    push_if_false(&mut failures, "predicted independent set", &mis_witness_valid);
    push_if_mismatch(
        &mut failures,
        "strong dimension vs closed form",
        &sdim_reduction,
        &sdim_predicted,
    );
    push_if_mismatch(
        &mut failures,
        "strong dimension vs oracle",
        &sdim_reduction,
        &sdim_oracle,
    );
    push_if_false(&mut failures, "distance-3 rule", &distance_three_rule_holds);

    timings.insert("total".into(), total_start.elapsed().as_millis());
    Ok(VerificationReport {
        spec: spec.chain_lengths().to_vec(),
        spec_display: spec.display(),
        vertex_count: graph.vertex_count() as u64,
        edge_count: graph.edge_count() as u64,
        connected,
        diameter,
        dim_exact,
        dim_predicted,
        basis_witness_valid,
        srg_vertex_count,
        srg_vertex_count_predicted,
        srg_structural_matches,
        srg_component_sizes,
        srg_components_expected,
        beta_exact,
        beta_predicted,
        mis_witness_valid,
        sdim_reduction,
        sdim_oracle,
        sdim_predicted,
        distance_three_rule_holds,
        pass: failures.is_empty(),
        failures,
        timings_ms: timings,
    })
}

/// The default verification sweep: every covered family small enough to
/// check exhaustively in one sitting.
#[derive(Clone, Debug)]
pub struct SweepGrid {
    /// field-only specs get 3..=this many fields
    pub max_fields: usize,
    /// chain-only specs get 2..=this many chains
    pub max_pir_components: usize,
    /// chain lengths range over 1..=this
    pub max_chain_len: u32,
    /// mixed specs get 1..=this many chains
    pub max_mixed_chains: usize,
    /// and 1..=this many fields
    pub max_mixed_fields: usize,
}

impl Default for SweepGrid {
    fn default() -> Self {
        SweepGrid {
            max_fields: 5,
            max_pir_components: 3,
            max_chain_len: 3,
            max_mixed_chains: 2,
            max_mixed_fields: 3,
        }
    }
}

impl SweepGrid {
    /// All grid specs in a fixed order: field products, then chain products
    /// in lexicographic length order, then mixed products likewise.
    pub fn specs(&self) -> Vec<RingSpec> {
        let mut out = Vec::new();
        for n in 3..=self.max_fields {
            out.push(RingSpec::new(vec![0; n]).expect("grid specs are small"));
        }
        for m in 2..=self.max_pir_components {
            for lengths in length_tuples(m, self.max_chain_len) {
                out.push(RingSpec::new(lengths).expect("grid specs are small"));
            }
        }
        for m in 1..=self.max_mixed_chains {
            for n in 1..=self.max_mixed_fields {
                for mut lengths in length_tuples(m, self.max_chain_len) {
                    lengths.extend(std::iter::repeat(0).take(n));
                    out.push(RingSpec::new(lengths).expect("grid specs are small"));
                }
            }
        }
        out
    }
}

fn length_tuples(m: usize, max_len: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![1u32; m];
    loop {
        out.push(cur.clone());
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < max_len {
                cur[i] += 1;
                break;
            }
            cur[i] = 1;
        }
    }
}

/// Verify every grid spec, streaming each finished report to `progress`.
pub fn sweep_with<F>(
    grid: &SweepGrid,
    config: &VerifyConfig,
    mut progress: F,
) -> Result<Vec<VerificationReport>, Error>
where
    F: FnMut(&VerificationReport),
{
    let mut out = Vec::new();
    for spec in grid.specs() {
        let report = verify_spec(&spec, config)?;
        progress(&report);
        out.push(report);
    }
    Ok(out)
}

pub fn sweep(grid: &SweepGrid, config: &VerifyConfig) -> Result<Vec<VerificationReport>, Error> {
    sweep_with(grid, config, |_| {})
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scoped_serialization() {
        assert_eq!(serde_json::to_string(&Scoped::Value(7u64)).unwrap(), "7");
        assert_eq!(
            serde_json::to_string(&Scoped::<u64>::OutOfScope).unwrap(),
            "\"out_of_scope\""
        );
        assert_eq!(serde_json::to_string(&Scoped::<u64>::Skipped).unwrap(), "\"skipped\"");
    }

    #[test]
    fn hexagon_report_passes_everywhere() {
        let spec = RingSpec::parse("F,F,F").unwrap();
        let r = verify_spec(&spec, &VerifyConfig::default()).unwrap();
        assert!(r.pass, "failures: {:?}", r.failures);
        assert_eq!(r.vertex_count, 6);
        assert_eq!(r.diameter, Some(3));
        assert_eq!(r.dim_exact, Scoped::Value(2));
        assert_eq!(r.dim_predicted, Scoped::Value(2));
        assert_eq!(r.basis_witness_valid, Scoped::Value(true));
        assert_eq!(r.srg_structural_matches, Scoped::Value(true));
        assert_eq!(r.beta_exact, Scoped::Value(3));
        assert_eq!(r.sdim_reduction, Scoped::Value(3));
        assert_eq!(r.sdim_oracle, Scoped::Value(3));
        assert_eq!(r.sdim_predicted, Scoped::Value(3));
        assert_eq!(r.distance_three_rule_holds, Scoped::Value(true));
        assert_eq!(r.srg_component_sizes, Scoped::Value(vec![2, 2, 2]));
    }

    #[test]
    fn single_chain_is_out_of_scope_but_consistent() {
        let spec = RingSpec::parse("C4").unwrap();
        let r = verify_spec(&spec, &VerifyConfig::default()).unwrap();
        assert!(r.pass, "failures: {:?}", r.failures);
        assert_eq!(r.dim_exact, Scoped::Value(3));
        assert_eq!(r.dim_predicted, Scoped::OutOfScope);
        assert_eq!(r.srg_structural_matches, Scoped::OutOfScope);
        assert_eq!(r.sdim_reduction, Scoped::Value(3));
        assert_eq!(r.sdim_oracle, Scoped::Value(3));
        assert_eq!(r.sdim_predicted, Scoped::OutOfScope);
    }

    #[test]
    fn disconnected_spec_reports_and_passes() {
        let spec = RingSpec::parse("F,F").unwrap();
        let r = verify_spec(&spec, &VerifyConfig::default()).unwrap();
        assert!(r.pass);
        assert!(!r.connected);
        assert_eq!(r.diameter, None);
        assert_eq!(r.dim_exact, Scoped::Skipped);
        assert_eq!(r.srg_vertex_count, Scoped::Skipped);
    }

    #[test]
    fn tiny_budget_reports_skipped_not_failed() {
        let spec = RingSpec::parse("F,F,F,F").unwrap();
        let config = VerifyConfig {
            metric_budget: 1,
            mis_budget: 1,
            sdim_oracle_budget: 1,
            ..VerifyConfig::default()
        };
        let r = verify_spec(&spec, &config).unwrap();
        assert!(r.pass, "failures: {:?}", r.failures);
        assert_eq!(r.dim_exact, Scoped::Skipped);
        assert_eq!(r.beta_exact, Scoped::Skipped);
        assert_eq!(r.sdim_oracle, Scoped::Skipped);
        // closed forms still present
        assert_eq!(r.dim_predicted, Scoped::Value(3));
        assert_eq!(r.sdim_predicted, Scoped::Value(9));
    }

    #[test]
    fn oversized_spec_is_refused() {
        let spec = RingSpec::parse("C3,C3,C3").unwrap();
        let config = VerifyConfig { max_vertices: 100, ..VerifyConfig::default() };
        assert!(matches!(
            verify_spec(&spec, &config),
            Err(Error::OverflowingSpec { got: 123, limit: 100 })
        ));
    }

    #[test]
    fn grid_has_expected_size_and_order() {
        let grid = SweepGrid::default();
        let specs = grid.specs();
        assert_eq!(specs.len(), 3 + (9 + 27) + (9 + 27));
        assert_eq!(specs[0].chain_lengths(), &[0, 0, 0]);
        assert_eq!(specs[3].chain_lengths(), &[1, 1]);
        assert_eq!(specs[11].chain_lengths(), &[3, 3]);
        assert_eq!(specs[12].chain_lengths(), &[1, 1, 1]);
        // mixed block starts after fields and chains
        assert_eq!(specs[39].chain_lengths(), &[1, 0]);
        let last = specs.last().unwrap();
        assert_eq!(last.chain_lengths(), &[3, 3, 0, 0, 0]);
        // every grid spec is connected and in scope for the strong formulas
        for s in &specs {
            assert!(predicted_strong_metric_dimension(s).is_ok(), "{:?}", s.chain_lengths());
        }
    }

    #[test]
    fn length_tuples_enumerate_lexicographically() {
        assert_eq!(
            length_tuples(2, 2),
            vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
        assert_eq!(length_tuples(1, 3), vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn report_serializes_to_json() {
        let spec = RingSpec::parse("C1,F").unwrap();
        let r = verify_spec(&spec, &VerifyConfig::default()).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["spec"], serde_json::json!([1, 0]));
        assert_eq!(doc["pass"], serde_json::json!(true));
        assert_eq!(doc["dim_exact"], serde_json::json!(1));
        assert_eq!(doc["sdim_predicted"], serde_json::json!(1));
    }
}
