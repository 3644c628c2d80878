//! Strong metric dimension. Two vertices are mutually maximally distant
//! (MMD) when neither has a neighbor strictly farther from the other. The
//! strong resolving graph keeps only the vertices appearing in some MMD pair
//! and joins exactly those pairs; the strong metric dimension then equals
//! its vertex cover number, computed here as vertex count minus independence
//! number. Next to the definitional builder sits a structural one that
//! derives the same graph for the covered spec families straight from the
//! containment relation, without distances, so the two can be compared.

use serde::Serialize;

use crate::bits;
use crate::error::Error;
use crate::graph::{DistanceMatrix, IdealGraph};
use crate::metric::WorkBudget;
use crate::ring::{IdealVector, RingSpec};

/// Definitional MMD test on a connected graph.
pub fn mutually_maximally_distant(
    u: usize,
    v: usize,
    graph: &IdealGraph,
    dist: &DistanceMatrix,
) -> Result<bool, Error> {
    let n = graph.vertex_count();
    if u >= n {
        return Err(Error::BadIndex(u));
    }
    if v >= n || v == u {
        return Err(Error::BadIndex(v));
    }
    if !dist.all_finite() {
        return Err(Error::Disconnected);
    }
    Ok(mmd_unchecked(u, v, graph, dist))
}

fn mmd_unchecked(u: usize, v: usize, graph: &IdealGraph, dist: &DistanceMatrix) -> bool {
    let duv = dist.raw(u, v);
    graph.neighbors(u).iter().all(|&w| dist.raw(w as usize, v) <= duv)
        && graph.neighbors(v).iter().all(|&w| dist.raw(u, w as usize) <= duv)
}

#[derive(Serialize)]
struct SrgJson {
    base_spec: Vec<u32>,
    base_index: Vec<usize>,
    vertices: Vec<Vec<u32>>,
    edges: Vec<[usize; 2]>,
}

/// The strong resolving graph of an inclusion ideal graph. Vertices are the
/// base vertices with at least one MMD partner, in ascending base order;
/// `base_index` maps back to base vertex indices.
pub struct StrongResolvingGraph {
    spec: RingSpec,
    base_index: Vec<usize>,
    vectors: Vec<IdealVector>,
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl StrongResolvingGraph {
    fn from_edge_rule<F>(graph: &IdealGraph, included: Vec<usize>, rule: F) -> Self
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = included.len();
        let words = bits::words(n);
        let mut adj = vec![0u64; n * words];
        for a in 0..n {
            for b in a + 1..n {
                if rule(included[a], included[b]) {
                    bits::set(&mut adj[a * words..(a + 1) * words], b);
                    bits::set(&mut adj[b * words..(b + 1) * words], a);
                }
            }
        }
        let vectors = included.iter().map(|&i| graph.vertex(i).clone()).collect();
        StrongResolvingGraph {
            spec: graph.spec().clone(),
            base_index: included,
            vectors,
            n,
            words,
            adj,
        }
    }

    pub fn base_spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Base graph indices of the SRG vertices, ascending.
    pub fn base_index(&self) -> &[usize] {
        &self.base_index
    }

    pub fn vectors(&self) -> &[IdealVector] {
        &self.vectors
    }

    pub(crate) fn row(&self, a: usize) -> &[u64] {
        &self.adj[a * self.words..(a + 1) * self.words]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        bits::test(self.row(a), b)
    }

    pub fn degree(&self, a: usize) -> usize {
        bits::count(self.row(a))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            out.extend(bits::ones(self.row(a)).filter(|&b| b > a).map(|b| (a, b)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|a| self.degree(a)).sum::<usize>() / 2
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let a = comp[head];
                head += 1;
                for b in bits::ones(self.row(a)) {
                    if !seen[b] {
                        seen[b] = true;
                        comp.push(b);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph strong_resolving {\n");
        for (i, v) in self.vectors.iter().enumerate() {
            out.push_str(&format!("    v{} [label=\"{}\"];\n", i, v.render(&self.spec, "x")));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("    v{a} -- v{b};\n"));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        let doc = SrgJson {
            base_spec: self.spec.chain_lengths().to_vec(),
            base_index: self.base_index.clone(),
            vertices: self.vectors.iter().map(|v| v.levels().to_vec()).collect(),
            edges: self.edges().iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&doc).expect("srg json never fails to serialize")
    }
}

/// Strong resolving graph straight from the MMD definition.
pub fn build_srg_definitional(
    graph: &IdealGraph,
    dist: &DistanceMatrix,
) -> Result<StrongResolvingGraph, Error> {
    let n = graph.vertex_count();
    if n > 0 && !dist.all_finite() {
        return Err(Error::Disconnected);
    }
    let mut pair = vec![false; n * n];
    let mut partnered = vec![false; n];
    for u in 0..n {
        for v in u + 1..n {
            if mmd_unchecked(u, v, graph, dist) {
                pair[u * n + v] = true;
                partnered[u] = true;
                partnered[v] = true;
            }
        }
    }
    let included: Vec<usize> = (0..n).filter(|&u| partnered[u]).collect();
    Ok(StrongResolvingGraph::from_edge_rule(graph, included, |i, j| {
        pair[i.min(j) * n + i.max(j)]
    }))
}

/// The two base vertices without MMD partners when the spec is one chain
/// plus at least one field: the chain's minimal ideal extended by zeros, and
/// its maximal proper ideal extended by full fields.
fn isolated_vertices(spec: &RingSpec) -> Option<[IdealVector; 2]> {
    if spec.non_field_count() != 1 || spec.field_count() == 0 {
        return None;
    }
    let p = spec.non_field_positions()[0];
    let n1 = spec.chain_lengths()[p];
    let mut low = vec![0u32; spec.component_count()];
    low[p] = 1;
    let mut high: Vec<u32> = (0..spec.component_count()).map(|i| spec.top_level(i)).collect();
    high[p] = n1;
    Some([IdealVector::new(low), IdealVector::new(high)])
}

/// Strong resolving graph from the containment structure alone, for the
/// three covered families: three or more fields, two or more chains, or any
/// chains with at least one field. Vertices outside `M` (the all-or-nothing
/// ideals) pair up exactly when incomparable; pairs inside `M` when they are
/// complements or doubly incomparable (to the partner and its complement);
/// mixed pairs when incomparable to both the `M` member and its complement.
pub fn build_srg_structural(graph: &IdealGraph) -> Result<StrongResolvingGraph, Error> {
    let spec = graph.spec();
    let m = spec.non_field_count();
    let nf = spec.field_count();
    let covered = (m == 0 && nf >= 3) || (m >= 2 && nf == 0) || (m >= 1 && nf >= 1);
    if !covered {
        return Err(Error::OutOfTheoremScope);
    }
    let n = graph.vertex_count();
    let mut include = vec![true; n];
    if let Some(isolated) = isolated_vertices(spec) {
        for v in &isolated {
            include[graph.index_of(v).expect("isolated vertices are real vertices")] = false;
        }
    }
    let in_m: Vec<bool> = graph.vertices().iter().map(|v| v.is_in_m(spec)).collect();
    let comp: Vec<Option<usize>> = graph
        .vertices()
        .iter()
        .map(|v| v.complement(spec).ok().and_then(|c| graph.index_of(&c)))
        .collect();
    let included: Vec<usize> = (0..n).filter(|&i| include[i]).collect();
    let complement_of = |i: usize| comp[i].expect("vertices in M always have a complement");
    Ok(StrongResolvingGraph::from_edge_rule(graph, included, |i, j| {
        match (in_m[i], in_m[j]) {
            (true, true) => {
                comp[i] == Some(j)
                    || (!graph.adjacent(i, j) && !graph.adjacent(i, complement_of(j)))
            }
            (false, false) => !graph.adjacent(i, j),
            (false, true) => !graph.adjacent(i, j) && !graph.adjacent(i, complement_of(j)),
            (true, false) => !graph.adjacent(i, j) && !graph.adjacent(j, complement_of(i)),
        }
    }))
}

/// Component shape of an SRG, against the claim that each field contributes
/// an isolated complement pair and everything else hangs together.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SrgStructure {
    /// component sizes, descending
    pub component_sizes: Vec<usize>,
    /// every field's minimal ideal forms a 2-vertex component with its complement
    pub field_pairs_isolated: bool,
    /// the graph minus those pairs is empty or a single component
    pub rest_connected: bool,
}

pub fn srg_structure(srg: &StrongResolvingGraph) -> SrgStructure {
    let comps = srg.components();
    let mut component_sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
    component_sizes.sort_unstable_by(|a, b| b.cmp(a));

    let spec = srg.base_spec();
    let srg_index_of = |vec: &IdealVector| -> Option<usize> {
        srg.vectors.iter().position(|v| v == vec)
    };
    let mut pair_components: Vec<Vec<usize>> = Vec::new();
    let mut field_pairs_isolated = true;
    for q in spec.field_positions() {
        let x = spec.minimal_ideal(q).expect("field position");
        let xc = x.complement(spec).expect("minimal ideal has a complement");
        match (srg_index_of(&x), srg_index_of(&xc)) {
            (Some(a), Some(b)) => {
                let mut want = vec![a.min(b), a.max(b)];
                want.dedup();
                let comp = comps.iter().find(|c| c.contains(&a)).unwrap();
                if *comp != want || !srg.adjacent(a, b) {
                    field_pairs_isolated = false;
                } else {
                    pair_components.push(want);
                }
            }
            _ => field_pairs_isolated = false,
        }
    }
    let rest = comps.iter().filter(|c| !pair_components.contains(c)).count();
    SrgStructure { component_sizes, field_pairs_isolated, rest_connected: rest <= 1 }
}

/// Independence number search result: the maximum size together with the
/// lexicographically smallest witness of that size (SRG-local indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisResult {
    pub size: usize,
    pub witness: Vec<usize>,
}

/// Exact independence number by branch and bound, with a greedy clique
/// cover as the bound. The witness is rebuilt lexicographically afterwards.
pub fn independence_number(
    srg: &StrongResolvingGraph,
    budget: &mut WorkBudget,
) -> Result<MisResult, Error> {
    let n = srg.vertex_count();
    if n == 0 {
        return Ok(MisResult { size: 0, witness: Vec::new() });
    }
    let words = srg.words;
    let mut free = vec![0u64; words];
    bits::fill_range(&mut free, n);
    let mut best = greedy_independent(srg, budget)?;
    descend_max(srg, &mut free, 0, &mut best, budget)?;
    let witness = lex_min_independent(srg, best, budget)?;
    debug_assert_eq!(witness.len(), best);
    Ok(MisResult { size: best, witness })
}

fn greedy_independent(srg: &StrongResolvingGraph, budget: &mut WorkBudget) -> Result<usize, Error> {
    let mut free = vec![0u64; srg.words];
    bits::fill_range(&mut free, srg.n);
    let mut size = 0;
    while !bits::is_empty(&free) {
        budget.charge((srg.n * srg.words) as u64 + 1)?;
        let v = bits::ones(&free)
            .min_by_key(|&v| (bits::and_count(srg.row(v), &free), v))
            .unwrap();
        size += 1;
        bits::clear(&mut free, v);
        bits::and_not_assign(&mut free, srg.row(v));
    }
    Ok(size)
}

/// Number of cliques in a greedy clique partition of `free`; an upper bound
/// on the independence number of the induced subgraph.
fn clique_cover_bound(srg: &StrongResolvingGraph, free: &[u64]) -> usize {
    let mut rem = free.to_vec();
    let mut common = vec![0u64; srg.words];
    let mut cliques = 0;
    loop {
        let Some(u) = bits::ones(&rem).next() else { break };
        bits::clear(&mut rem, u);
        common.copy_from_slice(srg.row(u));
        bits::and_assign(&mut common, &rem);
        loop {
            let Some(v) = bits::ones(&common).next() else { break };
            bits::clear(&mut rem, v);
            bits::clear(&mut common, v);
            bits::and_assign(&mut common, srg.row(v));
        }
        cliques += 1;
    }
    cliques
}

fn descend_max(
    srg: &StrongResolvingGraph,
    free: &mut [u64],
    have: usize,
    best: &mut usize,
    budget: &mut WorkBudget,
) -> Result<(), Error> {
    let fc = bits::count(free);
    budget.charge((fc * srg.words * 3) as u64 + 1)?;
    if fc == 0 {
        if have > *best {
            *best = have;
        }
        return Ok(());
    }
    if have + fc <= *best || have + clique_cover_bound(srg, free) <= *best {
        return Ok(());
    }
    let pivot = bits::ones(free)
        .max_by_key(|&v| (bits::and_count(srg.row(v), free), srg.n - v))
        .unwrap();
    let mut taken = free.to_vec();
    bits::clear(&mut taken, pivot);
    bits::and_not_assign(&mut taken, srg.row(pivot));
    descend_max(srg, &mut taken, have + 1, best, budget)?;
    let mut skipped = free.to_vec();
    bits::clear(&mut skipped, pivot);
    descend_max(srg, &mut skipped, have, best, budget)
}

fn exists_independent(
    srg: &StrongResolvingGraph,
    free: &mut [u64],
    have: usize,
    target: usize,
    budget: &mut WorkBudget,
) -> Result<bool, Error> {
    if have >= target {
        return Ok(true);
    }
    let fc = bits::count(free);
    budget.charge((fc * srg.words * 3) as u64 + 1)?;
    if have + fc < target || have + clique_cover_bound(srg, free) < target {
        return Ok(false);
    }
    let pivot = bits::ones(free)
        .max_by_key(|&v| (bits::and_count(srg.row(v), free), srg.n - v))
        .unwrap();
    let mut taken = free.to_vec();
    bits::clear(&mut taken, pivot);
    bits::and_not_assign(&mut taken, srg.row(pivot));
    if exists_independent(srg, &mut taken, have + 1, target, budget)? {
        return Ok(true);
    }
    let mut skipped = free.to_vec();
    bits::clear(&mut skipped, pivot);
    exists_independent(srg, &mut skipped, have, target, budget)
}

fn lex_min_independent(
    srg: &StrongResolvingGraph,
    size: usize,
    budget: &mut WorkBudget,
) -> Result<Vec<usize>, Error> {
    let mut forced: Vec<usize> = Vec::with_capacity(size);
    let mut blocked = vec![0u64; srg.words];
    for v in 0..srg.n {
        if forced.len() == size {
            break;
        }
        if bits::test(&blocked, v) {
            continue;
        }
        let mut free = vec![0u64; srg.words];
        bits::fill_range(&mut free, srg.n);
        for i in 0..=v {
            bits::clear(&mut free, i);
        }
        bits::and_not_assign(&mut free, &blocked);
        bits::and_not_assign(&mut free, srg.row(v));
        if exists_independent(srg, &mut free, forced.len() + 1, size, budget)? {
            forced.push(v);
            for w in bits::ones(srg.row(v)) {
                bits::set(&mut blocked, w);
            }
        }
    }
    Ok(forced)
}

/// Strong metric dimension of a connected graph: SRG order minus its
/// independence number (the SRG vertex cover number).
pub fn strong_metric_dimension(
    graph: &IdealGraph,
    dist: &DistanceMatrix,
    budget: &mut WorkBudget,
) -> Result<usize, Error> {
    let srg = build_srg_definitional(graph, dist)?;
    let mis = independence_number(&srg, budget)?;
    Ok(srg.vertex_count() - mis.size)
}

/// A minimum strong resolving set: the SRG vertices outside the maximum
/// independent set, as base graph indices.
pub fn strong_resolving_witness(srg: &StrongResolvingGraph, mis: &MisResult) -> Vec<usize> {
    let drop: std::collections::HashSet<usize> = mis.witness.iter().copied().collect();
    (0..srg.vertex_count())
        .filter(|a| !drop.contains(a))
        .map(|a| srg.base_index[a])
        .collect()
}

/// Definition-level strong resolving test: every vertex pair has a set
/// member lying "beyond" one end, meaning one end sits on a shortest path
/// from the member to the other end. Pairs touching the set pass trivially.
pub fn is_strong_resolving_set(set: &[usize], dist: &DistanceMatrix) -> Result<bool, Error> {
    let n = dist.size();
    for &s in set {
        if s >= n {
            return Err(Error::BadIndex(s));
        }
    }
    if !dist.all_finite() {
        return Err(Error::Disconnected);
    }
    let mut in_set = vec![false; n];
    for &s in set {
        in_set[s] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if in_set[u] || in_set[v] {
                continue;
            }
            let duv = dist.raw(u, v);
            let resolved = set.iter().any(|&w| {
                let wu = dist.raw(w, u);
                let wv = dist.raw(w, v);
                wu == wv + duv || wv == wu + duv
            });
            if !resolved {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// First strong resolving set in ascending-size lexicographic subset order.
/// Exhaustive, so only viable for small graphs; the budget is the fuse.
pub fn strong_metric_dimension_oracle(
    dist: &DistanceMatrix,
    budget: &mut WorkBudget,
) -> Result<(usize, Vec<usize>), Error> {
    let n = dist.size();
    if !dist.all_finite() {
        return Err(Error::Disconnected);
    }
    fn combos(
        n: usize,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        dist: &DistanceMatrix,
        budget: &mut WorkBudget,
    ) -> Result<Option<Vec<usize>>, Error> {
        if cur.len() == k {
            budget.charge((n * n / 4 + k + 1) as u64)?;
            return Ok(if is_strong_resolving_set(cur, dist)? { Some(cur.clone()) } else { None });
        }
        for v in start..n {
            cur.push(v);
            if let Some(hit) = combos(n, k, v + 1, cur, dist, budget)? {
                return Ok(Some(hit));
            }
            cur.pop();
        }
        Ok(None)
    }
    for k in 0..=n {
        if let Some(set) = combos(n, k, 0, &mut Vec::new(), dist, budget)? {
            return Ok((k, set));
        }
    }
    unreachable!("the full vertex set strongly resolves every pair");
}

/// Closed-form independence number of the SRG for the covered families.
pub fn predicted_independence_number(spec: &RingSpec) -> Result<u64, Error> {
    let m = spec.non_field_count() as u64;
    let n = spec.field_count() as u64;
    let sum: u64 = spec.chain_lengths().iter().map(|&x| x as u64).sum();
    match (m, n) {
        (0, n) if n >= 3 => Ok(2 * n - 3),
        (m, 0) if m >= 2 => Ok(sum + m - 1),
        (1, n) if n >= 1 => Ok(2 * n + sum - 2),
        (m, n) if m >= 2 && n >= 1 => Ok(sum + 2 * n + m - 1),
        _ => Err(Error::OutOfTheoremScope),
    }
}

/// Closed-form SRG order for the covered families. Everything stays except
/// the two isolated vertices of the one-chain-plus-fields family.
pub fn predicted_srg_vertex_count(spec: &RingSpec) -> Result<u64, Error> {
    let m = spec.non_field_count();
    let n = spec.field_count();
    match (m, n) {
        (0, n) if n >= 3 => Ok(spec.vertex_count()),
        (m, 0) if m >= 2 => Ok(spec.vertex_count()),
        (1, n) if n >= 1 => Ok(spec.vertex_count() - 2),
        (m, n) if m >= 2 && n >= 1 => Ok(spec.vertex_count()),
        _ => Err(Error::OutOfTheoremScope),
    }
}

/// Closed-form strong metric dimension for the covered families.
pub fn predicted_strong_metric_dimension(spec: &RingSpec) -> Result<u64, Error> {
    let m = spec.non_field_count() as u64;
    let n = spec.field_count() as u64;
    let sum: u64 = spec.chain_lengths().iter().map(|&x| x as u64).sum();
    let chain_product: u64 = spec
        .chain_lengths()
        .iter()
        .filter(|&&x| x > 0)
        .map(|&x| x as u64 + 2)
        .product();
    match (m, n) {
        (0, n) if n >= 3 => Ok((1u64 << n) - 2 * n + 1),
        (m, 0) if m >= 2 => Ok(chain_product - sum - m - 1),
        (1, n) if n >= 1 => Ok((sum + 2) * (1u64 << n) - 2 * n - sum - 2),
        (m, n) if m >= 2 && n >= 1 => Ok(chain_product * (1u64 << n) - sum - 2 * n - m - 1),
        _ => Err(Error::OutOfTheoremScope),
    }
}

/// An explicit maximum independent set of the SRG matching
/// `predicted_independence_number`, sorted lexicographically.
pub fn predicted_max_independent_set(spec: &RingSpec) -> Result<Vec<IdealVector>, Error> {
    let m = spec.non_field_count();
    let n = spec.field_count();
    let chains = spec.non_field_positions();
    let fields = spec.field_positions();
    let width = spec.component_count();
    let mut out: Vec<IdealVector> = Vec::new();

    // one stair per non-trivial ideal of each chain: zeros before it, the
    // full component after it, fields zeroed
    let staircase = |out: &mut Vec<IdealVector>| {
        for (ci, &p) in chains.iter().enumerate() {
            for k in 1..=spec.chain_lengths()[p] {
                let mut lv = vec![0u32; width];
                lv[p] = k;
                for &later in &chains[ci + 1..] {
                    lv[later] = spec.top_level(later);
                }
                out.push(IdealVector::new(lv));
            }
        }
    };
    // full-component tails over the chains, fields zeroed
    let suffix_tops = |out: &mut Vec<IdealVector>| {
        for start in 1..chains.len() {
            let mut lv = vec![0u32; width];
            for &p in &chains[start..] {
                lv[p] = spec.top_level(p);
            }
            out.push(IdealVector::new(lv));
        }
    };
    // top stair of the first chain widened by growing field prefixes
    let field_prefixes = |out: &mut Vec<IdealVector>, prefix_sizes: std::ops::Range<usize>| {
        for j in prefix_sizes {
            let mut lv = vec![0u32; width];
            lv[chains[0]] = spec.chain_lengths()[chains[0]];
            for &p in &chains[1..] {
                lv[p] = spec.top_level(p);
            }
            for &q in &fields[..j] {
                lv[q] = 1;
            }
            out.push(IdealVector::new(lv));
        }
    };

    match (m, n) {
        (0, n) if n >= 3 => {
            for &q in &fields {
                out.push(spec.minimal_ideal(q).unwrap());
            }
            // nested field prefixes of length 2..=n-2
            for j in 2..n - 1 {
                let mut lv = vec![0u32; width];
                for &q in &fields[..j] {
                    lv[q] = 1;
                }
                out.push(IdealVector::new(lv));
            }
        }
        (m, 0) if m >= 2 => {
            staircase(&mut out);
            suffix_tops(&mut out);
        }
        (1, n) if n >= 1 => {
            let p = chains[0];
            for k in 2..=spec.chain_lengths()[p] {
                let mut lv = vec![0u32; width];
                lv[p] = k;
                out.push(IdealVector::new(lv));
            }
            field_prefixes(&mut out, 1..n);
            for &q in &fields {
                out.push(spec.minimal_ideal(q).unwrap());
            }
        }
        (m, n) if m >= 2 && n >= 1 => {
            staircase(&mut out);
            suffix_tops(&mut out);
            field_prefixes(&mut out, 1..n + 1);
            for &q in &fields {
                out.push(spec.minimal_ideal(q).unwrap());
            }
        }
        _ => return Err(Error::OutOfTheoremScope),
    }
    out.sort();
    Ok(out)
}
