//! Minimum-installation-path solvers.
//!
//! Four routes to the optimum:
//! * [`solve_bruteforce`] — enumerate every simple s-t path and take the best
//!   greedy profile. Exponential; the ground-truth oracle.
//! * [`solve_exact_integer`] — label-setting search over states
//!   `(vertex, residual)` for integer weights; pseudopolynomial and exact.
//! * [`solve_discretized`] — search over `(vertex, power in D)` for a finite
//!   power domain `D`; exact among assignments restricted to `D`, and valid
//!   for general activation coefficients.
//! * [`fptas`] — builds the `{k * eps * lambda / n}` domain around
//!   [`compute_lambda`] and runs the discretized search; the result is within
//!   `(1 + eps)` of optimal.

use crate::graph::{EdgeId, Path, PowerAssignment, VertexId, WeightedGraph};
use crate::greedy::{self, GreedyError, PathProfile};
use crate::rational::{ceil_int, is_integer, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("no s-t path exists in the graph")]
    NoPath,
    #[error("solver requires integer edge weights")]
    NonIntegerWeights,
    #[error("edge weight does not fit the integer solver's word size")]
    WeightTooLarge,
    #[error("power domain activates no s-t path")]
    NoFeasiblePath,
    #[error(transparent)]
    Greedy(#[from] GreedyError),
}

/// Optimum cost plus a witness path and an assignment activating it at
/// exactly that cost.
#[derive(Debug, Clone)]
pub struct SolveResult {
    pub cost: Rational,
    pub path: Path,
    pub assignment: PowerAssignment,
}

/// Finite sorted power domain; strictly increasing, starting at zero.
#[derive(Debug, Clone)]
pub struct PowerDomain {
    values: Vec<Rational>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DomainError {
    #[error("power domain must start at zero")]
    MissingZero,
    #[error("power domain must be strictly increasing")]
    NotIncreasing,
}

impl PowerDomain {
    pub fn new(values: Vec<Rational>) -> Result<Self, DomainError> {
        if values.first().map(Rational::is_zero) != Some(true) {
            return Err(DomainError::MissingZero);
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(DomainError::NotIncreasing);
        }
        Ok(PowerDomain { values })
    }

    /// Uniform grid `{0, step, 2*step, ..., count*step}`.
    pub fn grid(step: Rational, count: usize) -> Self {
        assert!(step.is_positive());
        let values = (0..=count)
            .map(|k| Rational::from_integer(BigInt::from(k)) * &step)
            .collect();
        PowerDomain { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Step size if the domain is the uniform grid `{k * step}`.
    fn uniform_step(&self) -> Option<Rational> {
        if self.values.len() < 2 {
            return None;
        }
        let step = self.values[1].clone();
        for (k, v) in self.values.iter().enumerate() {
            if *v != Rational::from_integer(BigInt::from(k)) * &step {
                return None;
            }
        }
        Some(step)
    }
}

/// Enumerates all simple s-t paths and returns the cheapest greedy profile.
pub fn solve_bruteforce(g: &WeightedGraph) -> Result<SolveResult, SolveError> {
    struct Dfs<'a> {
        g: &'a WeightedGraph,
        on_path: Vec<bool>,
        vertices: Vec<VertexId>,
        edges: Vec<EdgeId>,
        profiles: Vec<PathProfile>,
        best: Option<(Rational, Vec<VertexId>, Vec<EdgeId>)>,
    }

    impl Dfs<'_> {
        fn run(&mut self, v: VertexId) -> Result<(), SolveError> {
            if v == self.g.sink() {
                let opt = self.profiles.last().unwrap().opt.clone();
                if self.best.as_ref().map_or(true, |(b, _, _)| opt < *b) {
                    self.best = Some((opt, self.vertices.clone(), self.edges.clone()));
                }
                return Ok(());
            }
            for &eid in self.g.incident(v) {
                let e = self.g.edge(eid);
                if !e.has_unit_coefficients() {
                    return Err(GreedyError::NonUnitCoefficients.into());
                }
                let next = e.other(v);
                if self.on_path[next.0] {
                    continue;
                }
                let prof = greedy::extend(self.profiles.last().unwrap(), &e.weight);
                if let Some((best, _, _)) = &self.best {
                    if prof.opt >= *best {
                        continue; // opt is monotone along extensions
                    }
                }
                self.on_path[next.0] = true;
                self.vertices.push(next);
                self.edges.push(eid);
                self.profiles.push(prof);
                self.run(next)?;
                self.profiles.pop();
                self.edges.pop();
                self.vertices.pop();
                self.on_path[next.0] = false;
            }
            Ok(())
        }
    }

    let mut dfs = Dfs {
        g,
        on_path: vec![false; g.vertex_count()],
        vertices: vec![g.source()],
        edges: Vec::new(),
        profiles: vec![PathProfile::empty()],
        best: None,
    };
    dfs.on_path[g.source().0] = true;
    dfs.run(g.source())?;
    let (cost, vertices, edges) = dfs.best.ok_or(SolveError::NoPath)?;
    let path = Path { vertices, edges };
    let assignment = greedy::greedy_assign(&path, g)?;
    debug_assert_eq!(assignment.cost(), cost);
    Ok(SolveResult { cost, path, assignment })
}

/// Label-setting search over `(vertex, residual)` states for integer weights.
///
/// The residual is the power left at the current vertex; extending over an
/// edge of weight `w` costs `max(0, w - residual)` and leaves exactly that
/// amount at the next vertex. States are settled in lexicographic
/// `(cost, vertex, residual)` order, so witnesses are deterministic.
pub fn solve_exact_integer(g: &WeightedGraph) -> Result<SolveResult, SolveError> {
    let mut weights = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        if !e.has_unit_coefficients() {
            return Err(GreedyError::NonUnitCoefficients.into());
        }
        if !is_integer(&e.weight) {
            return Err(SolveError::NonIntegerWeights);
        }
        let w = e.weight.numer().to_u64().ok_or(SolveError::WeightTooLarge)?;
        weights.push(w);
    }
    let w_max = weights.iter().copied().max().unwrap_or(0);
    let n = g.vertex_count();
    let width = w_max as usize + 1;
    let state = |v: VertexId, r: u64| v.0 * width + r as usize;

    let mut dist: Vec<u128> = vec![u128::MAX; n * width];
    let mut prev: Vec<Option<(usize, EdgeId)>> = vec![None; n * width];
    let mut settled = vec![false; n * width];
    // (cost, vertex, residual)
    let mut heap: BinaryHeap<Reverse<(u128, usize, u64)>> = BinaryHeap::new();
    let start = state(g.source(), 0);
    dist[start] = 0;
    heap.push(Reverse((0, g.source().0, 0)));

    while let Some(Reverse((d, v, r))) = heap.pop() {
        let id = state(VertexId(v), r);
        if settled[id] {
            continue;
        }
        settled[id] = true;
        for &eid in g.incident(VertexId(v)) {
            let w = weights[eid.0];
            let step = w.saturating_sub(r);
            let next = g.edge(eid).other(VertexId(v));
            let nid = state(next, step);
            let nd = d + step as u128;
            if nd < dist[nid] {
                dist[nid] = nd;
                prev[nid] = Some((id, eid));
                heap.push(Reverse((nd, next.0, step)));
            }
        }
    }

    let sink = g.sink();
    let mut best: Option<(u128, u64)> = None;
    for r in 0..width as u64 {
        let d = dist[state(sink, r)];
        if d != u128::MAX && best.map_or(true, |(bd, _)| d < bd) {
            best = Some((d, r));
        }
    }
    let (opt, r) = best.ok_or(SolveError::NoPath)?;

    // Reconstruct the state walk and merge repeated vertices at max power;
    // merging never increases cost and keeps every walk edge activated.
    let mut merged = PowerAssignment::new();
    let mut walk_edges = Vec::new();
    let mut cur = state(sink, r);
    loop {
        let v = VertexId(cur / width);
        let power = (cur % width) as u64;
        merged.raise(v, Rational::from_integer(BigInt::from(power)));
        match prev[cur] {
            Some((p, eid)) => {
                walk_edges.push(eid);
                cur = p;
            }
            None => break,
        }
    }
    let path = g
        .bfs_path(&g.activated_edges(&merged), g.source(), sink)
        .expect("merged assignment must stay feasible");
    let assignment = greedy::greedy_assign(&path, g)?;
    let cost = assignment.cost();
    debug_assert_eq!(cost, Rational::from_integer(BigInt::from(opt)));
    Ok(SolveResult { cost, path, assignment })
}

/// Index of the first domain value `>= bound`, if any.
fn domain_lower_bound(values: &[Rational], bound: &Rational) -> Option<usize> {
    if !bound.is_positive() {
        return Some(0);
    }
    let mut lo = 0usize;
    let mut hi = values.len();
    while lo < hi {
        let mid = (lo + hi) / 2;
        if values[mid] < *bound {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    (lo < values.len()).then_some(lo)
}

/// Search over `(vertex, power index)` states. Entering a state with power
/// `D[k]` costs `D[k]`; an edge step is allowed when
/// `alpha * p(u) + beta * p(v) >= w`. A ladder move `(v, k) -> (v, k+1)`
/// paying `D[k+1] - D[k]` lets the search upgrade a vertex's power in place
/// instead of relaxing every feasible target power per edge.
pub fn solve_discretized(g: &WeightedGraph, d: &PowerDomain) -> Result<SolveResult, SolveError> {
    let values = d.values();
    if values.is_empty() {
        return Err(SolveError::NoFeasiblePath);
    }
    // Uniform grids admit integer costs: track the sum of grid indices and
    // multiply by the step at the end. Each ladder move adds exactly one.
    if let Some(step) = d.uniform_step() {
        let m = values.len();
        if g.has_unit_coefficients() {
            // k_min = max(0, ceil(w / step) - j), precomputed per edge.
            let thresholds: Vec<usize> = g
                .edges()
                .iter()
                .map(|e| {
                    ceil_int(&(&e.weight / &step))
                        .to_usize()
                        .unwrap_or(usize::MAX)
                })
                .collect();
            let kmin = move |eid: EdgeId, j: usize| -> Option<usize> {
                let k = thresholds[eid.0].saturating_sub(j);
                (k < m).then_some(k)
            };
            return dijkstra_states(
                g,
                values,
                0u64,
                |c, k| c + k as u64,
                |c, _| c + 1,
                kmin,
                |ksum| Rational::from_integer(BigInt::from(ksum)) * &step,
            );
        }
        let kmin = |eid: EdgeId, j: usize| -> Option<usize> {
            let e = g.edge(eid);
            let bound = (&e.weight - &e.alpha * &values[j]) / &e.beta;
            domain_lower_bound(values, &bound)
        };
        return dijkstra_states(
            g,
            values,
            0u64,
            |c, k| c + k as u64,
            |c, _| c + 1,
            kmin,
            |ksum| Rational::from_integer(BigInt::from(ksum)) * &step,
        );
    }
    let kmin = |eid: EdgeId, j: usize| -> Option<usize> {
        let e = g.edge(eid);
        let bound = (&e.weight - &e.alpha * &values[j]) / &e.beta;
        domain_lower_bound(values, &bound)
    };
    dijkstra_states(
        g,
        values,
        Rational::zero(),
        |c, k| c.clone() + &values[k],
        |c, k| c.clone() + (&values[k + 1] - &values[k]),
        kmin,
        |c| c,
    )
}

fn dijkstra_states<C>(
    g: &WeightedGraph,
    values: &[Rational],
    zero: C,
    enter: impl Fn(&C, usize) -> C,
    ladder: impl Fn(&C, usize) -> C,
    kmin: impl Fn(EdgeId, usize) -> Option<usize>,
    into_cost: impl Fn(C) -> Rational,
) -> Result<SolveResult, SolveError>
where
    C: Ord + Clone,
{
    let n = g.vertex_count();
    let m = values.len();
    let state = |v: usize, k: usize| v * m + k;

    let mut dist: Vec<Option<C>> = vec![None; n * m];
    let mut prev: Vec<Option<usize>> = vec![None; n * m];
    let mut settled = vec![false; n * m];
    let mut heap: BinaryHeap<Reverse<(C, usize, usize)>> = BinaryHeap::new();
    dist[state(g.source().0, 0)] = Some(zero.clone());
    heap.push(Reverse((zero, g.source().0, 0)));

    while let Some(Reverse((c, v, k))) = heap.pop() {
        let id = state(v, k);
        if settled[id] {
            continue;
        }
        settled[id] = true;
        let relax = |dist: &mut Vec<Option<C>>,
                         prev: &mut Vec<Option<usize>>,
                         heap: &mut BinaryHeap<Reverse<(C, usize, usize)>>,
                         to_v: usize,
                         to_k: usize,
                         nd: C| {
            let nid = state(to_v, to_k);
            if dist[nid].as_ref().map_or(true, |cur| nd < *cur) {
                dist[nid] = Some(nd.clone());
                prev[nid] = Some(id);
                heap.push(Reverse((nd, to_v, to_k)));
            }
        };
        if k + 1 < m {
            relax(&mut dist, &mut prev, &mut heap, v, k + 1, ladder(&c, k));
        }
        for &eid in g.incident(VertexId(v)) {
            if let Some(kv) = kmin(eid, k) {
                let next = g.edge(eid).other(VertexId(v));
                relax(&mut dist, &mut prev, &mut heap, next.0, kv, enter(&c, kv));
            }
        }
    }

    let sink = g.sink().0;
    let mut best: Option<(C, usize)> = None;
    for k in 0..m {
        if let Some(c) = &dist[state(sink, k)] {
            if best.as_ref().map_or(true, |(bc, _)| c < bc) {
                best = Some((c.clone(), k));
            }
        }
    }
    let (opt, k) = best.ok_or(SolveError::NoFeasiblePath)?;

    // Merge the state walk into a per-vertex max-power assignment, then read
    // an activated path off it. Merging never increases cost, so the merged
    // assignment restricted to the path prices at exactly the optimum.
    let mut merged = PowerAssignment::new();
    let mut cur = state(sink, k);
    loop {
        let v = VertexId(cur / m);
        merged.raise(v, values[cur % m].clone());
        match prev[cur] {
            Some(p) => cur = p,
            None => break,
        }
    }
    let path = g
        .bfs_path(&g.activated_edges(&merged), g.source(), g.sink())
        .ok_or(SolveError::NoFeasiblePath)?;
    let mut assignment = PowerAssignment::new();
    for &v in &path.vertices {
        assignment.set(v, merged.get(v));
    }
    let cost = into_cost(opt);
    debug_assert_eq!(assignment.cost(), cost, "walk merge must preserve the optimum");
    Ok(SolveResult { cost, path, assignment })
}

/// Smallest uniform power `lambda` whose all-vertices assignment activates an
/// s-t path; candidates are `w / (alpha + beta)` per edge.
pub fn compute_lambda(g: &WeightedGraph) -> Result<Rational, SolveError> {
    let mut keyed: Vec<(Rational, EdgeId)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| ((&e.weight / (&e.alpha + &e.beta)), EdgeId(i)))
        .collect();
    keyed.sort();

    let mut uf: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(uf: &mut Vec<usize>, x: usize) -> usize {
        let mut root = x;
        while uf[root] != root {
            root = uf[root];
        }
        let mut cur = x;
        while uf[cur] != root {
            let next = uf[cur];
            uf[cur] = root;
            cur = next;
        }
        root
    }

    for (key, eid) in keyed {
        let e = g.edge(eid);
        let (ru, rv) = (find(&mut uf, e.u.0), find(&mut uf, e.v.0));
        if ru != rv {
            uf[ru] = rv;
        }
        if find(&mut uf, g.source().0) == find(&mut uf, g.sink().0) {
            return Ok(key);
        }
    }
    Err(SolveError::NoPath)
}

/// FPTAS: solve over the domain `{k * eps * lambda / n | k = 0..ceil(n^2/eps)}`.
/// The returned cost is at most `(1 + eps)` times the optimum.
pub fn fptas(g: &WeightedGraph, eps: &Rational) -> Result<SolveResult, SolveError> {
    assert!(eps.is_positive(), "eps must be positive");
    let lambda = compute_lambda(g)?;
    let n = BigInt::from(g.vertex_count());
    let n_rat = Rational::from_integer(n.clone());
    let k_max = ceil_int(&(&n_rat * &n_rat / eps))
        .to_usize()
        .expect("domain size overflow");
    let step = eps * &lambda / &n_rat;
    let domain = PowerDomain::grid(step, k_max);
    solve_discretized(g, &domain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;
    use crate::rational::{rat, rat_int};
    use proptest::prelude::*;

    fn graph(edges: &[(&str, &str, i64)]) -> WeightedGraph {
        let mut b = GraphBuilder::new();
        let s = b.vertex("s");
        let t = b.vertex("t");
        b.terminals(s, t).unwrap();
        for (u, v, w) in edges {
            let (u, v) = (b.vertex(u), b.vertex(v));
            b.edge(u, v, rat_int(*w)).unwrap();
        }
        b.build().unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(solve_bruteforce(&graph(&[("s", "t", 6)])).unwrap().cost, rat_int(6));
        let two = graph(&[("s", "a", 3), ("a", "t", 5)]);
        assert_eq!(solve_bruteforce(&two).unwrap().cost, rat_int(5));
    }

    #[test]
    fn exact_integer_examples() {
        for w in [1, 4, 17] {
            assert_eq!(
                solve_exact_integer(&graph(&[("s", "t", w)])).unwrap().cost,
                rat_int(w)
            );
        }
        // Direct edge 10 loses to the detour: greedy on s-a-t gives 4 + 2.
        let star = graph(&[("s", "t", 10), ("s", "a", 4), ("a", "t", 6)]);
        let res = solve_exact_integer(&star).unwrap();
        assert_eq!(res.cost, rat_int(6));
        assert_eq!(res.cost, solve_bruteforce(&star).unwrap().cost);
        assert_eq!(res.path.vertices.len(), 3);
    }

    #[test]
    fn witnesses_are_feasible_and_priced_right() {
        let g = graph(&[("s", "a", 7), ("a", "t", 2), ("s", "b", 3), ("b", "t", 9)]);
        for res in [solve_bruteforce(&g).unwrap(), solve_exact_integer(&g).unwrap()] {
            assert!(g.is_feasible(&res.assignment));
            assert_eq!(res.assignment.cost(), res.cost);
            assert_eq!(res.path.first(), g.source());
            assert_eq!(res.path.last(), g.sink());
        }
    }

    #[test]
    fn disconnected_reports_no_path() {
        let mut b = GraphBuilder::new();
        let s = b.vertex("s");
        let t = b.vertex("t");
        let a = b.vertex("a");
        b.terminals(s, t).unwrap();
        b.edge(s, a, rat_int(1)).unwrap();
        let g = b.build().unwrap();
        assert_eq!(solve_bruteforce(&g).unwrap_err(), SolveError::NoPath);
        assert_eq!(solve_exact_integer(&g).unwrap_err(), SolveError::NoPath);
        assert_eq!(compute_lambda(&g).unwrap_err(), SolveError::NoPath);
    }

    #[test]
    fn non_integer_weights_rejected() {
        let mut b = GraphBuilder::new();
        let s = b.vertex("s");
        let t = b.vertex("t");
        b.terminals(s, t).unwrap();
        b.edge(s, t, rat(7, 2)).unwrap();
        let g = b.build().unwrap();
        assert_eq!(solve_exact_integer(&g).unwrap_err(), SolveError::NonIntegerWeights);
        // The brute-force route handles rationals fine.
        assert_eq!(solve_bruteforce(&g).unwrap().cost, rat(7, 2));
    }

    #[test]
    fn discretized_examples() {
        let g = graph(&[("s", "t", 4)]);
        let d = PowerDomain::new(vec![rat_int(0), rat_int(4)]).unwrap();
        assert_eq!(solve_discretized(&g, &d).unwrap().cost, rat_int(4));
        let d = PowerDomain::new(vec![rat_int(0), rat_int(1)]).unwrap();
        assert_eq!(solve_discretized(&g, &d).unwrap_err(), SolveError::NoFeasiblePath);
    }

    #[test]
    fn discretized_full_integer_domain_matches_exact() {
        let g = graph(&[("s", "a", 4), ("a", "t", 6), ("s", "t", 9), ("a", "b", 2), ("b", "t", 5)]);
        let w = 9usize;
        let d = PowerDomain::new((0..=w as i64).map(rat_int).collect()).unwrap();
        assert_eq!(
            solve_discretized(&g, &d).unwrap().cost,
            solve_exact_integer(&g).unwrap().cost
        );
    }

    #[test]
    fn discretized_handles_general_coefficients() {
        // alpha=2 on the s side halves the power s must supply.
        let mut b = GraphBuilder::new();
        let s = b.vertex("s");
        let t = b.vertex("t");
        b.terminals(s, t).unwrap();
        b.edge_with_coefficients(s, t, rat_int(8), rat_int(2), rat_int(1)).unwrap();
        let g = b.build().unwrap();
        let d = PowerDomain::new((0..=8).map(rat_int).collect()).unwrap();
        let res = solve_discretized(&g, &d).unwrap();
        assert_eq!(res.cost, rat_int(4));

        // Exhaustive oracle over the domain for a 3-vertex chain.
        let mut b = GraphBuilder::new();
        let s = b.vertex("s");
        let a = b.vertex("a");
        let t = b.vertex("t");
        b.terminals(s, t).unwrap();
        b.edge_with_coefficients(s, a, rat_int(6), rat_int(1), rat_int(3)).unwrap();
        b.edge_with_coefficients(a, t, rat_int(5), rat_int(2), rat_int(1)).unwrap();
        let g = b.build().unwrap();
        let vals: Vec<Rational> = (0..=6).map(rat_int).collect();
        let d = PowerDomain::new(vals.clone()).unwrap();
        let res = solve_discretized(&g, &d).unwrap();
        let mut best: Option<Rational> = None;
        for ps in 0..vals.len() {
            for pa in 0..vals.len() {
                for pt in 0..vals.len() {
                    let e1 = &vals[ps] + rat_int(3) * &vals[pa] >= rat_int(6);
                    let e2 = rat_int(2) * &vals[pa] + &vals[pt] >= rat_int(5);
                    if e1 && e2 {
                        let c = &vals[ps] + &vals[pa] + &vals[pt];
                        if best.as_ref().map_or(true, |b| c < *b) {
                            best = Some(c);
                        }
                    }
                }
            }
        }
        assert_eq!(res.cost, best.unwrap());
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(compute_lambda(&graph(&[("s", "t", 8)])).unwrap(), rat_int(4));
        assert_eq!(
            compute_lambda(&graph(&[("s", "a", 2), ("a", "t", 10)])).unwrap(),
            rat_int(5)
        );
        let triangle = graph(&[("s", "t", 10), ("s", "a", 4), ("a", "t", 6)]);
        assert_eq!(compute_lambda(&triangle).unwrap(), rat_int(3));
        // Oracle: test every w/2 candidate by connectivity.
        let g = &triangle;
        let mut best: Option<Rational> = None;
        for e in g.edges() {
            let cand = &e.weight / rat_int(2);
            let active: Vec<EdgeId> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, f)| f.weight <= rat_int(2) * &cand)
                .map(|(i, _)| EdgeId(i))
                .collect();
            if g.connects(&active, g.source(), g.sink())
                && best.as_ref().map_or(true, |b| cand < *b)
            {
                best = Some(cand);
            }
        }
        assert_eq!(best.unwrap(), rat_int(3));
    }

    #[test]
    fn fptas_single_edge() {
        let g = graph(&[("s", "t", 6)]);
        let res = fptas(&g, &rat_int(1)).unwrap();
        assert_eq!(res.cost, rat_int(6)); // 6 = 4 * (eps*lambda/n) with lambda=3, n=2
    }

    #[test]
    fn fptas_respects_bound_on_small_graphs() {
        let g = graph(&[("s", "a", 7), ("a", "t", 2), ("s", "b", 3), ("b", "t", 9), ("s", "t", 11)]);
        let opt = solve_exact_integer(&g).unwrap().cost;
        for eps in [rat_int(1), rat(1, 2), rat(1, 10)] {
            let res = fptas(&g, &eps).unwrap();
            assert!(res.cost >= opt);
            assert!(res.cost <= (rat_int(1) + &eps) * &opt, "eps={eps}");
            assert!(g.is_feasible(&res.assignment));
        }
    }

    #[test]
    fn lambda_bounds_hold() {
        let g = graph(&[("s", "a", 7), ("a", "t", 2), ("s", "b", 3), ("b", "t", 9)]);
        let lambda = compute_lambda(&g).unwrap();
        let opt = solve_exact_integer(&g).unwrap().cost;
        let n = rat_int(g.vertex_count() as i64);
        assert!(lambda <= opt);
        assert!(opt <= n * &lambda);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// Oracle equivalence on random connected multigraphs.
        #[test]
        fn exact_matches_bruteforce(
            n in 2usize..=6,
            extra in proptest::collection::vec((0usize..6, 0usize..6, 1i64..=20), 0..10),
        ) {
            let mut b = GraphBuilder::new();
            let vs: Vec<_> = (0..n).map(|i| b.vertex(&format!("v{i}"))).collect();
            b.terminals(vs[0], vs[n - 1]).unwrap();
            // spanning chain keeps s and t connected
            for i in 1..n {
                b.edge(vs[i - 1], vs[i], rat_int(((i * 7) % 19 + 1) as i64)).unwrap();
            }
            for (u, v, w) in extra {
                let (u, v) = (u % n, v % n);
                if u != v {
                    b.edge(vs[u], vs[v], rat_int(w)).unwrap();
                }
            }
            let g = b.build().unwrap();
            let exact = solve_exact_integer(&g).unwrap();
            let brute = solve_bruteforce(&g).unwrap();
            prop_assert_eq!(&exact.cost, &brute.cost);
            prop_assert!(g.is_feasible(&exact.assignment));
            // Lemma 2 bounds.
            let lambda = compute_lambda(&g).unwrap();
            prop_assert!(lambda <= exact.cost || exact.cost.is_zero());
            prop_assert!(exact.cost <= rat_int(g.vertex_count() as i64) * &lambda);
        }

        /// Refining the domain never increases the optimum.
        #[test]
        fn domain_monotonicity(ws in proptest::collection::vec(1i64..=12, 1..=4)) {
            let mut edges = vec![("s".to_string(), "t".to_string(), ws[0])];
            for (i, w) in ws.iter().enumerate().skip(1) {
                edges.push(("s".to_string(), format!("m{i}"), *w));
                edges.push((format!("m{i}"), "t".to_string(), *w));
            }
            let mut b = GraphBuilder::new();
            let s = b.vertex("s");
            let t = b.vertex("t");
            b.terminals(s, t).unwrap();
            for (u, v, w) in &edges {
                let (u, v) = (b.vertex(u), b.vertex(v));
                b.edge(u, v, rat_int(*w)).unwrap();
            }
            let g = b.build().unwrap();
            let coarse = PowerDomain::new((0..=6).map(|k| rat_int(2 * k)).collect()).unwrap();
            let fine = PowerDomain::new((0..=12).map(rat_int).collect()).unwrap();
            let c = solve_discretized(&g, &coarse).map(|r| r.cost);
            let f = solve_discretized(&g, &fine).map(|r| r.cost);
            match (c, f) {
                (Ok(c), Ok(f)) => prop_assert!(f <= c),
                (Ok(_), Err(_)) => prop_assert!(false, "refinement lost feasibility"),
                _ => {}
            }
        }
    }

    #[test]
    fn domain_validation() {
        assert_eq!(
            PowerDomain::new(vec![rat_int(1)]).unwrap_err(),
            DomainError::MissingZero
        );
        assert_eq!(
            PowerDomain::new(vec![rat_int(0), rat_int(3), rat_int(3)]).unwrap_err(),
            DomainError::NotIncreasing
        );
    }
}
