//! Subset-sum to minimum-installation-path reduction.
//!
//! For values `a1..an` and target `b`, the gadget chains `n` choice blocks
//! between `s = u0` and `un`: block `i` offers an upper two-edge path with
//! weights `(L + 2ai, L + 2ai)` and a lower one with `(L + ai, L + 3ai)`,
//! and a final edge `un t` of weight `2b` closes the chain. With
//! `C = nL + 2*sum(a) + b`, the instance has a solution of cost at most `C`
//! exactly when some subset of the values sums to `b`.

use crate::graph::{GraphBuilder, VertexId, WeightedGraph};
use crate::greedy::{self, PathProfile};
use crate::rational::{rat, Rational};
use crate::solve::{self, SolveError};
use crate::subsetsum::SubsetSumInstance;
use num_bigint::BigInt;
use std::collections::BTreeSet;

/// The built gadget plus its bookkeeping constants.
#[derive(Debug, Clone)]
pub struct MipReduction {
    pub graph: WeightedGraph,
    /// Block separation constant, strictly larger than `2 * sum(a)`.
    pub l: u64,
    /// Decision budget `C = nL + 2*sum(a) + b`.
    pub budget: u64,
    /// Chain vertices `u0 = s, u1, ..., un`.
    pub chain: Vec<VertexId>,
    pub sink: VertexId,
}

fn big(x: u64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Builds `G(a1, ..., an, b)` with `L = 2 * sum(a) + 2`, the smallest even
/// integer satisfying the strict bound (and the one that reproduces the
/// worked four-block example bit for bit).
pub fn build(inst: &SubsetSumInstance) -> MipReduction {
    let n = inst.len();
    let sum: u64 = inst.sum();
    let l = 2 * sum + 2;
    let budget = (n as u64) * l + 2 * sum + inst.target();

    let mut b = GraphBuilder::new();
    let s = b.vertex("s");
    let mut chain = vec![s];
    for i in 1..=n {
        chain.push(b.vertex(&format!("u{i}")));
    }
    let t = b.vertex("t");
    b.terminals(s, t).unwrap();
    b.budget(big(budget));

    for (i, &a) in inst.values().iter().enumerate() {
        let up = b.vertex(&format!("up{}", i + 1));
        let lo = b.vertex(&format!("lo{}", i + 1));
        let (from, to) = (chain[i], chain[i + 1]);
        b.edge(from, up, big(l + 2 * a)).unwrap();
        b.edge(up, to, big(l + 2 * a)).unwrap();
        b.edge(from, lo, big(l + a)).unwrap();
        b.edge(lo, to, big(l + 3 * a)).unwrap();
    }
    b.edge(chain[n], t, big(2 * inst.target())).unwrap();

    let graph = b.build().unwrap();
    MipReduction { graph, l, budget, chain, sink: t }
}

/// All distinct `(opt, phi)` profiles over s-to-`u_i` paths, obtained by
/// folding the prolongation rule over the upper/lower choice at each block.
pub fn enumerate_profiles(red: &MipReduction, inst: &SubsetSumInstance, i: usize) -> BTreeSet<(Rational, Rational)> {
    assert!(i <= inst.len());
    let mut profiles = vec![PathProfile::empty()];
    for &a in &inst.values()[..i] {
        let mut next = Vec::with_capacity(profiles.len() * 2);
        for prof in &profiles {
            let upper = greedy::extend(&greedy::extend(prof, &big(red.l + 2 * a)), &big(red.l + 2 * a));
            let lower = greedy::extend(&greedy::extend(prof, &big(red.l + a)), &big(red.l + 3 * a));
            next.push(upper);
            next.push(lower);
        }
        profiles = next;
    }
    profiles.into_iter().map(|p| (p.opt, p.phi)).collect()
}

/// The profile set predicted by the characterizing lemma:
/// `(iL + 2*sum(a[..i]) + sum(a[I]), 2*sum(a[I]))` over subsets `I` of `[i]`.
pub fn predicted_profiles(red: &MipReduction, inst: &SubsetSumInstance, i: usize) -> BTreeSet<(Rational, Rational)> {
    let prefix: u64 = inst.values()[..i].iter().sum();
    let base = (i as u64) * red.l + 2 * prefix;
    let mut subset_sums = BTreeSet::new();
    subset_sums.insert(0u64);
    for &a in &inst.values()[..i] {
        let mut extended = subset_sums.clone();
        for s in &subset_sums {
            extended.insert(s + a);
        }
        subset_sums = extended;
    }
    subset_sums
        .into_iter()
        .map(|s| (big(base + s), big(2 * s)))
        .collect()
}

/// End-to-end check of the reduction on one instance: the subset-sum oracle
/// says yes exactly when the gadget solves within budget `C`.
pub fn verify_reduction(inst: &SubsetSumInstance) -> Result<bool, SolveError> {
    let red = build(inst);
    let result = solve::solve_exact_integer(&red.graph)?;
    let feasible = result.cost <= big(red.budget);
    Ok(inst.solve().is_some() == feasible)
}

/// Feasibility of the gadget at an arbitrary rational budget; used for the
/// integrality robustness checks (`C` vs `C + alpha`, `alpha` in `[0, 1)`).
pub fn feasible_at(red: &MipReduction, budget: &Rational) -> Result<bool, SolveError> {
    let result = solve::solve_exact_integer(&red.graph)?;
    Ok(result.cost <= *budget)
}

/// Convenience: `C + alpha` budgets for robustness sweeps.
pub fn budget_plus(red: &MipReduction, num: i64, den: i64) -> Rational {
    big(red.budget) + rat(num, den)
}

/// Fig-worthy example instance: values 2, 3, 3, 2 with target 7.
pub fn example_instance() -> SubsetSumInstance {
    SubsetSumInstance::new(vec![2, 3, 3, 2], 7).unwrap()
}
