//! Batch cross-checks between the representations.
//!
//! The exhaustive sweep runs over every digraph on up to four vertices; the
//! randomized sweep over seeded reflexive graphs. Instances are checked in
//! parallel and reported in instance order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::biarc::{biarc_from_min_ordering, ordering_generated, realize_biarc};
use crate::error::Result;
use crate::generate::random_reflexive_graph;
use crate::graph::{digraph_from_code, enumerate_digraphs, Digraph, MAX_EXHAUSTIVE_N};
use crate::interval::{min_ordering_from_signed, realize_signed, signed_from_min_ordering};
use crate::matrix::permutations;
use crate::obstruction::{find_invertible_pair, lekkerkerker_boland, IntervalVerdict};
use crate::ordering::{find_min_ordering, verify_min_ordering, verify_via_extrema, VertexOrdering};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// `n` and adjacency code for exhaustive instances; `n` and sample index
    /// for randomized ones.
    pub n: usize,
    pub instance: u64,
    pub check: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub instances: u64,
    pub with_min_ordering: u64,
    pub failures: Vec<Failure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: SweepReport) {
        self.instances += other.instances;
        self.with_min_ordering += other.with_min_ordering;
        self.failures.extend(other.failures);
    }
}

/// Checks the recognition equivalences on one digraph; returns whether a
/// min ordering exists and the names of failed checks.
pub fn check_digraph(h: &Digraph) -> (bool, Vec<String>) {
    let mut failed = Vec::new();
    let n = h.vertex_count();
    let found = find_min_ordering(h);

    let all_orders = permutations(n);
    let brute = all_orders.iter().any(|p| {
        let ord = VertexOrdering::new(p.clone()).expect("permutation");
        matches!(verify_min_ordering(h, &ord), Ok(None))
    });
    if brute != found.is_some() {
        failed.push("search disagrees with exhaustive ordering scan".into());
    }
    for p in &all_orders {
        let ord = VertexOrdering::new(p.clone()).expect("permutation");
        let direct = verify_min_ordering(h, &ord).map(|v| v.is_none());
        let via = verify_via_extrema(h, &ord).map(|v| v.is_none());
        if direct != via {
            failed.push(format!("extrema characterisation disagrees on ordering {p:?}"));
            break;
        }
    }

    if let Some(ord) = &found {
        match signed_from_min_ordering(h, ord) {
            Ok(model) if realize_signed(&model) == *h => match min_ordering_from_signed(&model) {
                Ok(back) if back == *ord => {}
                _ => failed.push("signed model does not return the ordering".into()),
            },
            _ => failed.push("signed-interval round trip".into()),
        }
        match biarc_from_min_ordering(h, ord) {
            Ok(model) if realize_biarc(&model) == *h => {
                if ordering_generated(&model).ok().as_ref() != Some(ord) {
                    failed.push("bi-arc model does not generate the ordering".into());
                }
            }
            _ => failed.push("bi-arc round trip".into()),
        }
    }
    (found.is_some(), failed)
}

/// Every digraph on `1..=max_n` vertices.
pub fn exhaustive(max_n: usize) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    for n in 1..=max_n {
        let count = enumerate_digraphs(n)?.count() as u64;
        debug_assert!(n <= MAX_EXHAUSTIVE_N);
        let results: Vec<(bool, Vec<String>)> = (0..count)
            .into_par_iter()
            .map(|code| check_digraph(&digraph_from_code(n, code)))
            .collect();
        for (code, (has, failed)) in results.into_iter().enumerate() {
            report.instances += 1;
            report.with_min_ordering += u64::from(has);
            report.failures.extend(failed.into_iter().map(|check| Failure {
                n,
                instance: code as u64,
                check,
            }));
        }
    }
    Ok(report)
}

/// Min ordering ⇔ no forbidden structure ⇔ no invertible pair, on one
/// reflexive graph.
pub fn check_reflexive_graph(h: &Digraph) -> (bool, Vec<String>) {
    let mut failed = Vec::new();
    let ordered = find_min_ordering(h).is_some();
    match lekkerkerker_boland(h) {
        Ok(IntervalVerdict::Interval) if !ordered => failed.push("no forbidden structure but no min ordering".into()),
        Ok(IntervalVerdict::Obstructed { .. }) if ordered => {
            failed.push("forbidden structure but a min ordering exists".into())
        }
        Ok(_) => {}
        Err(e) => failed.push(format!("forbidden-structure check failed: {e}")),
    }
    match find_invertible_pair(h) {
        Ok(Some(ip)) if ordered || !ip.is_valid(h) => failed.push("invertible pair disagrees".into()),
        Ok(None) if !ordered => failed.push("no invertible pair but no min ordering".into()),
        Ok(_) => {}
        Err(e) => failed.push(format!("invertible pair search failed: {e}")),
    }
    (ordered, failed)
}

/// `samples` seeded reflexive graphs with `n` drawn from `1..=max_n` and
/// edge density from {0.3, 0.5, 0.7}.
pub fn randomized(max_n: usize, samples: u64, seed: u64) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<(usize, Digraph)> = (0..samples)
        .map(|_| {
            let n = rng.gen_range(1..=max_n.max(1));
            let p = [0.3, 0.5, 0.7][rng.gen_range(0..3)];
            (n, random_reflexive_graph(&mut rng, n, p))
        })
        .collect();
    let results: Vec<(bool, Vec<String>)> = graphs.par_iter().map(|(_, g)| check_reflexive_graph(g)).collect();
    let mut report = SweepReport::default();
    for (i, ((n, _), (has, failed))) in graphs.iter().zip(results).enumerate() {
        report.instances += 1;
        report.with_min_ordering += u64::from(has);
        report.failures.extend(failed.into_iter().map(|check| Failure {
            n: *n,
            instance: i as u64,
            check,
        }));
    }
    report
}

/// Both sweeps together.
pub fn full(max_exhaustive_n: usize, max_random_n: usize, samples: u64, seed: u64) -> Result<SweepReport> {
    let mut report = exhaustive(max_exhaustive_n)?;
    report.absorb(randomized(max_random_n, samples, seed));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_small() {
        let r = exhaustive(2).unwrap();
        assert_eq!(r.instances, 2 + 16);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn exhaustive_refuses_large() {
        assert!(exhaustive(5).is_err());
    }

    #[test]
    fn randomized_is_deterministic() {
        let a = randomized(5, 40, 3);
        let b = randomized(5, 40, 3);
        assert_eq!(a, b);
        assert!(a.passed(), "{:?}", a.failures);
    }
}
