//! Named small graphs and seeded random instances.

use rand::Rng;

use crate::graph::{BipartiteDigraph, Digraph};
use crate::matrix::BinaryMatrix;

fn reflexive_with(n: usize, edges: &[(usize, usize)]) -> Digraph {
    let mut e: Vec<_> = (0..n).map(|v| (v, v)).collect();
    e.extend_from_slice(edges);
    Digraph::from_undirected(n, &e).expect("generator edges are in range")
}

pub fn reflexive_path(n: usize) -> Digraph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    reflexive_with(n, &edges)
}

pub fn reflexive_cycle(n: usize) -> Digraph {
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    reflexive_with(n, &edges)
}

/// `K_{1,3}` with centre 0.
pub fn reflexive_claw() -> Digraph {
    reflexive_with(4, &[(0, 1), (0, 2), (0, 3)])
}

/// Clique `0..k` plus `k + i` adjacent to `i` and `i + 1 (mod k)`.
pub fn reflexive_sun(k: usize) -> Digraph {
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
        }
        edges.push((k + i, i));
        edges.push((k + i, (i + 1) % k));
    }
    reflexive_with(2 * k, &edges)
}

/// Claw with every edge subdivided: centre 0, middles 1..=3, leaves 4..=6.
pub fn reflexive_spider() -> Digraph {
    reflexive_with(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
}

/// Named reflexive graphs used as a fixed test corpus.
pub fn reflexive_corpus() -> Vec<(String, Digraph)> {
    let mut out = vec![("claw".to_string(), reflexive_claw())];
    for n in 1..=7 {
        out.push((format!("P{n}"), reflexive_path(n)));
    }
    for n in [4, 5, 6] {
        out.push((format!("C{n}"), reflexive_cycle(n)));
    }
    out.push(("3-sun".into(), reflexive_sun(3)));
    out.push(("S(2,2,2)".into(), reflexive_spider()));
    out
}

/// Each ordered pair (loops included) is an arc with probability `p`.
pub fn random_digraph(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    Digraph::from_fn(n, |_, _| rng.gen_bool(p))
}

/// Symmetric digraph; loops and edges each present with probability `p`.
pub fn random_symmetric(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Digraph::from_undirected(n, &edges).expect("in range")
}

pub fn random_reflexive_graph(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    reflexive_with(n, &edges)
}

/// Loopless symmetric graph with edge probability `p`.
pub fn random_irreflexive_graph(rng: &mut impl Rng, n: usize, p: f64) -> Digraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Digraph::from_undirected(n, &edges).expect("in range")
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, p: f64) -> BinaryMatrix {
    let cells: Vec<bool> = (0..rows * cols).map(|_| rng.gen_bool(p)).collect();
    BinaryMatrix::from_fn(rows, cols, |i, j| cells[i * cols + j])
}

pub fn bipartite_from_matrix(m: &BinaryMatrix) -> BipartiteDigraph {
    BipartiteDigraph::from_biadjacency(m.rows(), m.cols(), |i, j| m.get(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn named_shapes() {
        assert_eq!(reflexive_path(3).arc_count(), 3 + 4);
        assert_eq!(reflexive_cycle(5).arc_count(), 5 + 10);
        assert_eq!(reflexive_sun(3).arc_count(), 6 + 2 * (3 + 6));
        assert_eq!(reflexive_spider().arc_count(), 7 + 12);
        assert!(reflexive_corpus()
            .iter()
            .all(|(_, g)| g.is_reflexive() && g.is_symmetric()));
    }

    #[test]
    fn random_classes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 0..6 {
            assert!(random_symmetric(&mut rng, n, 0.5).is_symmetric());
            let r = random_reflexive_graph(&mut rng, n, 0.5);
            assert!(r.is_reflexive() && r.is_symmetric());
            let i = random_irreflexive_graph(&mut rng, n, 0.5);
            assert!(i.is_irreflexive() && i.is_symmetric());
        }
    }
}
