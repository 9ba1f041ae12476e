mod common;

use rand::Rng;

use common::{matrix_from_code, orders, rng};
use siginterval::generate::{random_reflexive_graph, reflexive_sun};
use siginterval::graph::{digraph_from_code, Digraph};
use siginterval::matrix::{
    gamma_free_independent, gamma_free_simultaneous, is_free_of, search_simultaneous, BinaryMatrix, Pattern,
};
use siginterval::obstruction::find_induced_cycle;

fn with_loops(g: &Digraph) -> Digraph {
    Digraph::from_fn(g.vertex_count(), |u, v| u == v || g.has_arc(u, v))
}

fn isomorphic(a: &Digraph, b: &Digraph) -> bool {
    let n = a.vertex_count();
    n == b.vertex_count()
        && orders(n).any(|p| {
            a.vertices()
                .all(|u| a.vertices().all(|v| a.has_arc(u, v) == b.has_arc(p[u], p[v])))
        })
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n)
        .filter(move |m| m.count_ones() as usize == k)
        .map(move |m| (0..n).filter(|v| m >> v & 1 == 1).collect())
}

/// Chordal and without an induced 3-sun; for `n ≤ 6` no larger sun fits.
fn strongly_chordal_small(h: &Digraph) -> bool {
    let n = h.vertex_count();
    let long: Vec<usize> = (4..=n).collect();
    if find_induced_cycle(h, &long).unwrap().is_some() {
        return false;
    }
    let sun = reflexive_sun(3);
    !subsets(n, 6).any(|s| isomorphic(&h.induced_subgraph(&s).unwrap(), &sun))
}

#[test]
fn gamma_free_simultaneous_matches_strong_chordality() {
    let mut r = rng(11);
    for _ in 0..400 {
        let n = r.gen_range(1..=6);
        let density = r.gen_range(0.3..0.9);
        let h = random_reflexive_graph(&mut r, n, density);
        let m = BinaryMatrix::adjacency(&h);
        let found = gamma_free_simultaneous(&m).unwrap();
        assert_eq!(
            found.is_some(),
            strongly_chordal_small(&h),
            "{:?}",
            h.arcs().collect::<Vec<_>>()
        );
        if let Some(p) = found {
            assert!(is_free_of(&m.permuted(&p, &p), &[Pattern::Gamma]));
        }
    }
    let sun = reflexive_sun(3);
    assert!(!strongly_chordal_small(&sun));
    assert_eq!(gamma_free_simultaneous(&BinaryMatrix::adjacency(&sun)).unwrap(), None);
}

#[test]
fn gamma_free_independent_matches_chordal_bipartite() {
    for k in 1..=3 {
        for l in 1..=3 {
            for code in 0..1u64 << (k * l) {
                let m = matrix_from_code(k, l, code);
                let n = k + l;
                let g = Digraph::from_fn(n, |u, v| {
                    u == v || (u < k && v >= k && m.get(u, v - k)) || (v < k && u >= k && m.get(v, u - k))
                });
                let long: Vec<usize> = (6..=n).collect();
                let chordal_bipartite = find_induced_cycle(&g, &long).unwrap().is_none();
                let found = gamma_free_independent(&m).unwrap();
                assert_eq!(found.is_some(), chordal_bipartite, "{m:?}");
            }
        }
    }
}

/// `{ID, Γ}`-free and `{K, L}`-free simultaneous orderability do not define
/// the same class of square matrices. The counts come from an independent
/// brute force; the irreflexive digon is the smallest separating instance.
#[test]
fn id_gamma_and_kl_classes_differ() {
    let id_gamma = [Pattern::Id, Pattern::Gamma];
    let kl = [Pattern::K, Pattern::L];
    let mut disagreements = Vec::new();
    for n in 1..=4 {
        let mut count = 0;
        for code in 0..1u64 << (n * n) {
            let m = BinaryMatrix::adjacency(&digraph_from_code(n, code));
            let a = search_simultaneous(&m, &id_gamma).unwrap().is_some();
            let b = search_simultaneous(&m, &kl).unwrap().is_some();
            count += usize::from(a != b);
        }
        disagreements.push(count);
    }
    assert_eq!(disagreements, vec![0, 2, 172, 25_686]);

    let digon = BinaryMatrix::from_rows(&[&[0, 1], &[1, 0]]).unwrap();
    assert!(search_simultaneous(&digon, &id_gamma).unwrap().is_some());
    assert!(search_simultaneous(&digon, &kl).unwrap().is_none());
}

#[test]
fn reflexive_triangle_is_gamma_orderable() {
    let tri = with_loops(&Digraph::from_undirected(3, &[(0, 1), (1, 2), (0, 2)]).unwrap());
    assert!(gamma_free_simultaneous(&BinaryMatrix::adjacency(&tri))
        .unwrap()
        .is_some());
}
