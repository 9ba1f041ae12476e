//! Min orderings.
//!
//! An ordering `<` of `V(H)` is a min ordering when `ab, a'b' ∈ E`, `a < a'`
//! and `b' < b` force `ab' ∈ E`. Positions are 1-based; position 0 is the
//! sentinel that stands before every vertex and plays the role of "no
//! neighbour" in [`NeighborExtrema`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Position of the sentinel.
pub const SENTINEL: usize = 0;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexOrdering {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    /// `order[i]` is the vertex at position `i + 1`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut pos = vec![SENTINEL; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != SENTINEL {
                return Err(Error::BadOrdering { n });
            }
            pos[v] = i + 1;
        }
        Ok(VertexOrdering { order, pos })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            order: (0..n).collect(),
            pos: (1..=n).collect(),
        }
    }

    /// Vertices sorted by `key`, ties broken by vertex index.
    pub fn sorted_by_key<K: Ord>(n: usize, key: impl Fn(usize) -> K) -> Self {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (key(v), v));
        VertexOrdering::new(order).expect("sorting a range yields a permutation")
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    /// Position of `v`, in `1..=n`.
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    /// Position of a vertex or of the sentinel (`None`).
    pub fn position_or_sentinel(&self, v: Option<usize>) -> usize {
        v.map_or(SENTINEL, |v| self.pos[v])
    }

    pub fn vertex_at(&self, position: usize) -> Option<usize> {
        position.checked_sub(1).and_then(|i| self.order.get(i).copied())
    }

    /// Order induced on `subset`, re-indexed as in [`Digraph::induced_subgraph`].
    pub fn restrict(&self, subset: &[usize]) -> VertexOrdering {
        VertexOrdering::sorted_by_key(subset.len(), |i| self.pos[subset[i]])
    }

    fn check_covers(&self, h: &Digraph) -> Result<()> {
        if self.len() != h.vertex_count() {
            return Err(Error::BadOrdering { n: h.vertex_count() });
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for VertexOrdering {
    type Error = Error;

    fn try_from(order: Vec<usize>) -> Result<Self> {
        VertexOrdering::new(order)
    }
}

impl From<VertexOrdering> for Vec<usize> {
    fn from(ord: VertexOrdering) -> Self {
        ord.order
    }
}

/// Witness that an ordering is not a min ordering: `ab` and `a'b'` are arcs
/// with `a < a'`, `b' < b`, and `ab'` is missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinOrderViolation {
    pub a: usize,
    pub a_prime: usize,
    pub b: usize,
    pub b_prime: usize,
}

impl MinOrderViolation {
    /// Re-checks the witness against `h` and `ord`.
    pub fn holds(&self, h: &Digraph, ord: &VertexOrdering) -> bool {
        let p = |v| ord.position(v);
        h.has_arc(self.a, self.b)
            && h.has_arc(self.a_prime, self.b_prime)
            && !h.has_arc(self.a, self.b_prime)
            && p(self.a) < p(self.a_prime)
            && p(self.b_prime) < p(self.b)
    }
}

impl fmt::Display for MinOrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "arcs {}->{} and {}->{} present but {}->{} missing",
            self.a, self.b, self.a_prime, self.b_prime, self.a, self.b_prime
        )
    }
}

/// Checks the min-ordering condition directly.
///
/// Returns the first violation in lexicographic order of
/// `(pos a, pos a', pos b', pos b)`, or `None` when `ord` is a min ordering.
pub fn verify_min_ordering(h: &Digraph, ord: &VertexOrdering) -> Result<Option<MinOrderViolation>> {
    ord.check_covers(h)?;
    let at = |p: usize| ord.as_slice()[p];
    let n = ord.len();
    for pa in 0..n {
        for pa2 in pa + 1..n {
            for pb2 in 0..n {
                if !h.has_arc(at(pa2), at(pb2)) || h.has_arc(at(pa), at(pb2)) {
                    continue;
                }
                for pb in pb2 + 1..n {
                    if h.has_arc(at(pa), at(pb)) {
                        return Ok(Some(MinOrderViolation {
                            a: at(pa),
                            a_prime: at(pa2),
                            b: at(pb),
                            b_prime: at(pb2),
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Last out-neighbour `O(v)` and last in-neighbour `I(v)` of every vertex
/// under an ordering; `None` stands for the sentinel.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborExtrema {
    pub last_out: Vec<Option<usize>>,
    pub last_in: Vec<Option<usize>>,
}

pub fn extrema(h: &Digraph, ord: &VertexOrdering) -> Result<NeighborExtrema> {
    ord.check_covers(h)?;
    let last = |it: &mut dyn Iterator<Item = usize>| it.max_by_key(|&w| ord.position(w));
    Ok(NeighborExtrema {
        last_out: h.vertices().map(|v| last(&mut h.out_neighbors(v))).collect(),
        last_in: h.vertices().map(|v| last(&mut h.in_neighbors(v))).collect(),
    })
}

/// A pair where `ab ∈ E` disagrees with `a ≤ I(b) ∧ b ≤ O(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtremaCounterexample {
    pub a: usize,
    pub b: usize,
    pub arc_present: bool,
}

/// Checks the ordering through the extrema characterisation: `ab ∈ E` iff
/// `a ≤ I(b)` and `b ≤ O(a)`. Pairs are scanned in order of positions.
pub fn verify_via_extrema(h: &Digraph, ord: &VertexOrdering) -> Result<Option<ExtremaCounterexample>> {
    let ext = extrema(h, ord)?;
    for &a in ord.as_slice() {
        for &b in ord.as_slice() {
            let predicted = ord.position(a) <= ord.position_or_sentinel(ext.last_in[b])
                && ord.position(b) <= ord.position_or_sentinel(ext.last_out[a]);
            let present = h.has_arc(a, b);
            if predicted != present {
                return Ok(Some(ExtremaCounterexample {
                    a,
                    b,
                    arc_present: present,
                }));
            }
        }
    }
    Ok(None)
}

/// Would appending `w` to `prefix` complete a violation among placed vertices?
///
/// Any violation among vertices already placed stays a violation in every
/// extension, so only quadruples that use `w` (necessarily as `a'` or `b`,
/// the later-placed roles) need checking.
fn creates_violation(h: &Digraph, prefix: &[usize], w: usize) -> bool {
    let k = prefix.len();
    let at = |p: usize| if p == k { w } else { prefix[p] };
    // w as a': a < w, b' < b, ab and w b' present, a b' missing.
    for pb2 in 0..=k {
        let b2 = at(pb2);
        if !h.has_arc(w, b2) {
            continue;
        }
        for &a in &prefix[..k] {
            if h.has_arc(a, b2) {
                continue;
            }
            if (pb2 + 1..=k).any(|pb| h.has_arc(a, at(pb))) {
                return true;
            }
        }
    }
    // w as b: a < a', b' < w, a w and a' b' present, a b' missing.
    for &b2 in &prefix[..k] {
        for (pa, &a) in prefix[..k].iter().enumerate() {
            if !h.has_arc(a, w) || h.has_arc(a, b2) {
                continue;
            }
            if (pa + 1..=k).any(|pa2| h.has_arc(at(pa2), b2)) {
                return true;
            }
        }
    }
    false
}

/// Depth-first search over prefixes in vertex-index order. `visit` receives
/// every complete ordering that survives pruning and returns `false` to stop.
fn search(h: &Digraph, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(h: &Digraph, prefix: &mut Vec<usize>, used: &mut [bool], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if prefix.len() == used.len() {
            return visit(prefix);
        }
        for w in 0..used.len() {
            if used[w] || creates_violation(h, prefix, w) {
                continue;
            }
            used[w] = true;
            prefix.push(w);
            let keep_going = go(h, prefix, used, visit);
            prefix.pop();
            used[w] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
    let mut used = vec![false; h.vertex_count()];
    go(h, &mut Vec::with_capacity(used.len()), &mut used, visit);
}

fn certify(h: &Digraph, order: &[usize]) -> VertexOrdering {
    let ord = VertexOrdering::new(order.to_vec()).expect("search emits permutations");
    assert!(
        verify_min_ordering(h, &ord).expect("sizes match").is_none(),
        "search produced an invalid ordering {order:?}"
    );
    ord
}

/// Lexicographically least min ordering of `h`, or `None` if `h` has none.
pub fn find_min_ordering(h: &Digraph) -> Option<VertexOrdering> {
    let mut found = None;
    search(h, &mut |order| {
        found = Some(certify(h, order));
        false
    });
    found
}

/// Every min ordering of `h`, in lexicographic order.
pub fn enumerate_min_orderings(h: &Digraph) -> Vec<VertexOrdering> {
    let mut all = Vec::new();
    search(h, &mut |order| {
        all.push(certify(h, order));
        true
    });
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_vertex() -> Digraph {
        Digraph::from_edge_list(1, &[(0, 0)]).unwrap()
    }

    fn digon() -> Digraph {
        Digraph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap()
    }

    fn reflexive_p3() -> Digraph {
        Digraph::from_edge_list(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 0), (1, 2), (2, 1)]).unwrap()
    }

    fn reflexive_cycle(n: usize) -> Digraph {
        let mut e: Vec<_> = (0..n).map(|v| (v, v)).collect();
        e.extend((0..n).map(|v| (v, (v + 1) % n)));
        Digraph::from_undirected(n, &e).unwrap()
    }

    #[test]
    fn ordering_construction() {
        let o = VertexOrdering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.position(2), 1);
        assert_eq!(o.vertex_at(3), Some(1));
        assert_eq!(o.vertex_at(0), None);
        assert!(VertexOrdering::new(vec![0, 0]).is_err());
        assert!(VertexOrdering::new(vec![0, 2]).is_err());
    }

    #[test]
    fn verify_examples() {
        assert_eq!(
            verify_min_ordering(&loop_vertex(), &VertexOrdering::identity(1)),
            Ok(None)
        );
        let v = verify_min_ordering(&digon(), &VertexOrdering::identity(2))
            .unwrap()
            .unwrap();
        assert_eq!(
            v,
            MinOrderViolation {
                a: 0,
                a_prime: 1,
                b: 1,
                b_prime: 0
            }
        );
        assert!(v.holds(&digon(), &VertexOrdering::identity(2)));
        assert_eq!(
            verify_min_ordering(&reflexive_p3(), &VertexOrdering::identity(3)),
            Ok(None)
        );
    }

    #[test]
    fn verify_rejects_wrong_length() {
        assert_eq!(
            verify_min_ordering(&digon(), &VertexOrdering::identity(3)),
            Err(Error::BadOrdering { n: 2 })
        );
    }

    #[test]
    fn extrema_examples() {
        let arc = Digraph::from_edge_list(2, &[(0, 1)]).unwrap();
        let e = extrema(&arc, &VertexOrdering::identity(2)).unwrap();
        assert_eq!(e.last_out, vec![Some(1), None]);
        assert_eq!(e.last_in, vec![None, Some(0)]);

        let e = extrema(&loop_vertex(), &VertexOrdering::identity(1)).unwrap();
        assert_eq!((e.last_out[0], e.last_in[0]), (Some(0), Some(0)));

        let e = extrema(&reflexive_p3(), &VertexOrdering::identity(3)).unwrap();
        assert_eq!(e.last_out, vec![Some(1), Some(2), Some(2)]);
    }

    #[test]
    fn extrema_check_examples() {
        assert_eq!(
            verify_via_extrema(&loop_vertex(), &VertexOrdering::identity(1)),
            Ok(None)
        );
        assert_eq!(
            verify_via_extrema(&digon(), &VertexOrdering::identity(2)),
            Ok(Some(ExtremaCounterexample {
                a: 0,
                b: 0,
                arc_present: false
            }))
        );
        assert_eq!(
            verify_via_extrema(&reflexive_p3(), &VertexOrdering::identity(3)),
            Ok(None)
        );
    }

    #[test]
    fn find_examples() {
        assert_eq!(find_min_ordering(&reflexive_cycle(4)), None);
        assert_eq!(find_min_ordering(&digon()), None);
        let claw = Digraph::from_undirected(4, &[(0, 0), (1, 1), (2, 2), (3, 3), (0, 1), (0, 2), (0, 3)]).unwrap();
        let ord = find_min_ordering(&claw).unwrap();
        assert_eq!(verify_min_ordering(&claw, &ord), Ok(None));
        assert_eq!(ord.as_slice(), &[0, 1, 2, 3]);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_min_orderings(&loop_vertex()).len(), 1);
        let two_loops = Digraph::from_edge_list(2, &[(0, 0), (1, 1)]).unwrap();
        assert_eq!(enumerate_min_orderings(&two_loops).len(), 2);
        assert!(enumerate_min_orderings(&digon()).is_empty());
    }

    #[test]
    fn empty_digraph() {
        let g = Digraph::empty(0);
        assert_eq!(find_min_ordering(&g), Some(VertexOrdering::identity(0)));
    }
}
