//! Digraphs with loops, stored as a dense bit matrix.
//!
//! Graphs are symmetric digraphs; a loop `vv` is an ordinary arc. Vertices are
//! the dense indices `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

/// Whether [`Digraph::complement`] flips the diagonal or keeps loops as they are.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diagonal {
    Complement,
    Preserve,
}

impl Digraph {
    /// Arcless digraph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        Digraph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_fn(n: usize, mut arc: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Digraph::empty(n);
        for u in 0..n {
            for v in 0..n {
                if arc(u, v) {
                    g.set(u, v);
                }
            }
        }
        g
    }

    /// Builds a digraph from an arc list; duplicates collapse.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Digraph::empty(n);
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { u, v, n });
            }
            g.set(u, v);
        }
        Ok(g)
    }

    /// Symmetric digraph with both orientations of every listed pair.
    pub fn from_undirected(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let both: Vec<_> = edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
        Digraph::from_edge_list(n, &both)
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD] |= 1 << (v % WORD);
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.has_arc(v, v)
    }

    /// Arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbors(u).map(move |v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_arc(u, v))
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_arc(u, v))
    }

    /// Adjacent in either direction. In a reflexive graph every vertex is
    /// adjacent to itself.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn is_reflexive(&self) -> bool {
        self.vertices().all(|v| self.has_loop(v))
    }

    pub fn is_irreflexive(&self) -> bool {
        self.vertices().all(|v| !self.has_loop(v))
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs().all(|(u, v)| self.has_arc(v, u))
    }

    pub fn symmetric_closure(&self) -> Digraph {
        Digraph::from_fn(self.n, |u, v| self.adjacent(u, v))
    }

    /// Complement over ordered pairs. With [`Diagonal::Preserve`] loops are
    /// copied unchanged, so only distinct pairs flip.
    pub fn complement(&self, diagonal: Diagonal) -> Digraph {
        Digraph::from_fn(self.n, |u, v| {
            if u == v && diagonal == Diagonal::Preserve {
                self.has_arc(u, v)
            } else {
                !self.has_arc(u, v)
            }
        })
    }

    /// Subdigraph induced by `subset`; vertex `i` of the result is `subset[i]`.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Digraph> {
        let mut seen = vec![false; self.n];
        for &v in subset {
            if v >= self.n {
                return Err(Error::Invalid(format!("vertex {v} not in 0..{}", self.n)));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Invalid(format!("vertex {v} listed twice")));
            }
        }
        Ok(Digraph::from_fn(subset.len(), |i, j| {
            self.has_arc(subset[i], subset[j])
        }))
    }

    /// Same arc set restricted to distinct pairs (loops dropped).
    pub fn without_loops(&self) -> Digraph {
        Digraph::from_fn(self.n, |u, v| u != v && self.has_arc(u, v))
    }

    /// First pair (row-major) on which the two digraphs disagree.
    pub fn first_difference(&self, other: &Digraph) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((self.n.min(other.n), 0));
        }
        (0..self.n)
            .flat_map(|u| (0..self.n).map(move |v| (u, v)))
            .find(|&(u, v)| self.has_arc(u, v) != other.has_arc(u, v))
    }

    /// Underlying undirected simple graph: neighbours excluding self.
    fn undirected_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| v != u && self.adjacent(u, v))
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

impl Serialize for Digraph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            arcs: Vec<(usize, usize)>,
        }
        Repr {
            n: self.n,
            arcs: self.arcs().collect(),
        }
        .serialize(s)
    }
}

/// Bipartite digraph: every arc runs from part A to part B.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteDigraph {
    graph: Digraph,
    a: Vec<usize>,
    b: Vec<usize>,
}

impl BipartiteDigraph {
    pub fn new(graph: Digraph, a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        let n = graph.vertex_count();
        let mut side = vec![None; n];
        for (part, list) in [(0u8, &a), (1u8, &b)] {
            for &v in list {
                if v >= n {
                    return Err(Error::Invalid(format!("part vertex {v} not in 0..{n}")));
                }
                if side[v].replace(part).is_some() {
                    return Err(Error::Invalid(format!("vertex {v} appears in both parts or twice")));
                }
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return Err(Error::Invalid(format!("vertex {v} is in neither part")));
        }
        if let Some((u, v)) = graph.arcs().find(|&(u, v)| side[u] != Some(0) || side[v] != Some(1)) {
            return Err(Error::NotOneDirectional(u, v));
        }
        Ok(BipartiteDigraph { graph, a, b })
    }

    /// Rows become part A (vertices `0..k`), columns part B (`k..k+l`).
    pub fn from_biadjacency(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> bool) -> Self {
        let graph = Digraph::from_fn(rows + cols, |u, v| u < rows && v >= rows && entry(u, v - rows));
        BipartiteDigraph {
            graph,
            a: (0..rows).collect(),
            b: (rows..rows + cols).collect(),
        }
    }

    pub fn graph(&self) -> &Digraph {
        &self.graph
    }

    pub fn part_a(&self) -> &[usize] {
        &self.a
    }

    pub fn part_b(&self) -> &[usize] {
        &self.b
    }
}

/// Two-colours the underlying graph of `h` and orients it from A to B.
///
/// The lowest-index vertex of every component goes to A. Symmetric pairs
/// collapse to their A→B orientation; a lone arc from B to A is rejected.
pub fn as_bipartite_digraph(h: &Digraph) -> Result<BipartiteDigraph> {
    let n = h.vertex_count();
    if let Some(v) = h.vertices().find(|&v| h.has_loop(v)) {
        return Err(Error::Precondition(format!("vertex {v} has a loop")));
    }
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for v in h.undirected_neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        parent[v] = u;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => {
                        return Err(Error::NotBipartite {
                            cycle: odd_cycle(&parent, u, v),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let in_a = |v: usize| color[v] == Some(false);
    if let Some((u, v)) = h.arcs().find(|&(u, v)| !in_a(u) && !h.has_arc(v, u)) {
        return Err(Error::NotOneDirectional(u, v));
    }
    let graph = Digraph::from_fn(n, |u, v| in_a(u) && !in_a(v) && h.adjacent(u, v));
    let a = (0..n).filter(|&v| in_a(v)).collect();
    let b = (0..n).filter(|&v| !in_a(v)).collect();
    Ok(BipartiteDigraph { graph, a, b })
}

/// Closes the BFS-tree paths from `u` and `v` into a cycle through the edge `uv`.
fn odd_cycle(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let chain = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = chain(u);
    let pv = chain(v);
    let lca = *pu.iter().find(|x| pv.contains(x)).expect("same BFS tree");
    let mut cycle: Vec<usize> = pu.iter().copied().take_while(|&x| x != lca).collect();
    cycle.push(lca);
    let back: Vec<usize> = pv.iter().copied().take_while(|&x| x != lca).collect();
    cycle.extend(back.into_iter().rev());
    cycle
}

/// Largest `n` for which [`enumerate_digraphs`] will run.
pub const MAX_EXHAUSTIVE_N: usize = 4;

/// All `2^(n²)` labelled digraphs on `n` vertices, in lexicographic order of
/// the row-major adjacency matrix read as a bit string.
pub fn enumerate_digraphs(n: usize) -> Result<impl Iterator<Item = Digraph>> {
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::TooLarge {
            what: "exhaustive digraph enumeration",
            size: n as u64,
            bound: MAX_EXHAUSTIVE_N as u64,
        });
    }
    let cells = n * n;
    Ok((0u64..1 << cells).map(move |code| digraph_from_code(n, code)))
}

/// Digraph whose adjacency entry `(u, v)` is bit `n² - 1 - (u·n + v)` of `code`.
pub fn digraph_from_code(n: usize, code: u64) -> Digraph {
    let cells = n * n;
    Digraph::from_fn(n, |u, v| code >> (cells - 1 - (u * n + v)) & 1 == 1)
}
