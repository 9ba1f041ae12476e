//! Obstructions to being an interval graph, for reflexive graphs.
//!
//! Adjacency here is the reflexive relation: every vertex is adjacent to
//! itself, so "non-adjacent" implies "distinct".

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Digraph;

fn require_reflexive_graph(h: &Digraph) -> Result<()> {
    if !h.is_symmetric() {
        return Err(Error::Precondition("graph is not symmetric".into()));
    }
    if !h.is_reflexive() {
        return Err(Error::Precondition("graph is not reflexive".into()));
    }
    Ok(())
}

/// Three pairwise non-adjacent vertices; `paths[k]` joins the two vertices
/// other than `triple[k]` while avoiding its closed neighbourhood.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AsteroidalTriple {
    pub triple: [usize; 3],
    pub paths: [Vec<usize>; 3],
}

impl AsteroidalTriple {
    pub fn is_valid(&self, h: &Digraph) -> bool {
        let t = self.triple;
        let independent = (0..3).all(|i| (0..3).all(|j| i == j || !h.adjacent(t[i], t[j])));
        independent
            && (0..3).all(|k| {
                let (s, e) = (t[(k + 1) % 3], t[(k + 2) % 3]);
                let p = &self.paths[k];
                p.first() == Some(&s)
                    && p.last() == Some(&e)
                    && p.windows(2).all(|w| h.has_arc(w[0], w[1]))
                    && p.iter().all(|&v| !h.adjacent(v, t[k]))
            })
    }
}

/// Shortest path from `s` to `t` through vertices allowed by `ok`.
fn path_avoiding(h: &Digraph, s: usize, t: usize, ok: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    if !ok(s) || !ok(t) {
        return None;
    }
    let n = h.vertex_count();
    let mut parent = vec![usize::MAX; n];
    parent[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            let mut path = vec![t];
            let mut x = t;
            while x != s {
                x = parent[x];
                path.push(x);
            }
            path.reverse();
            return Some(path);
        }
        for v in h.out_neighbors(u) {
            if parent[v] == usize::MAX && ok(v) {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    None
}

/// First asteroidal triple in lexicographic order of `(x, y, z)`, `x < y < z`.
pub fn find_asteroidal_triple(h: &Digraph) -> Result<Option<AsteroidalTriple>> {
    require_reflexive_graph(h)?;
    let n = h.vertex_count();
    for x in 0..n {
        for y in x + 1..n {
            if h.adjacent(x, y) {
                continue;
            }
            for z in y + 1..n {
                if h.adjacent(x, z) || h.adjacent(y, z) {
                    continue;
                }
                let t = [x, y, z];
                let paths: Option<Vec<Vec<usize>>> = (0..3)
                    .map(|k| path_avoiding(h, t[(k + 1) % 3], t[(k + 2) % 3], |v| !h.adjacent(v, t[k])))
                    .collect();
                if let Some(p) = paths {
                    let [p0, p1, p2]: [Vec<usize>; 3] = p.try_into().expect("three paths");
                    return Ok(Some(AsteroidalTriple {
                        triple: t,
                        paths: [p0, p1, p2],
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Is `cycle` an induced cycle of `h` (ignoring loops)?
pub fn is_induced_cycle(h: &Digraph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    k >= 3
        && (0..k).all(|i| {
            (0..k).all(|j| {
                let dist = (i + k - j) % k;
                let should = dist == 1 || dist == k - 1;
                i == j || h.adjacent(cycle[i], cycle[j]) == should
            })
        })
}

/// First induced cycle whose length is in `lengths`, shortest length first.
///
/// Cycles are enumerated with their least vertex first and the second vertex
/// smaller than the last, so each cycle is seen once.
pub fn find_induced_cycle(h: &Digraph, lengths: &[usize]) -> Result<Option<Vec<usize>>> {
    if !h.is_symmetric() {
        return Err(Error::Precondition("graph is not symmetric".into()));
    }
    let mut wanted: Vec<usize> = lengths.iter().copied().filter(|&l| l >= 3).collect();
    wanted.sort_unstable();
    wanted.dedup();
    for len in wanted {
        for s in h.vertices() {
            let mut path = vec![s];
            if let Some(c) = extend_induced_path(h, &mut path, len) {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}

fn extend_induced_path(h: &Digraph, path: &mut Vec<usize>, len: usize) -> Option<Vec<usize>> {
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() == len {
        return (h.adjacent(last, s) && path[1] < last).then(|| path.clone());
    }
    for w in h.out_neighbors(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        // w may touch only its predecessor, plus the start when it closes the cycle.
        let closes = path.len() + 1 == len;
        let chordless = path[..path.len() - 1]
            .iter()
            .enumerate()
            .all(|(i, &p)| !h.adjacent(p, w) || (i == 0 && closes));
        if !chordless || (closes && !h.adjacent(w, s)) {
            continue;
        }
        path.push(w);
        let found = extend_induced_path(h, path, len);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    InducedCycle { cycle: Vec<usize> },
    AsteroidalTriple(AsteroidalTriple),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum IntervalVerdict {
    Interval,
    Obstructed { obstruction: Obstruction },
}

/// Interval test by forbidden structures: no induced `C4`/`C5` and no
/// asteroidal triple.
pub fn lekkerkerker_boland(h: &Digraph) -> Result<IntervalVerdict> {
    require_reflexive_graph(h)?;
    if let Some(cycle) = find_induced_cycle(h, &[4, 5])? {
        return Ok(IntervalVerdict::Obstructed {
            obstruction: Obstruction::InducedCycle { cycle },
        });
    }
    if let Some(at) = find_asteroidal_triple(h)? {
        return Ok(IntervalVerdict::Obstructed {
            obstruction: Obstruction::AsteroidalTriple(at),
        });
    }
    Ok(IntervalVerdict::Interval)
}

/// Walk pairs `(P, Q)` from `u → v` / `v → u` and `(R, S)` from `v → u` /
/// `u → v`, with `P[i]` non-adjacent to `Q[i+1]` and `R[i]` to `S[i+1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvertiblePair {
    pub u: usize,
    pub v: usize,
    pub p: Vec<usize>,
    pub q: Vec<usize>,
    pub r: Vec<usize>,
    pub s: Vec<usize>,
}

impl InvertiblePair {
    pub fn is_valid(&self, h: &Digraph) -> bool {
        let walk = |w: &[usize], from: usize, to: usize| {
            w.first() == Some(&from) && w.last() == Some(&to) && w.windows(2).all(|e| h.has_arc(e[0], e[1]))
        };
        let synced = |x: &[usize], y: &[usize]| {
            x.len() == y.len() && (0..x.len().saturating_sub(1)).all(|i| !h.adjacent(x[i], y[i + 1]))
        };
        self.u != self.v
            && walk(&self.p, self.u, self.v)
            && walk(&self.q, self.v, self.u)
            && walk(&self.r, self.v, self.u)
            && walk(&self.s, self.u, self.v)
            && synced(&self.p, &self.q)
            && synced(&self.r, &self.s)
    }
}

/// Breadth-first search in the pair digraph: `(p, q) → (p', q')` when
/// `pp'`, `qq'` are edges and `p` is non-adjacent to `q'`. Returns the
/// two coordinate walks of a shortest route, if any.
fn pair_route(h: &Digraph, from: (usize, usize), to: (usize, usize)) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = h.vertex_count();
    let idx = |(p, q): (usize, usize)| p * n + q;
    let mut parent = vec![usize::MAX; n * n];
    parent[idx(from)] = idx(from);
    let mut queue = VecDeque::from([from]);
    while let Some((p, q)) = queue.pop_front() {
        if (p, q) == to {
            let mut xs = Vec::new();
            let mut at = idx(to);
            loop {
                xs.push((at / n, at % n));
                if at == idx(from) {
                    break;
                }
                at = parent[at];
            }
            xs.reverse();
            return Some(xs.into_iter().unzip());
        }
        for q2 in h.out_neighbors(q) {
            if h.adjacent(p, q2) {
                continue;
            }
            for p2 in h.out_neighbors(p) {
                let next = (p2, q2);
                if parent[idx(next)] == usize::MAX {
                    parent[idx(next)] = idx((p, q));
                    queue.push_back(next);
                }
            }
        }
    }
    None
}

fn pair_witness(h: &Digraph, u: usize, v: usize) -> Option<InvertiblePair> {
    let (p, q) = pair_route(h, (u, v), (v, u))?;
    let (r, s) = pair_route(h, (v, u), (u, v))?;
    Some(InvertiblePair { u, v, p, q, r, s })
}

/// Witness that the specific pair `(u, v)` is invertible.
pub fn invertible_pair_at(h: &Digraph, u: usize, v: usize) -> Result<Option<InvertiblePair>> {
    require_reflexive_graph(h)?;
    let n = h.vertex_count();
    if u >= n || v >= n {
        return Err(Error::VertexOutOfRange { u, v, n });
    }
    Ok(if u == v { None } else { pair_witness(h, u, v) })
}

/// First invertible pair `u < v`.
pub fn find_invertible_pair(h: &Digraph) -> Result<Option<InvertiblePair>> {
    require_reflexive_graph(h)?;
    let n = h.vertex_count();
    Ok((0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find_map(|(u, v)| pair_witness(h, u, v)))
}
