//! List homomorphisms to a template with a min ordering.
//!
//! Arc consistency prunes every list to the greatest fixpoint; when the
//! template `H` has a min ordering, mapping every vertex to the minimum of its
//! pruned list is a homomorphism whenever no list is empty.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::ordering::{verify_min_ordering, VertexOrdering};

/// Allowed images `L(u) ⊆ V(H)` for every vertex `u` of the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ListAssignment {
    lists: Vec<Vec<usize>>,
}

impl ListAssignment {
    /// Every vertex may go anywhere.
    pub fn full(input_n: usize, template_n: usize) -> Self {
        ListAssignment {
            lists: vec![(0..template_n).collect(); input_n],
        }
    }

    /// Lists are sorted and deduplicated; entries must lie in `0..template_n`.
    pub fn new(mut lists: Vec<Vec<usize>>, template_n: usize) -> Result<Self> {
        for (u, l) in lists.iter_mut().enumerate() {
            if let Some(&a) = l.iter().find(|&&a| a >= template_n) {
                return Err(Error::Invalid(format!(
                    "list of {u} names {a}, template has {template_n} vertices"
                )));
            }
            l.sort_unstable();
            l.dedup();
        }
        Ok(ListAssignment { lists })
    }

    /// From a JSON-style map `vertex → images`; vertices not mentioned get
    /// the full list.
    pub fn from_map(map: &BTreeMap<String, Vec<usize>>, input_n: usize, template_n: usize) -> Result<Self> {
        let mut lists = vec![(0..template_n).collect::<Vec<_>>(); input_n];
        for (key, images) in map {
            let u: usize = key
                .parse()
                .map_err(|_| Error::Invalid(format!("list key {key:?} is not a vertex index")))?;
            if u >= input_n {
                return Err(Error::Invalid(format!("list key {u} outside 0..{input_n}")));
            }
            lists[u] = images.clone();
        }
        ListAssignment::new(lists, template_n)
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, u: usize) -> &[usize] {
        &self.lists[u]
    }

    pub fn contains(&self, u: usize, a: usize) -> bool {
        self.lists[u].binary_search(&a).is_ok()
    }

    pub fn any_empty(&self) -> bool {
        self.lists.iter().any(Vec::is_empty)
    }

    pub fn is_subset_of(&self, other: &ListAssignment) -> bool {
        self.len() == other.len() && (0..self.len()).all(|u| self.lists[u].iter().all(|&a| other.contains(u, a)))
    }

    fn check_shape(&self, g: &Digraph, h: &Digraph) -> Result<()> {
        if self.len() != g.vertex_count() {
            return Err(Error::Invalid(format!(
                "{} lists for {} input vertices",
                self.len(),
                g.vertex_count()
            )));
        }
        if let Some(&a) = self.lists.iter().flatten().find(|&&a| a >= h.vertex_count()) {
            return Err(Error::Invalid(format!("list entry {a} outside the template")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Homomorphism {
    pub map: Vec<usize>,
}

impl Homomorphism {
    /// Arc-preserving, and within `lists` when given.
    pub fn is_valid(&self, g: &Digraph, h: &Digraph, lists: Option<&ListAssignment>) -> bool {
        self.map.len() == g.vertex_count()
            && self.map.iter().all(|&a| a < h.vertex_count())
            && g.arcs().all(|(u, v)| h.has_arc(self.map[u], self.map[v]))
            && lists.is_none_or(|l| (0..self.map.len()).all(|u| l.contains(u, self.map[u])))
    }
}

/// Greatest arc-consistent sub-assignment of `lists`.
///
/// A loop `uu` in the input is a constraint on `u` alone and keeps only
/// images with a loop. For every other arc `uv`, `a` leaves `L(u)` when no
/// `b ∈ L(v)` has `ab ∈ E(H)`, and `b` leaves `L(v)` when no `a ∈ L(u)` has
/// `ab ∈ E(H)`. Arcs are revisited from a FIFO worklist until nothing changes.
pub fn arc_consistency(g: &Digraph, h: &Digraph, lists: &ListAssignment) -> Result<ListAssignment> {
    lists.check_shape(g, h)?;
    let n = g.vertex_count();
    let mut dom: Vec<Vec<bool>> = (0..n)
        .map(|u| {
            let mut d = vec![false; h.vertex_count()];
            for &a in lists.list(u) {
                d[a] = !g.has_loop(u) || h.has_loop(a);
            }
            d
        })
        .collect();

    let arcs: Vec<(usize, usize)> = g.arcs().filter(|&(u, v)| u != v).collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(u, v)) in arcs.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut queued = vec![true; arcs.len()];
    let mut work: VecDeque<usize> = (0..arcs.len()).collect();

    // Drops unsupported values of `dom[x]`; support of `a` is some `b` in
    // `dom[y]` with `edge(a, b)`.
    let revise = |dom: &mut Vec<Vec<bool>>, x: usize, y: usize, edge: &dyn Fn(usize, usize) -> bool| {
        let mut changed = false;
        for a in 0..h.vertex_count() {
            if dom[x][a] && !(0..h.vertex_count()).any(|b| dom[y][b] && edge(a, b)) {
                dom[x][a] = false;
                changed = true;
            }
        }
        changed
    };

    while let Some(i) = work.pop_front() {
        queued[i] = false;
        let (u, v) = arcs[i];
        let mut touched = Vec::new();
        if revise(&mut dom, u, v, &|a, b| h.has_arc(a, b)) {
            touched.push(u);
        }
        if revise(&mut dom, v, u, &|b, a| h.has_arc(a, b)) {
            touched.push(v);
        }
        for x in touched {
            for &j in &incident[x] {
                if !queued[j] {
                    queued[j] = true;
                    work.push_back(j);
                }
            }
        }
    }

    Ok(ListAssignment {
        lists: dom
            .into_iter()
            .map(|d| d.iter().enumerate().filter(|(_, &k)| k).map(|(a, _)| a).collect())
            .collect(),
    })
}

/// Solves list homomorphism to `h` by arc consistency and choosing the
/// `ord`-minimum of every pruned list.
pub fn solve_list_hom(
    g: &Digraph,
    h: &Digraph,
    ord: &VertexOrdering,
    lists: &ListAssignment,
) -> Result<Option<Homomorphism>> {
    if let Some(v) = verify_min_ordering(h, ord)? {
        return Err(Error::NotMinOrdering(v));
    }
    let pruned = arc_consistency(g, h, lists)?;
    if pruned.any_empty() {
        return Ok(None);
    }
    let map = (0..g.vertex_count())
        .map(|u| {
            *pruned
                .list(u)
                .iter()
                .min_by_key(|&&a| ord.position(a))
                .expect("non-empty")
        })
        .collect();
    let f = Homomorphism { map };
    if !f.is_valid(g, h, Some(lists)) {
        return Err(Error::Internal(format!(
            "minimum selection {:?} is not a homomorphism",
            f.map
        )));
    }
    Ok(Some(f))
}

/// Upper bound on the product of list sizes for [`brute_force_hom`].
pub const BRUTE_FORCE_BUDGET: u64 = 10_000_000;

fn check_budget(lists: &ListAssignment) -> Result<()> {
    let size = lists
        .lists
        .iter()
        .fold(1u64, |acc, l| acc.saturating_mul(l.len() as u64));
    if size > BRUTE_FORCE_BUDGET {
        return Err(Error::TooLarge {
            what: "brute-force homomorphism search",
            size,
            bound: BRUTE_FORCE_BUDGET,
        });
    }
    Ok(())
}

/// Backtracking over vertices `0..n` with candidates in increasing index;
/// `visit` returns `false` to stop.
fn backtrack(g: &Digraph, h: &Digraph, lists: &ListAssignment, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(
        g: &Digraph,
        h: &Digraph,
        lists: &ListAssignment,
        f: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let u = f.len();
        if u == g.vertex_count() {
            return visit(f);
        }
        for &a in lists.list(u) {
            let fits = (0..u)
                .all(|w| (!g.has_arc(u, w) || h.has_arc(a, f[w])) && (!g.has_arc(w, u) || h.has_arc(f[w], a)))
                && (!g.has_loop(u) || h.has_loop(a));
            if !fits {
                continue;
            }
            f.push(a);
            let more = go(g, h, lists, f, visit);
            f.pop();
            if !more {
                return false;
            }
        }
        true
    }
    go(g, h, lists, &mut Vec::with_capacity(g.vertex_count()), visit);
}

/// Lexicographically least list homomorphism, by exhaustive search.
pub fn brute_force_hom(g: &Digraph, h: &Digraph, lists: &ListAssignment) -> Result<Option<Homomorphism>> {
    lists.check_shape(g, h)?;
    check_budget(lists)?;
    let mut found = None;
    backtrack(g, h, lists, &mut |f| {
        found = Some(Homomorphism { map: f.to_vec() });
        false
    });
    Ok(found)
}

/// Every list homomorphism, in lexicographic order.
pub fn all_list_homomorphisms(g: &Digraph, h: &Digraph, lists: &ListAssignment) -> Result<Vec<Homomorphism>> {
    lists.check_shape(g, h)?;
    check_budget(lists)?;
    let mut all = Vec::new();
    backtrack(g, h, lists, &mut |f| {
        all.push(Homomorphism { map: f.to_vec() });
        true
    });
    Ok(all)
}
