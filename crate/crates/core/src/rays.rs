//! Two-directional orthogonal ray models of bipartite digraphs.
//!
//! Each `a ∈ A` is an upward ray from `P_a = (u_a, v_a)` and each `b ∈ B` a
//! rightward ray from `Q_b = (r_b, s_b)`. Rays are closed, so they meet iff
//! `r_b ≤ u_a` and `v_a ≤ s_b`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BipartiteDigraph, Digraph};
use crate::interval::SignedIntervalModel;
use crate::ordering::{verify_min_ordering, VertexOrdering};
use crate::rational::{self, int, Coord};

pub type Point = (Coord, Coord);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RayRepr", into = "RayRepr")]
pub struct RayModel {
    a: Vec<usize>,
    p: Vec<Point>,
    b: Vec<usize>,
    q: Vec<Point>,
}

#[derive(Serialize, Deserialize)]
struct RayRepr {
    #[serde(rename = "A")]
    a: Vec<VerticalRepr>,
    #[serde(rename = "B")]
    b: Vec<HorizontalRepr>,
}

#[derive(Serialize, Deserialize)]
struct VerticalRepr {
    #[serde(rename = "P", with = "rational::pair")]
    origin: Point,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct HorizontalRepr {
    #[serde(rename = "Q", with = "rational::pair")]
    origin: Point,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    v: Option<usize>,
}

impl TryFrom<RayRepr> for RayModel {
    type Error = Error;

    /// Vertex labels are optional; unlabelled files number A first, then B.
    fn try_from(r: RayRepr) -> Result<Self> {
        let k = r.a.len();
        let a = r.a.iter().enumerate().map(|(i, x)| x.v.unwrap_or(i)).collect();
        let b = r.b.iter().enumerate().map(|(i, x)| x.v.unwrap_or(k + i)).collect();
        RayModel::new(
            a,
            r.a.into_iter().map(|x| x.origin).collect(),
            b,
            r.b.into_iter().map(|x| x.origin).collect(),
        )
    }
}

impl From<RayModel> for RayRepr {
    fn from(m: RayModel) -> Self {
        RayRepr {
            a: m.a
                .iter()
                .zip(m.p)
                .map(|(&v, origin)| VerticalRepr { origin, v: Some(v) })
                .collect(),
            b: m.b
                .iter()
                .zip(m.q)
                .map(|(&v, origin)| HorizontalRepr { origin, v: Some(v) })
                .collect(),
        }
    }
}

impl RayModel {
    /// `a[i]` is the vertex whose upward ray starts at `p[i]`; likewise for
    /// `b` and `q`. Together `a` and `b` must list `0..n` exactly once.
    pub fn new(a: Vec<usize>, p: Vec<Point>, b: Vec<usize>, q: Vec<Point>) -> Result<Self> {
        if a.len() != p.len() || b.len() != q.len() {
            return Err(Error::Invalid("ray list and vertex list lengths differ".into()));
        }
        let n = a.len() + b.len();
        let mut seen = vec![false; n];
        for &v in a.iter().chain(&b) {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Invalid(format!(
                    "ray vertex labels must be a permutation of 0..{n}"
                )));
            }
        }
        Ok(RayModel { a, p, b, q })
    }

    pub fn vertex_count(&self) -> usize {
        self.a.len() + self.b.len()
    }

    pub fn part_a(&self) -> &[usize] {
        &self.a
    }

    pub fn part_b(&self) -> &[usize] {
        &self.b
    }

    pub fn vertical_origins(&self) -> &[Point] {
        &self.p
    }

    pub fn horizontal_origins(&self) -> &[Point] {
        &self.q
    }

    /// Do the rays of the `i`-th A-vertex and `j`-th B-vertex meet?
    pub fn meets(&self, i: usize, j: usize) -> bool {
        let (u, v) = self.p[i];
        let (r, s) = self.q[j];
        r <= u && v <= s
    }

    /// Describes the first coordinate tie, if any.
    pub fn normalization_issue(&self) -> Option<String> {
        let xs = self.p.iter().map(|p| p.0).chain(self.q.iter().map(|q| q.0));
        let ys = self.p.iter().map(|p| p.1).chain(self.q.iter().map(|q| q.1));
        for (axis, vals) in [("x", xs.collect::<Vec<_>>()), ("y", ys.collect())] {
            let mut sorted = vals.clone();
            sorted.sort();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Some(format!("two ray origins share {axis} = {}", rational::format(&w[0])));
            }
        }
        None
    }

    /// Re-indexes coordinates onto distinct integers, keeping every
    /// comparison that the intersection predicate makes.
    ///
    /// On the x-axis a tie `r_b = u_a` must stay `r_b ≤ u_a`, so B sorts
    /// before A; on the y-axis a tie `v_a = s_b` must stay `v_a ≤ s_b`, so A
    /// sorts first. Remaining ties break by list index.
    pub fn normalized(&self) -> RayModel {
        let rank = |a_vals: Vec<Coord>, b_vals: Vec<Coord>, a_first: bool| {
            let a_kind = u8::from(!a_first);
            let mut keys: Vec<(Coord, u8, usize)> = a_vals
                .iter()
                .enumerate()
                .map(|(i, &c)| (c, a_kind, i))
                .chain(b_vals.iter().enumerate().map(|(i, &c)| (c, 1 - a_kind, i)))
                .collect();
            keys.sort();
            let mut a_rank = vec![int(0); a_vals.len()];
            let mut b_rank = vec![int(0); b_vals.len()];
            for (r, &(_, kind, i)) in keys.iter().enumerate() {
                let slot = if kind == a_kind { &mut a_rank[i] } else { &mut b_rank[i] };
                *slot = int(r as i64);
            }
            (a_rank, b_rank)
        };
        let (ux, rx) = rank(
            self.p.iter().map(|p| p.0).collect(),
            self.q.iter().map(|q| q.0).collect(),
            false,
        );
        let (vy, sy) = rank(
            self.p.iter().map(|p| p.1).collect(),
            self.q.iter().map(|q| q.1).collect(),
            true,
        );
        RayModel {
            a: self.a.clone(),
            p: ux.into_iter().zip(vy).collect(),
            b: self.b.clone(),
            q: rx.into_iter().zip(sy).collect(),
        }
    }
}

pub fn realize_rays(model: &RayModel) -> BipartiteDigraph {
    let n = model.vertex_count();
    let mut slot = vec![(false, 0); n];
    for (i, &v) in model.a.iter().enumerate() {
        slot[v] = (true, i);
    }
    for (j, &v) in model.b.iter().enumerate() {
        slot[v] = (false, j);
    }
    let graph = Digraph::from_fn(n, |u, v| match (slot[u], slot[v]) {
        ((true, i), (false, j)) => model.meets(i, j),
        _ => false,
    });
    BipartiteDigraph::new(graph, model.a.clone(), model.b.clone()).expect("parts partition the vertices")
}

/// Ray model from a signed-interval model of `h`: `P_a = (y_a, x_a)`,
/// `Q_b = (x_b, z_b)`, then normalised.
pub fn rays_from_signed(h: &BipartiteDigraph, model: &SignedIntervalModel) -> Result<RayModel> {
    let g = h.graph();
    if model.len() != g.vertex_count() {
        return Err(Error::Invalid(format!(
            "model has {} vertices, digraph has {}",
            model.len(),
            g.vertex_count()
        )));
    }
    for &a in h.part_a() {
        for &b in h.part_b() {
            if model.has_arc(a, b) != g.has_arc(a, b) {
                return Err(Error::ModelMismatch(a, b));
            }
        }
    }
    let raw = RayModel {
        a: h.part_a().to_vec(),
        p: h.part_a().iter().map(|&a| (model.y()[a], model.x()[a])).collect(),
        b: h.part_b().to_vec(),
        q: h.part_b().iter().map(|&b| (model.x()[b], model.z()[b])).collect(),
    };
    let rays = raw.normalized();
    if let Some((u, v)) = g.first_difference(realize_rays(&rays).graph()) {
        return Err(Error::Internal(format!("ray realization differs at ({u}, {v})")));
    }
    Ok(rays)
}

/// A sorted by `v_a`, then B sorted by `r_b`.
pub fn min_ordering_from_rays(model: &RayModel) -> Result<VertexOrdering> {
    if let Some(issue) = model.normalization_issue() {
        return Err(Error::Normalization(issue));
    }
    let mut a: Vec<usize> = (0..model.a.len()).collect();
    a.sort_by_key(|&i| model.p[i].1);
    let mut b: Vec<usize> = (0..model.b.len()).collect();
    b.sort_by_key(|&j| model.q[j].0);
    let order = a
        .iter()
        .map(|&i| model.a[i])
        .chain(b.iter().map(|&j| model.b[j]))
        .collect();
    let ord = VertexOrdering::new(order)?;
    if let Some(v) = verify_min_ordering(realize_rays(model).graph(), &ord)? {
        return Err(Error::Internal(format!("ray ordering is not a min ordering: {v}")));
    }
    Ok(ord)
}
