//! Bi-arc models.
//!
//! The circle is the parameter range `[0, 1)` read clockwise, with pole `N`
//! at 0 and pole `S` at 1/2. Each vertex `v` owns a closed arc `I_v` through
//! `N` (avoiding `S`) and a closed arc `J_v` through `S` (avoiding `N`);
//! `ab` is an arc of the realised digraph iff `I_a` and `J_b` are disjoint.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::ordering::{extrema, verify_min_ordering, VertexOrdering};
use crate::rational::{self, int, ratio, Coord};

/// Closed arc running clockwise from `ccw` to `cw`; wraps through 0 when
/// `ccw > cw`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub ccw: Coord,
    pub cw: Coord,
}

impl Arc {
    pub fn new(ccw: Coord, cw: Coord) -> Self {
        Arc { ccw, cw }
    }

    pub fn contains(&self, p: Coord) -> bool {
        if self.ccw <= self.cw {
            self.ccw <= p && p <= self.cw
        } else {
            p >= self.ccw || p <= self.cw
        }
    }

    /// Two proper arcs meet iff one contains the other's counterclockwise end.
    pub fn intersects(&self, other: &Arc) -> bool {
        self.contains(other.ccw) || other.contains(self.ccw)
    }
}

pub fn north() -> Coord {
    int(0)
}

pub fn south() -> Coord {
    ratio(1, 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<ArcPairRepr>", into = "Vec<ArcPairRepr>")]
pub struct BiArcModel {
    i: Vec<Arc>,
    j: Vec<Arc>,
}

#[derive(Serialize, Deserialize)]
struct ArcPairRepr {
    #[serde(rename = "I", with = "rational::pair")]
    i: (Coord, Coord),
    #[serde(rename = "J", with = "rational::pair")]
    j: (Coord, Coord),
}

impl TryFrom<Vec<ArcPairRepr>> for BiArcModel {
    type Error = Error;

    fn try_from(r: Vec<ArcPairRepr>) -> Result<Self> {
        let (i, j) = r
            .into_iter()
            .map(|p| (Arc::new(p.i.0, p.i.1), Arc::new(p.j.0, p.j.1)))
            .unzip();
        BiArcModel::new(i, j)
    }
}

impl From<BiArcModel> for Vec<ArcPairRepr> {
    fn from(m: BiArcModel) -> Self {
        m.i.iter()
            .zip(&m.j)
            .map(|(i, j)| ArcPairRepr {
                i: (i.ccw, i.cw),
                j: (j.ccw, j.cw),
            })
            .collect()
    }
}

impl BiArcModel {
    /// Validates the pole conditions and distinctness of clockwise ends.
    pub fn new(i: Vec<Arc>, j: Vec<Arc>) -> Result<Self> {
        if i.len() != j.len() {
            return Err(Error::Structure(format!("{} I-arcs but {} J-arcs", i.len(), j.len())));
        }
        let in_range = |c: &Coord| *c >= int(0) && *c < int(1);
        for (v, (a, b)) in i.iter().zip(&j).enumerate() {
            if ![a.ccw, a.cw, b.ccw, b.cw].iter().all(in_range) {
                return Err(Error::Structure(format!("arc end of vertex {v} outside [0, 1)")));
            }
            if !a.contains(north()) || a.contains(south()) {
                return Err(Error::Structure(format!(
                    "I-arc of vertex {v} must contain N and avoid S"
                )));
            }
            if !b.contains(south()) || b.contains(north()) {
                return Err(Error::Structure(format!(
                    "J-arc of vertex {v} must contain S and avoid N"
                )));
            }
        }
        for (name, fam) in [("I", &i), ("J", &j)] {
            for u in 0..fam.len() {
                if let Some(v) = (u + 1..fam.len()).find(|&v| fam[u].cw == fam[v].cw) {
                    return Err(Error::Structure(format!(
                        "{name}-arcs of vertices {u} and {v} share a clockwise end"
                    )));
                }
            }
        }
        Ok(BiArcModel { i, j })
    }

    pub fn len(&self) -> usize {
        self.i.len()
    }

    pub fn is_empty(&self) -> bool {
        self.i.is_empty()
    }

    pub fn i_arc(&self, v: usize) -> Arc {
        self.i[v]
    }

    pub fn j_arc(&self, v: usize) -> Arc {
        self.j[v]
    }
}

/// First pair `(u, v)`, `u < v` by index, whose clockwise ends come in
/// opposite orders in the two families; `None` when consistent.
///
/// Clockwise order is measured from the family's pole; `I` ends lie in
/// `[0, 1/2)` and `J` ends in `[1/2, 1)`, so plain parameter comparison
/// gives that order.
pub fn inconsistency(model: &BiArcModel) -> Option<(usize, usize)> {
    let n = model.len();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| (model.i[u].cw < model.i[v].cw) != (model.j[u].cw < model.j[v].cw))
}

pub fn is_consistent(model: &BiArcModel) -> bool {
    inconsistency(model).is_none()
}

/// Vertices in clockwise order of the clockwise ends of their `I`-arcs.
pub fn ordering_generated(model: &BiArcModel) -> Result<VertexOrdering> {
    if let Some((u, v)) = inconsistency(model) {
        return Err(Error::Inconsistent(u, v));
    }
    Ok(VertexOrdering::sorted_by_key(model.len(), |v| model.i[v].cw))
}

pub fn realize_biarc(model: &BiArcModel) -> Digraph {
    Digraph::from_fn(model.len(), |a, b| !model.i[a].intersects(&model.j[b]))
}

/// Builds a bi-arc model from a min ordering.
///
/// With grid step `g = 1/(4(n+1))`, the clockwise end of `I_v` sits at
/// `pos(v)·g` and that of `J_v` at `1/2 + pos(v)·g`. `I_v` is extended
/// counterclockwise to `1/2 + (pos(O(v)) + 1/2)·g`, the grid gap just past
/// `J_{O(v)}`, and `J_v` to `(pos(I(v)) + 1/2)·g`. The sentinel has position
/// 0, so a vertex with no out-neighbour gets an `I`-arc reaching just past
/// `S`, which meets every `J`-arc.
pub fn biarc_from_min_ordering(h: &Digraph, ord: &VertexOrdering) -> Result<BiArcModel> {
    if let Some(v) = verify_min_ordering(h, ord)? {
        return Err(Error::NotMinOrdering(v));
    }
    let ext = extrema(h, ord)?;
    let step = ratio(1, 4 * (h.vertex_count() as i64 + 1));
    let at = |p: usize| step * int(p as i64);
    let gap = |p: usize| step * ratio(2 * p as i64 + 1, 2);
    let mut i_arcs = Vec::with_capacity(h.vertex_count());
    let mut j_arcs = Vec::with_capacity(h.vertex_count());
    for v in h.vertices() {
        let p = ord.position(v);
        let o = ord.position_or_sentinel(ext.last_out[v]);
        let inn = ord.position_or_sentinel(ext.last_in[v]);
        i_arcs.push(Arc::new(south() + gap(o), at(p)));
        j_arcs.push(Arc::new(gap(inn), south() + at(p)));
    }
    let model = BiArcModel::new(i_arcs, j_arcs).map_err(|e| Error::Internal(e.to_string()))?;
    if ordering_generated(&model).ok().as_ref() != Some(ord) {
        return Err(Error::Internal(
            "constructed families do not generate the ordering".into(),
        ));
    }
    if let Some((u, v)) = h.first_difference(&realize_biarc(&model)) {
        return Err(Error::Internal(format!("bi-arc realization differs at ({u}, {v})")));
    }
    Ok(model)
}
