//! Signed-interval models and their interval-flavoured special cases.
//!
//! A signed-interval model gives every vertex `v` three coordinates
//! `(x_v, y_v, z_v)`: a source interval `[x_v, y_v]` and a sink interval
//! `[x_v, z_v]` sharing the left end. Either interval may be negative
//! (`y_v < x_v`). The realised digraph has `uv` exactly when
//! `x_u ≤ z_v` and `x_v ≤ y_u`.
//!
//! Co-TT models are the `y = z` case, interval models additionally have
//! `x ≤ y`, and adjusted interval models have both intervals positive.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::ordering::{extrema, verify_min_ordering, VertexOrdering};
use crate::rational::{self, int, Coord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SignedRepr", into = "SignedRepr")]
pub struct SignedIntervalModel {
    x: Vec<Coord>,
    y: Vec<Coord>,
    z: Vec<Coord>,
}

#[derive(Serialize, Deserialize)]
struct SignedRepr {
    n: usize,
    #[serde(with = "rational::vec")]
    x: Vec<Coord>,
    #[serde(with = "rational::vec")]
    y: Vec<Coord>,
    #[serde(with = "rational::vec")]
    z: Vec<Coord>,
}

impl TryFrom<SignedRepr> for SignedIntervalModel {
    type Error = Error;

    fn try_from(r: SignedRepr) -> Result<Self> {
        if r.x.len() != r.n {
            return Err(Error::Invalid(format!("n = {} but {} x-coordinates", r.n, r.x.len())));
        }
        SignedIntervalModel::new(r.x, r.y, r.z)
    }
}

impl From<SignedIntervalModel> for SignedRepr {
    fn from(m: SignedIntervalModel) -> Self {
        SignedRepr {
            n: m.x.len(),
            x: m.x,
            y: m.y,
            z: m.z,
        }
    }
}

impl SignedIntervalModel {
    pub fn new(x: Vec<Coord>, y: Vec<Coord>, z: Vec<Coord>) -> Result<Self> {
        if x.len() != y.len() || x.len() != z.len() {
            return Err(Error::Invalid(format!(
                "coordinate lists differ in length: {} / {} / {}",
                x.len(),
                y.len(),
                z.len()
            )));
        }
        Ok(SignedIntervalModel { x, y, z })
    }

    /// Convenience constructor from integer triples.
    pub fn from_triples(triples: &[(i64, i64, i64)]) -> Self {
        SignedIntervalModel {
            x: triples.iter().map(|t| int(t.0)).collect(),
            y: triples.iter().map(|t| int(t.1)).collect(),
            z: triples.iter().map(|t| int(t.2)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn x(&self) -> &[Coord] {
        &self.x
    }

    pub fn y(&self) -> &[Coord] {
        &self.y
    }

    pub fn z(&self) -> &[Coord] {
        &self.z
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.x[u] <= self.z[v] && self.x[v] <= self.y[u]
    }

    /// Restriction to `subset`; vertex `i` of the result is `subset[i]`.
    pub fn restrict(&self, subset: &[usize]) -> SignedIntervalModel {
        let pick = |c: &[Coord]| subset.iter().map(|&v| c[v]).collect();
        SignedIntervalModel {
            x: pick(&self.x),
            y: pick(&self.y),
            z: pick(&self.z),
        }
    }

    /// All source and sink intervals positive.
    pub fn is_adjusted_interval_model(&self) -> bool {
        (0..self.len()).all(|v| self.x[v] <= self.y[v] && self.x[v] <= self.z[v])
    }

    /// Source and sink intervals coincide.
    pub fn is_cott_shape(&self) -> bool {
        self.y == self.z
    }

    pub fn is_interval_model(&self) -> bool {
        self.is_cott_shape() && self.is_adjusted_interval_model()
    }

    /// The intervals `[x_v, y_v]` when this is an interval model.
    pub fn intervals(&self) -> Option<Vec<(Coord, Coord)>> {
        self.is_interval_model()
            .then(|| self.x.iter().copied().zip(self.y.iter().copied()).collect())
    }
}

pub fn realize_signed(model: &SignedIntervalModel) -> Digraph {
    Digraph::from_fn(model.len(), |u, v| model.has_arc(u, v))
}

/// Intersection graph of closed intervals; reflexive by definition.
pub fn realize_intervals(intervals: &[(Coord, Coord)]) -> Digraph {
    Digraph::from_fn(intervals.len(), |u, v| {
        let (a, b) = intervals[u];
        let (c, d) = intervals[v];
        a.max(c) <= b.min(d)
    })
}

fn ensure_min_ordering(h: &Digraph, ord: &VertexOrdering) -> Result<()> {
    match verify_min_ordering(h, ord)? {
        Some(v) => Err(Error::NotMinOrdering(v)),
        None => Ok(()),
    }
}

fn guard_realizes(h: &Digraph, realized: &Digraph, what: &str) -> Result<()> {
    match h.first_difference(realized) {
        None => Ok(()),
        Some((u, v)) => Err(Error::Internal(format!("{what} differs from input at ({u}, {v})"))),
    }
}

/// Represents `v` by the intervals `[v, O(v)]` and `[v, I(v)]`, read as
/// positions in `ord` with the sentinel at 0.
pub fn signed_from_min_ordering(h: &Digraph, ord: &VertexOrdering) -> Result<SignedIntervalModel> {
    ensure_min_ordering(h, ord)?;
    let ext = extrema(h, ord)?;
    let pos = |v: Option<usize>| int(ord.position_or_sentinel(v) as i64);
    let model = SignedIntervalModel {
        x: h.vertices().map(|v| pos(Some(v))).collect(),
        y: ext.last_out.iter().map(|&o| pos(o)).collect(),
        z: ext.last_in.iter().map(|&i| pos(i)).collect(),
    };
    guard_realizes(h, &realize_signed(&model), "signed-interval realization")?;
    Ok(model)
}

/// Orders vertices by `x_v`, ties by index. Non-strict inequalities make
/// any `x`-monotone order a min ordering, so ties need no perturbation.
pub fn min_ordering_from_signed(model: &SignedIntervalModel) -> Result<VertexOrdering> {
    let ord = VertexOrdering::sorted_by_key(model.len(), |v| model.x[v]);
    if let Some(v) = verify_min_ordering(&realize_signed(model), &ord)? {
        return Err(Error::Internal(format!("x-order is not a min ordering: {v}")));
    }
    Ok(ord)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    fn of(from: Coord, to: Coord) -> Sign {
        if from <= to {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Signs of the source and sink interval of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexType {
    pub source: Sign,
    pub sink: Sign,
}

pub fn vertex_types(model: &SignedIntervalModel) -> Vec<VertexType> {
    (0..model.len())
        .map(|v| VertexType {
            source: Sign::of(model.x[v], model.y[v]),
            sink: Sign::of(model.x[v], model.z[v]),
        })
        .collect()
}

/// Structure of a model split by vertex type, with each claim checked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub types: Vec<VertexType>,
    pub plus_plus: Vec<usize>,
    pub minus_minus: Vec<usize>,
    /// No arc (loops included) among `(-,-)` vertices.
    pub minus_minus_independent: bool,
    /// The `(+,+)` vertices induce a reflexive subdigraph ...
    pub plus_plus_reflexive: bool,
    /// ... realised by the restricted model, which is adjusted.
    pub plus_plus_adjusted: bool,
}

impl Decomposition {
    pub fn holds(&self) -> bool {
        self.minus_minus_independent && self.plus_plus_reflexive && self.plus_plus_adjusted
    }
}

pub fn decompose(model: &SignedIntervalModel) -> Decomposition {
    let types = vertex_types(model);
    let of_type = |s: Sign| -> Vec<usize> {
        (0..model.len())
            .filter(|&v| types[v].source == s && types[v].sink == s)
            .collect()
    };
    let plus_plus = of_type(Sign::Plus);
    let minus_minus = of_type(Sign::Minus);
    let h = realize_signed(model);
    let minus_minus_independent = minus_minus
        .iter()
        .all(|&u| minus_minus.iter().all(|&v| !h.has_arc(u, v)));
    let sub = h.induced_subgraph(&plus_plus).expect("distinct in-range vertices");
    let restricted = model.restrict(&plus_plus);
    Decomposition {
        plus_plus_reflexive: sub.is_reflexive(),
        plus_plus_adjusted: restricted.is_adjusted_interval_model() && realize_signed(&restricted) == sub,
        types,
        plus_plus,
        minus_minus,
        minus_minus_independent,
    }
}

/// Co-TT model: `ab` is an edge iff `x_a ≤ y_b` and `x_b ≤ y_a`. Loops are
/// part of the relation, so positive vertices carry loops.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CoTTRepr", into = "CoTTRepr")]
pub struct CoTTModel {
    x: Vec<Coord>,
    y: Vec<Coord>,
}

#[derive(Serialize, Deserialize)]
struct CoTTRepr {
    n: usize,
    #[serde(with = "rational::vec")]
    x: Vec<Coord>,
    #[serde(with = "rational::vec")]
    y: Vec<Coord>,
}

impl TryFrom<CoTTRepr> for CoTTModel {
    type Error = Error;

    fn try_from(r: CoTTRepr) -> Result<Self> {
        if r.x.len() != r.n {
            return Err(Error::Invalid(format!("n = {} but {} x-coordinates", r.n, r.x.len())));
        }
        CoTTModel::new(r.x, r.y)
    }
}

impl From<CoTTModel> for CoTTRepr {
    fn from(m: CoTTModel) -> Self {
        CoTTRepr {
            n: m.x.len(),
            x: m.x,
            y: m.y,
        }
    }
}

impl CoTTModel {
    pub fn new(x: Vec<Coord>, y: Vec<Coord>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::Invalid(format!("{} x but {} y coordinates", x.len(), y.len())));
        }
        Ok(CoTTModel { x, y })
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        CoTTModel {
            x: pairs.iter().map(|p| int(p.0)).collect(),
            y: pairs.iter().map(|p| int(p.1)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn x(&self) -> &[Coord] {
        &self.x
    }

    pub fn y(&self) -> &[Coord] {
        &self.y
    }

    pub fn is_positive(&self, v: usize) -> bool {
        self.x[v] <= self.y[v]
    }
}

pub fn realize_cott(model: &CoTTModel) -> Digraph {
    Digraph::from_fn(model.len(), |a, b| model.x[a] <= model.y[b] && model.x[b] <= model.y[a])
}

/// Sets `z := y`.
pub fn cott_to_signed(model: &CoTTModel) -> SignedIntervalModel {
    SignedIntervalModel {
        x: model.x.clone(),
        y: model.y.clone(),
        z: model.y.clone(),
    }
}

/// For a symmetric `h`, `O(v) = I(v)` and `x_v = v`, `y_v = O(v)` is a co-TT model.
pub fn cott_from_min_ordering(h: &Digraph, ord: &VertexOrdering) -> Result<CoTTModel> {
    if !h.is_symmetric() {
        return Err(Error::Precondition("digraph is not symmetric".into()));
    }
    let signed = signed_from_min_ordering(h, ord)?;
    if !signed.is_cott_shape() {
        return Err(Error::Internal(
            "last out- and in-neighbours differ on a symmetric digraph".into(),
        ));
    }
    let model = CoTTModel {
        x: signed.x,
        y: signed.y,
    };
    guard_realizes(h, &realize_cott(&model), "co-TT realization")?;
    Ok(model)
}

/// Interval model `x_v ≤ y_v = z_v` of a reflexive graph from a min ordering.
pub fn interval_model_from_min_ordering(h: &Digraph, ord: &VertexOrdering) -> Result<SignedIntervalModel> {
    if !h.is_reflexive() {
        return Err(Error::Precondition("graph is not reflexive".into()));
    }
    let cott = cott_from_min_ordering(h, ord)?;
    let model = cott_to_signed(&cott);
    let intervals = model
        .intervals()
        .ok_or_else(|| Error::Internal("negative interval in a reflexive graph".into()))?;
    guard_realizes(h, &realize_intervals(&intervals), "interval intersection graph")?;
    Ok(model)
}

/// Threshold-tolerance model: distinct `a, b` are adjacent iff
/// `w_a + w_b > t_a` or `w_a + w_b > t_b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdToleranceModel {
    #[serde(with = "rational::vec")]
    pub w: Vec<Coord>,
    #[serde(with = "rational::vec")]
    pub t: Vec<Coord>,
}

impl ThresholdToleranceModel {
    /// Irreflexive symmetric graph of the model.
    pub fn realize(&self) -> Digraph {
        Digraph::from_fn(self.w.len(), |a, b| {
            let s = self.w[a] + self.w[b];
            a != b && (s > self.t[a] || s > self.t[b])
        })
    }
}

/// `w_v = x_v`, `t_v = x_v + y_v`.
pub fn cott_to_threshold_tolerance(model: &CoTTModel) -> ThresholdToleranceModel {
    ThresholdToleranceModel {
        w: model.x.clone(),
        t: model.x.iter().zip(&model.y).map(|(x, y)| x + y).collect(),
    }
}

/// Adds loops to an irreflexive graph on every vertex except simplicial
/// vertices without a true twin (same closed neighbourhood).
pub fn standard_cott_lift(g: &Digraph) -> Result<Digraph> {
    if !g.is_irreflexive() || !g.is_symmetric() {
        return Err(Error::Precondition("expected an irreflexive symmetric graph".into()));
    }
    let n = g.vertex_count();
    let closed = |v: usize| -> Vec<bool> { (0..n).map(|u| u == v || g.has_arc(v, u)).collect() };
    let simplicial = |v: usize| {
        let nb: Vec<usize> = g.out_neighbors(v).collect();
        nb.iter().all(|&a| nb.iter().all(|&b| a == b || g.has_arc(a, b)))
    };
    let has_true_twin = |v: usize| {
        let nv = closed(v);
        (0..n).any(|u| u != v && closed(u) == nv)
    };
    let looped: Vec<bool> = (0..n).map(|v| !(simplicial(v) && !has_true_twin(v))).collect();
    Ok(Digraph::from_fn(
        n,
        |u, v| if u == v { looped[v] } else { g.has_arc(u, v) },
    ))
}
