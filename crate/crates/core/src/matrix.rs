//! 0/1-matrices and 2×2 pattern avoidance.
//!
//! A submatrix is an order-preserving choice of two rows `i1 < i2` and two
//! columns `j1 < j2`. An adjacency matrix with rows and columns in order `<`
//! is K,L-free exactly when `<` is a min ordering.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::ordering::find_min_ordering;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BinaryMatrix {
            rows,
            cols,
            data: vec![false; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let data = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        BinaryMatrix { rows, cols, data }
    }

    /// Rows of 0/1 entries; all rows must have the same length.
    pub fn from_rows(rows: &[&[u8]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if let Some(i) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::Invalid(format!(
                "row {i} has length {}, expected {cols}",
                rows[i].len()
            )));
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            for &e in *r {
                match e {
                    0 => data.push(false),
                    1 => data.push(true),
                    _ => return Err(Error::Invalid(format!("entry {e} is not 0 or 1"))),
                }
            }
        }
        Ok(BinaryMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn adjacency(h: &Digraph) -> Self {
        let n = h.vertex_count();
        BinaryMatrix::from_fn(n, n, |i, j| h.has_arc(i, j))
    }

    pub fn to_digraph(&self) -> Result<Digraph> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(Digraph::from_fn(self.rows, |i, j| self.get(i, j)))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.cols + j]
    }

    /// Row `i` of the result is row `row_perm[i]` of `self`, and likewise
    /// for columns.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> BinaryMatrix {
        BinaryMatrix::from_fn(self.rows, self.cols, |i, j| self.get(row_perm[i], col_perm[j]))
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, " ")?;
            }
            for j in 0..self.cols {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Serialize for BinaryMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect())
            .collect();
        rows.serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    /// rows `01`, `10`
    K,
    /// rows `01`, `11`
    L,
    /// rows `11`, `10`
    Gamma,
    /// rows `10`, `01`
    #[serde(rename = "ID")]
    Id,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [Pattern::K, Pattern::L, Pattern::Gamma, Pattern::Id];

    pub fn cells(self) -> [[bool; 2]; 2] {
        let (t, f) = (true, false);
        match self {
            Pattern::K => [[f, t], [t, f]],
            Pattern::L => [[f, t], [t, t]],
            Pattern::Gamma => [[t, t], [t, f]],
            Pattern::Id => [[t, f], [f, t]],
        }
    }

    pub fn matrix(self) -> BinaryMatrix {
        let c = self.cells();
        BinaryMatrix::from_fn(2, 2, |i, j| c[i][j])
    }

    pub fn from_matrix(m: &BinaryMatrix) -> Option<Pattern> {
        Pattern::ALL.into_iter().find(|p| p.matrix() == *m)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K" => Ok(Pattern::K),
            "L" => Ok(Pattern::L),
            "Gamma" | "G" => Ok(Pattern::Gamma),
            "ID" | "I" => Ok(Pattern::Id),
            _ => Err(Error::Invalid(format!(
                "unknown pattern {s:?}; expected K, L, Gamma or ID"
            ))),
        }
    }
}

/// Row and column indices `(i1, i2, j1, j2)` of an occurrence, 0-based.
pub type Occurrence = (usize, usize, usize, usize);

pub fn occurs_at(m: &BinaryMatrix, p: Pattern, (i1, i2, j1, j2): Occurrence) -> bool {
    let c = p.cells();
    m.get(i1, j1) == c[0][0] && m.get(i1, j2) == c[0][1] && m.get(i2, j1) == c[1][0] && m.get(i2, j2) == c[1][1]
}

/// First occurrence of `p` in lexicographic `(i1, i2, j1, j2)` order.
pub fn find_pattern(m: &BinaryMatrix, p: Pattern) -> Option<Occurrence> {
    let (k, l) = (m.rows, m.cols);
    for i1 in 0..k {
        for i2 in i1 + 1..k {
            for j1 in 0..l {
                for j2 in j1 + 1..l {
                    if occurs_at(m, p, (i1, i2, j1, j2)) {
                        return Some((i1, i2, j1, j2));
                    }
                }
            }
        }
    }
    None
}

pub fn is_free_of(m: &BinaryMatrix, patterns: &[Pattern]) -> bool {
    patterns.iter().all(|&p| find_pattern(m, p).is_none())
}

pub fn is_kl_free(m: &BinaryMatrix) -> bool {
    is_free_of(m, &[Pattern::K, Pattern::L])
}

/// Simultaneous permutation making `m` K,L-free, via a min ordering of the
/// digraph whose adjacency matrix is `m`.
pub fn min_orderable(m: &BinaryMatrix) -> Result<Option<Vec<usize>>> {
    let h = m.to_digraph()?;
    Ok(find_min_ordering(&h).map(|ord| ord.as_slice().to_vec()))
}

/// `M⁺`: `m` in the first `k` rows and last `l` columns of a
/// `(k+l) × (k+l)` zero matrix.
pub fn augment(m: &BinaryMatrix) -> BinaryMatrix {
    let (k, l) = (m.rows, m.cols);
    BinaryMatrix::from_fn(k + l, k + l, |i, j| i < k && j >= k && m.get(i, j - k))
}

/// Independent row and column permutations making `m` K,L-free, obtained
/// from a simultaneous permutation of `M⁺` by splitting it into the row
/// indices `0..k` and the column indices `k..k+l`.
pub fn independent_kl_free(m: &BinaryMatrix) -> Option<(Vec<usize>, Vec<usize>)> {
    let k = m.rows;
    let perm = min_orderable(&augment(m)).expect("augmented matrix is square")?;
    let rows = perm.iter().copied().filter(|&v| v < k).collect();
    let cols = perm.iter().copied().filter(|&v| v >= k).map(|v| v - k).collect();
    Some((rows, cols))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transform {
    Rotate180,
    Transpose,
    ReverseRows,
    ReverseCols,
}

impl FromStr for Transform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rotate180" => Ok(Transform::Rotate180),
            "transpose" => Ok(Transform::Transpose),
            "reverse-rows" => Ok(Transform::ReverseRows),
            "reverse-cols" => Ok(Transform::ReverseCols),
            _ => Err(Error::Invalid(format!("unknown transform {s:?}"))),
        }
    }
}

pub fn transform(m: &BinaryMatrix, t: Transform) -> BinaryMatrix {
    let (k, l) = (m.rows, m.cols);
    match t {
        Transform::Rotate180 => BinaryMatrix::from_fn(k, l, |i, j| m.get(k - 1 - i, l - 1 - j)),
        Transform::Transpose => BinaryMatrix::from_fn(l, k, |i, j| m.get(j, i)),
        Transform::ReverseRows => BinaryMatrix::from_fn(k, l, |i, j| m.get(k - 1 - i, j)),
        Transform::ReverseCols => BinaryMatrix::from_fn(k, l, |i, j| m.get(i, l - 1 - j)),
    }
}

/// Where an occurrence lands after rotating a `rows × cols` matrix by 180°.
pub fn rotate_occurrence(rows: usize, cols: usize, (i1, i2, j1, j2): Occurrence) -> Occurrence {
    (rows - 1 - i2, rows - 1 - i1, cols - 1 - j2, cols - 1 - j1)
}

/// Bound on `n` for brute-force simultaneous permutation search.
pub const MAX_SIMULTANEOUS_N: usize = 8;
/// Bound on `k!·l!` for brute-force independent permutation search.
pub const MAX_INDEPENDENT_PERMUTATIONS: u64 = 1_000_000;

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// First simultaneous permutation (lexicographic) that avoids `forbidden`.
pub fn search_simultaneous(m: &BinaryMatrix, forbidden: &[Pattern]) -> Result<Option<Vec<usize>>> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.rows > MAX_SIMULTANEOUS_N {
        return Err(Error::TooLarge {
            what: "simultaneous permutation search",
            size: m.rows as u64,
            bound: MAX_SIMULTANEOUS_N as u64,
        });
    }
    Ok(permutations(m.rows)
        .into_iter()
        .find(|p| is_free_of(&m.permuted(p, p), forbidden)))
}

/// First pair of independent permutations (lexicographic) that avoids `forbidden`.
pub fn search_independent(m: &BinaryMatrix, forbidden: &[Pattern]) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let size = factorial(m.rows).saturating_mul(factorial(m.cols));
    if size > MAX_INDEPENDENT_PERMUTATIONS {
        return Err(Error::TooLarge {
            what: "independent permutation search",
            size,
            bound: MAX_INDEPENDENT_PERMUTATIONS,
        });
    }
    let cols = permutations(m.cols);
    for rp in permutations(m.rows) {
        for cp in &cols {
            if is_free_of(&m.permuted(&rp, cp), forbidden) {
                return Ok(Some((rp, cp.clone())));
            }
        }
    }
    Ok(None)
}

pub fn gamma_free_simultaneous(m: &BinaryMatrix) -> Result<Option<Vec<usize>>> {
    search_simultaneous(m, &[Pattern::Gamma])
}

pub fn gamma_free_independent(m: &BinaryMatrix) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    search_independent(m, &[Pattern::Gamma])
}
