//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use itertools::Itertools;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use siginterval::graph::Digraph;
use siginterval::matrix::BinaryMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Quadruple scan straight from the definition: `ab, a'b'` arcs with
/// `a < a'` and `b' < b` force `ab'`.
pub fn is_min_ordering(h: &Digraph, order: &[usize]) -> bool {
    let n = h.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for a in 0..n {
        for b in 0..n {
            if !h.has_arc(a, b) {
                continue;
            }
            for a2 in 0..n {
                for b2 in 0..n {
                    if h.has_arc(a2, b2) && pos[a] < pos[a2] && pos[b2] < pos[b] && !h.has_arc(a, b2) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn orders(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

pub fn has_min_ordering(h: &Digraph) -> bool {
    orders(h.vertex_count()).any(|o| is_min_ordering(h, &o))
}

pub fn matrix_from_code(rows: usize, cols: usize, code: u64) -> BinaryMatrix {
    BinaryMatrix::from_fn(rows, cols, |i, j| code >> (i * cols + j) & 1 == 1)
}

/// Entry-by-entry 180° rotation.
pub fn rotate(m: &BinaryMatrix) -> BinaryMatrix {
    let (r, c) = (m.rows(), m.cols());
    BinaryMatrix::from_fn(r, c, |i, j| m.get(r - 1 - i, c - 1 - j))
}

/// Does `m[i1,i2; j1,j2]` equal the 2×2 `cells`?
pub fn submatrix_is(m: &BinaryMatrix, cells: [[u8; 2]; 2], i: [usize; 2], j: [usize; 2]) -> bool {
    (0..2).all(|a| (0..2).all(|b| m.get(i[a], j[b]) == (cells[a][b] == 1)))
}

pub fn adjacent_or_equal(h: &Digraph, u: usize, v: usize) -> bool {
    u == v || h.has_arc(u, v)
}
