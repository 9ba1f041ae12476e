//! Text formats.
//!
//! Graph files: the first line holds the vertex count `n`, then one
//! `u v` arc per line (0-based, `u u` for a loop). `#` starts a comment;
//! blank lines are skipped; LF and CRLF line endings are both accepted.
//!
//! Matrix files: one row per line as a string of `0`/`1`.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::matrix::BinaryMatrix;

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_graph(text: &str) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("vertex count {header:?} is not a non-negative integer"),
    })?;
    let mut arcs = Vec::new();
    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(Error::Parse {
                line,
                msg: format!("expected `u v`, got {body:?}"),
            });
        };
        let vertex = |s: &str| -> Result<usize> {
            let x: usize = s.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("{s:?} is not a vertex index"),
            })?;
            if x >= n {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex {x} outside 0..{n}"),
                });
            }
            Ok(x)
        };
        arcs.push((vertex(u)?, vertex(v)?));
    }
    Digraph::from_edge_list(n, &arcs)
}

/// Canonical form: count line, then arcs in row-major order, LF endings.
pub fn format_graph(h: &Digraph) -> String {
    let mut out = format!("{}\n", h.vertex_count());
    for (u, v) in h.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<BinaryMatrix> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    for (line, body) in content_lines(text) {
        let row = body
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse {
                    line,
                    msg: format!("unexpected character {c:?} in matrix row"),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(Error::Parse {
                    line,
                    msg: format!("row has {} entries, expected {}", row.len(), first.len()),
                });
            }
        }
        rows.push(row);
    }
    let refs: Vec<&[u8]> = rows.iter().map(Vec::as_slice).collect();
    BinaryMatrix::from_rows(&refs)
}

pub fn format_matrix(m: &BinaryMatrix) -> String {
    m.to_string()
}
