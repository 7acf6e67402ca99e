//! Hypergraph text format.
//!
//! ```text
//! <num_vertices> <num_edges>
//! <v> <v> ...      one line per edge, 0-based, ascending
//! ```
//!
//! Blank lines and lines starting with `#` are skipped when reading.

use std::fmt::Write as _;

use super::Hypergraph;
use crate::error::{Error, Result};
use crate::gf2core::parse_header;

impl Hypergraph {
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let (num_vertices, num_edges) =
            parse_header(header).map_err(|_| Error::parse(header_line, "header must be two non-negative integers"))?;

        let mut edges = Vec::with_capacity(num_edges);
        for (line_no, line) in lines {
            if edges.len() == num_edges {
                return Err(Error::parse(line_no, format!("more than {num_edges} edges")));
            }
            let edge = line
                .split_whitespace()
                .map(str::parse::<usize>)
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::parse(line_no, format!("bad vertex index: {e}")))?;
            if edge.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::parse(line_no, "vertices must be strictly ascending"));
            }
            edges.push(edge);
        }
        if edges.len() != num_edges {
            return Err(Error::parse(
                header_line,
                format!("header announces {num_edges} edges, found {}", edges.len()),
            ));
        }
        Hypergraph::new(num_vertices, edges).map_err(|e| Error::parse(header_line, e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.num_vertices, self.edges.len());
        for e in &self.edges {
            let mut first = true;
            for v in e {
                if !first {
                    out.push(' ');
                }
                first = false;
                write!(out, "{v}").expect("writing to a String");
            }
            out.push('\n');
        }
        out
    }
}
