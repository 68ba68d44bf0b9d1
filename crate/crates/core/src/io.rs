//! graph6 and plain edge-list formats.
//!
//! graph6 layout: a size header `N(n)` (one byte `n + 63` for `n <= 62`,
//! otherwise byte 126 followed by three 6-bit groups), then the upper
//! triangle of the adjacency matrix in column-major order (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`) packed six bits per byte, most significant bit
//! first, each byte biased by 63. Padding bits are ignored on input and
//! written as zero.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Parser options shared by both text formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseOptions {
    /// Largest accepted order; clamped to [`MAX_ORDER`].
    pub order_cap: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            order_cap: MAX_ORDER,
        }
    }
}

impl ParseOptions {
    fn cap(&self) -> usize {
        self.order_cap.min(MAX_ORDER)
    }
}

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph> {
    parse_graph6_with(text, ParseOptions::default())
}

pub fn parse_graph6_with(text: &str, opts: ParseOptions) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset: offset + skip,
        reason: reason.to_string(),
    };
    let sextet = |i: usize| -> Result<u32> {
        match body.get(i) {
            None => Err(err(i, "unexpected end of input")),
            Some(&b) if (63..=126).contains(&b) => Ok(u32::from(b - 63)),
            Some(_) => Err(err(i, "byte outside the printable range 63..=126")),
        }
    };

    if body.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (order, mut pos) = if body[0] == 126 {
        if body.get(1) == Some(&126) {
            return Err(err(1, "eight-byte size header not supported"));
        }
        let n = (sextet(1)? << 12) | (sextet(2)? << 6) | sextet(3)?;
        if n <= 62 {
            return Err(err(0, "long size header used for order <= 62"));
        }
        (n as usize, 4)
    } else {
        (sextet(0)? as usize, 1)
    };
    if order > opts.cap() {
        return Err(Error::OrderCap {
            order,
            cap: opts.cap(),
        });
    }

    let bits = order * order.saturating_sub(1) / 2;
    let nbytes = bits.div_ceil(6);
    let mut g = Graph::new(order);
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            let byte = sextet(pos + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    pos += nbytes;
    if pos < body.len() {
        return Err(err(pos, "trailing bytes after adjacency data"));
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_with(text, ParseOptions::default())
}

/// Parses `n <order>` followed by one `u v` pair per line. Blank lines are
/// skipped and duplicate edges collapse.
pub fn parse_edge_list_with(text: &str, opts: ParseOptions) -> Result<Graph> {
    let err = |line: usize, reason: String| Error::EdgeList { line, reason };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| err(1, "missing `n <order>` header".into()))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("n") {
        return Err(err(hline, "header must be `n <order>`".into()));
    }
    let order: usize = tokens
        .next()
        .ok_or_else(|| err(hline, "missing order".into()))?
        .parse()
        .map_err(|_| err(hline, "order is not a number".into()))?;
    if tokens.next().is_some() {
        return Err(err(hline, "unexpected token after order".into()));
    }
    if order > opts.cap() {
        return Err(Error::OrderCap {
            order,
            cap: opts.cap(),
        });
    }

    let mut g = Graph::new(order);
    for (ln, line) in lines {
        let ids: Vec<&str> = line.split_whitespace().collect();
        if ids.len() != 2 {
            return Err(err(ln, format!("expected two vertex ids, found {}", ids.len())));
        }
        let mut pair = [0usize; 2];
        for (slot, tok) in pair.iter_mut().zip(&ids) {
            *slot = tok
                .parse()
                .map_err(|_| err(ln, format!("`{tok}` is not a vertex id")))?;
            if *slot >= order {
                return Err(err(ln, format!("vertex {slot} out of range for order {order}")));
            }
        }
        if pair[0] == pair[1] {
            return Err(err(ln, format!("self-loop at vertex {}", pair[0])));
        }
        g.add_edge(pair[0], pair[1]);
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.order());
    for e in g.edges() {
        s.push_str(&format!("{} {}\n", e.u, e.v));
    }
    s
}
