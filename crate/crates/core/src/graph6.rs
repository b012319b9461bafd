//! graph6 encoding plus a plain 0/1 adjacency-matrix text form.
//!
//! graph6 layout: a size header (`n + 63` for `n <= 62`, otherwise `~`
//! followed by three 6-bit groups), then the upper triangle read column by
//! column — `(0,1), (0,2), (1,2), (0,3), ...` — packed six bits per byte,
//! most significant first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
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
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {bad:#04x} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        (bytes[0] as usize - 63, &bytes[1..])
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::TooManyVertices(1 << 18));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size header".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n <= 62 {
            return Err(Error::Graph6(format!("long header used for n = {n}")));
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Parse every non-blank line of a graph6 file.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(from_graph6)
        .collect()
}

/// `n` lines of `n` characters from `{0,1}`; must be symmetric with a zero diagonal.
pub fn from_adjacency_matrix(text: &str) -> Result<Graph> {
    let rows: Vec<&str> = text
        .lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty())
        .collect();
    let n = rows.len();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut g = Graph::empty(n);
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<char> = row.chars().filter(|c| !c.is_whitespace()).collect();
        if cells.len() != n {
            return Err(Error::AdjacencyMatrix(format!(
                "row {i} has {} entries, expected {n}",
                cells.len()
            )));
        }
        for (j, c) in cells.into_iter().enumerate() {
            match c {
                '0' => {}
                '1' if i == j => {
                    return Err(Error::AdjacencyMatrix(format!("nonzero diagonal at {i}")))
                }
                '1' => {
                    if j > i {
                        g.add_edge(i, j);
                    } else if !g.has_edge(i, j) {
                        return Err(Error::AdjacencyMatrix(format!("asymmetric at ({i},{j})")));
                    }
                }
                other => {
                    return Err(Error::AdjacencyMatrix(format!("unexpected character {other:?}")))
                }
            }
        }
    }
    // lower triangle zeros against upper triangle ones
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row.chars().filter(|c| !c.is_whitespace()).enumerate() {
            if j < i && c == '0' && g.has_edge(i, j) {
                return Err(Error::AdjacencyMatrix(format!("asymmetric at ({i},{j})")));
            }
        }
    }
    Ok(g)
}

pub fn to_adjacency_matrix(g: &Graph) -> String {
    let mut s = String::with_capacity(g.n() * (g.n() + 1));
    for i in 0..g.n() {
        for j in 0..g.n() {
            s.push(if g.has_edge(i, j) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_decoded_star() {
        // '?' = 000000, '{' = 111100: the last four pair bits are (0,4),(1,4),(2,4),(3,4)
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn smallest_codes() {
        assert_eq!(from_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        // 111 padded to 111000 = 56, + 63 = 'w'
        assert_eq!(to_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(from_graph6("Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn long_header() {
        let g = Graph::cycle(64);
        let code = to_graph6(&g);
        assert!(code.starts_with("~?@?"));
        assert_eq!(from_graph6(&code).unwrap(), g);
        let g63 = Graph::path(63);
        assert_eq!(from_graph6(&to_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D?").is_err());
        assert!(from_graph6("D?{{").is_err());
        assert!(from_graph6("B\x20").is_err());
        // 'x' = 57 = 111001: padding bits set
        assert!(matches!(from_graph6("Bx"), Err(Error::Graph6(_))));
        assert!(matches!(from_graph6("~?@@"), Err(Error::TooManyVertices(65))));
        assert!(from_graph6("~~??????").is_err());
    }

    #[test]
    fn adjacency_matrix_roundtrip() {
        let g = Graph::cycle(5);
        let text = to_adjacency_matrix(&g);
        assert_eq!(from_adjacency_matrix(&text).unwrap(), g);
        assert!(from_adjacency_matrix("01\n00\n").is_err());
        assert!(from_adjacency_matrix("1\n").is_err());
        assert!(from_adjacency_matrix("010\n101\n").is_err());
    }
}
