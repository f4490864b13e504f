//! graph6 codec (short form, n <= 62) and the plain-text edge list format.
//!
//! graph6 packs the upper triangle column-major — x(0,1), x(0,2), x(1,2),
//! x(0,3), ... — into 6-bit groups, each stored as `value + 63` so the
//! whole string stays printable. The edge list format is one `i-j` pair per
//! line with 1-based indices; an `n=<N>` header is required only when the
//! graph has isolated vertices (otherwise `n` is the largest index seen).

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodecError {
    Empty,
    /// Byte outside the printable graph6 range 63..=126.
    ByteOutOfRange { index: usize, byte: u8 },
    /// `~` size prefix: long form is not supported.
    UnsupportedLongForm,
    SizeOutOfRange(usize),
    WrongLength { expected: usize, got: usize },
    NonzeroPadding,
    /// Edge list line that is not `i-j` or a valid header.
    BadLine { line: usize, content: String },
    /// Edge endpoint outside `1..=n` or a self-loop.
    BadEdge { line: usize, content: String },
    Graph(GraphError),
}

impl fmt::Display for CodecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodecError::Empty => write!(f, "empty graph6 string"),
            CodecError::ByteOutOfRange { index, byte } => {
                write!(f, "byte {byte:#04x} at position {index} outside graph6 range 63..=126")
            }
            CodecError::UnsupportedLongForm => {
                write!(f, "graph6 long form (n > 62) not supported")
            }
            CodecError::SizeOutOfRange(n) => {
                write!(f, "vertex count {n} outside supported range 1..=62")
            }
            CodecError::WrongLength { expected, got } => {
                write!(f, "graph6 data length {got} bytes, expected {expected}")
            }
            CodecError::NonzeroPadding => write!(f, "nonzero padding bits in final group"),
            CodecError::BadLine { line, content } => {
                write!(f, "line {line}: expected `i-j` or `n=<N>`, got {content:?}")
            }
            CodecError::BadEdge { line, content } => {
                write!(f, "line {line}: invalid edge {content:?}")
            }
            CodecError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CodecError {}

impl From<GraphError> for CodecError {
    fn from(e: GraphError) -> Self {
        CodecError::Graph(e)
    }
}

fn pair_bits(n: usize) -> usize {
    n * (n - 1) / 2
}

fn data_bytes(n: usize) -> usize {
    pair_bits(n).div_ceil(6)
}

/// Decode a graph6 short-form string.
pub fn decode_graph6(s: &str) -> Result<Graph, CodecError> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(CodecError::Empty);
    }
    for (index, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(CodecError::ByteOutOfRange { index, byte });
        }
    }
    if bytes[0] == 126 {
        return Err(CodecError::UnsupportedLongForm);
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 || n > MAX_VERTICES {
        return Err(CodecError::SizeOutOfRange(n));
    }
    let expected = data_bytes(n);
    let got = bytes.len() - 1;
    if got != expected {
        return Err(CodecError::WrongLength { expected, got });
    }

    let mut g = Graph::new(n)?;
    let mut t = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = bytes[1 + t / 6] - 63;
            if group >> (5 - t % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            t += 1;
        }
    }
    // remaining bits of the last group must be zero
    while !t.is_multiple_of(6) {
        let group = bytes[1 + t / 6] - 63;
        if group >> (5 - t % 6) & 1 == 1 {
            return Err(CodecError::NonzeroPadding);
        }
        t += 1;
    }
    Ok(g)
}

/// Encode a graph as a graph6 short-form string, preserving the labeling.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + data_bytes(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parse the 1-based `i-j` edge list format.
pub fn parse_edge_list(text: &str) -> Result<Graph, CodecError> {
    let mut header_n: Option<usize> = None;
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new(); // (i, j, line number)
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        if let Some(rest) = line.strip_prefix("n=") {
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| CodecError::BadLine { line: lineno, content: line.to_string() })?;
            header_n = Some(n);
            continue;
        }
        let (a, b) = line
            .split_once('-')
            .ok_or_else(|| CodecError::BadLine { line: lineno, content: line.to_string() })?;
        let i: usize = a
            .trim()
            .parse()
            .map_err(|_| CodecError::BadLine { line: lineno, content: line.to_string() })?;
        let j: usize = b
            .trim()
            .parse()
            .map_err(|_| CodecError::BadLine { line: lineno, content: line.to_string() })?;
        if i == 0 || j == 0 || i == j {
            return Err(CodecError::BadEdge { line: lineno, content: line.to_string() });
        }
        pairs.push((i, j, lineno));
    }

    let max_seen = pairs.iter().map(|&(i, j, _)| i.max(j)).max().unwrap_or(0);
    let n = match header_n {
        Some(n) => n,
        None if max_seen > 0 => max_seen,
        None => return Err(CodecError::SizeOutOfRange(0)),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(CodecError::SizeOutOfRange(n));
    }

    let mut g = Graph::new(n)?;
    for (i, j, lineno) in pairs {
        if i > n || j > n {
            return Err(CodecError::BadEdge { line: lineno, content: format!("{i}-{j}") });
        }
        g.add_edge(i - 1, j - 1)?;
    }
    Ok(g)
}

/// Render the 1-based edge list; emits the `n=<N>` header exactly when the
/// graph has an isolated vertex (its size would otherwise be ambiguous).
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    if g.degree_sequence().contains(&0) {
        out.push_str(&format!("n={}\n", g.n()));
    }
    for (i, j) in g.edges() {
        out.push_str(&format!("{}-{}\n", i + 1, j + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFERENCE_N5_EDGES: [(usize, usize); 8] =
        [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5)];

    fn reference_n5() -> Graph {
        let edges: Vec<_> = REFERENCE_N5_EDGES.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
        Graph::from_edges(5, &edges).unwrap()
    }

    #[test]
    fn decodes_the_five_vertex_example_label_exactly() {
        let g = decode_graph6("D}k").unwrap();
        assert_eq!(g, reference_n5());
    }

    #[test]
    fn encodes_k2_and_round_trips() {
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(encode_graph6(&k2), "A_");
        assert_eq!(decode_graph6("A_").unwrap(), k2);
        assert_eq!(encode_graph6(&decode_graph6("D}k").unwrap()), "D}k");
    }

    #[test]
    fn single_vertex_has_no_data_bytes() {
        let g = decode_graph6("@").unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.diameter(), Some(0));
        assert_eq!(encode_graph6(&g), "@");
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(decode_graph6(""), Err(CodecError::Empty));
        assert_eq!(decode_graph6("?"), Err(CodecError::SizeOutOfRange(0)));
        assert_eq!(decode_graph6("~AA"), Err(CodecError::UnsupportedLongForm));
        assert!(matches!(
            decode_graph6("D}"),
            Err(CodecError::WrongLength { expected: 2, got: 1 })
        ));
        assert!(matches!(
            decode_graph6("A\x20"),
            Err(CodecError::ByteOutOfRange { index: 1, byte: 0x20 })
        ));
        // K2 with a stray bit in the padding
        assert_eq!(decode_graph6("A`"), Err(CodecError::NonzeroPadding));
    }

    #[test]
    fn petersen_string_matches_its_edge_list() {
        let g = decode_graph6("IUYAHCPBG").unwrap();
        let edges_1based = [
            (1, 3), (1, 4), (1, 6), (2, 4), (2, 5), (2, 7), (3, 5), (3, 8),
            (4, 9), (5, 10), (6, 7), (6, 10), (7, 8), (8, 9), (9, 10),
        ];
        let edges: Vec<_> = edges_1based.iter().map(|&(i, j)| (i - 1, j - 1)).collect();
        assert_eq!(g, Graph::from_edges(10, &edges).unwrap());
        assert!(g.is_k_regular(3));
        assert_eq!(g.diameter(), Some(2));
    }

    #[test]
    fn edge_list_round_trip_and_header() {
        let g = reference_n5();
        let text = format_edge_list(&g);
        assert_eq!(text, "1-2\n1-3\n1-4\n1-5\n2-3\n2-4\n3-5\n4-5\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);

        let mut with_isolated = Graph::new(3).unwrap();
        with_isolated.add_edge(0, 1).unwrap();
        let text = format_edge_list(&with_isolated);
        assert!(text.starts_with("n=3\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), with_isolated);
    }

    #[test]
    fn edge_list_rejects_bad_lines() {
        assert!(matches!(
            parse_edge_list("1-1\n"),
            Err(CodecError::BadEdge { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("1,2\n"),
            Err(CodecError::BadLine { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("n=3\n1-4\n"),
            Err(CodecError::BadEdge { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list("\n\n"), Err(CodecError::SizeOutOfRange(0))));
    }
}
