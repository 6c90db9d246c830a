//! Text formats for graphs: a plain edge list and graph6.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("bad graph6 string: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses lines of `u v`, with `#` comments and an optional `n <count>`
/// header. Without a header the vertex count is the largest id plus one.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let syntax = |message: &str| FormatError::Syntax {
            line: i + 1,
            message: message.to_string(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(syntax("expected two fields"));
        }
        if fields[0] == "n" {
            if declared.is_some() || !edges.is_empty() {
                return Err(syntax("vertex count must come first and only once"));
            }
            declared = Some(fields[1].parse::<usize>().map_err(|_| syntax("bad vertex count"))?);
            continue;
        }
        let u = fields[0].parse::<usize>().map_err(|_| syntax("bad vertex id"))?;
        let v = fields[1].parse::<usize>().map_err(|_| syntax("bad vertex id"))?;
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// `n <count>` followed by one `u v` line per edge with `u < v`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Encodes `g` in graph6: size prefix, then the upper triangle column by
/// column in 6-bit groups offset by 63.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        for shift in [12, 6, 0] {
            bytes.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        bytes.push(byte + 63);
    }
    String::from_utf8(bytes).expect("graph6 is printable ASCII")
}

pub fn decode_graph6(s: &str) -> Result<Graph, FormatError> {
    let bad = |m: &str| FormatError::Graph6(m.to_string());
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty"));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("character outside 63..126"));
    }
    let (n, rest) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(bad("unsupported size prefix"));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if rest.len() != pairs.div_ceil(6) {
        return Err(bad("length does not match vertex count"));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = rest[idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

/// Reads either format: a first content line without whitespace is taken
/// as graph6, anything else as an edge list.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some(first) if !first.contains(char::is_whitespace) => {
            if lines.next().is_some() {
                return Err(FormatError::Graph6("expected a single graph".into()));
            }
            decode_graph6(first)
        }
        _ => parse_edge_list(text),
    }
}

/// One graph6 string per line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, FormatError> {
    content_lines(text).map(decode_graph6).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_examples() {
        let g = parse_edge_list("# square\n0 1\n1 2\n2 3\n3 0\n").unwrap();
        assert_eq!(g, Graph::cycle(4));
        let g = parse_edge_list("n 1\n").unwrap();
        assert_eq!(g.n(), 1);
        let g = parse_edge_list("0 1\n0 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(parse_edge_list("1 1"), Err(FormatError::Graph(GraphError::LoopEdge(1)))));
        assert!(matches!(parse_edge_list("n 3\n0 5"), Err(FormatError::Graph(_))));
        assert!(matches!(parse_edge_list("0 x"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 1 2"), Err(FormatError::Syntax { .. })));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::complete_bipartite(2, 3);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_known_strings() {
        // reference encodings from the format description
        assert_eq!(encode_graph6(&Graph::complete(4)), "C~");
        assert_eq!(encode_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(decode_graph6("Dhc").unwrap(), Graph::cycle(5));
        assert_eq!(decode_graph6(">>graph6<<C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn graph6_round_trip_large() {
        let g = Graph::cycle(70);
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(decode_graph6("").is_err());
        assert!(decode_graph6("D").is_err());
        assert!(decode_graph6("D h").is_err());
    }

    #[test]
    fn auto_detection() {
        assert_eq!(parse_graph("Dhc\n").unwrap(), Graph::cycle(5));
        assert_eq!(parse_graph("0 1\n1 2\n2 0\n").unwrap(), Graph::cycle(3));
        assert_eq!(parse_graph("# c\nBw\n").unwrap(), Graph::cycle(3));
        let many = parse_graph6_lines("Bw\nC~\n").unwrap();
        assert_eq!(many, vec![Graph::cycle(3), Graph::complete(4)]);
    }
}
