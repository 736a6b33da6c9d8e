//! Text formats: edge lists, graph6 and facet lists.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with `0 <= u < v < n`.
//! Facet list: first line `n k`, then `k` lines of sorted vertex ids.

use std::fmt::Write as _;

use crate::complex::SimplicialComplex;
use crate::error::ParseError;
use crate::graph::Graph;

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    tok.parse()
        .map_err(|_| ParseError::at_line(line, format!("expected {what}, found {tok:?}")))
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, second: &str) -> Result<(usize, usize), ParseError> {
    let (line, text) = lines
        .next()
        .ok_or_else(|| ParseError::at_line(1, "missing header line"))?;
    let toks: Vec<&str> = text.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(ParseError::at_line(line, format!("header must be `n {second}`")));
    }
    Ok((parse_usize(toks[0], line, "vertex count")?, parse_usize(toks[1], line, second)?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = data_lines(text);
    let (n, m) = parse_header(&mut lines, "m")?;
    let mut g = Graph::empty(n);
    let mut count = 0;
    let mut last_line = 1;
    for (line, text) in lines {
        last_line = line;
        let toks: Vec<&str> = text.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(ParseError::at_line(line, "edge line must be `u v`"));
        }
        let u = parse_usize(toks[0], line, "vertex")?;
        let v = parse_usize(toks[1], line, "vertex")?;
        if u >= v || v >= n {
            return Err(ParseError::at_line(line, format!("edge ({u}, {v}) must satisfy 0 <= u < v < {n}")));
        }
        if g.has_edge(u, v) {
            return Err(ParseError::at_line(line, format!("duplicate edge ({u}, {v})")));
        }
        g.add_edge(u, v);
        count += 1;
    }
    if count != m {
        return Err(ParseError::at_line(last_line, format!("header promises {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 string (an optional `>>graph6<<` header is skipped).
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let raw = text.trim_end_matches(['\n', '\r']).as_bytes();
    let start = if raw.starts_with(GRAPH6_HEADER.as_bytes()) { GRAPH6_HEADER.len() } else { 0 };
    let bytes = &raw[start..];
    let at = |i: usize| start + i;
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(ParseError::at_byte(at(i), format!("byte {b:#04x} outside graph6 range 63..=126")));
        }
    }
    let six = |i: usize| -> Result<usize, ParseError> {
        bytes
            .get(i)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| ParseError::at_byte(at(i), "truncated graph6 data"))
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(ParseError::at_byte(at(0), "empty graph6 string")),
        Some(&126) if bytes.get(1) == Some(&126) => {
            let mut n = 0usize;
            for i in 2..8 {
                n = n << 6 | six(i)?;
            }
            (n, 8)
        }
        Some(&126) => {
            let mut n = 0usize;
            for i in 1..4 {
                n = n << 6 | six(i)?;
            }
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    let total_bits = n * n.saturating_sub(1) / 2;
    let need = total_bits.div_ceil(6);
    if bytes.len() - pos != need {
        return Err(ParseError::at_byte(
            at(bytes.len().min(pos + need)),
            format!("expected {need} adjacency bytes for n = {n}, found {}", bytes.len() - pos),
        ));
    }
    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let mut word = 0usize;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                word = six(pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if word >> left & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    debug_assert_eq!(bit, total_bits);
    if left > 0 && word & ((1 << left) - 1) != 0 {
        return Err(ParseError::at_byte(at(pos - 1), "non-zero padding bits"));
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(word + 63);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn parse_facet_list(text: &str) -> Result<SimplicialComplex, ParseError> {
    let mut lines = data_lines(text);
    let (n, k) = parse_header(&mut lines, "k")?;
    let mut facets = Vec::with_capacity(k);
    let mut last_line = 1;
    for (line, text) in lines {
        last_line = line;
        let facet = text
            .split_whitespace()
            .map(|t| parse_usize(t, line, "vertex"))
            .collect::<Result<Vec<_>, _>>()?;
        if facet.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ParseError::at_line(line, "facet vertices must be strictly increasing"));
        }
        if let Some(&v) = facet.iter().find(|&&v| v >= n) {
            return Err(ParseError::at_line(line, format!("vertex {v} out of range for n = {n}")));
        }
        facets.push(facet);
    }
    if facets.len() != k {
        return Err(ParseError::at_line(last_line, format!("header promises {k} facets, found {}", facets.len())));
    }
    SimplicialComplex::new(n, facets).map_err(|e| ParseError::at_line(last_line, e.to_string()))
}

pub fn write_facet_list(k: &SimplicialComplex) -> String {
    let mut out = format!("{} {}\n", k.n(), k.facets().len());
    for f in k.facets() {
        let line: Vec<String> = f.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Location;
    use crate::graph::generators::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = join_of_cycles(2, 8).unwrap();
        let text = write_edge_list(&g);
        assert!(text.starts_with("8 24\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);

        let err = parse_edge_list("3 2\n0 1\n2 1\n").unwrap_err();
        assert_eq!(err.location, Location::Line(3));
        let err = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(err.message.contains("promises 2"));
        let err = parse_edge_list("3 1\n0 x\n").unwrap_err();
        assert_eq!(err.location, Location::Line(2));
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn graph6_known_strings() {
        // K4 and the path P5.
        let k4 = complete_multipartite(&[1, 1, 1, 1]).unwrap();
        assert_eq!(write_graph6(&k4), "C~");
        let p = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&p), "DhC");
        assert_eq!(parse_graph6("DhC\n").unwrap(), p);
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), k4);
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn graph6_errors_carry_byte_offsets() {
        let err = parse_graph6("C~~").unwrap_err();
        assert!(matches!(err.location, Location::Byte(_)));
        let err = parse_graph6("C !").unwrap_err();
        assert_eq!(err.location, Location::Byte(1));
        let err = parse_graph6("").unwrap_err();
        assert_eq!(err.location, Location::Byte(0));
    }

    #[test]
    fn graph6_large_order() {
        let g = cycle(100).unwrap();
        let s = write_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn facet_list_parse() {
        let k = parse_facet_list("3 3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(k.facets().len(), 3);
        assert_eq!(parse_facet_list(&write_facet_list(&k)).unwrap(), k);
        let err = parse_facet_list("3 1\n1 0\n").unwrap_err();
        assert_eq!(err.location, Location::Line(2));
        assert!(parse_facet_list("3 1\n0 5\n").is_err());
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..70, bits in proptest::collection::vec(any::<bool>(), 0..2415)) {
            let mut g = Graph::empty(n);
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits.get(idx).copied().unwrap_or(false) { g.add_edge(u, v); }
                    idx += 1;
                }
            }
            prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
