//! Text formats: graph6, plain edge lists, and coloring lines.
//!
//! graph6 layout: a length header (`n+63` for n <= 62, `126` + 3 bytes for
//! larger n, `126 126` + 6 bytes beyond that), followed by the upper triangle
//! of the adjacency matrix in column-major order — bits x(0,1), x(0,2),
//! x(1,2), x(0,3), ... — packed big-endian into 6-bit groups, each offset
//! by 63 into the printable range.

use crate::error::{Error, Graph6ErrorKind, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
// Desk-scale cap: the 6-byte header form starts at 258048 vertices, far past
// anything this toolkit materializes, so that form only ever parses to a
// TooLarge error.
const MAX_N: usize = 4096;

fn g6_err(offset: usize, kind: Graph6ErrorKind) -> Error {
    Error::Graph6 { offset, kind }
}

/// Decodes one graph6 line into a `Graph`. Edges come out ordered by the
/// bit layout, i.e. sorted by (larger endpoint, smaller endpoint).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(g6_err(i, Graph6ErrorKind::NonPrintable(b)));
        }
    }
    if bytes.is_empty() {
        return Err(g6_err(0, Graph6ErrorKind::MalformedHeader));
    }

    let (n, body_start) = if bytes[0] != 126 {
        ((bytes[0] - OFFSET) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(g6_err(bytes.len(), Graph6ErrorKind::MalformedHeader));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - OFFSET) as usize;
        }
        if n < 63 {
            return Err(g6_err(0, Graph6ErrorKind::MalformedHeader));
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(g6_err(bytes.len(), Graph6ErrorKind::MalformedHeader));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - OFFSET) as usize;
        }
        if n < 258_048 {
            return Err(g6_err(0, Graph6ErrorKind::MalformedHeader));
        }
        (n, 8)
    };
    if n > MAX_N {
        return Err(g6_err(0, Graph6ErrorKind::TooLarge));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() < body_start + nbytes {
        return Err(g6_err(bytes.len(), Graph6ErrorKind::Truncated));
    }
    if bytes.len() > body_start + nbytes {
        return Err(g6_err(
            body_start + nbytes,
            Graph6ErrorKind::TrailingGarbage,
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[body_start + bit / 6] - OFFSET;
            if byte & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    // padding bits in the final group must be zero
    if nbits % 6 != 0 {
        let last = bytes[body_start + nbytes - 1] - OFFSET;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(
                body_start + nbytes - 1,
                Graph6ErrorKind::TrailingGarbage,
            ));
        }
    }

    Graph::new(n, edges)
}

/// Encodes a graph as a graph6 line.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph too large for this encoder");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }

    let mut matrix = vec![false; n * n];
    for &(u, v) in g.edges() {
        matrix[u * n + v] = true;
        matrix[v * n + u] = true;
    }
    let mut group = 0u8;
    let mut used = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if matrix[i * n + j] {
                group |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(group + OFFSET);
                group = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        group <<= 6 - used;
        out.push(group + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses a corpus file: one graph6 string per line. Blank lines and an
/// optional `>>graph6<<` file header are skipped. Returns `(line, graph)`
/// pairs in file order, without deduplication.
pub fn parse_graph6_file(text: &str) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for raw in text.lines() {
        let mut line = raw.trim();
        if let Some(rest) = line.strip_prefix(">>graph6<<") {
            line = rest.trim();
        }
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line)?;
        out.push((line.to_string(), g));
    }
    Ok(out)
}

/// Parses the plain edge-list format: first line `n m`, then `m` lines `u v`
/// with 0-based endpoints.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (lineno, header) = lines.next().ok_or_else(|| Error::EdgeList {
        line: 1,
        msg: "empty input".into(),
    })?;
    let mut it = header.split_whitespace();
    let parse_num = |tok: Option<&str>, lineno: usize, what: &str| -> Result<usize> {
        tok.ok_or_else(|| Error::EdgeList {
            line: lineno + 1,
            msg: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::EdgeList {
            line: lineno + 1,
            msg: format!("invalid {what}"),
        })
    };
    let n = parse_num(it.next(), lineno, "vertex count")?;
    let m = parse_num(it.next(), lineno, "edge count")?;
    if it.next().is_some() {
        return Err(Error::EdgeList {
            line: lineno + 1,
            msg: "extra tokens after `n m`".into(),
        });
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lineno, line) = lines.next().ok_or_else(|| Error::EdgeList {
            line: lineno + 2 + edges.len(),
            msg: format!("expected {m} edges, found {}", edges.len()),
        })?;
        let mut it = line.split_whitespace();
        let u = parse_num(it.next(), lineno, "endpoint")?;
        let v = parse_num(it.next(), lineno, "endpoint")?;
        if it.next().is_some() {
            return Err(Error::EdgeList {
                line: lineno + 1,
                msg: "extra tokens after edge".into(),
            });
        }
        edges.push((u, v));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::EdgeList {
            line: lineno + 1,
            msg: "trailing content after last edge".into(),
        });
    }
    Graph::new(n, edges)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses a coloring line: `m` whitespace-separated non-negative color ids,
/// one per edge index. Returns the raw (possibly unnormalized) ids.
pub fn parse_coloring_line(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Coloring(format!("invalid color id `{tok}`")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    // Independent re-implementation of the graph6 byte layout, used as the
    // oracle for the encoder/decoder pair. Only handles n <= 62.
    fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
        assert!(n <= 62);
        let mut bits: Vec<u8> = Vec::new();
        for j in 1..n {
            for i in 0..j {
                let has = edges
                    .iter()
                    .any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i));
                bits.push(has as u8);
            }
        }
        while !bits.len().is_multiple_of(6) {
            bits.push(0);
        }
        let mut s = String::new();
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for &b in chunk {
                v = (v << 1) | b;
            }
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn spec_strings_decode() {
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.n(), 3);
        assert!(k3.same_edge_set(&generate::complete(3)));
        assert_eq!(reference_encode(3, generate::complete(3).edges()), "Bw");

        let k4 = parse_graph6("C~").unwrap();
        assert!(k4.same_edge_set(&generate::complete(4)));
        assert_eq!(reference_encode(4, generate::complete(4).edges()), "C~");

        let e2 = parse_graph6("A_").unwrap();
        assert_eq!((e2.n(), e2.m()), (2, 1));
        assert_eq!(reference_encode(2, &[(0, 1)]), "A_");
    }

    #[test]
    fn encoder_matches_reference_on_small_graphs() {
        for n in 0..=5 {
            for g in generate::all_graphs(n) {
                assert_eq!(encode_graph6(&g), reference_encode(n, g.edges()));
            }
        }
    }

    #[test]
    fn round_trips_generated_graphs_up_to_n12() {
        let mut gs = vec![
            generate::complete(12),
            generate::complete_bipartite(5, 7),
            generate::cycle(12).unwrap(),
            generate::petersen(),
            generate::random_kec(9, 2, 7).unwrap(),
        ];
        for n in 1..=6 {
            gs.push(generate::complete(n));
            gs.push(generate::random_kec(n.max(3), 2, n as u64).unwrap());
        }
        for g in gs {
            let s = encode_graph6(&g);
            let h = parse_graph6(&s).unwrap();
            assert!(h.same_edge_set(&g));
            // decode -> encode is bit-exact
            assert_eq!(encode_graph6(&h), s);
        }
    }

    #[test]
    fn long_form_header_round_trips() {
        let g = generate::cycle(100).unwrap();
        let s = encode_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        let h = parse_graph6(&s).unwrap();
        assert!(h.same_edge_set(&g));
    }

    #[test]
    fn decode_errors_carry_byte_offsets() {
        // non-printable byte
        match parse_graph6("B\u{7f}w") {
            Err(Error::Graph6 {
                offset: 1,
                kind: Graph6ErrorKind::NonPrintable(_),
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // truncated body
        match parse_graph6("C") {
            Err(Error::Graph6 {
                offset: 1,
                kind: Graph6ErrorKind::Truncated,
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // trailing garbage
        match parse_graph6("Bww") {
            Err(Error::Graph6 {
                offset: 2,
                kind: Graph6ErrorKind::TrailingGarbage,
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // nonzero padding bits: K_3 has 3 adjacency bits, so the low 3 bits
        // of the single body byte must be zero ('w' is 111000).
        match parse_graph6("Bz") {
            Err(Error::Graph6 {
                offset: 1,
                kind: Graph6ErrorKind::TrailingGarbage,
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // the 6-byte header form necessarily names a graph past desk scale
        match parse_graph6("~~???~??") {
            Err(Error::Graph6 {
                offset: 0,
                kind: Graph6ErrorKind::TooLarge,
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // empty input
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = generate::complete_bipartite(2, 3);
        let text = format_edge_list(&g);
        let h = parse_edge_list(&text).unwrap();
        assert_eq!(g, h);

        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("2 1\n0 x\n").is_err());
    }

    #[test]
    fn coloring_line_parses() {
        assert_eq!(parse_coloring_line("0 0 1 2").unwrap(), vec![0, 0, 1, 2]);
        assert!(parse_coloring_line("0 -1").is_err());
        assert!(parse_coloring_line("").unwrap().is_empty());
    }

    #[test]
    fn corpus_reader_skips_header_and_blanks() {
        let text = ">>graph6<<Bw\n\nC~\n";
        let items = parse_graph6_file(text).unwrap();
        assert_eq!(items.len(), 2);
        assert_eq!(items[0].0, "Bw");
        assert_eq!(items[1].1.m(), 6);
    }
}
