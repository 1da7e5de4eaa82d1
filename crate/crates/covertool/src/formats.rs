//! Graph text formats: whitespace edge lists (with `#` comments) and the
//! standard graph6 encoding.

use anyhow::{anyhow, bail, Context, Result};
use coverideal::Graph;

/// Parses either format. A single non-comment line without whitespace is
/// taken as graph6 (vertices named x1..xn); anything else is an edge list
/// with one `a b` pair per line and vertices in first-appearance order.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let lines: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect();
    if lines.is_empty() {
        bail!("empty graph input");
    }
    if lines.len() == 1 && !lines[0].contains(char::is_whitespace) {
        return parse_graph6(lines[0]);
    }
    parse_edge_list(&lines)
}

fn parse_edge_list(lines: &[&str]) -> Result<Graph> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    for (idx, line) in lines.iter().enumerate() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            bail!("malformed edge on line {}: expected two vertex names, got {:?}", idx + 1, line);
        }
        for t in &tokens {
            if !vertices.iter().any(|v| v == t) {
                vertices.push(t.to_string());
            }
        }
        edges.push((tokens[0].to_string(), tokens[1].to_string()));
    }
    Graph::new(vertices, &edges).map_err(|e| anyhow!("{e}"))
}

/// Decodes a graph6 line; vertices are named x1..xn.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        bail!("empty graph6 string");
    }
    let (n, offset) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            bail!("truncated graph6 size block");
        }
        if bytes[1] == 126 {
            bail!("graph6 inputs beyond 258047 vertices are not supported");
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            let v = b.checked_sub(63).context("invalid graph6 size byte")?;
            if v >= 64 {
                bail!("invalid graph6 size byte");
            }
            n = (n << 6) | v as usize;
        }
        (n, 4)
    } else {
        let v = bytes[0].checked_sub(63).context("invalid graph6 size byte")?;
        if v >= 63 {
            bail!("invalid graph6 size byte");
        }
        (v as usize, 1)
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - offset != nbytes {
        bail!(
            "graph6 payload length mismatch: expected {nbytes} bytes for {n} vertices, got {}",
            bytes.len() - offset
        );
    }
    let mut bits = Vec::with_capacity(nbytes * 6);
    for &b in &bytes[offset..] {
        let v = b.checked_sub(63).context("invalid graph6 data byte")?;
        if v >= 64 {
            bail!("invalid graph6 data byte");
        }
        for t in (0..6).rev() {
            bits.push(v >> t & 1 == 1);
        }
    }
    let vertices: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[pos] {
                edges.push((format!("x{}", i + 1), format!("x{}", j + 1)));
            }
            pos += 1;
        }
    }
    Graph::new(vertices, &edges).map_err(|e| anyhow!("{e}"))
}

/// Encodes into graph6 using the graph's own vertex order.
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > 62 {
        bail!("graph6 writer supports at most 62 vertices, got {n}");
    }
    let mut repr = String::new();
    repr.push(char::from_u32(n as u32 + 63).expect("valid size char"));
    let mut bits: Vec<bool> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u32;
        for &b in chunk {
            v = (v << 1) | b as u32;
        }
        repr.push(char::from_u32(v + 63).expect("valid data char"));
    }
    Ok(repr)
}
