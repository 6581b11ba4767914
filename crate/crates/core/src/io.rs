//! Text formats: edge lists, graph6, colouring files and their JSON mirror.
//!
//! Edge lists hold one `u v` pair per line; a line with one vertex adds it
//! isolated. `#` starts a comment. Vertices are unsigned integers or
//! double-quoted strings; as soon as one vertex is not a bare integer,
//! every vertex is treated as a name and numbered in order of appearance.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::colouring::{Colour, TotalColouring};
use crate::graph::{Edge, Graph, GraphError, Vertex};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse { line, msg: msg.into() }
}

/// Printable names of the vertices of a parsed graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Names {
    by_vertex: BTreeMap<Vertex, String>,
    by_name: BTreeMap<String, Vertex>,
}

impl Names {
    fn insert(&mut self, v: Vertex, name: String) {
        self.by_name.insert(name.clone(), v);
        self.by_vertex.insert(v, name);
    }

    /// Names equal to the vertex ids.
    pub fn numeric(g: &Graph) -> Names {
        let mut names = Names::default();
        for v in g.vertices() {
            names.insert(v, v.0.to_string());
        }
        names
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.by_name.get(name).copied()
    }

    /// The name of `v`, or its id for vertices not read from input.
    pub fn name(&self, v: Vertex) -> String {
        self.by_vertex.get(&v).cloned().unwrap_or_else(|| v.0.to_string())
    }

    /// The name of `v` as written in files: quoted unless a bare integer.
    pub fn token(&self, v: Vertex) -> String {
        let name = self.name(v);
        if !name.is_empty() && name.bytes().all(|b| b.is_ascii_digit()) {
            name
        } else {
            format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Token {
    text: String,
    quoted: bool,
}

fn tokenize(line: &str, lineno: usize) -> Result<Vec<Token>, IoError> {
    let line = match line.find('#') {
        // a '#' inside quotes is part of a name
        Some(_) => strip_comment(line),
        None => line,
    };
    let mut out = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '"' {
            chars.next();
            let mut text = String::new();
            loop {
                match chars.next() {
                    Some('"') => break,
                    Some('\\') => match chars.next() {
                        Some(e) => text.push(e),
                        None => return Err(parse_err(lineno, "unterminated escape")),
                    },
                    Some(ch) => text.push(ch),
                    None => return Err(parse_err(lineno, "unterminated quoted name")),
                }
            }
            out.push(Token { text, quoted: true });
        } else {
            let mut text = String::new();
            while let Some(&ch) = chars.peek() {
                if ch.is_whitespace() {
                    break;
                }
                if ch == '"' {
                    return Err(parse_err(lineno, "quote inside a bare token"));
                }
                text.push(ch);
                chars.next();
            }
            out.push(Token { text, quoted: false });
        }
    }
    Ok(out)
}

fn strip_comment(line: &str) -> &str {
    let mut quoted = false;
    let mut escaped = false;
    for (i, c) in line.char_indices() {
        match c {
            _ if escaped => escaped = false,
            '\\' if quoted => escaped = true,
            '"' => quoted = !quoted,
            '#' if !quoted => return &line[..i],
            _ => {}
        }
    }
    line
}

fn bare_id(t: &Token) -> Option<u32> {
    if t.quoted {
        return None;
    }
    t.text.parse::<u32>().ok().filter(|&id| id < Vertex::SYNTHETIC_BASE)
}

/// Reads an edge list.
pub fn parse_edge_list(text: &str) -> Result<(Graph, Names), IoError> {
    let mut lines = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let toks = tokenize(line, i + 1)?;
        match toks.len() {
            0 => {}
            1 | 2 => lines.push((i + 1, toks)),
            n => return Err(parse_err(i + 1, format!("expected one or two vertices, found {n} tokens"))),
        }
    }
    let numeric = lines.iter().flat_map(|(_, t)| t).all(|t| bare_id(t).is_some());
    let mut names = Names::default();
    let mut g = Graph::new();
    let mut next = 0u32;
    for (lineno, toks) in &lines {
        let mut vs = Vec::with_capacity(2);
        for t in toks {
            let v = if numeric {
                let v = Vertex(bare_id(t).unwrap());
                names.insert(v, t.text.clone());
                v
            } else if let Some(v) = names.vertex(&t.text) {
                v
            } else {
                let v = Vertex(next);
                next += 1;
                names.insert(v, t.text.clone());
                v
            };
            g.add_vertex(v);
            vs.push(v);
        }
        if let [a, b] = vs[..] {
            if a == b {
                return Err(parse_err(*lineno, format!("loop at {}", names.token(a))));
            }
            if g.has_edge(a, b) {
                return Err(parse_err(*lineno, format!("repeated edge {} {}", names.token(a), names.token(b))));
            }
            g.add_edge(a, b)?;
        }
    }
    Ok((g, names))
}

pub fn write_edge_list(g: &Graph, names: &Names) -> String {
    let mut out = String::new();
    for v in g.vertices().filter(|&v| g.deg(v) == 0) {
        writeln!(out, "{}", names.token(v)).unwrap();
    }
    for e in g.edges() {
        let (a, b) = e.endpoints();
        writeln!(out, "{} {}", names.token(a), names.token(b)).unwrap();
    }
    out
}

/// Decodes one graph6 string; vertices are `0..n`.
pub fn parse_graph6(text: &str) -> Result<Graph, IoError> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(IoError::Graph6("byte outside 63..=126".into()));
    }
    let six = |i: usize| -> Result<u64, IoError> {
        bytes
            .get(i)
            .map(|&b| u64::from(b - 63))
            .ok_or_else(|| IoError::Graph6("truncated".into()))
    };
    let (n, mut pos) = if bytes.first() != Some(&126) {
        (six(0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        ((six(1)? << 12) | (six(2)? << 6) | six(3)?, 4)
    } else {
        let mut n = 0;
        for i in 2..8 {
            n = (n << 6) | six(i)?;
        }
        (n, 8)
    };
    if n >= u64::from(Vertex::SYNTHETIC_BASE) {
        return Err(IoError::Graph6(format!("{n} vertices is too many")));
    }
    let n = n as u32;
    let needed = (n as usize * n.saturating_sub(1) as usize / 2).div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(IoError::Graph6(format!(
            "expected {needed} adjacency bytes, found {}",
            bytes.len() - pos
        )));
    }
    let mut g = Graph::new();
    for v in 0..n {
        g.add_vertex(Vertex(v));
    }
    let mut bit = 0;
    let mut cur = 0;
    for j in 1..n {
        for i in 0..j {
            if bit == 0 {
                cur = six(pos)?;
                pos += 1;
                bit = 6;
            }
            bit -= 1;
            if (cur >> bit) & 1 == 1 {
                g.add_edge(Vertex(i), Vertex(j))?;
            }
        }
    }
    Ok(g)
}

/// graph6 encoding of `g` with vertices renumbered in ascending order.
pub fn write_graph6(g: &Graph) -> String {
    let ids: Vec<Vertex> = g.vertices().collect();
    let index: BTreeMap<Vertex, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = ids.len();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.extend([126, ((n >> 12) & 63) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut cur = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            cur <<= 1;
            if g.has_edge(ids[i], ids[j]) {
                cur |= 1;
            }
            bits += 1;
            if bits == 6 {
                out.push(cur + 63);
                cur = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((cur << (6 - bits)) + 63);
    }
    debug_assert_eq!(index.len(), n);
    String::from_utf8(out).expect("graph6 is ascii")
}

fn colour_token(t: &Token, lineno: usize) -> Result<Colour, IoError> {
    t.text
        .parse::<Colour>()
        .ok()
        .filter(|&c| c >= 1 && !t.quoted)
        .ok_or_else(|| parse_err(lineno, format!("bad colour {:?}", t.text)))
}

/// Reads `v <id> <colour>` and `e <id> <id> <colour>` lines.
pub fn parse_colouring(text: &str, names: &Names) -> Result<TotalColouring, IoError> {
    let mut c = TotalColouring::new(0);
    let mut max = 0;
    let vertex = |t: &Token, lineno: usize| {
        names
            .vertex(&t.text)
            .ok_or_else(|| parse_err(lineno, format!("unknown vertex {:?}", t.text)))
    };
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let toks = tokenize(line, lineno)?;
        let Some(kind) = toks.first() else {
            continue;
        };
        match (kind.text.as_str(), toks.len()) {
            ("v", 3) if !kind.quoted => {
                let v = vertex(&toks[1], lineno)?;
                let col = colour_token(&toks[2], lineno)?;
                if c.vertex(v).is_some() {
                    return Err(parse_err(lineno, format!("vertex {} coloured twice", names.token(v))));
                }
                c.set_vertex(v, col);
                max = max.max(col);
            }
            ("e", 4) if !kind.quoted => {
                let (a, b) = (vertex(&toks[1], lineno)?, vertex(&toks[2], lineno)?);
                if a == b {
                    return Err(parse_err(lineno, "edge with equal ends"));
                }
                let col = colour_token(&toks[3], lineno)?;
                let e = Edge::new(a, b);
                if c.edge(e).is_some() {
                    return Err(parse_err(lineno, format!("edge {} {} coloured twice", names.token(a), names.token(b))));
                }
                c.set_edge(e, col);
                max = max.max(col);
            }
            _ => return Err(parse_err(lineno, "expected `v <id> <colour>` or `e <id> <id> <colour>`")),
        }
    }
    c.set_palette(max);
    Ok(c)
}

pub fn write_colouring(c: &TotalColouring, names: &Names) -> String {
    let mut out = String::new();
    for (v, col) in c.vertex_colours() {
        writeln!(out, "v {} {col}", names.token(v)).unwrap();
    }
    for (e, col) in c.edge_colours() {
        let (a, b) = e.endpoints();
        writeln!(out, "e {} {} {col}", names.token(a), names.token(b)).unwrap();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonEdge {
    pub u: String,
    pub v: String,
    pub colour: Colour,
}

/// JSON mirror of a colouring file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonColouring {
    pub vertices: BTreeMap<String, Colour>,
    pub edges: Vec<JsonEdge>,
    pub palette: Colour,
}

impl JsonColouring {
    pub fn new(c: &TotalColouring, names: &Names) -> JsonColouring {
        JsonColouring {
            vertices: c.vertex_colours().map(|(v, col)| (names.name(v), col)).collect(),
            edges: c
                .edge_colours()
                .map(|(e, colour)| {
                    let (a, b) = e.endpoints();
                    JsonEdge {
                        u: names.name(a),
                        v: names.name(b),
                        colour,
                    }
                })
                .collect(),
            palette: c.palette(),
        }
    }

    pub fn to_colouring(&self, names: &Names) -> Result<TotalColouring, IoError> {
        let unknown = |n: &str| IoError::Parse {
            line: 0,
            msg: format!("unknown vertex {n:?}"),
        };
        let mut c = TotalColouring::new(self.palette);
        for (name, &col) in &self.vertices {
            c.set_vertex(names.vertex(name).ok_or_else(|| unknown(name))?, col);
        }
        for e in &self.edges {
            let a = names.vertex(&e.u).ok_or_else(|| unknown(&e.u))?;
            let b = names.vertex(&e.v).ok_or_else(|| unknown(&e.v))?;
            c.set_edge(Edge::new(a, b), e.colour);
        }
        Ok(c)
    }
}

pub fn parse_json_colouring(text: &str, names: &Names) -> Result<TotalColouring, IoError> {
    let parsed: JsonColouring = serde_json::from_str(text)?;
    parsed.to_colouring(names)
}

pub fn to_json(c: &TotalColouring, names: &Names) -> String {
    serde_json::to_string_pretty(&JsonColouring::new(c, names)).expect("colouring serialises")
}
