//! Edge-list text format.
//!
//! ```text
//! vertices a b c
//! e1 a b
//! e2 b c
//! ```

use crate::{Graph, GraphError};

pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line, msg: &str| GraphError::Parse { line, msg: msg.to_string() };

    let (ln, header) = lines.next().ok_or_else(|| err(0, "empty graph file"))?;
    let rest = header.strip_prefix("vertices").ok_or_else(|| err(ln, "expected `vertices ...`"))?;
    let vertices: Vec<String> = rest.split_whitespace().map(str::to_string).collect();

    let mut edges = Vec::new();
    for (ln, line) in lines {
        let w: Vec<&str> = line.split_whitespace().collect();
        match w.as_slice() {
            [l, t, h] => edges.push((*l, *t, *h)),
            _ => return Err(err(ln, "expected `label tail head`")),
        }
    }
    Graph::new(vertices, &edges).map_err(|e| match e {
        GraphError::Parse { .. } => e,
        other => err(ln, &other.to_string()),
    })
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("vertices {}\n", g.vertices().join(" "));
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.label, g.vertices()[e.tail], g.vertices()[e.head]));
    }
    out
}
