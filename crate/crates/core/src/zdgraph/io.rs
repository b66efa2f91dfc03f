//! Text formats for graphs: edge lists in, DOT out.
//!
//! The edge-list format is one `u v` pair per line, 0-based, whitespace
//! separated; `#` starts a comment running to the end of the line and blank
//! lines are skipped.  The vertex count is one past the largest endpoint
//! mentioned, so isolated vertices are not representable — every graph this
//! toolkit cares about is connected.

use super::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: expected `u v`, found `{content}`")]
    BadLine { line: usize, content: String },
    #[error("line {line}: `{token}` is not a vertex index")]
    BadVertex { line: usize, token: String },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
}

/// Parses the edge-list format.
pub fn parse_edge_list(input: &str) -> Result<Graph, EdgeListError> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_vertex = None;
    for (i, raw_line) in input.lines().enumerate() {
        let line = i + 1;
        let text = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let mut tokens = text.split_whitespace();
        let Some(first) = tokens.next() else {
            continue;
        };
        let (second, rest) = (tokens.next(), tokens.next());
        if second.is_none() || rest.is_some() {
            return Err(EdgeListError::BadLine {
                line,
                content: text.trim().to_owned(),
            });
        }
        let parse = |token: &str| {
            token
                .parse::<usize>()
                .map_err(|_| EdgeListError::BadVertex {
                    line,
                    token: token.to_owned(),
                })
        };
        let u = parse(first)?;
        let v = parse(second.unwrap())?;
        if u == v {
            return Err(EdgeListError::SelfLoop { line, v });
        }
        max_vertex = max_vertex.max(Some(u.max(v)));
        edges.push((u, v));
    }
    let n = max_vertex.map_or(0, |m| m + 1);
    let mut g = Graph::new(n);
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Renders the edge-list format: edges ascending by endpoint pair.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for u in 0..g.n_vertices() {
        for v in g.neighborhood(u).iter() {
            if u < v {
                out.push_str(&format!("{u} {v}\n"));
            }
        }
    }
    out
}

/// Fill colors for layer-colored DOT output, reused cyclically.
const LAYER_COLORS: [&str; 8] = [
    "#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6", "#ffff99", "#1f78b4", "#33a02c",
];

/// Renders the graph in DOT.  Vertices carry their labels; when `layer_of`
/// is supplied (one layer index per vertex), vertices are filled with one
/// color per layer.
pub fn to_dot(g: &Graph, layer_of: Option<&[usize]>) -> String {
    if let Some(layers) = layer_of {
        assert_eq!(layers.len(), g.n_vertices(), "one layer per vertex");
    }
    let mut out = String::from("graph zero_divisors {\n  node [shape=circle];\n");
    for v in 0..g.n_vertices() {
        let label = escape(&g.display_label(v));
        match layer_of {
            Some(layers) => {
                let color = LAYER_COLORS[(layers[v].max(1) - 1) % LAYER_COLORS.len()];
                out.push_str(&format!(
                    "  v{v} [label=\"{label}\", style=filled, fillcolor=\"{color}\"];\n"
                ));
            }
            None => out.push_str(&format!("  v{v} [label=\"{label}\"];\n")),
        }
    }
    for u in 0..g.n_vertices() {
        for v in g.neighborhood(u).iter() {
            if u < v {
                out.push_str(&format!("  v{u} -- v{v};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}
