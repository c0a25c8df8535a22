//! DIMACS edge format: `p edge <n> <m>`, `e <u> <v>` with 1-based ids,
//! comment lines starting with `c`.
//!
//! Vertex ids in the loaded graph are the file's ids, so vertex `1` of the
//! file is vertex `1` of the graph.

use std::fmt::Write as _;

use crate::graph::{Graph, GraphError, Vertex};

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse { line, msg: msg.into() }
}

pub fn load_graph(text: &str) -> Result<Graph, GraphError> {
    let mut graph: Option<Graph> = None;
    let mut declared = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if graph.is_some() {
                    return Err(parse_err(lineno, "duplicate problem line"));
                }
                if fields.len() != 4 || (fields[1] != "edge" && fields[1] != "col") {
                    return Err(parse_err(lineno, "expected `p edge <n> <m>`"));
                }
                let n: usize = fields[2]
                    .parse()
                    .map_err(|_| parse_err(lineno, format!("bad vertex count `{}`", fields[2])))?;
                declared = n;
                fields[3]
                    .parse::<usize>()
                    .map_err(|_| parse_err(lineno, format!("bad edge count `{}`", fields[3])))?;
                graph = Some(Graph::with_vertices(1..=n));
            }
            "e" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| parse_err(lineno, "edge before problem line"))?;
                if fields.len() != 3 {
                    return Err(parse_err(lineno, "expected `e <u> <v>`"));
                }
                let mut ends = [0usize; 2];
                for (slot, tok) in ends.iter_mut().zip(&fields[1..]) {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| parse_err(lineno, format!("bad vertex id `{tok}`")))?;
                    if v == 0 || v > declared {
                        return Err(parse_err(lineno, format!("vertex id {v} out of range 1..={declared}")));
                    }
                    *slot = v;
                }
                g.add_edge(ends[0], ends[1])?;
            }
            other => return Err(parse_err(lineno, format!("unknown line type `{other}`"))),
        }
    }
    graph.ok_or_else(|| parse_err(0, "missing problem line"))
}

/// Serializes `g`. Ids are renumbered `1..=n` in ascending order when the
/// graph's ids are not already exactly `1..=n`.
pub fn write_graph(g: &Graph, comments: &[&str]) -> String {
    let ids: Vec<Vertex> = g.vertices().collect();
    let mut index = vec![0usize; g.capacity()];
    for (i, &v) in ids.iter().enumerate() {
        index[v] = i + 1;
    }
    let mut out = String::new();
    for c in comments {
        for l in c.lines() {
            let _ = writeln!(out, "c {l}");
        }
    }
    let _ = writeln!(out, "p edge {} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", index[u], index[v]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = load_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
        assert!(g.has_edge(1, 3));
    }

    #[test]
    fn self_loop_is_rejected() {
        assert_eq!(load_graph("p edge 2 1\ne 1 1\n"), Err(GraphError::InvalidEdge(1, 1)));
    }

    #[test]
    fn duplicates_collapse_and_comments_are_skipped() {
        let g = load_graph("c hello\np edge 2 2\ne 1 2\nc mid\ne 2 1\n").unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn fourteen_cycle() {
        let mut text = String::from("p edge 14 14\n");
        for i in 1..=14 {
            text.push_str(&format!("e {} {}\n", i, i % 14 + 1));
        }
        let g = load_graph(&text).unwrap();
        assert_eq!(g.size(), 14);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        match load_graph("p edge 3 1\ne 1\n") {
            Err(GraphError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match load_graph("p edge x 1\n") {
            Err(GraphError::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(load_graph("e 1 2\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(load_graph("p edge 2 1\ne 1 3\n"), Err(GraphError::Parse { line: 2, .. })));
    }

    #[test]
    fn write_then_load_is_identity_on_contiguous_ids() {
        let g = load_graph("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n").unwrap();
        let back = load_graph(&write_graph(&g, &["path"])).unwrap();
        assert_eq!(g, back);
    }
}
