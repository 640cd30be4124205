//! Line-oriented graph files.
//!
//! ```text
//! # comment
//! n m
//! v: a b c      (clockwise rotation at v, one line per vertex 1..=n)
//! outer: v1 ... vk   (optional outer face boundary walk)
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{GraphError, PlaneGraph, Vertex};

fn syntax(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_vertex(token: &str, line: usize) -> Result<Vertex, GraphError> {
    token
        .parse::<Vertex>()
        .map_err(|_| syntax(line, format!("expected a vertex number, found `{token}`")))
}

/// Parses a graph file. Rotation lines may come in any order.
pub fn parse(text: &str) -> Result<PlaneGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    let mut it = header.split_whitespace();
    let mut field = |name: &str| -> Result<usize, GraphError> {
        it.next()
            .ok_or_else(|| syntax(hline, format!("header is missing {name}")))?
            .parse::<usize>()
            .map_err(|_| syntax(hline, format!("header {name} is not a number")))
    };
    let n = field("vertex count")?;
    let m = field("edge count")?;

    let mut rotation: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    let mut outer: Option<(usize, Vec<Vertex>)> = None;
    for (lineno, line) in lines {
        let (label, rest) = line
            .split_once(':')
            .ok_or_else(|| syntax(lineno, "expected `v: ...` or `outer: ...`"))?;
        let rest = rest.split_whitespace();
        if label.trim() == "outer" {
            if outer.is_some() {
                return Err(syntax(lineno, "duplicate outer line"));
            }
            let walk = rest.map(|t| parse_vertex(t, lineno)).collect::<Result<Vec<_>, _>>()?;
            outer = Some((lineno, walk));
            continue;
        }
        let v = parse_vertex(label.trim(), lineno)?;
        if v == 0 || v as usize > n {
            return Err(syntax(lineno, format!("vertex {v} outside 1..={n}")));
        }
        let rot = rest.map(|t| parse_vertex(t, lineno)).collect::<Result<Vec<_>, _>>()?;
        if rotation.insert(v, rot).is_some() {
            return Err(syntax(lineno, format!("duplicate rotation for vertex {v}")));
        }
    }
    if rotation.len() != n {
        let missing = (1..=n as Vertex).find(|v| !rotation.contains_key(v)).unwrap_or(0);
        return Err(syntax(hline, format!("missing rotation for vertex {missing}")));
    }
    for rot in rotation.values() {
        if let Some(&u) = rot.iter().find(|&&u| u == 0 || u as usize > n) {
            return Err(GraphError::UnknownVertex(u));
        }
    }

    let g = PlaneGraph::new(rotation)?;
    if g.edge_count() != m {
        return Err(GraphError::EdgeCount {
            declared: m,
            actual: g.edge_count(),
        });
    }
    match outer {
        None => Ok(g),
        Some((lineno, walk)) => {
            let face = g
                .faces()
                .iter()
                .find(|f| cyclic_equal(&f.vertices(), &walk))
                .cloned()
                .ok_or_else(|| syntax(lineno, "outer walk is not a face"))?;
            g.re_embed(&face)
        }
    }
}

/// Cyclic equality in either direction; walks may repeat vertices.
fn cyclic_equal(a: &[Vertex], b: &[Vertex]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    if n == 0 {
        return true;
    }
    (0..n).any(|s| (0..n).all(|i| a[i] == b[(s + i) % n]) || (0..n).all(|i| a[i] == b[(s + n - i) % n]))
}

/// Writes the graph with vertices relabelled to `1..=n` in ascending order,
/// each rotation starting from its smallest neighbour.
pub fn serialize(g: &PlaneGraph) -> String {
    let (g, _) = g.relabel_dense();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.vertex_count(), g.edge_count());
    for (v, rot) in g.rotations() {
        let mut r = rot.clone();
        if let Some(pos) = r.iter().enumerate().min_by_key(|(_, u)| **u).map(|(i, _)| i) {
            r.rotate_left(pos);
        }
        let body: Vec<String> = r.iter().map(|u| u.to_string()).collect();
        if body.is_empty() {
            let _ = writeln!(out, "{v}:");
        } else {
            let _ = writeln!(out, "{v}: {}", body.join(" "));
        }
    }
    if let Some(face) = g.outer_face() {
        let body: Vec<String> = face.vertices().iter().map(|u| u.to_string()).collect();
        let _ = writeln!(out, "outer: {}", body.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parses_five_cycle() {
        let g = parse("# C5\n5 5\n1: 5 2\n2: 1 3\n3: 2 4\n4: 3 5\n5: 4 1\n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.faces().len(), 2);
        assert!(g.faces().iter().all(|f| f.len() == 5));
    }

    #[test]
    fn parses_hub_hexagon_with_outer_line() {
        let text = "7 9\n1: 7 6 2\n2: 1 3\n3: 4 7 2\n4: 3 5\n5: 6 7 4\n6: 5 1\n7: 5 1 3\nouter: 1 2 3 4 5 6\n";
        let g = parse(text).unwrap();
        assert_eq!(g.outer_face().unwrap().len(), 6);
        let mut lens: Vec<usize> = g.inner_faces().iter().map(|f| f.len()).collect();
        lens.sort();
        assert_eq!(lens, vec![4, 4, 4]);
    }

    #[test]
    fn rejects_asymmetric_rotation() {
        let err = parse("3 2\n1: 2 3\n2: 1\n3:\n").unwrap_err();
        assert_eq!(err, GraphError::Asymmetric { u: 1, v: 3 });
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse(""), Err(GraphError::Syntax { .. })));
        assert!(matches!(parse("2 1\n1: 2\n"), Err(GraphError::Syntax { .. })));
        assert!(matches!(parse("2 1\n1: x\n2: 1\n"), Err(GraphError::Syntax { .. })));
        assert!(matches!(parse("2 2\n1: 2\n2: 1\n"), Err(GraphError::EdgeCount { .. })));
        assert!(matches!(parse("2 1\n1: 3\n2:\n"), Err(GraphError::UnknownVertex(3))));
    }

    #[test]
    fn writer_is_canonical() {
        let g = fixtures::c6_hub();
        let text = serialize(&g);
        assert_eq!(
            text,
            "7 9\n1: 2 6 7\n2: 1 3\n3: 2 7 4\n4: 3 5\n5: 4 7 6\n6: 1 5\n7: 1 5 3\nouter: 1 6 5 4 3 2\n"
        );
        let back = parse(&text).unwrap();
        assert_eq!(back, g);
    }
}
