//! Bounded brute-force path and cycle search.

use std::collections::BTreeSet;

use super::{PlaneGraph, Vertex};

/// Longest path or cycle length the searches accept.
pub const MAX_SEARCH_LENGTH: usize = 6;

/// All simple paths from `a` to `b` with exactly `length` edges whose
/// internal vertices avoid `forbidden`. Paths are listed in lexicographic
/// order of their vertex sequences.
pub fn paths_between(
    g: &PlaneGraph,
    a: Vertex,
    b: Vertex,
    length: usize,
    forbidden: &BTreeSet<Vertex>,
) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    if a == b || !g.contains(a) || !g.contains(b) || length == 0 {
        return out;
    }
    let mut path = vec![a];
    extend(g, b, length, forbidden, &mut path, &mut |p| {
        out.push(p.to_vec());
        true
    });
    out
}

/// True if some path counted by [`paths_between`] exists.
pub fn has_path_of_length(g: &PlaneGraph, a: Vertex, b: Vertex, length: usize, forbidden: &BTreeSet<Vertex>) -> bool {
    if a == b || !g.contains(a) || !g.contains(b) || length == 0 {
        return false;
    }
    let mut found = false;
    let mut path = vec![a];
    extend(g, b, length, forbidden, &mut path, &mut |_| {
        found = true;
        false
    });
    found
}

/// Depth-first extension; `visit` returns false to stop the search.
fn extend(
    g: &PlaneGraph,
    target: Vertex,
    length: usize,
    forbidden: &BTreeSet<Vertex>,
    path: &mut Vec<Vertex>,
    visit: &mut dyn FnMut(&[Vertex]) -> bool,
) -> bool {
    let last = *path.last().expect("nonempty path");
    let remaining = length + 1 - path.len();
    for u in g.sorted_neighbors(last) {
        if remaining == 1 {
            if u == target {
                path.push(u);
                let go_on = visit(path);
                path.pop();
                if !go_on {
                    return false;
                }
            }
            continue;
        }
        if u == target || forbidden.contains(&u) || path.contains(&u) {
            continue;
        }
        path.push(u);
        let go_on = extend(g, target, length, forbidden, path, visit);
        path.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// All simple cycles with at most `max_len` edges, each reported once as a
/// vertex sequence starting at its smallest vertex, with the second vertex
/// smaller than the last.
pub fn cycles_up_to(g: &PlaneGraph, max_len: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for s in g.vertices() {
        let mut path = vec![s];
        grow_cycle(g, s, max_len, &mut path, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn grow_cycle(g: &PlaneGraph, start: Vertex, max_len: usize, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
    let last = *path.last().expect("nonempty");
    for u in g.sorted_neighbors(last) {
        if u == start {
            if path.len() >= 3 && path[1] < *path.last().expect("nonempty") {
                out.push(path.clone());
            }
            continue;
        }
        if u < start || path.contains(&u) || path.len() >= max_len {
            continue;
        }
        path.push(u);
        grow_cycle(g, start, max_len, path, out);
        path.pop();
    }
}
