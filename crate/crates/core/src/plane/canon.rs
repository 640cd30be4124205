//! Canonical labelling by colour refinement plus individualisation.
//!
//! Search branches on the first non-singleton cell of an equitable ordered
//! partition and keeps the lexicographically smallest relabelled adjacency
//! matrix. Vertices with identical open neighbourhoods are interchangeable,
//! so only one of them is tried per cell.

use std::collections::{BTreeMap, BTreeSet};

use super::{GraphError, PlaneGraph, Vertex};

/// `isomorphic_small` refuses graphs above this size.
pub const ISOMORPHISM_LIMIT: usize = 12;

/// Canonical adjacency matrix of an abstract graph (embedding ignored).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl CanonicalForm {
    /// Plain adjacency rows in canonical vertex order: bit `j` of row `i`
    /// is set when `i` and `j` are adjacent.
    pub fn adjacency(&self) -> Vec<u64> {
        self.rows
            .iter()
            .map(|key| {
                let row = !key;
                (0..self.n)
                    .filter(|&j| row >> (63 - j) & 1 == 1)
                    .fold(0u64, |m, j| m | 1 << j)
            })
            .collect()
    }
}

/// Computes the canonical form. Panics above 64 vertices.
pub fn canonical_form(g: &PlaneGraph) -> CanonicalForm {
    let vertices: Vec<Vertex> = g.vertices().collect();
    let index = |v: Vertex| vertices.binary_search(&v).expect("vertex");
    let adj: Vec<u64> = vertices
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u64, |acc, &u| acc | (1u64 << index(u))))
        .collect();
    canonical_form_bits(&adj)
}

/// Canonical form of a graph given as adjacency bit rows (`n <= 64`).
pub fn canonical_form_bits(adj: &[u64]) -> CanonicalForm {
    let n = adj.len();
    assert!(n <= 64, "canonical form supports at most 64 vertices");
    if n == 0 {
        return CanonicalForm { n, rows: vec![] };
    }
    let mut cells = vec![(0..n).collect::<Vec<usize>>()];
    refine(adj, &mut cells);
    let mut best: Option<Vec<u64>> = None;
    search(adj, cells, &mut best);
    CanonicalForm {
        n,
        rows: best.expect("at least one leaf"),
    }
}

fn count_in(adj: &[u64], v: usize, cell_mask: u64) -> u32 {
    (adj[v] & cell_mask).count_ones()
}

fn mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

/// Refines the ordered partition until it is equitable.
fn refine(adj: &[u64], cells: &mut Vec<Vec<usize>>) {
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = mask(&cells[s]);
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            let mut split_any = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell.iter().map(|&v| (count_in(adj, v, splitter), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if keyed.first().map(|k| k.0) != keyed.last().map(|k| k.0) {
                    split_any = true;
                }
            }
            *cells = next;
            if split_any {
                changed = true;
                break;
            }
            s += 1;
        }
    }
}

fn search(adj: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut pos = vec![0usize; adj.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let rows: Vec<u64> = order
            .iter()
            .map(|&v| {
                let mut row = 0u64;
                let mut bits = adj[v];
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    row |= 1u64 << (63 - pos[u]);
                    bits &= bits - 1;
                }
                row
            })
            .collect();
        // larger leading bits mean edges towards earlier vertices
        let key: Vec<u64> = rows.iter().map(|r| !r).collect();
        if best.as_ref().is_none_or(|b| key < *b) {
            *best = Some(key);
        }
        return;
    };
    let cell = cells[target].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        let twin = tried.iter().any(|&t| {
            let bt = 1u64 << t;
            let bv = 1u64 << v;
            (adj[t] & !bv) == (adj[v] & !bt)
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut next = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != v).collect();
        next.splice(target..=target, [vec![v], rest]);
        refine(adj, &mut next);
        search(adj, next, best);
    }
}

/// Abstract-graph isomorphism for graphs with at most
/// [`ISOMORPHISM_LIMIT`] vertices.
pub fn isomorphic_small(g: &PlaneGraph, h: &PlaneGraph) -> Result<bool, GraphError> {
    for x in [g, h] {
        if x.vertex_count() > ISOMORPHISM_LIMIT {
            return Err(GraphError::TooLarge {
                n: x.vertex_count(),
                limit: ISOMORPHISM_LIMIT,
            });
        }
    }
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g) == canonical_form(h))
}

/// Searches for an isomorphism `V(g) -> V(h)` accepted by `accept`, by
/// plain backtracking with degree and adjacency checks. Meant for small
/// graphs with few automorphisms.
pub fn find_isomorphism(
    g: &PlaneGraph,
    h: &PlaneGraph,
    accept: &dyn Fn(&BTreeMap<Vertex, Vertex>) -> bool,
) -> Option<BTreeMap<Vertex, Vertex>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    // breadth-first order keeps each new vertex adjacent to mapped ones
    let mut order: Vec<Vertex> = Vec::new();
    for comp in g.components() {
        let start = order.len();
        order.push(comp[0]);
        let mut i = start;
        while i < order.len() {
            for u in g.sorted_neighbors(order[i]) {
                if !order.contains(&u) {
                    order.push(u);
                }
            }
            i += 1;
        }
    }
    let mut map = BTreeMap::new();
    let mut used = BTreeSet::new();
    extend_map(g, h, &order, &mut map, &mut used, accept)
}

fn extend_map(
    g: &PlaneGraph,
    h: &PlaneGraph,
    order: &[Vertex],
    map: &mut BTreeMap<Vertex, Vertex>,
    used: &mut BTreeSet<Vertex>,
    accept: &dyn Fn(&BTreeMap<Vertex, Vertex>) -> bool,
) -> Option<BTreeMap<Vertex, Vertex>> {
    let Some(&v) = order.get(map.len()) else {
        return accept(map).then(|| map.clone());
    };
    for x in h.vertices() {
        if used.contains(&x) || h.degree(x) != g.degree(v) {
            continue;
        }
        let consistent = map.iter().all(|(&a, &b)| g.has_edge(a, v) == h.has_edge(b, x));
        if !consistent {
            continue;
        }
        map.insert(v, x);
        used.insert(x);
        if let Some(found) = extend_map(g, h, order, map, used, accept) {
            return Some(found);
        }
        map.remove(&v);
        used.remove(&x);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn permuted(g: &PlaneGraph, perm: &[Vertex]) -> PlaneGraph {
        let map: BTreeMap<Vertex, Vertex> = g.vertices().zip(perm.iter().copied()).collect();
        g.relabel(&map)
    }

    #[test]
    fn relabelled_cycle_is_isomorphic() {
        let g = fixtures::c5();
        let h = permuted(&g, &[13, 2, 40, 7, 5]);
        assert!(isomorphic_small(&g, &h).unwrap());
    }

    #[test]
    fn hexagon_variants_differ() {
        assert!(!isomorphic_small(&fixtures::c6_chord(), &fixtures::c6_hub()).unwrap());
        assert!(!isomorphic_small(&fixtures::cycle(6), &fixtures::c6_chord()).unwrap());
    }

    #[test]
    fn size_limit_is_enforced() {
        let big = fixtures::cycle(13);
        assert!(matches!(
            isomorphic_small(&big, &big),
            Err(GraphError::TooLarge { n: 13, limit: 12 })
        ));
    }

    #[test]
    fn decoded_adjacency_has_the_same_form() {
        for g in [fixtures::cube(), fixtures::c6_hub(), fixtures::k13()] {
            let form = canonical_form(&g);
            let rows = form.adjacency();
            assert_eq!(
                rows.iter().map(|r| r.count_ones()).sum::<u32>() as usize,
                2 * g.edge_count()
            );
            assert_eq!(canonical_form_bits(&rows), form);
        }
    }

    #[test]
    fn isomorphism_respects_constraints() {
        let g = fixtures::c5();
        let h = permuted(&g, &[13, 2, 40, 7, 5]);
        let map = find_isomorphism(&g, &h, &|_| true).unwrap();
        for (a, b) in g.edges() {
            assert!(h.has_edge(map[&a], map[&b]));
        }
        let pinned = find_isomorphism(&g, &h, &|m| m[&1] == 7 && m[&2] == 5).unwrap();
        assert_eq!(pinned[&3], 13);
        assert!(find_isomorphism(&g, &fixtures::cycle(6), &|_| true).is_none());
    }

    #[test]
    fn twins_do_not_change_the_form() {
        let star = fixtures::k13();
        let h = permuted(&star, &[4, 1, 2, 3]);
        assert_eq!(canonical_form(&star), canonical_form(&h));
        let p = fixtures::path(4);
        assert_ne!(canonical_form(&star), canonical_form(&p));
    }
}
