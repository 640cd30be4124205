//! Named plane graphs used throughout the tests, examples and golden corpus.
//!
//! Most are given by their face boundary walks.

use crate::plane::{embed, PlaneGraph, Vertex};

fn faces(walks: &[&[Vertex]]) -> PlaneGraph {
    PlaneGraph::from_face_walks(walks).expect("fixture faces form a plane graph")
}

fn build(rotations: &[(Vertex, &[Vertex])]) -> PlaneGraph {
    PlaneGraph::from_rotations(rotations.iter().map(|(v, r)| (*v, r.to_vec())))
        .expect("fixture rotation is a valid plane graph")
}

/// Single vertex.
pub fn p1() -> PlaneGraph {
    build(&[(1, &[])])
}

/// The path on two vertices.
pub fn p2() -> PlaneGraph {
    build(&[(1, &[2]), (2, &[1])])
}

/// Path with `n` vertices `1..=n`.
pub fn path(n: u32) -> PlaneGraph {
    PlaneGraph::from_rotations((1..=n).map(|v| {
        let mut r = Vec::new();
        if v > 1 {
            r.push(v - 1);
        }
        if v < n {
            r.push(v + 1);
        }
        (v, r)
    }))
    .expect("path")
}

/// Cycle `1 2 ... n`.
pub fn cycle(n: u32) -> PlaneGraph {
    assert!(n >= 3);
    PlaneGraph::from_rotations((1..=n).map(|v| {
        let prev = if v == 1 { n } else { v - 1 };
        let next = if v == n { 1 } else { v + 1 };
        (v, vec![prev, next])
    }))
    .expect("cycle")
}

pub fn c5() -> PlaneGraph {
    cycle(5)
}

/// The star with centre 1 and leaves 2, 3, 4.
pub fn k13() -> PlaneGraph {
    build(&[(1, &[2, 3, 4]), (2, &[1]), (3, &[1]), (4, &[1])])
}

pub fn k4() -> PlaneGraph {
    build(&[(1, &[3, 4, 2]), (2, &[3, 1, 4]), (3, &[4, 1, 2]), (4, &[2, 1, 3])])
}

/// C5 after one path-diamond replacement.
///
/// Labels: the 5-cycle `1 2 3 4 5` has degree-2 vertices 3 and 4; vertex 8 is
/// adjacent to 2 and 5; the path `1 6 7 8` closes the drawing.
pub fn c5_dagger() -> PlaneGraph {
    faces(&[&[1, 2, 3, 4, 5], &[5, 4, 3, 2, 8], &[2, 1, 6, 7, 8], &[1, 5, 8, 7, 6]])
}

/// C5 after two path-diamond replacements.
///
/// Labels: diamond `2 6 7 8 3` (u1 z1 z2 u2 w) with apex 1 and tail 4; the
/// square `1 5 4 9` and the path `5 10 11 9`. The two faces free of
/// degree-2 vertices are `1 2 3 4 5` and `1 8 3 4 9`.
pub fn c5_double_dagger() -> PlaneGraph {
    faces(&[
        &[1, 2, 3, 4, 5],
        &[9, 4, 3, 8, 1],
        &[2, 6, 7, 8, 3],
        &[1, 8, 7, 6, 2],
        &[1, 5, 10, 11, 9],
        &[5, 4, 9, 11, 10],
    ])
}

/// Maximum independent sets of [`c5_double_dagger`] avoiding each of its two
/// faces without degree-2 vertices, as `(face, set)`.
pub const C5_DOUBLE_DAGGER_AVOIDING: [([Vertex; 5], [Vertex; 4]); 2] =
    [([1, 2, 3, 4, 5], [6, 8, 9, 10]), ([1, 8, 3, 4, 9], [7, 2, 5, 11])];

/// Hexagon `1..6` with the chord `3 6`, hexagon as the outer face.
pub fn c6_chord() -> PlaneGraph {
    faces(&[&[1, 2, 3, 6], &[6, 3, 4, 5], &[1, 6, 5, 4, 3, 2]])
        .with_outer_dart((1, 6))
        .expect("hexagon dart")
}

/// Hexagon `1..6` with hub 7 adjacent to 1, 3, 5, hexagon as the outer face.
pub fn c6_hub() -> PlaneGraph {
    faces(&[&[1, 2, 3, 7], &[7, 3, 4, 5], &[7, 5, 6, 1], &[1, 6, 5, 4, 3, 2]])
        .with_outer_dart((1, 6))
        .expect("hexagon dart")
}

/// The cube graph: outer square `1 2 3 4`, inner square `5 6 7 8`, spokes `i, i+4`.
pub fn cube() -> PlaneGraph {
    build(&[
        (1, &[5, 4, 2]),
        (2, &[3, 6, 1]),
        (3, &[4, 7, 2]),
        (4, &[1, 8, 3]),
        (5, &[8, 1, 6]),
        (6, &[7, 5, 2]),
        (7, &[3, 8, 6]),
        (8, &[4, 5, 7]),
    ])
}

/// Edge list of the dodecahedron on vertices `1..=20`.
pub fn dodecahedron() -> PlaneGraph {
    let mut edges = Vec::new();
    for i in 0..5u32 {
        let outer = 1 + i;
        let outer_next = 1 + (i + 1) % 5;
        let mid_a = 6 + 2 * i;
        let mid_b = 7 + 2 * i;
        let mid_next = 6 + (2 * i + 2) % 10;
        let inner = 16 + i;
        let inner_next = 16 + (i + 1) % 5;
        edges.push((outer, outer_next));
        edges.push((outer, mid_a));
        edges.push((mid_a, mid_b));
        edges.push((mid_b, mid_next));
        edges.push((mid_b, inner));
        edges.push((inner, inner_next));
    }
    embed(&(1..=20).collect::<Vec<_>>(), &edges).expect("dodecahedron is planar")
}

/// Hexagon `1..6` with chord `3 6`, a pendant 7 at vertex 1 inside the
/// square `1 2 3 6`, and a vertex 8 outside joined to 2 and 4. The hexagon
/// and the square `1 2 3 6` are dangerous.
pub fn dangerous_witness() -> PlaneGraph {
    faces(&[&[1, 7, 1, 2, 3, 6], &[6, 3, 4, 5], &[4, 3, 2, 8], &[1, 6, 5, 4, 8, 2]])
        .with_outer_dart((1, 6))
        .expect("outer hexagon dart")
}

/// A 5-cycle `1..5` with pendant vertices `6..9` attached to 1..4 on the
/// outside. The inner face carries exactly one C4 instance.
pub fn pendant_pentagon() -> PlaneGraph {
    faces(&[&[1, 2, 3, 4, 5], &[1, 6, 1, 5, 4, 9, 4, 3, 8, 3, 2, 7, 2]])
}

/// `rows x cols` grid graph.
pub fn grid(rows: u32, cols: u32) -> PlaneGraph {
    let id = |r: u32, c: u32| r * cols + c + 1;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    let vertices: Vec<Vertex> = (1..=rows * cols).collect();
    embed(&vertices, &edges).expect("grid is planar")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid_and_triangle_free() {
        for (name, g) in [
            ("p2", p2()),
            ("c5", c5()),
            ("c5+", c5_dagger()),
            ("c5++", c5_double_dagger()),
            ("c6c", c6_chord()),
            ("c6v", c6_hub()),
            ("cube", cube()),
            ("dodecahedron", dodecahedron()),
            ("witness", dangerous_witness()),
            ("pendant", pendant_pentagon()),
            ("grid", grid(3, 4)),
        ] {
            assert!(g.is_triangle_free(), "{name}");
            assert!(g.is_connected(), "{name}");
        }
    }

    #[test]
    fn face_structure_of_named_graphs() {
        let lens = |g: &PlaneGraph| {
            let mut l: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
            l.sort();
            l
        };
        assert_eq!(lens(&c5_dagger()), vec![5, 5, 5, 5]);
        assert_eq!(lens(&c5_double_dagger()), vec![5, 5, 5, 5, 5, 5]);
        assert_eq!(lens(&c6_chord()), vec![4, 4, 6]);
        assert_eq!(lens(&c6_hub()), vec![4, 4, 4, 6]);
        assert_eq!(lens(&dodecahedron()), vec![5; 12]);
        assert_eq!(c6_hub().outer_face().unwrap().len(), 6);
        assert_eq!(c6_chord().outer_face().unwrap().len(), 6);
    }

    #[test]
    fn avoiding_sets_are_literal_and_correct() {
        let g = c5_double_dagger();
        for (face, set) in C5_DOUBLE_DAGGER_AVOIDING {
            assert!(g.faces().iter().any(|f| f.matches_cycle(&face)));
            for (i, &a) in set.iter().enumerate() {
                assert!(!face.contains(&a));
                for &b in &set[i + 1..] {
                    assert!(!g.has_edge(a, b));
                }
            }
        }
    }
}
