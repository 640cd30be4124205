//! Known values on named graphs, checked through the public API.

use std::collections::BTreeSet;

use trifree::config::{
    c5_to_c2, find_any, find_c1, find_c2, find_c3, find_c4, find_c5, interferes, Configuration, Kind,
};
use trifree::corpus::{enumerate_small, enumeration_counts, gen_random, run_suite, CorpusSpec, Mode};
use trifree::discharge::{apply_rules, audit, dangerous_cycles, initial_charges, Element, Hypothesis};
use trifree::extremal::{
    avoiding_independent_set, find_diamonds, generate_member_seeded, is_member, member_max_independent_set,
    path_diamond_replacement, replace_diamond_with_path, replaceable_paths, Terminal,
};
use trifree::fixtures::{self, C5_DOUBLE_DAGGER_AVOIDING};
use trifree::plane::{canonical_form, cycles_up_to, embed_exhaustive, isomorphic_small, parse, paths_between};
use trifree::reduce::{check_tight, diamond_lift, diamond_project, diamond_reduce, lift, reduce};
use trifree::solver::{alpha_by_subsets, exact_alpha, solve};
use trifree::verify::is_independent;
use trifree::{GraphError, PlaneGraph, Vertex};

fn iso(a: &PlaneGraph, b: &PlaneGraph) -> bool {
    isomorphic_small(a, b).expect("small enough")
}

fn set(xs: &[Vertex]) -> BTreeSet<Vertex> {
    xs.iter().copied().collect()
}

fn face_lengths(g: &PlaneGraph) -> Vec<usize> {
    let mut l: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
    l.sort();
    l
}

fn alpha(g: &PlaneGraph) -> usize {
    exact_alpha(g).unwrap().0
}

#[test]
fn parsing_named_files() {
    let c5 = parse("5 5\n1: 2 5\n2: 3 1\n3: 4 2\n4: 5 3\n5: 1 4\n").unwrap();
    assert_eq!(face_lengths(&c5), vec![5, 5]);

    let hub = parse(include_str!("../corpus/c6_hub.graph")).unwrap();
    assert_eq!(hub.vertex_count(), 7);
    assert_eq!(hub.outer_face().unwrap().len(), 6);
    assert_eq!(face_lengths(&hub), vec![4, 4, 4, 6]);

    let err = parse("2 1\n1: 2\n2:\n").unwrap_err();
    assert!(matches!(err, GraphError::Asymmetric { .. }), "{err}");
}

#[test]
fn faces_and_triangles() {
    assert_eq!(face_lengths(&fixtures::c6_chord()), vec![4, 4, 6]);
    assert_eq!(face_lengths(&fixtures::cube()), vec![4; 6]);
    assert!(fixtures::c5().is_triangle_free());
    assert!(!fixtures::k4().is_triangle_free());
    assert!(fixtures::c5_dagger().is_triangle_free());
}

#[test]
fn bounded_paths_and_cycles() {
    let c5 = fixtures::c5();
    let none = BTreeSet::new();
    assert_eq!(paths_between(&c5, 1, 2, 1, &none), vec![vec![1, 2]]);
    assert_eq!(paths_between(&c5, 1, 3, 3, &none), vec![vec![1, 5, 4, 3]]);
    assert!(paths_between(&fixtures::c6_hub(), 1, 3, 3, &none).is_empty());

    assert_eq!(cycles_up_to(&c5, 6).len(), 1);
    let mut lengths: Vec<usize> = cycles_up_to(&fixtures::c6_chord(), 6).iter().map(|c| c.len()).collect();
    lengths.sort();
    assert_eq!(lengths, vec![4, 4, 6]);
    assert!(cycles_up_to(&fixtures::k13(), 6).is_empty());
}

#[test]
fn disks() {
    let chord = fixtures::c6_chord();
    let square = chord.inner_faces()[0].vertices();
    assert!(chord.disk_subgraph(&square).unwrap().is_bare());

    // With a square outside, the hub sits on the outer side of the hexagon.
    let hub = fixtures::c6_hub();
    let square = hub.inner_faces()[0].clone();
    let drawn = hub.re_embed(&square).unwrap();
    assert!(drawn.disk_subgraph(&[1, 2, 3, 4, 5, 6]).unwrap().is_bare());
    assert_eq!(hub.disk_subgraph(&[1, 2, 3, 4, 5, 6]), Err(GraphError::BoundsOuterFace));

    let w = fixtures::dangerous_witness();
    assert!(!w.disk_subgraph(&[1, 2, 3, 6]).unwrap().is_bare());
}

#[test]
fn isomorphism() {
    let c5 = fixtures::c5();
    let shifted = c5.relabel(&(1..=5).map(|v| (v, v + 10)).collect());
    assert!(iso(&c5, &shifted));
    assert!(!iso(&fixtures::c6_chord(), &fixtures::c6_hub()));
    assert!(iso(&generate_member_seeded(1, 1), &generate_member_seeded(1, 99)));
    assert!(iso(&generate_member_seeded(1, 3), &fixtures::c5_dagger()));
}

#[test]
fn re_embedding() {
    let c5 = fixtures::c5();
    let inner = c5.faces()[1].clone();
    let drawn = c5.re_embed(&inner).unwrap();
    assert_eq!(drawn.outer_face(), Some(&inner));

    let cube = fixtures::cube();
    for f in cube.faces() {
        assert_eq!(cube.re_embed(f).unwrap().outer_face(), Some(f));
    }
    let foreign = fixtures::c5().faces()[0].clone();
    assert!(cube.re_embed(&foreign).is_err());
}

#[test]
fn diamonds_in_the_small_members() {
    let distinct = |g: &PlaneGraph| {
        find_diamonds(g)
            .iter()
            .map(|d| d.cycle().iter().copied().collect::<BTreeSet<_>>())
            .collect::<BTreeSet<_>>()
            .len()
    };
    assert_eq!(distinct(&fixtures::c5()), 0);
    assert_eq!(distinct(&fixtures::c5_dagger()), 4);
    // Both 5-cycles hanging off the central pentagon qualify.
    assert_eq!(distinct(&fixtures::c5_double_dagger()), 2);

    let d = find_diamonds(&fixtures::c5_dagger())[0];
    let (h, path) = replace_diamond_with_path(&fixtures::c5_dagger(), &d).unwrap();
    assert!(iso(&h, &fixtures::c5()));
    assert!(h.degree(path[1]) == 2 && h.degree(path[2]) == 2);

    let d = find_diamonds(&fixtures::c5_double_dagger())[0];
    let (h, _) = replace_diamond_with_path(&fixtures::c5_double_dagger(), &d).unwrap();
    assert!(iso(&h, &fixtures::c5_dagger()));

    let mut fake = d;
    fake.w = fake.x1;
    assert!(replace_diamond_with_path(&fixtures::c5_double_dagger(), &fake).is_err());
}

#[test]
fn replacements_build_the_family() {
    let c5 = fixtures::c5();
    for path in replaceable_paths(&c5) {
        let (h, _) = path_diamond_replacement(&c5, path).unwrap();
        assert!(iso(&h, &fixtures::c5_dagger()));
    }
    let dagger = fixtures::c5_dagger();
    let path = replaceable_paths(&dagger)[0];
    let (h, _) = path_diamond_replacement(&dagger, path).unwrap();
    assert_eq!(h.vertex_count(), 11);
    assert!(iso(&h, &fixtures::c5_double_dagger()));
    assert!(replaceable_paths(&fixtures::p2()).is_empty());
    assert!(path_diamond_replacement(&fixtures::p2(), [1, 2, 1, 2]).is_err());
}

#[test]
fn membership_certificates() {
    let t = is_member(&fixtures::c5());
    assert_eq!((t.terminal, t.steps.len()), (Terminal::C5, 0));
    let t = is_member(&fixtures::c5_double_dagger());
    assert_eq!((t.terminal, t.steps.len()), (Terminal::C5, 2));
    assert_eq!(is_member(&fixtures::p2()).terminal, Terminal::P2);
    assert_eq!(is_member(&fixtures::cube()).terminal, Terminal::NotMember);
}

#[test]
fn generated_members() {
    assert!(iso(&generate_member_seeded(0, 5), &fixtures::c5()));
    assert!(iso(&generate_member_seeded(1, 5), &fixtures::c5_dagger()));
    for seed in 0..10 {
        let g = generate_member_seeded(2, seed);
        assert_eq!((g.vertex_count(), alpha(&g)), (11, 4));
    }
}

#[test]
fn maximum_sets_of_members() {
    for (g, size) in [
        (fixtures::c5(), 2),
        (fixtures::c5_dagger(), 3),
        (fixtures::c5_double_dagger(), 4),
    ] {
        let s = member_max_independent_set(&g, &is_member(&g)).unwrap();
        assert_eq!(s.len(), size);
        assert!(is_independent(&g, &s));
    }
}

#[test]
fn avoiding_sets() {
    let g = fixtures::c5_double_dagger();
    for (face, expected) in C5_DOUBLE_DAGGER_AVOIDING {
        let f = g.faces().iter().find(|f| f.matches_cycle(&face)).unwrap();
        assert_eq!(avoiding_independent_set(&g, f).unwrap(), set(&expected));
    }
    let m = generate_member_seeded(3, 14);
    let mut checked = 0;
    for f in m
        .faces()
        .iter()
        .filter(|f| f.vertices().iter().all(|&v| m.degree(v) >= 3))
    {
        let s = avoiding_independent_set(&m, f).unwrap();
        assert_eq!(s.len(), 5);
        assert!(is_independent(&m, &s) && s.is_disjoint(&f.vertex_set()));
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn configuration_counts() {
    assert_eq!(find_c1(&fixtures::c5()).len(), 5);
    assert!(find_c1(&fixtures::cube()).is_empty());
    assert_eq!(find_c1(&fixtures::c5_dagger()).len(), 4);

    assert_eq!(find_c2(&fixtures::k13()).len(), 3);
    // The cube is bipartite, so no neighbour pair has a path of odd length.
    assert_eq!(find_c2(&fixtures::cube()).len(), 24);
    assert!(find_c2(&fixtures::c6_hub())
        .iter()
        .any(|c| matches!(*c, Configuration::C2 { v: 7, w, w2, .. } if set(&[w, w2]) == set(&[1, 3]))));

    assert_eq!(find_c3(&fixtures::cube()).len(), 12);
    assert!(find_c3(&fixtures::c5()).is_empty());
    assert!(find_c3(&fixtures::c6_chord()).is_empty());

    assert!(find_c4(&fixtures::c5()).is_empty());
    assert_eq!(find_c4(&fixtures::pendant_pentagon()).len(), 1);
    assert_eq!(find_c4(&fixtures::dodecahedron()).len(), 60);

    assert_eq!(find_c5(&fixtures::cube()).len(), 24);
    assert!(find_c5(&fixtures::c5()).is_empty());
    assert!(!find_c5(&fixtures::c6_hub()).is_empty());
}

#[test]
fn c5_gives_c2_at_the_hub() {
    let g = fixtures::c6_hub();
    for c in find_c5(&g) {
        let c2 = c5_to_c2(&g, &c).unwrap();
        assert!(c2.holds_in(&g));
        let (&Configuration::C5 { face }, &Configuration::C2 { v, .. }) = (&c, &c2) else {
            panic!()
        };
        assert!(v == face[0] || v == face[1], "{c} -> {c2}");
    }
}

#[test]
fn interference() {
    let k = set(&[1, 2, 3]);
    assert!(!interferes(&Configuration::C1 { v: 9 }, &k));
    assert!(interferes(
        &Configuration::C2 {
            v: 7,
            u: 8,
            w: 1,
            w2: 9
        },
        &k
    ));
    let c4 = Configuration::C4 {
        face: [10, 11, 12, 13, 14],
        u: [20, 21, 22, 23],
    };
    assert!(!interferes(&c4, &k));
}

#[test]
fn something_is_always_found() {
    assert_eq!(find_any(&fixtures::c5()).unwrap().kind(), Kind::C1);
    assert!(find_any(&fixtures::cube()).unwrap().holds_in(&fixtures::cube()));
    for g in enumerate_small(9).unwrap() {
        assert!(find_any(&g).is_ok());
    }
}

#[test]
fn reductions_on_named_graphs() {
    let c5 = fixtures::c5();
    let (h, step) = reduce(&c5, &Configuration::C1 { v: 1 }).unwrap();
    assert!(iso(&h, &fixtures::p2()));
    assert_eq!(step.gain, 1);

    let hub = fixtures::c6_hub();
    let (h, step) = reduce(&hub, &Configuration::C1 { v: 2 }).unwrap();
    assert_eq!((h.vertex_count(), step.gain), (4, 1));

    let cube = fixtures::cube();
    let c3 = find_c3(&cube).remove(0);
    let (h, step) = reduce(&cube, &c3).unwrap();
    assert_eq!((h.vertex_count(), step.gain), (2, 2));
    let s = lift(&step, &exact_alpha(&h).unwrap().1).unwrap();
    assert_eq!(s.len(), 4);
    assert!(is_independent(&cube, &s));

    let (h, step) = reduce(&fixtures::p1(), &Configuration::C1 { v: 1 }).unwrap();
    assert_eq!(lift(&step, &BTreeSet::new()).unwrap(), set(&[1]));
    assert_eq!(h.vertex_count(), 0);
}

#[test]
fn diamond_round_trips() {
    let dagger = fixtures::c5_dagger();
    let d = find_diamonds(&dagger)[0];
    let (h, ctx) = diamond_reduce(&dagger, &d).unwrap();
    assert!(iso(&h, &fixtures::c5()));
    let s = diamond_lift(&ctx, &exact_alpha(&h).unwrap().1);
    assert_eq!(s.len(), 3);

    // C5 to C5-dagger to C5-double-dagger, lifting a pair twice.
    let g2 = fixtures::c5_double_dagger();
    let d2 = find_diamonds(&g2)[0];
    let (g1, ctx2) = diamond_reduce(&g2, &d2).unwrap();
    let d1 = find_diamonds(&g1)[0];
    let (g0, ctx1) = diamond_reduce(&g1, &d1).unwrap();
    let s0 = exact_alpha(&g0).unwrap().1;
    let s2 = diamond_lift(&ctx2, &diamond_lift(&ctx1, &s0));
    assert_eq!(s2.len(), 4);
    assert!(is_independent(&g2, &s2));

    // Projection normalises u1, u2 and augments non-maximal sets.
    for s in [set(&[d.u1, d.u2]), set(&[d.z1])] {
        let (h, p) = diamond_project(&dagger, &d, &s).unwrap();
        assert!(is_independent(&h, &p));
        assert_eq!(p.len(), 2);
    }
}

#[test]
fn tightness() {
    assert!(check_tight(&fixtures::c5(), 2));
    assert!(!check_tight(&fixtures::cube(), 4));
    assert!(check_tight(&fixtures::p2(), 1));
}

#[test]
fn oracle_values() {
    assert_eq!(alpha(&fixtures::c5()), 2);
    assert_eq!(alpha(&fixtures::c5_double_dagger()), 4);
    assert_eq!(alpha(&fixtures::cube()), 4);
    assert_eq!(alpha_by_subsets(&fixtures::cube()), 4);
    assert_eq!(alpha(&fixtures::dodecahedron()), 8);
}

#[test]
fn solver_values() {
    let r = solve(&fixtures::c5()).unwrap();
    assert_eq!((r.size(), r.guarantee, r.met), (2, 2, true));
    let r = solve(&fixtures::cube()).unwrap();
    assert_eq!((r.size(), r.guarantee, r.met), (4, 4, true));
    let m = generate_member_seeded(5, 2);
    let r = solve(&m).unwrap();
    assert_eq!((m.vertex_count(), r.size(), r.met), (20, 7, true));
}

#[test]
fn initial_charge_values() {
    let c5 = initial_charges(&fixtures::c5().re_embed(&fixtures::c5().faces()[0]).unwrap()).unwrap();
    assert_eq!(c5.total_initial(), (-8).into());
    assert_eq!(c5.initial[&Element::Vertex(1)], (-2).into());
    assert_eq!(c5.initial[&Element::Face(0)], 1.into());

    let hub = initial_charges(&fixtures::c6_hub()).unwrap();
    assert_eq!(hub.initial[&Element::Vertex(7)], (-1).into());
    assert_eq!(hub.initial[&Element::Vertex(1)], (-1).into());
    assert_eq!(hub.initial[&Element::Vertex(2)], (-2).into());
    assert_eq!(hub.total_initial(), (-8).into());

    let cube = fixtures::cube().re_embed(&fixtures::cube().faces()[0]).unwrap();
    let cube = initial_charges(&cube).unwrap();
    assert!(cube.initial.iter().all(|(e, c)| match e {
        Element::Vertex(_) => *c == (-1).into(),
        Element::Face(_) => *c == 0.into(),
    }));
}

#[test]
fn dangerous_cycle_values() {
    let c5 = fixtures::c5().re_embed(&fixtures::c5().faces()[0]).unwrap();
    assert!(dangerous_cycles(&c5).unwrap().is_empty());
    assert!(dangerous_cycles(&fixtures::c6_chord()).unwrap().is_empty());
    assert!(!dangerous_cycles(&fixtures::dangerous_witness()).unwrap().is_empty());
}

#[test]
fn rules_on_named_graphs() {
    let c5 = fixtures::c5().re_embed(&fixtures::c5().faces()[0]).unwrap();
    let l = apply_rules(&c5).unwrap();
    assert_eq!(l.transfers.len(), 5);
    assert!(l
        .transfers
        .iter()
        .all(|t| t.rule == 0 && t.amount == num_rational::Ratio::new(1, 3)));
    assert_eq!(l.total_final(), (-8).into());

    let l = apply_rules(&fixtures::c6_hub()).unwrap();
    assert!(l.transfers.iter().any(|t| t.rule == 0));
    assert_eq!(l.total_final(), (-8).into());

    assert_eq!(
        audit(&fixtures::c6_hub()).rejected,
        Some(Hypothesis::Exceptional("C6v"))
    );
    assert!(matches!(
        audit(&fixtures::dangerous_witness()).rejected,
        Some(Hypothesis::Dangerous(_))
    ));
}

#[test]
fn small_enumeration() {
    let two = enumerate_small(2).unwrap();
    assert_eq!(two.len(), 2);
    assert!(iso(&two[0], &fixtures::p1()) && iso(&two[1], &fixtures::p2()));

    let five = enumerate_small(5).unwrap();
    let k23 = trifree::plane::embed(&[1, 2, 3, 4, 5], &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
    for g in [
        fixtures::cycle(4),
        fixtures::c5(),
        fixtures::k13(),
        fixtures::path(5),
        k23,
    ] {
        assert!(five.iter().any(|h| iso(h, &g)));
    }
    assert_eq!(enumeration_counts(8).unwrap(), vec![1, 1, 1, 3, 6, 18, 55, 230]);
}

/// Counts connected planar triangle-free graphs on six vertices from
/// scratch: every edge subset of K6, embedded exhaustively, deduplicated
/// over all 720 relabellings.
#[test]
fn six_vertex_count_by_brute_force() {
    let pairs: Vec<(Vertex, Vertex)> = (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).collect();
    let perms = permutations(6);
    let mut seen = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(Vertex, Vertex)> = (0..pairs.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let mut adj = [0u8; 6];
        for &(a, b) in &edges {
            adj[a as usize] |= 1 << b;
            adj[b as usize] |= 1 << a;
        }
        if !connected(&adj) || has_triangle(&adj) {
            continue;
        }
        if embed_exhaustive(&[0, 1, 2, 3, 4, 5], &edges).is_err() {
            continue;
        }
        let key = perms
            .iter()
            .map(|p| {
                let mut rows = [0u8; 6];
                for (a, row) in adj.iter().enumerate() {
                    for b in 0..6 {
                        if row >> b & 1 == 1 {
                            rows[p[a]] |= 1 << p[b];
                        }
                    }
                }
                rows
            })
            .min()
            .unwrap();
        seen.insert(key);
    }
    assert_eq!(seen.len(), 18);
    let ours: BTreeSet<_> = enumerate_small(6)
        .unwrap()
        .into_iter()
        .filter(|g| g.vertex_count() == 6)
        .map(|g| canonical_form(&g))
        .collect();
    assert_eq!(ours.len(), 18);
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn connected(adj: &[u8; 6]) -> bool {
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == 0b11_1111
}

fn has_triangle(adj: &[u8; 6]) -> bool {
    (0..6).any(|a| (0..6).any(|b| adj[a] >> b & 1 == 1 && adj[a] & adj[b] != 0))
}

#[test]
fn random_generation_is_reproducible() {
    let spec = CorpusSpec {
        mode: Mode::Random,
        n_max: 20,
        seed: 1,
        count: 1,
    };
    let a = gen_random(&spec);
    assert_eq!(a, gen_random(&spec));
    let spec = CorpusSpec {
        count: 10,
        n_max: 30,
        ..spec
    };
    for g in gen_random(&spec) {
        let euler = g.vertex_count() as i64 - g.edge_count() as i64 + g.faces().len() as i64;
        assert!(g.is_triangle_free() && g.is_connected());
        assert_eq!(euler, 2);
    }
}

#[test]
fn suites_are_clean() {
    for (mode, n_max) in [(Mode::Exhaustive, 9), (Mode::Extremal, 32), (Mode::Golden, 20)] {
        let spec = CorpusSpec {
            mode,
            n_max,
            seed: 1,
            count: 1,
        };
        let report = run_suite(&spec).unwrap();
        assert_eq!(report.violation_count(), 0, "{mode:?}");
        if mode == Mode::Extremal {
            assert_eq!(report.rows.len(), 10);
            assert!(report.rows.iter().all(|r| r.member && r.tight == Some(true)));
        }
    }
}
