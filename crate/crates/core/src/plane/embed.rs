//! Finding a plane embedding of an abstract graph.
//!
//! [`embed`] splits the graph into blocks and embeds each 2-connected block
//! by path addition (Demoucron, Malgrange and Pertuiset): repeatedly pick a
//! fragment with the fewest admissible faces and route one of its paths
//! through such a face. Block rotations are concatenated at cut vertices.
//!
//! [`embed_exhaustive`] tries every rotation system and is only meant for
//! tiny graphs and as an independent check.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::{GraphError, PlaneGraph, Vertex};

/// Largest graph [`embed_exhaustive`] accepts.
pub const EXHAUSTIVE_EMBED_LIMIT: usize = 10;

type Adjacency = BTreeMap<Vertex, BTreeSet<Vertex>>;

fn adjacency(vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Result<Adjacency, GraphError> {
    let mut adj: Adjacency = vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
    for &(u, v) in edges {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        for x in [u, v] {
            if !adj.contains_key(&x) {
                return Err(GraphError::UnknownVertex(x));
            }
        }
        if !adj.get_mut(&u).expect("vertex").insert(v) {
            return Err(GraphError::Parallel(u.min(v), u.max(v)));
        }
        adj.get_mut(&v).expect("vertex").insert(u);
    }
    Ok(adj)
}

/// Computes a plane embedding, or `NoEmbedding` if the graph is not planar.
pub fn embed(vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Result<PlaneGraph, GraphError> {
    let adj = adjacency(vertices, edges)?;
    let mut rotation: BTreeMap<Vertex, Vec<Vertex>> = adj.keys().map(|&v| (v, Vec::new())).collect();
    for block in blocks(&adj) {
        let local = if block.len() == 1 {
            let (u, v) = block[0];
            BTreeMap::from([(u, vec![v]), (v, vec![u])])
        } else {
            embed_biconnected(&block).ok_or(GraphError::NoEmbedding)?
        };
        for (v, rot) in local {
            rotation.get_mut(&v).expect("vertex").extend(rot);
        }
    }
    PlaneGraph::new(rotation)
}

/// Edge sets of the biconnected components (Hopcroft-Tarjan).
fn blocks(adj: &Adjacency) -> Vec<Vec<(Vertex, Vertex)>> {
    let mut disc: HashMap<Vertex, usize> = HashMap::new();
    let mut low: HashMap<Vertex, usize> = HashMap::new();
    let mut stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out = Vec::new();
    let mut time = 0;
    for &root in adj.keys() {
        if disc.contains_key(&root) {
            continue;
        }
        // iterative DFS: (vertex, parent, neighbour iterator position)
        let mut frames: Vec<(Vertex, Option<Vertex>, Vec<Vertex>, usize)> = Vec::new();
        disc.insert(root, time);
        low.insert(root, time);
        time += 1;
        frames.push((root, None, adj[&root].iter().copied().collect(), 0));
        while let Some(frame) = frames.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if frame.3 < frame.2.len() {
                let u = frame.2[frame.3];
                frame.3 += 1;
                if Some(u) == parent {
                    continue;
                }
                if let Some(&du) = disc.get(&u) {
                    if du < disc[&v] {
                        stack.push((v, u));
                        let lv = low[&v].min(du);
                        low.insert(v, lv);
                    }
                } else {
                    stack.push((v, u));
                    disc.insert(u, time);
                    low.insert(u, time);
                    time += 1;
                    frames.push((u, Some(v), adj[&u].iter().copied().collect(), 0));
                }
            } else {
                frames.pop();
                if let Some(p) = parent {
                    let lv = low[&v];
                    let lp = low[&p].min(lv);
                    low.insert(p, lp);
                    if lv >= disc[&p] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// A face as a cyclic vertex sequence, oriented so that consecutive
/// `a b c` means `c` follows `a` in the rotation at `b`.
type FaceCycle = Vec<Vertex>;

fn embed_biconnected(block: &[(Vertex, Vertex)]) -> Option<BTreeMap<Vertex, Vec<Vertex>>> {
    let mut adj: Adjacency = BTreeMap::new();
    for &(u, v) in block {
        adj.entry(u).or_default().insert(v);
        adj.entry(v).or_default().insert(u);
    }
    let total_edges = block.len();

    let cycle = find_cycle(&adj)?;
    let mut placed_v: BTreeSet<Vertex> = cycle.iter().copied().collect();
    let mut placed_e: BTreeSet<(Vertex, Vertex)> = BTreeSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        placed_e.insert((a.min(b), a.max(b)));
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    let mut faces: Vec<FaceCycle> = vec![cycle, reversed];

    while placed_e.len() < total_edges {
        let fragments = fragments(&adj, &placed_v, &placed_e);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice?;
        let path = fragments[fi].path(&adj, &placed_v);
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            placed_e.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        placed_v.extend(path.iter().copied());
    }
    Some(rotation_from_faces(&faces))
}

fn find_cycle(adj: &Adjacency) -> Option<Vec<Vertex>> {
    let root = *adj.keys().next()?;
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut stack = vec![root];
    let mut seen: BTreeSet<Vertex> = [root].into();
    while let Some(v) = stack.pop() {
        for &u in &adj[&v] {
            if parent.get(&v) == Some(&u) {
                continue;
            }
            if seen.contains(&u) {
                // u is an ancestor or visited elsewhere; walk both up to root
                let up = |mut x: Vertex| {
                    let mut chain = vec![x];
                    while let Some(&p) = parent.get(&x) {
                        chain.push(p);
                        x = p;
                    }
                    chain
                };
                let a = up(v);
                let b = up(u);
                let common = *a.iter().find(|x| b.contains(x))?;
                let mut cyc: Vec<Vertex> = a.iter().copied().take_while(|&x| x != common).collect();
                cyc.push(common);
                let tail: Vec<Vertex> = b.iter().copied().take_while(|&x| x != common).collect();
                cyc.extend(tail.into_iter().rev());
                if cyc.len() >= 3 {
                    return Some(cyc);
                }
                continue;
            }
            seen.insert(u);
            parent.insert(u, v);
            stack.push(u);
        }
    }
    None
}

struct Fragment {
    attachments: BTreeSet<Vertex>,
    /// Either a single chord, or the interior vertices of a bridge component.
    chord: Option<(Vertex, Vertex)>,
    interior: BTreeSet<Vertex>,
}

impl Fragment {
    /// A path through the fragment joining two distinct attachments.
    fn path(&self, adj: &Adjacency, placed: &BTreeSet<Vertex>) -> Vec<Vertex> {
        if let Some((a, b)) = self.chord {
            return vec![a, b];
        }
        let start = *self.attachments.iter().next().expect("attachment");
        // BFS from start into the interior until another attachment is hit
        let mut prev: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for &u in &adj[&start] {
            if self.interior.contains(&u) && !prev.contains_key(&u) {
                prev.insert(u, start);
                queue.push_back(u);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &y in &adj[&x] {
                if placed.contains(&y) {
                    if y != start {
                        let mut path = vec![y, x];
                        let mut cur = x;
                        while let Some(&p) = prev.get(&cur) {
                            path.push(p);
                            if p == start {
                                break;
                            }
                            cur = p;
                        }
                        path.reverse();
                        return path;
                    }
                } else if self.interior.contains(&y) && !prev.contains_key(&y) {
                    prev.insert(y, x);
                    queue.push_back(y);
                }
            }
        }
        unreachable!("fragment of a 2-connected graph has two attachments")
    }
}

fn fragments(adj: &Adjacency, placed_v: &BTreeSet<Vertex>, placed_e: &BTreeSet<(Vertex, Vertex)>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (&u, ns) in adj {
        if !placed_v.contains(&u) {
            continue;
        }
        for &v in ns {
            if u < v && placed_v.contains(&v) && !placed_e.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: [u, v].into(),
                    chord: Some((u, v)),
                    interior: BTreeSet::new(),
                });
            }
        }
    }
    let mut seen: BTreeSet<Vertex> = BTreeSet::new();
    for &s in adj.keys() {
        if placed_v.contains(&s) || seen.contains(&s) {
            continue;
        }
        let mut interior = BTreeSet::from([s]);
        let mut attachments = BTreeSet::new();
        let mut stack = vec![s];
        seen.insert(s);
        while let Some(x) = stack.pop() {
            for &y in &adj[&x] {
                if placed_v.contains(&y) {
                    attachments.insert(y);
                } else if seen.insert(y) {
                    interior.insert(y);
                    stack.push(y);
                }
            }
        }
        out.push(Fragment {
            attachments,
            chord: None,
            interior,
        });
    }
    out
}

/// Splits a face by a path whose endpoints lie on it.
fn split_face(face: &FaceCycle, path: &[Vertex]) -> (FaceCycle, FaceCycle) {
    let a = path[0];
    let b = *path.last().expect("path");
    let n = face.len();
    let ia = face.iter().position(|&x| x == a).expect("a on face");
    let rotated: Vec<Vertex> = (0..n).map(|i| face[(ia + i) % n]).collect();
    let ib = rotated.iter().position(|&x| x == b).expect("b on face");
    let interior = &path[1..path.len() - 1];

    // a .. b along the face, then back to a along the path
    let mut f1: Vec<Vertex> = rotated[..=ib].to_vec();
    f1.extend(interior.iter().rev());
    // b .. a along the face, then back to b along the path
    let mut f2: Vec<Vertex> = rotated[ib..].to_vec();
    f2.push(a);
    f2.extend(interior.iter());
    (f1, f2)
}

pub(super) fn rotation_from_faces(faces: &[FaceCycle]) -> BTreeMap<Vertex, Vec<Vertex>> {
    let mut succ: BTreeMap<Vertex, BTreeMap<Vertex, Vertex>> = BTreeMap::new();
    for f in faces {
        let k = f.len();
        for i in 0..k {
            let (a, b, c) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            succ.entry(b).or_default().insert(a, c);
        }
    }
    succ.into_iter()
        .map(|(v, s)| {
            let first = *s.keys().next().expect("neighbour");
            let mut rot = vec![first];
            let mut cur = s[&first];
            while cur != first {
                rot.push(cur);
                cur = s[&cur];
            }
            (v, rot)
        })
        .collect()
}

/// Tries every rotation system (first neighbour fixed). Exponential.
pub fn embed_exhaustive(vertices: &[Vertex], edges: &[(Vertex, Vertex)]) -> Result<PlaneGraph, GraphError> {
    if vertices.len() > EXHAUSTIVE_EMBED_LIMIT {
        return Err(GraphError::TooLarge {
            n: vertices.len(),
            limit: EXHAUSTIVE_EMBED_LIMIT,
        });
    }
    let adj = adjacency(vertices, edges)?;
    let options: Vec<(Vertex, Vec<Vec<Vertex>>)> = adj
        .iter()
        .map(|(&v, ns)| (v, cyclic_orders(&ns.iter().copied().collect::<Vec<_>>())))
        .collect();
    let mut choice = vec![0usize; options.len()];
    loop {
        let rotation: BTreeMap<Vertex, Vec<Vertex>> = options
            .iter()
            .zip(&choice)
            .map(|((v, opts), &c)| (*v, opts[c].clone()))
            .collect();
        if let Ok(g) = PlaneGraph::new(rotation) {
            return Ok(g);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Err(GraphError::NoEmbedding);
            }
            choice[i] += 1;
            if choice[i] < options[i].1.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// All cyclic orders of `items`, with the first element fixed.
fn cyclic_orders(items: &[Vertex]) -> Vec<Vec<Vertex>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest = items[1..].to_vec();
    permute(&mut rest, 0, &mut |p| {
        let mut order = vec![items[0]];
        order.extend_from_slice(p);
        out.push(order);
    });
    out
}

fn permute(xs: &mut Vec<Vertex>, k: usize, f: &mut dyn FnMut(&[Vertex])) {
    if k == xs.len() {
        f(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, f);
        xs.swap(k, i);
    }
}
