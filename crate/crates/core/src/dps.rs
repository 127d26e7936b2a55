//! The tree bijection for generic covers: face-labeled bipartite graphs
//! (duals of the underlying 4-valent graph) against edge-labeled trees.
//!
//! Forward direction: orient every edge with the greater face label on its
//! left, reverse clockwise cycles until none is left, run the rightmost
//! depth-first search against the orientation from the root (the blue
//! vertex labeled `d`), chop the root and read red labels off the faces.
//! Backward direction: attach hairs to the tree, match them along the
//! contour, add the root and collapse the bigons.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cycles::{directed_cycles, left_faces};
use crate::error::{Error, Result};
use crate::hurwitz::enumerate_classes;
use crate::map::{CanonicalCode, CombinatorialMap, Dart};
use crate::perm;
use crate::realize::{dual_bipartite, graph_from_monodromy};

/// A bipartite map whose faces carry distinct labels `1..=2d-2`.
///
/// `blue_labels[v]` is `Some(k)` with `k` in `1..=d` when blue vertex `v`
/// carries a label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLabeledGraph {
    pub map: CombinatorialMap,
    pub blue: Vec<bool>,
    pub blue_labels: Vec<Option<usize>>,
    pub face_labels: Vec<usize>,
}

impl FaceLabeledGraph {
    /// Number of blue vertices.
    pub fn degree(&self) -> usize {
        self.blue.iter().filter(|&&b| b).count()
    }

    /// Isomorphism invariant respecting colors, blue labels and face labels.
    pub fn code(&self) -> CanonicalCode {
        let m = &self.map;
        let n = self.face_labels.len() as u64 + 1;
        m.canonical_code_by(|x| {
            let v = m.origin(x);
            let vertex = match (self.blue[v], self.blue_labels[v]) {
                (true, Some(k)) => k as u64 + 1,
                (true, None) => 1,
                (false, _) => 0,
            };
            vertex * n + self.face_labels[m.face(x)] as u64
        })
    }

    /// Same graph with blue vertex labels permuted: label `k` becomes
    /// `g[k-1] + 1`.
    pub fn relabeled(&self, g: &[usize]) -> FaceLabeledGraph {
        let mut out = self.clone();
        out.blue_labels = self
            .blue_labels
            .iter()
            .map(|l| l.map(|k| g[k - 1] + 1))
            .collect();
        out
    }

    fn validate(&self) -> Result<()> {
        let m = &self.map;
        let d = self.degree();
        if d < 2 || self.face_labels.len() != m.face_count() || m.face_count() != 2 * d - 2 {
            return Err(Error::InvalidInput("graph must have 2d-2 faces".into()));
        }
        if m.vertex_count() != 2 * d {
            return Err(Error::InvalidInput("graph must have d blue and d white vertices".into()));
        }
        for x in 0..m.dart_count() {
            if self.blue[m.origin(x)] == self.blue[m.target(x)] {
                return Err(Error::InvalidInput("graph is not bipartite".into()));
            }
        }
        let mut labels = self.face_labels.clone();
        labels.sort_unstable();
        if labels != (1..=2 * d - 2).collect::<Vec<_>>() {
            return Err(Error::InvalidInput("face labels must be 1..2d-2".into()));
        }
        let mut blue: Vec<usize> = (0..m.vertex_count())
            .filter(|&v| self.blue[v])
            .map(|v| self.blue_labels[v].unwrap_or(0))
            .collect();
        blue.sort_unstable();
        if blue != (1..=d).collect::<Vec<_>>() {
            return Err(Error::InvalidInput("blue vertices must be labeled 1..d".into()));
        }
        Ok(())
    }

    fn root(&self) -> usize {
        let d = self.degree();
        (0..self.map.vertex_count())
            .find(|&v| self.blue[v] && self.blue_labels[v] == Some(d))
            .expect("validated")
    }

    /// The face around the root with the largest label; it plays the role of
    /// the unbounded face.
    pub fn root_face(&self) -> usize {
        let m = &self.map;
        m.vertices()[self.root()]
            .iter()
            .map(|&x| m.face(x))
            .max_by_key(|&f| self.face_labels[f])
            .expect("root has an edge")
    }
}

/// Edge directions: `forward[x]` holds iff the edge of dart `x` points away
/// from `origin(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeOrientation {
    pub forward: Vec<bool>,
}

/// Directs every edge so that the incident face with the greater label is
/// on its left, then checks that blue vertices have in-degree one and white
/// vertices out-degree one.
pub fn orient_greater_label_left(g: &FaceLabeledGraph) -> Result<EdgeOrientation> {
    let m = &g.map;
    let mut forward = vec![false; m.dart_count()];
    for x in 0..m.dart_count() {
        let (l, r) = (g.face_labels[m.face(x)], g.face_labels[m.right_face(x)]);
        if l == r {
            return Err(Error::DegreePropertyFailed("an edge has the same face on both sides".into()));
        }
        forward[x] = l > r;
    }
    for v in 0..m.vertex_count() {
        let out = m.vertices()[v].iter().filter(|&&x| forward[x]).count();
        let deg = m.degree(v);
        let ok = if g.blue[v] { deg - out == 1 } else { out == 1 };
        if !ok {
            return Err(Error::DegreePropertyFailed(format!("vertex {v}")));
        }
    }
    Ok(EdgeOrientation { forward })
}

/// Directed simple cycles having the root face on their left, i.e. going
/// clockwise around the side that does not contain the root face.
pub fn clockwise_cycles(g: &FaceLabeledGraph, o: &EdgeOrientation) -> Vec<Vec<Dart>> {
    let root_face = g.root_face();
    directed_cycles(&g.map, |x| o.forward[x], usize::MAX)
        .into_iter()
        .filter(|c| left_faces(&g.map, c)[root_face])
        .collect()
}

/// Order in which clockwise cycles are reversed.
#[derive(Clone, Copy, Debug)]
pub enum Schedule {
    /// Always the first cycle in enumeration order.
    First,
    /// A uniformly random cycle from a seeded generator.
    Seeded(u64),
}

/// Reverses clockwise cycles until none is left.
pub fn felsner_normalize(g: &FaceLabeledGraph, o: &EdgeOrientation, schedule: Schedule) -> Result<EdgeOrientation> {
    let m = &g.map;
    let cap = m.edge_count() * m.face_count();
    let mut rng = match schedule {
        Schedule::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        Schedule::First => None,
    };
    let mut cur = o.clone();
    for _ in 0..=cap {
        let cycles = clockwise_cycles(g, &cur);
        if cycles.is_empty() {
            return Ok(cur);
        }
        let pick = match rng.as_mut() {
            Some(r) => r.gen_range(0..cycles.len()),
            None => 0,
        };
        for &x in &cycles[pick] {
            cur.forward[x] = false;
            cur.forward[m.alpha(x)] = true;
        }
    }
    Err(Error::NonTermination(cap))
}

/// Spanning tree oriented towards the root: `parent[v]` is the dart at `v`
/// leading to its parent. `erased` lists the representative darts of the
/// non-tree edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    pub root: usize,
    pub parent: Vec<Option<Dart>>,
    pub erased: Vec<Dart>,
}

/// Rightmost depth-first search from the root along edges taken against
/// their orientation. At a vertex entered through dart `e`, edges are tried
/// counterclockwise starting right after `alpha(e)`, so the first one tried
/// is the rightmost turn.
pub fn bernardi_spanning_tree(g: &FaceLabeledGraph, o: &EdgeOrientation) -> Result<SpanningTree> {
    let m = &g.map;
    let root = g.root();
    let mut parent: Vec<Option<Dart>> = vec![None; m.vertex_count()];
    let mut visited = vec![false; m.vertex_count()];
    let mut used = vec![false; m.dart_count()];
    visited[root] = true;
    // stack of (vertex, first dart to try, darts left to try)
    let start = m.vertices()[root][0];
    let mut stack: Vec<(Dart, usize)> = vec![(start, m.degree(root))];
    while let Some(&mut (ref mut x, ref mut left)) = stack.last_mut() {
        if *left == 0 {
            stack.pop();
            continue;
        }
        let dart = *x;
        *x = m.sigma(dart);
        *left -= 1;
        // incoming edge at this vertex: traverse it backwards
        if o.forward[dart] || used[dart] {
            continue;
        }
        used[dart] = true;
        used[m.alpha(dart)] = true;
        let w = m.target(dart);
        if visited[w] {
            continue;
        }
        visited[w] = true;
        parent[w] = Some(m.alpha(dart));
        let back = m.alpha(dart);
        stack.push((m.sigma(back), m.degree(w) - 1));
    }
    if visited.iter().any(|&v| !v) {
        return Err(Error::NotSpanning);
    }
    let tree_edges: HashSet<Dart> = parent.iter().flatten().map(|&x| m.edge_rep(x)).collect();
    let erased = m.edges().into_iter().filter(|e| !tree_edges.contains(e)).collect();
    Ok(SpanningTree { root, parent, erased })
}

/// One subdivided tree edge: blue vertex `blue` between two white vertices,
/// with the red labels of the two segments.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeEdge {
    pub blue: usize,
    pub white: [usize; 2],
    pub red: [usize; 2],
}

/// An edge-labeled tree on `d` white vertices (numbered `1..=d` by the
/// smallest red label they carry), with `d-1` edges subdivided by blue
/// vertices `1..d-1` and `2d-2` red segment labels.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeLabeledTree {
    pub d: usize,
    pub edges: Vec<TreeEdge>,
}

impl EdgeLabeledTree {
    /// Builds the canonical form from segments `(white, blue, red)` with
    /// arbitrary white names.
    pub fn from_segments(d: usize, segments: &[(usize, usize, usize)]) -> Result<Self> {
        let n = 2 * d - 2;
        if d < 2 || segments.len() != n {
            return Err(Error::InvalidInput("a tree has 2d-2 segments".into()));
        }
        let mut min_red: BTreeMap<usize, usize> = BTreeMap::new();
        for &(w, _, r) in segments {
            let e = min_red.entry(w).or_insert(r);
            *e = (*e).min(r);
        }
        if min_red.len() != d {
            return Err(Error::InvalidInput(format!("expected {d} white vertices")));
        }
        let mut order: Vec<(usize, usize)> = min_red.iter().map(|(&w, &r)| (r, w)).collect();
        order.sort_unstable();
        let rank: BTreeMap<usize, usize> = order.iter().enumerate().map(|(i, &(_, w))| (w, i + 1)).collect();
        let mut by_blue: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for &(w, b, r) in segments {
            by_blue.entry(b).or_default().push((rank[&w], r));
        }
        let mut edges = Vec::new();
        for (b, mut ends) in by_blue {
            if ends.len() != 2 {
                return Err(Error::InvalidInput(format!("blue vertex {b} must have two segments")));
            }
            ends.sort_unstable();
            edges.push(TreeEdge {
                blue: b,
                white: [ends[0].0, ends[1].0],
                red: [ends[0].1, ends[1].1],
            });
        }
        let t = EdgeLabeledTree { d, edges };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.d;
        let n = 2 * d - 2;
        if self.edges.len() != d - 1 {
            return Err(Error::InvalidInput("a tree has d-1 edges".into()));
        }
        let blues: Vec<usize> = self.edges.iter().map(|e| e.blue).collect();
        if blues != (1..d).collect::<Vec<_>>() {
            return Err(Error::InvalidInput("blue labels must be 1..d-1".into()));
        }
        let mut reds: Vec<usize> = self.edges.iter().flat_map(|e| e.red).collect();
        reds.sort_unstable();
        if reds != (1..=n).collect::<Vec<_>>() {
            return Err(Error::InvalidInput("red labels must be 1..2d-2".into()));
        }
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|e| (e.white[0].wrapping_sub(1), e.white[1].wrapping_sub(1)))
            .collect();
        if pairs.iter().any(|&(a, b)| a >= d || b >= d || a == b) || !perm::transitive(d, &pairs) {
            return Err(Error::InvalidInput("edges do not form a tree on d white vertices".into()));
        }
        Ok(())
    }

    /// Segments `(white, blue, red)`.
    pub fn segments(&self) -> Vec<(usize, usize, usize)> {
        self.edges
            .iter()
            .flat_map(|e| [(e.white[0], e.blue, e.red[0]), (e.white[1], e.blue, e.red[1])])
            .collect()
    }

    /// Blue labels around every white vertex, listed clockwise in
    /// increasing order (the embedding rule of the abstract tree).
    pub fn rotation(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut rot: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (w, b, _) in self.segments() {
            rot.entry(w).or_default().push(b);
        }
        for v in rot.values_mut() {
            v.sort_unstable();
        }
        rot
    }
}

/// The forward map of the bijection.
pub fn graph_to_tree(g: &FaceLabeledGraph) -> Result<EdgeLabeledTree> {
    g.validate()?;
    let m = &g.map;
    let o = orient_greater_label_left(g)?;
    let o = felsner_normalize(g, &o, Schedule::First)?;
    let tree = bernardi_spanning_tree(g, &o)?;
    let mut segments = Vec::new();
    for v in 0..m.vertex_count() {
        let Some(x) = tree.parent[v] else { continue };
        let u = m.target(x);
        if v == tree.root || u == tree.root {
            continue;
        }
        // dart at the white end pointing to the blue end
        let w = if g.blue[v] { m.alpha(x) } else { x };
        let white = m.origin(w);
        let blue = g.blue_labels[m.target(w)].expect("blue vertices are labeled");
        let red = g.face_labels[m.right_face(w)];
        segments.push((white, blue, red));
    }
    EdgeLabeledTree::from_segments(g.degree(), &segments)
}

/// The inverse map: hairs, contour matching, root, bigon collapse.
pub fn tree_to_graph(t: &EdgeLabeledTree) -> Result<FaceLabeledGraph> {
    t.validate()?;
    let d = t.d;
    let n = 2 * d - 2;
    // position r (1-based) of blue k, white i, root
    let blue = |k: usize, r: usize| (k - 1) * n + (r - 1);
    let white = |i: usize, r: usize| (d - 1) * n + (i - 1) * n + (r - 1);
    let root = |r: usize| (2 * d - 1) * n + (r - 1);
    let total = 2 * d * n;
    let next = |r: usize| r % n + 1;
    let prev = |r: usize| (r + n - 2) % n + 1;
    let mut sigma = vec![0; total];
    for r in 1..=n {
        for k in 1..d {
            sigma[blue(k, r)] = blue(k, next(r));
        }
        for i in 1..=d {
            // positions increase clockwise around white vertices
            sigma[white(i, r)] = white(i, prev(r));
        }
        sigma[root(r)] = root(next(r));
    }
    let mut alpha = vec![usize::MAX; total];
    for (w, b, r) in t.segments() {
        alpha[white(w, r)] = blue(b, r);
        alpha[blue(b, r)] = white(w, r);
    }
    // contour of the hairy tree: a hair is passed by turning to the next
    // dart clockwise at the same vertex
    let sigma_inv = crate::map::inverse(&sigma);
    let start = blue(t.edges[0].blue, t.edges[0].red[0].max(t.edges[0].red[1]));
    let start = if alpha[start] == usize::MAX { blue(t.edges[0].blue, t.edges[0].red[0]) } else { start };
    let mut contour = Vec::new();
    let mut x = start;
    loop {
        if alpha[x] == usize::MAX {
            contour.push(x);
            x = sigma_inv[x];
        } else {
            x = sigma_inv[alpha[x]];
        }
        if x == start {
            break;
        }
        if contour.len() > total {
            return Err(Error::MatchingStuck("contour does not close".into()));
        }
    }
    let is_blue_hair = |h: usize| h < (d - 1) * n;
    // every blue hair takes the closest free white hair before it on the
    // contour (cyclically)
    let mut free: Vec<usize> = Vec::new();
    let mut pending = 0usize;
    for round in 0..2 {
        for &h in &contour {
            if alpha[h] != usize::MAX {
                continue;
            }
            if is_blue_hair(h) {
                if let Some(w) = free.pop() {
                    alpha[h] = w;
                    alpha[w] = h;
                } else if round == 1 {
                    pending += 1;
                }
            } else if round == 0 || !free.contains(&h) {
                free.push(h);
            }
        }
    }
    if pending > 0 || contour.iter().any(|&h| is_blue_hair(h) && alpha[h] == usize::MAX) {
        return Err(Error::MatchingStuck("a blue hair found no white hair".into()));
    }
    let left: Vec<usize> = contour
        .iter()
        .copied()
        .filter(|&h| !is_blue_hair(h) && alpha[h] == usize::MAX)
        .collect();
    if left.len() != n {
        return Err(Error::MatchingStuck(format!("{} white hairs left for the root", left.len())));
    }
    for &h in &left {
        let r = (h - (d - 1) * n) % n + 1;
        if alpha[root(r)] != usize::MAX {
            return Err(Error::MatchingStuck(format!("two white hairs at position {r} left for the root")));
        }
        alpha[root(r)] = h;
        alpha[h] = root(r);
    }
    let pos = |x: usize| x % n + 1;
    for x in 0..total {
        if pos(x) != pos(alpha[x]) {
            return Err(Error::MatchingStuck("a matched edge joins different positions".into()));
        }
    }
    let full = CombinatorialMap::new(sigma, alpha).map_err(|e| Error::MatchingStuck(e.to_string()))?;
    // face left of a blue dart at position r is labeled r; left of a white
    // dart at position r it is r-1
    let label_of = |x: usize| if x < (d - 1) * n || x >= (2 * d - 1) * n { pos(x) } else { prev(pos(x)) };
    let mut face_label = vec![0; full.face_count()];
    for (f, darts) in full.faces().iter().enumerate() {
        face_label[f] = label_of(darts[0]);
        if darts.iter().any(|&x| label_of(x) != face_label[f]) {
            return Err(Error::MatchingStuck("face labels are inconsistent".into()));
        }
    }
    collapse_bigons(&full, &face_label, |x| {
        if x < (d - 1) * n {
            Some(x / n + 1)
        } else if x >= (2 * d - 1) * n {
            Some(d)
        } else {
            None
        }
    })
}

/// Merges every run of parallel edges bounding bigon faces into one edge.
/// `blue_label` maps darts to the label of their origin.
fn collapse_bigons(
    full: &CombinatorialMap,
    face_label: &[usize],
    blue_label: impl Fn(Dart) -> Option<usize>,
) -> Result<FaceLabeledGraph> {
    let nd = full.dart_count();
    let mut parent: Vec<usize> = (0..nd).map(|x| full.edge_rep(x)).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for f in full.faces() {
        if f.len() == 2 {
            let a = find(&mut parent, full.edge_rep(f[0]));
            let b = find(&mut parent, full.edge_rep(f[1]));
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi] = lo;
            }
        }
    }
    let keep: Vec<bool> = (0..nd)
        .map(|x| {
            let e = full.edge_rep(x);
            find(&mut parent, e) == e
        })
        .collect();
    let kept: Vec<Dart> = (0..nd).filter(|&x| keep[x]).collect();
    let mut index = vec![usize::MAX; nd];
    for (i, &x) in kept.iter().enumerate() {
        index[x] = i;
    }
    let mut sigma = vec![0; kept.len()];
    let mut alpha = vec![0; kept.len()];
    for (i, &x) in kept.iter().enumerate() {
        let mut y = full.sigma(x);
        while !keep[y] {
            y = full.sigma(y);
        }
        sigma[i] = index[y];
        alpha[i] = index[full.alpha(x)];
    }
    let map = CombinatorialMap::new(sigma, alpha)?;
    // original faces glued across deleted edges; every region holds exactly
    // one face that is not a bigon, whose label it takes
    let nf = full.face_count();
    let mut region: Vec<usize> = (0..nf).collect();
    for x in 0..nd {
        if !keep[x] {
            let a = find(&mut region, full.face(x));
            let b = find(&mut region, full.face(full.alpha(x)));
            region[a.max(b)] = a.min(b);
        }
    }
    let mut region_label: Vec<Option<usize>> = vec![None; nf];
    for f in 0..nf {
        if full.faces()[f].len() != 2 {
            let r = find(&mut region, f);
            if region_label[r].is_some() {
                return Err(Error::MatchingStuck("two labeled faces were merged".into()));
            }
            region_label[r] = Some(face_label[f]);
        }
    }
    let mut face_labels = vec![0; map.face_count()];
    for (f, darts) in map.faces().iter().enumerate() {
        let r = find(&mut region, full.face(kept[darts[0]]));
        face_labels[f] = region_label[r].ok_or_else(|| Error::MatchingStuck("a collapsed face has no label".into()))?;
    }
    let mut blue = vec![false; map.vertex_count()];
    let mut blue_labels = vec![None; map.vertex_count()];
    for v in 0..map.vertex_count() {
        let x = kept[map.vertices()[v][0]];
        blue_labels[v] = blue_label(x);
        blue[v] = blue_labels[v].is_some();
    }
    let g = FaceLabeledGraph {
        map,
        blue,
        blue_labels,
        face_labels,
    };
    g.validate()?;
    Ok(g)
}

/// Every edge-labeled tree of degree `d` with all red labelings.
pub fn enumerate_trees(d: usize) -> Result<Vec<EdgeLabeledTree>> {
    if d > 5 {
        return Err(Error::LimitExceeded(format!("tree enumeration is limited to degree 5, got {d}")));
    }
    if d < 2 {
        return Err(Error::InvalidInput("degree must be at least 2".into()));
    }
    let n = 2 * d - 2;
    // Cayley trees on 1..=d rooted at d; the edge to the parent of c is
    // labeled c. Each edge-labeled tree appears once per root choice.
    let mut shapes: HashSet<Vec<(usize, usize, usize)>> = HashSet::new();
    for parent in cayley_parents(d) {
        let mut segs = Vec::new();
        for c in 1..d {
            // white names are the Cayley labels; red labels filled in later
            segs.push((c, c, 0));
            segs.push((parent[c], c, 0));
        }
        // canonical shape: white names relabeled by first appearance of blue
        shapes.insert(canonical_shape(d, &segs));
    }
    let mut shapes: Vec<_> = shapes.into_iter().collect();
    shapes.sort();
    let mut out: HashSet<EdgeLabeledTree> = HashSet::new();
    for shape in &shapes {
        for reds in perm::all_permutations(n) {
            let segs: Vec<(usize, usize, usize)> = shape
                .iter()
                .zip(&reds)
                .map(|(&(w, b, _), &r)| (w, b, r + 1))
                .collect();
            out.insert(EdgeLabeledTree::from_segments(d, &segs)?);
        }
    }
    let mut out: Vec<_> = out.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Parent arrays of all labeled trees on `1..=d` rooted at `d` (entry `0`
/// unused), from Prüfer sequences.
fn cayley_parents(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if d == 2 {
        return vec![vec![0, 2, 0]];
    }
    let len = d - 2;
    let mut seq = vec![1usize; len];
    loop {
        // decode
        let mut degree = vec![1usize; d + 1];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::new();
        for &s in &seq {
            let leaf = (1..=d).find(|&v| degree[v] == 1).expect("a leaf exists");
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (1..=d).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        // orient towards d
        let mut adj = vec![Vec::new(); d + 1];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![0; d + 1];
        let mut stack = vec![d];
        let mut seen = vec![false; d + 1];
        seen[d] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    stack.push(w);
                }
            }
        }
        out.push(parent);
        // next sequence
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if seq[i] < d {
                seq[i] += 1;
                for s in seq.iter_mut().skip(i + 1) {
                    *s = 1;
                }
                break;
            }
        }
    }
}

/// Renames whites by first appearance in the blue-sorted segment list.
fn canonical_shape(d: usize, segs: &[(usize, usize, usize)]) -> Vec<(usize, usize, usize)> {
    // try all white namings consistent with the structure and keep the least
    let mut best: Option<Vec<(usize, usize, usize)>> = None;
    let whites: Vec<usize> = {
        let mut w: Vec<usize> = segs.iter().map(|s| s.0).collect();
        w.sort_unstable();
        w.dedup();
        w
    };
    for g in perm::all_permutations(d) {
        let mut s: Vec<(usize, usize, usize)> = segs
            .iter()
            .map(|&(w, b, r)| (g[whites.iter().position(|&x| x == w).expect("known")] + 1, b, r))
            .collect();
        s.sort_by_key(|&(w, b, _)| (b, w));
        if best.as_ref().is_none_or(|b| s < *b) {
            best = Some(s);
        }
    }
    best.expect("at least one naming")
}

/// All blue-vertex-labeled face-labeled duals of degree `d`: each tuple
/// class gives `d!` labelings of its blue vertices.
pub fn labeled_duals(d: usize) -> Result<Vec<FaceLabeledGraph>> {
    let classes = enumerate_classes(d)?.classes;
    let mut out = Vec::new();
    for c in &classes {
        let (_, em, lab) = graph_from_monodromy(&c.representative)?;
        let g = dual_bipartite(&em, &lab)?;
        for p in perm::all_permutations(d) {
            out.push(g.relabeled(&p));
        }
    }
    Ok(out)
}

/// Outcome of [`verify_chain`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub d: usize,
    pub classes: usize,
    pub duals: usize,
    pub trees: usize,
    /// `(2d-2)! d^(d-3)`.
    pub expected_trees: u128,
    pub forward_distinct: usize,
    pub round_trips: usize,
    pub schedules_per_dual: usize,
    pub schedule_mismatches: usize,
}

impl ChainReport {
    pub fn ok(&self) -> bool {
        let t = self.trees as u128;
        t == self.expected_trees
            && self.duals == self.trees
            && self.forward_distinct == self.trees
            && self.round_trips == 2 * self.trees
            && self.classes * factorial(self.d) as usize == self.trees
            && self.schedule_mismatches == 0
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Runs the counting chain for degree `d`: every blue-labeled dual is sent
/// to a tree and back, every tree to a dual and back, and the orientation
/// normalization is repeated with `schedules` seeded random schedules per
/// dual (seeds derived from `seed`).
pub fn verify_chain(d: usize, schedules: usize, seed: u64) -> Result<ChainReport> {
    use rayon::prelude::*;
    let classes = enumerate_classes(d)?.classes.len();
    let duals = labeled_duals(d)?;
    let trees = enumerate_trees(d)?;
    let forward: Vec<EdgeLabeledTree> = duals.par_iter().map(graph_to_tree).collect::<Result<_>>()?;
    let back_ok = duals
        .par_iter()
        .zip(&forward)
        .filter(|(g, t)| tree_to_graph(t).map(|b| b.code() == g.code()).unwrap_or(false))
        .count();
    let tree_ok = trees
        .par_iter()
        .filter(|t| tree_to_graph(t).and_then(|g| graph_to_tree(&g)).map(|u| &u == *t).unwrap_or(false))
        .count();
    let distinct: HashSet<&EdgeLabeledTree> = forward.iter().collect();
    let all: HashSet<&EdgeLabeledTree> = trees.iter().collect();
    let forward_distinct = distinct.intersection(&all).count();
    let schedule_mismatches = duals
        .par_iter()
        .enumerate()
        .map(|(i, g)| -> Result<usize> {
            let o = orient_greater_label_left(g)?;
            let first = felsner_normalize(g, &o, Schedule::First)?;
            let mut bad = 0;
            for k in 0..schedules {
                let s = seed ^ ((i as u64) << 20) ^ k as u64;
                if felsner_normalize(g, &o, Schedule::Seeded(s))? != first {
                    bad += 1;
                }
            }
            Ok(bad)
        })
        .sum::<Result<usize>>()?;
    let n = 2 * d - 2;
    let expected_trees = factorial(n) * (d as u128).pow(d as u32 - 2) / d as u128;
    Ok(ChainReport {
        d,
        classes,
        duals: duals.len(),
        trees: trees.len(),
        expected_trees,
        forward_distinct,
        round_trips: back_ok + tree_ok,
        schedules_per_dual: schedules,
        schedule_mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_degree_three() {
        let r = verify_chain(3, 5, 1).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!((r.classes, r.trees), (4, 24));
    }

    #[test]
    fn tree_counts() {
        assert_eq!(enumerate_trees(2).unwrap().len(), 1);
        assert_eq!(enumerate_trees(3).unwrap().len(), 24);
    }

    #[test]
    fn degree_two_round_trip() {
        let gs = labeled_duals(2).unwrap();
        assert_eq!(gs.len(), 2);
        let g = &gs[0];
        assert_eq!((g.map.vertex_count(), g.map.edge_count(), g.map.face_count()), (4, 4, 2));
        let t = graph_to_tree(g).unwrap();
        assert_eq!(t, enumerate_trees(2).unwrap()[0]);
        let back = tree_to_graph(&t).unwrap();
        assert_eq!(back.code(), g.code());
    }

    #[test]
    fn orientation_property_on_degree_three() {
        for g in labeled_duals(3).unwrap() {
            let o = orient_greater_label_left(&g).unwrap();
            let n = felsner_normalize(&g, &o, Schedule::First).unwrap();
            assert!(clockwise_cycles(&g, &n).is_empty());
            let t = bernardi_spanning_tree(&g, &n).unwrap();
            assert_eq!(t.parent.iter().filter(|p| p.is_some()).count(), g.map.vertex_count() - 1);
        }
    }

    #[test]
    fn degree_three_bijection() {
        let gs = labeled_duals(3).unwrap();
        assert_eq!(gs.len(), 24);
        let mut trees = HashSet::new();
        for g in &gs {
            let t = graph_to_tree(g).unwrap();
            let back = tree_to_graph(&t).unwrap();
            assert_eq!(back.code(), g.code());
            trees.insert(t);
        }
        let all: HashSet<_> = enumerate_trees(3).unwrap().into_iter().collect();
        assert_eq!(trees, all);
    }

    #[test]
    fn degree_four_bijection() {
        let gs = labeled_duals(4).unwrap();
        let mut trees = HashSet::new();
        for g in &gs {
            let t = graph_to_tree(g).unwrap();
            assert_eq!(tree_to_graph(&t).unwrap().code(), g.code());
            trees.insert(t);
        }
        assert_eq!(trees.len(), 2880);
        let all = enumerate_trees(4).unwrap();
        assert_eq!(all.len(), 2880);
        for t in &all {
            assert!(trees.contains(t));
            assert_eq!(&graph_to_tree(&tree_to_graph(t).unwrap()).unwrap(), t);
        }
    }

    #[test]
    fn schedules_agree() {
        for g in labeled_duals(3).unwrap() {
            let o = orient_greater_label_left(&g).unwrap();
            let first = felsner_normalize(&g, &o, Schedule::First).unwrap();
            for seed in 0..20 {
                assert_eq!(felsner_normalize(&g, &o, Schedule::Seeded(seed)).unwrap(), first);
            }
        }
    }

    #[test]
    fn rotation_is_increasing() {
        for t in enumerate_trees(3).unwrap() {
            for v in t.rotation().values() {
                assert!(v.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn invalid_trees_rejected() {
        let mut t = enumerate_trees(3).unwrap()[0].clone();
        t.edges[0].red[0] = t.edges[0].red[1];
        assert!(t.validate().is_err());
        assert!(matches!(enumerate_trees(6), Err(Error::LimitExceeded(_))));
    }
}

