//! Cutting diagrams along curves meeting the graph in two or four points,
//! the Murasugi sum that undoes the even four-point cut, and arc collapse.
//!
//! A cut curve is a cyclic sequence of darts `x_1, ..., x_k`: the curve
//! crosses the edge of `x_i` from its right face into `face(x_i)`, runs
//! inside that face and leaves it through the edge of `x_{i+1}`, so
//! `face(alpha(x_{i+1})) == face(x_i)`. The origins of all `x_i` lie on the
//! left of the curve.

use crate::balance::check_global;
use crate::colored::{checkerboard, ColoredMap};
use crate::error::{Error, Result};
use crate::generate::{self, pinch};
use crate::map::{CombinatorialMap, Dart};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CutKind {
    TwoPoint,
    FourPoint,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CutCurve {
    pub kind: CutKind,
    /// Crossing darts in order along the curve.
    pub darts: Vec<Dart>,
    /// `left[v]` holds for vertices on the left of the curve.
    pub left: Vec<bool>,
}

impl CutCurve {
    /// Vertices on the left and on the right.
    pub fn side_sizes(&self) -> (usize, usize) {
        let l = self.left.iter().filter(|&&b| b).count();
        (l, self.left.len() - l)
    }

    /// Both sides have an odd number of vertices.
    pub fn is_odd(&self) -> bool {
        self.side_sizes().0 % 2 == 1
    }
}

/// Builds and checks a curve from its crossing darts.
pub fn cut_curve(m: &CombinatorialMap, darts: &[Dart]) -> Result<CutCurve> {
    let kind = match darts.len() {
        2 => CutKind::TwoPoint,
        4 => CutKind::FourPoint,
        k => return Err(Error::InvalidInput(format!("a cut crosses 2 or 4 edges, got {k}"))),
    };
    let k = darts.len();
    if darts.iter().any(|&x| x >= m.dart_count()) {
        return Err(Error::InvalidInput("dart out of range".into()));
    }
    for i in 0..k {
        if m.face(m.alpha(darts[(i + 1) % k])) != m.face(darts[i]) {
            return Err(Error::InvalidInput("consecutive crossings do not share a face".into()));
        }
    }
    let mut edges: Vec<Dart> = darts.iter().map(|&x| m.edge_rep(x)).collect();
    edges.sort_unstable();
    edges.dedup();
    if edges.len() < k {
        return Err(Error::TrivialCut);
    }
    // arcs inside a common face must not cross
    let pos = |x: Dart| m.faces()[m.face(x)].iter().position(|&y| y == x).expect("dart on its face");
    let arcs: Vec<(usize, usize, usize)> = (0..k)
        .map(|i| (m.face(darts[i]), pos(darts[i]), pos(m.alpha(darts[(i + 1) % k]))))
        .collect();
    for (i, a) in arcs.iter().enumerate() {
        for b in &arcs[i + 1..] {
            if a.0 == b.0 && interleaved(a.1, a.2, b.1, b.2) {
                return Err(Error::InvalidInput("curve crosses itself".into()));
            }
        }
    }
    let comp = m.vertex_components_without(&edges);
    let left_comps: Vec<usize> = darts.iter().map(|&x| comp[m.origin(x)]).collect();
    let right_comps: Vec<usize> = darts.iter().map(|&x| comp[m.target(x)]).collect();
    if left_comps.iter().any(|c| right_comps.contains(c)) {
        return Err(Error::InvalidInput("curve does not separate the graph".into()));
    }
    let left: Vec<bool> = comp.iter().map(|c| left_comps.contains(c)).collect();
    Ok(CutCurve {
        kind,
        darts: darts.to_vec(),
        left,
    })
}

fn interleaved(a: usize, b: usize, c: usize, d: usize) -> bool {
    let (lo, hi) = (a.min(b), a.max(b));
    let inside = |x: usize| lo < x && x < hi;
    inside(c) != inside(d)
}

/// Least form of a crossing sequence over rotations and reversal.
fn canonical_sequence(m: &CombinatorialMap, darts: &[Dart]) -> Vec<Dart> {
    let k = darts.len();
    let rev: Vec<Dart> = darts.iter().rev().map(|&x| m.alpha(x)).collect();
    let mut best = darts.to_vec();
    for seq in [darts.to_vec(), rev] {
        for r in 0..k {
            let rot: Vec<Dart> = (0..k).map(|i| seq[(i + r) % k]).collect();
            if rot < best {
                best = rot;
            }
        }
    }
    best
}

fn enumerate_curves(m: &CombinatorialMap, k: usize, min_side: usize) -> Vec<CutCurve> {
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(k);
    for x in 0..m.dart_count() {
        seq.clear();
        seq.push(x);
        extend_curve(m, k, min_side, &mut seq, &mut out);
    }
    out.sort();
    out
}

fn extend_curve(m: &CombinatorialMap, k: usize, min_side: usize, seq: &mut Vec<Dart>, out: &mut Vec<CutCurve>) {
    let last = *seq.last().expect("nonempty");
    if seq.len() == k {
        if m.face(m.alpha(seq[0])) != m.face(last) || canonical_sequence(m, seq) != *seq {
            return;
        }
        if let Ok(c) = cut_curve(m, seq) {
            let (l, r) = c.side_sizes();
            if l >= min_side && r >= min_side {
                out.push(c);
            }
        }
        return;
    }
    for &z in &m.faces()[m.face(last)] {
        let y = m.alpha(z);
        if seq.iter().any(|&s| m.edge_rep(s) == m.edge_rep(y)) {
            continue;
        }
        seq.push(y);
        extend_curve(m, k, min_side, seq, out);
        seq.pop();
    }
}

/// All nontrivial curves meeting the graph in two points of distinct edges,
/// one per isotopy class, in canonical order.
pub fn find_two_cuts(cm: &ColoredMap) -> Vec<CutCurve> {
    enumerate_curves(cm.map(), 2, 1)
}

/// All curves meeting four distinct edges with at least two vertices on each
/// side, in canonical order.
pub fn find_four_cuts(cm: &ColoredMap) -> Vec<CutCurve> {
    enumerate_curves(cm.map(), 4, 2)
}

enum Join {
    /// Pairs of cut darts (indices) fused into one edge.
    Fuse(Vec<(usize, usize)>),
    /// A new vertex taking the cut darts in this counterclockwise order.
    Vertex(Vec<usize>),
}

/// The part of `cm` on one side, closed up by `join`. `cut` lists the darts
/// of that side crossing the curve.
fn piece(cm: &ColoredMap, side: &[bool], cut: &[Dart], join: Join) -> Result<ColoredMap> {
    let m = cm.map();
    let kept: Vec<Dart> = (0..m.dart_count()).filter(|&x| side[m.origin(x)]).collect();
    let mut index = vec![usize::MAX; m.dart_count()];
    for (i, &x) in kept.iter().enumerate() {
        index[x] = i;
    }
    let mut sigma: Vec<Dart> = kept.iter().map(|&x| index[m.sigma(x)]).collect();
    let mut alpha: Vec<Dart> = kept
        .iter()
        .map(|&x| if cut.contains(&x) { usize::MAX } else { index[m.alpha(x)] })
        .collect();
    match join {
        Join::Fuse(pairs) => {
            for (a, b) in pairs {
                let (a, b) = (index[cut[a]], index[cut[b]]);
                alpha[a] = b;
                alpha[b] = a;
            }
        }
        Join::Vertex(order) => {
            let base = sigma.len();
            let k = order.len();
            for (j, &c) in order.iter().enumerate() {
                sigma.push(base + (j + 1) % k);
                alpha.push(index[cut[c]]);
                alpha[index[cut[c]]] = base + j;
            }
        }
    }
    if alpha.contains(&usize::MAX) {
        return Err(Error::InvalidInput("cut darts left unpaired".into()));
    }
    let pm = CombinatorialMap::new(sigma, alpha)?;
    let (a, b) = checkerboard(&pm)?;
    let x0 = kept[0];
    let out = if a.is_blue(pm.face(0)) == cm.is_blue(m.face(x0)) { a } else { b };
    for (i, &x) in kept.iter().enumerate() {
        if out.is_blue(pm.face(i)) != cm.is_blue(m.face(x)) {
            return Err(Error::ColorMismatch);
        }
    }
    Ok(out)
}

fn check_kind(c: &CutCurve, kind: CutKind) -> Result<()> {
    if c.kind != kind {
        return Err(Error::InvalidInput(format!("expected a {kind:?} cut")));
    }
    Ok(())
}

/// Cuts along a two-point curve; on each side the two cut half-edges fuse
/// into one edge. Returns the left piece first.
pub fn split_two_cut(cm: &ColoredMap, c: &CutCurve) -> Result<(ColoredMap, ColoredMap)> {
    check_kind(c, CutKind::TwoPoint)?;
    let m = cm.map();
    if m.edge_rep(c.darts[0]) == m.edge_rep(c.darts[1]) {
        return Err(Error::TrivialCut);
    }
    let c = cut_curve(m, &c.darts)?;
    let right: Vec<bool> = c.left.iter().map(|&b| !b).collect();
    let back: Vec<Dart> = c.darts.iter().map(|&x| m.alpha(x)).collect();
    let l = piece(cm, &c.left, &c.darts, Join::Fuse(vec![(0, 1)]))?;
    let r = piece(cm, &right, &back, Join::Fuse(vec![(0, 1)]))?;
    Ok((l, r))
}

/// Cuts along a four-point curve. Odd sides: each wound becomes a new
/// 4-valent vertex. Even sides (globally balanced maps only): on each side
/// the boundary arcs of one color are glued to each other and those of the
/// other color are folded; each side takes the choice that leaves it
/// balanced. Returns the left piece first.
pub fn split_four_cut(cm: &ColoredMap, c: &CutCurve) -> Result<(ColoredMap, ColoredMap)> {
    check_kind(c, CutKind::FourPoint)?;
    let m = cm.map();
    let c = cut_curve(m, &c.darts)?;
    let (l, r) = c.side_sizes();
    if l < 2 || r < 2 {
        return Err(Error::NotApplicable("the curve goes around a single vertex".into()));
    }
    let right: Vec<bool> = c.left.iter().map(|&b| !b).collect();
    let back: Vec<Dart> = c.darts.iter().map(|&x| m.alpha(x)).collect();
    if c.is_odd() {
        // the left wound sits on the curve's right, so the crossings run
        // clockwise around it
        let lp = piece(cm, &c.left, &c.darts, Join::Vertex(vec![3, 2, 1, 0]))?;
        let rp = piece(cm, &right, &back, Join::Vertex(vec![0, 1, 2, 3]))?;
        return Ok((lp, rp));
    }
    if !check_global(cm) {
        return Err(Error::NotApplicable("even cut of a map that is not globally balanced".into()));
    }
    // arc i runs in face(x_i); folding the arcs of one color fuses x_i with x_{i+1}
    let arc_blue: Vec<bool> = c.darts.iter().map(|&x| cm.is_blue(m.face(x))).collect();
    let folds = |blue: bool| -> Join {
        Join::Fuse((0..4).filter(|&i| arc_blue[i] == blue).map(|i| (i, (i + 1) % 4)).collect())
    };
    let side = |side: &[bool], cut: &[Dart]| -> Result<ColoredMap> {
        for fold_blue in [true, false] {
            let p = piece(cm, side, cut, folds(fold_blue))?;
            if check_global(&p) {
                return Ok(p);
            }
        }
        Err(Error::NotApplicable("no gluing leaves the side balanced".into()))
    };
    Ok((side(&c.left, &c.darts)?, side(&right, &back)?))
}

/// Applies `split_two_cut` or `split_four_cut` as the curve requires.
pub fn split(cm: &ColoredMap, c: &CutCurve) -> Result<(ColoredMap, ColoredMap)> {
    match c.kind {
        CutKind::TwoPoint => split_two_cut(cm, c),
        CutKind::FourPoint => split_four_cut(cm, c),
    }
}

/// Rectangle in a face: two darts on the face, on distinct edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rectangle {
    pub face: usize,
    pub darts: [Dart; 2],
}

fn check_rectangle(cm: &ColoredMap, r: &Rectangle) -> Result<()> {
    let m = cm.map();
    if r.face >= m.face_count() || r.darts.iter().any(|&x| x >= m.dart_count()) {
        return Err(Error::InvalidRectangle("out of range".into()));
    }
    if r.darts.iter().any(|&x| m.face(x) != r.face) {
        return Err(Error::InvalidRectangle("darts must lie on the face".into()));
    }
    if m.edge_rep(r.darts[0]) == m.edge_rep(r.darts[1]) {
        return Err(Error::InvalidRectangle("rectangle sides must lie on different edges".into()));
    }
    Ok(())
}

/// Murasugi sum: removes a rectangle from `ra.face` of `a` and from
/// `rb.face` of `b` (opposite colors) and glues the two diagrams along
/// them. Returns the sum and its gluing curve, an even four-point cut with
/// `a` on the left.
pub fn murasugi_sum(a: &ColoredMap, ra: &Rectangle, b: &ColoredMap, rb: &Rectangle) -> Result<(ColoredMap, CutCurve)> {
    check_rectangle(a, ra)?;
    check_rectangle(b, rb)?;
    if a.is_blue(ra.face) == b.is_blue(rb.face) {
        return Err(Error::ColorMismatch);
    }
    let (ma, mb) = (a.map(), b.map());
    let off = ma.dart_count();
    let mut sigma: Vec<Dart> = ma.sigma_perm().to_vec();
    sigma.extend(mb.sigma_perm().iter().map(|&x| x + off));
    let mut alpha: Vec<Dart> = ma.alpha_perm().to_vec();
    alpha.extend(mb.alpha_perm().iter().map(|&x| x + off));
    let [da1, da2] = ra.darts;
    let [db1, db2] = [rb.darts[0] + off, rb.darts[1] + off];
    let (ea1, ea2) = (ma.alpha(da1), ma.alpha(da2));
    let (eb1, eb2) = (alpha[db1], alpha[db2]);
    let mut pair = |x: Dart, y: Dart| {
        alpha[x] = y;
        alpha[y] = x;
    };
    pair(da1, db1);
    pair(ea1, eb2);
    pair(da2, db2);
    pair(ea2, eb1);
    let m = CombinatorialMap::new(sigma, alpha).map_err(|e| Error::InvalidRectangle(e.to_string()))?;
    let (c1, c2) = checkerboard(&m)?;
    let out = if c1.is_blue(m.face(0)) == a.is_blue(ma.face(0)) { c1 } else { c2 };
    for x in 0..m.dart_count() {
        let want = if x < off { a.is_blue(ma.face(x)) } else { b.is_blue(mb.face(x - off)) };
        // faces met by the rectangles merge with faces of the other color
        // class only where the gluing says so
        if out.is_blue(m.face(x)) != want {
            return Err(Error::ColorMismatch);
        }
    }
    let curve = cut_curve(&m, &[ea1, da1, ea2, da2])?;
    Ok((out, curve))
}

/// Collapses an arc across `face` from the edge of `dart1` to the edge of
/// `dart2`, which must be the first and third of three consecutive
/// boundary edges, into a new vertex.
pub fn collapse_arc(cm: &ColoredMap, face: usize, dart1: Dart, dart2: Dart) -> Result<ColoredMap> {
    let m = cm.map();
    if face >= m.face_count() || dart1 >= m.dart_count() || dart2 >= m.dart_count() {
        return Err(Error::InvalidArc("out of range".into()));
    }
    if m.face(dart1) != face || m.phi(m.phi(dart1)) != dart2 || m.edge_rep(dart1) == m.edge_rep(dart2) {
        return Err(Error::InvalidArc(
            "darts must be the first and third of three consecutive edges of the face".into(),
        ));
    }
    let mid = m.phi(dart1);
    if m.edge_rep(mid) == m.edge_rep(dart1) || m.edge_rep(mid) == m.edge_rep(dart2) {
        return Err(Error::InvalidArc("the three edges must be distinct".into()));
    }
    pinch(cm, face, dart1, dart2).map_err(|e| Error::InvalidArc(e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieceKind {
    Quadratic,
    Hyperbolic,
}

#[derive(Clone, Debug)]
pub enum DecompositionTree {
    Leaf {
        map: ColoredMap,
        kind: PieceKind,
    },
    Cut {
        map: ColoredMap,
        cut: CutCurve,
        children: Box<[DecompositionTree; 2]>,
    },
}

impl DecompositionTree {
    pub fn leaves(&self) -> Vec<(&ColoredMap, PieceKind)> {
        match self {
            DecompositionTree::Leaf { map, kind } => vec![(map, *kind)],
            DecompositionTree::Cut { children, .. } => {
                let mut v = children[0].leaves();
                v.extend(children[1].leaves());
                v
            }
        }
    }

    pub fn cuts(&self) -> Vec<&CutCurve> {
        match self {
            DecompositionTree::Leaf { .. } => Vec::new(),
            DecompositionTree::Cut { cut, children, .. } => {
                let mut v = vec![cut];
                v.extend(children[0].cuts());
                v.extend(children[1].cuts());
                v
            }
        }
    }
}

pub fn is_quadratic(cm: &ColoredMap) -> bool {
    cm.map().vertex_count() == 2 && cm.map().canonical_code() == generate::quadratic().canonical_code()
}

/// The first applicable cut in canonical order: two-point cuts, then
/// four-point cuts (even ones only on globally balanced maps).
pub fn first_cut(cm: &ColoredMap) -> Option<CutCurve> {
    if let Some(c) = find_two_cuts(cm).into_iter().next() {
        return Some(c);
    }
    let balanced = check_global(cm);
    find_four_cuts(cm).into_iter().find(|c| c.is_odd() || balanced)
}

/// Splits greedily along the first applicable cut until none is left.
pub fn decompose_full(cm: &ColoredMap) -> Result<DecompositionTree> {
    match first_cut(cm) {
        None => Ok(DecompositionTree::Leaf {
            map: cm.clone(),
            kind: if is_quadratic(cm) { PieceKind::Quadratic } else { PieceKind::Hyperbolic },
        }),
        Some(cut) => {
            let (l, r) = split(cm, &cut)?;
            let children = Box::new([decompose_full(&l)?, decompose_full(&r)?]);
            Ok(DecompositionTree::Cut {
                map: cm.clone(),
                cut,
                children,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{colored_with_blue, octahedron, quadratic, turkshead};

    fn q() -> ColoredMap {
        colored_with_blue(&quadratic(), 0).unwrap()
    }

    fn rect(cm: &ColoredMap, blue: bool) -> Rectangle {
        let m = cm.map();
        let face = (0..m.face_count()).find(|&f| cm.is_blue(f) == blue).unwrap();
        let f = &m.faces()[face];
        Rectangle { face, darts: [f[0], f[1]] }
    }

    #[test]
    fn minimal_maps_have_no_cuts() {
        assert!(find_two_cuts(&q()).is_empty());
        assert!(find_four_cuts(&q()).is_empty());
        let o = colored_with_blue(&octahedron(), 0).unwrap();
        assert!(find_two_cuts(&o).is_empty());
        assert!(find_four_cuts(&o).is_empty());
        for n in 3..=5 {
            let t = colored_with_blue(&turkshead(n).unwrap(), 0).unwrap();
            assert!(first_cut(&t).is_none(), "turkshead {n}");
        }
    }

    #[test]
    fn quadratic_sum_round_trip() {
        let (a, b) = (q(), q());
        let (s, curve) = murasugi_sum(&a, &rect(&a, true), &b, &rect(&b, false)).unwrap();
        assert_eq!(s.map().vertex_count(), 4);
        assert!(!curve.is_odd());
        assert!(find_four_cuts(&s).contains(&cut_curve(s.map(), &canonical_sequence(s.map(), &curve.darts)).unwrap()));
        let (l, r) = split_four_cut(&s, &curve).unwrap();
        assert_eq!(l.canonical_code(), a.canonical_code());
        assert_eq!(r.canonical_code(), b.canonical_code());
        let tree = decompose_full(&s).unwrap();
        let leaves = tree.leaves();
        assert_eq!(leaves.len(), 2);
        assert!(leaves.iter().all(|(_, k)| *k == PieceKind::Quadratic));
    }

    #[test]
    fn same_color_rejected() {
        let (a, b) = (q(), q());
        assert!(matches!(
            murasugi_sum(&a, &rect(&a, true), &b, &rect(&b, true)),
            Err(Error::ColorMismatch)
        ));
    }

    #[test]
    fn two_cut_from_edge_sum() {
        // join two quadratic diagrams by cutting one edge of each and
        // reconnecting the ends crosswise
        let (a, b) = (q(), q());
        let (ma, mb) = (a.map(), b.map());
        let off = ma.dart_count();
        let mut sigma: Vec<Dart> = ma.sigma_perm().to_vec();
        sigma.extend(mb.sigma_perm().iter().map(|&x| x + off));
        let mut alpha: Vec<Dart> = ma.alpha_perm().to_vec();
        alpha.extend(mb.alpha_perm().iter().map(|&x| x + off));
        let (x, y) = (0, off);
        let (ax, ay) = (alpha[x], alpha[y]);
        alpha[x] = ay;
        alpha[ay] = x;
        alpha[y] = ax;
        alpha[ax] = y;
        let m = CombinatorialMap::new(sigma, alpha).unwrap();
        let cm = colored_with_blue(&m, 0).unwrap();
        let cuts = find_two_cuts(&cm);
        assert_eq!(cuts.len(), 1);
        let (l, r) = split_two_cut(&cm, &cuts[0]).unwrap();
        assert_eq!(l.map().canonical_code(), quadratic().canonical_code());
        assert_eq!(r.map().canonical_code(), quadratic().canonical_code());
        let bad = CutCurve {
            kind: CutKind::TwoPoint,
            darts: vec![0, 0],
            left: vec![],
        };
        assert!(matches!(split_two_cut(&cm, &bad), Err(Error::TrivialCut)));
    }

    #[test]
    fn arc_collapse() {
        let t = colored_with_blue(&turkshead(4).unwrap(), 0).unwrap();
        let m = t.map();
        let pick = |cm: &ColoredMap, blue: bool| {
            let m = cm.map();
            let f = (0..m.face_count()).find(|&f| cm.is_blue(f) == blue && m.faces()[f].len() >= 4).unwrap();
            let d = m.faces()[f][0];
            (f, d, m.phi(m.phi(d)))
        };
        let (f, d1, d2) = pick(&t, true);
        let once = collapse_arc(&t, f, d1, d2).unwrap();
        assert_eq!(once.map().vertex_count(), 9);
        assert_eq!(once.blue_count(), once.white_count() + 1);
        let (f, d1, d2) = pick(&once, false);
        let twice = collapse_arc(&once, f, d1, d2).unwrap();
        assert_eq!(twice.map().vertex_count(), 10);
        assert_eq!(twice.blue_count(), twice.white_count());
        let d = m.faces()[0][0];
        assert!(matches!(collapse_arc(&t, 0, d, m.phi(d)), Err(Error::InvalidArc(_))));
    }
}
