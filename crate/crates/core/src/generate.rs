//! Generators for the named diagrams and the pinch operation.

use crate::colored::{checkerboard, ColoredMap};
use crate::error::{Error, Result};
use crate::map::{CombinatorialMap, Dart};

/// Two circles crossing at two points.
pub fn quadratic() -> CombinatorialMap {
    CombinatorialMap::from_rotation(
        &[vec![0, 1, 2, 3], vec![7, 6, 5, 4]],
        &[(0, 4), (1, 5), (2, 6), (3, 7)],
    )
    .expect("quadratic diagram is a valid map")
}

/// The octahedron, built from the rotations around the six unit axis
/// vectors seen from outside.
pub fn octahedron() -> CombinatorialMap {
    // vertex i = axis i/2 with sign (+ for even i)
    let vec_of = |i: usize| -> [i32; 3] {
        let mut v = [0; 3];
        v[i / 2] = if i.is_multiple_of(2) { 1 } else { -1 };
        v
    };
    let cross = |a: [i32; 3], b: [i32; 3]| -> [i32; 3] {
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    };
    let index_of = |v: [i32; 3]| -> usize {
        let axis = v.iter().position(|&x| x != 0).expect("unit vector");
        2 * axis + usize::from(v[axis] < 0)
    };
    // dart (u, w) for u != w, w not antipodal
    let mut dart_id = std::collections::BTreeMap::new();
    for u in 0..6 {
        for w in 0..6 {
            if u / 2 != w / 2 {
                let id = dart_id.len();
                dart_id.insert((u, w), id);
            }
        }
    }
    let mut rotation = Vec::new();
    for u in 0..6 {
        let n = vec_of(u);
        let start = (0..6).find(|&w| w / 2 != u / 2).expect("neighbor");
        let mut cyc = Vec::new();
        let mut w = start;
        for _ in 0..4 {
            cyc.push(dart_id[&(u, w)]);
            w = index_of(cross(n, vec_of(w)));
        }
        rotation.push(cyc);
    }
    let edges: Vec<(Dart, Dart)> = dart_id
        .iter()
        .filter(|((u, w), _)| u < w)
        .map(|(&(u, w), &id)| (id, dart_id[&(w, u)]))
        .collect();
    CombinatorialMap::from_rotation(&rotation, &edges).expect("octahedron is a valid map")
}

/// The 3×n turkshead: outer vertices `a_k`, inner vertices `b_k`, outer arcs
/// `a_k a_{k+1}`, inner arcs `b_k b_{k+1}` and the zigzag cord
/// `a_k b_k a_{k+1}`. It has 2n vertices, 4n edges and 2n+2 faces.
pub fn turkshead(n: usize) -> Result<CombinatorialMap> {
    if n == 0 {
        return Err(Error::InvalidInput("turkshead needs n >= 1".into()));
    }
    // edge families: O_k (a_k -> a_k+1), I_k (b_k -> b_k+1), C_k (a_k -> b_k), D_k (b_k -> a_k+1)
    let tail = |family: usize, k: usize| 2 * (4 * (k % n) + family);
    let head = |family: usize, k: usize| tail(family, k) + 1;
    let (o, i, c, dd) = (0, 1, 2, 3);
    let mut rotation = Vec::new();
    for k in 0..n {
        let km = (k + n - 1) % n;
        rotation.push(vec![tail(o, k), tail(c, k), head(dd, km), head(o, km)]);
        rotation.push(vec![tail(dd, k), tail(i, k), head(i, km), head(c, k)]);
    }
    let edges: Vec<(Dart, Dart)> = (0..4 * n).map(|e| (2 * e, 2 * e + 1)).collect();
    CombinatorialMap::from_rotation(&rotation, &edges)
}

/// Checkerboard coloring of `map` in which face `blue_face` is blue.
pub fn colored_with_blue(map: &CombinatorialMap, blue_face: usize) -> Result<ColoredMap> {
    let (a, b) = checkerboard(map)?;
    Ok(if a.is_blue(blue_face) { a } else { b })
}

/// Identifies a point on the edge of `d1` with a point on the edge of `d2`
/// (both darts bounding `face` on their left) into a new 4-valent vertex.
/// The face splits in two, both keeping its color.
pub fn pinch(cm: &ColoredMap, face: usize, d1: Dart, d2: Dart) -> Result<ColoredMap> {
    let m = cm.map();
    if d1 >= m.dart_count() || d2 >= m.dart_count() {
        return Err(Error::InvalidPinch("dart out of range".into()));
    }
    if m.face(d1) != face || m.face(d2) != face {
        return Err(Error::InvalidPinch("darts must lie on the given face".into()));
    }
    if m.edge_rep(d1) == m.edge_rep(d2) {
        return Err(Error::InvalidPinch("darts lie on the same edge".into()));
    }
    let mut sigma: Vec<Dart> = m.sigma_perm().to_vec();
    let mut alpha: Vec<Dart> = m.alpha_perm().to_vec();
    // split edge of d at a point: x continues d's direction, y points back
    let split = |d: Dart, sigma: &mut Vec<Dart>, alpha: &mut Vec<Dart>| -> (Dart, Dart) {
        let x = sigma.len();
        let y = x + 1;
        sigma.push(y);
        sigma.push(x);
        let far = alpha[d];
        alpha.push(far);
        alpha.push(d);
        alpha[far] = x;
        alpha[d] = y;
        (x, y)
    };
    let (x1, y1) = split(d1, &mut sigma, &mut alpha);
    let (x2, y2) = split(d2, &mut sigma, &mut alpha);
    // merged rotation x1, y2, x2, y1
    sigma[x1] = y2;
    sigma[y2] = x2;
    sigma[x2] = y1;
    sigma[y1] = x1;
    let pinched = CombinatorialMap::new(sigma, alpha)?;
    // the sector (y1, x1) lies on the far side of d1's edge
    let opposite = !cm.is_blue(face);
    let (a, b) = checkerboard(&pinched)?;
    let out = if a.is_blue(pinched.face(y1)) == opposite { a } else { b };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_diagram_counts() {
        let q = quadratic();
        assert_eq!((q.vertex_count(), q.edge_count(), q.face_count()), (2, 4, 4));
        let o = octahedron();
        assert_eq!((o.vertex_count(), o.edge_count(), o.face_count()), (6, 12, 8));
        assert!(o.faces().iter().all(|f| f.len() == 3));
        for n in 1..=6 {
            let t = turkshead(n).unwrap();
            assert_eq!(
                (t.vertex_count(), t.edge_count(), t.face_count()),
                (2 * n, 4 * n, 2 * n + 2)
            );
            assert!(t.is_four_valent());
        }
    }

    #[test]
    fn turkshead_one_differs_from_quadratic() {
        assert_ne!(quadratic().canonical_code(), turkshead(1).unwrap().canonical_code());
    }

    #[test]
    fn pinch_adds_a_blue_face() {
        let (cm, _) = checkerboard(&octahedron()).unwrap();
        let f = cm.blue_faces()[0];
        let ds = &cm.map().faces()[f];
        let p = pinch(&cm, f, ds[0], ds[1]).unwrap();
        assert_eq!((p.blue_count(), p.white_count()), (5, 4));
        assert_eq!(p.map().vertex_count(), 7);
    }

    #[test]
    fn pinch_rejects_same_edge_or_wrong_face() {
        let (cm, _) = checkerboard(&quadratic()).unwrap();
        let f = 0;
        let d = cm.map().faces()[f][0];
        assert!(matches!(pinch(&cm, f, d, d), Err(Error::InvalidPinch(_))));
        let other = (0..8).find(|&x| cm.map().face(x) != f).unwrap();
        assert!(matches!(pinch(&cm, f, d, other), Err(Error::InvalidPinch(_))));
    }
}
