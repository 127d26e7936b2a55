//! Vertex-simple directed cycles in a map and the faces to their left.

use std::collections::VecDeque;

use crate::map::{CombinatorialMap, Dart};

/// All vertex-simple directed cycles using darts for which `usable` holds.
///
/// A cycle is the list of its darts, starting at its smallest vertex; cycles
/// are produced in a deterministic order (by start vertex, then DFS over the
/// rotation order). Enumeration stops after `limit` cycles.
pub fn directed_cycles<F: Fn(Dart) -> bool>(
    m: &CombinatorialMap,
    usable: F,
    limit: usize,
) -> Vec<Vec<Dart>> {
    let mut out = Vec::new();
    let mut on_path = vec![false; m.vertex_count()];
    let mut path: Vec<Dart> = Vec::new();
    for s in 0..m.vertex_count() {
        on_path[s] = true;
        extend(m, &usable, s, s, &mut on_path, &mut path, &mut out, limit);
        on_path[s] = false;
        if out.len() >= limit {
            break;
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend<F: Fn(Dart) -> bool>(
    m: &CombinatorialMap,
    usable: &F,
    start: usize,
    v: usize,
    on_path: &mut [bool],
    path: &mut Vec<Dart>,
    out: &mut Vec<Vec<Dart>>,
    limit: usize,
) {
    for &d in &m.vertices()[v] {
        if out.len() >= limit {
            return;
        }
        if !usable(d) {
            continue;
        }
        let w = m.target(d);
        if w == start {
            let mut cyc = path.clone();
            cyc.push(d);
            out.push(cyc);
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(d);
            extend(m, usable, start, w, on_path, path, out, limit);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Faces lying on the left of a simple closed curve made of `cycle`'s darts:
/// the faces reachable from the left faces of the curve without crossing it.
pub fn left_faces(m: &CombinatorialMap, cycle: &[Dart]) -> Vec<bool> {
    let mut on_curve = vec![false; m.dart_count()];
    for &d in cycle {
        on_curve[d] = true;
        on_curve[m.alpha(d)] = true;
    }
    let mut inside = vec![false; m.face_count()];
    let mut q = VecDeque::new();
    for &d in cycle {
        let f = m.face(d);
        if !inside[f] {
            inside[f] = true;
            q.push_back(f);
        }
    }
    while let Some(f) = q.pop_front() {
        for &d in &m.faces()[f] {
            if on_curve[d] {
                continue;
            }
            let g = m.right_face(d);
            if !inside[g] {
                inside[g] = true;
                q.push_back(g);
            }
        }
    }
    inside
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::checkerboard;
    use crate::generate;

    #[test]
    fn quadratic_forward_cycles() {
        let (cm, _) = checkerboard(&generate::quadratic()).unwrap();
        let cycles = directed_cycles(cm.map(), |d| cm.is_forward(d), usize::MAX);
        // two vertices, each forward edge goes between them in some direction;
        // two edges each way give 4 two-edge cycles
        assert_eq!(cycles.len(), 4);
        for c in &cycles {
            let left = left_faces(cm.map(), c);
            assert!(left.iter().any(|&x| x));
            assert!(left.iter().any(|&x| !x));
        }
    }

    #[test]
    fn left_region_of_face_boundary_is_the_face() {
        let m = generate::octahedron();
        let f = &m.faces()[0];
        let left = left_faces(&m, f);
        assert_eq!(left.iter().filter(|&&x| x).count(), 1);
        assert!(left[0]);
    }
}
