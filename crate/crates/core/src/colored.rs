//! Checkerboard-colored 4-valent maps.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::map::{CanonicalCode, CombinatorialMap, Dart};

/// A map together with a proper blue/white coloring of its faces.
///
/// Edges are directed so that their blue face lies on the left: a dart is
/// *forward* iff the face on its left is blue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredMap {
    map: CombinatorialMap,
    blue: Vec<bool>,
}

impl ColoredMap {
    /// Wraps `map` with the given blue face indices; the coloring must be
    /// proper. The map need not be 4-valent (enriched maps have 2-valent
    /// vertices).
    pub fn new(map: CombinatorialMap, blue_faces: &[usize]) -> Result<Self> {
        let mut blue = vec![false; map.face_count()];
        for &f in blue_faces {
            if f >= blue.len() {
                return Err(Error::BadColoring);
            }
            blue[f] = true;
        }
        Self::from_flags(map, blue)
    }

    pub fn from_flags(map: CombinatorialMap, blue: Vec<bool>) -> Result<Self> {
        if blue.len() != map.face_count() {
            return Err(Error::BadColoring);
        }
        for d in 0..map.dart_count() {
            if blue[map.face(d)] == blue[map.right_face(d)] {
                return Err(Error::BadColoring);
            }
        }
        Ok(ColoredMap { map, blue })
    }

    pub fn map(&self) -> &CombinatorialMap {
        &self.map
    }
    pub fn is_blue(&self, face: usize) -> bool {
        self.blue[face]
    }
    pub fn blue_flags(&self) -> &[bool] {
        &self.blue
    }
    pub fn blue_faces(&self) -> Vec<usize> {
        (0..self.blue.len()).filter(|&f| self.blue[f]).collect()
    }
    pub fn white_faces(&self) -> Vec<usize> {
        (0..self.blue.len()).filter(|&f| !self.blue[f]).collect()
    }
    pub fn blue_count(&self) -> usize {
        self.blue.iter().filter(|&&b| b).count()
    }
    pub fn white_count(&self) -> usize {
        self.blue.len() - self.blue_count()
    }

    /// True iff the edge of `d` is directed along `d` (blue on its left).
    pub fn is_forward(&self, d: Dart) -> bool {
        self.blue[self.map.face(d)]
    }

    /// Forward dart of every edge, ordered by edge representative.
    pub fn directed_edges(&self) -> Vec<Dart> {
        self.map
            .edges()
            .into_iter()
            .map(|e| if self.is_forward(e) { e } else { self.map.alpha(e) })
            .collect()
    }

    /// Same map with blue and white exchanged.
    pub fn swapped(&self) -> ColoredMap {
        ColoredMap {
            map: self.map.clone(),
            blue: self.blue.iter().map(|b| !b).collect(),
        }
    }

    /// Canonical code including the face colors.
    pub fn canonical_code(&self) -> CanonicalCode {
        self.map
            .canonical_code_by(|d| u64::from(self.blue[self.map.face(d)]))
    }
}

/// The two proper face 2-colorings of a 4-valent map: the first has face 0
/// blue, the second is its swap.
pub fn checkerboard(map: &CombinatorialMap) -> Result<(ColoredMap, ColoredMap)> {
    if !map.is_four_valent() {
        return Err(Error::NotFourValent);
    }
    let blue = two_color(map).ok_or(Error::BadColoring)?;
    let first = ColoredMap::from_flags(map.clone(), blue)?;
    let second = first.swapped();
    Ok((first, second))
}

/// BFS 2-coloring of the face adjacency graph with face 0 blue, if one exists.
pub(crate) fn two_color(map: &CombinatorialMap) -> Option<Vec<bool>> {
    let mut color: Vec<Option<bool>> = vec![None; map.face_count()];
    color[0] = Some(true);
    let mut q = VecDeque::from([0usize]);
    while let Some(f) = q.pop_front() {
        let c = color[f].expect("colored");
        for g in map.face_neighbors(f) {
            match color[g] {
                None => {
                    color[g] = Some(!c);
                    q.push_back(g);
                }
                Some(x) if x == c => return None,
                _ => {}
            }
        }
    }
    Some(color.into_iter().map(|c| c.expect("connected")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn quadratic_colorings() {
        let (a, b) = checkerboard(&generate::quadratic()).unwrap();
        assert_eq!((a.blue_count(), a.white_count()), (2, 2));
        assert_eq!((b.blue_count(), b.white_count()), (2, 2));
        // the two colorings are exchanged by a rotation of the sphere
        assert_eq!(a.canonical_code(), b.canonical_code());
    }

    #[test]
    fn swap_changes_colored_code_only() {
        let (o, _) = checkerboard(&generate::octahedron()).unwrap();
        let f = o.blue_faces()[0];
        let ds = &o.map().faces()[f];
        let p = generate::pinch(&o, f, ds[0], ds[1]).unwrap();
        let q = p.swapped();
        assert_ne!(p.canonical_code(), q.canonical_code());
        assert_eq!(p.map().canonical_code(), q.map().canonical_code());
    }

    #[test]
    fn octahedron_colorings() {
        let (a, _) = checkerboard(&generate::octahedron()).unwrap();
        assert_eq!((a.blue_count(), a.white_count()), (4, 4));
    }

    #[test]
    fn turkshead_colorings() {
        let (a, b) = checkerboard(&generate::turkshead(4).unwrap()).unwrap();
        assert_eq!((a.blue_count(), a.white_count()), (5, 5));
        assert_eq!((b.blue_count(), b.white_count()), (5, 5));
    }

    #[test]
    fn orientation_alternates_around_vertices() {
        for m in [generate::quadratic(), generate::octahedron(), generate::turkshead(3).unwrap()] {
            let (c, _) = checkerboard(&m).unwrap();
            for v in m.vertices() {
                for (i, &d) in v.iter().enumerate() {
                    let next = v[(i + 1) % v.len()];
                    assert_ne!(c.is_forward(d), c.is_forward(next));
                }
            }
        }
    }

    #[test]
    fn non_four_valent_rejected() {
        let m = CombinatorialMap::new(vec![0, 1], vec![1, 0]).unwrap();
        assert_eq!(checkerboard(&m).unwrap_err(), Error::NotFourValent);
    }
}
