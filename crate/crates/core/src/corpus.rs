//! Exhaustive corpus of small 4-valent sphere maps.
//!
//! Every 4-valent map on the sphere is the medial map of a planar map (take
//! the blue faces as vertices and every crossing as an edge), so the corpus
//! is generated from all planar maps with at most `V` edges.

use std::collections::BTreeMap;

use crate::colored::{checkerboard, ColoredMap};
use crate::error::{Error, Result};
use crate::map::{CanonicalCode, CombinatorialMap, Dart};

/// Largest vertex count accepted by [`build_corpus`].
pub const MAX_CORPUS_VERTICES: usize = 6;

/// All connected planar maps with exactly `1..=max_edges` edges, up to
/// orientation-preserving isomorphism; entry `k` holds the maps with `k + 1`
/// edges, sorted by canonical code.
pub fn planar_maps(max_edges: usize) -> Vec<Vec<CombinatorialMap>> {
    let mut levels: Vec<Vec<CombinatorialMap>> = Vec::new();
    if max_edges == 0 {
        return levels;
    }
    let bridge = CombinatorialMap::new(vec![0, 1], vec![1, 0]).expect("single edge");
    let lp = CombinatorialMap::new(vec![1, 0], vec![1, 0]).expect("single loop");
    levels.push(dedup(vec![bridge, lp]));
    for _ in 1..max_edges {
        let prev = levels.last().expect("nonempty");
        let mut next = Vec::new();
        for m in prev {
            next.extend(extensions(m));
        }
        levels.push(dedup(next));
    }
    levels
}

fn dedup(maps: Vec<CombinatorialMap>) -> Vec<CombinatorialMap> {
    let mut by_code: BTreeMap<CanonicalCode, CombinatorialMap> = BTreeMap::new();
    for m in maps {
        by_code.entry(m.canonical_code()).or_insert(m);
    }
    by_code.into_values().collect()
}

/// Maps with one more edge: a chord across a face between two corners
/// (possibly the same corner), or a pendant edge in a corner.
fn extensions(m: &CombinatorialMap) -> Vec<CombinatorialMap> {
    let n = m.dart_count();
    let mut out = Vec::new();
    for d1 in 0..n {
        // pendant edge after d1
        {
            let mut sigma = m.sigma_perm().to_vec();
            let mut alpha = m.alpha_perm().to_vec();
            let (x, y) = (n, n + 1);
            sigma.push(sigma[d1]);
            sigma.push(y);
            sigma[d1] = x;
            alpha.push(y);
            alpha.push(x);
            out.push(CombinatorialMap::new(sigma, alpha).expect("pendant edge keeps a planar map"));
        }
        for d2 in d1..n {
            if m.face(d1) != m.face(d2) {
                continue;
            }
            let mut sigma = m.sigma_perm().to_vec();
            let mut alpha = m.alpha_perm().to_vec();
            let (x, y) = (n, n + 1);
            sigma.push(0);
            sigma.push(0);
            if d1 == d2 {
                let after = sigma[d1];
                sigma[d1] = x;
                sigma[x] = y;
                sigma[y] = after;
            } else {
                sigma[x] = sigma[d1];
                sigma[d1] = x;
                sigma[y] = sigma[d2];
                sigma[d2] = y;
            }
            alpha.push(y);
            alpha.push(x);
            out.push(CombinatorialMap::new(sigma, alpha).expect("chord in a face keeps a planar map"));
        }
    }
    out
}

/// The medial map: one 4-valent vertex per edge, one edge per corner.
///
/// Corner `d` (between `d` and `sigma(d)`) becomes the edge with darts
/// `2d` at the midpoint of `d`'s edge and `2d + 1` at the midpoint of
/// `sigma(d)`'s edge.
pub fn medial(m: &CombinatorialMap) -> CombinatorialMap {
    let p = |d: Dart| 2 * d;
    let q = |d: Dart| 2 * d + 1;
    let mut rotation = Vec::new();
    for d in m.edges() {
        let e = m.alpha(d);
        rotation.push(vec![q(m.sigma_inv(e)), p(d), q(m.sigma_inv(d)), p(e)]);
    }
    let edges: Vec<(Dart, Dart)> = (0..m.dart_count()).map(|d| (p(d), q(d))).collect();
    CombinatorialMap::from_rotation(&rotation, &edges).expect("medial of a planar map is planar")
}

/// Colored 4-valent sphere maps with `1..=max_vertices` vertices.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub max_vertices: usize,
    /// Uncolored maps, sorted by vertex count then canonical code.
    pub uncolored: Vec<CombinatorialMap>,
    /// Both colorings of every uncolored map, deduplicated up to
    /// color-preserving isomorphism, sorted by vertex count then code.
    pub maps: Vec<ColoredMap>,
}

pub fn build_corpus(max_vertices: usize) -> Result<Corpus> {
    if max_vertices > MAX_CORPUS_VERTICES {
        return Err(Error::LimitExceeded(format!(
            "corpus is limited to {MAX_CORPUS_VERTICES} vertices, got {max_vertices}"
        )));
    }
    let mut uncolored: BTreeMap<(usize, CanonicalCode), CombinatorialMap> = BTreeMap::new();
    for level in planar_maps(max_vertices) {
        for m in level {
            let md = medial(&m);
            uncolored
                .entry((md.vertex_count(), md.canonical_code()))
                .or_insert(md);
        }
    }
    let mut colored: BTreeMap<(usize, CanonicalCode), ColoredMap> = BTreeMap::new();
    for m in uncolored.values() {
        let (a, b) = checkerboard(m)?;
        for c in [a, b] {
            colored
                .entry((m.vertex_count(), c.canonical_code()))
                .or_insert(c);
        }
    }
    Ok(Corpus {
        max_vertices,
        uncolored: uncolored.into_values().collect(),
        maps: colored.into_values().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn rooted_counts_match_tutte() {
        // rooted planar maps with n edges: 2·3^n (2n)! / (n! (n+2)!)
        let levels = planar_maps(4);
        let rooted = [2u64, 9, 54, 378];
        for (k, level) in levels.iter().enumerate() {
            let total: u64 = level.iter().map(|m| rooted_count(m) as u64).sum();
            assert_eq!(total, rooted[k], "edges {}", k + 1);
        }
    }

    /// Number of distinct rooted versions of `m` (roots up to automorphism).
    fn rooted_count(m: &CombinatorialMap) -> usize {
        let mut codes = std::collections::HashSet::new();
        for r in 0..m.dart_count() {
            codes.insert(m.canonical_code_by(|d| u64::from(d != r)));
        }
        codes.len()
    }

    #[test]
    fn rooted_four_valent_counts() {
        // rooted 4-valent maps with n vertices are as many as rooted maps
        // with n edges
        let c = build_corpus(4).unwrap();
        let rooted = [2usize, 9, 54, 378];
        for n in 1..=4 {
            let total: usize = c
                .uncolored
                .iter()
                .filter(|m| m.vertex_count() == n)
                .map(rooted_count)
                .sum();
            assert_eq!(total, rooted[n - 1], "vertices {n}");
        }
    }

    #[test]
    fn medial_is_four_valent() {
        for level in planar_maps(3) {
            for m in level {
                let md = medial(&m);
                assert!(md.is_four_valent());
                assert_eq!(md.vertex_count(), m.edge_count());
                assert_eq!(md.face_count(), m.vertex_count() + m.face_count());
            }
        }
    }

    #[test]
    fn small_corpus_contents() {
        let c = build_corpus(2).unwrap();
        let codes: Vec<_> = c.uncolored.iter().map(|m| m.canonical_code()).collect();
        assert!(codes.contains(&generate::quadratic().canonical_code()));
        assert!(codes.contains(&generate::turkshead(1).unwrap().canonical_code()));
        assert!(c.uncolored.iter().any(|m| m.vertex_count() == 1));
        for (i, a) in c.maps.iter().enumerate() {
            for b in &c.maps[i + 1..] {
                assert_ne!(a.canonical_code(), b.canonical_code());
            }
        }
    }

    #[test]
    fn limit_enforced() {
        assert!(matches!(build_corpus(7), Err(Error::LimitExceeded(_))));
    }
}
