//! Combinatorial maps on the sphere.
//!
//! A map is a pair of permutations on darts `0..2E`: `sigma` lists the darts
//! around each vertex in counterclockwise order and `alpha` pairs the two
//! darts of every edge. A dart points away from its origin vertex.
//!
//! The face to the left of a dart `d` is the angular sector between `d` and
//! `sigma(d)` at its origin. Walking a face boundary with the face on the left
//! is the permutation `phi = sigma⁻¹ ∘ alpha`; every orbit of `phi` is one face
//! and contains exactly the darts having that face on their left.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Dart = usize;

/// A connected genus-0 map. All derived tables are computed once at
/// construction and never change.
#[derive(Clone, Debug)]
pub struct CombinatorialMap {
    sigma: Vec<Dart>,
    sigma_inv: Vec<Dart>,
    alpha: Vec<Dart>,
    vertex_of: Vec<usize>,
    vertices: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
    faces: Vec<Vec<Dart>>,
}

impl PartialEq for CombinatorialMap {
    fn eq(&self, other: &Self) -> bool {
        self.sigma == other.sigma && self.alpha == other.alpha
    }
}

impl Eq for CombinatorialMap {}

pub(crate) fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub(crate) fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Cycles of a permutation, ordered by minimal element, each starting at its
/// minimal element.
pub(crate) fn cycles_of(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        out.push(cyc);
    }
    out
}

/// Connected components of the dart set under `<sigma, alpha>`, each sorted.
pub(crate) fn components(sigma: &[usize], alpha: &[usize]) -> Vec<Vec<Dart>> {
    let n = sigma.len();
    let mut comp = vec![usize::MAX; n];
    let mut out: Vec<Vec<Dart>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut i = 0;
        while i < members.len() {
            let d = members[i];
            i += 1;
            for nb in [sigma[d], alpha[d]] {
                if comp[nb] == usize::MAX {
                    comp[nb] = id;
                    members.push(nb);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

impl CombinatorialMap {
    /// Validates `sigma`/`alpha` and computes vertices and faces.
    pub fn new(sigma: Vec<Dart>, alpha: Vec<Dart>) -> Result<Self> {
        let n = sigma.len();
        if n == 0 || !n.is_multiple_of(2) || alpha.len() != n || !is_permutation(&sigma) {
            return Err(Error::InvalidPermutation(n));
        }
        for d in 0..n {
            let a = alpha[d];
            if a >= n {
                return Err(Error::InvalidPermutation(n));
            }
            if alpha[a] != d {
                return Err(Error::AlphaNotInvolution(d + 1));
            }
            if a == d {
                return Err(Error::AlphaHasFixedPoint(d + 1));
            }
        }
        if components(&sigma, &alpha).len() != 1 {
            return Err(Error::Disconnected);
        }
        let m = Self::assemble(sigma, alpha);
        let chi = m.euler_characteristic();
        if chi != 2 {
            return Err(Error::NonZeroGenus(chi));
        }
        Ok(m)
    }

    fn assemble(sigma: Vec<Dart>, alpha: Vec<Dart>) -> Self {
        let sigma_inv = inverse(&sigma);
        let vertices = cycles_of(&sigma);
        let mut vertex_of = vec![0; sigma.len()];
        for (i, c) in vertices.iter().enumerate() {
            for &d in c {
                vertex_of[d] = i;
            }
        }
        let phi: Vec<Dart> = (0..sigma.len()).map(|d| sigma_inv[alpha[d]]).collect();
        let faces = cycles_of(&phi);
        let mut face_of = vec![0; sigma.len()];
        for (i, c) in faces.iter().enumerate() {
            for &d in c {
                face_of[d] = i;
            }
        }
        CombinatorialMap {
            sigma,
            sigma_inv,
            alpha,
            vertex_of,
            vertices,
            face_of,
            faces,
        }
    }

    /// Builds a map from counterclockwise dart lists per vertex and the list
    /// of edges (pairs of darts).
    pub fn from_rotation(rotation: &[Vec<Dart>], edges: &[(Dart, Dart)]) -> Result<Self> {
        let n = edges.len() * 2;
        let mut sigma = vec![usize::MAX; n];
        for cyc in rotation {
            for (i, &d) in cyc.iter().enumerate() {
                if d >= n || sigma[d] != usize::MAX {
                    return Err(Error::InvalidPermutation(n));
                }
                sigma[d] = cyc[(i + 1) % cyc.len()];
            }
        }
        let mut alpha = vec![usize::MAX; n];
        for &(a, b) in edges {
            if a >= n || b >= n || alpha[a] != usize::MAX || alpha[b] != usize::MAX {
                return Err(Error::InvalidPermutation(n));
            }
            alpha[a] = b;
            alpha[b] = a;
        }
        if sigma.contains(&usize::MAX) || alpha.contains(&usize::MAX) {
            return Err(Error::InvalidPermutation(n));
        }
        Self::new(sigma, alpha)
    }

    pub fn dart_count(&self) -> usize {
        self.sigma.len()
    }
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
    pub fn edge_count(&self) -> usize {
        self.sigma.len() / 2
    }
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }
    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d]
    }
    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }
    /// Next dart along the boundary of the face on the left of `d`.
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma_inv[self.alpha[d]]
    }
    pub fn sigma_perm(&self) -> &[Dart] {
        &self.sigma
    }
    pub fn alpha_perm(&self) -> &[Dart] {
        &self.alpha
    }

    pub fn origin(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }
    pub fn target(&self, d: Dart) -> usize {
        self.vertex_of[self.alpha[d]]
    }
    /// Face on the left of `d`.
    pub fn face(&self, d: Dart) -> usize {
        self.face_of[d]
    }
    pub fn right_face(&self, d: Dart) -> usize {
        self.face_of[self.alpha[d]]
    }
    pub fn vertices(&self) -> &[Vec<Dart>] {
        &self.vertices
    }
    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }
    pub fn degree(&self, v: usize) -> usize {
        self.vertices[v].len()
    }
    pub fn is_four_valent(&self) -> bool {
        self.vertices.iter().all(|c| c.len() == 4)
    }

    /// Representative dart of each edge (the smaller of the two), ascending.
    pub fn edges(&self) -> Vec<Dart> {
        (0..self.dart_count()).filter(|&d| d < self.alpha[d]).collect()
    }
    /// Canonical representative dart of the edge containing `d`.
    pub fn edge_rep(&self, d: Dart) -> Dart {
        d.min(self.alpha[d])
    }

    /// Faces adjacent to `f` across some edge, with multiplicity per edge.
    pub fn face_neighbors(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&d| self.right_face(d)).collect()
    }

    /// Dual map: vertices are the faces of `self`, same darts and `alpha`;
    /// the dual rotation around a face is its boundary walk. The dual vertex
    /// of face `f` has index `f`, and the dual face containing `d` is the
    /// vertex `target(d)` of `self`.
    pub fn dual(&self) -> CombinatorialMap {
        let sigma: Vec<Dart> = (0..self.dart_count()).map(|d| self.phi(d)).collect();
        CombinatorialMap::assemble(sigma, self.alpha.clone())
    }

    /// Subdivides every edge; `counts[e]` new 2-valent vertices are placed on
    /// the edge whose representative dart is `e`. Returns the new map and,
    /// for each old dart, the new dart leaving the same origin along the same
    /// edge. New darts are numbered after the old ones; the chain along an
    /// edge runs from the representative dart towards its partner.
    pub fn subdivide(&self, counts: &[usize]) -> (CombinatorialMap, Vec<Dart>) {
        let n = self.dart_count();
        let mut sigma: Vec<Dart> = self.sigma.clone();
        let mut alpha: Vec<Dart> = self.alpha.clone();
        for e in self.edges() {
            let k = counts[e];
            if k == 0 {
                continue;
            }
            let back = self.alpha[e];
            // chain: e -> (b0, f0) -> (b1, f1) ... -> back
            let mut prev = e;
            for _ in 0..k {
                let b = sigma.len();
                let f = b + 1;
                sigma.push(f);
                sigma.push(b);
                alpha.push(prev);
                alpha.push(usize::MAX);
                alpha[prev] = b;
                prev = f;
            }
            alpha[prev] = back;
            alpha[back] = prev;
        }
        let map = CombinatorialMap::assemble(sigma, alpha);
        (map, (0..n).collect())
    }

    /// Removes all 2-valent vertices, fusing the two edges through each.
    /// Returns the new map and, for each surviving old dart, its new index.
    /// Fails if every vertex is 2-valent.
    pub fn suppress_degree_two(&self) -> Result<(CombinatorialMap, Vec<Option<Dart>>)> {
        let keep: Vec<Dart> = (0..self.dart_count())
            .filter(|&d| self.degree(self.origin(d)) != 2)
            .collect();
        if keep.is_empty() {
            return Err(Error::InvalidInput("map has only 2-valent vertices".into()));
        }
        let mut new_index = vec![None; self.dart_count()];
        for (i, &d) in keep.iter().enumerate() {
            new_index[d] = Some(i);
        }
        let mut sigma = vec![0; keep.len()];
        let mut alpha = vec![0; keep.len()];
        for (i, &d) in keep.iter().enumerate() {
            sigma[i] = new_index[self.sigma[d]].expect("kept vertex");
            let mut e = self.alpha[d];
            while self.degree(self.origin(e)) == 2 {
                e = self.alpha[self.sigma[e]];
            }
            alpha[i] = new_index[e].expect("kept vertex");
        }
        Ok((CombinatorialMap::new(sigma, alpha)?, new_index))
    }

    /// Applies the dart relabeling `perm` (old dart -> new dart).
    pub fn relabel(&self, perm: &[Dart]) -> CombinatorialMap {
        let n = self.dart_count();
        let mut sigma = vec![0; n];
        let mut alpha = vec![0; n];
        for d in 0..n {
            sigma[perm[d]] = perm[self.sigma[d]];
            alpha[perm[d]] = perm[self.alpha[d]];
        }
        CombinatorialMap::assemble(sigma, alpha)
    }

    /// Canonical code of the plain map.
    pub fn canonical_code(&self) -> CanonicalCode {
        self.canonical_code_by(|_| 0)
    }

    /// Canonical code where every dart additionally carries `attr(d)`; two
    /// maps get equal codes iff some orientation-preserving dart bijection
    /// commutes with sigma and alpha and preserves the attribute.
    pub fn canonical_code_by<F: Fn(Dart) -> u64>(&self, attr: F) -> CanonicalCode {
        let attrs: Vec<u64> = (0..self.dart_count()).map(&attr).collect();
        let best_attr = *attrs.iter().min().expect("nonempty");
        let mut best: Option<Vec<u64>> = None;
        for root in 0..self.dart_count() {
            if attrs[root] != best_attr {
                continue;
            }
            let code = self.trace(root, &attrs, best.as_deref());
            if let Some(code) = code {
                best = Some(code);
            }
        }
        CanonicalCode(best.expect("at least one root"))
    }

    /// Breadth-first relabeling trace from `root`. Returns `None` as soon as
    /// the trace is known to exceed `bound`.
    fn trace(&self, root: Dart, attrs: &[u64], bound: Option<&[u64]>) -> Option<Vec<u64>> {
        let n = self.dart_count();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[root] = 0;
        order.push(root);
        let mut code = Vec::with_capacity(3 * n + 1);
        code.push(n as u64);
        let mut less = false;
        let mut head = 0;
        while head < order.len() {
            let d = order[head];
            head += 1;
            for nb in [self.sigma[d], self.alpha[d]] {
                if label[nb] == usize::MAX {
                    label[nb] = order.len();
                    order.push(nb);
                }
            }
            for x in [label[self.sigma[d]] as u64, label[self.alpha[d]] as u64, attrs[d]] {
                let pos = code.len();
                code.push(x);
                if !less {
                    if let Some(b) = bound {
                        match x.cmp(&b[pos]) {
                            std::cmp::Ordering::Greater => return None,
                            std::cmp::Ordering::Less => less = true,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
            }
        }
        if bound.is_some() && !less {
            return None;
        }
        Some(code)
    }

    /// Component index of every vertex once the given edges are removed.
    pub fn vertex_components_without(&self, removed_edges: &[Dart]) -> Vec<usize> {
        let removed: Vec<bool> = {
            let mut r = vec![false; self.dart_count()];
            for &e in removed_edges {
                r[e] = true;
                r[self.alpha[e]] = true;
            }
            r
        };
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for s in 0..self.vertex_count() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &d in &self.vertices[v] {
                    if removed[d] {
                        continue;
                    }
                    let w = self.target(d);
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        q.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }
}

/// Lexicographically ordered isomorphism invariant of a (decorated) map.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(pub Vec<u64>);

#[cfg(test)]
mod tests {
    use super::*;

    fn quadratic() -> CombinatorialMap {
        // u: darts 0..4 ccw, v: 4..8; edge i joins i and 4+i; v's order reversed.
        CombinatorialMap::from_rotation(
            &[vec![0, 1, 2, 3], vec![7, 6, 5, 4]],
            &[(0, 4), (1, 5), (2, 6), (3, 7)],
        )
        .unwrap()
    }

    #[test]
    fn quadratic_counts() {
        let m = quadratic();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (2, 4, 4));
    }

    #[test]
    fn malformed_alpha_rejected() {
        // alpha not an involution
        let err = CombinatorialMap::new(vec![1, 2, 0, 3], vec![3, 2, 0, 1]).unwrap_err();
        assert!(matches!(err, Error::AlphaNotInvolution(_)));
        let err = CombinatorialMap::new(vec![1, 0], vec![0, 1]).unwrap_err();
        assert!(matches!(err, Error::AlphaHasFixedPoint(_)));
        // a 3-cycle and a tail: odd dart count
        let err = CombinatorialMap::new(vec![1, 2, 0], vec![1, 0, 2]).unwrap_err();
        assert!(matches!(err, Error::InvalidPermutation(_)));
    }

    #[test]
    fn genus_and_connectivity_checked() {
        // one vertex, two loops crossing: a torus
        let err = CombinatorialMap::new(vec![1, 2, 3, 0], vec![2, 3, 0, 1]).unwrap_err();
        assert_eq!(err, Error::NonZeroGenus(0));
        let err = CombinatorialMap::new(vec![0, 1, 2, 3], vec![1, 0, 3, 2]).unwrap_err();
        assert_eq!(err, Error::Disconnected);
    }

    #[test]
    fn faces_keep_face_on_left() {
        let m = quadratic();
        for f in m.faces() {
            for &d in f {
                assert_eq!(m.face(m.phi(d)), m.face(d));
            }
        }
    }

    #[test]
    fn dual_of_dual_has_same_counts() {
        let m = quadratic();
        let dd = m.dual();
        assert_eq!(dd.vertex_count(), m.face_count());
        assert_eq!(dd.face_count(), m.vertex_count());
        assert_eq!(dd.euler_characteristic(), 2);
    }

    #[test]
    fn relabel_preserves_code() {
        let m = quadratic();
        let perm = vec![5, 2, 7, 0, 3, 6, 1, 4];
        assert_eq!(m.canonical_code(), m.relabel(&perm).canonical_code());
    }

    #[test]
    fn subdivide_then_suppress() {
        let m = quadratic();
        let mut counts = vec![0; 8];
        counts[0] = 2;
        counts[2] = 1;
        let (s, _) = m.subdivide(&counts);
        assert_eq!(s.vertex_count(), 5);
        assert_eq!(s.euler_characteristic(), 2);
        let (back, _) = s.suppress_degree_two().unwrap();
        assert_eq!(back.canonical_code(), m.canonical_code());
    }
}
