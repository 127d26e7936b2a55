//! Realizing balanced maps as branched covers and back.
//!
//! A realization inserts 2-valent vertices so every face carries exactly
//! `n = V` boundary vertices, labels vertices by `ℤ/n` so that labels grow by
//! one along every edge direction, and reads off one transposition per
//! critical label.

use crate::balance::{face_weights, is_balanced, Matching};
use crate::colored::ColoredMap;
use crate::dps::FaceLabeledGraph;
use crate::error::{Error, Result};
use crate::map::{CombinatorialMap, Dart};
use crate::perm::{self, Perm};

/// Default cap on the number of matchings tried by the generic search.
pub const MATCHING_CAP: usize = 100_000;

/// A sequence of transpositions of `0..d` (stored with `a < b`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TranspositionTuple {
    pub d: usize,
    pub taus: Vec<(usize, usize)>,
}

impl TranspositionTuple {
    /// Normalizes the pairs and checks length `2d-2`, trivial product and
    /// transitivity.
    pub fn new(d: usize, taus: Vec<(usize, usize)>) -> Result<Self> {
        let taus = taus
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        let t = TranspositionTuple { d, taus };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.d;
        if d < 2 {
            return Err(Error::InvalidTuple("degree must be at least 2".into()));
        }
        if self.taus.len() != 2 * d - 2 {
            return Err(Error::InvalidTuple(format!(
                "expected {} transpositions, got {}",
                2 * d - 2,
                self.taus.len()
            )));
        }
        for &(a, b) in &self.taus {
            if a == b || b >= d {
                return Err(Error::InvalidTuple(format!("({} {}) is not a transposition", a + 1, b + 1)));
            }
        }
        if self.product() != perm::identity(d) {
            return Err(Error::InvalidTuple("product is not the identity".into()));
        }
        if !perm::transitive(d, &self.taus) {
            return Err(Error::InvalidTuple("action is not transitive".into()));
        }
        Ok(())
    }

    /// `τ_n ∘ … ∘ τ_1`.
    pub fn product(&self) -> Perm {
        let mut p = perm::identity(self.d);
        for &(a, b) in &self.taus {
            p = perm::compose(&perm::transposition(self.d, a, b), &p);
        }
        p
    }

    /// Simultaneous conjugation by `g`.
    pub fn conjugate(&self, g: &[usize]) -> TranspositionTuple {
        TranspositionTuple {
            d: self.d,
            taus: self.taus.iter().map(|&t| perm::conjugate_pair(g, t)).collect(),
        }
    }

    /// Lexicographically least simultaneous conjugate.
    pub fn canonical(&self) -> TranspositionTuple {
        perm::all_permutations(self.d)
            .iter()
            .map(|g| self.conjugate(g))
            .min()
            .expect("S_d is nonempty")
    }

    pub fn is_conjugate_to(&self, other: &TranspositionTuple) -> bool {
        self.d == other.d && self.taus.len() == other.taus.len() && self.canonical() == other.canonical()
    }
}

/// A colored map with 2-valent vertices inserted according to a matching.
///
/// `base_vertex[v]` is the enriched vertex of base vertex `v`, and
/// `base_face[f]` the enriched face containing base face `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnrichedMap {
    pub base: ColoredMap,
    pub enriched: ColoredMap,
    pub matching: Matching,
    pub base_vertex: Vec<usize>,
    pub base_face: Vec<usize>,
}

impl EnrichedMap {
    /// Number of critical points, `2d - 2`.
    pub fn n(&self) -> usize {
        self.base.map().vertex_count()
    }
    pub fn degree(&self) -> usize {
        self.n() / 2 + 1
    }
    pub fn is_critical(&self, v: usize) -> bool {
        self.enriched.map().degree(v) == 4
    }
}

/// Vertex labels in `ℤ/n`, stored as `0..n` (printed one-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub n: usize,
    pub labels: Vec<usize>,
}

impl Labeling {
    /// Labels of the base vertices, in base vertex order.
    pub fn critical_labels(&self, em: &EnrichedMap) -> Vec<usize> {
        em.base_vertex.iter().map(|&v| self.labels[v]).collect()
    }

    pub fn has_distinct_critical_labels(&self, em: &EnrichedMap) -> bool {
        let mut seen = vec![false; self.n];
        for l in self.critical_labels(em) {
            if seen[l] {
                return false;
            }
            seen[l] = true;
        }
        true
    }

    pub fn shifted(&self, k: usize) -> Labeling {
        Labeling {
            n: self.n,
            labels: self.labels.iter().map(|&l| (l + k) % self.n).collect(),
        }
    }
}

/// Inserts `m.counts[e]` 2-valent vertices on every edge `e`.
pub fn enrich(cm: &ColoredMap, m: &Matching) -> Result<EnrichedMap> {
    m.validate(cm)?;
    let (map, _) = cm.map().subdivide(&m.counts);
    // old darts keep their indices and precede new ones, so vertex and face
    // indices of the base carry over
    let enriched = ColoredMap::from_flags(map, cm.blue_flags().to_vec())?;
    Ok(EnrichedMap {
        base: cm.clone(),
        enriched,
        matching: m.clone(),
        base_vertex: (0..cm.map().vertex_count()).collect(),
        base_face: (0..cm.map().face_count()).collect(),
    })
}

/// Integrates the `+1` cocycle from `seed_vertex` (an enriched vertex).
pub fn integrate_labels(em: &EnrichedMap, seed_vertex: usize, seed_label: usize) -> Result<Labeling> {
    let n = em.n();
    let labels = integrate_colored(&em.enriched, n, seed_vertex, seed_label)?;
    Ok(Labeling { n, labels })
}

/// Labels in `ℤ/n` on the vertices of any properly colored map, growing by
/// one along every edge direction, with `seed_vertex` at `seed_label`.
pub fn integrate_colored(cm: &ColoredMap, n: usize, seed_vertex: usize, seed_label: usize) -> Result<Vec<usize>> {
    let m = cm.map();
    if n == 0 || seed_vertex >= m.vertex_count() {
        return Err(Error::InvalidInput("seed vertex out of range".into()));
    }
    let mut label = vec![usize::MAX; m.vertex_count()];
    label[seed_vertex] = seed_label % n;
    let mut queue = std::collections::VecDeque::from([seed_vertex]);
    while let Some(v) = queue.pop_front() {
        for &d in &m.vertices()[v] {
            let w = m.target(d);
            let expect = if cm.is_forward(d) {
                (label[v] + 1) % n
            } else {
                (label[v] + n - 1) % n
            };
            if label[w] == usize::MAX {
                label[w] = expect;
                queue.push_back(w);
            } else if label[w] != expect {
                return Err(Error::InconsistentCocycle(w));
            }
        }
    }
    Ok(label)
}

/// Calls `visit` on every matching of `cm` (nonnegative edge counts meeting
/// every face equation) in lexicographic order of the counts along
/// ascending edges, until `visit` returns true. Returns whether a visit
/// stopped the search. More than `cap` matchings give `LimitExceeded`.
pub fn for_each_matching<F: FnMut(&Matching) -> bool>(cm: &ColoredMap, cap: usize, mut visit: F) -> Result<bool> {
    let m = cm.map();
    let weights = face_weights(cm);
    if weights.iter().any(|&w| w < 0) {
        return Ok(false);
    }
    let edges = m.edges();
    let mut last_edge = vec![usize::MAX; m.face_count()];
    for (i, &e) in edges.iter().enumerate() {
        last_edge[m.face(e)] = i;
        last_edge[m.right_face(e)] = i;
    }
    // faces without edges cannot occur in a connected map with edges
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for (f, &i) in last_edge.iter().enumerate() {
        closing[i].push(f);
    }
    struct State<'a, F> {
        m: &'a CombinatorialMap,
        edges: Vec<Dart>,
        closing: Vec<Vec<usize>>,
        residual: Vec<i64>,
        current: Matching,
        seen: usize,
        cap: usize,
        visit: F,
    }
    fn go<F: FnMut(&Matching) -> bool>(s: &mut State<'_, F>, i: usize) -> Result<bool> {
        if i == s.edges.len() {
            s.seen += 1;
            if s.seen > s.cap {
                return Err(Error::LimitExceeded(format!("more than {} matchings", s.cap)));
            }
            return Ok((s.visit)(&s.current));
        }
        let e = s.edges[i];
        let (f, g) = (s.m.face(e), s.m.right_face(e));
        let top = s.residual[f].min(s.residual[g]);
        for k in 0..=top {
            s.residual[f] -= k;
            s.residual[g] -= k;
            s.current.counts[e] = k as usize;
            let closed = s.closing[i].iter().all(|&h| s.residual[h] == 0);
            let stop = if closed { go(s, i + 1) } else { Ok(false) };
            s.residual[f] += k;
            s.residual[g] += k;
            s.current.counts[e] = 0;
            if stop? {
                return Ok(true);
            }
        }
        Ok(false)
    }
    let mut s = State {
        m,
        edges,
        closing,
        residual: weights,
        current: Matching::empty(cm),
        seen: 0,
        cap,
        visit: &mut visit,
    };
    go(&mut s, 0)
}

/// A realization found without consulting the balance deciders.
#[derive(Clone, Debug)]
pub struct Realization {
    pub enriched: EnrichedMap,
    pub labeling: Labeling,
    pub tuple: TranspositionTuple,
}

/// Searches matchings in canonical order for one whose labeling has
/// pairwise distinct critical labels and yields a valid monodromy tuple.
///
/// Distinctness does not depend on the label offset, so labels are seeded
/// with the first base vertex at label 0.
pub fn search_realization(cm: &ColoredMap, cap: usize) -> Result<Option<Realization>> {
    let v = cm.map().vertex_count();
    if v == 0 || v % 2 == 1 {
        return Ok(None);
    }
    let mut found = None;
    for_each_matching(cm, cap, |m| {
        let Ok(em) = enrich(cm, m) else { return false };
        let Ok(lab) = integrate_labels(&em, em.base_vertex[0], 0) else {
            return false;
        };
        if !lab.has_distinct_critical_labels(&em) {
            return false;
        }
        match monodromy(&em, &lab) {
            Ok(tuple) => {
                found = Some(Realization {
                    enriched: em,
                    labeling: lab,
                    tuple,
                });
                true
            }
            Err(_) => false,
        }
    })?;
    Ok(found)
}

/// Enrichment and labeling with pairwise distinct critical labels.
pub fn realize_generic(cm: &ColoredMap) -> Result<(EnrichedMap, Labeling)> {
    if !is_balanced(cm).balanced() {
        return Err(Error::NotBalanced);
    }
    match search_realization(cm, MATCHING_CAP)? {
        Some(r) => Ok((r.enriched, r.labeling)),
        None => Err(Error::NoGenericRealization),
    }
}

/// Whether some matching realizes `cm` as a generic cover. Does not use the
/// balance deciders.
pub fn is_realizable(cm: &ColoredMap) -> bool {
    matches!(search_realization(cm, MATCHING_CAP), Ok(Some(_)))
}

/// The monodromy tuple of a realization. Sheets are the blue faces of the
/// enriched map in index order; `τ_j` swaps the two sheets meeting at the
/// critical vertex labeled `j`.
pub fn monodromy(em: &EnrichedMap, lab: &Labeling) -> Result<TranspositionTuple> {
    let cm = &em.enriched;
    let m = cm.map();
    let n = em.n();
    if !lab.has_distinct_critical_labels(em) {
        return Err(Error::InvalidInput("critical labels are not distinct".into()));
    }
    let blue = cm.blue_faces();
    let white = cm.white_faces();
    if blue.len() != white.len() || 2 * blue.len() != n + 2 {
        return Err(Error::InvalidInput("face counts do not match a cover".into()));
    }
    let d = blue.len();
    let mut white_rank = vec![usize::MAX; m.face_count()];
    for (k, &f) in white.iter().enumerate() {
        white_rank[f] = k;
    }
    // beta[j][i]: white sheet across the edge of blue sheet i leaving label j
    let mut beta: Vec<Perm> = vec![vec![usize::MAX; d]; n];
    for (i, &f) in blue.iter().enumerate() {
        for &dart in &m.faces()[f] {
            let j = lab.labels[m.origin(dart)];
            if beta[j][i] != usize::MAX {
                return Err(Error::InvalidInput("blue face repeats a label".into()));
            }
            beta[j][i] = white_rank[m.right_face(dart)];
        }
    }
    for b in &beta {
        if b.contains(&usize::MAX) || !crate::map::is_permutation(b) {
            return Err(Error::InvalidInput("crossing map is not a bijection".into()));
        }
    }
    let mut taus = Vec::with_capacity(n);
    for j in 0..n {
        let prev = &beta[(j + n - 1) % n];
        let t = perm::compose(&perm::inverse(&beta[j]), prev);
        let pair = perm::as_transposition(&t)
            .ok_or_else(|| Error::InvalidInput(format!("label {} does not give a transposition", j + 1)))?;
        taus.push(pair);
    }
    TranspositionTuple::new(d, taus).map_err(|e| Error::InvalidInput(e.to_string()))
}

/// Glues `d` blue and `d` white `n`-gons according to the tuple. Side `j` of
/// every polygon joins label `j` to label `j+1`; side `j` of blue sheet `i`
/// is glued to white sheet `β_j(i)` where `β_j = τ_1 ∘ … ∘ τ_j`, so the arc
/// between labels `n` and `1` carries the identity pairing.
pub fn graph_from_monodromy(t: &TranspositionTuple) -> Result<(ColoredMap, EnrichedMap, Labeling)> {
    t.validate()?;
    let d = t.d;
    let n = 2 * d - 2;
    // b(i, j) = i*n + j leaves label j along blue sheet i; w(k, j) = (d+k)*n + j
    // leaves label j+1 along white sheet k
    let b = |i: usize, j: usize| i * n + j;
    let w = |k: usize, j: usize| (d + k) * n + j;
    let total = 2 * d * n;
    let mut alpha = vec![0; total];
    let mut beta = perm::identity(d);
    for j in 0..n {
        let (x, y) = t.taus[j];
        beta = perm::compose(&beta, &perm::transposition(d, x, y));
        for i in 0..d {
            alpha[b(i, j)] = w(beta[i], j);
            alpha[w(beta[i], j)] = b(i, j);
        }
    }
    let mut phi = vec![0; total];
    for i in 0..d {
        for j in 0..n {
            phi[b(i, j)] = b(i, (j + 1) % n);
            phi[w(i, j)] = w(i, (j + n - 1) % n);
        }
    }
    // phi = sigma⁻¹ ∘ alpha, so sigma = alpha ∘ phi⁻¹
    let phi_inv = crate::map::inverse(&phi);
    let sigma: Vec<Dart> = (0..total).map(|x| alpha[phi_inv[x]]).collect();
    let full = CombinatorialMap::new(sigma, alpha)?;
    let blue_flags: Vec<bool> = (0..full.face_count())
        .map(|f| full.faces()[f][0] < d * n)
        .collect();
    let enriched = ColoredMap::from_flags(full, blue_flags)?;
    let m = enriched.map();
    let mut labels = vec![0; m.vertex_count()];
    for x in 0..total {
        let j = x % n;
        labels[m.origin(x)] = if x < d * n { j } else { (j + 1) % n };
    }
    let (gamma, new_index) = m.suppress_degree_two()?;
    let mut old_of = vec![0; gamma.dart_count()];
    for (old, new) in new_index.iter().enumerate() {
        if let Some(new) = new {
            old_of[*new] = old;
        }
    }
    let base_flags: Vec<bool> = (0..gamma.face_count())
        .map(|f| enriched.is_blue(m.face(old_of[gamma.faces()[f][0]])))
        .collect();
    let base = ColoredMap::from_flags(gamma.clone(), base_flags)?;
    let base_vertex = (0..gamma.vertex_count())
        .map(|v| m.origin(old_of[gamma.vertices()[v][0]]))
        .collect();
    let base_face = (0..gamma.face_count())
        .map(|f| m.face(old_of[gamma.faces()[f][0]]))
        .collect();
    let mut matching = Matching::empty(&base);
    for e in gamma.edges() {
        let mut x = m.alpha(old_of[e]);
        let mut count = 0;
        while m.degree(m.origin(x)) == 2 {
            count += 1;
            x = m.alpha(m.sigma(x));
        }
        matching.counts[e] = count;
    }
    let em = EnrichedMap {
        base: base.clone(),
        enriched,
        matching,
        base_vertex,
        base_face,
    };
    Ok((base, em, Labeling { n, labels }))
}

/// Dual of the base map: blue and white vertices for the faces, one face per
/// critical point labeled by its critical label. Blue vertices are numbered
/// `1..=d` by sheet.
pub fn dual_bipartite(em: &EnrichedMap, lab: &Labeling) -> Result<FaceLabeledGraph> {
    if lab.labels.len() != em.enriched.map().vertex_count() || !lab.has_distinct_critical_labels(em) {
        return Err(Error::NotRealized);
    }
    let g = em.base.map();
    let dual = g.dual();
    let blue: Vec<bool> = (0..g.face_count()).map(|f| em.base.is_blue(f)).collect();
    let enriched_blue = em.enriched.blue_faces();
    let blue_labels = (0..g.face_count())
        .map(|f| {
            enriched_blue
                .iter()
                .position(|&x| x == em.base_face[f])
                .map(|i| i + 1)
        })
        .collect();
    let face_labels = (0..dual.face_count())
        .map(|f| lab.labels[em.base_vertex[g.target(dual.faces()[f][0])]] + 1)
        .collect();
    Ok(FaceLabeledGraph {
        map: dual,
        blue,
        blue_labels,
        face_labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::check_balance_flow;
    use crate::colored::checkerboard;
    use crate::generate;

    #[test]
    fn quadratic_realization() {
        let (cm, _) = checkerboard(&generate::quadratic()).unwrap();
        let (em, lab) = realize_generic(&cm).unwrap();
        assert_eq!(em.matching.total(), 0);
        let mut crit = lab.critical_labels(&em);
        crit.sort();
        assert_eq!(crit, vec![0, 1]);
        let t = monodromy(&em, &lab).unwrap();
        assert_eq!(t.taus, vec![(0, 1), (0, 1)]);
    }

    #[test]
    fn quadratic_from_tuple() {
        let t = TranspositionTuple::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let (cm, em, lab) = graph_from_monodromy(&t).unwrap();
        assert_eq!(cm.map().canonical_code(), generate::quadratic().canonical_code());
        assert_eq!(monodromy(&em, &lab).unwrap(), t);
    }

    #[test]
    fn octahedron_enrichment_and_labels() {
        let (cm, _) = checkerboard(&generate::octahedron()).unwrap();
        let m = check_balance_flow(&cm).unwrap().matching.unwrap();
        let em = enrich(&cm, &m).unwrap();
        assert_eq!(em.enriched.map().vertex_count(), 18);
        assert!(em.enriched.map().faces().iter().all(|f| f.len() == 6));
        let lab = integrate_labels(&em, 0, 0).unwrap();
        let shifted = integrate_labels(&em, 0, 2).unwrap();
        assert_eq!(shifted, lab.shifted(2));
        // each label occurs d-1 times once critical labels are distinct
        let (em, lab) = realize_generic(&cm).unwrap();
        assert_eq!(em.enriched.map().vertex_count(), 18);
        for l in 0..6 {
            assert_eq!(lab.labels.iter().filter(|&&x| x == l).count(), 3);
        }
    }

    #[test]
    fn octahedron_realizes() {
        let (cm, _) = checkerboard(&generate::octahedron()).unwrap();
        let (em, lab) = realize_generic(&cm).unwrap();
        let t = monodromy(&em, &lab).unwrap();
        assert_eq!(t.d, 4);
        let (back, em2, lab2) = graph_from_monodromy(&t).unwrap();
        assert_eq!(back.canonical_code(), cm.canonical_code());
        assert!(monodromy(&em2, &lab2).unwrap().is_conjugate_to(&t));
        let g = dual_bipartite(&em, &lab).unwrap();
        assert_eq!(g.map.face_count(), 6);
        assert_eq!(g.blue.iter().filter(|&&b| b).count(), 4);
        let mut labels = g.face_labels.clone();
        labels.sort();
        assert_eq!(labels, (1..=6).collect::<Vec<_>>());
    }

    #[test]
    fn bad_tuples_rejected() {
        assert!(matches!(
            TranspositionTuple::new(3, vec![(0, 1), (0, 1), (1, 2), (0, 2)]),
            Err(Error::InvalidTuple(_))
        ));
        assert!(matches!(
            TranspositionTuple::new(4, vec![(0, 1), (0, 1), (2, 3), (2, 3), (0, 1), (0, 1)]),
            Err(Error::InvalidTuple(_))
        ));
    }

    #[test]
    fn invalid_matching_rejected() {
        let (cm, _) = checkerboard(&generate::octahedron()).unwrap();
        assert!(matches!(enrich(&cm, &Matching::empty(&cm)), Err(Error::InvalidMatching(_))));
    }

    #[test]
    fn figure_eight_not_realizable() {
        let m = CombinatorialMap::from_rotation(&[vec![0, 1, 2, 3]], &[(0, 1), (2, 3)]).unwrap();
        let cm = ColoredMap::from_flags(m.clone(), crate::colored::two_color(&m).unwrap()).unwrap();
        assert!(!is_realizable(&cm));
        assert_eq!(realize_generic(&cm).unwrap_err(), Error::NotBalanced);
    }
}
