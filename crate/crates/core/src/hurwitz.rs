//! Monodromy tuples of generic covers: counting, enumeration modulo
//! simultaneous conjugation, and the census by underlying 4-valent graph.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::colored::{checkerboard, two_color, ColoredMap};
use crate::error::{Error, Result};
use crate::map::{CanonicalCode, CombinatorialMap};
use crate::perm;
use crate::realize::{
    enrich, for_each_matching, graph_from_monodromy, integrate_colored, integrate_labels, TranspositionTuple,
    MATCHING_CAP,
};

/// Largest degree accepted by [`enumerate_classes`] by default.
pub const DEFAULT_MAX_DEGREE: usize = 5;

const MAX_D: usize = 8;

/// `(2d-2)! · d^(d-3) / d!`.
pub fn hurwitz_count(d: usize) -> Result<BigUint> {
    if d < 3 {
        return Err(Error::DegreeTooSmall(d));
    }
    let fact = |k: usize| (1..=k).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(i));
    let num = fact(2 * d - 2) * BigUint::from(d).pow((d - 3) as u32);
    Ok(num / fact(d))
}

/// A conjugacy class of tuples: its lexicographically least member and the
/// size of its orbit under `S_d`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TupleClass {
    pub representative: TranspositionTuple,
    pub orbit_size: usize,
}

/// Enumeration output together with the number of raw tuples seen.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub d: usize,
    pub raw_tuples: u64,
    pub classes: Vec<TupleClass>,
}

type Arr = [u8; MAX_D];

fn cycles(p: &Arr, d: usize) -> usize {
    let mut seen = [false; MAX_D];
    let mut c = 0;
    for s in 0..d {
        if !seen[s] {
            c += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x] as usize;
            }
        }
    }
    c
}

struct Search<'a> {
    d: usize,
    n: usize,
    trans: &'a [(u8, u8)],
}

impl Search<'_> {
    /// Extends `prefix` (whose product `τ_1 ∘ … ∘ τ_k` is `q`) to full tuples.
    fn extend(&self, prefix: &mut Vec<u8>, q: Arr, raw: &mut u64, found: &mut Vec<Vec<u8>>, keep: bool) {
        let k = prefix.len();
        let left = self.n - k;
        if left == 1 {
            // the last transposition is forced to equal q
            let moved: Vec<usize> = (0..self.d).filter(|&i| q[i] as usize != i).collect();
            if moved.len() != 2 {
                return;
            }
            let t = self.trans.iter().position(|&(a, b)| a as usize == moved[0] && b as usize == moved[1]);
            let t = t.expect("pair is a transposition") as u8;
            prefix.push(t);
            let pairs: Vec<(usize, usize)> = prefix.iter().map(|&i| self.pair(i)).collect();
            if perm::transitive(self.d, &pairs) {
                *raw += 1;
                if keep {
                    found.push(prefix.clone());
                }
            }
            prefix.pop();
            return;
        }
        for (i, &(a, b)) in self.trans.iter().enumerate() {
            let mut next = q;
            next.swap(a as usize, b as usize);
            let c = cycles(&next, self.d);
            if left - 1 < self.d - c {
                continue;
            }
            prefix.push(i as u8);
            self.extend(prefix, next, raw, found, keep);
            prefix.pop();
        }
    }

    fn pair(&self, i: u8) -> (usize, usize) {
        let (a, b) = self.trans[i as usize];
        (a as usize, b as usize)
    }
}

/// Lexicographically least conjugate of a tuple. Only conjugations sending
/// the first transposition to `(0 1)` can reach the minimum.
pub fn canonical_tuple(t: &TranspositionTuple) -> TranspositionTuple {
    let d = t.d;
    let (a, b) = t.taus[0];
    let mut best: Option<Vec<(usize, usize)>> = None;
    for g in perm::all_permutations(d) {
        if perm::conjugate_pair(&g, (a, b)) != (0, 1) {
            continue;
        }
        let mut cand = Vec::with_capacity(t.taus.len());
        let mut worse = false;
        let mut better = best.is_none();
        for (i, &p) in t.taus.iter().enumerate() {
            let c = perm::conjugate_pair(&g, p);
            if !better {
                let cur = best.as_ref().expect("set")[i];
                if c > cur {
                    worse = true;
                    break;
                }
                if c < cur {
                    better = true;
                }
            }
            cand.push(c);
        }
        if !worse && better {
            best = Some(cand);
        }
    }
    TranspositionTuple {
        d,
        taus: best.expect("some conjugation maps a transposition to (0 1)"),
    }
}

fn stabilizer_size(t: &TranspositionTuple) -> usize {
    perm::all_permutations(t.d)
        .iter()
        .filter(|g| t.conjugate(g) == *t)
        .count()
}

/// All tuples of `2d-2` transpositions of `0..d` with trivial product and
/// transitive action, modulo simultaneous conjugation, in ascending order.
pub fn enumerate_classes(d: usize) -> Result<Enumeration> {
    enumerate_classes_with_limit(d, DEFAULT_MAX_DEGREE)
}

pub fn enumerate_classes_with_limit(d: usize, max_degree: usize) -> Result<Enumeration> {
    if d > max_degree || d > MAX_D {
        return Err(Error::LimitExceeded(format!("degree {d} exceeds {}", max_degree.min(MAX_D))));
    }
    if d < 2 {
        return Err(Error::InvalidInput("degree must be at least 2".into()));
    }
    let n = 2 * d - 2;
    let trans: Vec<(u8, u8)> = perm::all_transpositions(d)
        .into_iter()
        .map(|(a, b)| (a as u8, b as u8))
        .collect();
    let search = Search { d, n, trans: &trans };
    let mut id: Arr = [0; MAX_D];
    for (i, x) in id.iter_mut().enumerate() {
        *x = i as u8;
    }
    // split on the first two transpositions; only tuples starting with (0 1)
    // are canonicalized, every class has members of that form
    let starts: Vec<(u8, u8)> = (0..trans.len() as u8)
        .flat_map(|i| (0..trans.len() as u8).map(move |j| (i, j)))
        .collect();
    let chunks: Vec<(u64, Vec<TranspositionTuple>)> = starts
        .par_iter()
        .map(|&(i, j)| {
            let mut q = id;
            let (a, b) = trans[i as usize];
            q.swap(a as usize, b as usize);
            let mut raw = 0;
            let mut found = Vec::new();
            let mut prefix = vec![i];
            if n == 2 {
                search.extend(&mut prefix, q, &mut raw, &mut found, i == 0);
                // avoid counting the same tuple once per second index
                if j != 0 {
                    return (0, Vec::new());
                }
            } else {
                let (c, e) = trans[j as usize];
                q.swap(c as usize, e as usize);
                if n - 2 >= d - cycles(&q, d) {
                    prefix.push(j);
                    search.extend(&mut prefix, q, &mut raw, &mut found, i == 0);
                }
            }
            let mut reps: Vec<TranspositionTuple> = found
                .into_iter()
                .map(|idx| {
                    canonical_tuple(&TranspositionTuple {
                        d,
                        taus: idx.iter().map(|&k| search.pair(k)).collect(),
                    })
                })
                .collect();
            reps.sort();
            reps.dedup();
            (raw, reps)
        })
        .collect();
    let raw_tuples: u64 = chunks.iter().map(|c| c.0).sum();
    let mut set: HashSet<TranspositionTuple> = HashSet::new();
    for (_, reps) in chunks {
        set.extend(reps);
    }
    let mut reps: Vec<TranspositionTuple> = set.into_iter().collect();
    reps.sort();
    let classes: Vec<TupleClass> = reps
        .into_par_iter()
        .map(|r| {
            let orbit_size = (1..=d).product::<usize>() / stabilizer_size(&r);
            TupleClass {
                representative: r,
                orbit_size,
            }
        })
        .collect();
    let orbit_total: u64 = classes.iter().map(|c| c.orbit_size as u64).sum();
    if orbit_total != raw_tuples {
        return Err(Error::Mismatch(format!(
            "orbits cover {orbit_total} tuples but {raw_tuples} were enumerated"
        )));
    }
    Ok(Enumeration {
        d,
        raw_tuples,
        classes,
    })
}

/// How census entries are grouped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusKey {
    /// The 4-valent graph with colors and 2-valent vertices forgotten.
    Graph,
    /// The uncolored diagram keeping the 2-valent cocritical vertices.
    Diagram,
}

/// One underlying uncolored graph (or diagram) of the census.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub key: CensusKey,
    pub underlying: CanonicalCode,
    pub class_count: usize,
    /// A representative map of the graph or diagram.
    pub map: CombinatorialMap,
    /// Indices into the class list.
    pub classes: Vec<usize>,
}

/// Classes of degree `d` grouped by the uncolored underlying graph, sorted by
/// class count and then by code.
pub fn census(d: usize) -> Result<Vec<CensusEntry>> {
    census_by(d, CensusKey::Graph)
}

pub fn census_by(d: usize, key: CensusKey) -> Result<Vec<CensusEntry>> {
    if d > 4 {
        return Err(Error::LimitExceeded(format!("census is limited to degree 4, got {d}")));
    }
    let classes = enumerate_classes(d)?.classes;
    census_of(&classes, key)
}

pub fn census_of(classes: &[TupleClass], key: CensusKey) -> Result<Vec<CensusEntry>> {
    let maps: Vec<CombinatorialMap> = classes
        .par_iter()
        .map(|c| {
            graph_from_monodromy(&c.representative).map(|(g, em, _)| match key {
                CensusKey::Graph => g.map().clone(),
                CensusKey::Diagram => em.enriched.map().clone(),
            })
        })
        .collect::<Result<_>>()?;
    let mut groups: BTreeMap<CanonicalCode, CensusEntry> = BTreeMap::new();
    for (i, m) in maps.into_iter().enumerate() {
        let code = m.canonical_code();
        groups
            .entry(code.clone())
            .or_insert_with(|| CensusEntry {
                key,
                underlying: code,
                class_count: 0,
                map: m,
                classes: Vec::new(),
            })
            .classes
            .push(i);
    }
    let mut entries: Vec<CensusEntry> = groups
        .into_values()
        .map(|mut e| {
            e.class_count = e.classes.len();
            e
        })
        .collect();
    entries.sort_by(|a, b| (a.class_count, &a.underlying).cmp(&(b.class_count, &b.underlying)));
    Ok(entries)
}

/// Adds the codes of all `n` label offsets of a labeled colored diagram.
fn insert_labeled_codes(codes: &mut HashSet<CanonicalCode>, cm: &ColoredMap, labels: &[usize], n: usize) {
    let e = cm.map();
    for shift in 0..n {
        codes.insert(e.canonical_code_by(|x| {
            let blue = u64::from(cm.is_blue(e.face(x)));
            let label = ((labels[e.origin(x)] + shift) % n) as u64;
            2 * label + blue
        }));
    }
}

fn distinct_on(labels: &[usize], vertices: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    for v in vertices {
        if std::mem::replace(&mut seen[labels[v]], true) {
            return false;
        }
    }
    true
}

/// Number of pairwise non-isomorphic labeled realizations of an uncolored
/// 4-valent map: both colorings, every matching and every label offset
/// whose critical labels are pairwise distinct, counted up to isomorphism
/// preserving colors and labels. Independent of the tuple enumeration.
pub fn count_labeled_realizations(map: &CombinatorialMap) -> Result<usize> {
    let (a, b) = checkerboard(map)?;
    let mut codes: HashSet<CanonicalCode> = HashSet::new();
    for cm in [a, b] {
        let mut failure = None;
        for_each_matching(&cm, MATCHING_CAP, |m| {
            let em = match enrich(&cm, m) {
                Ok(em) => em,
                Err(e) => {
                    failure = Some(e);
                    return true;
                }
            };
            let lab = match integrate_labels(&em, em.base_vertex[0], 0) {
                Ok(l) => l,
                Err(e) => {
                    failure = Some(e);
                    return true;
                }
            };
            if lab.has_distinct_critical_labels(&em) {
                insert_labeled_codes(&mut codes, &em.enriched, &lab.labels, lab.n);
            }
            false
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(codes.len())
}

/// Same count for a diagram whose 2-valent vertices are fixed: both
/// colorings and every label offset.
pub fn count_diagram_labelings(diagram: &CombinatorialMap) -> Result<usize> {
    let critical: Vec<usize> = (0..diagram.vertex_count())
        .filter(|&v| diagram.degree(v) == 4)
        .collect();
    let n = critical.len();
    if n == 0 {
        return Err(Error::InvalidInput("diagram has no 4-valent vertex".into()));
    }
    let flags = two_color(diagram).ok_or(Error::BadColoring)?;
    let first = ColoredMap::from_flags(diagram.clone(), flags)?;
    let mut codes: HashSet<CanonicalCode> = HashSet::new();
    for cm in [first.swapped(), first] {
        let labels = integrate_colored(&cm, n, critical[0], 0)?;
        if distinct_on(&labels, critical.iter().copied(), n) {
            insert_labeled_codes(&mut codes, &cm, &labels, n);
        }
    }
    Ok(codes.len())
}

/// Recounts one census entry independently of the tuple enumeration and
/// checks it against the class count.
pub fn verify_labelings_per_graph(entry: &CensusEntry) -> Result<usize> {
    let count = match entry.key {
        CensusKey::Graph => count_labeled_realizations(&entry.map)?,
        CensusKey::Diagram => count_diagram_labelings(&entry.map)?,
    };
    if count != entry.class_count {
        return Err(Error::Mismatch(format!(
            "{count} labeled realizations but {} tuple classes",
            entry.class_count
        )));
    }
    Ok(count)
}
