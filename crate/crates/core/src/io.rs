//! JSON file formats and DOT export.
//!
//! Darts and permutation points are 1-based in every file; face and vertex
//! indices are 0-based positions in the lists of orbits sorted by minimal
//! dart.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::balance::{BalanceReport, Witness};
use crate::colored::ColoredMap;
use crate::decompose::{CutKind, DecompositionTree, PieceKind};
use crate::dps::{EdgeLabeledTree, FaceLabeledGraph, TreeEdge};
use crate::error::{Error, Result};
use crate::generate::colored_with_blue;
use crate::hurwitz::{CensusEntry, CensusKey, Enumeration};
use crate::map::{CombinatorialMap, Dart};
use crate::realize::{EnrichedMap, Labeling, TranspositionTuple};

pub const FORMAT_VERSION: u32 = 1;

fn fmt_version() -> u32 {
    FORMAT_VERSION
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    #[serde(default = "fmt_version")]
    pub fmt: u32,
    pub darts: usize,
    pub sigma: Vec<Vec<usize>>,
    pub alpha: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blue_faces: Option<Vec<usize>>,
}

impl MapFile {
    pub fn from_map(m: &CombinatorialMap, blue_faces: Option<Vec<usize>>) -> Self {
        MapFile {
            fmt: FORMAT_VERSION,
            darts: m.dart_count(),
            sigma: m.vertices().iter().map(|c| c.iter().map(|&x| x + 1).collect()).collect(),
            alpha: m.edges().into_iter().map(|x| [x + 1, m.alpha(x) + 1]).collect(),
            blue_faces,
        }
    }

    pub fn from_colored(cm: &ColoredMap) -> Self {
        Self::from_map(cm.map(), Some(cm.blue_faces()))
    }

    pub fn to_map(&self) -> Result<CombinatorialMap> {
        let n = self.darts;
        let mut sigma = vec![usize::MAX; n];
        for cycle in &self.sigma {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x == 0 || x > n || y == 0 || y > n || sigma[x - 1] != usize::MAX {
                    return Err(Error::InvalidPermutation(n));
                }
                sigma[x - 1] = y - 1;
            }
        }
        if sigma.contains(&usize::MAX) {
            return Err(Error::InvalidPermutation(n));
        }
        let mut alpha = vec![usize::MAX; n];
        for &[a, b] in &self.alpha {
            if a == 0 || a > n || b == 0 || b > n {
                return Err(Error::InvalidPermutation(n));
            }
            if a == b {
                return Err(Error::AlphaHasFixedPoint(a));
            }
            for (x, y) in [(a, b), (b, a)] {
                if alpha[x - 1] != usize::MAX {
                    return Err(Error::AlphaNotInvolution(x));
                }
                alpha[x - 1] = y - 1;
            }
        }
        if let Some(x) = alpha.iter().position(|&a| a == usize::MAX) {
            return Err(Error::AlphaNotInvolution(x + 1));
        }
        CombinatorialMap::new(sigma, alpha)
    }

    /// The colored map; without `blue_faces`, face 0 is taken blue.
    pub fn to_colored(&self) -> Result<ColoredMap> {
        let m = self.to_map()?;
        match &self.blue_faces {
            Some(b) => {
                if b.iter().any(|&f| f >= m.face_count()) {
                    return Err(Error::BadColoring);
                }
                ColoredMap::new(m, b)
            }
            None => colored_with_blue(&m, 0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleFile {
    pub d: usize,
    pub taus: Vec<[usize; 2]>,
}

impl TupleFile {
    pub fn from_tuple(t: &TranspositionTuple) -> Self {
        TupleFile {
            d: t.d,
            taus: t.taus.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        }
    }

    pub fn to_tuple(&self) -> Result<TranspositionTuple> {
        let mut taus = Vec::with_capacity(self.taus.len());
        for &[a, b] in &self.taus {
            if a == 0 || b == 0 || a > self.d || b > self.d {
                return Err(Error::InvalidTuple(format!("point out of range 1..{}", self.d)));
            }
            taus.push((a - 1, b - 1));
        }
        TranspositionTuple::new(self.d, taus)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEdgeFile {
    pub white: [usize; 2],
    pub blue: usize,
    pub red: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeFile {
    #[serde(default = "fmt_version")]
    pub fmt: u32,
    pub d: usize,
    pub edges: Vec<TreeEdgeFile>,
    /// Blue labels clockwise around each white vertex; derived, ignored on
    /// input.
    #[serde(default)]
    pub rotation: BTreeMap<String, Vec<usize>>,
}

impl TreeFile {
    pub fn from_tree(t: &EdgeLabeledTree) -> Self {
        TreeFile {
            fmt: FORMAT_VERSION,
            d: t.d,
            edges: t
                .edges
                .iter()
                .map(|e| TreeEdgeFile {
                    white: e.white,
                    blue: e.blue,
                    red: e.red,
                })
                .collect(),
            rotation: t.rotation().into_iter().map(|(w, v)| (w.to_string(), v)).collect(),
        }
    }

    pub fn to_tree(&self) -> Result<EdgeLabeledTree> {
        let mut edges: Vec<TreeEdge> = self
            .edges
            .iter()
            .map(|e| TreeEdge {
                blue: e.blue,
                white: e.white,
                red: e.red,
            })
            .collect();
        edges.sort();
        let t = EdgeLabeledTree { d: self.d, edges };
        if t.d < 2 {
            return Err(Error::InvalidInput("degree must be at least 2".into()));
        }
        t.validate()?;
        // bring white numbering to canonical form
        EdgeLabeledTree::from_segments(t.d, &t.segments())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualFile {
    #[serde(default = "fmt_version")]
    pub fmt: u32,
    pub darts: usize,
    pub sigma: Vec<Vec<usize>>,
    pub alpha: Vec<[usize; 2]>,
    /// Per vertex: the blue label, or 0 for white vertices.
    pub blue_labels: Vec<usize>,
    /// Per face: its label.
    pub face_labels: Vec<usize>,
    /// The face treated as unbounded (derived, ignored on input).
    #[serde(default)]
    pub root_face: usize,
}

impl DualFile {
    pub fn from_graph(g: &FaceLabeledGraph) -> Self {
        let m = MapFile::from_map(&g.map, None);
        DualFile {
            fmt: FORMAT_VERSION,
            darts: m.darts,
            sigma: m.sigma,
            alpha: m.alpha,
            blue_labels: g.blue_labels.iter().map(|l| l.unwrap_or(0)).collect(),
            face_labels: g.face_labels.clone(),
            root_face: g.root_face(),
        }
    }

    pub fn to_graph(&self) -> Result<FaceLabeledGraph> {
        let map = MapFile {
            fmt: self.fmt,
            darts: self.darts,
            sigma: self.sigma.clone(),
            alpha: self.alpha.clone(),
            blue_faces: None,
        }
        .to_map()?;
        if self.blue_labels.len() != map.vertex_count() || self.face_labels.len() != map.face_count() {
            return Err(Error::InvalidInput("label lists do not match the map".into()));
        }
        Ok(FaceLabeledGraph {
            blue: self.blue_labels.iter().map(|&l| l > 0).collect(),
            blue_labels: self.blue_labels.iter().map(|&l| (l > 0).then_some(l)).collect(),
            face_labels: self.face_labels.clone(),
            map,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassFile {
    pub taus: Vec<[usize; 2]>,
    pub orbit_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassesFile {
    pub fmt: u32,
    pub d: usize,
    pub raw_tuples: u64,
    pub classes: Vec<ClassFile>,
}

impl ClassesFile {
    pub fn from_enumeration(e: &Enumeration) -> Self {
        ClassesFile {
            fmt: FORMAT_VERSION,
            d: e.d,
            raw_tuples: e.raw_tuples,
            classes: e
                .classes
                .iter()
                .map(|c| ClassFile {
                    taus: TupleFile::from_tuple(&c.representative).taus,
                    orbit_size: c.orbit_size,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusEntryFile {
    pub code: Vec<u64>,
    pub vertices: usize,
    pub class_count: usize,
    pub map: MapFile,
    /// Indices into the class list of the enumeration.
    pub classes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusFile {
    pub fmt: u32,
    pub d: usize,
    pub key: String,
    pub total_classes: usize,
    /// Class count → number of entries.
    pub histogram: BTreeMap<usize, usize>,
    pub entries: Vec<CensusEntryFile>,
}

impl CensusFile {
    pub fn from_census(d: usize, key: CensusKey, entries: &[CensusEntry]) -> Self {
        let mut histogram = BTreeMap::new();
        for e in entries {
            *histogram.entry(e.class_count).or_insert(0) += 1;
        }
        CensusFile {
            fmt: FORMAT_VERSION,
            d,
            key: match key {
                CensusKey::Graph => "graph",
                CensusKey::Diagram => "diagram",
            }
            .into(),
            total_classes: entries.iter().map(|e| e.class_count).sum(),
            histogram,
            entries: entries
                .iter()
                .map(|e| CensusEntryFile {
                    code: e.underlying.0.clone(),
                    vertices: e.map.vertex_count(),
                    class_count: e.class_count,
                    map: MapFile::from_map(&e.map, None),
                    classes: e.classes.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessFile {
    NonJordanFace { face: usize },
    GlobalCounts { blue: usize, white: usize },
    NegativeWeight { face: usize },
    Curve { darts: Vec<usize>, blue: usize, white: usize },
    FlowDeficit { value: i64, capacity: i64, blue_faces: Vec<usize> },
}

impl From<&Witness> for WitnessFile {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::NonJordanFace { face } => WitnessFile::NonJordanFace { face: *face },
            Witness::GlobalCounts { blue, white } => WitnessFile::GlobalCounts {
                blue: *blue,
                white: *white,
            },
            Witness::NegativeWeight { face } => WitnessFile::NegativeWeight { face: *face },
            Witness::Curve { darts, blue, white } => WitnessFile::Curve {
                darts: darts.iter().map(|&x| x + 1).collect(),
                blue: *blue,
                white: *white,
            },
            Witness::FlowDeficit {
                value,
                capacity,
                blue_faces,
            } => WitnessFile::FlowDeficit {
                value: *value,
                capacity: *capacity,
                blue_faces: blue_faces.clone(),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BalanceFile {
    pub balanced: bool,
    pub jordan: bool,
    pub global: bool,
    pub local: bool,
    pub oracle: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessFile>,
}

impl BalanceFile {
    pub fn from_report(r: &BalanceReport, oracle: &str, with_witness: bool) -> Self {
        BalanceFile {
            balanced: r.balanced(),
            jordan: r.jordan_ok,
            global: r.global_ok,
            local: r.local_ok,
            oracle: oracle.into(),
            witness: if with_witness { r.witness.as_ref().map(WitnessFile::from) } else { None },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InsertedFile {
    /// The base edge as its two darts.
    pub edge: [usize; 2],
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizationFile {
    pub fmt: u32,
    pub d: usize,
    /// Label of every vertex of the base map (critical labels).
    pub labels: Vec<usize>,
    /// Number of 2-valent vertices inserted on each edge.
    pub inserted: Vec<InsertedFile>,
    pub tuple: TupleFile,
    /// The diagram with its 2-valent vertices.
    pub diagram: MapFile,
}

impl RealizationFile {
    pub fn new(em: &EnrichedMap, lab: &Labeling, t: &TranspositionTuple) -> Self {
        let m = em.base.map();
        RealizationFile {
            fmt: FORMAT_VERSION,
            d: em.degree(),
            labels: lab.critical_labels(em).iter().map(|&l| l + 1).collect(),
            inserted: m
                .edges()
                .into_iter()
                .map(|e| InsertedFile {
                    edge: [e + 1, m.alpha(e) + 1],
                    count: em.matching.counts[e],
                })
                .collect(),
            tuple: TupleFile::from_tuple(t),
            diagram: MapFile::from_colored(&em.enriched),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum DecompositionFile {
    Leaf {
        kind: String,
        vertices: usize,
        code: Vec<u64>,
    },
    Cut {
        cut: String,
        darts: Vec<usize>,
        sides: [usize; 2],
        vertices: usize,
        children: Vec<DecompositionFile>,
    },
}

impl DecompositionFile {
    pub fn from_tree(t: &DecompositionTree) -> Self {
        match t {
            DecompositionTree::Leaf { map, kind } => DecompositionFile::Leaf {
                kind: match kind {
                    PieceKind::Quadratic => "quadratic",
                    PieceKind::Hyperbolic => "hyperbolic",
                }
                .into(),
                vertices: map.map().vertex_count(),
                code: map.canonical_code().0,
            },
            DecompositionTree::Cut { map, cut, children } => {
                let (l, r) = cut.side_sizes();
                DecompositionFile::Cut {
                    cut: match (cut.kind, cut.is_odd()) {
                        (CutKind::TwoPoint, _) => "two_point",
                        (CutKind::FourPoint, true) => "four_point_odd",
                        (CutKind::FourPoint, false) => "four_point_even",
                    }
                    .into(),
                    darts: cut.darts.iter().map(|&x| x + 1).collect(),
                    sides: [l, r],
                    vertices: map.map().vertex_count(),
                    children: children.iter().map(DecompositionFile::from_tree).collect(),
                }
            }
        }
    }
}

/// Graphviz rendering: 4-valent vertices as circles, others as small
/// squares, faces listed in a comment block.
pub fn to_dot(m: &CombinatorialMap, blue: Option<&[bool]>) -> String {
    let mut s = String::from("graph map {\n");
    for f in 0..m.face_count() {
        let darts: Vec<String> = m.faces()[f].iter().map(|&x| (x + 1).to_string()).collect();
        let color = match blue {
            Some(b) if b[f] => " blue",
            Some(_) => " white",
            None => "",
        };
        let _ = writeln!(s, "  // face {f}{color}: {}", darts.join(" "));
    }
    for v in 0..m.vertex_count() {
        let shape = if m.degree(v) == 4 {
            "shape=circle, width=0.3"
        } else {
            "shape=square, width=0.1"
        };
        let _ = writeln!(s, "  v{v} [label=\"{v}\", {shape}];");
    }
    for e in m.edges() {
        let _ = writeln!(s, "  v{} -- v{} [label=\"{}\"];", m.origin(e), m.target(e), e + 1);
    }
    s.push_str("}\n");
    s
}

/// Reads a JSON value from a path, `-` meaning standard input.
pub fn read_json<T: for<'de> Deserialize<'de>>(path: &str) -> Result<T> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Parse(e.to_string()))?
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

/// Darts of a face list rendered 1-based, for messages.
pub fn one_based(darts: &[Dart]) -> Vec<usize> {
    darts.iter().map(|&x| x + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{octahedron, quadratic};

    #[test]
    fn map_round_trip() {
        let cm = colored_with_blue(&octahedron(), 1).unwrap();
        let f = MapFile::from_colored(&cm);
        let text = to_json(&f);
        let back: MapFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, f);
        let cm2 = back.to_colored().unwrap();
        assert_eq!(cm2.map(), cm.map());
        assert_eq!(cm2.blue_flags(), cm.blue_flags());
    }

    #[test]
    fn malformed_maps() {
        let mut f = MapFile::from_map(&quadratic(), None);
        f.alpha[0] = [1, 1];
        assert!(matches!(f.to_map(), Err(Error::AlphaHasFixedPoint(1))));
        let mut f = MapFile::from_map(&quadratic(), None);
        f.alpha[1][0] = f.alpha[0][0];
        assert!(matches!(f.to_map(), Err(Error::AlphaNotInvolution(_))));
        let mut f = MapFile::from_map(&quadratic(), None);
        f.sigma[0][0] = 99;
        assert!(matches!(f.to_map(), Err(Error::InvalidPermutation(_))));
    }

    #[test]
    fn tuple_round_trip() {
        let t = TranspositionTuple::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let f = TupleFile::from_tuple(&t);
        assert_eq!(f.taus, vec![[1, 2], [1, 2]]);
        assert_eq!(f.to_tuple().unwrap(), t);
        let bad = TupleFile { d: 2, taus: vec![[1, 3], [1, 2]] };
        assert!(bad.to_tuple().is_err());
    }

    #[test]
    fn tree_and_dual_round_trip() {
        for g in crate::dps::labeled_duals(3).unwrap().iter().take(6) {
            let t = crate::dps::graph_to_tree(g).unwrap();
            let tf: TreeFile = serde_json::from_str(&to_json(&TreeFile::from_tree(&t))).unwrap();
            assert_eq!(tf.to_tree().unwrap(), t);
            let df: DualFile = serde_json::from_str(&to_json(&DualFile::from_graph(g))).unwrap();
            assert_eq!(df.to_graph().unwrap().code(), g.code());
        }
    }

    #[test]
    fn dot_shapes() {
        let s = to_dot(&quadratic(), None);
        assert_eq!(s.matches("shape=circle").count(), 2);
        assert!(s.contains("// face 0"));
    }
}
