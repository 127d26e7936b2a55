//! Deciding balance: Jordan faces, global balance and local balance.
//!
//! Local balance is decided with a flow network on the faces. Source arcs
//! carry the weight `n - corners(F)` of every blue face, sink arcs the weight
//! of every white face, and blue→white arcs join faces sharing an edge. The
//! map is locally balanced iff the flow saturates the source. The exhaustive
//! blue-left cycle scan is kept as an independent oracle.

use std::collections::BTreeMap;

use crate::colored::ColoredMap;
use crate::cycles::{directed_cycles, left_faces};
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::map::Dart;

/// Default vertex cap for the exponential cycle oracle.
pub const CURVE_VERTEX_CAP: usize = 12;

/// Why a map is not balanced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A face whose boundary visits some vertex twice.
    NonJordanFace { face: usize },
    /// Face counts differ from `V/2 + 1` (or V is odd).
    GlobalCounts { blue: usize, white: usize },
    /// A face with more corners than there are vertices.
    NegativeWeight { face: usize },
    /// A blue-left simple cycle with at most as many blue as white faces on
    /// its left.
    Curve { darts: Vec<Dart>, blue: usize, white: usize },
    /// The flow falls short of the total blue weight. `blue_faces` is the
    /// source side of a minimum cut restricted to blue faces.
    FlowDeficit { value: i64, capacity: i64, blue_faces: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub jordan_ok: bool,
    pub global_ok: bool,
    pub local_ok: bool,
    pub witness: Option<Witness>,
}

impl BalanceReport {
    pub fn balanced(&self) -> bool {
        self.jordan_ok && self.global_ok && self.local_ok
    }
}

/// Number of 2-valent vertices to insert on each edge, indexed by the edge's
/// representative dart (entries for non-representative darts are zero).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    pub counts: Vec<usize>,
}

impl Matching {
    pub fn empty(cm: &ColoredMap) -> Self {
        Matching {
            counts: vec![0; cm.map().dart_count()],
        }
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Checks `corners(F) + Σ counts = n` on every face.
    pub fn validate(&self, cm: &ColoredMap) -> Result<()> {
        let m = cm.map();
        if self.counts.len() != m.dart_count() {
            return Err(Error::InvalidMatching("wrong length".into()));
        }
        for d in 0..m.dart_count() {
            if self.counts[d] != 0 && m.edge_rep(d) != d {
                return Err(Error::InvalidMatching(format!(
                    "count stored on non-representative dart {d}"
                )));
            }
        }
        let n = m.vertex_count();
        for (f, darts) in m.faces().iter().enumerate() {
            let total: usize = darts.len()
                + darts
                    .iter()
                    .map(|&d| self.counts[m.edge_rep(d)])
                    .sum::<usize>();
            if total != n {
                return Err(Error::InvalidMatching(format!(
                    "face {f} would carry {total} vertices instead of {n}"
                )));
            }
        }
        Ok(())
    }
}

/// `n - corners(F)` for every face, with `n` the number of vertices.
pub fn face_weights(cm: &ColoredMap) -> Vec<i64> {
    let n = cm.map().vertex_count() as i64;
    cm.map()
        .faces()
        .iter()
        .map(|f| n - f.len() as i64)
        .collect()
}

/// First face whose boundary walk visits a vertex twice, if any.
pub fn check_jordan(cm: &ColoredMap) -> (bool, Option<usize>) {
    let m = cm.map();
    for (f, darts) in m.faces().iter().enumerate() {
        let mut seen = vec![false; m.vertex_count()];
        for &d in darts {
            let v = m.origin(d);
            if seen[v] {
                return (false, Some(f));
            }
            seen[v] = true;
        }
    }
    (true, None)
}

/// `#blue = #white = V/2 + 1`.
pub fn check_global(cm: &ColoredMap) -> bool {
    let v = cm.map().vertex_count();
    v.is_multiple_of(2) && cm.blue_count() == v / 2 + 1 && cm.white_count() == v / 2 + 1
}

/// A blue-left simple cycle and the face counts on its left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    pub darts: Vec<Dart>,
    pub blue_inside: usize,
    pub white_inside: usize,
}

/// Every vertex-simple directed cycle along the blue-left edge directions,
/// with the numbers of blue and white faces on its left.
pub fn enumerate_blue_left_curves(cm: &ColoredMap, vertex_cap: usize) -> Result<Vec<Curve>> {
    let m = cm.map();
    if m.vertex_count() > vertex_cap {
        return Err(Error::TooLarge(m.vertex_count(), vertex_cap));
    }
    let cycles = directed_cycles(m, |d| cm.is_forward(d), usize::MAX);
    Ok(cycles
        .into_iter()
        .map(|darts| {
            let left = left_faces(m, &darts);
            let blue_inside = (0..left.len()).filter(|&f| left[f] && cm.is_blue(f)).count();
            let white_inside = (0..left.len()).filter(|&f| left[f] && !cm.is_blue(f)).count();
            Curve {
                darts,
                blue_inside,
                white_inside,
            }
        })
        .collect())
}

/// Local balance by the cycle oracle: the first curve with `B <= W`, if any.
pub fn local_violation_by_curves(cm: &ColoredMap, vertex_cap: usize) -> Result<Option<Curve>> {
    Ok(enumerate_blue_left_curves(cm, vertex_cap)?
        .into_iter()
        .find(|c| c.blue_inside <= c.white_inside))
}

/// Result of the flow test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowOutcome {
    pub value: i64,
    pub capacity: i64,
    pub matching: Option<Matching>,
    pub witness: Option<Witness>,
}

/// Flow formulation of local balance. Requires Jordan faces and global
/// balance.
pub fn check_balance_flow(cm: &ColoredMap) -> Result<FlowOutcome> {
    if !check_jordan(cm).0 {
        return Err(Error::PreconditionFailed("faces are not Jordan domains".into()));
    }
    if !check_global(cm) {
        return Err(Error::PreconditionFailed("map is not globally balanced".into()));
    }
    let m = cm.map();
    let weights = face_weights(cm);
    if let Some(f) = (0..weights.len()).find(|&f| weights[f] < 0) {
        return Ok(FlowOutcome {
            value: 0,
            capacity: weights.iter().zip(cm.blue_flags()).filter(|(_, &b)| b).map(|(w, _)| *w).sum(),
            matching: None,
            witness: Some(Witness::NegativeWeight { face: f }),
        });
    }
    let faces = m.face_count();
    let source = faces;
    let sink = faces + 1;
    let capacity: i64 = (0..faces).filter(|&f| cm.is_blue(f)).map(|f| weights[f]).sum();
    let mut net = FlowNetwork::new(faces + 2);
    for f in 0..faces {
        if cm.is_blue(f) {
            net.add_arc(source, f, weights[f]);
        }
    }
    // blue face -> white face, shared edges in ascending representative order
    let mut shared: BTreeMap<(usize, usize), Vec<Dart>> = BTreeMap::new();
    for e in cm.directed_edges() {
        let (b, w) = (m.face(e), m.right_face(e));
        shared.entry((b, w)).or_default().push(m.edge_rep(e));
    }
    for list in shared.values_mut() {
        list.sort_unstable();
    }
    let pair_arcs: Vec<((usize, usize), usize)> = shared
        .keys()
        .map(|&(b, w)| ((b, w), net.add_arc(b, w, capacity)))
        .collect();
    for f in 0..faces {
        if !cm.is_blue(f) {
            net.add_arc(f, sink, weights[f]);
        }
    }
    let value = net.max_flow(source, sink);
    if value < capacity {
        let side = net.residual_reachable(source);
        let blue_faces = (0..faces).filter(|&f| cm.is_blue(f) && side[f]).collect();
        return Ok(FlowOutcome {
            value,
            capacity,
            matching: None,
            witness: Some(Witness::FlowDeficit {
                value,
                capacity,
                blue_faces,
            }),
        });
    }
    let mut matching = Matching::empty(cm);
    for (pair, arc) in pair_arcs {
        let amount = net.flow_on(arc);
        if amount > 0 {
            let first = shared[&pair][0];
            matching.counts[first] += amount as usize;
        }
    }
    matching.validate(cm)?;
    Ok(FlowOutcome {
        value,
        capacity,
        matching: Some(matching),
        witness: None,
    })
}

/// All three conditions; local balance decided by flow.
pub fn is_balanced(cm: &ColoredMap) -> BalanceReport {
    let (jordan_ok, bad_face) = check_jordan(cm);
    if !jordan_ok {
        return BalanceReport {
            jordan_ok,
            global_ok: check_global(cm),
            local_ok: false,
            witness: bad_face.map(|face| Witness::NonJordanFace { face }),
        };
    }
    if !check_global(cm) {
        return BalanceReport {
            jordan_ok,
            global_ok: false,
            local_ok: false,
            witness: Some(Witness::GlobalCounts {
                blue: cm.blue_count(),
                white: cm.white_count(),
            }),
        };
    }
    let outcome = check_balance_flow(cm).expect("preconditions checked");
    BalanceReport {
        jordan_ok,
        global_ok: true,
        local_ok: outcome.witness.is_none(),
        witness: outcome.witness,
    }
}

/// Same as [`is_balanced`] but with local balance decided by the cycle oracle.
pub fn is_balanced_by_curves(cm: &ColoredMap, vertex_cap: usize) -> Result<BalanceReport> {
    let (jordan_ok, bad_face) = check_jordan(cm);
    if !jordan_ok {
        return Ok(BalanceReport {
            jordan_ok,
            global_ok: check_global(cm),
            local_ok: false,
            witness: bad_face.map(|face| Witness::NonJordanFace { face }),
        });
    }
    let global_ok = check_global(cm);
    let violation = local_violation_by_curves(cm, vertex_cap)?;
    Ok(BalanceReport {
        jordan_ok,
        global_ok,
        local_ok: violation.is_none(),
        witness: violation.map(|c| Witness::Curve {
            darts: c.darts,
            blue: c.blue_inside,
            white: c.white_inside,
        }),
    })
}
