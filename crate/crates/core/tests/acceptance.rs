//! Acceptance criteria. Each test prints one `criterion N: PASS|FAIL` line
//! before asserting.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use balmaps::balance::{check_global, is_balanced, is_balanced_by_curves, CURVE_VERTEX_CAP};
use balmaps::corpus::build_corpus;
use balmaps::decompose::{decompose_full, murasugi_sum, split_four_cut, PieceKind, Rectangle};
use balmaps::dps::verify_chain;
use balmaps::generate::{colored_with_blue, octahedron, pinch, quadratic, turkshead};
use balmaps::hurwitz::{census_by, enumerate_classes, enumerate_classes_with_limit, hurwitz_count, CensusKey};
use balmaps::realize::{graph_from_monodromy, is_realizable, monodromy};
use balmaps::ColoredMap;

fn report(n: usize, pass: bool, detail: &str) {
    println!("criterion {n}: {} ({detail})", if pass { "PASS" } else { "FAIL" });
}

#[test]
fn criterion_1_hurwitz_counts() {
    let mut pass = true;
    let mut details = Vec::new();
    for (d, expected, limit) in [
        (3usize, 4usize, Duration::from_secs(10)),
        (4, 120, Duration::from_secs(10)),
        (5, 8400, Duration::from_secs(600)),
    ] {
        let start = Instant::now();
        let e = enumerate_classes_with_limit(d, 5).unwrap();
        let took = start.elapsed();
        let formula = hurwitz_count(d).unwrap().to_string();
        let ok = e.classes.len() == expected && formula == expected.to_string() && took < limit;
        pass &= ok;
        details.push(format!("d={d}: {} classes, formula {formula}, {took:.2?}", e.classes.len()));
    }
    report(1, pass, &details.join("; "));
    assert!(pass);
}

#[test]
fn criterion_2_census() {
    let graphs = census_by(4, CensusKey::Graph).unwrap();
    let diagrams = census_by(4, CensusKey::Diagram).unwrap();
    let hist = |entries: &[balmaps::hurwitz::CensusEntry]| {
        let mut h: BTreeMap<usize, usize> = BTreeMap::new();
        for e in entries {
            *h.entry(e.class_count).or_insert(0) += 1;
        }
        h
    };
    let total: usize = graphs.iter().map(|e| e.class_count).sum();
    // 6 graphs × 6, 5 × 12, 3 × 2, 1 × 6, 2 × 6
    let expected: BTreeMap<usize, usize> = [(2, 3), (6, 9), (12, 5)].into_iter().collect();
    let pass = graphs.len() == 17 && hist(&graphs) == expected;
    report(
        2,
        pass,
        &format!(
            "expected 17 graphs {expected:?}; underlying graphs: {} {:?}; diagrams with 2-valent vertices: {} {:?}; total {total}",
            graphs.len(),
            hist(&graphs),
            diagrams.len(),
            hist(&diagrams)
        ),
    );
    assert_eq!(total, 120);
    assert!(pass, "census grouping does not reproduce 17 graphs");
}

#[test]
fn criteria_3_4_theorem_and_deciders() {
    let start = Instant::now();
    let corpus = build_corpus(6).unwrap();
    let (mut exceptions, mut disagreements, mut compared, mut balanced) = (Vec::new(), 0, 0, 0);
    for cm in &corpus.maps {
        let flow = is_balanced(cm);
        balanced += usize::from(flow.balanced());
        if flow.balanced() != is_realizable(cm) {
            exceptions.push(format!("{cm:?}"));
        }
        if flow.jordan_ok && flow.global_ok {
            compared += 1;
            let curves = is_balanced_by_curves(cm, CURVE_VERTEX_CAP).unwrap();
            if curves.local_ok != flow.local_ok {
                disagreements += 1;
            }
        }
    }
    let took = start.elapsed();
    for e in &exceptions {
        println!("exception: {e}");
    }
    let pass3 = exceptions.is_empty() && took < Duration::from_secs(300);
    report(
        3,
        pass3,
        &format!(
            "{} colored maps, {balanced} balanced, {} exceptions, {took:.2?}",
            corpus.maps.len(),
            exceptions.len()
        ),
    );
    let pass4 = disagreements == 0;
    report(4, pass4, &format!("{compared} maps compared, {disagreements} disagreements"));
    assert!(pass3 && pass4);
}

#[test]
fn criterion_5_monodromy_round_trip() {
    let classes = enumerate_classes(4).unwrap().classes;
    let mut ok = 0;
    for c in &classes {
        let t = &c.representative;
        let (g, em, lab) = graph_from_monodromy(t).unwrap();
        let back = monodromy(&em, &lab).unwrap();
        let (g2, _, _) = graph_from_monodromy(&back).unwrap();
        if back.is_conjugate_to(t) && g2.canonical_code() == g.canonical_code() {
            ok += 1;
        }
    }
    let pass = ok == 120 && classes.len() == 120;
    report(5, pass, &format!("{ok}/{} classes", classes.len()));
    assert!(pass);
}

#[test]
fn criterion_6_dps_bijection() {
    let mut pass = true;
    let mut details = Vec::new();
    for d in [3, 4] {
        let r = verify_chain(d, 0, 0).unwrap();
        pass &= r.ok();
        details.push(format!(
            "d={d}: {} classes, {} duals, {} trees of {} expected, {} round trips",
            r.classes, r.duals, r.trees, r.expected_trees, r.round_trips
        ));
    }
    report(6, pass, &details.join("; "));
    assert!(pass);
}

#[test]
fn criterion_7_felsner_uniqueness() {
    let r = verify_chain(4, 100, 0x5eed).unwrap();
    let pass = r.schedule_mismatches == 0 && r.schedules_per_dual >= 100 && r.duals == 2880;
    report(
        7,
        pass,
        &format!(
            "{} duals × {} schedules, {} mismatches",
            r.duals, r.schedules_per_dual, r.schedule_mismatches
        ),
    );
    assert!(pass);
}

fn rectangles(cm: &ColoredMap, blue: bool) -> Vec<Rectangle> {
    let m = cm.map();
    let mut out = Vec::new();
    for face in (0..m.face_count()).filter(|&f| cm.is_blue(f) == blue) {
        let darts = &m.faces()[face];
        for &x in darts {
            for &y in darts {
                if x != y && m.edge_rep(x) != m.edge_rep(y) {
                    out.push(Rectangle { face, darts: [x, y] });
                }
            }
        }
    }
    out
}

#[test]
fn criterion_8_decomposition() {
    let q = colored_with_blue(&quadratic(), 0).unwrap();
    let single = |cm: &ColoredMap, kind: PieceKind| {
        let leaves = decompose_full(cm).unwrap().leaves().into_iter().map(|(_, k)| k).collect::<Vec<_>>();
        leaves == vec![kind]
    };
    let mut pass = single(&q, PieceKind::Quadratic);
    let mut hyperbolic = vec![("octahedron", colored_with_blue(&octahedron(), 0).unwrap())];
    for n in 3..=5 {
        hyperbolic.push(("turkshead", colored_with_blue(&turkshead(n).unwrap(), 0).unwrap()));
    }
    for (_, cm) in &hyperbolic {
        pass &= single(cm, PieceKind::Hyperbolic) && single(&cm.swapped(), PieceKind::Hyperbolic);
    }
    let summands: Vec<ColoredMap> = vec![
        q.clone(),
        q.swapped(),
        hyperbolic[0].1.clone(),
        hyperbolic[1].1.clone(),
    ];
    let (mut instances, mut recovered) = (0, 0);
    for a in &summands {
        for b in &summands {
            for ra in rectangles(a, true).iter().step_by(5) {
                for rb in rectangles(b, false).iter().step_by(7) {
                    instances += 1;
                    let (s, curve) = murasugi_sum(a, ra, b, rb).unwrap();
                    let (l, r) = split_four_cut(&s, &curve).unwrap();
                    if l.canonical_code() == a.canonical_code() && r.canonical_code() == b.canonical_code() {
                        recovered += 1;
                    }
                }
            }
        }
    }
    pass &= instances >= 50 && recovered == instances;
    report(
        8,
        pass,
        &format!("quadratic leaf, 4 hyperbolic maps in both colorings, Murasugi round trips {recovered}/{instances}"),
    );
    assert!(pass);
}

#[test]
fn criterion_9_pinch_breaks_global_balance() {
    let corpus = build_corpus(6).unwrap();
    let (mut maps, mut pinches, mut bad) = (0, 0, 0);
    for cm in corpus.maps.iter().filter(|cm| check_global(cm)) {
        let m = cm.map();
        let mut applicable = false;
        for f in cm.blue_faces() {
            let darts = &m.faces()[f];
            for (i, &x) in darts.iter().enumerate() {
                for &y in &darts[i + 1..] {
                    if m.edge_rep(x) == m.edge_rep(y) {
                        continue;
                    }
                    applicable = true;
                    pinches += 1;
                    let p = pinch(cm, f, x, y).unwrap();
                    if check_global(&p) || p.blue_count() != p.white_count() + 1 {
                        bad += 1;
                    }
                }
            }
        }
        maps += usize::from(applicable);
    }
    let pass = bad == 0 && pinches > 0;
    report(
        9,
        pass,
        &format!("{maps} globally balanced corpus maps, {pinches} pinches, {bad} without a blue surplus of exactly 1"),
    );
    assert!(pass);
}
