use std::sync::OnceLock;

use proptest::prelude::*;

use balmaps::balance::is_balanced;
use balmaps::corpus::{build_corpus, Corpus};
use balmaps::hurwitz::enumerate_classes;
use balmaps::io::MapFile;
use balmaps::realize::{graph_from_monodromy, TranspositionTuple};
use balmaps::ColoredMap;

fn corpus() -> &'static Corpus {
    static C: OnceLock<Corpus> = OnceLock::new();
    C.get_or_init(|| build_corpus(6).unwrap())
}

fn classes() -> &'static [TranspositionTuple] {
    static T: OnceLock<Vec<TranspositionTuple>> = OnceLock::new();
    T.get_or_init(|| {
        enumerate_classes(4)
            .unwrap()
            .classes
            .into_iter()
            .map(|c| c.representative)
            .collect()
    })
}

fn relabeled(cm: &ColoredMap, perm: &[usize]) -> ColoredMap {
    let old = cm.map();
    let new = old.relabel(perm);
    let mut blue = vec![false; new.face_count()];
    for d in 0..old.dart_count() {
        blue[new.face(perm[d])] = cm.is_blue(old.face(d));
    }
    ColoredMap::from_flags(new, blue).unwrap()
}

fn map_and_perm() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..corpus().maps.len()).prop_flat_map(|i| {
        let n = corpus().maps[i].map().dart_count();
        (Just(i), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn relabeling_preserves_code_and_verdict((i, perm) in map_and_perm()) {
        let cm = &corpus().maps[i];
        let r = relabeled(cm, &perm);
        prop_assert_eq!(r.canonical_code(), cm.canonical_code());
        prop_assert_eq!(is_balanced(&r).balanced(), is_balanced(cm).balanced());
    }

    #[test]
    fn map_file_round_trip((i, perm) in map_and_perm()) {
        let r = relabeled(&corpus().maps[i], &perm);
        let text = serde_json::to_string(&MapFile::from_colored(&r)).unwrap();
        let back: MapFile = serde_json::from_str(&text).unwrap();
        let cm = back.to_colored().unwrap();
        prop_assert_eq!(cm.map().sigma_perm(), r.map().sigma_perm());
        prop_assert_eq!(cm.map().alpha_perm(), r.map().alpha_perm());
        prop_assert_eq!(cm.blue_flags(), r.blue_flags());
    }

    #[test]
    fn conjugation_preserves_class(
        i in 0..120usize,
        g in Just(vec![0usize, 1, 2, 3]).prop_shuffle(),
    ) {
        let t = &classes()[i];
        let c = t.conjugate(&g);
        prop_assert!(c.is_conjugate_to(t));
        prop_assert_eq!(c.canonical(), t.canonical());
        let (a, _, _) = graph_from_monodromy(t).unwrap();
        let (b, _, _) = graph_from_monodromy(&c).unwrap();
        prop_assert_eq!(a.canonical_code(), b.canonical_code());
    }
}
