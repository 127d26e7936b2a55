//! Classifies the degree-4 generic covers by their underlying 4-valent graph
//! and by their diagram (the graph with its 2-valent points), recounting
//! every entry independently of the tuple enumeration.

use std::collections::BTreeMap;

use balmaps::generate;
use balmaps::hurwitz::{census_by, verify_labelings_per_graph, CensusKey};

fn main() -> balmaps::Result<()> {
    let d = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let octahedron = generate::octahedron().canonical_code();
    for key in [CensusKey::Graph, CensusKey::Diagram] {
        let entries = census_by(d, key)?;
        let total: usize = entries.iter().map(|e| e.class_count).sum();
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for e in &entries {
            *hist.entry(e.class_count).or_default() += 1;
        }
        println!("{key:?}: {} entries, {total} classes, entries per class count {hist:?}", entries.len());
        for (i, e) in entries.iter().enumerate() {
            let recount = verify_labelings_per_graph(e)?;
            let mut corners: Vec<usize> = e
                .map
                .faces()
                .iter()
                .map(|f| f.iter().filter(|&&x| e.map.degree(e.map.origin(x)) == 4).count())
                .collect();
            corners.sort();
            let base = match key {
                CensusKey::Graph => e.map.clone(),
                CensusKey::Diagram => e.map.suppress_degree_two()?.0,
            };
            let tag = if base.canonical_code() == octahedron { "  octahedron" } else { "" };
            println!("  {:2}: classes {:2} (recount {recount:2}) face corners {corners:?}{tag}", i + 1, e.class_count);
        }
    }
    Ok(())
}
