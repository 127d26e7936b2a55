//! The tree bijection: encodes one labeled dual, decodes it back, then runs
//! the full counting chain for d = 3 and d = 4.

use balmaps::dps::{graph_to_tree, labeled_duals, tree_to_graph, verify_chain};

fn main() -> balmaps::Result<()> {
    let g = &labeled_duals(4)?[0];
    let t = graph_to_tree(g)?;
    for e in &t.edges {
        println!("blue {} joins whites {:?} with red labels {:?}", e.blue, e.white, e.red);
    }
    println!("decodes to the same dual: {}", tree_to_graph(&t)?.code() == g.code());
    for d in [3, 4] {
        let r = verify_chain(d, 20, 7)?;
        println!(
            "d={d}: classes {} duals {} trees {} (expected {}) round trips {} schedule mismatches {} ok={}",
            r.classes,
            r.duals,
            r.trees,
            r.expected_trees,
            r.round_trips,
            r.schedule_mismatches,
            r.ok()
        );
    }
    Ok(())
}
