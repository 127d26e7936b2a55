//! Checks the balance theorem on the exhaustive corpus: the flow decider,
//! the curve oracle and the realization search must agree on every colored
//! 4-valent map with at most 6 vertices.

use balmaps::balance::{is_balanced, is_balanced_by_curves, CURVE_VERTEX_CAP};
use balmaps::corpus::build_corpus;
use balmaps::realize::is_realizable;

fn main() -> balmaps::Result<()> {
    let max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let corpus = build_corpus(max)?;
    println!("{} uncolored maps, {} colored maps", corpus.uncolored.len(), corpus.maps.len());
    let (mut balanced, mut exceptions, mut disagreements) = (0, 0, 0);
    for cm in &corpus.maps {
        let flow = is_balanced(cm);
        let curves = is_balanced_by_curves(cm, CURVE_VERTEX_CAP)?;
        let real = is_realizable(cm);
        balanced += usize::from(flow.balanced());
        if flow.balanced() != real {
            exceptions += 1;
            println!("theorem exception: balanced={} realizable={real} {:?}", flow.balanced(), cm);
        }
        if flow.jordan_ok && flow.global_ok && flow.local_ok != curves.local_ok {
            disagreements += 1;
            println!("decider disagreement: flow={} curves={} {:?}", flow.local_ok, curves.local_ok, cm);
        }
    }
    println!("balanced {balanced}, theorem exceptions {exceptions}, decider disagreements {disagreements}");
    Ok(())
}
