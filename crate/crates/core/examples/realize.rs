//! Realizes the octahedron as a generic degree-4 cover, prints its
//! monodromy tuple and rebuilds the graph from the tuple.

use balmaps::generate::{colored_with_blue, octahedron};
use balmaps::realize::{graph_from_monodromy, monodromy, realize_generic};

fn main() -> balmaps::Result<()> {
    let cm = colored_with_blue(&octahedron(), 0)?;
    let (em, lab) = realize_generic(&cm)?;
    println!("degree {}, {} labels", em.degree(), em.n());
    println!("critical labels {:?}", lab.critical_labels(&em));
    let inserted: Vec<usize> = cm.map().edges().into_iter().map(|e| em.matching.counts[e]).collect();
    println!("2-valent vertices per edge {inserted:?}");
    let t = monodromy(&em, &lab)?;
    let taus: Vec<(usize, usize)> = t.taus.iter().map(|&(a, b)| (a + 1, b + 1)).collect();
    println!("tuple {taus:?}");
    let (g, _, _) = graph_from_monodromy(&t)?;
    println!("round trip isomorphic: {}", g.canonical_code() == cm.canonical_code() || g.canonical_code() == cm.swapped().canonical_code());
    Ok(())
}
