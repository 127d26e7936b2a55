//! Balance verdicts for the standard diagrams and for a pinched octahedron,
//! with the witness each failing map produces.

use balmaps::balance::{face_weights, is_balanced};
use balmaps::generate::{colored_with_blue, octahedron, pinch, quadratic, turkshead};

fn main() -> balmaps::Result<()> {
    let oct = colored_with_blue(&octahedron(), 0)?;
    let f = oct.blue_faces()[0];
    let (d1, d2) = {
        let darts = &oct.map().faces()[f];
        (darts[0], darts[darts.len() / 2])
    };
    let maps = [
        ("quadratic", colored_with_blue(&quadratic(), 0)?),
        ("octahedron", oct.clone()),
        ("turkshead(3)", colored_with_blue(&turkshead(3)?, 0)?),
        ("turkshead(4)", colored_with_blue(&turkshead(4)?, 0)?),
        ("pinched octahedron", pinch(&oct, f, d1, d2)?),
    ];
    for (name, cm) in &maps {
        let r = is_balanced(cm);
        println!(
            "{name:20} V={:2} blue={} white={} weights={:?}",
            cm.map().vertex_count(),
            cm.blue_count(),
            cm.white_count(),
            face_weights(cm)
        );
        println!("{:20} balanced={} witness={:?}", "", r.balanced(), r.witness);
    }
    Ok(())
}
