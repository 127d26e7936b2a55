//! Murasugi sum of the octahedron and the quadratic diagram, its
//! decomposition, and the hyperbolic turksheads.

use balmaps::decompose::{decompose_full, murasugi_sum, split_four_cut, Rectangle};
use balmaps::generate::{colored_with_blue, octahedron, quadratic, turkshead};
use balmaps::ColoredMap;

fn rectangle(cm: &ColoredMap, blue: bool) -> Rectangle {
    let m = cm.map();
    let face = (0..m.face_count()).find(|&f| cm.is_blue(f) == blue).expect("both colors occur");
    let darts = &m.faces()[face];
    Rectangle { face, darts: [darts[0], darts[1]] }
}

fn main() -> balmaps::Result<()> {
    let a = colored_with_blue(&octahedron(), 0)?;
    let b = colored_with_blue(&quadratic(), 0)?;
    let (sum, curve) = murasugi_sum(&a, &rectangle(&a, true), &b, &rectangle(&b, false))?;
    println!("sum has {} vertices, gluing curve crosses darts {:?}", sum.map().vertex_count(), curve.darts);
    let (l, r) = split_four_cut(&sum, &curve)?;
    println!(
        "split gives back the summands: {} {}",
        l.canonical_code() == a.canonical_code(),
        r.canonical_code() == b.canonical_code()
    );
    let tree = decompose_full(&sum)?;
    for (piece, kind) in tree.leaves() {
        println!("leaf {kind:?} with {} vertices", piece.map().vertex_count());
    }
    for n in 3..=5 {
        let t = colored_with_blue(&turkshead(n)?, 0)?;
        let leaves = decompose_full(&t)?.leaves().len();
        println!("turkshead({n}): {leaves} leaf");
    }
    Ok(())
}
