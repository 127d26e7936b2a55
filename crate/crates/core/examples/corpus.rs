//! Sizes of the exhaustive corpus of 4-valent sphere maps and how many of
//! them are balanced.

use std::collections::BTreeMap;

use balmaps::balance::is_balanced;
use balmaps::corpus::build_corpus;

fn main() -> balmaps::Result<()> {
    let max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let c = build_corpus(max)?;
    let mut rows: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
    for m in &c.uncolored {
        rows.entry(m.vertex_count()).or_default().0 += 1;
    }
    for cm in &c.maps {
        let row = rows.entry(cm.map().vertex_count()).or_default();
        row.1 += 1;
        row.2 += usize::from(is_balanced(cm).balanced());
    }
    println!("V  uncolored  colored  balanced");
    for (v, (u, col, bal)) in rows {
        println!("{v}  {u:9}  {col:7}  {bal:8}");
    }
    Ok(())
}
