//! Counts generic covers by the closed formula and by enumerating
//! transposition tuples up to conjugation.

use std::time::Instant;

use balmaps::hurwitz::{enumerate_classes_with_limit, hurwitz_count};

fn main() -> balmaps::Result<()> {
    let max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for d in 2..=max {
        let start = Instant::now();
        let e = enumerate_classes_with_limit(d, max.max(5))?;
        let formula = hurwitz_count(d).map(|h| h.to_string()).unwrap_or_else(|_| "-".into());
        println!(
            "d={d} classes={} raw={} formula={formula} ({:.2?})",
            e.classes.len(),
            e.raw_tuples,
            start.elapsed()
        );
    }
    Ok(())
}
