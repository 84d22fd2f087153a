//! Sample random modules over a noncommutative algebra and test an open statement.

use homlab::conjlab::{search_counterexample, Predicate, SearchConfig};
use homlab::{Algebra, AlgebraSpec};

fn main() -> homlab::Result<()> {
    let q = Algebra::from_spec(&AlgebraSpec::quiver(2, 3, &[("a", 1, 2), ("b", 2, 3)], &["b*a"]))?;
    let cfg = SearchConfig {
        predicate: Predicate::CommGorensteinSelforth,
        seed: 42,
        instances: 128,
        max_dim: 4,
        bound: 4,
        batch: 32,
    };
    for report in search_counterexample(&q, &cfg)? {
        let r = report?;
        println!(
            "batch: {} modules, {} premises, {} candidates",
            r.modules_checked, r.premises_satisfied, r.candidates
        );
        for w in &r.witnesses {
            println!("  candidate {} (dim {}, {})", &w.content_hash[..12], w.dim, w.certification);
        }
    }
    Ok(())
}
