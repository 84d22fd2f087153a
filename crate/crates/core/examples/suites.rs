//! Run every predicate over the exhaustively enumerated small modules.

use homlab::conjlab::{run_suite, Predicate, SuiteConfig};
use homlab::Algebra;

fn main() -> homlab::Result<()> {
    let plane = Algebra::local_radical_square_zero(2, 2)?;
    let cfg = SuiteConfig { max_dim: 3, exhaustive: true, bound: 3, ..Default::default() };
    for r in run_suite(&plane, &Predicate::ALL, &cfg)? {
        if !r.applicable {
            println!("{:<18} not applicable (needs {:?})", r.predicate.to_string(), r.preconditions);
            continue;
        }
        println!(
            "{:<18} checked {:>3} premises {:>3} violations {} candidates {} bounded {}",
            r.predicate.to_string(),
            r.modules_checked,
            r.premises_satisfied,
            r.violations,
            r.candidates,
            r.bounded_evaluations
        );
    }
    Ok(())
}
