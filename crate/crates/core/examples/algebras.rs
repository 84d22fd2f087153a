//! Build algebras from specs and print their basic structure.

use homlab::{Algebra, AlgebraSpec};

fn main() -> homlab::Result<()> {
    let specs = [
        AlgebraSpec::commutative(2, &["x"], &["x^2"]),
        AlgebraSpec::commutative(2, &["x", "y"], &["x^2", "x*y", "y^2"]),
        AlgebraSpec::quiver(3, 3, &[("a", 1, 2), ("b", 2, 3)], &["b*a"]),
        AlgebraSpec::quiver(2, 2, &[("x", 2, 2)], &["x*x"]),
    ];
    for spec in &specs {
        let a = Algebra::from_spec(spec)?;
        println!("{}", a.description());
        println!(
            "  dim {}  simples {}  loewy length {}  local {}  commutative {}",
            a.dim(),
            a.num_simples(),
            a.loewy_length(),
            a.is_local(),
            a.is_commutative()
        );
        println!("  basis {:?}", a.labels());
        let op = a.opposite();
        println!("  opposite: {}", op.description());
    }
    Ok(())
}
