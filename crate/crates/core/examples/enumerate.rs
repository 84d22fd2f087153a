//! Enumerate isomorphism classes of small modules.

use homlab::modrep::{enumerate_modules, EnumerationConfig};
use homlab::Algebra;

fn main() -> homlab::Result<()> {
    let dual = Algebra::truncated_polynomial(2, 2)?;
    let cfg = EnumerationConfig { max_dim: 4, exhaustive: true, ..Default::default() };
    let r = enumerate_modules(&dual, &cfg)?;
    println!("F_2[x]/(x^2), dim ≤ 4: {} classes from {} candidate actions", r.modules.len(), r.candidates);
    for m in &r.modules {
        let x = &m.generator_actions()[0];
        println!("  dim {} rank of x {}", m.dim(), x.rank());
    }

    let plane = Algebra::local_radical_square_zero(2, 2)?;
    let r = enumerate_modules(&plane, &EnumerationConfig { max_dim: 3, ..Default::default() })?;
    println!("F_2[x,y]/(x,y)^2, dim ≤ 3: {} classes, exhaustive dims {:?}", r.modules.len(), r.exhaustive_dims);
    Ok(())
}
