//! Transpose, the two dualities and the evaluation map into the double dual.

use homlab::homtools::{d_dual, dual_star, eval_sigma, strip_projectives, transpose};
use homlab::modrep::is_isomorphic;
use homlab::{Algebra, Module};

fn main() -> homlab::Result<()> {
    let plane = Algebra::local_radical_square_zero(2, 2)?;
    let k = Module::simple(&plane, 0);
    let tr = transpose(&k)?;
    println!("Tr k has dimension {} over the opposite algebra", tr.module.dim());
    println!("D k has dimension {}, k* has dimension {}", d_dual(&k).dim(), dual_star(&k)?.dim());

    let s = eval_sigma(&k)?;
    println!(
        "σ_k: k → k** has kernel {} and cokernel {}; torsionless {} reflexive {}",
        s.kernel_dim, s.cokernel_dim, s.torsionless, s.reflexive
    );

    // Tr Tr k agrees with k up to projective summands.
    let trtr = transpose(&tr.module)?.module.rebind(&plane)?;
    let a = strip_projectives(&k)?.core;
    let b = strip_projectives(&trtr)?.core;
    println!("Tr Tr k ≅ k modulo projectives: {}", is_isomorphic(&a, &b)?.decided()?);
    Ok(())
}
