//! Universal extensions by a fixed module, and right approximations.

use homlab::conjlab::{check_right_approximation, right_minimal_reduction, universal_extension};
use homlab::homtools::ext_profile;
use homlab::{Algebra, Module};

fn main() -> homlab::Result<()> {
    let dual = Algebra::truncated_polynomial(2, 2)?;
    let k = Module::simple(&dual, 0);
    let r = universal_extension(&k, &k)?;
    println!(
        "0 → k^{} → E → k → 0 over F_2[x]/(x^2): dim E = {}, Ext¹(E, k) = {}",
        r.n,
        r.extension.dim(),
        r.ext1_e_m_dim
    );

    let plane = Algebra::local_radical_square_zero(2, 2)?;
    let k = Module::simple(&plane, 0);
    let n = k.power(2);
    let r = universal_extension(&n, &k)?;
    println!("over the plane: N = k², n = {}, dim E = {}, exact {}", r.n, r.extension.dim(), r.is_exact());
    let tests = [Module::regular(&plane), r.extension.clone()];
    for (t, ok) in tests.iter().zip(check_right_approximation(&r.projection, &tests)?) {
        let e = ext_profile(t, &k, 1)?.dims[1];
        println!("  test module of dim {} with Ext¹(T, k) = {e}: every map factors {ok}", t.dim());
    }
    let min = right_minimal_reduction(&r.projection)?;
    println!("  right minimal version removes a summand of dimension {}", min.removed_dim);
    Ok(())
}
