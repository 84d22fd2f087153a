//! Tensor products over the algebra and the natural map X ⊗ N → Hom(X*, N).

use homlab::homtools::{d_dual, ext_profile, tensor_over_algebra, transpose, zeta_map};
use homlab::{Algebra, AlgebraSpec, Module};

fn main() -> homlab::Result<()> {
    let q = Algebra::from_spec(&AlgebraSpec::quiver(2, 2, &[("a", 1, 2)], &[]))?;
    let mods = [Module::simple(&q, 0), Module::simple(&q, 1), Module::projective(&q, 0)];
    for m in &mods {
        // X = D M is a right module.
        let x = d_dual(m);
        for n in &mods {
            let t = tensor_over_algebra(&x, n)?;
            let z = zeta_map(&x, n)?;
            let trx = transpose(&x)?.module.rebind(&q)?;
            let e = ext_profile(&trx, n, 2)?;
            println!(
                "dim X⊗N = {}, Hom(X*, N) = {}, ker ζ = {} (Ext¹ = {}), coker ζ = {} (Ext² = {})",
                t.dim, z.hom_dim, z.kernel_dim, e.dims[1], z.cokernel_dim, e.dims[2]
            );
        }
    }
    Ok(())
}
