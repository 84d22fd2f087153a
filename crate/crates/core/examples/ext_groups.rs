//! Ext dimensions from minimal resolutions, with periodicity certificates.

use homlab::homtools::ext_profile;
use homlab::modrep::minimal_resolution;
use homlab::{Algebra, Module};

fn main() -> homlab::Result<()> {
    let dual = Algebra::truncated_polynomial(2, 2)?;
    let k = Module::simple(&dual, 0);
    let e = ext_profile(&k, &k, 6)?;
    println!("F_2[x]/(x^2): Ext^i(k, k) = {:?}, periodicity {:?}", e.dims, e.periodicity);
    println!("  determined for all degrees: {}, Ext^100 = {:?}", e.is_determined(), e.dim(100));

    let plane = Algebra::local_radical_square_zero(2, 2)?;
    let k = Module::simple(&plane, 0);
    let res = minimal_resolution(&k, 4);
    let ranks: Vec<usize> = res.terms().iter().map(|t| t.rank()).collect();
    println!("F_2[x,y]/(x,y)^2: ranks of the minimal resolution of k {ranks:?}");
    println!("  Ext^i(k, k) = {:?}", ext_profile(&k, &k, 3)?.dims);
    println!("  Ext^i(k, Λ) = {:?}", ext_profile(&k, &Module::regular(&plane), 3)?.dims);
    Ok(())
}
