//! Projectives, simples, decompositions and isomorphism tests.

use homlab::modrep::{decompose, hom_dim, is_isomorphic};
use homlab::{Algebra, AlgebraSpec, Module};

fn main() -> homlab::Result<()> {
    let q = Algebra::from_spec(&AlgebraSpec::quiver(2, 2, &[("a", 1, 2)], &[]))?;
    let p1 = Module::projective(&q, 0);
    let s1 = Module::simple(&q, 0);
    let s2 = Module::simple(&q, 1);
    println!("P1: dim {} dimension vector {:?} top {:?}", p1.dim(), p1.dimension_vector(), p1.top());
    println!("Hom(P1, S1) = {}, Hom(S2, P1) = {}", hom_dim(&p1, &s1)?, hom_dim(&s2, &p1)?);

    let m = p1.direct_sum(&s1)?.direct_sum(&s2)?;
    let d = decompose(&m)?;
    println!("P1 ⊕ S1 ⊕ S2 splits into {} summands (complete: {})", d.summands.len(), d.complete);
    for s in &d.summands {
        println!("  dim {} dimension vector {:?}", s.module.dim(), s.module.dimension_vector());
    }

    let reg = Module::regular(&q);
    let p2 = Module::projective(&q, 1);
    let verdict = is_isomorphic(&reg, &p1.direct_sum(&p2)?)?;
    println!("Λ ≅ P1 ⊕ P2: {:?}", verdict.decided()?);
    Ok(())
}
