//! Structural invariants on randomly drawn modules.

mod common;

use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use homlab::algdef::Algebra;
use homlab::cli::{module_to_value, parse_module};
use homlab::exactla::Mat;
use homlab::homtools::{d_dual, dual_star, ext_profile, strip_projectives, transpose};
use homlab::modrep::{decompose, hom_dim, is_isomorphic, module_invariants, syzygy, Module};

use common::*;

fn algebra(i: usize) -> Arc<Algebra> {
    match i % 6 {
        0 => k2x(),
        1 => k3x(),
        2 => k2xy(),
        3 => k2x3(),
        4 => a2(),
        _ => product(),
    }
}

fn draw(i: usize, d: usize, seed: u64) -> Option<Module> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    homlab::modrep::sample_module(&algebra(i), d, &mut rng)
}

fn iso(a: &Module, b: &Module) -> bool {
    is_isomorphic(a, b).unwrap().decided().unwrap()
}

fn random_invertible(p: u32, n: usize, seed: u64) -> Option<Mat> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = Mat::from_vec(p, n, n, (0..n * n).map(|_| rng.gen_range(0..p)).collect());
    m.inverse().map(|_| m)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, ..ProptestConfig::default() })]

    #[test]
    fn rank_nullity(rows in 1usize..6, cols in 1usize..6, p in prop::sample::select(vec![2u32, 3, 5]), seed: u64) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = Mat::from_vec(p, rows, cols, (0..rows * cols).map(|_| rng.gen_range(0..p)).collect());
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), cols);
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
        }
        prop_assert_eq!(m.image().dim(), m.rank());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn hom_from_the_algebra_is_the_module(i in 0usize..6, d in 1usize..5, seed: u64) {
        let Some(m) = draw(i, d, seed) else { return Err(TestCaseError::reject("no module drawn")) };
        prop_assert_eq!(hom_dim(&Module::regular(m.algebra()), &m).unwrap(), m.dim());
    }

    #[test]
    fn vector_space_dual_is_involutive(i in 0usize..6, d in 1usize..5, seed: u64) {
        let Some(m) = draw(i, d, seed) else { return Err(TestCaseError::reject("no module drawn")) };
        let dd = d_dual(&d_dual(&m)).rebind(m.algebra()).unwrap();
        prop_assert!(iso(&m, &dd));
    }

    #[test]
    fn dimension_shift(i in 0usize..6, d in 1usize..4, seed: u64, other in 1usize..3) {
        let Some(m) = draw(i, d, seed) else { return Err(TestCaseError::reject("no module drawn")) };
        let Some(n) = draw(i, other, seed ^ 0x55) else { return Err(TestCaseError::reject("no module drawn")) };
        let e = ext_profile(&m, &n, 3).unwrap();
        let s = ext_profile(&syzygy(&m), &n, 2).unwrap();
        prop_assert_eq!(&e.dims[2..], &s.dims[1..]);
    }

    #[test]
    fn ext_zero_is_hom(i in 0usize..6, d in 1usize..4, seed: u64) {
        let Some(m) = draw(i, d, seed) else { return Err(TestCaseError::reject("no module drawn")) };
        let n = Module::simples(m.algebra()).remove(0);
        prop_assert_eq!(ext_profile(&m, &n, 1).unwrap().dims[0], hom_dim(&m, &n).unwrap());
    }

    #[test]
    fn krull_schmidt_doubling(i in 0usize..6, d in 1usize..4, seed: u64) {
        let Some(m) = draw(i, d, seed) else { return Err(TestCaseError::reject("no module drawn")) };
        let one = decompose(&m).unwrap();
        let two = decompose(&m.power(2)).unwrap();
        prop_assume!(one.complete && two.complete);
        prop_assert_eq!(two.summands.len(), 2 * one.summands.len());
    }

    #[test]
    fn invariants_survive_change_of_basis(i in 0usize..6, d in 1usize..5, seed: u64) {
        let Some(m) = draw(i, d, seed) else { return Err(TestCaseError::reject("no module drawn")) };
        let Some(s) = random_invertible(m.p(), m.dim(), seed ^ 0xabc) else { return Err(TestCaseError::reject("no module drawn")) };
        let c = m.conjugate(&s).unwrap();
        prop_assert_eq!(module_invariants(&m), module_invariants(&c));
        prop_assert!(iso(&m, &c));
    }

    #[test]
    fn module_files_round_trip(i in 0usize..6, d in 1usize..5, seed: u64) {
        let Some(m) = draw(i, d, seed) else { return Err(TestCaseError::reject("no module drawn")) };
        let text = module_to_value(&m).to_string();
        let back = parse_module(&text, "inline", std::path::Path::new("."), None).unwrap();
        prop_assert_eq!(back.content_hash(), m.content_hash());
    }

    #[test]
    fn transpose_kills_projectives_and_is_stable(i in 0usize..6, d in 1usize..4, seed: u64) {
        let Some(m) = draw(i, d, seed) else { return Err(TestCaseError::reject("no module drawn")) };
        let alg = m.algebra();
        let with_proj = m.direct_sum(&Module::regular(alg)).unwrap();
        let a = transpose(&m).unwrap().module;
        let b = transpose(&with_proj).unwrap().module;
        prop_assert!(iso(&strip_projectives(&a).unwrap().core, &strip_projectives(&b).unwrap().core));
        prop_assert_eq!(transpose(&Module::regular(alg)).unwrap().module.dim(), 0);
    }

    #[test]
    fn star_dual_is_hom_into_the_algebra(i in 0usize..6, d in 1usize..5, seed: u64) {
        let Some(m) = draw(i, d, seed) else { return Err(TestCaseError::reject("no module drawn")) };
        prop_assert_eq!(dual_star(&m).unwrap().dim(), hom_dim(&m, &Module::regular(m.algebra())).unwrap());
    }
}
