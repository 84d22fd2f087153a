//! Library results against independent brute-force computations over F_2.

mod common;

use std::collections::BTreeSet;

use homlab::homtools::{ext_profile, transpose};
use homlab::modrep::{enumerate_modules, hom_dim, EnumerationConfig};
use homlab::Module;

use common::*;

/// 3×3 matrices over F_2 as row bitmasks; matrices act on column vectors.
type M3 = [u8; 3];

fn apply(m: &M3, v: u8) -> u8 {
    (0..3).fold(0, |acc, i| acc | ((((m[i] & v).count_ones() & 1) as u8) << i))
}

fn all_maps(rows: usize, cols: usize) -> impl Iterator<Item = Vec<u8>> {
    (0u32..1 << (rows * cols))
        .map(move |bits| (0..rows).map(|r| ((bits >> (r * cols)) & ((1 << cols) - 1)) as u8).collect())
}

// The plane Λ = F_2[x,y]/(x,y)² on the basis (1, x, y): left multiplication.
const X: M3 = [0b000, 0b001, 0b000];
const Y: M3 = [0b000, 0b000, 0b001];

#[test]
fn ext1_of_simple_into_the_plane() {
    // Ext¹(k, Λ) = Hom(J, Λ) / {restrictions of Λ-endomorphisms}, J = span(x, y) with zero action.
    // A linear map J → Λ is a 3×2 matrix; it is Λ-linear iff x and y kill its image.
    let homs: Vec<Vec<u8>> = all_maps(3, 2)
        .filter(|f| {
            (0..2).all(|c| {
                let col = f.iter().enumerate().fold(0u8, |acc, (r, row)| acc | (((row >> c) & 1) << r));
                apply(&X, col) == 0 && apply(&Y, col) == 0
            })
        })
        .collect();
    let endos: Vec<M3> = all_maps(3, 3)
        .map(|v| [v[0], v[1], v[2]])
        .filter(|f| [X, Y].iter().all(|a| (0..8).all(|v| apply(f, apply(a, v)) == apply(a, apply(f, v)))))
        .collect();
    let restrictions: BTreeSet<Vec<u8>> =
        endos.iter().map(|f| f.iter().map(|row| (row >> 1) & 0b11).collect()).collect();
    let ext1 = ((homs.len() / restrictions.len()) as f64).log2() as usize;
    assert_eq!(ext1, 3);

    let b = k2xy();
    let e = ext_profile(&Module::simple(&b, 0), &Module::regular(&b), 1).unwrap();
    assert_eq!(e.dims[1], ext1);
}

#[test]
fn transpose_of_simple_over_the_plane() {
    // Tr k = coker(Hom(Λ, Λ) → Hom(Λ², Λ)), a ↦ (a·x, a·y); the image is {(ax, ay)}.
    let image: BTreeSet<(u8, u8)> = (0..8u8).map(|a| (mul(a, 0b010), mul(a, 0b100))).collect();
    let rank = (image.len() as f64).log2() as usize;
    let b = k2xy();
    assert_eq!(transpose(&Module::simple(&b, 0)).unwrap().module.dim(), 2 * 3 - rank);
    assert_eq!(2 * 3 - rank, 5);
}

/// Product in the plane on bitmasks over (1, x, y).
fn mul(a: u8, b: u8) -> u8 {
    let (a0, b0) = (a & 1, b & 1);
    let mut r = a0 & b0;
    r |= (a0 * (b & 0b110)) | (b0 * (a & 0b110));
    r
}

fn partitions_bounded(n: usize, largest: usize) -> usize {
    if n == 0 {
        return 1;
    }
    (1..=largest.min(n)).map(|k| partitions_bounded(n - k, k)).sum()
}

#[test]
fn dual_numbers_classes_are_jordan_types() {
    // x² = 0: Jordan blocks of size ≤ 2.
    let a = k2x();
    let r = enumerate_modules(&a, &EnumerationConfig { max_dim: 4, exhaustive: true, ..Default::default() }).unwrap();
    for d in 1..=4 {
        let found = r.modules.iter().filter(|m| m.dim() == d).count();
        assert_eq!(found, partitions_bounded(d, 2), "dim {d}");
    }
    // x³ = 0 over F_2, dim ≤ 4.
    let c = k2x3();
    let r = enumerate_modules(&c, &EnumerationConfig { max_dim: 4, exhaustive: true, ..Default::default() }).unwrap();
    for d in 1..=4 {
        assert_eq!(r.modules.iter().filter(|m| m.dim() == d).count(), partitions_bounded(d, 3));
    }
}

#[test]
fn conjugacy_orbits_of_square_zero_matrices() {
    // Orbits of GL_2(F_2) on 2×2 matrices with x² = 0, by brute force.
    let mat = |b: u8| [[b & 1, (b >> 1) & 1], [(b >> 2) & 1, (b >> 3) & 1]];
    let mul2 = |p: [[u8; 2]; 2], q: [[u8; 2]; 2]| {
        let mut r = [[0u8; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] = (p[i][0] & q[0][j]) ^ (p[i][1] & q[1][j]);
            }
        }
        r
    };
    let id = [[1, 0], [0, 1]];
    let gl: Vec<_> = (0..16u8).map(mat).filter(|&g| (0..16u8).map(mat).any(|h| mul2(g, h) == id)).collect();
    assert_eq!(gl.len(), 6);
    let nil: Vec<_> = (0..16u8).map(mat).filter(|&m| mul2(m, m) == [[0, 0], [0, 0]]).collect();
    let mut orbits: Vec<BTreeSet<[[u8; 2]; 2]>> = Vec::new();
    for m in nil {
        if orbits.iter().any(|o| o.contains(&m)) {
            continue;
        }
        let orbit = gl
            .iter()
            .map(|&g| {
                let ginv = *gl.iter().find(|&&h| mul2(g, h) == id).unwrap();
                mul2(mul2(g, m), ginv)
            })
            .collect();
        orbits.push(orbit);
    }
    // One class in dimension 1, plus the dimension-2 orbits.
    let a = k2x();
    let r = enumerate_modules(&a, &EnumerationConfig { max_dim: 2, exhaustive: true, ..Default::default() }).unwrap();
    assert_eq!(r.modules.len(), 1 + orbits.len());
    assert_eq!(r.modules.len(), 3);
}

#[test]
fn a2_classes_are_multisets_of_indecomposables() {
    // Indecomposables of 1 → 2: S1, S2 (dim 1) and P1 (dim 2).
    let count = |d: usize| (0..=d / 2).map(|p1| d - 2 * p1 + 1).sum::<usize>();
    let q = a2();
    let r = enumerate_modules(&q, &EnumerationConfig { max_dim: 4, exhaustive: true, ..Default::default() }).unwrap();
    for d in 1..=4 {
        assert_eq!(r.modules.iter().filter(|m| m.dim() == d).count(), count(d), "dim {d}");
    }
}

#[test]
fn ext_over_a2_by_hand() {
    let q = a2();
    let (s1, s2, p1) = (Module::simple(&q, 0), Module::simple(&q, 1), Module::projective(&q, 0));
    assert_eq!(ext_profile(&s1, &s2, 3).unwrap().dims, vec![0, 1, 0, 0]);
    assert_eq!(ext_profile(&s2, &s1, 3).unwrap().dims, vec![0, 0, 0, 0]);
    assert_eq!(ext_profile(&s1, &s1, 3).unwrap().dims, vec![1, 0, 0, 0]);
    assert_eq!(hom_dim(&p1, &s1).unwrap(), 1);
    assert_eq!(hom_dim(&s2, &p1).unwrap(), 1);
    assert_eq!(hom_dim(&s1, &p1).unwrap(), 0);
}

#[test]
fn ext_of_simples_over_truncated_polynomials() {
    // Over F_p[x]/(x^n) the resolution of k is periodic of rank one.
    for a in [k2x(), k3x(), k2x3()] {
        let k = Module::simple(&a, 0);
        let e = ext_profile(&k, &k, 5).unwrap();
        assert_eq!(e.dims, vec![1; 6]);
        assert!(e.is_determined());
    }
    // Over the plane the ranks double: Ext^i(k, k) = 2^i.
    let b = k2xy();
    let k = Module::simple(&b, 0);
    assert_eq!(ext_profile(&k, &k, 4).unwrap().dims, vec![1, 2, 4, 8, 16]);
}
