//! Dense exact linear algebra over prime fields `F_p` with `p < 2^16`.
//!
//! Every Hom, Ext, kernel and image computation in the crate bottoms out
//! here. Entries are stored reduced into `[0, p)` as `u32`; products of two
//! entries fit in a `u32`, so no wide arithmetic is needed in the hot loops.
//!
//! Subspaces are always kept as a basis in reduced row echelon form, which is
//! a canonical representative: two subspaces are equal exactly when their
//! bases are entrywise equal.

use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible modulus (exclusive).
pub const MAX_MODULUS: u32 = 1 << 16;

/// Deterministic primality test, adequate for the moduli accepted here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_modulus(p: u64) -> Result<u32> {
    if p >= MAX_MODULUS as u64 {
        return Err(Error::InvalidInput(format!("field modulus {p} is too large (must be below {MAX_MODULUS})")));
    }
    if !is_prime(p) {
        return Err(Error::InvalidInput(format!("field modulus {p} is not prime")));
    }
    Ok(p as u32)
}

#[inline]
pub fn add(p: u32, a: u32, b: u32) -> u32 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(p: u32, a: u32, b: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul(p: u32, a: u32, b: u32) -> u32 {
    (a * b) % p
}

#[inline]
pub fn neg(p: u32, a: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

/// Multiplicative inverse by Fermat's little theorem. `a` must be nonzero.
pub fn inv(p: u32, a: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow(p, a, p - 2)
}

pub fn pow(p: u32, mut a: u32, mut e: u32) -> u32 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(p, r, a);
        }
        a = mul(p, a, a);
        e >>= 1;
    }
    r
}

/// Reduce an arbitrary signed integer into `[0, p)`.
pub fn reduce(p: u32, v: i64) -> u32 {
    v.rem_euclid(p as i64) as u32
}

/// `dst += factor * src`, entrywise mod `p`.
#[inline]
fn axpy(p: u32, dst: &mut [u32], factor: u32, src: &[u32]) {
    if factor == 0 {
        return;
    }
    if p == 2 {
        for (d, s) in dst.iter_mut().zip(src) {
            *d ^= *s;
        }
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if *s != 0 {
            *d = (*d + factor * *s) % p;
        }
    }
}

pub fn vec_is_zero(v: &[u32]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn vec_add(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| add(p, x, y)).collect()
}

pub fn vec_sub(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| sub(p, x, y)).collect()
}

pub fn vec_scale(p: u32, c: u32, a: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| mul(p, c, x)).collect()
}

pub fn unit_vector(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// A dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`Mat::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub mat: Mat,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Mat { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn scalar(p: u32, n: usize, c: u32) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = c % p;
        }
        m
    }

    /// Build from raw row-major data; entries are reduced mod `p`.
    pub fn from_vec(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data has wrong length");
        let data = data.into_iter().map(|x| x % p).collect();
        Mat { p, rows, cols, data }
    }

    /// Build from signed integer rows; every row must have `cols` entries.
    pub fn from_rows_i64(p: u32, cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            for (j, &v) in r.iter().enumerate() {
                m.data[i * cols + j] = reduce(p, v);
            }
        }
        m
    }

    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().map(|x| x % p));
        }
        Mat { p, rows: rows.len(), cols, data }
    }

    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<u32>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(p, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column has wrong length");
            for (i, &v) in c.iter().enumerate() {
                m.data[i * cols + j] = v % p;
            }
        }
        m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        vec_is_zero(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let mut out = Mat::zeros(p, self.rows, other.cols);
        for i in 0..self.rows {
            let (orow_start, orow_end) = (i * other.cols, (i + 1) * other.cols);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let src = &other.data[k * other.cols..(k + 1) * other.cols];
                axpy(p, &mut out.data[orow_start..orow_end], a, src);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let p = self.p;
        (0..self.rows)
            .map(|i| {
                let mut acc: u64 = 0;
                for (a, b) in self.row(i).iter().zip(v) {
                    acc += (*a as u64) * (*b as u64);
                    if acc >= (1u64 << 62) {
                        acc %= p as u64;
                    }
                }
                (acc % p as u64) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| add(p, a, b)).collect();
        Mat { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| sub(p, a, b)).collect();
        Mat { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Mat {
        let p = self.p;
        let data = self.data.iter().map(|&a| mul(p, a, c % p)).collect();
        Mat { p, rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: u32, other: &Mat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        axpy(self.p, &mut self.data, c % self.p, &other.data);
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut out = Mat::zeros(self.p, self.rows, cols);
        for i in 0..self.rows {
            out.data[i * cols..i * cols + self.cols].copy_from_slice(self.row(i));
            out.data[i * cols + self.cols..(i + 1) * cols].copy_from_slice(other.row(i));
        }
        out
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { p: self.p, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        out.set_block(0, 0, self);
        out.set_block(self.rows, self.cols, other);
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat) {
        for i in 0..block.rows {
            let dst = (r0 + i) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(i));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut out = Mat::zeros(self.p, rows, cols);
        for i in 0..rows {
            let src = (r0 + i) * self.cols + c0;
            out.data[i * cols..(i + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat { p: self.p, rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.p, self.rows, idx.len());
        for i in 0..self.rows {
            for (jj, &j) in idx.iter().enumerate() {
                out.data[i * idx.len() + jj] = self.get(i, j);
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Mat) -> Mat {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Mat::zeros(self.p, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.data[(i * other.rows + k) * c + j * other.cols + l] = mul(self.p, a, other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Row-major flattening as a single vector.
    pub fn flatten(&self) -> Vec<u32> {
        self.data.clone()
    }

    /// Canonical reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref { mat: m, rank, pivots }
    }

    /// Reduce in place; returns pivot columns. Rows past the rank are zero.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut cur = 0;
        for c in 0..cols {
            if cur == rows {
                break;
            }
            let Some(pr) = (cur..rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if pr != cur {
                for j in c..cols {
                    self.data.swap(pr * cols + j, cur * cols + j);
                }
            }
            let lead = self.data[cur * cols + c];
            if lead != 1 {
                let li = inv(p, lead);
                for v in &mut self.data[cur * cols + c..(cur + 1) * cols] {
                    *v = mul(p, *v, li);
                }
            }
            let (head, tail) = self.data.split_at_mut(cur * cols);
            let (pivot_row, rest) = tail.split_at_mut(cols);
            let prow = &pivot_row[c..];
            for r in 0..cur {
                let row = &mut head[r * cols + c..(r + 1) * cols];
                let a = row[0];
                if a != 0 {
                    axpy(p, row, p - a, prow);
                }
            }
            for r in 0..rows - cur - 1 {
                let row = &mut rest[r * cols + c..(r + 1) * cols];
                let a = row[0];
                if a != 0 {
                    axpy(p, row, p - a, prow);
                }
            }
            pivots.push(c);
            cur += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        // Eliminate along the shorter side.
        if self.rows > self.cols {
            self.transpose().rref().rank
        } else {
            self.rref().rank
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        if self.rows == 0 {
            return true;
        }
        // The rank sequence of powers strictly decreases until it stabilises.
        let mut q = self.clone();
        let mut prev = self.rows + 1;
        loop {
            let r = q.rank();
            if r == 0 {
                return true;
            }
            if r == prev {
                return false;
            }
            prev = r;
            q = q.mul(self);
        }
    }

    /// The subspace `{v : self · v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let Rref { mat: r, pivots, .. } = self.rref();
        let n = self.cols;
        let p = self.p;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for f in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; n];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = neg(p, r.get(i, f));
            }
            basis.push(v);
        }
        Subspace::span(p, n, &basis)
    }

    /// Column space as a subspace of the target.
    pub fn image(&self) -> Subspace {
        Subspace::from_rows(self.transpose())
    }

    /// Some `x` with `self · x = b`, or `None` when `b` is not in the image.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let bm = Mat::from_columns(self.p, self.rows, &[b.to_vec()]);
        let aug = self.hstack(&bm);
        let Rref { mat, pivots, .. } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = mat.get(i, self.cols);
        }
        Some(x)
    }

    /// Solve `self · X = B` column by column; `None` if any column fails.
    pub fn solve_matrix(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(b.rows, self.rows);
        let aug = self.hstack(b);
        let Rref { mat, pivots, .. } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.p, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[pc * b.cols + j] = mat.get(i, self.cols + j);
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(self.p, n));
        let Rref { mat, pivots, .. } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(mat.block(0, n, n, n))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[F_{}; {}x{}]", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "\n  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// A linear subspace of `F_p^n`, stored by its canonical rref basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Mat,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in F_{}^{})", self.dim(), self.basis.p, self.ambient())
    }
}

impl Subspace {
    pub fn zero(p: u32, ambient: usize) -> Self {
        Subspace { basis: Mat::zeros(p, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(p: u32, ambient: usize) -> Self {
        Subspace { basis: Mat::identity(p, ambient), pivots: (0..ambient).collect() }
    }

    /// Row space of `m`.
    pub fn from_rows(m: Mat) -> Self {
        let Rref { mat, rank, pivots } = m.rref();
        let basis = mat.block(0, 0, rank, m.cols);
        Subspace { basis, pivots }
    }

    pub fn span(p: u32, ambient: usize, vectors: &[Vec<u32>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(p, ambient);
        }
        Self::from_rows(Mat::from_rows(p, ambient, vectors))
    }

    pub fn p(&self) -> u32 {
        self.basis.p
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    /// Basis rows in rref.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u32>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient coordinates not used as pivots; unit vectors there span a
    /// complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient()];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Subtract the components along the basis; the result vanishes on pivots.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.p();
        let mut r = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let a = r[pc];
            if a != 0 {
                axpy(p, &mut r, p - a, self.basis.row(i));
            }
        }
        r
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        vec_is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the rref basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&c| v[c]).collect())
    }

    /// Coordinates assuming membership (only pivots are read).
    pub fn coords_unchecked(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    /// Linear combination of basis rows.
    pub fn combine(&self, coeffs: &[u32]) -> Vec<u32> {
        assert_eq!(coeffs.len(), self.dim());
        let p = self.p();
        let mut v = vec![0; self.ambient()];
        for (i, &c) in coeffs.iter().enumerate() {
            axpy(p, &mut v, c, self.basis.row(i));
        }
        v
    }

    /// Coordinates of the class of `v` in the quotient by this subspace,
    /// relative to the unit vectors on [`Self::free_columns`].
    pub fn quotient_coords(&self, v: &[u32]) -> Vec<u32> {
        let r = self.reduce(v);
        self.free_columns().iter().map(|&c| r[c]).collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient());
        Subspace::from_rows(self.basis.vstack(&other.basis))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient());
        let p = self.p();
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Subspace::zero(p, self.ambient());
        }
        // x = Σ s_i u_i = Σ t_j w_j  <=>  [U^T | -W^T] (s, t) = 0
        let m = self.basis.transpose().hstack(&other.basis.transpose().scale(p - 1));
        let ker = m.kernel();
        let vecs: Vec<Vec<u32>> = ker.basis_vectors().iter().map(|st| self.combine(&st[..a])).collect();
        Subspace::span(p, self.ambient(), &vecs)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u32, rows: &[&[i64]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows_i64(p, cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn rref_duplicate_rows() {
        let r = m(2, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r.mat, m(2, &[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn rref_identity() {
        let i = Mat::identity(5, 4);
        let r = i.rref();
        assert_eq!(r.mat, i);
        assert_eq!(r.rank, 4);
    }

    #[test]
    fn rref_nilpotent_action() {
        let r = m(2, &[&[0, 0], &[1, 0]]).rref();
        assert_eq!(r.mat, m(2, &[&[1, 0], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(m(3, &[&[1, 2], &[0, 1]]).kernel().is_zero());
        let k = m(2, &[&[1, 1]]).kernel();
        assert_eq!(k.basis_vectors(), vec![vec![1, 1]]);
        let k = m(2, &[&[0, 0], &[1, 0]]).kernel();
        assert_eq!(k.basis_vectors(), vec![vec![0, 1]]);
    }

    #[test]
    fn solve_examples() {
        let a = Mat::identity(7, 3);
        assert_eq!(a.solve(&[3, 5, 6]), Some(vec![3, 5, 6]));
        assert_eq!(m(2, &[&[1, 1], &[1, 1]]).solve(&[1, 0]), None);
        assert_eq!(Mat::zeros(5, 2, 2).solve(&[0, 0]), Some(vec![0, 0]));
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(5, &[&[1, 2, 0], &[0, 1, 4], &[3, 0, 2]]);
        let ai = a.inverse().expect("invertible");
        assert!(a.mul(&ai).is_identity());
        assert!(m(2, &[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn subspace_equality_from_different_spanning_sets() {
        let a = Subspace::span(3, 3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let b = Subspace::span(3, 3, &[vec![1, 2, 1], vec![2, 0, 1], vec![1, 1, 0]]);
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(2, 3, &[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::span(2, 3, &[vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(a.intersect(&b).basis_vectors(), vec![vec![0, 1, 0]]);
        assert!(a.sum(&b).is_full());
    }

    #[test]
    fn nilpotency() {
        assert!(m(2, &[&[0, 0], &[1, 0]]).is_nilpotent());
        assert!(!Mat::identity(2, 2).is_nilpotent());
        assert!(!m(3, &[&[1, 0], &[0, 0]]).is_nilpotent());
    }

    #[test]
    fn modulus_checks() {
        assert!(check_modulus(4).is_err());
        assert!(check_modulus(65537).is_err());
        assert_eq!(check_modulus(65521).unwrap(), 65521);
    }
}
