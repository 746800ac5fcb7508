//! Dense complex linear algebra for the small matrices this crate meets
//! (Gram matrices, colligations, contraction tuples). Hermitian
//! eigendecomposition is cyclic Jacobi, which is deterministic and accurate
//! on the semidefinite matrices produced by Gram constructions.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
// f64 math methods come from core when std is linked (tests) and from
// num-traits/libm in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;


use crate::error::{Error, Result};
use crate::rng::Rng;

pub type C64 = Complex64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Row-major dense complex matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct CMat {
    nrows: usize,
    ncols: usize,
    a: Vec<C64>,
}

impl CMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        CMat { nrows, ncols, a: vec![ZERO; nrows * ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(nrows: usize, ncols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = CMat::zeros(nrows, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        CMat::from_fn(nrows, ncols, |i, j| rows[i][j])
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn adjoint(&self) -> Self {
        CMat::from_fn(self.ncols, self.nrows, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols, rhs.nrows, "matmul shape mismatch");
        let mut out = CMat::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let aik = self[(i, k)];
                if aik == ZERO {
                    continue;
                }
                for j in 0..rhs.ncols {
                    out[(i, j)] += aik * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        CMat::from_fn(self.nrows, self.ncols, |i, j| self[(i, j)] - rhs[(i, j)])
    }

    pub fn scale(&self, s: C64) -> Self {
        CMat::from_fn(self.nrows, self.ncols, |i, j| self[(i, j)] * s)
    }

    pub fn max_abs(&self) -> f64 {
        self.a.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn col(&self, j: usize) -> Vec<C64> {
        (0..self.nrows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[C64]) {
        assert_eq!(v.len(), self.nrows);
        for i in 0..self.nrows {
            self[(i, j)] = v[i];
        }
    }

    pub fn row(&self, i: usize) -> Vec<C64> {
        (0..self.ncols).map(|j| self[(i, j)]).collect()
    }

    /// Contiguous submatrix `[r0, r1) x [c0, c1)`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        CMat::from_fn(r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.nrows, rhs.nrows);
        CMat::from_fn(self.nrows, self.ncols + rhs.ncols, |i, j| {
            if j < self.ncols {
                self[(i, j)]
            } else {
                rhs[(i, j - self.ncols)]
            }
        })
    }
}

impl core::ops::Index<(usize, usize)> for CMat {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.a[i * self.ncols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.a[i * self.ncols + j]
    }
}

/// Max-entry deviation of `U*U` from the identity.
pub fn unitarity_error(u: &CMat) -> f64 {
    u.adjoint().matmul(u).sub(&CMat::identity(u.ncols())).max_abs()
}

/// Solves `A X = B` by Gaussian elimination with partial pivoting.
pub fn solve(a: &CMat, b: &CMat) -> Result<CMat> {
    assert_eq!(a.nrows, a.ncols, "solve expects a square matrix");
    assert_eq!(a.nrows, b.nrows);
    let n = a.nrows;
    let mut m = a.clone();
    let mut x = b.clone();
    let scale = m.max_abs().max(1e-300);
    for k in 0..n {
        let (mut piv, mut best) = (k, m[(k, k)].norm());
        for i in k + 1..n {
            let v = m[(i, k)].norm();
            if v > best {
                piv = i;
                best = v;
            }
        }
        if best <= 1e-14 * scale {
            return Err(Error::SingularMatrix);
        }
        if piv != k {
            for j in 0..n {
                let t = m[(k, j)];
                m[(k, j)] = m[(piv, j)];
                m[(piv, j)] = t;
            }
            for j in 0..x.ncols {
                let t = x[(k, j)];
                x[(k, j)] = x[(piv, j)];
                x[(piv, j)] = t;
            }
        }
        let d = m[(k, k)];
        for i in k + 1..n {
            let f = m[(i, k)] / d;
            if f == ZERO {
                continue;
            }
            for j in k..n {
                let mkj = m[(k, j)];
                m[(i, j)] -= f * mkj;
            }
            for j in 0..x.ncols {
                let xkj = x[(k, j)];
                x[(i, j)] -= f * xkj;
            }
        }
    }
    for k in (0..n).rev() {
        for j in 0..x.ncols {
            let mut s = x[(k, j)];
            for i in k + 1..n {
                s -= m[(k, i)] * x[(i, j)];
            }
            x[(k, j)] = s / m[(k, k)];
        }
    }
    Ok(x)
}

pub fn inverse(a: &CMat) -> Result<CMat> {
    solve(a, &CMat::identity(a.nrows))
}

/// Eigendecomposition `H = V diag(λ) V*` of a Hermitian matrix by cyclic
/// Jacobi rotations. Eigenvalues are returned ascending with matching
/// eigenvector columns. The input is symmetrized first.
pub fn hermitian_eig(h: &CMat) -> (Vec<f64>, CMat) {
    assert_eq!(h.nrows, h.ncols);
    let n = h.nrows;
    let mut a = CMat::from_fn(n, n, |i, j| (h[(i, j)] + h[(j, i)].conj()) * 0.5);
    let mut v = CMat::identity(n);
    if n <= 1 {
        let lam = if n == 1 { vec![a[(0, 0)].re] } else { vec![] };
        return (lam, v);
    }
    let scale = a.max_abs().max(1e-300);
    for _sweep in 0..100 {
        let mut off: f64 = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off = off.max(a[(p, q)].norm());
            }
        }
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let b = apq.norm();
                if b <= 1e-18 * scale {
                    continue;
                }
                let phase = apq / b;
                let tau = (a[(q, q)].re - a[(p, p)].re) / (2.0 * b);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // J: identity except J[p][p]=c, J[p][q]=s·phase,
                //    J[q][p]=-s·conj(phase), J[q][q]=c. Apply A <- J* A J, V <- V J.
                let jp = s * phase;
                let jq = -s * phase.conj();
                // Row update A <- J* A, where (J*)[p][q] = conj(J[q][p]) = -s·phase
                // and (J*)[q][p] = conj(J[p][q]) = s·conj(phase).
                let row_p: Vec<C64> = (0..n).map(|k| a[(p, k)]).collect();
                let row_q: Vec<C64> = (0..n).map(|k| a[(q, k)]).collect();
                for k in 0..n {
                    a[(p, k)] = row_p[k] * c - row_q[k] * jp;
                    a[(q, k)] = row_p[k] * (-jq) + row_q[k] * c;
                }
                // Column update A <- A J.
                let col_p: Vec<C64> = (0..n).map(|k| a[(k, p)]).collect();
                let col_q: Vec<C64> = (0..n).map(|k| a[(k, q)]).collect();
                for k in 0..n {
                    a[(k, p)] = col_p[k] * c + col_q[k] * jq;
                    a[(k, q)] = col_p[k] * jp + col_q[k] * c;
                }
                let vp: Vec<C64> = (0..n).map(|k| v[(k, p)]).collect();
                let vq: Vec<C64> = (0..n).map(|k| v[(k, q)]).collect();
                for k in 0..n {
                    v[(k, p)] = vp[k] * c + vq[k] * jq;
                    v[(k, q)] = vp[k] * jp + vq[k] * c;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap().then(i.cmp(&j)));
    let lam: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut w = CMat::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let col = v.col(src);
        w.set_col(dst, &col);
    }
    (lam, w)
}

/// Largest singular value.
pub fn operator_norm(m: &CMat) -> f64 {
    if m.nrows == 0 || m.ncols == 0 {
        return 0.0;
    }
    let g = m.adjoint().matmul(m);
    let (lam, _) = hermitian_eig(&g);
    lam.last().copied().unwrap_or(0.0).max(0.0).sqrt()
}

/// Modified Gram-Schmidt with two re-orthogonalization passes. Returns the
/// orthonormal columns and the indices of the input columns that were kept
/// (those whose residual exceeds `rank_tol` times the largest column norm).
pub fn mgs_columns(m: &CMat, rank_tol: f64) -> (CMat, Vec<usize>) {
    let scale = (0..m.ncols)
        .map(|j| norm2(&m.col(j)))
        .fold(0.0_f64, f64::max)
        .max(1e-300);
    let mut q: Vec<Vec<C64>> = Vec::new();
    let mut kept = Vec::new();
    for j in 0..m.ncols {
        let mut v = m.col(j);
        for _ in 0..2 {
            for qi in &q {
                let proj = dot(qi, &v);
                for (vk, qk) in v.iter_mut().zip(qi) {
                    *vk -= proj * qk;
                }
            }
        }
        let n = norm2(&v);
        if n > rank_tol * scale {
            for vk in v.iter_mut() {
                *vk /= n;
            }
            q.push(v);
            kept.push(j);
        }
    }
    let mut out = CMat::zeros(m.nrows, q.len());
    for (j, col) in q.iter().enumerate() {
        out.set_col(j, col);
    }
    (out, kept)
}

/// Gram-Schmidt applied simultaneously to two column-paired matrices: the
/// orthogonalization coefficients are computed from the `l` side and applied
/// to both, so when `l* l = r* r` the outputs are two orthonormal bases in
/// exact correspondence (`l` column k maps to `r` column k under the induced
/// isometry). Columns whose `l`-side residual falls below `rank_tol` times
/// the largest `l` column norm are dropped from both sides.
pub fn paired_mgs(l: &CMat, r: &CMat, rank_tol: f64) -> (CMat, CMat) {
    assert_eq!(l.ncols(), r.ncols());
    let scale = (0..l.ncols())
        .map(|j| norm2(&l.col(j)))
        .fold(0.0_f64, f64::max)
        .max(1e-300);
    let mut ql: Vec<Vec<C64>> = Vec::new();
    let mut qr: Vec<Vec<C64>> = Vec::new();
    for j in 0..l.ncols() {
        let mut vl = l.col(j);
        let mut vr = r.col(j);
        for _ in 0..2 {
            for (qi_l, qi_r) in ql.iter().zip(&qr) {
                let proj = dot(qi_l, &vl);
                for (x, qk) in vl.iter_mut().zip(qi_l) {
                    *x -= proj * qk;
                }
                for (y, qk) in vr.iter_mut().zip(qi_r) {
                    *y -= proj * qk;
                }
            }
        }
        let n = norm2(&vl);
        if n > rank_tol * scale {
            for x in vl.iter_mut() {
                *x /= n;
            }
            for y in vr.iter_mut() {
                *y /= n;
            }
            ql.push(vl);
            qr.push(vr);
        }
    }
    let mut out_l = CMat::zeros(l.nrows(), ql.len());
    let mut out_r = CMat::zeros(r.nrows(), qr.len());
    for (j, col) in ql.iter().enumerate() {
        out_l.set_col(j, col);
    }
    for (j, col) in qr.iter().enumerate() {
        out_r.set_col(j, col);
    }
    (out_l, out_r)
}

/// Orthonormal basis of the orthogonal complement of the (orthonormal)
/// columns of `q`, chosen deterministically by greedy pivoting over the
/// standard basis vectors.
pub fn orthonormal_complement(q: &CMat) -> CMat {
    let n = q.nrows;
    let r = q.ncols;
    let mut basis: Vec<Vec<C64>> = (0..r).map(|j| q.col(j)).collect();
    let mut out: Vec<Vec<C64>> = Vec::new();
    while basis.len() < n {
        // pick the standard basis vector with the largest residual
        let mut best_i = 0;
        let mut best_norm = -1.0;
        let mut best_v: Vec<C64> = Vec::new();
        for i in 0..n {
            let mut v = vec![ZERO; n];
            v[i] = ONE;
            for _ in 0..2 {
                for b in &basis {
                    let proj = dot(b, &v);
                    for (vk, bk) in v.iter_mut().zip(b) {
                        *vk -= proj * bk;
                    }
                }
            }
            let nn = norm2(&v);
            if nn > best_norm {
                best_norm = nn;
                best_i = i;
                best_v = v;
            }
        }
        let _ = best_i;
        for vk in best_v.iter_mut() {
            *vk /= best_norm;
        }
        basis.push(best_v.clone());
        out.push(best_v);
    }
    let mut m = CMat::zeros(n, out.len());
    for (j, col) in out.iter().enumerate() {
        m.set_col(j, col);
    }
    m
}

fn dot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

fn norm2(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Haar-ish random unitary: Gram-Schmidt of a complex Gaussian matrix.
pub fn random_unitary(n: usize, rng: &mut Rng) -> CMat {
    loop {
        let g = CMat::from_fn(n, n, |_, _| rng.c_normal());
        let (q, kept) = mgs_columns(&g, 1e-8);
        if kept.len() == n {
            return q;
        }
    }
}
