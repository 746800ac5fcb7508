//! Transfer-function realizations `f(z) = A + B E(z)(I − D E(z))⁻¹ C`.
//!
//! A [`Realization`] stores the state-space dimensions `(dim H_1, …, dim H_n)`
//! and the full `(1+N)×(1+N)` colligation matrix; `E(z)` is the block-diagonal
//! map multiplying the `j`-th block by `z_j`. The construction from a
//! sums-of-squares certificate is the lurking-isometry argument run on
//! coefficient matrices: the polarized identity becomes `L*L = R*R` over the
//! joint monomial basis, the isometry `V L = R` is solved on `range(L)`, and
//! a deterministic unitary completion pairs the orthonormal complements of
//! the two ranges.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

// f64 math methods come from core when std is linked (tests) and from
// num-traits/libm in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;



use crate::cert::SosCertificate;
use crate::error::{Error, Result};
use crate::linalg::{
    mgs_columns, orthonormal_complement, paired_mgs, solve, unitarity_error, CMat, C64,
};
use crate::poly::{MultiIndex, Poly};
use crate::rng::Rng;
use crate::scalar::Coeff;

/// Residual tolerance for accepting a certificate into the construction.
pub const ISO_TOL: f64 = 1e-10;
/// Relative singular-value cut for span detection.
pub const SPAN_TOL: f64 = 1e-10;
/// Tolerance of the built-in 50-point transfer match self check.
pub const MATCH_TOL: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct Realization {
    dims: Vec<usize>,
    u: CMat,
}

impl Realization {
    /// Wraps a colligation; `u` must be `(1 + Σdims)` square. Unitarity is
    /// checked by the operations that need it, not here.
    pub fn new(dims: Vec<usize>, u: CMat) -> Result<Self> {
        let n: usize = dims.iter().sum();
        if u.nrows() != n + 1 || u.ncols() != n + 1 {
            return Err(Error::DimensionMismatch { expected: n + 1, found: u.nrows() });
        }
        Ok(Realization { dims, u })
    }

    pub fn nvars(&self) -> usize {
        self.dims.len()
    }

    /// `Σ_j dim H_j`, the size of the realization.
    pub fn size(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn unitary(&self) -> &CMat {
        &self.u
    }

    pub fn a(&self) -> C64 {
        self.u[(0, 0)]
    }

    pub fn b_row(&self) -> Vec<C64> {
        (1..self.u.ncols()).map(|j| self.u[(0, j)]).collect()
    }

    pub fn c_col(&self) -> Vec<C64> {
        (1..self.u.nrows()).map(|i| self.u[(i, 0)]).collect()
    }

    pub fn d_block(&self) -> CMat {
        self.u.block(1, self.u.nrows(), 1, self.u.ncols())
    }

    /// Which variable the `k`-th state coordinate belongs to.
    pub fn var_of_state(&self, k: usize) -> usize {
        let mut acc = 0;
        for (j, d) in self.dims.iter().enumerate() {
            acc += d;
            if k < acc {
                return j;
            }
        }
        panic!("state index out of range");
    }

    pub fn unitarity_error(&self) -> f64 {
        unitarity_error(&self.u)
    }

    /// `A + B E(z) (I − D E(z))⁻¹ C`. Fails only if `I − D E(z)` is
    /// numerically singular, which cannot happen for unitary colligations
    /// with `z` in the open polydisk.
    pub fn transfer_eval(&self, z: &[C64]) -> Result<C64> {
        assert_eq!(z.len(), self.nvars(), "point dimension mismatch");
        let n = self.size();
        if n == 0 {
            return Ok(self.a());
        }
        let d = self.d_block();
        let m = CMat::from_fn(n, n, |i, k| {
            let delta = if i == k { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
            delta - d[(i, k)] * z[self.var_of_state(k)]
        });
        let c = self.c_col();
        let rhs = CMat::from_fn(n, 1, |i, _| c[i]);
        let x = solve(&m, &rhs)?;
        let b = self.b_row();
        let mut acc = self.a();
        for k in 0..n {
            acc += b[k] * z[self.var_of_state(k)] * x[(k, 0)];
        }
        Ok(acc)
    }

    /// Recovers `(q, p)` with `f = q/p`: `p = det(I − D E(z))` and
    /// `q = A·p + B E(z) adj(I − D E(z)) C`, expanded symbolically.
    /// Cramer's rule bounds `deg_{z_j}` of both by `dims[j]`.
    pub fn to_rational(&self) -> (Poly<C64>, Poly<C64>) {
        let n = self.size();
        let nv = self.nvars();
        if n == 0 {
            return (Poly::constant(nv, self.a()), Poly::one(nv));
        }
        let d = self.d_block();
        // M[i][k] = δ_ik − D[i][k]·z_{var(k)}
        let m: Vec<Vec<Poly<C64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        let mut e = Poly::zero(nv);
                        if i == k {
                            e = Poly::one(nv);
                        }
                        let coeff = -d[(i, k)];
                        if !Coeff::is_zero(&coeff) {
                            e.insert_add(MultiIndex::unit(nv, self.var_of_state(k)), coeff);
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        let p = poly_det(&m);
        // F_k = det(M with column k replaced by C) = (adj M · C)_k
        let c = self.c_col();
        let b = self.b_row();
        let mut q = p.scale(&self.a());
        for k in 0..n {
            let mut mk = m.clone();
            for (i, row) in mk.iter_mut().enumerate() {
                row[k] = Poly::constant(nv, c[i]);
            }
            let fk = poly_det(&mk);
            let zk = Poly::variable(nv, self.var_of_state(k));
            q = q.add(&fk.mul(&zk).scale(&b[k]));
        }
        (q, p)
    }

    /// The certificate hiding inside a (near-)unitary realization:
    /// `F(z) = adj(I − D E(z)) C` split into blocks along `dims`. Verifies
    /// against `to_rational` with residual at the unitarity level.
    pub fn to_certificate(&self) -> SosCertificate<C64> {
        let n = self.size();
        let nv = self.nvars();
        let d = self.d_block();
        let m: Vec<Vec<Poly<C64>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|k| {
                        let mut e = Poly::zero(nv);
                        if i == k {
                            e = Poly::one(nv);
                        }
                        let coeff = -d[(i, k)];
                        if !Coeff::is_zero(&coeff) {
                            e.insert_add(MultiIndex::unit(nv, self.var_of_state(k)), coeff);
                        }
                        e
                    })
                    .collect()
            })
            .collect();
        let c = self.c_col();
        let mut blocks: Vec<Vec<Poly<C64>>> = self.dims.iter().map(|&d| Vec::with_capacity(d)).collect();
        for k in 0..n {
            let mut mk = m.clone();
            for (i, row) in mk.iter_mut().enumerate() {
                row[k] = Poly::constant(nv, c[i]);
            }
            blocks[self.var_of_state(k)].push(poly_det(&mk));
        }
        let faces = blocks
            .into_iter()
            .map(|comps| crate::poly::VecPoly::from_components(nv, &comps))
            .collect();
        SosCertificate::new(faces).expect("face count matches nvars by construction")
    }
}

/// Determinant of a square matrix of polynomials by dynamic programming over
/// row subsets (columns processed left to right).
fn poly_det(m: &[Vec<Poly<C64>>]) -> Poly<C64> {
    let n = m.len();
    let nv = if n == 0 { 0 } else { m[0][0].nvars() };
    if n == 0 {
        return Poly::one(nv);
    }
    assert!(n <= 20, "determinant size out of supported range");
    // d[mask] = det of the submatrix on columns 0..popcount(mask) and rows in mask
    let mut d: Vec<Option<Poly<C64>>> = vec![None; 1 << n];
    d[0] = Some(Poly::one(nv));
    for mask in 1usize..(1 << n) {
        let col = (mask as u32).count_ones() as usize - 1;
        let mut acc = Poly::zero(nv);
        // Laplace expansion along the last column: sign (−1)^{row_pos + col}.
        let mut sign_flip = col % 2 == 1;
        for i in 0..n {
            if mask & (1 << i) == 0 {
                continue;
            }
            let sub = d[mask & !(1 << i)].as_ref().expect("filled in order");
            let term = sub.mul(&m[i][col]);
            acc = if sign_flip { acc.sub(&term) } else { acc.add(&term) };
            sign_flip = !sign_flip;
        }
        d[mask] = Some(acc);
    }
    d[(1 << n) - 1].take().expect("full mask computed")
}

/// Minimum of `|p|` over a deterministic grid of the closed polydisk
/// (20 points per variable: 4 radii × 5 angles, boundary included). A small
/// value flags a possibly unstable denominator; this is a heuristic report,
/// not a proof.
pub fn stability_min_abs(p: &Poly<C64>) -> f64 {
    let nv = p.nvars();
    if nv == 0 {
        return p.eval(&[]).norm();
    }
    let radii = [0.25, 0.5, 0.75, 1.0];
    let mut points: Vec<C64> = Vec::with_capacity(20);
    for (k, &r) in radii.iter().enumerate() {
        for a in 0..5 {
            // stagger angles per radius ring so rings do not align
            let theta = core::f64::consts::TAU * (a as f64 + 0.13 * k as f64) / 5.0;
            points.push(C64::new(r * theta.cos(), r * theta.sin()));
        }
    }
    let mut min = f64::INFINITY;
    let mut idx = vec![0usize; nv];
    loop {
        let z: Vec<C64> = idx.iter().map(|&i| points[i]).collect();
        min = min.min(p.eval(&z).norm());
        let mut carry = 0;
        while carry < nv {
            idx[carry] += 1;
            if idx[carry] < points.len() {
                break;
            }
            idx[carry] = 0;
            carry += 1;
        }
        if carry == nv {
            break;
        }
    }
    min
}

/// Builds a unitary realization from a verified sums-of-squares certificate
/// via the lurking-isometry argument.
///
/// The stacked families `[p; z_j F_j]` and `[q; F_j]` are written as
/// coefficient matrices `L`, `R` over their joint monomial basis; the
/// polarized identity `L*L = R*R` is checked, `V L = R` is solved on
/// `range(L)`, and `V` is completed to a unitary by pairing deterministic
/// orthonormal complements of the two ranges. The result is self-checked
/// against `q/p` at 50 seeded interior points.
pub fn lurking_isometry(
    p: &Poly<C64>,
    q: &Poly<C64>,
    cert: &SosCertificate<C64>,
) -> Result<Realization> {
    let nv = p.nvars();
    assert_eq!(q.nvars(), nv, "variable count mismatch");
    assert_eq!(cert.nvars(), nv, "certificate variable count mismatch");

    let scale = p.max_abs().max(q.max_abs()).max(1.0);
    let p0 = p.eval(&vec![C64::new(0.0, 0.0); nv]);
    if p0.norm() <= 1e-12 * scale {
        return Err(Error::DegenerateInput {
            reason: format!("p(0) = {p0} vanishes; denominator not normalizable"),
        });
    }
    let residual = crate::cert::verify_decomposition(p, q, cert);
    let res_tol = ISO_TOL * scale * scale;
    if residual > res_tol {
        return Err(Error::NotIsometric { deviation: residual, tolerance: res_tol });
    }

    // Stacked coefficient columns over the joint monomial basis.
    let counts = cert.counts();
    let total: usize = counts.iter().sum();
    let rows = 1 + total;
    let mut basis: Vec<MultiIndex> = p.support().cloned().collect();
    basis.extend(q.support().cloned());
    for (j, f) in cert.faces().iter().enumerate() {
        let shifted = f.shift(j, 1);
        basis.extend(f.support().cloned());
        basis.extend(shifted.support().cloned());
    }
    basis.sort();
    basis.dedup();
    let m = basis.len();

    let mut l = CMat::zeros(rows, m);
    let mut r = CMat::zeros(rows, m);
    for (col, alpha) in basis.iter().enumerate() {
        l[(0, col)] = p.coeff(alpha);
        r[(0, col)] = q.coeff(alpha);
        let mut row0 = 1;
        for (j, f) in cert.faces().iter().enumerate() {
            let shifted = f.shift(j, 1);
            let lv = shifted.coeff_vec(alpha);
            let rv = f.coeff_vec(alpha);
            for i in 0..f.dim() {
                l[(row0 + i, col)] = lv[i];
                r[(row0 + i, col)] = rv[i];
            }
            row0 += f.dim();
        }
    }

    // Polarized identity on Gram matrices.
    let gl = l.adjoint().matmul(&l);
    let gr = r.adjoint().matmul(&r);
    let gram_dev = gl.sub(&gr).max_abs();
    let gram_tol = ISO_TOL * scale * scale * (m as f64);
    if gram_dev > gram_tol {
        return Err(Error::NotIsometric { deviation: gram_dev, tolerance: gram_tol });
    }

    // Orthonormal bases of range(L) and range(R) in exact correspondence:
    // Gram-Schmidt on L's columns, with the same coefficients applied to R.
    let (ql, qr) = paired_mgs(&l, &r, SPAN_TOL);
    let rank = ql.ncols();
    // polish the R side (its orthonormality error is at the level of the
    // Gram deviation); the polish keeps the span and barely moves columns
    let (qr, kept_r) = mgs_columns(&qr, 1e-6);
    if kept_r.len() != rank {
        return Err(Error::SelfCheckFailed { max_error: gram_dev });
    }
    let kl = orthonormal_complement(&ql);
    let kr = orthonormal_complement(&qr);
    let u = qr.hstack(&kr).matmul(&ql.hstack(&kl).adjoint());

    let realization = Realization::new(counts, u)?;
    // Self check: the transfer function must reproduce q/p on the interior.
    let mut rng = Rng::new(0x5EED_1507);
    let mut worst = 0.0_f64;
    for _ in 0..50 {
        let z = rng.polydisk(nv, 0.8);
        let pv = p.eval(&z);
        let fv = realization.transfer_eval(&z)?;
        let err = (fv * pv - q.eval(&z)).norm() / pv.norm();
        worst = worst.max(err);
    }
    if worst > MATCH_TOL {
        return Err(Error::SelfCheckFailed { max_error: worst });
    }
    Ok(realization)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::verify_decomposition;
    use crate::form::mod2_diff;
    use crate::linalg::random_unitary;
    use crate::poly::VecPoly;
    use crate::scalar::Coeff;
    use crate::testutil::{c, trivar_certificate, trivar_p, trivar_q};

    fn surd(num: i64, den: i64, rad: u64) -> C64 {
        C64::from_surd(num, den, rad)
    }

    /// The 3×3 unitary of the one-variable Blaschke demo.
    fn blaschke_unitary() -> CMat {
        let s = surd(1, 4, 15);
        CMat::from_rows(&[
            vec![c(-0.25), c(0.0), s],
            vec![s, c(0.0), c(0.25)],
            vec![c(0.0), c(1.0), c(0.0)],
        ])
    }

    #[test]
    fn coordinate_function_realization() {
        // f = z1, F1 = 1 forces U = [[0, 1], [1, 0]].
        let p = Poly::one(1);
        let q = Poly::variable(1, 0);
        let cert = SosCertificate::new(vec![VecPoly::from(Poly::one(1))]).unwrap();
        let r = lurking_isometry(&p, &q, &cert).unwrap();
        assert_eq!(r.size(), 1);
        assert!((r.a() - c(0.0)).norm() < 1e-14);
        assert!((r.b_row()[0] - c(1.0)).norm() < 1e-14);
        assert!((r.c_col()[0] - c(1.0)).norm() < 1e-14);
        assert!(r.unitarity_error() < 1e-13);
        let (qq, pp) = r.to_rational();
        assert!(pp.sub(&Poly::one(1)).max_abs() < 1e-13);
        assert!(qq.sub(&Poly::variable(1, 0)).max_abs() < 1e-13);
        // the hidden certificate is F1 = 1
        let cert2 = r.to_certificate();
        assert_eq!(cert2.counts(), vec![1]);
        assert!(cert2.face(0).component(0).sub(&Poly::one(1)).max_abs() < 1e-13);
    }

    #[test]
    fn size_is_sum_of_dims() {
        let r = Realization::new(vec![2, 2, 2], CMat::identity(7)).unwrap();
        assert_eq!(r.size(), 6);
        assert_eq!(Realization::new(vec![3, 3, 3], CMat::identity(10)).unwrap().size(), 9);
    }

    #[test]
    fn monomial_two_variable_realization() {
        // f = z1z2 with F1 = 1, F2 = z1: size 2, matches f at random points.
        let p = Poly::one(2);
        let q = Poly::variable(2, 0).mul(&Poly::variable(2, 1));
        let cert = SosCertificate::new(vec![
            VecPoly::from(Poly::one(2)),
            VecPoly::from(Poly::variable(2, 0)),
        ])
        .unwrap();
        let r = lurking_isometry(&p, &q, &cert).unwrap();
        assert_eq!(r.size(), 2);
        assert!(r.unitarity_error() < 1e-13);
        let mut rng = Rng::new(4);
        for _ in 0..25 {
            let z = rng.polydisk(2, 0.9);
            let want = z[0] * z[1];
            let got = r.transfer_eval(&z).unwrap();
            assert!((want - got).norm() < 1e-12);
        }
    }

    #[test]
    fn bundled_trivar_realization_has_size_nine() {
        let p = trivar_p();
        let q = trivar_q();
        let cert = trivar_certificate();
        let r = lurking_isometry(&p, &q, &cert).unwrap();
        assert_eq!(r.size(), 9);
        assert_eq!(r.dims(), &[3, 3, 3]);
        assert!(r.unitarity_error() < 1e-10);
        let mut rng = Rng::new(99);
        for _ in 0..50 {
            let z = rng.polydisk(3, 0.9);
            let want = q.eval(&z) / p.eval(&z);
            let got = r.transfer_eval(&z).unwrap();
            assert!((want - got).norm() < 1e-8);
        }
    }

    #[test]
    fn lurking_isometry_rejects_invalid_certificate() {
        let p = trivar_p();
        let q = trivar_q();
        let mut faces = trivar_certificate().faces().to_vec();
        faces[0] = VecPoly::zero(3, 0);
        let bad = SosCertificate::new(faces).unwrap();
        assert!(matches!(
            lurking_isometry(&p, &q, &bad),
            Err(Error::NotIsometric { .. })
        ));
    }

    #[test]
    fn lurking_isometry_rejects_vanishing_denominator() {
        let p = Poly::<C64>::variable(1, 0); // p(0) = 0
        let q = Poly::one(1);
        let cert = SosCertificate::empty(1);
        assert!(matches!(
            lurking_isometry(&p, &q, &cert),
            Err(Error::DegenerateInput { .. })
        ));
    }

    #[test]
    fn blaschke_matrix_is_unitary_and_evaluates() {
        let u = blaschke_unitary();
        assert!(unitarity_error(&u) < 1e-15);
        let r = Realization::new(vec![2], u).unwrap();
        // A entry at the origin
        let at0 = r.transfer_eval(&[c(0.0)]).unwrap();
        assert!((at0 - c(-0.25)).norm() < 1e-15);
        // numerator root at z = 1/2
        let athalf = r.transfer_eval(&[c(0.5)]).unwrap();
        assert!(athalf.norm() < 1e-14);
        // generic point against (z² − 1/4)/(1 − z²/4)
        let z = C64::new(0.3, -0.4);
        let want = (z * z - 0.25) / (1.0 - 0.25 * z * z);
        assert!((r.transfer_eval(&[z]).unwrap() - want).norm() < 1e-14);
    }

    #[test]
    fn blaschke_to_rational_frozen_determinant() {
        // det [[1, -z/4], [-z, 1]] = 1 - z²/4, q = z² - 1/4 (symbolic oracle)
        let r = Realization::new(vec![2], blaschke_unitary()).unwrap();
        let (q, p) = r.to_rational();
        let z2 = MultiIndex::new(vec![2]);
        assert!((p.coeff(&MultiIndex::zeros(1)) - c(1.0)).norm() < 1e-14);
        assert!((p.coeff(&z2) - c(-0.25)).norm() < 1e-14);
        assert_eq!(p.nterms(), 2);
        assert!((q.coeff(&MultiIndex::zeros(1)) - c(-0.25)).norm() < 1e-14);
        assert!((q.coeff(&z2) - c(1.0)).norm() < 1e-14);
        assert_eq!(q.nterms(), 2);
    }

    #[test]
    fn blaschke_construction_recovers_prologue_unitary() {
        // p = 1 - z²/4, q = z² - 1/4, F1 = (√15/4)·(1, z): the construction
        // reproduces the bundled 3×3 matrix entry by entry.
        let p = Poly::from_terms(
            1,
            [(MultiIndex::zeros(1), c(1.0)), (MultiIndex::new(vec![2]), c(-0.25))],
        );
        let q = Poly::from_terms(
            1,
            [(MultiIndex::new(vec![2]), c(1.0)), (MultiIndex::zeros(1), c(-0.25))],
        );
        let s = surd(1, 4, 15);
        let f1 = VecPoly::from_components(
            1,
            &[Poly::constant(1, s), Poly::variable(1, 0).scale(&s)],
        );
        let cert = SosCertificate::new(vec![f1]).unwrap();
        let r = lurking_isometry(&p, &q, &cert).unwrap();
        let u = blaschke_unitary();
        assert!(r.unitary().sub(&u).max_abs() < 1e-12);
    }

    #[test]
    fn random_unitary_realizations_are_inner_and_round_trip() {
        let mut rng = Rng::new(2024);
        for trial in 0..8 {
            let dims: Vec<usize> = (0..3).map(|_| 1 + rng.index(2)).collect();
            let n: usize = dims.iter().sum();
            let u = random_unitary(n + 1, &mut rng);
            let r = Realization::new(dims.clone(), u).unwrap();
            let (q, p) = r.to_rational();
            // degree bounds from Cramer's rule
            let dq = q.multidegree().unwrap_or_else(|| MultiIndex::zeros(3));
            let dp = p.multidegree().unwrap();
            for (j, &dim) in dims.iter().enumerate() {
                assert!(dp.get(j) as usize <= dim, "trial {trial}");
                assert!(dq.get(j) as usize <= dim, "trial {trial}");
            }
            // inner: |p|² − |q|² vanishes on the torus
            assert!(mod2_diff(&p, &q).torus_restrict().max_abs() < 1e-10);
            // extracted certificate verifies
            let cert = r.to_certificate();
            let res = verify_decomposition(&p, &q, &cert);
            assert!(res < 1e-9, "trial {trial}: residual {res}");
            // round trip through the construction
            let r2 = lurking_isometry(&p, &q, &cert.trim()).unwrap();
            for _ in 0..50 {
                let z = rng.polydisk(3, 0.85);
                let a = r.transfer_eval(&z).unwrap();
                let b = r2.transfer_eval(&z).unwrap();
                assert!((a - b).norm() < 1e-8);
            }
        }
    }

    #[test]
    fn transfer_values_are_contractive_for_unitary_colligations() {
        let mut rng = Rng::new(55);
        let dims = vec![1, 2];
        let u = random_unitary(4, &mut rng);
        let r = Realization::new(dims, u).unwrap();
        for _ in 0..200 {
            let z = rng.polydisk(2, 0.999);
            let v = r.transfer_eval(&z).unwrap();
            assert!(v.norm() <= 1.0 + 1e-10);
        }
    }

    #[test]
    fn empty_realization_is_constant() {
        let u = CMat::from_rows(&[vec![c(1.0)]]);
        let r = Realization::new(vec![], u).unwrap();
        assert_eq!(r.size(), 0);
        assert_eq!(r.transfer_eval(&[]).unwrap(), c(1.0));
        let (q, p) = r.to_rational();
        assert!(p.sub(&Poly::one(0)).max_abs() < 1e-15);
        assert!(q.sub(&Poly::one(0)).max_abs() < 1e-15);
    }

    #[test]
    fn stability_heuristic_flags_boundary_zero() {
        // p = 1 - z has a zero on the closed polydisk boundary
        let p = Poly::from_terms(
            1,
            [(MultiIndex::zeros(1), c(1.0)), (MultiIndex::new(vec![1]), c(-1.0))],
        );
        assert!(stability_min_abs(&p) < 0.4);
        // 3 - z1 - z2 - z3 is comfortably stable away from (1,1,1)-type points
        let t = trivar_p();
        assert!(stability_min_abs(&t) > 1e-8);
    }

    #[test]
    fn singular_transfer_eval_outside_disk() {
        // D = [[1]] (non-unitary test matrix): I - Dz singular at z = 1.
        let u = CMat::from_rows(&[vec![c(0.0), c(1.0)], vec![c(1.0), c(1.0)]]);
        let r = Realization::new(vec![1], u).unwrap();
        assert!(matches!(r.transfer_eval(&[c(1.0)]), Err(Error::SingularMatrix)));
    }
}
