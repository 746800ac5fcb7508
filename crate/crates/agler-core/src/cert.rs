//! Sums-of-squares certificates for `|p|² − |q|² = Σ_j (1 − |z_j|²)|F_j|²`.
//!
//! A certificate stores one vector polynomial per variable; the square count
//! `N_j` of face `j` is the vector dimension of `F_j`. Verification reduces
//! the identity to an exact coefficient computation on Hermitian forms, so
//! exact-mode certificates verify with residual exactly zero.

use alloc::vec::Vec;

use num_complex::Complex64;
// f64 math methods come from core when std is linked (tests) and from
// num-traits/libm in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;


use crate::error::{Error, Result};
use crate::form::{gram, mod2_diff, HermitianForm};
use crate::linalg::{hermitian_eig, CMat};
use crate::poly::{MultiIndex, Poly, VecPoly};
use crate::scalar::Coeff;

/// Relative eigenvalue cut for numerical rank decisions.
pub const RANK_TOL: f64 = 1e-10;

#[derive(Clone, PartialEq, Debug)]
pub struct SosCertificate<C: Coeff> {
    nvars: usize,
    faces: Vec<VecPoly<C>>,
}

impl<C: Coeff> SosCertificate<C> {
    /// One face per variable; every face must live in `faces.len()` variables.
    /// Faces of dimension zero are allowed and mean `N_j = 0`.
    pub fn new(faces: Vec<VecPoly<C>>) -> Result<Self> {
        let nvars = faces.len();
        for f in &faces {
            if f.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: f.nvars() });
            }
        }
        Ok(SosCertificate { nvars, faces })
    }

    /// The certificate with every face empty.
    pub fn empty(nvars: usize) -> Self {
        SosCertificate {
            nvars,
            faces: (0..nvars).map(|_| VecPoly::zero(nvars, 0)).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn faces(&self) -> &[VecPoly<C>] {
        &self.faces
    }

    pub fn face(&self, j: usize) -> &VecPoly<C> {
        &self.faces[j]
    }

    /// Square counts `(N_1, …, N_n)`.
    pub fn counts(&self) -> Vec<usize> {
        self.faces.iter().map(VecPoly::dim).collect()
    }

    pub fn total_count(&self) -> usize {
        self.faces.iter().map(VecPoly::dim).sum()
    }

    pub fn to_c64(&self) -> SosCertificate<Complex64> {
        SosCertificate {
            nvars: self.nvars,
            faces: self.faces.iter().map(VecPoly::to_c64).collect(),
        }
    }

    /// Certificate for the amplified function `f(z_var^m, z')`: face `var`
    /// becomes the stack `z_var^i · F_var(z_var^m, z')` for `i < m` (using
    /// `1 − |z|^{2m} = (1 − |z|²) Σ_{i<m} |z|^{2i}`), the other faces are
    /// amplified in place.
    pub fn amplify(&self, var: usize, m: u32) -> Self {
        assert!(var < self.nvars && m >= 1);
        let faces = self
            .faces
            .iter()
            .enumerate()
            .map(|(j, f)| {
                let amp = f.amplify(var, m);
                if j != var || m == 1 {
                    return amp;
                }
                let comps: Vec<Poly<C>> = (0..m)
                    .flat_map(|i| amp.shift(var, i).components())
                    .collect();
                VecPoly::from_components(self.nvars, &comps)
            })
            .collect();
        SosCertificate { nvars: self.nvars, faces }
    }
}

impl SosCertificate<Complex64> {
    /// Drops linearly dependent components of every face, preserving each
    /// Gram kernel (and hence the verification residual) up to roundoff.
    pub fn trim(&self) -> Self {
        let faces = self
            .faces
            .iter()
            .map(|f| {
                if f.dim() == 0 || f.is_zero() {
                    return VecPoly::zero(self.nvars, 0);
                }
                gram_factor(&gram(f)).expect("gram of a vector polynomial is PSD")
            })
            .collect();
        SosCertificate { nvars: self.nvars, faces }
    }
}

/// Factors a PSD Hermitian form as `⟨V(z), V(ζ)⟩` with `dim V` equal to the
/// numerical rank. Eigenvalues in `(-RANK_TOL·λmax, 0)` are clamped to zero;
/// anything lower is a hard [`Error::NotPsd`].
pub fn gram_factor(form: &HermitianForm<Complex64>) -> Result<VecPoly<Complex64>> {
    let n = form.dim();
    if n == 0 {
        return Ok(VecPoly::zero(form.nvars(), 0));
    }
    let h = CMat::from_fn(n, n, |i, j| *form.entry(i, j));
    let (lam, v) = hermitian_eig(&h);
    let lam_max = lam.iter().fold(0.0_f64, |a, &b| a.max(b)).max(0.0);
    let threshold = RANK_TOL * lam_max.max(1e-300);
    if let Some(&worst) = lam.first() {
        if worst < -threshold {
            return Err(Error::NotPsd { eigenvalue: worst, threshold });
        }
    }
    // keep eigenpairs above the rank cut, largest first for determinism
    let kept: Vec<usize> = (0..n).rev().filter(|&i| lam[i] > threshold).collect();
    let dim = kept.len();
    let mut out = VecPoly::zero(form.nvars(), dim);
    for (col, alpha) in form.basis().iter().enumerate() {
        // row i of Y = sqrt(λ_i) · conj(V[col, i]); entry (i, α) gives V_{i,α}
        let coeffs: Vec<Complex64> = kept
            .iter()
            .map(|&i| lam[i].sqrt() * v[(col, i)].conj())
            .collect();
        out.insert_add(alpha.clone(), &coeffs);
    }
    Ok(out)
}

/// Max coefficient magnitude of `mod2_diff(p, q) − Σ_j (1 − z_jζ̄_j)K_j`.
/// Zero means the certificate is a valid decomposition of `q/p`.
pub fn verify_decomposition<C: Coeff>(p: &Poly<C>, q: &Poly<C>, cert: &SosCertificate<C>) -> f64 {
    mod2_diff(p, q).subtract_sos(cert).max_abs()
}

#[derive(Clone, Debug)]
pub struct FaceDegreeReport {
    pub face: usize,
    /// `multidegree(F_j) ≤ d − e_j` componentwise.
    pub degree_ok: bool,
    /// First violating exponent vector, if any.
    pub violating: Option<MultiIndex>,
    pub count: usize,
    pub count_bound: usize,
    pub count_ok: bool,
}

impl FaceDegreeReport {
    pub fn pass(&self) -> bool {
        self.degree_ok && self.count_ok
    }
}

#[derive(Clone, Debug)]
pub struct DegreeReport {
    pub faces: Vec<FaceDegreeReport>,
}

impl DegreeReport {
    pub fn pass(&self) -> bool {
        self.faces.iter().all(FaceDegreeReport::pass)
    }
}

/// Checks `multidegree(F_j) ≤ d − e_j` and `N_j ≤ d_j · Π_{k≠j}(d_k + 1)`
/// for every face.
pub fn check_degree_bounds<C: Coeff>(cert: &SosCertificate<C>, d: &MultiIndex) -> DegreeReport {
    assert_eq!(d.len(), cert.nvars(), "degree vector length mismatch");
    let faces = cert
        .faces()
        .iter()
        .enumerate()
        .map(|(j, f)| {
            let mut degree_ok = true;
            let mut violating = None;
            for idx in f.support() {
                let ok = (0..d.len()).all(|i| {
                    let bound = if i == j {
                        d.get(i).checked_sub(1)
                    } else {
                        Some(d.get(i))
                    };
                    bound.is_some_and(|b| idx.get(i) <= b)
                });
                if !ok {
                    degree_ok = false;
                    violating = Some(idx.clone());
                    break;
                }
            }
            let count_bound = d.get(j) as usize
                * (0..d.len())
                    .filter(|&k| k != j)
                    .map(|k| d.get(k) as usize + 1)
                    .product::<usize>();
            let count = f.dim();
            FaceDegreeReport {
                face: j,
                degree_ok,
                violating,
                count,
                count_bound,
                count_ok: count <= count_bound,
            }
        })
        .collect();
    DegreeReport { faces }
}

/// Coefficient lists (in powers of `s = |t|²`) of the two sides of the
/// radial identity: the left side `Σ_α s^{|α|}(|p_α|² − |q_α|²)` and the
/// unfactored sum `Σ_j Σ_α |F_{j,α}|² s^{|α|}` (the right side is `(1−s)`
/// times the latter).
pub fn radial_sides<C: Coeff>(
    p: &Poly<C>,
    q: &Poly<C>,
    cert: &SosCertificate<C>,
) -> (Vec<C>, Vec<C>) {
    let push = |acc: &mut Vec<C>, deg: usize, v: C| {
        if acc.len() <= deg {
            acc.resize(deg + 1, C::zero());
        }
        acc[deg] = acc[deg].add(&v);
    };
    let mut lhs: Vec<C> = Vec::new();
    for (idx, c) in p.terms() {
        push(&mut lhs, idx.total_degree() as usize, c.mul(&c.conj()));
    }
    for (idx, c) in q.terms() {
        push(&mut lhs, idx.total_degree() as usize, c.mul(&c.conj()).neg());
    }
    let mut sum: Vec<C> = Vec::new();
    for f in cert.faces() {
        for (idx, v) in f.terms() {
            let norm_sq = v
                .iter()
                .fold(C::zero(), |acc, c| acc.add(&c.mul(&c.conj())));
            push(&mut sum, idx.total_degree() as usize, norm_sq);
        }
    }
    (lhs, sum)
}

/// Residual of the radial identity `LHS(s) = (1 − s)·RHS(s)` as exact
/// coefficient comparison; 0 whenever the full decomposition verifies.
pub fn radial_check<C: Coeff>(p: &Poly<C>, q: &Poly<C>, cert: &SosCertificate<C>) -> f64 {
    let (lhs, sum) = radial_sides(p, q, cert);
    let deg = lhs.len().max(sum.len() + 1);
    let mut worst = 0.0_f64;
    for k in 0..deg {
        let l = lhs.get(k).cloned().unwrap_or_else(C::zero);
        let r0 = sum.get(k).cloned().unwrap_or_else(C::zero);
        let r1 = if k > 0 {
            sum.get(k - 1).cloned().unwrap_or_else(C::zero)
        } else {
            C::zero()
        };
        worst = worst.max(l.sub(&r0.sub(&r1)).magnitude());
    }
    worst
}
