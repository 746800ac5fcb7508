//! Hermitian forms `m(ζ)* H m(z)` over monomial bases.
//!
//! A form stores a finite basis of multi-indices and a Hermitian matrix `H`;
//! its value is `Σ_{α,β} H[β,α] z^α ζ̄^β`. The kernel `p(z)p̄(ζ) − q(z)q̄(ζ)`
//! and Gram kernels `⟨F(z), F(ζ)⟩` are built here, together with the torus
//! restriction `z^α ζ̄^β ↦ z^{α−β}` and the face extraction used by the
//! realization-size lower bound.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, MultiIndex, Poly, VecPoly};
use crate::scalar::Coeff;

/// Relative coefficient tolerance for float-mode comparisons.
pub const FORM_TOL: f64 = 1e-11;

#[derive(Clone, PartialEq, Debug)]
pub struct HermitianForm<C: Coeff> {
    nvars: usize,
    basis: Vec<MultiIndex>,
    /// Row-major `H[β-row][α-col]`, dimension `basis.len()`².
    h: Vec<C>,
}

impl<C: Coeff> HermitianForm<C> {
    pub fn zero(nvars: usize) -> Self {
        HermitianForm { nvars, basis: Vec::new(), h: Vec::new() }
    }

    /// Builds a form from a sorted, duplicate-free basis and an entry function.
    pub fn from_fn(
        nvars: usize,
        basis: Vec<MultiIndex>,
        mut f: impl FnMut(usize, usize) -> C,
    ) -> Self {
        let n = basis.len();
        let mut h = Vec::with_capacity(n * n);
        for row in 0..n {
            for col in 0..n {
                h.push(f(row, col));
            }
        }
        HermitianForm { nvars, basis, h }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> &[MultiIndex] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &C {
        &self.h[row * self.basis.len() + col]
    }

    fn entry_mut(&mut self, row: usize, col: usize) -> &mut C {
        &mut self.h[row * self.basis.len() + col]
    }

    pub fn coeff_at(&self, beta: &MultiIndex, alpha: &MultiIndex) -> C {
        match (self.position(beta), self.position(alpha)) {
            (Some(r), Some(c)) => self.entry(r, c).clone(),
            _ => C::zero(),
        }
    }

    fn position(&self, idx: &MultiIndex) -> Option<usize> {
        self.basis.binary_search(idx).ok()
    }

    /// Form value `Σ H[β,α] z^α conj(ζ^β)`.
    pub fn value(&self, z: &[C], zeta: &[C]) -> C {
        assert_eq!(z.len(), self.nvars);
        assert_eq!(zeta.len(), self.nvars);
        let mz: Vec<C> = self.basis.iter().map(|i| eval_monomial(i, z)).collect();
        let mzeta: Vec<C> = self
            .basis
            .iter()
            .map(|i| eval_monomial(i, zeta).conj())
            .collect();
        let mut acc = C::zero();
        for (row, wb) in mzeta.iter().enumerate() {
            for (col, wa) in mz.iter().enumerate() {
                acc = acc.add(&self.entry(row, col).mul(wa).mul(wb));
            }
        }
        acc
    }

    /// Value at `(z, z)`: the real quadratic form `|...|²` combination.
    pub fn value_diag(&self, z: &[C]) -> C {
        self.value(z, z)
    }

    /// Max deviation of `H` from its own adjoint.
    pub fn hermitian_error(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for r in 0..n {
            for c in 0..n {
                let d = self.entry(r, c).sub(&self.entry(c, r).conj()).magnitude();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.h.iter().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().all(|c| c.is_zero())
    }

    /// Re-expresses the form on the union of its basis with `extra`
    /// (zero-padding new rows/columns). Useful for Gram searches over a
    /// full degree box.
    pub fn extend_basis(&self, extra: &[MultiIndex]) -> Self {
        let mut basis = self.basis.clone();
        for idx in extra {
            assert_eq!(idx.len(), self.nvars);
            if basis.binary_search(idx).is_err() {
                basis.push(idx.clone());
            }
        }
        basis.sort();
        basis.dedup();
        let out = HermitianForm::from_fn(self.nvars, basis, |_, _| C::zero());
        let mut out = out;
        for (r, beta) in self.basis.iter().enumerate() {
            let nr = out.position(beta).unwrap();
            for (c, alpha) in self.basis.iter().enumerate() {
                let nc = out.position(alpha).unwrap();
                *out.entry_mut(nr, nc) = self.entry(r, c).clone();
            }
        }
        out
    }

    /// Adds `scale ·` a kernel contribution at shifted indices:
    /// `H[β+shift, α+shift] += scale · K[β, α]` for every entry of `k`.
    fn accumulate_shifted(&mut self, k: &HermitianForm<C>, shift: Option<usize>, negate: bool) {
        for (r, beta) in k.basis.iter().enumerate() {
            let beta_s = match shift {
                Some(v) => beta.add(&MultiIndex::unit(self.nvars, v)),
                None => beta.clone(),
            };
            let nr = self.position(&beta_s).expect("basis must cover shifts");
            for (c, alpha) in k.basis.iter().enumerate() {
                let alpha_s = match shift {
                    Some(v) => alpha.add(&MultiIndex::unit(self.nvars, v)),
                    None => alpha.clone(),
                };
                let nc = self.position(&alpha_s).expect("basis must cover shifts");
                let add = if negate {
                    k.entry(r, c).neg()
                } else {
                    k.entry(r, c).clone()
                };
                let cur = self.entry(nr, nc).clone();
                *self.entry_mut(nr, nc) = cur.add(&add);
            }
        }
    }

    /// `self − Σ_j (1 − z_j ζ̄_j) ⟨F_j(z), F_j(ζ)⟩` on the merged basis.
    pub fn subtract_sos(&self, cert: &crate::cert::SosCertificate<C>) -> Self {
        assert_eq!(self.nvars, cert.nvars(), "variable count mismatch");
        let grams: Vec<HermitianForm<C>> = cert.faces().iter().map(gram).collect();
        let mut basis = self.basis.clone();
        for (j, g) in grams.iter().enumerate() {
            for idx in &g.basis {
                basis.push(idx.clone());
                basis.push(idx.add(&MultiIndex::unit(self.nvars, j)));
            }
        }
        basis.sort();
        basis.dedup();
        let mut out = HermitianForm::from_fn(self.nvars, basis, |_, _| C::zero());
        out.accumulate_shifted(self, None, false);
        for (j, g) in grams.iter().enumerate() {
            out.accumulate_shifted(g, None, true); // − K_j
            out.accumulate_shifted(g, Some(j), false); // + z_j ζ̄_j K_j
        }
        out
    }

    /// Laurent trace of the form on the torus: `c(γ) = Σ_{α−β=γ} H[β,α]`.
    pub fn torus_restrict(&self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero(self.nvars);
        for (r, beta) in self.basis.iter().enumerate() {
            for (c, alpha) in self.basis.iter().enumerate() {
                let gamma: Vec<i32> = alpha
                    .exps()
                    .iter()
                    .zip(beta.exps())
                    .map(|(a, b)| *a as i32 - *b as i32)
                    .collect();
                out.insert_add(gamma, self.entry(r, c).clone());
            }
        }
        out
    }

    pub fn to_c64(&self) -> HermitianForm<Complex64> {
        HermitianForm {
            nvars: self.nvars,
            basis: self.basis.clone(),
            h: self.h.iter().map(|c| c.to_c64()).collect(),
        }
    }
}

fn eval_monomial<C: Coeff>(idx: &MultiIndex, z: &[C]) -> C {
    let mut acc = C::one();
    for (v, &e) in z.iter().zip(idx.exps()) {
        for _ in 0..e {
            acc = acc.mul(v);
        }
    }
    acc
}

/// The kernel `p(z)p̄(ζ) − q(z)q̄(ζ)` on the union of the supports of `p`
/// and `q`.
pub fn mod2_diff<C: Coeff>(p: &Poly<C>, q: &Poly<C>) -> HermitianForm<C> {
    assert_eq!(p.nvars(), q.nvars(), "variable count mismatch");
    let mut basis: Vec<MultiIndex> = p.support().cloned().collect();
    basis.extend(q.support().cloned());
    basis.sort();
    basis.dedup();
    let b = basis.clone();
    HermitianForm::from_fn(p.nvars(), basis, |row, col| {
        let alpha = &b[col];
        let beta = &b[row];
        p.coeff(alpha)
            .mul(&p.coeff(beta).conj())
            .sub(&q.coeff(alpha).mul(&q.coeff(beta).conj()))
    })
}

/// Gram kernel `⟨V(z), V(ζ)⟩ = Σ_i V_i(z) V̄_i(ζ)` of a vector polynomial.
pub fn gram<C: Coeff>(v: &VecPoly<C>) -> HermitianForm<C> {
    let basis: Vec<MultiIndex> = v.support().cloned().collect();
    let b = basis.clone();
    HermitianForm::from_fn(v.nvars(), basis, |row, col| {
        let va = v.coeff_vec(&b[col]);
        let vb = v.coeff_vec(&b[row]);
        va.iter()
            .zip(&vb)
            .fold(C::zero(), |acc, (a, bb)| acc.add(&a.mul(&bb.conj())))
    })
}

/// Torus Laurent data of `f(z') conj(g(z'))`: `Σ f_α ḡ_β z'^{α−β}`.
fn laurent_pair<C: Coeff>(f: &Poly<C>, g: &Poly<C>) -> LaurentPoly<C> {
    let mut out = LaurentPoly::zero(f.nvars());
    for (alpha, fa) in f.terms() {
        for (beta, gb) in g.terms() {
            let gamma: Vec<i32> = alpha
                .exps()
                .iter()
                .zip(beta.exps())
                .map(|(a, b)| *a as i32 - *b as i32)
                .collect();
            out.insert_add(gamma, fa.mul(&gb.conj()));
        }
    }
    out
}

/// Extracts the face data `SOS_j` of `|p|² − |q|²`: restricts all variables
/// but `z_j` to the torus and divides by `1 − |z_j|²`.
///
/// Writing `p = p₀(z') + p₁(z') z_j` (degree in `z_j` at most 1 required),
/// the restriction is `A(z') + 2Re(B(z') z_j) + C(z') |z_j|²`; inner-ness
/// forces `B = 0` and `A + C = 0`, and the face data is `A`. Violations
/// return [`Error::FaceNotFactorable`].
pub fn face_extract<C: Coeff>(p: &Poly<C>, q: &Poly<C>, var: usize) -> Result<LaurentPoly<C>> {
    assert_eq!(p.nvars(), q.nvars(), "variable count mismatch");
    assert!(var < p.nvars(), "variable index out of range");
    for (name, poly) in [("p", p), ("q", q)] {
        let d = poly.degree_in(var);
        if d > 1 {
            let _ = name;
            return Err(Error::UnsupportedDegree { variable: var, degree: d });
        }
    }
    let p0 = p.coeff_of_var_power(var, 0).drop_var(var);
    let p1 = p.coeff_of_var_power(var, 1).drop_var(var);
    let q0 = q.coeff_of_var_power(var, 0).drop_var(var);
    let q1 = q.coeff_of_var_power(var, 1).drop_var(var);

    let a = laurent_pair(&p0, &p0).sub(&laurent_pair(&q0, &q0));
    let b = laurent_pair(&p1, &p0).sub(&laurent_pair(&q1, &q0));
    let c = laurent_pair(&p1, &p1).sub(&laurent_pair(&q1, &q1));

    let scale = {
        let m = p.max_abs().max(q.max_abs());
        (m * m).max(1.0)
    };
    let cross = b.max_abs();
    if cross > FORM_TOL * scale {
        return Err(Error::FaceNotFactorable { max_violation: cross });
    }
    let mismatch = a.add(&c).max_abs();
    if mismatch > FORM_TOL * scale {
        return Err(Error::FaceNotFactorable { max_violation: mismatch });
    }
    Ok(a)
}
