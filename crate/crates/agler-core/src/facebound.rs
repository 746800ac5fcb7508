//! Minimal square counts for degree-(1,1) torus data.
//!
//! A face of a degree-(1,…,1) rational inner function restricts to a real
//! trigonometric polynomial on 𝕋² with spectrum in {−1,0,1}². Matching it by
//! a single square `|a + bz + cw + dzw|²` imposes five coefficient equations;
//! [`single_square_feasible`] decides them by closed-form case analysis
//! (branching on which of `a·d = c11` and `b·c̄ = c1m1` force a vanishing
//! coefficient) and cross-checks with a seeded multi-start
//! Levenberg-Marquardt search. Faces that cannot be a single square need at
//! least two, which is what [`size_lower_bound`] accumulates.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
// f64 math methods come from core when std is linked (tests) and from
// num-traits/libm in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;


use crate::error::{Error, Result};
use crate::form::face_extract;
use crate::poly::{LaurentPoly, MultiIndex, Poly};
use crate::rng::Rng;

type C64 = Complex64;

/// Relative zero-classification tolerance for input data.
const DATA_TOL: f64 = 1e-9;
/// Relative residual below which a candidate witness is accepted.
const WITNESS_TOL: f64 = 1e-8;
/// Default number of random starts per square count.
pub const DEFAULT_STARTS: usize = 1000;
pub const DEFAULT_SEED: u64 = 0xFACE;

/// Coefficients of `a + bz + cw + dzw`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SquareAnsatz {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl SquareAnsatz {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        SquareAnsatz { a, b, c, d }
    }

    pub fn zero() -> Self {
        let z = C64::new(0.0, 0.0);
        SquareAnsatz::new(z, z, z, z)
    }

    /// The polynomial `a + bz + cw + dzw` (for expansion oracles).
    pub fn as_poly(&self) -> Poly<C64> {
        Poly::from_terms(
            2,
            [
                (MultiIndex::zeros(2), self.a),
                (MultiIndex::new(vec![1, 0]), self.b),
                (MultiIndex::new(vec![0, 1]), self.c),
                (MultiIndex::new(vec![1, 1]), self.d),
            ],
        )
    }
}

/// Fourier data of a real trigonometric polynomial on 𝕋² with spectrum in
/// {−1,0,1}²: `c00 + 2Re(c10 z) + 2Re(c01 w) + 2Re(c11 zw) + 2Re(c1m1 zw̄)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FaceData {
    pub c00: f64,
    pub c10: C64,
    pub c01: C64,
    pub c11: C64,
    pub c1m1: C64,
}

impl FaceData {
    pub fn new(c00: f64, c10: C64, c01: C64, c11: C64, c1m1: C64) -> Self {
        FaceData { c00, c10, c01, c11, c1m1 }
    }

    pub fn zero() -> Self {
        let z = C64::new(0.0, 0.0);
        FaceData::new(0.0, z, z, z, z)
    }

    /// Reads face data off a Laurent polynomial in 0, 1, or 2 variables.
    /// Conjugate symmetry is required; exponents outside {−1,0,1}² are
    /// rejected (they violate the degree hypothesis).
    pub fn from_laurent(lp: &LaurentPoly<C64>) -> Result<Self> {
        let scale = lp.max_abs().max(1.0);
        if !lp.is_conjugate_symmetric(DATA_TOL * scale) {
            return Err(Error::InvalidData {
                reason: alloc::string::String::from("face data not conjugate-symmetric"),
            });
        }
        let mut data = FaceData::zero();
        for (exp, coeff) in lp.terms() {
            if exp.iter().any(|e| e.abs() > 1) {
                return Err(Error::InvalidData {
                    reason: alloc::format!("face exponent {exp:?} outside {{-1,0,1}}"),
                });
            }
            let key: Vec<i32> = match lp.nvars() {
                0 => vec![0, 0],
                1 => vec![exp[0], 0],
                2 => exp.clone(),
                n => {
                    return Err(Error::DimensionMismatch { expected: 2, found: n });
                }
            };
            match (key[0], key[1]) {
                (0, 0) => data.c00 = coeff.re,
                (1, 0) => data.c10 = *coeff,
                (0, 1) => data.c01 = *coeff,
                (1, 1) => data.c11 = *coeff,
                (1, -1) => data.c1m1 = *coeff,
                _ => {} // conjugate partners carry no extra information
            }
        }
        Ok(data)
    }

    pub fn scaled(&self, lambda: f64) -> Self {
        FaceData::new(
            self.c00 * lambda,
            self.c10 * lambda,
            self.c01 * lambda,
            self.c11 * lambda,
            self.c1m1 * lambda,
        )
    }

    /// The two-variable Laurent polynomial with this Fourier data (conjugate
    /// partners included); inverse of [`FaceData::from_laurent`].
    pub fn to_laurent(&self) -> LaurentPoly<C64> {
        let mut out = LaurentPoly::zero(2);
        out.insert_add(vec![0, 0], C64::new(self.c00, 0.0));
        for (exp, c) in [
            ([1, 0], self.c10),
            ([0, 1], self.c01),
            ([1, 1], self.c11),
            ([1, -1], self.c1m1),
        ] {
            out.insert_add(exp.to_vec(), c);
            out.insert_add(vec![-exp[0], -exp[1]], c.conj());
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        [self.c10.norm(), self.c01.norm(), self.c11.norm(), self.c1m1.norm()]
            .into_iter()
            .fold(self.c00.abs(), f64::max)
    }

    fn sub(&self, rhs: &FaceData) -> FaceData {
        FaceData::new(
            self.c00 - rhs.c00,
            self.c10 - rhs.c10,
            self.c01 - rhs.c01,
            self.c11 - rhs.c11,
            self.c1m1 - rhs.c1m1,
        )
    }

    /// Max-abs coefficient mismatch against `Σ_i |ansatz_i|²` on the torus.
    pub fn residual_to(&self, squares: &[SquareAnsatz]) -> f64 {
        self.sub(&ansatz_coeffs(squares)).max_abs()
    }

    pub fn is_negligible(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }
}

/// Torus Fourier coefficients of `Σ_i |a_i + b_i z + c_i w + d_i zw|²`:
/// `c00 = Σ|a|²+|b|²+|c|²+|d|²`, `c10 = Σ āb + c̄d`, `c01 = Σ āc + b̄d`,
/// `c11 = Σ ād`, `c1m1 = Σ bc̄`.
pub fn ansatz_coeffs(squares: &[SquareAnsatz]) -> FaceData {
    let mut data = FaceData::zero();
    for s in squares {
        data.c00 += s.a.norm_sqr() + s.b.norm_sqr() + s.c.norm_sqr() + s.d.norm_sqr();
        data.c10 += s.a.conj() * s.b + s.c.conj() * s.d;
        data.c01 += s.a.conj() * s.c + s.b.conj() * s.d;
        data.c11 += s.a.conj() * s.d;
        data.c1m1 += s.b * s.c.conj();
    }
    data
}

/// Outcome of one branch of the exact case analysis. When the branch is
/// infeasible, `required` vs `achievable` are the two sides of the equation
/// that could not be met (for the bundled face data: 3 vs √8).
#[derive(Clone, Debug)]
pub struct BranchReport {
    pub label: &'static str,
    pub feasible: bool,
    pub witness: Option<SquareAnsatz>,
    pub required: f64,
    pub achievable: f64,
}

#[derive(Clone, Debug)]
pub struct SingleSquareReport {
    /// Final verdict (exact analysis, confirmed by the numeric cross-check).
    pub feasible: bool,
    pub witness: Option<SquareAnsatz>,
    /// Verdict of the closed-form case analysis alone.
    pub exact_feasible: bool,
    pub branches: Vec<BranchReport>,
    /// Best residual of the multi-start rank-1 search.
    pub numeric_best_residual: f64,
    pub numeric_best: SquareAnsatz,
}

fn verified(data: &FaceData, candidate: SquareAnsatz, tol: f64) -> Option<SquareAnsatz> {
    (data.residual_to(&[candidate]) <= tol).then_some(candidate)
}

/// Branch `d = 0`: solve `āb = c10`, `āc = c01`, `bc̄ = c1m1`,
/// `|a|² + |b|² + |c|² = c00`.
fn branch_d_zero(data: &FaceData, tol: f64, vtol: f64) -> BranchReport {
    let label = "d = 0";
    let z = C64::new(0.0, 0.0);
    // a = 0 corner requires c10 = c01 = 0
    if data.c10.norm() <= tol && data.c01.norm() <= tol {
        let disc = data.c00 * data.c00 - 4.0 * data.c1m1.norm_sqr();
        if data.c00 >= 0.0 && disc >= -tol * tol {
            let bb = (data.c00 + disc.max(0.0).sqrt()) / 2.0;
            let b = C64::new(bb.sqrt(), 0.0);
            let c = if bb > 0.0 { data.c1m1.conj() / b } else { z };
            if let Some(w) = verified(data, SquareAnsatz::new(z, b, c, z), vtol) {
                return BranchReport { label, feasible: true, witness: Some(w), required: 0.0, achievable: 0.0 };
            }
        }
    }
    // a ≠ 0: gauge a = √u > 0, then b = c10/√u, c = c01/√u.
    let ten = data.c10.norm_sqr() + data.c01.norm_sqr();
    let candidate_u = if data.c1m1.norm() > tol {
        // bc̄ = c10·c̄01 / u = c1m1 pins u
        let w = data.c10 * data.c01.conj() / data.c1m1;
        (w.im.abs() <= tol * (1.0 + w.norm()) && w.re > tol * tol).then_some(w.re)
    } else if data.c10.norm() <= tol || data.c01.norm() <= tol {
        // bc̄ = 0 automatically; the norm equation picks u
        let disc = data.c00 * data.c00 - 4.0 * ten;
        (data.c00 > 0.0 && disc >= -tol * tol).then(|| (data.c00 + disc.max(0.0).sqrt()) / 2.0)
    } else {
        None
    };
    if let Some(u) = candidate_u {
        if u > 0.0 {
            let t = u.sqrt();
            let cand = SquareAnsatz::new(C64::new(t, 0.0), data.c10 / t, data.c01 / t, z);
            if let Some(w) = verified(data, cand, vtol) {
                return BranchReport { label, feasible: true, witness: Some(w), required: 0.0, achievable: 0.0 };
            }
            // The norm equation failed: report the contradiction in the
            // magnitudes the remaining product equation would need.
            let b_abs = data.c10.norm() / t;
            let c_abs = data.c01.norm() / t;
            let a_sq_from_norm = data.c00 - b_abs * b_abs - c_abs * c_abs;
            return BranchReport {
                label,
                feasible: false,
                witness: None,
                required: data.c10.norm(),
                achievable: a_sq_from_norm.max(0.0).sqrt() * b_abs,
            };
        }
    }
    BranchReport {
        label,
        feasible: false,
        witness: None,
        required: data.c10.norm().max(data.c01.norm()),
        achievable: 0.0,
    }
}

/// Branch `a = 0`: solve `c̄d = c10`, `b̄d = c01`, `bc̄ = c1m1`,
/// `|b|² + |c|² + |d|² = c00`.
fn branch_a_zero(data: &FaceData, tol: f64, vtol: f64) -> BranchReport {
    let label = "a = 0";
    let z = C64::new(0.0, 0.0);
    let ten = data.c10.norm_sqr() + data.c01.norm_sqr();
    // d ≠ 0: gauge d = √u > 0, then c = c̄10/√u, b = c̄01/√u.
    let candidate_u = if data.c1m1.norm() > tol {
        // bc̄ = c̄01·c10 / u = c1m1 pins u
        let w = data.c01.conj() * data.c10 / data.c1m1;
        (w.im.abs() <= tol * (1.0 + w.norm()) && w.re > tol * tol).then_some(w.re)
    } else if data.c10.norm() <= tol || data.c01.norm() <= tol {
        let disc = data.c00 * data.c00 - 4.0 * ten;
        (data.c00 > 0.0 && disc >= -tol * tol).then(|| (data.c00 + disc.max(0.0).sqrt()) / 2.0)
    } else {
        None
    };
    if let Some(u) = candidate_u {
        if u > 0.0 {
            let t = u.sqrt();
            let cand =
                SquareAnsatz::new(z, data.c01.conj() / t, data.c10.conj() / t, C64::new(t, 0.0));
            if let Some(w) = verified(data, cand, vtol) {
                return BranchReport { label, feasible: true, witness: Some(w), required: 0.0, achievable: 0.0 };
            }
            let b_abs = data.c01.norm() / t;
            let c_abs = data.c10.norm() / t;
            let d_sq_from_norm = data.c00 - b_abs * b_abs - c_abs * c_abs;
            return BranchReport {
                label,
                feasible: false,
                witness: None,
                required: data.c10.norm(),
                achievable: d_sq_from_norm.max(0.0).sqrt() * c_abs,
            };
        }
    }
    BranchReport {
        label,
        feasible: false,
        witness: None,
        required: data.c10.norm().max(data.c01.norm()),
        achievable: 0.0,
    }
}

/// Branch `b = 0` (for `c11 ≠ 0`, `c1m1 = 0`): `c̄d = c10`, `āc = c01`,
/// `ād = c11`, `|a|² + |c|² + |d|² = c00`.
fn branch_b_zero(data: &FaceData, tol: f64, vtol: f64) -> BranchReport {
    let label = "b = 0";
    let z = C64::new(0.0, 0.0);
    let candidate_u = if data.c10.norm() > tol {
        let w = data.c01.conj() * data.c11 / data.c10;
        (w.im.abs() <= tol * (1.0 + w.norm()) && w.re > tol * tol).then_some(w.re)
    } else if data.c01.norm() <= tol {
        let sum = data.c01.norm_sqr() + data.c11.norm_sqr();
        let disc = data.c00 * data.c00 - 4.0 * sum;
        (data.c00 > 0.0 && disc >= -tol * tol).then(|| (data.c00 + disc.max(0.0).sqrt()) / 2.0)
    } else {
        None
    };
    if let Some(u) = candidate_u {
        if u > 0.0 {
            let t = u.sqrt();
            let cand =
                SquareAnsatz::new(C64::new(t, 0.0), z, data.c01 / t, data.c11 / t);
            if let Some(w) = verified(data, cand, vtol) {
                return BranchReport { label, feasible: true, witness: Some(w), required: 0.0, achievable: 0.0 };
            }
        }
    }
    BranchReport {
        label,
        feasible: false,
        witness: None,
        required: data.c10.norm(),
        achievable: 0.0,
    }
}

/// Branch `c = 0` (for `c11 ≠ 0`, `c1m1 = 0`): `āb = c10`, `b̄d = c01`,
/// `ād = c11`.
fn branch_c_zero(data: &FaceData, tol: f64, vtol: f64) -> BranchReport {
    let label = "c = 0";
    let z = C64::new(0.0, 0.0);
    let candidate_u = if data.c01.norm() > tol {
        let w = data.c10.conj() * data.c11 / data.c01;
        (w.im.abs() <= tol * (1.0 + w.norm()) && w.re > tol * tol).then_some(w.re)
    } else if data.c10.norm() <= tol {
        let sum = data.c10.norm_sqr() + data.c11.norm_sqr();
        let disc = data.c00 * data.c00 - 4.0 * sum;
        (data.c00 > 0.0 && disc >= -tol * tol).then(|| (data.c00 + disc.max(0.0).sqrt()) / 2.0)
    } else {
        None
    };
    if let Some(u) = candidate_u {
        if u > 0.0 {
            let t = u.sqrt();
            let cand =
                SquareAnsatz::new(C64::new(t, 0.0), data.c10 / t, z, data.c11 / t);
            if let Some(w) = verified(data, cand, vtol) {
                return BranchReport { label, feasible: true, witness: Some(w), required: 0.0, achievable: 0.0 };
            }
        }
    }
    BranchReport {
        label,
        feasible: false,
        witness: None,
        required: data.c01.norm(),
        achievable: 0.0,
    }
}

/// Real roots of a real-coefficient polynomial (`coeffs[i]` multiplies
/// `u^i`) on `[lo, hi]`. Sign changes are bisected; all critical points are
/// appended as candidates, so even-multiplicity (tangent) roots surface too.
/// Callers verify candidates, so spurious entries are harmless.
fn real_root_candidates(coeffs: &[f64], lo: f64, hi: f64, out: &mut Vec<f64>) {
    let mut deg = coeffs.len().saturating_sub(1);
    while deg > 0 && coeffs[deg] == 0.0 {
        deg -= 1;
    }
    if deg == 0 {
        return;
    }
    let eval = |u: f64| coeffs[..=deg].iter().rev().fold(0.0, |acc, c| acc * u + c);
    if deg == 1 {
        let r = -coeffs[0] / coeffs[1];
        if r.is_finite() && r >= lo && r <= hi {
            out.push(r);
        }
        return;
    }
    let deriv: Vec<f64> = (1..=deg).map(|i| coeffs[i] * i as f64).collect();
    let mut crit = Vec::new();
    real_root_candidates(&deriv, lo, hi, &mut crit);
    crit.retain(|c| c.is_finite());
    crit.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut pts = vec![lo];
    pts.extend(crit.iter().copied());
    pts.push(hi);
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b <= a {
            continue;
        }
        let (fa, fb) = (eval(a), eval(b));
        if fa == 0.0 {
            out.push(a);
        }
        if fa != 0.0 && fb != 0.0 && fa.signum() != fb.signum() {
            let (mut x0, mut x1, mut f0) = (a, b, fa);
            for _ in 0..100 {
                let mid = 0.5 * (x0 + x1);
                let fm = eval(mid);
                if fm == 0.0 || f0.signum() == fm.signum() {
                    x0 = mid;
                    f0 = fm;
                } else {
                    x1 = mid;
                }
                if f0 == 0.0 {
                    break;
                }
            }
            out.push(0.5 * (x0 + x1));
        }
    }
    if eval(hi) == 0.0 {
        out.push(hi);
    }
    out.extend(crit);
}

/// Generic branch (`c11 ≠ 0`, `c1m1 ≠ 0`): gauge `a = √u > 0`, eliminate
/// `d = c11/a` and the linear pair `(b, c̄)`; the norm equation becomes a
/// degree-6 polynomial in `u` whose positive roots give all candidates.
fn branch_generic(data: &FaceData, tol: f64, vtol: f64) -> BranchReport {
    let label = "a, d != 0";
    let k = data.c11.norm_sqr();
    let c10 = data.c10;
    let c01 = data.c01;
    let build = |u: f64| -> Option<SquareAnsatz> {
        if !u.is_finite() || u <= 0.0 {
            return None;
        }
        let den = u * u - k;
        if den.abs() <= f64::EPSILON * (u * u + k) {
            return None;
        }
        let t = u.sqrt();
        let b = (c10 * u - data.c11 * c01.conj()) * (t / den);
        let c = (c01 * u - data.c11 * c10.conj()) * (t / den);
        Some(SquareAnsatz::new(C64::new(t, 0.0), b, c, data.c11 / t))
    };
    // E2(u) = (u²+k)(u²−k)² + u²(|c10u − c11c̄01|² + |c01u − c11c̄10|²)
    //         − c00·u(u²−k)², expanded in powers of u:
    let s = c10.norm_sqr() + c01.norm_sqr();
    let x = (c10 * c01 * data.c11.conj()).re;
    let coeffs = [
        k * k * k,
        -k * k * data.c00,
        k * s - k * k,
        2.0 * k * data.c00 - 4.0 * x,
        s - k,
        -data.c00,
        1.0,
    ];
    // feasible u = |a|² satisfies u + k/u ≤ c00, so u lies in (0, c00]
    let u_hi = data.c00.max(tol);
    let mut candidates = Vec::new();
    real_root_candidates(&coeffs, u_hi * 1e-12, u_hi, &mut candidates);
    for u in candidates {
        if let Some(cand) = build(u) {
            if let Some(w) = verified(data, cand, vtol) {
                return BranchReport { label, feasible: true, witness: Some(w), required: 0.0, achievable: 0.0 };
            }
        }
    }
    // singular pencil u = |c11|: the linear system is consistent only when
    // c̄01 = (c̄11/u)·c10; then (b, c̄) has a one-complex-parameter family and
    // bc̄ = c1m1 is a solvable quadratic in the parameter.
    let u = k.sqrt();
    if u > tol {
        let t = u.sqrt();
        let consistency = (data.c01.conj() - data.c11.conj() / u * c10).norm();
        if consistency <= tol * (1.0 + data.max_abs()) {
            let b0 = c10 / t;
            let lead = data.c11 / u;
            // -lead·μ² + b0·μ - c1m1 = 0
            let disc = (b0 * b0 - 4.0 * lead * data.c1m1).sqrt();
            for mu in [(b0 + disc) / (2.0 * lead), (b0 - disc) / (2.0 * lead)] {
                let cand = SquareAnsatz::new(
                    C64::new(t, 0.0),
                    b0 - mu * lead,
                    mu.conj(),
                    data.c11 / t,
                );
                if let Some(w) = verified(data, cand, vtol) {
                    return BranchReport { label, feasible: true, witness: Some(w), required: 0.0, achievable: 0.0 };
                }
            }
        }
    }
    BranchReport {
        label,
        feasible: false,
        witness: None,
        required: data.c1m1.norm(),
        achievable: 0.0,
    }
}

/// Closed-form single-square decision with the default numeric cross-check.
pub fn single_square_feasible(data: &FaceData) -> SingleSquareReport {
    single_square_with(data, DEFAULT_STARTS, DEFAULT_SEED)
}

/// Closed-form single-square decision, cross-checked by `starts` seeded
/// Levenberg-Marquardt runs.
pub fn single_square_with(data: &FaceData, starts: usize, seed: u64) -> SingleSquareReport {
    let scale = data.max_abs().max(1.0);
    let tol = DATA_TOL * scale;
    let vtol = WITNESS_TOL * scale;

    let mut branches: Vec<BranchReport> = Vec::new();
    if data.c00 < -tol {
        branches.push(BranchReport {
            label: "c00 < 0",
            feasible: false,
            witness: None,
            required: 0.0,
            achievable: data.c00,
        });
    } else if data.is_negligible(tol) {
        branches.push(BranchReport {
            label: "zero data",
            feasible: true,
            witness: Some(SquareAnsatz::zero()),
            required: 0.0,
            achievable: 0.0,
        });
    } else if data.c11.norm() <= tol {
        // ād = 0: one of a, d vanishes (the bundled example's case split)
        branches.push(branch_d_zero(data, tol, vtol));
        branches.push(branch_a_zero(data, tol, vtol));
    } else if data.c1m1.norm() <= tol {
        // bc̄ = 0: one of b, c vanishes
        branches.push(branch_b_zero(data, tol, vtol));
        branches.push(branch_c_zero(data, tol, vtol));
    } else {
        branches.push(branch_generic(data, tol, vtol));
    }

    let witness = branches.iter().find_map(|b| b.witness);
    let exact_feasible = witness.is_some();
    let (numeric_best_residual, numeric_best) = rank1_search(data, starts, seed);
    // The exact analysis is authoritative; a verified numeric witness can
    // only ever add a "feasible", never remove one.
    let numeric_witness = (numeric_best_residual <= vtol).then_some(numeric_best);
    let feasible = exact_feasible || numeric_witness.is_some();
    SingleSquareReport {
        feasible,
        witness: witness.or(numeric_witness),
        exact_feasible,
        branches,
        numeric_best_residual,
        numeric_best,
    }
}

/// Multi-start rank-1 least-squares probe; returns the best max-abs
/// residual found and the ansatz achieving it.
pub fn rank1_search(data: &FaceData, starts: usize, seed: u64) -> (f64, SquareAnsatz) {
    let (res, sq) = multistart(data, 1, starts, seed);
    (res, sq[0])
}

#[derive(Clone, Debug)]
pub struct MinSquaresResult {
    /// Smallest count found, or `rmax + 1` when nothing matched.
    pub r: usize,
    pub witnesses: Vec<SquareAnsatz>,
    pub residual: f64,
}

/// Smallest `r ≤ rmax` such that `r` squares match the data within the
/// acceptance residual. `r = 1` is decided exactly; higher counts by the
/// seeded multi-start search.
pub fn min_squares(data: &FaceData, rmax: usize) -> MinSquaresResult {
    min_squares_with(data, rmax, DEFAULT_STARTS, DEFAULT_SEED)
}

pub fn min_squares_with(data: &FaceData, rmax: usize, starts: usize, seed: u64) -> MinSquaresResult {
    assert!(rmax >= 1);
    let scale = data.max_abs().max(1.0);
    let accept = WITNESS_TOL * scale;
    if data.is_negligible(DATA_TOL * scale) {
        return MinSquaresResult { r: 0, witnesses: Vec::new(), residual: 0.0 };
    }
    let single = single_square_with(data, starts, seed);
    if single.feasible {
        let w = single.witness.unwrap_or(single.numeric_best);
        let residual = data.residual_to(&[w]);
        return MinSquaresResult { r: 1, witnesses: vec![w], residual };
    }
    for r in 2..=rmax {
        let (res, squares) = multistart(data, r, starts, seed.wrapping_add(r as u64));
        if res <= accept {
            return MinSquaresResult { r, witnesses: squares, residual: res };
        }
    }
    MinSquaresResult { r: rmax + 1, witnesses: Vec::new(), residual: f64::INFINITY }
}

/// Multi-start Levenberg-Marquardt over `4r` complex parameters. Starts are
/// complex Gaussian scaled to `√(c00/4)` per coefficient; results merge
/// deterministically by (residual, start index).
fn multistart(data: &FaceData, r: usize, starts: usize, seed: u64) -> (f64, Vec<SquareAnsatz>) {
    let mut rng = Rng::new(seed);
    let init_scale = (data.c00.abs() / 4.0).sqrt().max(1e-3);
    let mut best_res = f64::INFINITY;
    let mut best: Vec<f64> = vec![0.0; 8 * r];
    for _ in 0..starts {
        let mut x: Vec<f64> = (0..8 * r).map(|_| rng.normal() * init_scale).collect();
        lm_fit(data, r, &mut x);
        let res = max_abs_residual(data, r, &x);
        if res < best_res {
            best_res = res;
            best.copy_from_slice(&x);
        }
    }
    (best_res, params_to_squares(r, &best))
}

fn params_to_squares(r: usize, x: &[f64]) -> Vec<SquareAnsatz> {
    (0..r)
        .map(|i| {
            let o = 8 * i;
            SquareAnsatz::new(
                C64::new(x[o], x[o + 1]),
                C64::new(x[o + 2], x[o + 3]),
                C64::new(x[o + 4], x[o + 5]),
                C64::new(x[o + 6], x[o + 7]),
            )
        })
        .collect()
}

fn max_abs_residual(data: &FaceData, r: usize, x: &[f64]) -> f64 {
    data.residual_to(&params_to_squares(r, x))
}

/// 9-component residual vector (constant coefficient, then re/im pairs).
fn residual_vec(data: &FaceData, r: usize, x: &[f64], out: &mut [f64; 9]) {
    let model = ansatz_coeffs(&params_to_squares(r, x));
    let d = model.sub(data);
    *out = [
        d.c00, d.c10.re, d.c10.im, d.c01.re, d.c01.im, d.c11.re, d.c11.im, d.c1m1.re, d.c1m1.im,
    ];
}

/// Analytic Jacobian of the residual vector; rows follow `residual_vec`,
/// columns follow the parameter layout (ar, ai, br, bi, cr, ci, dr, di) per
/// square.
fn jacobian(r: usize, x: &[f64], jac: &mut [f64]) {
    let cols = 8 * r;
    for v in jac.iter_mut() {
        *v = 0.0;
    }
    let mut set = |row: usize, col: usize, v: f64| {
        jac[row * cols + col] = v;
    };
    for i in 0..r {
        let o = 8 * i;
        let (ar, ai, br, bi) = (x[o], x[o + 1], x[o + 2], x[o + 3]);
        let (cr, ci, dr, di) = (x[o + 4], x[o + 5], x[o + 6], x[o + 7]);
        // c00 = Σ |a|² + |b|² + |c|² + |d|²
        for (k, v) in [ar, ai, br, bi, cr, ci, dr, di].into_iter().enumerate() {
            set(0, o + k, 2.0 * v);
        }
        // āb: Re = ar·br + ai·bi, Im = ar·bi − ai·br
        set(1, o, br);
        set(1, o + 1, bi);
        set(1, o + 2, ar);
        set(1, o + 3, ai);
        set(2, o, bi);
        set(2, o + 1, -br);
        set(2, o + 2, -ai);
        set(2, o + 3, ar);
        // + c̄d on the same rows
        set(1, o + 4, dr);
        set(1, o + 5, di);
        set(1, o + 6, cr);
        set(1, o + 7, ci);
        set(2, o + 4, di);
        set(2, o + 5, -dr);
        set(2, o + 6, -ci);
        set(2, o + 7, cr);
        // āc
        set(3, o, cr);
        set(3, o + 1, ci);
        set(3, o + 4, ar);
        set(3, o + 5, ai);
        set(4, o, ci);
        set(4, o + 1, -cr);
        set(4, o + 4, -ai);
        set(4, o + 5, ar);
        // + b̄d
        set(3, o + 2, dr);
        set(3, o + 3, di);
        set(3, o + 6, br);
        set(3, o + 7, bi);
        set(4, o + 2, di);
        set(4, o + 3, -dr);
        set(4, o + 6, -bi);
        set(4, o + 7, br);
        // ād
        set(5, o, dr);
        set(5, o + 1, di);
        set(5, o + 6, ar);
        set(5, o + 7, ai);
        set(6, o, di);
        set(6, o + 1, -dr);
        set(6, o + 6, -ai);
        set(6, o + 7, ar);
        // bc̄: Re = br·cr + bi·ci, Im = bi·cr − br·ci
        set(7, o + 2, cr);
        set(7, o + 3, ci);
        set(7, o + 4, br);
        set(7, o + 5, bi);
        set(8, o + 2, -ci);
        set(8, o + 3, cr);
        set(8, o + 4, bi);
        set(8, o + 5, -br);
    }
}

/// Dense symmetric solve (Gaussian elimination, partial pivoting) for the
/// small normal-equation systems of the search.
fn solve_sym(n: usize, a: &mut [f64], b: &mut [f64]) -> bool {
    for k in 0..n {
        let mut piv = k;
        let mut best = a[k * n + k].abs();
        for i in k + 1..n {
            let v = a[i * n + k].abs();
            if v > best {
                piv = i;
                best = v;
            }
        }
        if best <= 1e-300 {
            return false;
        }
        if piv != k {
            for j in 0..n {
                a.swap(k * n + j, piv * n + j);
            }
            b.swap(k, piv);
        }
        let d = a[k * n + k];
        for i in k + 1..n {
            let f = a[i * n + k] / d;
            if f == 0.0 {
                continue;
            }
            for j in k..n {
                a[i * n + j] -= f * a[k * n + j];
            }
            b[i] -= f * b[k];
        }
    }
    for k in (0..n).rev() {
        let mut s = b[k];
        for j in k + 1..n {
            s -= a[k * n + j] * b[j];
        }
        b[k] = s / a[k * n + k];
    }
    true
}

/// Damped Gauss-Newton (Levenberg-Marquardt) on the 9-residual model.
fn lm_fit(data: &FaceData, r: usize, x: &mut [f64]) {
    let n = 8 * r;
    let mut res = [0.0f64; 9];
    let mut jac = vec![0.0f64; 9 * n];
    residual_vec(data, r, x, &mut res);
    let mut sse: f64 = res.iter().map(|v| v * v).sum();
    let mut lambda = 1e-3;
    let mut stalls = 0;
    for _ in 0..60 {
        if sse < 1e-24 {
            break;
        }
        jacobian(r, x, &mut jac);
        // normal equations: (JᵀJ + λI) δ = -Jᵀ res
        let mut jtj = vec![0.0f64; n * n];
        let mut jtr = vec![0.0f64; n];
        for row in 0..9 {
            for a in 0..n {
                let ja = jac[row * n + a];
                if ja == 0.0 {
                    continue;
                }
                jtr[a] -= ja * res[row];
                for b in a..n {
                    jtj[a * n + b] += ja * jac[row * n + b];
                }
            }
        }
        for a in 0..n {
            for b in 0..a {
                jtj[a * n + b] = jtj[b * n + a];
            }
        }
        let diag_scale: f64 = (0..n).map(|i| jtj[i * n + i]).fold(0.0, f64::max).max(1e-12);
        for i in 0..n {
            jtj[i * n + i] += lambda * diag_scale;
        }
        let mut delta = jtr.clone();
        if !solve_sym(n, &mut jtj, &mut delta) {
            lambda *= 10.0;
            continue;
        }
        let trial: Vec<f64> = x.iter().zip(&delta).map(|(a, d)| a + d).collect();
        let mut trial_res = [0.0f64; 9];
        residual_vec(data, r, &trial, &mut trial_res);
        let trial_sse: f64 = trial_res.iter().map(|v| v * v).sum();
        if trial_sse < sse {
            let improvement = (sse - trial_sse) / sse.max(1e-300);
            x.copy_from_slice(&trial);
            res = trial_res;
            sse = trial_sse;
            lambda = (lambda * 0.3).max(1e-12);
            if improvement < 1e-12 {
                stalls += 1;
            } else {
                stalls = 0;
            }
        } else {
            lambda *= 10.0;
            stalls += 1;
            if lambda > 1e12 {
                break;
            }
        }
        if stalls >= 4 {
            break;
        }
    }
}

#[derive(Clone, Debug)]
pub struct FaceBound {
    pub variable: usize,
    pub data: FaceData,
    pub needed: usize,
    pub report: SingleSquareReport,
}

#[derive(Clone, Debug)]
pub struct LowerBoundReport {
    pub faces: Vec<FaceBound>,
    pub bound: usize,
}

/// Realization-size lower bound: each face needs 1 square if a single square
/// matches its torus data, otherwise at least 2 (capped there, which is all
/// the face argument certifies).
pub fn size_lower_bound_report(p: &Poly<C64>, q: &Poly<C64>) -> Result<LowerBoundReport> {
    let mut faces = Vec::new();
    let mut bound = 0;
    for var in 0..p.nvars() {
        let laurent = face_extract(p, q, var)?;
        let data = FaceData::from_laurent(&laurent)?;
        let report = single_square_with(&data, 200, DEFAULT_SEED ^ (var as u64 + 1));
        let needed = if data.is_negligible(DATA_TOL * data.max_abs().max(1.0)) {
            0
        } else if report.feasible {
            1
        } else {
            2
        };
        bound += needed;
        faces.push(FaceBound { variable: var, data, needed, report });
    }
    Ok(LowerBoundReport { faces, bound })
}

pub fn size_lower_bound(p: &Poly<C64>, q: &Poly<C64>) -> Result<usize> {
    size_lower_bound_report(p, q).map(|r| r.bound)
}
