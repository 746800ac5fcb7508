//! Empirical von Neumann inequality testing: `‖q(T) p(T)⁻¹‖` over random
//! commuting tuples of strict contractions.
//!
//! Tuples are simultaneously diagonalizable (`T_j = S D_j S⁻¹` with a shared
//! well-conditioned similarity), which guarantees commutativity exactly and
//! keeps generation cheap; non-normality enters through `S`. This probes the
//! inequality — it can falsify a membership claim, never certify one.

use alloc::vec::Vec;

// f64 math methods come from core when std is linked (tests) and from
// num-traits/libm in no_std builds.
#[allow(unused_imports)]
use num_traits::Float;


use crate::error::{Error, Result};
use crate::linalg::{inverse, operator_norm, CMat, C64};
use crate::poly::Poly;
use crate::rng::Rng;

/// Condition-number cap for the random similarity.
const COND_CAP: f64 = 10.0;

#[derive(Clone, Debug)]
pub struct ContractionTuple {
    mats: Vec<CMat>,
    rho: f64,
}

impl ContractionTuple {
    /// Wraps explicit matrices, validating commutativity and the norm bound.
    pub fn new(mats: Vec<CMat>, rho: f64) -> Result<Self> {
        assert!(rho > 0.0 && rho < 1.0, "rho must be in (0, 1)");
        let t = ContractionTuple { mats, rho };
        let comm = t.max_commutator();
        if comm > 1e-10 {
            return Err(Error::InvalidData {
                reason: alloc::format!("tuple does not commute: max commutator {comm:e}"),
            });
        }
        for m in &t.mats {
            let n = operator_norm(m);
            if n > rho + 1e-12 {
                return Err(Error::InvalidData {
                    reason: alloc::format!("operator norm {n} exceeds bound {rho}"),
                });
            }
        }
        Ok(t)
    }

    /// Random commuting tuple: `T_j = S D_j S⁻¹` with diagonal `D_j`, a
    /// similarity of condition number at most 10 (regenerated otherwise),
    /// each `T_j` rescaled to operator norm exactly `ρ·u_j`, `u_j` uniform
    /// in (0.5, 1].
    pub fn random(n: usize, m: usize, rho: f64, seed: u64) -> Self {
        assert!(n >= 1 && m >= 1);
        assert!(rho > 0.0 && rho < 1.0, "rho must be in (0, 1)");
        let mut rng = Rng::new(seed);
        let (s, s_inv) = loop {
            let s = CMat::from_fn(m, m, |_, _| rng.c_normal());
            let g = s.adjoint().matmul(&s);
            let (lam, _) = crate::linalg::hermitian_eig(&g);
            let smax = lam.last().copied().unwrap_or(0.0).max(0.0).sqrt();
            let smin = lam.first().copied().unwrap_or(0.0).max(0.0).sqrt();
            if smin > 0.0 && smax / smin <= COND_CAP {
                let inv = inverse(&s).expect("condition-capped similarity is invertible");
                break (s, inv);
            }
        };
        let mats = (0..n)
            .map(|_| {
                let d = CMat::from_fn(m, m, |i, j| {
                    if i == j {
                        rng.disk(1.0)
                    } else {
                        C64::new(0.0, 0.0)
                    }
                });
                let t = s.matmul(&d).matmul(&s_inv);
                let u = 0.5 + 0.5 * (1.0 - rng.uniform()); // (0.5, 1]
                let target = rho * u;
                let norm = operator_norm(&t);
                if norm == 0.0 {
                    // all-zero diagonal: the zero matrix is a valid strict contraction
                    t
                } else {
                    t.scale(C64::new(target / norm, 0.0))
                }
            })
            .collect();
        ContractionTuple { mats, rho }
    }

    pub fn nvars(&self) -> usize {
        self.mats.len()
    }

    pub fn dim(&self) -> usize {
        self.mats.first().map_or(0, CMat::nrows)
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn matrices(&self) -> &[CMat] {
        &self.mats
    }

    /// Max entry of any pairwise commutator `T_iT_j − T_jT_i`.
    pub fn max_commutator(&self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..self.mats.len() {
            for j in i + 1..self.mats.len() {
                let ab = self.mats[i].matmul(&self.mats[j]);
                let ba = self.mats[j].matmul(&self.mats[i]);
                worst = worst.max(ab.sub(&ba).max_abs());
            }
        }
        worst
    }

    pub fn max_norm(&self) -> f64 {
        self.mats.iter().map(operator_norm).fold(0.0, f64::max)
    }
}

/// Evaluates a polynomial on the tuple: Horner recursion over a fixed
/// variable order (commutativity makes the order irrelevant; tests exercise
/// that).
pub fn poly_on_tuple(p: &Poly<C64>, t: &ContractionTuple) -> CMat {
    assert_eq!(p.nvars(), t.nvars(), "variable count mismatch");
    let m = t.dim();
    horner(p, t, 0, m)
}

fn horner(p: &Poly<C64>, t: &ContractionTuple, var: usize, m: usize) -> CMat {
    if p.is_zero() {
        return CMat::zeros(m, m);
    }
    if var == t.nvars() {
        // only the constant multi-index can remain
        let c = p.coeff(&crate::poly::MultiIndex::zeros(p.nvars()));
        return CMat::identity(m).scale(c);
    }
    let dmax = p.degree_in(var);
    let mut acc = CMat::zeros(m, m);
    let tv = &t.matrices()[var];
    for k in (0..=dmax).rev() {
        acc = tv.matmul(&acc);
        let coeff_poly = p.coeff_of_var_power(var, k);
        if !coeff_poly.is_zero() {
            let part = horner(&coeff_poly, t, var + 1, m);
            acc = CMat::from_fn(m, m, |i, j| acc[(i, j)] + part[(i, j)]);
        }
    }
    acc
}

/// Term-by-term evaluation with explicit monomial powers; an independent
/// route used to test order invariance.
pub fn poly_on_tuple_direct(p: &Poly<C64>, t: &ContractionTuple) -> CMat {
    let m = t.dim();
    let mut acc = CMat::zeros(m, m);
    for (idx, c) in p.terms() {
        let mut term = CMat::identity(m).scale(*c);
        for (var, &e) in idx.exps().iter().enumerate() {
            for _ in 0..e {
                term = term.matmul(&t.matrices()[var]);
            }
        }
        acc = CMat::from_fn(m, m, |i, j| acc[(i, j)] + term[(i, j)]);
    }
    acc
}

/// Operator norm of `q(T) p(T)⁻¹`.
pub fn vn_norm(q: &Poly<C64>, p: &Poly<C64>, t: &ContractionTuple) -> Result<f64> {
    let pt = poly_on_tuple(p, t);
    let qt = poly_on_tuple(q, t);
    let pinv = inverse(&pt)?;
    Ok(operator_norm(&qt.matmul(&pinv)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiIndex;
    use crate::testutil::{c, trivar_p, trivar_q};

    #[test]
    fn scalar_tuple_matches_pointwise_modulus() {
        // m = 1: vn_norm is |q(z)/p(z)| at the scalar point
        let t = ContractionTuple::random(3, 1, 0.9, 5);
        let p = trivar_p();
        let q = trivar_q();
        let z: Vec<C64> = t.matrices().iter().map(|m| m[(0, 0)]).collect();
        let want = (q.eval(&z) / p.eval(&z)).norm();
        let got = vn_norm(&q, &p, &t).unwrap();
        assert!((want - got).abs() < 1e-12);
    }

    #[test]
    fn diagonal_coordinate_norm() {
        let d = CMat::from_rows(&[
            alloc::vec![c(0.9), c(0.0)],
            alloc::vec![c(0.0), c(0.5)],
        ]);
        let t = ContractionTuple::new(alloc::vec![d], 0.95).unwrap();
        let q = Poly::variable(1, 0);
        let p = Poly::one(1);
        assert!((vn_norm(&q, &p, &t).unwrap() - 0.9).abs() < 1e-12);
    }

    #[test]
    fn constant_function_has_norm_one() {
        let t = ContractionTuple::random(2, 3, 0.9, 17);
        let one = Poly::one(2);
        assert!((vn_norm(&one, &one, &t).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn random_tuples_commute_and_respect_norms() {
        for seed in 0..30 {
            let t = ContractionTuple::random(3, 4, 0.9, seed);
            assert!(t.max_commutator() < 1e-10, "seed {seed}");
            assert!(t.max_norm() <= 0.9 + 1e-12, "seed {seed}");
            assert!(t.max_norm() > 0.4, "seed {seed}");
        }
    }

    #[test]
    fn same_seed_reproduces_tuple() {
        let a = ContractionTuple::random(3, 4, 0.9, 123);
        let b = ContractionTuple::random(3, 4, 0.9, 123);
        for (x, y) in a.matrices().iter().zip(b.matrices()) {
            assert_eq!(x, y);
        }
    }

    #[test]
    fn horner_matches_direct_and_permuted_order() {
        let mut rng = Rng::new(3);
        let t = ContractionTuple::random(3, 4, 0.9, 11);
        for _ in 0..10 {
            let mut p = Poly::zero(3);
            for _ in 0..6 {
                let idx = MultiIndex::new(alloc::vec![
                    rng.index(3) as u32,
                    rng.index(3) as u32,
                    rng.index(3) as u32,
                ]);
                p.insert_add(idx, rng.c_normal());
            }
            let h = poly_on_tuple(&p, &t);
            let d = poly_on_tuple_direct(&p, &t);
            assert!(h.sub(&d).max_abs() < 1e-11);
            // permute variables: evaluate the relabeled polynomial on the
            // reversed tuple
            let rev = ContractionTuple::new(
                t.matrices().iter().rev().cloned().collect(),
                t.rho(),
            )
            .unwrap();
            let mut p_rev = Poly::zero(3);
            for (idx, c) in p.terms() {
                let e: Vec<u32> = idx.exps().iter().rev().copied().collect();
                p_rev.insert_add(MultiIndex::new(e), *c);
            }
            let hr = poly_on_tuple(&p_rev, &rev);
            assert!(h.sub(&hr).max_abs() < 1e-11);
        }
    }

    #[test]
    fn bundled_function_satisfies_probe() {
        let p = trivar_p();
        let q = trivar_q();
        for seed in 0..50 {
            let m = 1 + (seed as usize % 6);
            let t = ContractionTuple::random(3, m, 0.9, 1000 + seed);
            let n = vn_norm(&q, &p, &t).unwrap();
            assert!(n <= 1.0 + 1e-8, "seed {seed}: norm {n}");
        }
    }

    #[test]
    fn non_inner_quotient_fails_probe() {
        // q/p = 2 has supremum 2 > 1
        let t = ContractionTuple::random(1, 3, 0.9, 9);
        let q = Poly::constant(1, c(2.0));
        let p = Poly::one(1);
        assert!(vn_norm(&q, &p, &t).unwrap() > 1.0 + 1e-8);
    }
}
