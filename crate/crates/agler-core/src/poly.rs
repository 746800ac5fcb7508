//! Sparse multivariate polynomials over multi-indices.
//!
//! Terms are kept in a `BTreeMap` keyed by [`MultiIndex`] in graded
//! lexicographic order, so iteration, serialization, and every Gram basis
//! derived from a support set are deterministic.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_complex::Complex64;

use crate::scalar::Coeff;

/// Exponent vector of a monomial; entries are non-negative, length is the
/// number of variables of the ambient ring.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct MultiIndex {
    exps: Vec<u32>,
}

impl MultiIndex {
    pub fn new(exps: Vec<u32>) -> Self {
        MultiIndex { exps }
    }

    pub fn zeros(nvars: usize) -> Self {
        MultiIndex { exps: vec![0; nvars] }
    }

    /// The standard basis multi-index `e_j`.
    pub fn unit(nvars: usize, var: usize) -> Self {
        assert!(var < nvars);
        let mut exps = vec![0; nvars];
        exps[var] = 1;
        MultiIndex { exps }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn get(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.len(), rhs.len());
        MultiIndex {
            exps: self.exps.iter().zip(&rhs.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Componentwise `self <= rhs`.
    pub fn dominated_by(&self, rhs: &Self) -> bool {
        debug_assert_eq!(self.len(), rhs.len());
        self.exps.iter().zip(&rhs.exps).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum.
    pub fn join(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.len(), rhs.len());
        MultiIndex {
            exps: self.exps.iter().zip(&rhs.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    fn amplified(&self, var: usize, m: u32) -> Self {
        let mut exps = self.exps.clone();
        exps[var] *= m;
        MultiIndex { exps }
    }

    fn without_var(&self, var: usize) -> Self {
        debug_assert_eq!(self.exps[var], 0);
        let mut exps = self.exps.clone();
        exps.remove(var);
        MultiIndex { exps }
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => self.exps.cmp(&other.exps),
            ord => ord,
        }
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All multi-indices dominated by `d`, in canonical order. The "full degree
/// box" basis used by Gram searches.
pub fn box_basis(d: &MultiIndex) -> Vec<MultiIndex> {
    let mut out = vec![MultiIndex::zeros(d.len())];
    for var in 0..d.len() {
        let mut next = Vec::new();
        for idx in &out {
            for e in 0..=d.get(var) {
                let mut exps = idx.exps.clone();
                exps[var] = e;
                next.push(MultiIndex::new(exps));
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Sparse multivariate polynomial with coefficients in `C`.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<C: Coeff> {
    nvars: usize,
    terms: BTreeMap<MultiIndex, C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Poly::zero(nvars);
        p.insert_add(MultiIndex::zeros(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, C::one())
    }

    /// The coordinate polynomial `z_var`.
    pub fn variable(nvars: usize, var: usize) -> Self {
        let mut p = Poly::zero(nvars);
        p.insert_add(MultiIndex::unit(nvars, var), C::one());
        p
    }

    pub fn monomial(idx: MultiIndex, c: C) -> Self {
        let mut p = Poly::zero(idx.len());
        p.insert_add(idx, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, C)>>(nvars: usize, terms: I) -> Self {
        let mut p = Poly::zero(nvars);
        for (idx, c) in terms {
            assert_eq!(idx.len(), nvars, "exponent length mismatch");
            p.insert_add(idx, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &C)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &MultiIndex> {
        self.terms.keys()
    }

    pub fn coeff(&self, idx: &MultiIndex) -> C {
        self.terms.get(idx).cloned().unwrap_or_else(C::zero)
    }

    pub fn insert_add(&mut self, idx: MultiIndex, c: C) {
        debug_assert_eq!(idx.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (idx, c) in &rhs.terms {
            out.insert_add(idx.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Poly::zero(self.nvars);
        for (i1, c1) in &self.terms {
            for (i2, c2) in &rhs.terms {
                out.insert_add(i1.add(i2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Poly::zero(self.nvars);
        for (idx, v) in &self.terms {
            out.insert_add(idx.clone(), v.mul(c));
        }
        out
    }

    /// Conjugates every coefficient (the exponents are untouched).
    pub fn conj_coeffs(&self) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), c.conj())).collect(),
        }
    }

    /// Exact sum of term evaluations at `z`.
    pub fn eval(&self, z: &[C]) -> C {
        assert_eq!(z.len(), self.nvars, "point dimension mismatch");
        let mut acc = C::zero();
        for (idx, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in z.iter().zip(idx.exps()) {
                for _ in 0..e {
                    term = term.mul(v);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Substitutes `z_var -> z_var^m`, multiplying every exponent of `var` by `m`.
    pub fn amplify(&self, var: usize, m: u32) -> Self {
        assert!(var < self.nvars, "variable index out of range");
        assert!(m >= 1, "amplification factor must be >= 1");
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(i, c)| (i.amplified(var, m), c.clone()))
                .collect(),
        }
    }

    /// Componentwise maximum exponent over the support; `None` for the zero
    /// polynomial.
    pub fn multidegree(&self) -> Option<MultiIndex> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, i| acc.join(i)))
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|i| i.get(var)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|i| i.total_degree()).max()
    }

    /// The polynomial in the remaining variables multiplying `z_var^k`.
    /// The result still has `nvars` variables with exponent 0 at `var`.
    pub fn coeff_of_var_power(&self, var: usize, k: u32) -> Self {
        let mut out = Poly::zero(self.nvars);
        for (idx, c) in &self.terms {
            if idx.get(var) == k {
                let mut exps = idx.exps().to_vec();
                exps[var] = 0;
                out.insert_add(MultiIndex::new(exps), c.clone());
            }
        }
        out
    }

    /// Removes a variable that no term uses; panics otherwise.
    pub fn drop_var(&self, var: usize) -> Self {
        assert_eq!(self.degree_in(var), 0, "variable still present");
        Poly {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .map(|(i, c)| (i.without_var(var), c.clone()))
                .collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    pub fn to_c64(&self) -> Poly<Complex64> {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), c.to_c64())).collect(),
        }
    }
}

/// Vector-valued polynomial; each term carries a dense coefficient vector of
/// length `dim`. `dim = 0` is the empty vector polynomial.
#[derive(Clone, PartialEq, Debug)]
pub struct VecPoly<C: Coeff> {
    nvars: usize,
    dim: usize,
    terms: BTreeMap<MultiIndex, Vec<C>>,
}

impl<C: Coeff> VecPoly<C> {
    pub fn zero(nvars: usize, dim: usize) -> Self {
        VecPoly { nvars, dim, terms: BTreeMap::new() }
    }

    pub fn from_components(nvars: usize, components: &[Poly<C>]) -> Self {
        let dim = components.len();
        let mut out = VecPoly::zero(nvars, dim);
        for (i, p) in components.iter().enumerate() {
            assert_eq!(p.nvars(), nvars, "variable count mismatch");
            for (idx, c) in p.terms() {
                out.entry(idx.clone())[i] = c.clone();
            }
        }
        out.prune();
        out
    }

    fn entry(&mut self, idx: MultiIndex) -> &mut Vec<C> {
        debug_assert_eq!(idx.len(), self.nvars);
        let dim = self.dim;
        self.terms.entry(idx).or_insert_with(|| vec![C::zero(); dim])
    }

    pub fn insert_add(&mut self, idx: MultiIndex, v: &[C]) {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        let e = self.entry(idx.clone());
        for (slot, c) in e.iter_mut().zip(v) {
            *slot = slot.add(c);
        }
        if e.iter().all(|c| c.is_zero()) {
            self.terms.remove(&idx);
        }
    }

    fn prune(&mut self) {
        self.terms.retain(|_, v| v.iter().any(|c| !c.is_zero()));
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Vec<C>)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &MultiIndex> {
        self.terms.keys()
    }

    pub fn coeff_vec(&self, idx: &MultiIndex) -> Vec<C> {
        self.terms
            .get(idx)
            .cloned()
            .unwrap_or_else(|| vec![C::zero(); self.dim])
    }

    pub fn component(&self, i: usize) -> Poly<C> {
        assert!(i < self.dim);
        let mut p = Poly::zero(self.nvars);
        for (idx, v) in &self.terms {
            p.insert_add(idx.clone(), v[i].clone());
        }
        p
    }

    pub fn components(&self) -> Vec<Poly<C>> {
        (0..self.dim).map(|i| self.component(i)).collect()
    }

    pub fn eval(&self, z: &[C]) -> Vec<C> {
        self.components().iter().map(|p| p.eval(z)).collect()
    }

    pub fn amplify(&self, var: usize, m: u32) -> Self {
        assert!(var < self.nvars && m >= 1);
        VecPoly {
            nvars: self.nvars,
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(i, v)| (i.amplified(var, m), v.clone()))
                .collect(),
        }
    }

    /// Multiplies every component by the monomial `z_var^k`.
    pub fn shift(&self, var: usize, k: u32) -> Self {
        let mut step = MultiIndex::zeros(self.nvars);
        let mut exps = step.exps().to_vec();
        exps[var] = k;
        step = MultiIndex::new(exps);
        VecPoly {
            nvars: self.nvars,
            dim: self.dim,
            terms: self.terms.iter().map(|(i, v)| (i.add(&step), v.clone())).collect(),
        }
    }

    pub fn multidegree(&self) -> Option<MultiIndex> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, i| acc.join(i)))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|i| i.total_degree()).max()
    }

    pub fn max_abs(&self) -> f64 {
        self.terms
            .values()
            .flat_map(|v| v.iter())
            .map(|c| c.magnitude())
            .fold(0.0, f64::max)
    }

    pub fn to_c64(&self) -> VecPoly<Complex64> {
        VecPoly {
            nvars: self.nvars,
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(i, v)| (i.clone(), v.iter().map(|c| c.to_c64()).collect()))
                .collect(),
        }
    }
}

impl<C: Coeff> From<Poly<C>> for VecPoly<C> {
    fn from(p: Poly<C>) -> Self {
        let nvars = p.nvars();
        VecPoly::from_components(nvars, &[p])
    }
}

/// Polynomial with integer (possibly negative) exponents; holds torus
/// restrictions such as the face data of |p|² − |q|².
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<C: Coeff> {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn insert_add(&mut self, exp: Vec<i32>, c: C) {
        assert_eq!(exp.len(), self.nvars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn coeff(&self, exp: &[i32]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &C)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn max_abs(&self) -> f64 {
        self.terms.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }

    /// `c(-γ) = conj(c(γ))` within `tol` on magnitudes: real-valued on the torus.
    pub fn is_conjugate_symmetric(&self, tol: f64) -> bool {
        self.terms.iter().all(|(e, c)| {
            let m: Vec<i32> = e.iter().map(|x| -x).collect();
            self.coeff(&m).sub(&c.conj()).magnitude() <= tol
        })
    }

    pub fn to_c64(&self) -> LaurentPoly<Complex64> {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.to_c64())).collect(),
        }
    }

    /// Evaluates at a point with nonzero coordinates (float).
    pub fn eval_c64(&self, z: &[Complex64]) -> Complex64 {
        assert_eq!(z.len(), self.nvars, "point dimension mismatch");
        let mut acc = Complex64::new(0.0, 0.0);
        for (exp, c) in &self.terms {
            let mut term = c.to_c64();
            for (v, &e) in z.iter().zip(exp.iter()) {
                term *= v.powi(e);
            }
            acc += term;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// p = 3 - z1 - z2 - z3
    fn trivar_denominator() -> Poly<Complex64> {
        let mut p = Poly::constant(3, c(3.0));
        for v in 0..3 {
            p = p.sub(&Poly::variable(3, v));
        }
        p
    }

    #[test]
    fn eval_constant_term() {
        let p = trivar_denominator();
        assert_eq!(p.eval(&[c(0.0), c(0.0), c(0.0)]), c(3.0));
    }

    #[test]
    fn eval_blaschke_numerator_root() {
        // z² - 1/4 at z = 1/2
        let p = Poly::from_terms(
            1,
            [
                (MultiIndex::new(vec![2]), c(1.0)),
                (MultiIndex::new(vec![0]), c(-0.25)),
            ],
        );
        assert!(p.eval(&[c(0.5)]).norm() < 1e-15);
    }

    #[test]
    fn eval_face_polynomial() {
        // P3(z,w) = (1/√2)(z - w) at (1, -1) is √2.
        let s = Complex64::from_surd(1, 1, 2);
        let p = Poly::from_terms(
            2,
            [
                (MultiIndex::new(vec![1, 0]), s / 2.0),
                (MultiIndex::new(vec![0, 1]), -s / 2.0),
            ],
        );
        let got = p.eval(&[c(1.0), c(-1.0)]);
        assert!((got - s).norm() < 1e-15);
    }

    #[test]
    fn product_of_variables() {
        let p = Poly::<Complex64>::variable(2, 0).mul(&Poly::variable(2, 1));
        assert_eq!(p.nterms(), 1);
        assert_eq!(p.coeff(&MultiIndex::new(vec![1, 1])), c(1.0));
    }

    #[test]
    fn additive_identity() {
        let p = trivar_denominator();
        assert_eq!(p.add(&Poly::zero(3)), p);
        assert_eq!(p.mul(&Poly::one(3)), p);
    }

    #[test]
    fn amplify_monomial() {
        let p = Poly::<Complex64>::variable(2, 0).mul(&Poly::variable(2, 1));
        let a = p.amplify(0, 3);
        assert_eq!(a.coeff(&MultiIndex::new(vec![3, 1])), c(1.0));
        assert_eq!(a.nterms(), 1);
    }

    #[test]
    fn amplify_identity_case() {
        let p = trivar_denominator();
        assert_eq!(p.amplify(0, 1), p);
    }

    #[test]
    fn amplify_scales_degree() {
        let p = trivar_denominator();
        assert_eq!(p.amplify(0, 4).degree_in(0), 4);
    }

    #[test]
    fn multidegree_examples() {
        // 3·z1z2z3 - z1z2 - z2z3 - z1z3
        let q = Poly::from_terms(
            3,
            [
                (MultiIndex::new(vec![1, 1, 1]), c(3.0)),
                (MultiIndex::new(vec![1, 1, 0]), c(-1.0)),
                (MultiIndex::new(vec![0, 1, 1]), c(-1.0)),
                (MultiIndex::new(vec![1, 0, 1]), c(-1.0)),
            ],
        );
        assert_eq!(q.multidegree().unwrap(), MultiIndex::new(vec![1, 1, 1]));
        assert_eq!(
            Poly::constant(3, c(3.0)).multidegree().unwrap(),
            MultiIndex::zeros(3)
        );
        let m = Poly::monomial(MultiIndex::new(vec![3, 1, 0]), c(1.0));
        assert_eq!(m.multidegree().unwrap(), MultiIndex::new(vec![3, 1, 0]));
        assert_eq!(Poly::<Complex64>::zero(3).multidegree(), None);
    }

    #[test]
    fn graded_lex_ordering() {
        let a = MultiIndex::new(vec![0, 1, 1]);
        let b = MultiIndex::new(vec![1, 0, 0]);
        assert!(b < a); // lower total degree first
        let c1 = MultiIndex::new(vec![1, 1, 0]);
        assert!(a < c1); // same degree: lexicographic on exponents
    }

    #[test]
    fn box_basis_size() {
        let b = box_basis(&MultiIndex::new(vec![1, 1]));
        assert_eq!(b.len(), 4);
        assert_eq!(b[0], MultiIndex::zeros(2));
    }

    #[test]
    fn zero_coefficients_pruned() {
        let mut p = Poly::zero(1);
        p.insert_add(MultiIndex::new(vec![1]), c(1.0));
        p.insert_add(MultiIndex::new(vec![1]), c(-1.0));
        assert!(p.is_zero());
        // below the absolute pruning threshold
        p.insert_add(MultiIndex::new(vec![0]), c(1e-15));
        assert!(p.is_zero());
    }

    #[test]
    fn exact_arithmetic_roundtrip() {
        let p = Poly::from_terms(
            1,
            [
                (MultiIndex::new(vec![1]), Exact::from_surd(1, 1, 2)),
                (MultiIndex::new(vec![0]), Exact::from_int(-1)),
            ],
        );
        let sq = p.mul(&p.conj_coeffs());
        // (√2 z - 1)² has coefficients 2, -2√2, 1
        assert_eq!(sq.coeff(&MultiIndex::new(vec![2])), Exact::from_int(2));
        assert_eq!(sq.coeff(&MultiIndex::new(vec![1])), Exact::from_surd(-2, 1, 2));
    }

    #[test]
    fn vecpoly_components_roundtrip() {
        let p0 = Poly::from_terms(2, [(MultiIndex::new(vec![1, 0]), c(2.0))]);
        let p1 = Poly::from_terms(2, [(MultiIndex::new(vec![0, 1]), c(-1.0))]);
        let v = VecPoly::from_components(2, &[p0.clone(), p1.clone()]);
        assert_eq!(v.dim(), 2);
        assert_eq!(v.component(0), p0);
        assert_eq!(v.component(1), p1);
    }

    #[test]
    fn vecpoly_shift_multiplies_by_monomial() {
        let v = VecPoly::from_components(2, &[Poly::<Complex64>::one(2)]);
        let s = v.shift(0, 2);
        assert_eq!(s.component(0).coeff(&MultiIndex::new(vec![2, 0])), c(1.0));
    }

    #[test]
    fn laurent_conjugate_symmetry() {
        let mut l = LaurentPoly::zero(2);
        l.insert_add(vec![1, -1], Complex64::new(0.0, 1.0));
        l.insert_add(vec![-1, 1], Complex64::new(0.0, -1.0));
        assert!(l.is_conjugate_symmetric(1e-15));
        l.insert_add(vec![1, 0], c(1.0));
        assert!(!l.is_conjugate_symmetric(1e-15));
    }

    #[test]
    fn laurent_eval() {
        // 2 - z - 1/z at z = -1 gives 4.
        let mut l = LaurentPoly::zero(1);
        l.insert_add(vec![0], c(2.0));
        l.insert_add(vec![1], c(-1.0));
        l.insert_add(vec![-1], c(-1.0));
        let got = l.eval_c64(&[c(-1.0)]);
        assert!((got - c(4.0)).norm() < 1e-15);
    }
}
