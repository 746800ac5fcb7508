//! Shared fixtures for unit tests: the bundled three-variable example.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::cert::SosCertificate;
use crate::poly::{MultiIndex, Poly, VecPoly};
use crate::scalar::Coeff;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// p = 3 − z1 − z2 − z3
pub fn trivar_p() -> Poly<Complex64> {
    let mut p = Poly::constant(3, c(3.0));
    for v in 0..3 {
        p = p.sub(&Poly::variable(3, v));
    }
    p
}

/// q = 3·z1z2z3 − z1z2 − z2z3 − z1z3
pub fn trivar_q() -> Poly<Complex64> {
    Poly::from_terms(
        3,
        [
            (MultiIndex::new(vec![1, 1, 1]), c(3.0)),
            (MultiIndex::new(vec![1, 1, 0]), c(-1.0)),
            (MultiIndex::new(vec![0, 1, 1]), c(-1.0)),
            (MultiIndex::new(vec![1, 0, 1]), c(-1.0)),
        ],
    )
}

/// The three squares of S(z, w) as polynomials in two variables:
/// √3(zw − z/2 − w/2), √3(1 − z/2 − w/2), (1/√2)(z − w).
pub fn face_components() -> Vec<Poly<Complex64>> {
    let r3 = Complex64::from_surd(1, 1, 3);
    let r2i = Complex64::from_surd(1, 2, 2);
    let zw = MultiIndex::new(vec![1, 1]);
    let z = MultiIndex::new(vec![1, 0]);
    let w = MultiIndex::new(vec![0, 1]);
    let one = MultiIndex::zeros(2);
    let p1 = Poly::from_terms(
        2,
        [(zw, r3), (z.clone(), -r3 / 2.0), (w.clone(), -r3 / 2.0)],
    );
    let p2 = Poly::from_terms(2, [(one, r3), (z.clone(), -r3 / 2.0), (w.clone(), -r3 / 2.0)]);
    let p3 = Poly::from_terms(2, [(z, r2i), (w, -r2i)]);
    vec![p1, p2, p3]
}

/// Lifts a 2-variable face polynomial into 3 variables, using the variables
/// other than `skip` in order.
pub fn lift(p2: &Poly<Complex64>, skip: usize) -> Poly<Complex64> {
    let vars: Vec<usize> = (0..3).filter(|&v| v != skip).collect();
    let mut out = Poly::zero(3);
    for (idx, coeff) in p2.terms() {
        let mut exps = vec![0u32; 3];
        exps[vars[0]] = idx.get(0);
        exps[vars[1]] = idx.get(1);
        out.insert_add(MultiIndex::new(exps), *coeff);
    }
    out
}

/// The bundled Agler decomposition of the three-variable example.
pub fn trivar_certificate() -> SosCertificate<Complex64> {
    let comps = face_components();
    let faces: Vec<VecPoly<Complex64>> = (0..3)
        .map(|j| {
            let lifted: Vec<Poly<Complex64>> = comps.iter().map(|p| lift(p, j)).collect();
            VecPoly::from_components(3, &lifted)
        })
        .collect();
    SosCertificate::new(faces).unwrap()
}
