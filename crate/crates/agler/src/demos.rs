//! Bundled demonstration functions with their certificates and colligations.
//!
//! Four rational inner functions ship with the binary:
//!
//! - `blaschke`: the one-variable `(z² − 1/4)/(1 − z²/4)` with its explicit
//!   3×3 colligation;
//! - `twovar`: `(2z₁z₂ − z₁ − z₂)/(2 − z₁ − z₂)` with a 3×3 colligation;
//! - `trivar`: `(3z₁z₂z₃ − z₁z₂ − z₁z₃ − z₂z₃)/(3 − z₁ − z₂ − z₃)` with its
//!   three-face certificate (realizations are constructed on demand);
//! - `coordinate`: `z₁`, the smallest nontrivial example.
//!
//! Data is generated over any coefficient ring, so the same builders serve
//! the float pipelines and the exact (`√`-surd) checks.

use agler_core::poly::{MultiIndex, Poly, VecPoly};
use agler_core::scalar::{Coeff, Exact};
use agler_core::{CMat, Realization, SosCertificate, C64};

#[derive(Clone, Debug)]
pub struct DemoBundle {
    pub name: &'static str,
    pub description: &'static str,
    pub nvars: usize,
    pub p: Poly<C64>,
    pub q: Poly<C64>,
    pub certificate: Option<SosCertificate<C64>>,
    pub realization: Option<Realization>,
    pub expected_size: Option<usize>,
    pub expected_lower_bound: Option<usize>,
}

/// Exact-arithmetic variant of a bundle (float-only fields omitted).
#[derive(Clone, Debug)]
pub struct ExactDemo {
    pub p: Poly<Exact>,
    pub q: Poly<Exact>,
    pub certificate: Option<SosCertificate<Exact>>,
    /// The colligation with `√`-surd entries, when one is bundled.
    pub unitary: Option<Vec<Vec<Exact>>>,
}

pub const NAMES: [&str; 4] = ["blaschke", "twovar", "trivar", "coordinate"];

pub fn names() -> &'static [&'static str] {
    &NAMES
}

pub fn demo(name: &str) -> Option<DemoBundle> {
    match name {
        "blaschke" => Some(blaschke()),
        "twovar" => Some(twovar()),
        "trivar" => Some(trivar()),
        "coordinate" => Some(coordinate()),
        _ => None,
    }
}

pub fn demo_exact(name: &str) -> Option<ExactDemo> {
    match name {
        "blaschke" => {
            let (p, q) = blaschke_pq::<Exact>();
            Some(ExactDemo {
                p,
                q,
                certificate: Some(blaschke_cert::<Exact>()),
                unitary: Some(blaschke_unitary_entries::<Exact>()),
            })
        }
        "twovar" => {
            let (p, q) = twovar_pq::<Exact>();
            Some(ExactDemo {
                p,
                q,
                certificate: Some(twovar_cert::<Exact>()),
                unitary: Some(twovar_unitary_entries::<Exact>()),
            })
        }
        "trivar" => {
            let (p, q) = trivar_pq::<Exact>();
            Some(ExactDemo { p, q, certificate: Some(trivar_cert::<Exact>()), unitary: None })
        }
        "coordinate" => {
            let (p, q) = coordinate_pq::<Exact>();
            Some(ExactDemo {
                p,
                q,
                certificate: Some(coordinate_cert::<Exact>()),
                unitary: Some(coordinate_unitary_entries::<Exact>()),
            })
        }
        _ => None,
    }
}

fn mat_from_entries(entries: &[Vec<C64>]) -> CMat {
    CMat::from_fn(entries.len(), entries[0].len(), |i, j| entries[i][j])
}

fn to_c64_rows(rows: Vec<Vec<impl Coeff>>) -> Vec<Vec<C64>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(|c| c.to_c64()).collect())
        .collect()
}

// ---- blaschke: (z² − 1/4)/(1 − z²/4) --------------------------------------

pub fn blaschke_pq<C: Coeff>() -> (Poly<C>, Poly<C>) {
    let z2 = MultiIndex::new(vec![2]);
    let one = MultiIndex::zeros(1);
    let p = Poly::from_terms(1, [(one.clone(), C::one()), (z2.clone(), C::from_ratio(-1, 4))]);
    let q = Poly::from_terms(1, [(z2, C::one()), (one, C::from_ratio(-1, 4))]);
    (p, q)
}

/// `|p|² − |q|² = (1 − |z|²)·(15/16)(1 + |z|²)`: one face, two squares.
pub fn blaschke_cert<C: Coeff>() -> SosCertificate<C> {
    let s = C::from_surd(1, 4, 15);
    let f = VecPoly::from_components(
        1,
        &[
            Poly::constant(1, s.clone()),
            Poly::monomial(MultiIndex::new(vec![1]), s),
        ],
    );
    SosCertificate::new(vec![f]).expect("one face in one variable")
}

fn blaschke_unitary_entries<C: Coeff>() -> Vec<Vec<C>> {
    let s = || C::from_surd(1, 4, 15);
    let q = |n: i64, d: i64| C::from_ratio(n, d);
    vec![
        vec![q(-1, 4), q(0, 1), s()],
        vec![s(), q(0, 1), q(1, 4)],
        vec![q(0, 1), q(1, 1), q(0, 1)],
    ]
}

fn blaschke() -> DemoBundle {
    let (p, q) = blaschke_pq::<C64>();
    let u = mat_from_entries(&to_c64_rows(blaschke_unitary_entries::<C64>()));
    DemoBundle {
        name: "blaschke",
        description: "one-variable degree-2 Blaschke product (z^2 - 1/4)/(1 - z^2/4)",
        nvars: 1,
        p,
        q,
        certificate: Some(blaschke_cert::<C64>()),
        realization: Some(Realization::new(vec![2], u).expect("3x3 colligation")),
        expected_size: Some(2),
        expected_lower_bound: None, // degree 2 in z: face extraction does not apply
    }
}

// ---- twovar: (2z₁z₂ − z₁ − z₂)/(2 − z₁ − z₂) -------------------------------

pub fn twovar_pq<C: Coeff>() -> (Poly<C>, Poly<C>) {
    let z1 = MultiIndex::new(vec![1, 0]);
    let z2 = MultiIndex::new(vec![0, 1]);
    let z12 = MultiIndex::new(vec![1, 1]);
    let one = MultiIndex::zeros(2);
    let m1 = || C::from_int(-1);
    let p = Poly::from_terms(
        2,
        [(one, C::from_int(2)), (z1.clone(), m1()), (z2.clone(), m1())],
    );
    let q = Poly::from_terms(2, [(z12, C::from_int(2)), (z1, m1()), (z2, m1())]);
    (p, q)
}

/// `|p|² − |q|² = (1 − |z₁|²)|√2(1 − z₂)|² + (1 − |z₂|²)|√2(1 − z₁)|²`.
pub fn twovar_cert<C: Coeff>() -> SosCertificate<C> {
    let r2 = || C::from_surd(1, 1, 2);
    let face = |other: usize| {
        let poly = Poly::from_terms(
            2,
            [
                (MultiIndex::zeros(2), r2()),
                (MultiIndex::unit(2, other), r2().neg()),
            ],
        );
        VecPoly::from_components(2, &[poly])
    };
    SosCertificate::new(vec![face(1), face(0)]).expect("two faces in two variables")
}

/// The bundled colligation realizes q/p with `B = −(√2/2, √2/2)`; flipping
/// the sign of `B` (equivalently `C`) realizes `−q/p`.
fn twovar_unitary_entries<C: Coeff>() -> Vec<Vec<C>> {
    let s = |n: i64| C::from_surd(n, 2, 2);
    let q = |n: i64, d: i64| C::from_ratio(n, d);
    vec![
        vec![q(0, 1), s(-1), s(-1)],
        vec![s(1), q(1, 2), q(-1, 2)],
        vec![s(1), q(-1, 2), q(1, 2)],
    ]
}

fn twovar() -> DemoBundle {
    let (p, q) = twovar_pq::<C64>();
    let u = mat_from_entries(&to_c64_rows(twovar_unitary_entries::<C64>()));
    DemoBundle {
        name: "twovar",
        description: "two-variable rational inner function (2z1z2 - z1 - z2)/(2 - z1 - z2)",
        nvars: 2,
        p,
        q,
        certificate: Some(twovar_cert::<C64>()),
        realization: Some(Realization::new(vec![1, 1], u).expect("3x3 colligation")),
        expected_size: Some(2),
        expected_lower_bound: Some(2),
    }
}

// ---- trivar: (3z₁z₂z₃ − z₁z₂ − z₁z₃ − z₂z₃)/(3 − z₁ − z₂ − z₃) -------------

pub fn trivar_pq<C: Coeff>() -> (Poly<C>, Poly<C>) {
    let mut p = Poly::constant(3, C::from_int(3));
    for v in 0..3 {
        p = p.sub(&Poly::variable(3, v));
    }
    let q = Poly::from_terms(
        3,
        [
            (MultiIndex::new(vec![1, 1, 1]), C::from_int(3)),
            (MultiIndex::new(vec![1, 1, 0]), C::from_int(-1)),
            (MultiIndex::new(vec![0, 1, 1]), C::from_int(-1)),
            (MultiIndex::new(vec![1, 0, 1]), C::from_int(-1)),
        ],
    );
    (p, q)
}

/// Three faces, each the sum of squares `S` in the other two variables:
/// `S = |√3(zw − z/2 − w/2)|² + |√3(1 − z/2 − w/2)|² + |(z − w)/√2|²`.
pub fn trivar_cert<C: Coeff>() -> SosCertificate<C> {
    let faces = (0..3)
        .map(|skip| {
            let vars: Vec<usize> = (0..3).filter(|&v| v != skip).collect();
            let e = |a: u32, b: u32| {
                let mut exps = vec![0u32; 3];
                exps[vars[0]] = a;
                exps[vars[1]] = b;
                MultiIndex::new(exps)
            };
            let r3 = || C::from_surd(1, 1, 3);
            let r3h = || C::from_surd(-1, 2, 3);
            let r2h = || C::from_surd(1, 2, 2);
            let p1 = Poly::from_terms(3, [(e(1, 1), r3()), (e(1, 0), r3h()), (e(0, 1), r3h())]);
            let p2 = Poly::from_terms(3, [(e(0, 0), r3()), (e(1, 0), r3h()), (e(0, 1), r3h())]);
            let p3 = Poly::from_terms(3, [(e(1, 0), r2h()), (e(0, 1), r2h().neg())]);
            VecPoly::from_components(3, &[p1, p2, p3])
        })
        .collect();
    SosCertificate::new(faces).expect("three faces in three variables")
}

fn trivar() -> DemoBundle {
    let (p, q) = trivar_pq::<C64>();
    DemoBundle {
        name: "trivar",
        description:
            "three-variable rational inner function (3z1z2z3 - z1z2 - z1z3 - z2z3)/(3 - z1 - z2 - z3)",
        nvars: 3,
        p,
        q,
        certificate: Some(trivar_cert::<C64>()),
        realization: None,
        expected_size: Some(9),
        expected_lower_bound: Some(6),
    }
}

// ---- coordinate: z₁ --------------------------------------------------------

pub fn coordinate_pq<C: Coeff>() -> (Poly<C>, Poly<C>) {
    (Poly::one(1), Poly::variable(1, 0))
}

pub fn coordinate_cert<C: Coeff>() -> SosCertificate<C> {
    SosCertificate::new(vec![VecPoly::from(Poly::one(1))]).expect("one face")
}

fn coordinate_unitary_entries<C: Coeff>() -> Vec<Vec<C>> {
    vec![
        vec![C::zero(), C::one()],
        vec![C::one(), C::zero()],
    ]
}

fn coordinate() -> DemoBundle {
    let (p, q) = coordinate_pq::<C64>();
    let u = mat_from_entries(&to_c64_rows(coordinate_unitary_entries::<C64>()));
    DemoBundle {
        name: "coordinate",
        description: "the coordinate function z1",
        nvars: 1,
        p,
        q,
        certificate: Some(coordinate_cert::<C64>()),
        realization: Some(Realization::new(vec![1], u).expect("2x2 colligation")),
        expected_size: Some(1),
        expected_lower_bound: Some(1),
    }
}
