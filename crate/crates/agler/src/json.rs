//! JSON schemas for polynomials, certificates, forms, and realizations.
//!
//! Schema violations (wrong exponent lengths, duplicate exponents,
//! non-finite numbers) are reported as [`JsonError::Schema`] and map to the
//! CLI's exit code 2; semantic failures (a stored colligation that is not
//! unitary) map to exit code 1.

use std::collections::BTreeSet;
use std::fmt;

use agler_core::linalg::unitarity_error;
use agler_core::poly::{LaurentPoly, MultiIndex, Poly, VecPoly};
use agler_core::scalar::Exact;
#[cfg(test)]
use agler_core::scalar::Coeff;
use agler_core::{CMat, Realization, SosCertificate, C64};
use serde::{Deserialize, Serialize};

/// Unitarity tolerance enforced when loading a realization.
pub const LOAD_UNITARITY_TOL: f64 = 1e-10;

#[derive(Debug)]
pub enum JsonError {
    Schema(String),
    Semantic(String),
}

impl fmt::Display for JsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JsonError::Schema(m) => write!(f, "schema error: {m}"),
            JsonError::Semantic(m) => write!(f, "invalid data: {m}"),
        }
    }
}

impl std::error::Error for JsonError {}

fn schema(msg: impl Into<String>) -> JsonError {
    JsonError::Schema(msg.into())
}

#[derive(Serialize, Deserialize, Clone, Copy, Debug)]
#[serde(deny_unknown_fields)]
pub struct ComplexDto {
    pub re: f64,
    pub im: f64,
}

impl ComplexDto {
    fn check(&self) -> Result<C64, JsonError> {
        if !self.re.is_finite() || !self.im.is_finite() {
            return Err(schema("non-finite coefficient"));
        }
        Ok(C64::new(self.re, self.im))
    }

    fn of(z: C64) -> Self {
        ComplexDto { re: z.re, im: z.im }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct PolyTermDto {
    pub exp: Vec<u32>,
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct PolyDto {
    pub nvars: usize,
    pub terms: Vec<PolyTermDto>,
}

impl PolyDto {
    pub fn of(p: &Poly<C64>) -> Self {
        PolyDto {
            nvars: p.nvars(),
            terms: p
                .terms()
                .map(|(idx, c)| PolyTermDto { exp: idx.exps().to_vec(), re: c.re, im: c.im })
                .collect(),
        }
    }

    fn validate(&self) -> Result<(), JsonError> {
        if self.nvars == 0 {
            return Err(schema("nvars must be positive"));
        }
        let mut seen = BTreeSet::new();
        for t in &self.terms {
            if t.exp.len() != self.nvars {
                return Err(schema(format!(
                    "exponent {:?} has length {}, expected {}",
                    t.exp,
                    t.exp.len(),
                    self.nvars
                )));
            }
            if !t.re.is_finite() || !t.im.is_finite() {
                return Err(schema("non-finite coefficient"));
            }
            if !seen.insert(t.exp.clone()) {
                return Err(schema(format!("duplicate exponent {:?}", t.exp)));
            }
        }
        Ok(())
    }

    pub fn to_poly(&self) -> Result<Poly<C64>, JsonError> {
        self.validate()?;
        Ok(Poly::from_terms(
            self.nvars,
            self.terms
                .iter()
                .map(|t| (MultiIndex::new(t.exp.clone()), C64::new(t.re, t.im))),
        ))
    }

    /// Exact-mode load: every float becomes its exact dyadic rational.
    pub fn to_poly_exact(&self) -> Result<Poly<Exact>, JsonError> {
        self.validate()?;
        let mut terms = Vec::new();
        for t in &self.terms {
            let c = Exact::from_f64_pair(t.re, t.im)
                .ok_or_else(|| schema("non-finite coefficient"))?;
            terms.push((MultiIndex::new(t.exp.clone()), c));
        }
        Ok(Poly::from_terms(self.nvars, terms))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct VecTermDto {
    pub exp: Vec<u32>,
    pub vec: Vec<ComplexDto>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct VecPolyDto {
    pub nvars: usize,
    pub dim: usize,
    pub terms: Vec<VecTermDto>,
}

impl VecPolyDto {
    pub fn of(v: &VecPoly<C64>) -> Self {
        VecPolyDto {
            nvars: v.nvars(),
            dim: v.dim(),
            terms: v
                .terms()
                .map(|(idx, vec)| VecTermDto {
                    exp: idx.exps().to_vec(),
                    vec: vec.iter().map(|&z| ComplexDto::of(z)).collect(),
                })
                .collect(),
        }
    }

    pub fn to_vecpoly(&self) -> Result<VecPoly<C64>, JsonError> {
        if self.nvars == 0 {
            return Err(schema("nvars must be positive"));
        }
        let mut out = VecPoly::zero(self.nvars, self.dim);
        let mut seen = BTreeSet::new();
        for t in &self.terms {
            if t.exp.len() != self.nvars {
                return Err(schema(format!("exponent {:?} has wrong length", t.exp)));
            }
            if t.vec.len() != self.dim {
                return Err(schema(format!(
                    "vector of length {} at {:?}, expected {}",
                    t.vec.len(),
                    t.exp,
                    self.dim
                )));
            }
            if !seen.insert(t.exp.clone()) {
                return Err(schema(format!("duplicate exponent {:?}", t.exp)));
            }
            let vec: Result<Vec<C64>, JsonError> = t.vec.iter().map(ComplexDto::check).collect();
            out.insert_add(MultiIndex::new(t.exp.clone()), &vec?);
        }
        Ok(out)
    }

    pub fn to_vecpoly_exact(&self) -> Result<VecPoly<Exact>, JsonError> {
        let float = self.to_vecpoly()?;
        let mut out = VecPoly::zero(self.nvars, self.dim);
        for (idx, vec) in float.terms() {
            let exact: Option<Vec<Exact>> =
                vec.iter().map(|z| Exact::from_f64_pair(z.re, z.im)).collect();
            out.insert_add(idx.clone(), &exact.ok_or_else(|| schema("non-finite entry"))?);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct CertificateDto {
    pub faces: Vec<VecPolyDto>,
}

impl CertificateDto {
    pub fn of(cert: &SosCertificate<C64>) -> Self {
        CertificateDto { faces: cert.faces().iter().map(VecPolyDto::of).collect() }
    }

    pub fn to_certificate(&self) -> Result<SosCertificate<C64>, JsonError> {
        let faces: Result<Vec<_>, _> = self.faces.iter().map(VecPolyDto::to_vecpoly).collect();
        SosCertificate::new(faces?).map_err(|e| schema(e.to_string()))
    }

    pub fn to_certificate_exact(&self) -> Result<SosCertificate<Exact>, JsonError> {
        let faces: Result<Vec<_>, _> =
            self.faces.iter().map(VecPolyDto::to_vecpoly_exact).collect();
        SosCertificate::new(faces?).map_err(|e| schema(e.to_string()))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct LaurentTermDto {
    pub exp: Vec<i32>,
    pub re: f64,
    pub im: f64,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct LaurentDto {
    pub nvars: usize,
    pub terms: Vec<LaurentTermDto>,
}

impl LaurentDto {
    pub fn of(l: &LaurentPoly<C64>) -> Self {
        LaurentDto {
            nvars: l.nvars(),
            terms: l
                .terms()
                .map(|(exp, c)| LaurentTermDto { exp: exp.clone(), re: c.re, im: c.im })
                .collect(),
        }
    }

    pub fn to_laurent(&self) -> Result<LaurentPoly<C64>, JsonError> {
        let mut out = LaurentPoly::zero(self.nvars);
        let mut seen = BTreeSet::new();
        for t in &self.terms {
            if t.exp.len() != self.nvars {
                return Err(schema(format!("exponent {:?} has wrong length", t.exp)));
            }
            if !t.re.is_finite() || !t.im.is_finite() {
                return Err(schema("non-finite coefficient"));
            }
            if !seen.insert(t.exp.clone()) {
                return Err(schema(format!("duplicate exponent {:?}", t.exp)));
            }
            out.insert_add(t.exp.clone(), C64::new(t.re, t.im));
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct HermitianFormDto {
    pub basis: Vec<Vec<u32>>,
    #[serde(rename = "H")]
    pub h: Vec<Vec<ComplexDto>>,
}

impl HermitianFormDto {
    pub fn of(form: &agler_core::HermitianForm<C64>) -> Self {
        let n = form.dim();
        HermitianFormDto {
            basis: form.basis().iter().map(|i| i.exps().to_vec()).collect(),
            h: (0..n)
                .map(|r| (0..n).map(|c| ComplexDto::of(*form.entry(r, c))).collect())
                .collect(),
        }
    }

    pub fn to_form(&self) -> Result<agler_core::HermitianForm<C64>, JsonError> {
        let n = self.basis.len();
        if self.h.len() != n || self.h.iter().any(|row| row.len() != n) {
            return Err(schema("H must be square and match the basis length"));
        }
        let nvars = self.basis.first().map(Vec::len).unwrap_or(1);
        let mut basis = Vec::with_capacity(n);
        let mut seen = BTreeSet::new();
        for b in &self.basis {
            if b.len() != nvars {
                return Err(schema("basis exponent length mismatch"));
            }
            if !seen.insert(b.clone()) {
                return Err(schema(format!("duplicate basis exponent {b:?}")));
            }
            basis.push(MultiIndex::new(b.clone()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in &self.h {
            for e in row {
                entries.push(e.check()?);
            }
        }
        // basis must be presented in canonical order for a well-defined matrix
        let mut sorted = basis.clone();
        sorted.sort();
        if sorted != basis {
            return Err(schema("basis must be sorted in graded lexicographic order"));
        }
        let form =
            agler_core::HermitianForm::from_fn(nvars, basis, |r, c| entries[r * n + c]);
        if form.hermitian_error() > 1e-13 * form.max_abs().max(1.0) {
            return Err(JsonError::Semantic(format!(
                "matrix is not Hermitian (deviation {:.3e})",
                form.hermitian_error()
            )));
        }
        Ok(form)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct RealizationDto {
    pub dims: Vec<usize>,
    #[serde(rename = "U")]
    pub u: Vec<Vec<ComplexDto>>,
}

impl RealizationDto {
    pub fn of(r: &Realization) -> Self {
        let n = r.size() + 1;
        RealizationDto {
            dims: r.dims().to_vec(),
            u: (0..n)
                .map(|i| (0..n).map(|j| ComplexDto::of(r.unitary()[(i, j)])).collect())
                .collect(),
        }
    }

    pub fn to_realization(&self) -> Result<Realization, JsonError> {
        let n: usize = self.dims.iter().sum::<usize>() + 1;
        if self.u.len() != n || self.u.iter().any(|row| row.len() != n) {
            return Err(schema(format!(
                "U must be {n}x{n} for dims {:?}",
                self.dims
            )));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in &self.u {
            for e in row {
                entries.push(e.check()?);
            }
        }
        let u = CMat::from_fn(n, n, |i, j| entries[i * n + j]);
        let err = unitarity_error(&u);
        if err > LOAD_UNITARITY_TOL {
            return Err(JsonError::Semantic(format!(
                "stored colligation is not unitary (deviation {err:.3e})"
            )));
        }
        Realization::new(self.dims.clone(), u).map_err(|e| schema(e.to_string()))
    }
}

pub fn read_json<T: for<'a> Deserialize<'a>>(path: &std::path::Path) -> Result<T, JsonError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| schema(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| schema(format!("cannot parse {}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &std::path::Path, value: &T) -> Result<(), JsonError> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| schema(format!("serialization failed: {e}")))?;
    std::fs::write(path, text + "\n")
        .map_err(|e| schema(format!("cannot write {}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip() {
        let p = Poly::from_terms(
            2,
            [
                (MultiIndex::new(vec![1, 0]), C64::new(0.5, -1.25)),
                (MultiIndex::new(vec![0, 1]), C64::new(-2.0, 0.0)),
            ],
        );
        let dto = PolyDto::of(&p);
        let text = serde_json::to_string(&dto).unwrap();
        let back: PolyDto = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_poly().unwrap(), p);
    }

    #[test]
    fn duplicate_exponents_rejected() {
        let dto = PolyDto {
            nvars: 1,
            terms: vec![
                PolyTermDto { exp: vec![1], re: 1.0, im: 0.0 },
                PolyTermDto { exp: vec![1], re: 2.0, im: 0.0 },
            ],
        };
        assert!(matches!(dto.to_poly(), Err(JsonError::Schema(_))));
    }

    #[test]
    fn exponent_length_checked() {
        let dto = PolyDto {
            nvars: 2,
            terms: vec![PolyTermDto { exp: vec![1], re: 1.0, im: 0.0 }],
        };
        assert!(dto.to_poly().is_err());
    }

    #[test]
    fn non_finite_rejected() {
        let dto = PolyDto {
            nvars: 1,
            terms: vec![PolyTermDto { exp: vec![1], re: f64::NAN, im: 0.0 }],
        };
        assert!(dto.to_poly().is_err());
    }

    #[test]
    fn realization_unitarity_enforced() {
        let dto = RealizationDto {
            dims: vec![1],
            u: vec![
                vec![ComplexDto { re: 1.0, im: 0.0 }, ComplexDto { re: 0.0, im: 0.0 }],
                vec![ComplexDto { re: 70.0, im: 0.0 }, ComplexDto { re: 1.0, im: 0.0 }],
            ],
        };
        assert!(matches!(dto.to_realization(), Err(JsonError::Semantic(_))));
    }

    #[test]
    fn laurent_round_trip() {
        let mut l = LaurentPoly::zero(2);
        l.insert_add(vec![1, -1], C64::new(1.0, 0.5));
        l.insert_add(vec![-1, 1], C64::new(1.0, -0.5));
        l.insert_add(vec![0, 0], C64::new(10.0, 0.0));
        let dto = LaurentDto::of(&l);
        let text = serde_json::to_string(&dto).unwrap();
        let back: LaurentDto = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_laurent().unwrap(), l);
    }

    #[test]
    fn hermitian_form_round_trip_and_validation() {
        let p = Poly::from_terms(
            1,
            [
                (MultiIndex::zeros(1), C64::new(1.0, 0.0)),
                (MultiIndex::new(vec![1]), C64::new(0.0, -0.5)),
            ],
        );
        let q = Poly::variable(1, 0);
        let form = agler_core::mod2_diff(&p, &q);
        let dto = HermitianFormDto::of(&form);
        let back = dto.to_form().unwrap();
        for beta in form.basis() {
            for alpha in form.basis() {
                assert_eq!(back.coeff_at(beta, alpha), form.coeff_at(beta, alpha));
            }
        }
        // a non-Hermitian matrix is a semantic error
        let mut bad = HermitianFormDto::of(&form);
        bad.h[0][1] = ComplexDto { re: 5.0, im: 0.0 };
        assert!(matches!(bad.to_form(), Err(JsonError::Semantic(_))));
    }

    #[test]
    fn exact_load_is_dyadic() {
        let dto = PolyDto {
            nvars: 1,
            terms: vec![PolyTermDto { exp: vec![0], re: 0.25, im: 0.0 }],
        };
        let p = dto.to_poly_exact().unwrap();
        assert_eq!(
            p.coeff(&MultiIndex::zeros(1)),
            Exact::from_ratio(1, 4)
        );
    }
}
