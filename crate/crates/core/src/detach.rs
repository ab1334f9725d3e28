//! Ideal membership with cofactors over the original generators.

use crate::convert::{mono2full, sig2mono};
use crate::engine::f5_run;
use crate::error::{Error, Result};
use crate::labeled::{FullLabeledPoly, LabeledBasis};
use crate::module::ModuleVector;
use crate::poly::{divide, interreduce, Polynomial};
use crate::ring::Ring;

/// A reduced Gröbner basis together with a cofactor vector over the
/// generators for each of its elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GBWithReps {
    ring: Ring,
    full: LabeledBasis<FullLabeledPoly>,
    reduced: Vec<Polynomial>,
    reps: Vec<ModuleVector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetachResult {
    pub member: bool,
    /// Normal form of the query; zero exactly for members.
    pub remainder: Polynomial,
    /// `u` with `u·F = f`, present for members.
    pub cofactors: Option<ModuleVector>,
}

/// Computes the reduced Gröbner basis of `⟨gens⟩` and a representation of
/// each of its elements over `gens`.
pub fn prepare(ring: &Ring, gens: &[Polynomial]) -> Result<GBWithReps> {
    let engine = f5_run(ring, gens)?;
    let mono = sig2mono(&engine.signature_basis(), ring)?;
    let full = mono2full(&mono, ring)?;
    GBWithReps::from_full_labeled(ring, full)
}

impl GBWithReps {
    /// Builds the reduced basis and its representations from a full-labeled
    /// Gröbner basis.
    pub fn from_full_labeled(
        ring: &Ring,
        full: LabeledBasis<FullLabeledPoly>,
    ) -> Result<GBWithReps> {
        let gens = &full.generators;
        if let Some(i) = full.elements.iter().position(|e| !e.is_valid(gens, ring)) {
            return Err(Error::Representation(format!(
                "element {} does not match its vector",
                i + 1
            )));
        }
        let polys: Vec<Polynomial> = full.elements.iter().map(|e| e.poly.clone()).collect();
        let reduced = interreduce(&polys, ring);
        let mut reps = Vec::with_capacity(reduced.len());
        for r in &reduced {
            let d = divide(r, &polys, ring);
            if !d.remainder.is_zero() {
                return Err(Error::Representation(format!(
                    "{} does not reduce to zero",
                    r.render(ring)
                )));
            }
            let v = combine(&d.quotients, &full.elements, gens.len(), ring)?;
            if v.dot(gens, ring)? != *r {
                return Err(Error::Representation(format!(
                    "vector for {} does not verify",
                    r.render(ring)
                )));
            }
            reps.push(v);
        }
        Ok(GBWithReps {
            ring: ring.clone(),
            full,
            reduced,
            reps,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.full.generators
    }

    /// The full-labeled basis the reduced basis was derived from.
    pub fn full_basis(&self) -> &LabeledBasis<FullLabeledPoly> {
        &self.full
    }

    /// Monic reduced basis sorted by increasing leading power product.
    pub fn reduced(&self) -> &[Polynomial] {
        &self.reduced
    }

    /// `reps()[i]·F = reduced()[i]`.
    pub fn reps(&self) -> &[ModuleVector] {
        &self.reps
    }

    /// Decides whether `f` lies in the ideal, and if so writes it over the
    /// generators.
    pub fn detach(&self, f: &Polynomial) -> Result<DetachResult> {
        let ring = &self.ring;
        if !f.is_canonical(ring) {
            return Err(Error::Context(format!("query is not over {ring}")));
        }
        let d = divide(f, &self.reduced, ring);
        if !d.remainder.is_zero() {
            return Ok(DetachResult {
                member: false,
                remainder: d.remainder,
                cofactors: None,
            });
        }
        let mut u = ModuleVector::zero(self.generators().len());
        for (q, v) in d.quotients.iter().zip(&self.reps) {
            if !q.is_zero() {
                u = u.add(&v.scale_poly(q, ring), ring)?;
            }
        }
        debug_assert!(verify_representation(f, &u, self.generators(), ring));
        Ok(DetachResult {
            member: true,
            remainder: d.remainder,
            cofactors: Some(u),
        })
    }
}

fn combine(
    quotients: &[Polynomial],
    elements: &[FullLabeledPoly],
    dim: usize,
    ring: &Ring,
) -> Result<ModuleVector> {
    let mut v = ModuleVector::zero(dim);
    for (q, el) in quotients.iter().zip(elements) {
        if !q.is_zero() {
            v = v.add(&el.vec.scale_poly(q, ring), ring)?;
        }
    }
    Ok(v)
}

/// Exact check of `u·F = f`. A length mismatch is a failed check.
pub fn verify_representation(
    f: &Polynomial,
    u: &ModuleVector,
    gens: &[Polynomial],
    ring: &Ring,
) -> bool {
    u.dot(gens, ring).is_ok_and(|p| p == *f)
}
