//! Labeled polynomials at three levels of detail.
//!
//! * [`FullLabeledPoly`] `f^[u]`: the polynomial and a full cofactor vector
//!   with `f = u·F`.
//! * [`MonoLabeledPoly`] `g^{c·t}`: only the leading monomial `c·t` of the
//!   (hidden) cofactor vector.
//! * [`SigLabeledPoly`] `g^(t)`: only the leading power product `t`, the
//!   signature, plus an insertion stamp.

use std::cmp::Ordering;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::module::{ModuleMonomial, ModuleVector};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullLabeledPoly {
    pub poly: Polynomial,
    pub vec: ModuleVector,
}

impl FullLabeledPoly {
    /// `f_i^[e_i]`.
    pub fn generator(ring: &Ring, gens: &[Polynomial], index: usize) -> Self {
        FullLabeledPoly {
            poly: gens[index].clone(),
            vec: ModuleVector::unit(ring, gens.len(), index),
        }
    }

    /// Builds `poly^[vec]` after checking `poly = vec·F`.
    pub fn checked(
        poly: Polynomial,
        vec: ModuleVector,
        gens: &[Polynomial],
        ring: &Ring,
    ) -> Result<Self> {
        let l = FullLabeledPoly { poly, vec };
        if l.is_valid(gens, ring) {
            Ok(l)
        } else {
            Err(Error::InvalidInput(
                "labeled polynomial does not satisfy f = u·F".into(),
            ))
        }
    }

    pub fn is_valid(&self, gens: &[Polynomial], ring: &Ring) -> bool {
        self.vec.dot(gens, ring).is_ok_and(|p| p == self.poly)
    }

    /// `f^[u] + g^[v] = (f+g)^[u+v]`.
    pub fn add(&self, other: &FullLabeledPoly, ring: &Ring) -> Result<FullLabeledPoly> {
        Ok(FullLabeledPoly {
            poly: self.poly.add(&other.poly, ring),
            vec: self.vec.add(&other.vec, ring)?,
        })
    }

    /// `c·t·(f^[u]) = (ctf)^[ctu]`.
    pub fn scale(&self, c: &Coeff, t: &Monomial) -> Result<FullLabeledPoly> {
        if c.is_zero() {
            return Err(Error::InvalidInput("labeled scaling by zero".into()));
        }
        Ok(FullLabeledPoly {
            poly: self.poly.mul_term(c, t),
            vec: self.vec.scale_term(c, t),
        })
    }

    /// `lpp(u)`.
    pub fn signature(&self) -> Result<ModuleMonomial> {
        self.vec.lpp().ok_or(Error::ZeroSignature)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoLabeledPoly {
    pub poly: Polynomial,
    pub coeff: Coeff,
    pub sig: ModuleMonomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigLabeledPoly {
    pub poly: Polynomial,
    pub sig: ModuleMonomial,
    /// Insertion counter; a larger stamp means added later.
    pub stamp: usize,
}

/// A labeled basis together with the generators its labels refer to.
/// Elements are kept in insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledBasis<T> {
    pub generators: Vec<Polynomial>,
    pub elements: Vec<T>,
}

impl<T> LabeledBasis<T> {
    pub fn new(generators: Vec<Polynomial>, elements: Vec<T>) -> Self {
        LabeledBasis {
            generators,
            elements,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl LabeledBasis<SigLabeledPoly> {
    /// Builds a signature-labeled basis from `(signature, polynomial)` pairs,
    /// stamping them in the given order.
    pub fn from_pairs(
        generators: Vec<Polynomial>,
        pairs: Vec<(ModuleMonomial, Polynomial)>,
    ) -> Result<Self> {
        if generators.iter().any(Polynomial::is_zero) {
            return Err(Error::InvalidInput("generators must be nonzero".into()));
        }
        if let Some((s, _)) = pairs.iter().find(|(s, _)| s.index >= generators.len()) {
            return Err(Error::Context(format!(
                "signature slot {} beyond {} generators",
                s.index + 1,
                generators.len()
            )));
        }
        let elements = pairs
            .into_iter()
            .enumerate()
            .map(|(stamp, (sig, poly))| SigLabeledPoly { poly, sig, stamp })
            .collect();
        Ok(LabeledBasis {
            generators,
            elements,
        })
    }
}

impl LabeledBasis<FullLabeledPoly> {
    /// `{f_1^[e_1], ..., f_m^[e_m]}`.
    pub fn trivial(ring: &Ring, generators: Vec<Polynomial>) -> Self {
        let elements = (0..generators.len())
            .map(|i| FullLabeledPoly::generator(ring, &generators, i))
            .collect();
        LabeledBasis {
            generators,
            elements,
        }
    }
}

/// Whether the admissible pair `(g, sig)` is a standard form with respect to
/// the signature-labeled Gröbner basis `basis`: `g = 0`, or no element has a
/// leading power product dividing `lpp(g)` with `t·t_i ≺ sig`.
pub fn is_standard_form(
    g: &Polynomial,
    sig: &ModuleMonomial,
    basis: &LabeledBasis<SigLabeledPoly>,
    ring: &Ring,
) -> bool {
    let Some(lg) = g.lpp() else { return true };
    !basis.elements.iter().any(|el| {
        el.poly.lpp().is_some_and(|li| {
            li.divides(lg)
                && ring.cmp_module(&el.sig.mul_mono(&lg.div_unchecked(li)), sig) == Ordering::Less
        })
    })
}

/// Why a witness is not covered by a candidate full-labeled basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub witness_lpp: Monomial,
    pub witness_sig: ModuleMonomial,
    /// Elements whose leading power product divides the witness's, with the
    /// scaled signature `lpp(t·v)` each would need to be `⪯ witness_sig`.
    pub rejected: Vec<(usize, ModuleMonomial)>,
}

/// Searches for a reason `basis` fails the full-labeled Gröbner basis
/// definition at `witness`. Returns `None` when some element covers it.
///
/// This is a falsifier: the definition quantifies over the whole ideal and
/// only the given witness is inspected.
pub fn refute_full_labeled(
    basis: &LabeledBasis<FullLabeledPoly>,
    witness: &FullLabeledPoly,
    ring: &Ring,
) -> Result<Option<Violation>> {
    let Some(lf) = witness.poly.lpp() else {
        return Err(Error::InvalidInput("witness polynomial is zero".into()));
    };
    if !witness.is_valid(&basis.generators, ring) {
        return Err(Error::InvalidInput(
            "witness does not satisfy f = u·F".into(),
        ));
    }
    let wsig = witness.signature()?;
    let mut rejected = Vec::new();
    for (i, g) in basis.elements.iter().enumerate() {
        let Some(lg) = g.poly.lpp() else { continue };
        if !lg.divides(lf) {
            continue;
        }
        let Some(gsig) = g.vec.lpp() else { continue };
        let scaled = gsig.mul_mono(&lf.div_unchecked(lg));
        if ring.cmp_module(&scaled, &wsig) != Ordering::Greater {
            return Ok(None);
        }
        rejected.push((i, scaled));
    }
    Ok(Some(Violation {
        witness_lpp: lf.clone(),
        witness_sig: wsig,
        rejected,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::fixtures;
    use crate::parse::{parse_module_monomial, parse_poly};
    use crate::ring::TermOrder;

    fn example22() -> (Ring, Vec<Polynomial>) {
        let r = Ring::new(["x", "y", "z"], TermOrder::Grevlex, Field::Rational).unwrap();
        let f = ["x*z - y", "y^2 + x*z", "2*x*y + 2*x"]
            .iter()
            .map(|s| parse_poly(s, &r).unwrap())
            .collect();
        (r, f)
    }

    #[test]
    fn labeled_arithmetic() {
        let (r, f) = example22();
        let f2 = FullLabeledPoly::generator(&r, &f, 1);
        let f3 = FullLabeledPoly::generator(&r, &f, 2);
        let zero = f2
            .add(&f2.scale(&r.coeff(-1), &r.one_mono()).unwrap(), &r)
            .unwrap();
        assert!(zero.poly.is_zero() && zero.vec.is_zero());
        let x = r.mono(&[(0, 1)]);
        let y = r.mono(&[(1, 1)]);
        let w = f2
            .scale(&r.coeff(2), &x)
            .unwrap()
            .add(&f3.scale(&r.coeff(-1), &y).unwrap(), &r)
            .unwrap();
        assert_eq!(w.poly, parse_poly("2*x^2*z - 2*x*y", &r).unwrap());
        assert!(w.is_valid(&f, &r));
        assert_eq!(w.signature().unwrap(), ModuleMonomial::new(x, 1));
        assert_eq!(f2.scale(&r.coeff(1), &r.one_mono()).unwrap(), f2);
        assert!(f2.scale(&r.coeff(0), &r.one_mono()).is_err());
        assert_eq!(f3.signature().unwrap(), ModuleMonomial::unit(&r, 2));
        let z = FullLabeledPoly {
            poly: Polynomial::zero(),
            vec: ModuleVector::zero(3),
        };
        assert_eq!(z.signature(), Err(Error::ZeroSignature));
    }

    #[test]
    fn signature_of_ninth_example_vector() {
        let sys = fixtures::example_system();
        let r = &sys.ring;
        let v = ModuleVector::from_components(
            ["-x^3 + y*t^2", "z^3*t", "x*z^3 + t^4"]
                .iter()
                .map(|s| parse_poly(s, r).unwrap())
                .collect(),
        );
        let l = FullLabeledPoly {
            poly: v.dot(&sys.gens, r).unwrap(),
            vec: v,
        };
        assert_eq!(
            l.signature().unwrap(),
            parse_module_monomial("x^3*e1", r).unwrap()
        );
        assert_eq!(l.vec.lc().unwrap(), r.coeff(-1));
    }

    #[test]
    fn standard_form_examples() {
        let s = fixtures::example_signature_basis();
        let r = &fixtures::example_system().ring;
        let xye2 = parse_module_monomial("x*y*e2", r).unwrap();
        assert!(is_standard_form(
            &parse_poly("x*y^3*t - z^4*t", r).unwrap(),
            &xye2,
            &s,
            r
        ));
        assert!(is_standard_form(&Polynomial::zero(), &xye2, &s, r));
        assert!(!is_standard_form(
            &parse_poly("x^2*y*z^2 - x*y^3*t", r).unwrap(),
            &xye2,
            &s,
            r
        ));
    }

    #[test]
    fn standard_form_is_monotone_in_the_basis() {
        let full = fixtures::example_signature_basis();
        let r = &fixtures::example_system().ring;
        let g = parse_poly("x^2*y*z^2 - x*y^3*t", r).unwrap();
        let sig = parse_module_monomial("x*y*e2", r).unwrap();
        for k in 0..=full.len() {
            let prefix = LabeledBasis::new(full.generators.clone(), full.elements[..k].to_vec());
            if !is_standard_form(&g, &sig, &prefix, r) {
                for j in k..=full.len() {
                    let bigger =
                        LabeledBasis::new(full.generators.clone(), full.elements[..j].to_vec());
                    assert!(!is_standard_form(&g, &sig, &bigger, r));
                }
            }
        }
    }

    #[test]
    fn example22_falsification() {
        let (r, f) = example22();
        let trivial = LabeledBasis::trivial(&r, f.clone());
        let x = r.mono(&[(0, 1)]);
        let y = r.mono(&[(1, 1)]);
        let witness = trivial.elements[1]
            .scale(&r.coeff(2), &x)
            .unwrap()
            .add(&trivial.elements[2].scale(&r.coeff(-1), &y).unwrap(), &r)
            .unwrap();
        let v = refute_full_labeled(&trivial, &witness, &r)
            .unwrap()
            .expect("violation");
        assert_eq!(v.rejected, vec![(0, ModuleMonomial::new(x.clone(), 0))]);
        assert_eq!(v.witness_sig, ModuleMonomial::new(x, 1));

        let mut augmented = trivial.clone();
        augmented.elements.push(witness.clone());
        assert_eq!(refute_full_labeled(&augmented, &witness, &r).unwrap(), None);
        assert_eq!(
            refute_full_labeled(&trivial, &trivial.elements[0], &r).unwrap(),
            None
        );

        let bogus = FullLabeledPoly {
            poly: f[0].clone(),
            vec: ModuleVector::unit(&r, 3, 1),
        };
        assert!(refute_full_labeled(&trivial, &bogus, &r).is_err());
    }
}
