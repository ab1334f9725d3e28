//! The free module `R^m` with the position-over-term order.

use std::cmp::Ordering;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

/// A module term `x^α e_j`. `index` is 0-based: `index == 0` is `e_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleMonomial {
    pub mono: Monomial,
    pub index: usize,
}

impl ModuleMonomial {
    pub fn new(mono: Monomial, index: usize) -> Self {
        ModuleMonomial { mono, index }
    }

    /// The unit vector `e_{index+1}`.
    pub fn unit(ring: &Ring, index: usize) -> Self {
        ModuleMonomial {
            mono: ring.one_mono(),
            index,
        }
    }

    pub fn mul_mono(&self, t: &Monomial) -> ModuleMonomial {
        ModuleMonomial {
            mono: self.mono.mul(t),
            index: self.index,
        }
    }

    /// `self` divides `other` as module terms (same slot, dividing monomial).
    pub fn divides(&self, other: &ModuleMonomial) -> bool {
        self.index == other.index && self.mono.divides(&other.mono)
    }

    pub fn render(&self, ring: &Ring) -> String {
        if self.mono.is_one() {
            format!("e{}", self.index + 1)
        } else {
            format!("{}*e{}", ring.fmt_mono(&self.mono), self.index + 1)
        }
    }
}

impl Ring {
    /// Position over term: the lower slot index is larger
    /// (`e_1 ≻ e_2 ≻ ... ≻ e_m`), ties broken by the ring order.
    pub fn cmp_module(&self, a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
        b.index
            .cmp(&a.index)
            .then_with(|| self.cmp(&a.mono, &b.mono))
    }
}

/// An element `(p_1, ..., p_m)` of `R^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    components: Vec<Polynomial>,
}

impl ModuleVector {
    pub fn zero(m: usize) -> Self {
        ModuleVector {
            components: vec![Polynomial::zero(); m],
        }
    }

    pub fn from_components(components: Vec<Polynomial>) -> Self {
        ModuleVector { components }
    }

    /// `c·x^α e_j` as a vector of length `m`.
    pub fn term(m: usize, c: Coeff, sig: &ModuleMonomial) -> Self {
        let mut v = ModuleVector::zero(m);
        v.components[sig.index] = Polynomial::term(c, sig.mono.clone());
        v
    }

    pub fn unit(ring: &Ring, m: usize, index: usize) -> Self {
        ModuleVector::term(m, ring.coeff(1), &ModuleMonomial::unit(ring, index))
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    fn check_dim(&self, other: usize) -> Result<()> {
        if self.dim() == other {
            Ok(())
        } else {
            Err(Error::Context(format!(
                "vectors of length {} and {other}",
                self.dim()
            )))
        }
    }

    pub fn add(&self, other: &ModuleVector, ring: &Ring) -> Result<ModuleVector> {
        self.check_dim(other.dim())?;
        Ok(ModuleVector {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b, ring))
                .collect(),
        })
    }

    pub fn sub(&self, other: &ModuleVector, ring: &Ring) -> Result<ModuleVector> {
        self.check_dim(other.dim())?;
        Ok(ModuleVector {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub(b, ring))
                .collect(),
        })
    }

    /// `self - c·t·other`.
    pub fn sub_mul_term(
        &self,
        c: &Coeff,
        t: &Monomial,
        other: &ModuleVector,
        ring: &Ring,
    ) -> ModuleVector {
        assert_eq!(self.dim(), other.dim(), "module vector length mismatch");
        ModuleVector {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.sub_mul_term(c, t, b, ring))
                .collect(),
        }
    }

    /// `c·t·self`.
    pub fn scale_term(&self, c: &Coeff, t: &Monomial) -> ModuleVector {
        ModuleVector {
            components: self.components.iter().map(|p| p.mul_term(c, t)).collect(),
        }
    }

    /// `p·self` for a polynomial multiplier.
    pub fn scale_poly(&self, p: &Polynomial, ring: &Ring) -> ModuleVector {
        ModuleVector {
            components: self.components.iter().map(|q| q.mul(p, ring)).collect(),
        }
    }

    /// Leading module term under POT: the first nonzero slot and its
    /// leading power product. `None` for the zero vector.
    pub fn lpp(&self) -> Option<ModuleMonomial> {
        self.lm().map(|(_, s)| s)
    }

    pub fn lm(&self) -> Option<(Coeff, ModuleMonomial)> {
        self.components.iter().enumerate().find_map(|(j, p)| {
            p.lm()
                .map(|(c, m)| (c.clone(), ModuleMonomial::new(m.clone(), j)))
        })
    }

    pub fn lc(&self) -> Option<Coeff> {
        self.lm().map(|(c, _)| c)
    }

    /// Inner product `Σ p_j f_j`.
    pub fn dot(&self, gens: &[Polynomial], ring: &Ring) -> Result<Polynomial> {
        self.check_dim(gens.len())?;
        Ok(self
            .components
            .iter()
            .zip(gens)
            .filter(|(p, _)| !p.is_zero())
            .fold(Polynomial::zero(), |acc, (p, f)| {
                acc.add(&p.mul(f, ring), ring)
            }))
    }

    pub fn render(&self, ring: &Ring) -> Vec<String> {
        self.components.iter().map(|p| p.render(ring)).collect()
    }
}
