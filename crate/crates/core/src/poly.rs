//! Sparse multivariate polynomials over an exact field.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;

use crate::coeff::Coeff;
use crate::ring::{Monomial, Ring};

/// A sum of terms `c·x^α`, stored strictly decreasing under the ring order
/// with nonzero coefficients. The empty list is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Coeff, Monomial)>,
}

fn merge(
    ring: &Ring,
    a: impl Iterator<Item = (Coeff, Monomial)>,
    b: impl Iterator<Item = (Coeff, Monomial)>,
) -> Vec<(Coeff, Monomial)> {
    let mut a = a.peekable();
    let mut b = b.peekable();
    let mut out = Vec::with_capacity(a.size_hint().0 + b.size_hint().0);
    loop {
        let ord = match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some((_, ma)), Some((_, mb))) => ring.cmp(ma, mb),
        };
        match ord {
            Ordering::Greater => out.push(a.next().unwrap()),
            Ordering::Less => out.push(b.next().unwrap()),
            Ordering::Equal => {
                let (ca, m) = a.next().unwrap();
                let (cb, _) = b.next().unwrap();
                let c = ca.add(&cb);
                if !c.is_zero() {
                    out.push((c, m));
                }
            }
        }
    }
    out
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates
    /// and drops zero coefficients.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Coeff, Monomial)>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (c, m) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial outside the ring");
            match acc.get_mut(&m) {
                Some(old) => *old = old.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (c, m))
            .collect();
        terms.sort_by(|(_, a), (_, b)| ring.cmp(b, a));
        Polynomial { terms }
    }

    /// Wraps terms that are already strictly decreasing with nonzero coefficients.
    pub(crate) fn from_sorted(terms: Vec<(Coeff, Monomial)>) -> Self {
        Polynomial { terms }
    }

    pub fn term(c: Coeff, m: Monomial) -> Self {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(c, m)],
            }
        }
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Polynomial::term(c, ring.one_mono())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Coeff, Monomial)] {
        &self.terms
    }

    /// Leading power product; `None` stands for `lpp(0)`.
    pub fn lpp(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn lc(&self) -> Option<&Coeff> {
        self.terms.first().map(|(c, _)| c)
    }

    pub fn lm(&self) -> Option<(&Coeff, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    pub fn coeff_of(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.iter().find(|(_, t)| t == m).map(|(c, _)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn add(&self, other: &Polynomial, ring: &Ring) -> Polynomial {
        Polynomial {
            terms: merge(
                ring,
                self.terms.iter().cloned(),
                other.terms.iter().cloned(),
            ),
        }
    }

    pub fn sub(&self, other: &Polynomial, ring: &Ring) -> Polynomial {
        self.sub_mul_term(&ring.coeff(1), &ring.one_mono(), other, ring)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (c.neg(), m.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (a.mul(c), m.clone()))
                .collect(),
        }
    }

    /// `c·t·self`. Term order is preserved since orders are multiplicative.
    pub fn mul_term(&self, c: &Coeff, t: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(a, m)| (a.mul(c), m.mul(t)))
                .collect(),
        }
    }

    /// `self - c·t·g`, the reduction step.
    pub fn sub_mul_term(&self, c: &Coeff, t: &Monomial, g: &Polynomial, ring: &Ring) -> Polynomial {
        if c.is_zero() {
            return self.clone();
        }
        let neg = c.neg();
        Polynomial {
            terms: merge(
                ring,
                self.terms.iter().cloned(),
                g.terms.iter().map(|(a, m)| (a.mul(&neg), m.mul(t))),
            ),
        }
    }

    pub fn mul(&self, other: &Polynomial, ring: &Ring) -> Polynomial {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero();
        for (c, m) in &small.terms {
            acc = Polynomial {
                terms: merge(
                    ring,
                    acc.terms.into_iter(),
                    large.mul_term(c, m).terms.into_iter(),
                ),
            };
        }
        acc
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.lc() {
            None => Polynomial::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    /// Checks the representation invariant: strictly decreasing, nonzero,
    /// coefficients in the ring's field.
    pub fn is_canonical(&self, ring: &Ring) -> bool {
        self.terms
            .iter()
            .all(|(c, m)| !c.is_zero() && ring.field().owns(c) && m.nvars() == ring.nvars())
            && self
                .terms
                .windows(2)
                .all(|w| ring.cmp(&w[0].1, &w[1].1) == Ordering::Greater)
    }

    /// Canonical text: decreasing terms, `*` between factors, unit
    /// coefficients omitted except on the constant term.
    pub fn render(&self, ring: &Ring) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { c.neg() } else { c.clone() };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                let _ = write!(out, "{magnitude}");
            } else if magnitude.is_one() {
                out.push_str(&ring.fmt_mono(m));
            } else {
                let _ = write!(out, "{magnitude}*{}", ring.fmt_mono(m));
            }
        }
        out
    }
}

/// Result of multivariate division `f = Σ q_i g_i + r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

fn first_divisor<'a>(
    divisors: impl IntoIterator<Item = &'a Polynomial>,
    m: &Monomial,
) -> Option<usize> {
    divisors
        .into_iter()
        .position(|g| g.lpp().is_some_and(|l| l.divides(m)))
}

/// Full multivariate division. The reducer for each step is the lowest-index
/// divisor whose leading power product divides the current leading term;
/// terms with no divisor move to the remainder.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], ring: &Ring) -> Division {
    let mut quotient_terms: Vec<Vec<(Coeff, Monomial)>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some((c, m)) = p.lm().map(|(c, m)| (c.clone(), m.clone())) {
        match first_divisor(divisors, &m) {
            Some(i) => {
                let g = &divisors[i];
                let (gc, gm) = g.lm().expect("divisor is nonzero");
                let q = c.div(gc);
                let t = m.div_unchecked(gm);
                p = p.sub_mul_term(&q, &t, g, ring);
                // quotient monomials come out strictly decreasing per divisor
                quotient_terms[i].push((q, t));
            }
            None => {
                remainder.push((c, m));
                p.terms.remove(0);
            }
        }
    }
    Division {
        quotients: quotient_terms
            .into_iter()
            .map(Polynomial::from_sorted)
            .collect(),
        remainder: Polynomial::from_sorted(remainder),
    }
}

/// Remainder of `f` on full division by `divisors` (zero divisors are ignored).
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], ring: &Ring) -> Polynomial {
    let nonzero: Vec<Polynomial> = divisors.iter().filter(|g| !g.is_zero()).cloned().collect();
    divide(f, &nonzero, ring).remainder
}

/// Turns a Gröbner basis into the reduced Gröbner basis, sorted ascending by
/// leading power product.
pub fn interreduce(basis: &[Polynomial], ring: &Ring) -> Vec<Polynomial> {
    let candidates: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, g) in candidates.iter().enumerate() {
        let lg = g.lpp().unwrap();
        let redundant = candidates.iter().enumerate().any(|(j, h)| {
            let lh = h.lpp().unwrap();
            // strictly smaller divisor, or an equal leading term seen earlier
            j != i && lh.divides(lg) && (lh != lg || j < i)
        });
        if !redundant {
            minimal.push(g.monic());
        }
    }
    let reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let g = &minimal[i];
            let (c, m) = g.lm().unwrap();
            let tail = Polynomial::from_sorted(g.terms[1..].to_vec());
            let tail = normal_form(&tail, &others, ring);
            Polynomial::from_sorted(
                std::iter::once((c.clone(), m.clone()))
                    .chain(tail.terms)
                    .collect(),
            )
        })
        .collect();
    let mut reduced = reduced;
    reduced.sort_by(|a, b| ring.cmp(a.lpp().unwrap(), b.lpp().unwrap()));
    reduced
}

/// Checks `f - normal_form(f, G)` lies in the ideal by exhibiting the quotients.
pub fn division_identity_holds(
    f: &Polynomial,
    divisors: &[Polynomial],
    d: &Division,
    ring: &Ring,
) -> bool {
    let mut acc = d.remainder.clone();
    for (q, g) in d.quotients.iter().zip(divisors) {
        acc = acc.add(&q.mul(g, ring), ring);
    }
    acc == *f
}
