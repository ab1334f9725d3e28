//! Polynomial rings, power products and term orders.

use std::cmp::Ordering;
use std::fmt;

use crate::coeff::{Coeff, Field};
use crate::error::{Error, Result};

/// Term order on power products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    Lex,
    Grlex,
    #[default]
    Grevlex,
}

impl TermOrder {
    pub fn name(&self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::Grlex => "grlex",
            TermOrder::Grevlex => "grevlex",
        }
    }
}

impl std::str::FromStr for TermOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(TermOrder::Lex),
            "grlex" => Ok(TermOrder::Grlex),
            "grevlex" | "degrevlex" => Ok(TermOrder::Grevlex),
            other => Err(Error::InvalidRing(format!("unknown term order `{other}`"))),
        }
    }
}

/// A power product `x^α`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    fn check_len(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(Error::Context(format!(
                "monomials over {} and {} variables",
                self.exps.len(),
                other.exps.len()
            )))
        }
    }

    /// Componentwise exponent sum.
    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(self.mul(other))
    }

    /// Like [`Monomial::try_mul`] but panics on a length mismatch.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "monomial length mismatch"
        );
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor`; fails unless `divisor` divides `self`.
    pub fn try_div(&self, divisor: &Monomial) -> Result<Monomial> {
        self.check_len(divisor)?;
        if !divisor.divides(self) {
            return Err(Error::NotDivisible(format!(
                "{:?} by {:?}",
                self.exps, divisor.exps
            )));
        }
        Ok(self.div_unchecked(divisor))
    }

    pub(crate) fn div_unchecked(&self, divisor: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&divisor.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "monomial length mismatch"
        );
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }
}

/// The ambient ring `K[x_1, ..., x_n]` with its term order.
///
/// Variables are listed from largest to smallest: `vars[0]` is the
/// most significant variable under every order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    order: TermOrder,
    field: Field,
}

impl Ring {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        order: TermOrder,
        field: Field,
    ) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing(
                "at least one variable is required".into(),
            ));
        }
        for (i, v) in vars.iter().enumerate() {
            let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(Error::InvalidRing(format!("bad variable name `{v}`")));
            }
            if v.starts_with('e') && v[1..].chars().all(|c| c.is_ascii_digit()) && v.len() > 1 {
                return Err(Error::InvalidRing(format!(
                    "variable name `{v}` clashes with unit-vector notation"
                )));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        field.validate()?;
        Ok(Ring { vars, order, field })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn one_mono(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn coeff(&self, n: i64) -> Coeff {
        self.field.from_i64(n)
    }

    /// Builds a monomial from `(variable index, exponent)` pairs.
    pub fn mono(&self, powers: &[(usize, u32)]) -> Monomial {
        let mut m = self.one_mono();
        for &(i, e) in powers {
            m.exps[i] += e;
        }
        m
    }

    /// Compares two power products under the ring's term order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self.order {
            TermOrder::Lex => a.exps.cmp(&b.exps),
            TermOrder::Grlex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exps.cmp(&b.exps)),
            TermOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        // smaller exponent in the last differing variable wins
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    /// Order with the zero marker `None` below every power product.
    pub fn cmp_opt(&self, a: Option<&Monomial>, b: Option<&Monomial>) -> Ordering {
        match (a, b) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => self.cmp(a, b),
        }
    }

    /// Renders a power product, `1` for the unit.
    pub fn fmt_mono(&self, m: &Monomial) -> String {
        let parts: Vec<String> = self
            .vars
            .iter()
            .zip(m.exps())
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| {
                if e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}] ({})",
            self.field,
            self.vars.join(","),
            self.order.name()
        )
    }
}
