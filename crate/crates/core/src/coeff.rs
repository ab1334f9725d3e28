//! Exact coefficients: arbitrary-precision rationals and residues modulo a prime.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Field::Rational => Ok(()),
            Field::Prime(p) if p > 2 && is_prime(p) => Ok(()),
            Field::Prime(p) => Err(Error::InvalidRing(format!(
                "modulus {p} must be a prime greater than 2"
            ))),
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coeff {
        match *self {
            Field::Rational => Coeff::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::Modular {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Maps `num / den` into the field. Fails when `den` vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        match *self {
            Field::Rational => Ok(Coeff::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let reduce = |x: &BigInt| {
                    let r = x % BigInt::from(p);
                    let r = if r.is_negative() {
                        r + BigInt::from(p)
                    } else {
                        r
                    };
                    r.to_u32().expect("residue fits in u32")
                };
                let d = reduce(den);
                if d == 0 {
                    return Err(Error::InvalidInput(format!(
                        "denominator {den} vanishes modulo {p}"
                    )));
                }
                let n = Coeff::Modular {
                    value: reduce(num),
                    modulus: p,
                };
                let d = Coeff::Modular {
                    value: d,
                    modulus: p,
                };
                Ok(n.div(&d))
            }
        }
    }

    /// Whether `c` belongs to this field.
    pub fn owns(&self, c: &Coeff) -> bool {
        match (self, c) {
            (Field::Rational, Coeff::Rational(_)) => true,
            (Field::Prime(p), Coeff::Modular { modulus, .. }) => p == modulus,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "Fp {p}"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Rationals are kept in lowest terms with a positive
/// denominator (guaranteed by `BigRational`); residues live in `[0, p)`.
///
/// Mixing elements of different fields is a programming error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

fn mismatch() -> ! {
    panic!("coefficients from different fields")
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_zero(),
            Coeff::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_one(),
            Coeff::Modular { value, .. } => *value == 1,
        }
    }

    /// True for `-1`.
    pub fn is_minus_one(&self) -> bool {
        self.neg().is_one()
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a + b),
            (
                Coeff::Modular {
                    value: a,
                    modulus: p,
                },
                Coeff::Modular {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Coeff::Modular {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            _ => mismatch(),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(-a),
            Coeff::Modular { value, modulus } => Coeff::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Coeff::Rational(a * b),
            (
                Coeff::Modular {
                    value: a,
                    modulus: p,
                },
                Coeff::Modular {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Coeff::Modular {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            _ => mismatch(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Coeff {
        assert!(!self.is_zero(), "inverse of zero coefficient");
        match self {
            Coeff::Rational(a) => Coeff::Rational(a.recip()),
            Coeff::Modular { value, modulus } => Coeff::Modular {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        }
    }

    pub fn div(&self, other: &Coeff) -> Coeff {
        self.mul(&other.inv())
    }

    /// Whether the canonical rendering starts with a minus sign. Residues
    /// above `p/2` print as their negative.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(a) => a.is_negative(),
            Coeff::Modular { value, modulus } => *value > modulus / 2,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Modular { value, modulus } if self.is_negative() => {
                write!(f, "-{}", modulus - value)
            }
            Coeff::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}
