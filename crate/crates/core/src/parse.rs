//! Text formats: polynomial expressions and system files.
//!
//! Expressions are sums of monomials: `2x^2y + 3z`, `y*z^3 - x^2*t^2`,
//! `-3/2*x`. The `*` between factors is optional, exponents are
//! non-negative integers and coefficients are integers or `a/b`.
//! Parentheses and division by anything but an integer are rejected.
//!
//! A system file is line oriented:
//!
//! ```text
//! # comment
//! field: QQ          (or `Fp 32003`)
//! order: grevlex     (or grlex, lex)
//! vars: x y z t      (first variable is the largest)
//! gens:
//!   y*z^3 - x^2*t^2
//!   x*z^2 - y^2*t
//! basis:             (optional: signature-labeled elements)
//!   x*y*e2: x*y^3*t - z^4*t
//! ```

use num_bigint::BigInt;

use crate::coeff::{Coeff, Field};
use crate::error::{Error, Result};
use crate::module::ModuleMonomial;
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring, TermOrder};

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        pos,
        msg: msg.into(),
    })
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

struct Term {
    coeff: Coeff,
    mono: Monomial,
    unit: Option<usize>,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    /// Longest declared variable name at the cursor.
    fn variable(&mut self) -> Option<usize> {
        let rest = &self.src[self.pos..];
        let (idx, len) = self
            .ring
            .vars()
            .iter()
            .enumerate()
            .filter(|(_, v)| rest.starts_with(v.as_bytes()))
            .map(|(i, v)| (i, v.len()))
            .max_by_key(|&(_, len)| len)?;
        self.pos += len;
        Some(idx)
    }

    /// `e<k>` unit-vector marker, only when no variable matches.
    fn unit_marker(&mut self) -> Option<usize> {
        if self.peek() != Some(b'e') {
            return None;
        }
        let save = self.pos;
        self.pos += 1;
        let k = self
            .digits()
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&k| k >= 1);
        if k.is_none() {
            self.pos = save;
        }
        k
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        match self.digits() {
            Some(d) => d.parse::<u32>().or_else(|_| err(at, "exponent too large")),
            None => err(at, "malformed exponent: expected a non-negative integer"),
        }
    }

    fn number(&mut self) -> Result<Coeff> {
        let at = self.pos;
        let num: BigInt = self.digits().unwrap().parse().unwrap();
        let mut den = BigInt::from(1);
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let dat = self.pos;
            match self.digits() {
                Some(d) => den = d.parse().unwrap(),
                None => return err(dat, "division is only allowed between integers"),
            }
        }
        self.ring
            .field()
            .from_ratio(&num, &den)
            .or_else(|e| err(at, e.to_string()))
    }

    fn term(&mut self, allow_unit: bool) -> Result<Term> {
        let ring = self.ring;
        let mut coeff = ring.coeff(1);
        let mut mono = ring.one_mono();
        let mut unit = None;
        let mut factors = 0;
        loop {
            self.skip_ws();
            if factors > 0 && self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                if matches!(self.peek(), Some(b'(' | b')')) {
                    return err(self.pos, "parentheses are not supported");
                }
                if !self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    return err(self.pos, "expected a factor after `*`");
                }
            }
            let at = self.pos;
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff = coeff.mul(&self.number()?);
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    if let Some(v) = self.variable() {
                        let e = self.exponent()?;
                        mono = mono.mul(&ring.mono(&[(v, e)]));
                    } else if let Some(k) = allow_unit.then(|| self.unit_marker()).flatten() {
                        if unit.is_some() {
                            return err(at, "more than one unit vector in a term");
                        }
                        unit = Some(k - 1);
                    } else {
                        let end = self.src[at..]
                            .iter()
                            .position(|c| !c.is_ascii_alphanumeric() && *c != b'_')
                            .map_or(self.src.len(), |n| at + n);
                        let name = String::from_utf8_lossy(&self.src[at..end]);
                        return err(at, format!("unknown variable `{name}`"));
                    }
                }
                Some(b'/') => return err(at, "division is not supported in expressions"),
                Some(b'(') | Some(b')') => return err(at, "parentheses are not supported"),
                _ => break,
            }
            factors += 1;
        }
        if factors == 0 {
            return err(self.pos, "expected a term");
        }
        Ok(Term { coeff, mono, unit })
    }

    fn sign(&mut self) -> Option<bool> {
        self.skip_ws();
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(false)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }
}

/// Parses a sum-of-monomials expression over `ring`.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let mut terms = Vec::new();
    let mut negative = cur.sign().unwrap_or(false);
    loop {
        let t = cur.term(false)?;
        let c = if negative { t.coeff.neg() } else { t.coeff };
        terms.push((c, t.mono));
        cur.skip_ws();
        if cur.pos == cur.src.len() {
            break;
        }
        match cur.sign() {
            Some(neg) => negative = neg,
            None => {
                return match cur.peek() {
                    Some(b'/') => err(cur.pos, "division is not supported in expressions"),
                    Some(b'(') | Some(b')') => err(cur.pos, "parentheses are not supported"),
                    _ => err(cur.pos, "expected `+` or `-`"),
                }
            }
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

/// Parses a module term such as `x*y*e2` or `e3`.
pub fn parse_module_monomial(text: &str, ring: &Ring) -> Result<ModuleMonomial> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let t = cur.term(true)?;
    cur.skip_ws();
    if cur.pos != cur.src.len() {
        return err(cur.pos, "trailing input after module term");
    }
    if !t.coeff.is_one() {
        return err(0, "module terms carry no coefficient");
    }
    match t.unit {
        Some(index) => Ok(ModuleMonomial::new(t.mono, index)),
        None => err(0, "module term needs a unit vector `e<k>`"),
    }
}

/// A parsed system file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemFile {
    pub ring: Ring,
    pub gens: Vec<Polynomial>,
    /// Signature-labeled elements from an optional `basis:` section.
    pub basis: Vec<(ModuleMonomial, Polynomial)>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Header,
    Gens,
    Basis,
}

fn line_err<T>(line: usize, e: Error) -> Result<T> {
    match e {
        Error::Parse { pos, msg } => err(pos, format!("line {line}: {msg}")),
        other => err(0, format!("line {line}: {other}")),
    }
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<SystemFile> {
        let mut field = Field::Rational;
        let mut order = TermOrder::Grevlex;
        let mut vars: Option<Vec<String>> = None;
        let mut gen_lines: Vec<(usize, String)> = Vec::new();
        let mut basis_lines: Vec<(usize, String)> = Vec::new();
        let mut section = Section::Header;

        for (no, raw) in text.lines().enumerate() {
            let no = no + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let header = line.split_once(':').and_then(|(k, v)| {
                let k = k.trim();
                ["field", "order", "vars", "gens", "basis"]
                    .contains(&k)
                    .then(|| (k, v.trim()))
            });
            match header {
                Some(("field", v)) => {
                    field = match v.split_whitespace().collect::<Vec<_>>().as_slice() {
                        ["QQ"] => Field::Rational,
                        ["Fp", p] => Field::Prime(
                            p.parse()
                                .or_else(|_| err(0, format!("line {no}: bad modulus `{p}`")))?,
                        ),
                        _ => return err(0, format!("line {no}: field must be `QQ` or `Fp <p>`")),
                    };
                    field.validate().or_else(|e| line_err(no, e))?;
                    section = Section::Header;
                }
                Some(("order", v)) => {
                    order = v.parse().or_else(|e| line_err(no, e))?;
                    section = Section::Header;
                }
                Some(("vars", v)) => {
                    vars = Some(
                        v.split(|c: char| c.is_whitespace() || c == ',')
                            .filter(|s| !s.is_empty())
                            .map(String::from)
                            .collect(),
                    );
                    section = Section::Header;
                }
                Some(("gens", v)) => {
                    if !v.is_empty() {
                        gen_lines.push((no, v.to_string()));
                    }
                    section = Section::Gens;
                }
                Some((_, v)) => {
                    if !v.is_empty() {
                        return err(
                            0,
                            format!("line {no}: `basis:` takes entries on following lines"),
                        );
                    }
                    section = Section::Basis;
                }
                None => match section {
                    Section::Gens => gen_lines.push((no, line.to_string())),
                    Section::Basis => basis_lines.push((no, line.to_string())),
                    Section::Header => return err(0, format!("line {no}: unexpected `{line}`")),
                },
            }
        }

        let vars = match vars {
            Some(v) => v,
            None => return err(0, "missing `vars:` line"),
        };
        let ring = Ring::new(vars, order, field).or_else(|e| err(0, e.to_string()))?;
        let mut gens = Vec::new();
        for (no, l) in &gen_lines {
            let f = parse_poly(l, &ring).or_else(|e| line_err(*no, e))?;
            if f.is_zero() {
                return err(0, format!("line {no}: generators must be nonzero"));
            }
            gens.push(f);
        }
        if gens.is_empty() {
            return err(0, "no generators given");
        }
        let mut basis = Vec::new();
        for (no, l) in &basis_lines {
            let Some((sig, poly)) = l.split_once(':') else {
                return err(
                    0,
                    format!("line {no}: expected `<module term>: <polynomial>`"),
                );
            };
            let sig = parse_module_monomial(sig.trim(), &ring).or_else(|e| line_err(*no, e))?;
            if sig.index >= gens.len() {
                return err(
                    0,
                    format!(
                        "line {no}: unit vector beyond the {} generators",
                        gens.len()
                    ),
                );
            }
            let poly = parse_poly(poly, &ring).or_else(|e| line_err(*no, e))?;
            basis.push((sig, poly));
        }
        Ok(SystemFile { ring, gens, basis })
    }

    /// Canonical text of the file.
    pub fn render(&self) -> String {
        let mut out = format!(
            "field: {}\norder: {}\nvars: {}\ngens:\n",
            self.ring.field(),
            self.ring.order().name(),
            self.ring.vars().join(" ")
        );
        for g in &self.gens {
            out.push_str(&format!("  {}\n", g.render(&self.ring)));
        }
        if !self.basis.is_empty() {
            out.push_str("basis:\n");
            for (s, p) in &self.basis {
                out.push_str(&format!(
                    "  {}: {}\n",
                    s.render(&self.ring),
                    p.render(&self.ring)
                ));
            }
        }
        out
    }
}
