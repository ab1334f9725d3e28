//! Reference implementations used to cross-check the signature pipeline:
//! a plain Buchberger loop that carries cofactor vectors, a Gröbner basis
//! test, and seeded random inputs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{Coeff, Field};
use crate::error::{Error, Result};
use crate::labeled::FullLabeledPoly;
use crate::module::ModuleVector;
use crate::poly::{normal_form, Polynomial};
use crate::ring::{Monomial, Ring};

/// Output of [`buchberger_with_cofactors`]: a Gröbner basis whose elements
/// each carry `v` with `poly = v·F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBasis {
    pub generators: Vec<Polynomial>,
    pub elements: Vec<FullLabeledPoly>,
}

impl OracleBasis {
    pub fn polys(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|e| e.poly.clone()).collect()
    }
}

fn s_multipliers(f: &Polynomial, g: &Polynomial) -> (Monomial, Monomial, Monomial) {
    let (lf, lg) = (f.lpp().unwrap(), g.lpp().unwrap());
    let lcm = lf.lcm(lg);
    let tf = lcm.div_unchecked(lf);
    let tg = lcm.div_unchecked(lg);
    (lcm, tf, tg)
}

fn s_poly(f: &Polynomial, g: &Polynomial, ring: &Ring) -> (Polynomial, Coeff, Monomial, Monomial) {
    let (_, tf, tg) = s_multipliers(f, g);
    let c = f.lc().unwrap().div(g.lc().unwrap());
    let s = f
        .mul_term(&ring.coeff(1), &tf)
        .sub_mul_term(&c, &tg, g, ring);
    (s, c, tf, tg)
}

fn check_identity(
    h: &Polynomial,
    v: &ModuleVector,
    gens: &[Polynomial],
    ring: &Ring,
) -> Result<()> {
    if v.dot(gens, ring)? == *h {
        Ok(())
    } else {
        Err(Error::Representation(format!(
            "cofactor track broke at {}",
            h.render(ring)
        )))
    }
}

/// Buchberger's algorithm with the generators' unit vectors carried along.
/// Pairs are taken by smallest lcm degree; no pair is skipped.
pub fn buchberger_with_cofactors(ring: &Ring, gens: &[Polynomial]) -> Result<OracleBasis> {
    if gens.iter().any(Polynomial::is_zero) {
        return Err(Error::InvalidInput("generators must be nonzero".into()));
    }
    let m = gens.len();
    let mut basis: Vec<FullLabeledPoly> = (0..m)
        .map(|i| FullLabeledPoly::generator(ring, gens, i))
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..m).flat_map(|j| (0..j).map(move |i| (i, j))).collect();

    while !pairs.is_empty() {
        let lcm_degree =
            |&(i, j): &(usize, usize)| s_multipliers(&basis[i].poly, &basis[j].poly).0.degree();
        let best = (0..pairs.len())
            .min_by_key(|&k| (lcm_degree(&pairs[k]), pairs[k]))
            .unwrap();
        let (i, j) = pairs.remove(best);
        let (s, c, tf, tg) = s_poly(&basis[i].poly, &basis[j].poly, ring);
        let one = ring.coeff(1);
        let v = basis[i]
            .vec
            .scale_term(&one, &tf)
            .sub_mul_term(&c, &tg, &basis[j].vec, ring);
        check_identity(&s, &v, gens, ring)?;

        // full reduction; h + r = v·F throughout
        let (mut h, mut v) = (s, v);
        let mut r = Polynomial::zero();
        while let Some((hc, hm)) = h.lm().map(|(c, m)| (c.clone(), m.clone())) {
            match basis
                .iter()
                .find(|b| b.poly.lpp().is_some_and(|l| l.divides(&hm)))
            {
                Some(b) => {
                    let q = hc.div(b.poly.lc().unwrap());
                    let t = hm.div_unchecked(b.poly.lpp().unwrap());
                    h = h.sub_mul_term(&q, &t, &b.poly, ring);
                    v = v.sub_mul_term(&q, &t, &b.vec, ring);
                }
                None => {
                    let lead = Polynomial::term(hc, hm);
                    h = h.sub(&lead, ring);
                    r = r.add(&lead, ring);
                }
            }
            check_identity(&h.add(&r, ring), &v, gens, ring)?;
        }
        if let Some(lc) = r.lc() {
            let inv = lc.inv();
            let el = FullLabeledPoly {
                poly: r.scale(&inv),
                vec: v.scale_term(&inv, &ring.one_mono()),
            };
            let k = basis.len();
            basis.push(el);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    Ok(OracleBasis {
        generators: gens.to_vec(),
        elements: basis,
    })
}

/// Whether every S-polynomial of the nonzero elements of `g` reduces to
/// zero modulo `g`.
pub fn is_groebner(g: &[Polynomial], ring: &Ring) -> bool {
    let g: Vec<Polynomial> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    (0..g.len())
        .all(|j| (0..j).all(|i| normal_form(&s_poly(&g[i], &g[j], ring).0, &g, ring).is_zero()))
}

fn random_coeff(field: Field, rng: &mut ChaCha8Rng) -> Coeff {
    match field {
        Field::Rational => {
            let c = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
            field.from_i64(c)
        }
        Field::Prime(p) => field.from_i64(rng.gen_range(1..p as i64)),
    }
}

fn random_monomial(nvars: usize, max_deg: u32, rng: &mut ChaCha8Rng) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_deg)).collect();
        if exps.iter().sum::<u32>() <= max_deg {
            return Monomial::new(exps);
        }
    }
}

fn random_poly(ring: &Ring, max_deg: u32, max_terms: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let n = rng.gen_range(1..=max_terms);
    let terms: Vec<(Coeff, Monomial)> = (0..n)
        .map(|_| {
            (
                random_coeff(ring.field(), rng),
                random_monomial(ring.nvars(), max_deg, rng),
            )
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// `n_gens` seeded random polynomials with total degree at most `max_deg`
/// and at most `max_terms` terms. Every generator is nonconstant.
pub fn random_system(
    ring: &Ring,
    n_gens: usize,
    max_deg: u32,
    max_terms: usize,
    seed: u64,
) -> Vec<Polynomial> {
    assert!(
        max_deg >= 1 && max_terms >= 1,
        "degree and term bounds must be positive"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n_gens)
        .map(|_| loop {
            let p = random_poly(ring, max_deg, max_terms, &mut rng);
            if p.total_degree().is_some_and(|d| d > 0) {
                break p;
            }
        })
        .collect()
}

/// A seeded random vector of length `m`; some components may be zero.
pub fn random_vector(
    ring: &Ring,
    m: usize,
    max_deg: u32,
    max_terms: usize,
    seed: u64,
) -> ModuleVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ModuleVector::from_components(
        (0..m)
            .map(|_| {
                if rng.gen_bool(0.25) {
                    Polynomial::zero()
                } else {
                    random_poly(ring, max_deg, max_terms, &mut rng)
                }
            })
            .collect(),
    )
}

/// A random combination `Σ p_i g_i` of labeled polynomials, carrying the
/// matching vector.
pub fn random_combination(
    ring: &Ring,
    basis: &[FullLabeledPoly],
    max_deg: u32,
    max_terms: usize,
    seed: u64,
) -> FullLabeledPoly {
    let p = random_vector(ring, basis.len(), max_deg, max_terms, seed);
    let dim = basis.first().map_or(0, |b| b.vec.dim());
    let mut acc = FullLabeledPoly {
        poly: Polynomial::zero(),
        vec: ModuleVector::zero(dim),
    };
    for (pi, b) in p.components().iter().zip(basis) {
        acc.poly = acc.poly.add(&b.poly.mul(pi, ring), ring);
        acc.vec = acc
            .vec
            .add(&b.vec.scale_poly(pi, ring), ring)
            .expect("labels share a length");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::parse::parse_poly;
    use crate::poly::interreduce;
    use crate::ring::TermOrder;

    fn polys(r: &Ring, xs: &[&str]) -> Vec<Polynomial> {
        xs.iter().map(|s| parse_poly(s, r).unwrap()).collect()
    }

    #[test]
    fn example_reduced_basis() {
        let sys = fixtures::example_system();
        let r = &sys.ring;
        let gb = buchberger_with_cofactors(r, &sys.gens).unwrap();
        assert!(gb.elements.iter().all(|e| e.is_valid(&sys.gens, r)));
        let expected = polys(
            r,
            &[
                "x^2*y - z^2*t",
                "x*z^2 - y^2*t",
                "x*y^3*t - z^4*t",
                "y*z^3 - x^2*t^2",
                "y^3*z*t - x^3*t^2",
                "z^5*t - x^4*t^2",
                "y^5*t^2 - x^4*z*t^2",
                "x^5*t^2 - z^2*t^5",
            ],
        );
        assert_eq!(interreduce(&gb.polys(), r), interreduce(&expected, r));
        assert!(is_groebner(&expected, r));
    }

    #[test]
    fn groebner_checks() {
        let r = Ring::new(["x", "y", "z"], TermOrder::Grevlex, Field::Rational).unwrap();
        assert!(is_groebner(
            &fixtures::small_gb_system().gens,
            &fixtures::small_gb_system().ring
        ));
        assert!(!is_groebner(&polys(&r, &["x^2 - y", "x"]), &r));
        assert!(is_groebner(&polys(&r, &["x^2*y + z"]), &r));
        let g = buchberger_with_cofactors(&r, &polys(&r, &["x^2", "x*y"])).unwrap();
        assert_eq!(g.elements.len(), 2);
    }

    #[test]
    fn random_inputs_are_reproducible() {
        let r = Ring::new(["x", "y", "z"], TermOrder::Grevlex, Field::Prime(32003)).unwrap();
        let a = random_system(&r, 3, 3, 4, 11);
        assert_eq!(a, random_system(&r, 3, 3, 4, 11));
        assert_ne!(a, random_system(&r, 3, 3, 4, 12));
        assert!(a
            .iter()
            .all(|p| p.total_degree().unwrap() <= 3 && p.len() <= 4));
        let one = random_system(&r, 1, 3, 4, 5);
        assert!(is_groebner(&one, &r));
        let v = random_vector(&r, 3, 2, 3, 1);
        assert_eq!(v, random_vector(&r, 3, 2, 3, 1));
    }

    #[test]
    fn oracle_output_is_groebner() {
        let r = Ring::new(["x", "y", "z"], TermOrder::Grevlex, Field::Rational).unwrap();
        for seed in 0..8 {
            let f = random_system(&r, 3, 2, 3, seed);
            let gb = buchberger_with_cofactors(&r, &f).unwrap();
            assert!(is_groebner(&gb.polys(), &r));
            let w = random_combination(&r, &gb.elements, 2, 2, seed);
            assert!(w.is_valid(&f, &r));
        }
    }
}
