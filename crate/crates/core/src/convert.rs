//! Conversions between labeling levels: signature-labeled to
//! monomial-labeled (recovering the leading coefficient of each hidden
//! cofactor vector), and monomial-labeled to full-labeled (rebuilding the
//! vectors themselves).

use std::cmp::Ordering;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::labeled::{FullLabeledPoly, LabeledBasis, MonoLabeledPoly, SigLabeledPoly};
use crate::module::{ModuleMonomial, ModuleVector};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

/// Indices of the elements of `s` that may top-reduce `g` under `sig`,
/// paired with the multiplier `lpp(g)/lpp(g_i)`.
fn isf_candidates(
    g: &Polynomial,
    sig: &ModuleMonomial,
    s: &LabeledBasis<SigLabeledPoly>,
    ring: &Ring,
) -> Vec<(usize, Monomial)> {
    let Some(lg) = g.lpp() else { return Vec::new() };
    s.elements
        .iter()
        .enumerate()
        .filter_map(|(i, el)| {
            let li = el.poly.lpp()?;
            if !li.divides(lg) {
                return None;
            }
            let t = lg.div_unchecked(li);
            (ring.cmp_module(&el.sig.mul_mono(&t), sig) == Ordering::Less).then_some((i, t))
        })
        .collect()
}

/// Top-reduces `f` by the elements of `s` whose scaled signature stays
/// strictly below `sig`, taking the first eligible element each step.
pub fn incomplete_standard_form(
    f: &Polynomial,
    sig: &ModuleMonomial,
    s: &LabeledBasis<SigLabeledPoly>,
    ring: &Ring,
) -> Polynomial {
    incomplete_standard_form_with(f, sig, s, ring, &mut |_| 0)
}

/// Like [`incomplete_standard_form`], but `choose` picks which of the
/// eligible reducers to use. It receives the number of candidates and must
/// return an index below it.
pub fn incomplete_standard_form_with(
    f: &Polynomial,
    sig: &ModuleMonomial,
    s: &LabeledBasis<SigLabeledPoly>,
    ring: &Ring,
    choose: &mut dyn FnMut(usize) -> usize,
) -> Polynomial {
    let mut g = f.clone();
    loop {
        let cands = isf_candidates(&g, sig, s, ring);
        if cands.is_empty() {
            return g;
        }
        let (i, t) = &cands[choose(cands.len())];
        let gi = &s.elements[*i].poly;
        let c = g.lc().unwrap().div(gi.lc().unwrap());
        g = g.sub_mul_term(&c, t, gi, ring);
    }
}

/// Assigns each element of a signature-labeled Gröbner basis the leading
/// coefficient of its hidden cofactor vector.
pub fn sig2mono(
    s: &LabeledBasis<SigLabeledPoly>,
    ring: &Ring,
) -> Result<LabeledBasis<MonoLabeledPoly>> {
    sig2mono_with(s, ring, &mut |_| 0)
}

pub fn sig2mono_with(
    s: &LabeledBasis<SigLabeledPoly>,
    ring: &Ring,
    choose: &mut dyn FnMut(usize) -> usize,
) -> Result<LabeledBasis<MonoLabeledPoly>> {
    let mut out = Vec::with_capacity(s.len());
    for el in &s.elements {
        let fj = s.generators.get(el.sig.index).ok_or_else(|| {
            Error::Context(format!(
                "signature slot {} beyond {} generators",
                el.sig.index + 1,
                s.generators.len()
            ))
        })?;
        let g = incomplete_standard_form_with(&el.poly, &el.sig, s, ring, choose);
        let shifted = fj.mul_term(&ring.coeff(1), &el.sig.mono);
        let g0 = incomplete_standard_form_with(&shifted, &el.sig, s, ring, choose);
        let coeff = match (g.lm(), g0.lm()) {
            (None, _) => ring.coeff(1),
            (Some((c, m)), Some((c0, m0))) if m == m0 => c.div(c0),
            _ => return Err(Error::InconsistentStandardForms(el.sig.render(ring))),
        };
        out.push(MonoLabeledPoly {
            poly: el.poly.clone(),
            coeff,
            sig: el.sig.clone(),
        });
    }
    Ok(LabeledBasis::new(s.generators.clone(), out))
}

/// Writes `f - c·x^α f_j` over the elements of `g` whose scaled signatures
/// stay below `x^α e_j`. Returns one multiplier per element of `g`.
///
/// `f` must equal `u·F` for some `u` with `lm(u) = c·x^α e_j`.
pub fn representation(
    c: &Coeff,
    sig: &ModuleMonomial,
    f: &Polynomial,
    g: &[FullLabeledPoly],
    gens: &[Polynomial],
    ring: &Ring,
) -> Result<Vec<Polynomial>> {
    let fj = gens.get(sig.index).ok_or_else(|| {
        Error::Context(format!(
            "signature slot {} beyond {} generators",
            sig.index + 1,
            gens.len()
        ))
    })?;
    let mut p = vec![Polynomial::zero(); g.len()];
    let mut h = f.sub(&fj.mul_term(c, &sig.mono), ring);
    while let Some((hc, hm)) = h.lm().map(|(c, m)| (c.clone(), m.clone())) {
        let reducer = g.iter().enumerate().find_map(|(i, gi)| {
            let li = gi.poly.lpp()?;
            if !li.divides(&hm) {
                return None;
            }
            let t = hm.div_unchecked(li);
            let vs = gi.vec.lpp()?;
            (ring.cmp_module(&vs.mul_mono(&t), sig) == Ordering::Less).then_some((i, t))
        });
        let Some((i, t)) = reducer else {
            return Err(Error::Representation(format!(
                "no reducer for {} below {}",
                ring.fmt_mono(&hm),
                sig.render(ring)
            )));
        };
        // the multiplier is taken from h before h is updated
        let q = hc.div(g[i].poly.lc().unwrap());
        h = h.sub_mul_term(&q, &t, &g[i].poly, ring);
        p[i] = p[i].add(&Polynomial::term(q, t), ring);
    }
    Ok(p)
}

/// Rebuilds full cofactor vectors for a monomial-labeled Gröbner basis.
///
/// Elements are processed by increasing signature (ties in input order)
/// and each is written over the ones processed before it. The output keeps
/// the input order: element `i` of the result belongs to element `i` of `m`.
pub fn mono2full(
    m: &LabeledBasis<MonoLabeledPoly>,
    ring: &Ring,
) -> Result<LabeledBasis<FullLabeledPoly>> {
    let gens = &m.generators;
    let dim = gens.len();
    let mut order: Vec<usize> = (0..m.len()).collect();
    order.sort_by(|&a, &b| ring.cmp_module(&m.elements[a].sig, &m.elements[b].sig));

    // built elements in processing order; the earliest eligible one reduces first
    let mut built: Vec<FullLabeledPoly> = Vec::with_capacity(m.len());
    for (n, &k) in order.iter().enumerate() {
        let el = &m.elements[k];
        if el.coeff.is_zero() {
            return Err(Error::InvalidInput(format!(
                "zero coefficient at {}",
                el.sig.render(ring)
            )));
        }
        if n > 0 {
            let prev = &m.elements[order[n - 1]].sig;
            assert!(
                ring.cmp_module(prev, &el.sig) != Ordering::Greater,
                "signatures processed out of order"
            );
        }
        let p = representation(&el.coeff, &el.sig, &el.poly, &built, gens, ring)?;
        let mut v = ModuleVector::term(dim, el.coeff.clone(), &el.sig);
        for (pi, gi) in p.iter().zip(&built) {
            if !pi.is_zero() {
                v = v.add(&gi.vec.scale_poly(pi, ring), ring)?;
            }
        }
        built.push(FullLabeledPoly {
            poly: el.poly.clone(),
            vec: v,
        });
    }
    let mut out: Vec<Option<FullLabeledPoly>> = vec![None; m.len()];
    for (&k, el) in order.iter().zip(built) {
        out[k] = Some(el);
    }
    Ok(LabeledBasis::new(
        gens.clone(),
        out.into_iter()
            .map(|d| d.expect("every element built"))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::engine::{f5_run_with, EngineConfig};
    use crate::fixtures;
    use crate::parse::{parse_module_monomial, parse_poly};
    use crate::ring::TermOrder;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn known_vectors(r: &Ring) -> Vec<ModuleVector> {
        let rows: [[&str; 3]; 10] = [
            ["1", "0", "0"],
            ["0", "1", "0"],
            ["0", "0", "1"],
            ["0", "-x*y", "z^2"],
            ["0", "x*y*z^2 + y^3*t", "-z^4"],
            ["x", "-y*z", "0"],
            ["x^2", "0", "-z^3"],
            ["x^2*z", "-x*y*z^2 - y^3*t", "0"],
            ["-x^3 + y*t^2", "z^3*t", "x*z^3 + t^4"],
            ["z^3*t", "-x*y^2*z^2 - y^4*t + x*z*t^3", "y*z^4"],
        ];
        rows.iter()
            .map(|row| {
                ModuleVector::from_components(
                    row.iter().map(|s| parse_poly(s, r).unwrap()).collect(),
                )
            })
            .collect()
    }

    #[test]
    fn isf_examples() {
        let s = fixtures::example_signature_basis();
        let r = fixtures::example_system().ring;
        let sig = parse_module_monomial("x*y*e2", &r).unwrap();
        let g4 = parse_poly("x*y^3*t - z^4*t", &r).unwrap();
        assert_eq!(incomplete_standard_form(&g4, &sig, &s, &r), g4);
        let shifted = parse_poly("x^2*y*z^2 - x*y^3*t", &r).unwrap();
        assert_eq!(
            incomplete_standard_form(&shifted, &sig, &s, &r),
            parse_poly("-x*y^3*t + z^4*t", &r).unwrap()
        );
        assert!(incomplete_standard_form(&Polynomial::zero(), &sig, &s, &r).is_zero());
    }

    #[test]
    fn sig2mono_recovers_example_coefficients() {
        let s = fixtures::example_signature_basis();
        let r = fixtures::example_system().ring;
        let m = sig2mono(&s, &r).unwrap();
        // fixture order is g1..g10
        let expected = [1, 1, 1, -1, 1, 1, 1, 1, -1, 1];
        let got: Vec<Coeff> = m.elements.iter().map(|e| e.coeff.clone()).collect();
        assert_eq!(got, expected.map(|c| r.coeff(c)).to_vec());
    }

    #[test]
    fn sig2mono_trivial_signatures() {
        let sys = fixtures::small_gb_system();
        let r = &sys.ring;
        let s = LabeledBasis::from_pairs(
            sys.gens.clone(),
            (0..3)
                .map(|i| (ModuleMonomial::unit(r, i), sys.gens[i].clone()))
                .collect(),
        )
        .unwrap();
        let m = sig2mono(&s, r).unwrap();
        assert!(m.elements.iter().all(|e| e.coeff.is_one()));
    }

    #[test]
    fn sig2mono_rejects_inconsistent_input() {
        let sys = fixtures::small_gb_system();
        let r = &sys.ring;
        // z cannot carry the signature y*e1: y*f1 keeps leading term x*y*z
        let s = LabeledBasis::from_pairs(
            sys.gens.clone(),
            vec![
                (ModuleMonomial::unit(r, 0), sys.gens[0].clone()),
                (
                    parse_module_monomial("y*e1", r).unwrap(),
                    parse_poly("z", r).unwrap(),
                ),
            ],
        )
        .unwrap();
        assert!(matches!(
            sig2mono(&s, r),
            Err(Error::InconsistentStandardForms(_))
        ));
    }

    #[test]
    fn representation_examples() {
        let sys = fixtures::example_system();
        let (r, f) = (&sys.ring, &sys.gens);
        let g3 = FullLabeledPoly::generator(r, f, 2);
        let g2 = FullLabeledPoly::generator(r, f, 1);
        let p = representation(&r.coeff(1), &ModuleMonomial::unit(r, 2), &f[2], &[], f, r).unwrap();
        assert!(p.is_empty());
        let sig = parse_module_monomial("x*y*e2", r).unwrap();
        let g4 = parse_poly("x*y^3*t - z^4*t", r).unwrap();
        let p = representation(&r.coeff(-1), &sig, &g4, &[g3.clone(), g2.clone()], f, r).unwrap();
        assert_eq!(p, vec![parse_poly("z^2", r).unwrap(), Polynomial::zero()]);
        // claiming the wrong coefficient leaves an irreducible remainder
        assert!(matches!(
            representation(&r.coeff(1), &sig, &g4, &[g3, g2], f, r),
            Err(Error::Representation(_))
        ));
    }

    #[test]
    fn mono2full_matches_known_vectors() {
        let s = fixtures::example_signature_basis();
        let r = fixtures::example_system().ring;
        let m = sig2mono(&s, &r).unwrap();
        let g = mono2full(&m, &r).unwrap();
        for (i, (el, mono)) in g.elements.iter().zip(&m.elements).enumerate() {
            assert!(el.is_valid(&s.generators, &r), "g{}", i + 1);
            assert_eq!(
                el.vec.lm(),
                Some((mono.coeff.clone(), mono.sig.clone())),
                "g{}",
                i + 1
            );
        }
        assert_eq!(
            g.elements.iter().map(|e| e.vec.clone()).collect::<Vec<_>>(),
            known_vectors(&r)
        );
    }

    #[test]
    fn mono2full_single_generator() {
        let r = Ring::new(["x"], TermOrder::Grevlex, Field::Rational).unwrap();
        let f = vec![parse_poly("x^2 + 1", &r).unwrap()];
        let m = LabeledBasis::new(
            f.clone(),
            vec![MonoLabeledPoly {
                poly: f[0].clone(),
                coeff: r.coeff(1),
                sig: ModuleMonomial::unit(&r, 0),
            }],
        );
        let g = mono2full(&m, &r).unwrap();
        assert_eq!(g.elements, vec![FullLabeledPoly::generator(&r, &f, 0)]);
    }

    #[test]
    fn coefficients_match_engine_shadows() {
        let r = Ring::new(["x", "y", "z"], TermOrder::Grevlex, Field::Prime(32003)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for seed in 0..6 {
            let f = crate::oracle::random_system(&r, 3, 2, 3, seed);
            let run = f5_run_with(
                &r,
                &f,
                EngineConfig {
                    instrument: true,
                    ..Default::default()
                },
            )
            .unwrap();
            let s = run.basis.signature_basis();
            let shadows = run.basis.shadows().unwrap();
            let m = sig2mono(&s, &r).unwrap();
            let mut pick = |n: usize| rng.gen_range(0..n);
            let shuffled = sig2mono_with(&s, &r, &mut pick).unwrap();
            assert_eq!(m, shuffled);
            for (el, mono) in s.elements.iter().zip(&m.elements) {
                assert_eq!(shadows[el.stamp].lc().unwrap(), mono.coeff);
            }
            let g = mono2full(&m, &r).unwrap();
            assert!(g.elements.iter().all(|e| e.is_valid(&f, &r)));
        }
    }
}
