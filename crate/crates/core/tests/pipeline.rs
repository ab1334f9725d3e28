use sigrep::convert::{mono2full, sig2mono};
use sigrep::engine::f5_run;
use sigrep::fixtures;
use sigrep::labeled::{refute_full_labeled, FullLabeledPoly, LabeledBasis};
use sigrep::oracle::{buchberger_with_cofactors, random_combination, random_system, random_vector};
use sigrep::poly::{interreduce, normal_form};
use sigrep::{prepare, verify_representation, Field, Polynomial, Ring, TermOrder};

fn xyz(field: Field) -> Ring {
    Ring::new(["x", "y", "z"], TermOrder::Grevlex, field).unwrap()
}

fn full_labeled(ring: &Ring, gens: &[Polynomial]) -> LabeledBasis<FullLabeledPoly> {
    let s = f5_run(ring, gens).unwrap().signature_basis();
    mono2full(&sig2mono(&s, ring).unwrap(), ring).unwrap()
}

#[test]
fn pipeline_output_survives_random_witnesses() {
    let sys = fixtures::example_system();
    let mut cases = vec![(sys.ring.clone(), sys.gens.clone(), 400)];
    let r = xyz(Field::Prime(32003));
    for seed in 0..6 {
        cases.push((r.clone(), random_system(&r, 3, 2, 3, 50 + seed), 100));
    }
    let mut checked = 0;
    for (ring, gens, n) in cases {
        let g = full_labeled(&ring, &gens);
        assert!(g.elements.iter().all(|e| e.is_valid(&gens, &ring)));
        for seed in 0..n {
            let w = random_combination(&ring, &g.elements, 2, 2, seed);
            if w.poly.is_zero() {
                continue;
            }
            checked += 1;
            assert_eq!(
                refute_full_labeled(&g, &w, &ring).unwrap(),
                None,
                "witness seed {seed}"
            );
        }
    }
    assert!(checked >= 900, "only {checked} nonzero witnesses");
}

#[test]
fn pipeline_covers_the_small_example_witness() {
    // already a Gröbner basis, yet not full-labeled
    let sys = fixtures::small_gb_system();
    let r = &sys.ring;
    let trivial = LabeledBasis::trivial(r, sys.gens.clone());
    let x = r.mono(&[(0, 1)]);
    let y = r.mono(&[(1, 1)]);
    let witness = trivial.elements[1]
        .scale(&r.coeff(2), &x)
        .unwrap()
        .add(&trivial.elements[2].scale(&r.coeff(-1), &y).unwrap(), r)
        .unwrap();
    assert!(refute_full_labeled(&trivial, &witness, r)
        .unwrap()
        .is_some());

    let g = full_labeled(r, &sys.gens);
    assert_eq!(refute_full_labeled(&g, &witness, r).unwrap(), None);
    for seed in 0..200 {
        let w = random_combination(r, &trivial.elements, 2, 2, seed);
        if !w.poly.is_zero() {
            assert_eq!(refute_full_labeled(&g, &w, r).unwrap(), None);
        }
    }
}

#[test]
fn members_are_detached() {
    for (k, field) in [Field::Rational, Field::Prime(32003)]
        .into_iter()
        .enumerate()
    {
        let r = xyz(field);
        for seed in 0..5 {
            let f = random_system(&r, 3, 2, 3, 100 * k as u64 + seed);
            let prep = prepare(&r, &f).unwrap();
            for q in 0..5 {
                let u = random_vector(&r, 3, 2, 3, 1000 + q);
                let target = u.dot(&f, &r).unwrap();
                let res = prep.detach(&target).unwrap();
                assert!(res.member);
                assert!(verify_representation(
                    &target,
                    res.cofactors.as_ref().unwrap(),
                    &f,
                    &r
                ));
            }
        }
    }
}

#[test]
fn non_members_keep_their_normal_form() {
    let r = xyz(Field::Prime(32003));
    for seed in 0..8 {
        let f = random_system(&r, 2, 3, 3, 200 + seed);
        let prep = prepare(&r, &f).unwrap();
        let noise = random_system(&r, 1, 3, 3, 300 + seed).remove(0);
        let rem = normal_form(&noise, prep.reduced(), &r);
        if rem.is_zero() {
            continue;
        }
        let inside = random_vector(&r, 2, 2, 3, 400 + seed).dot(&f, &r).unwrap();
        let res = prep.detach(&inside.add(&rem, &r)).unwrap();
        assert!(!res.member);
        assert!(res.cofactors.is_none());
        assert_eq!(res.remainder, rem);
    }
}

#[test]
fn membership_agrees_with_oracle() {
    let r = xyz(Field::Prime(32003));
    let mut members = 0;
    let mut queries = 0;
    for seed in 0..10 {
        let f = random_system(&r, 3, 2, 3, 500 + seed);
        let prep = prepare(&r, &f).unwrap();
        let oracle = buchberger_with_cofactors(&r, &f).unwrap().polys();
        for q in 0..10u64 {
            let query = if q % 2 == 0 {
                random_vector(&r, 3, 1, 2, 600 + q).dot(&f, &r).unwrap()
            } else {
                random_system(&r, 1, 3, 3, 700 + 10 * seed + q).remove(0)
            };
            let res = prep.detach(&query).unwrap();
            assert_eq!(res.member, normal_form(&query, &oracle, &r).is_zero());
            members += usize::from(res.member);
            queries += 1;
        }
    }
    assert_eq!(queries, 100);
    assert!(members >= 50);
}

#[test]
fn reduced_basis_matches_oracle_over_lex_and_grlex() {
    for order in [TermOrder::Lex, TermOrder::Grlex] {
        let r = Ring::new(["x", "y", "z"], order, Field::Prime(32003)).unwrap();
        for seed in 0..8 {
            let f = random_system(&r, 3, 2, 3, 800 + seed);
            let prep = prepare(&r, &f).unwrap();
            let oracle = buchberger_with_cofactors(&r, &f).unwrap();
            assert_eq!(
                prep.reduced(),
                interreduce(&oracle.polys(), &r),
                "{order:?} seed {seed}"
            );
        }
    }
}

#[test]
fn single_and_trivial_ideals() {
    let r = xyz(Field::Rational);
    let f = random_system(&r, 1, 3, 4, 9);
    let prep = prepare(&r, &f).unwrap();
    assert_eq!(prep.reduced(), &[f[0].monic()]);

    let unit = vec![
        sigrep::parse_poly("x + 1", &r).unwrap(),
        sigrep::parse_poly("x", &r).unwrap(),
    ];
    let prep = prepare(&r, &unit).unwrap();
    assert_eq!(prep.reduced(), &[sigrep::parse_poly("1", &r).unwrap()]);
    let one = prep
        .detach(&sigrep::parse_poly("y^2 + 3", &r).unwrap())
        .unwrap();
    assert!(one.member);
    assert!(verify_representation(
        &sigrep::parse_poly("y^2 + 3", &r).unwrap(),
        one.cofactors.as_ref().unwrap(),
        &unit,
        &r
    ));
}
