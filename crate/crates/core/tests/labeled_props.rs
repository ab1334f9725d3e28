use proptest::prelude::*;
use sigrep::fixtures;
use sigrep::labeled::{is_standard_form, FullLabeledPoly, LabeledBasis};
use sigrep::oracle::random_system;
use sigrep::poly::{divide, division_identity_holds, interreduce};
use sigrep::{Field, Monomial, Ring, TermOrder};

fn xyz() -> Ring {
    Ring::new(["x", "y", "z"], TermOrder::Grevlex, Field::Rational).unwrap()
}

#[derive(Debug, Clone)]
enum Step {
    Scale(i64, Vec<u32>),
    AddGenerator(usize, i64, Vec<u32>),
}

fn step() -> impl Strategy<Value = Step> {
    prop_oneof![
        ((1i64..5), prop::collection::vec(0u32..2, 3)).prop_map(|(c, e)| Step::Scale(c, e)),
        ((0usize..3), (-3i64..4), prop::collection::vec(0u32..3, 3))
            .prop_map(|(i, c, e)| Step::AddGenerator(i, c, e)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn labeled_arithmetic_keeps_the_identity(seed in 0u64..1000, steps in prop::collection::vec(step(), 1..8)) {
        let r = xyz();
        let f = random_system(&r, 3, 2, 3, seed);
        let mut acc = FullLabeledPoly::generator(&r, &f, 0);
        for s in steps {
            acc = match s {
                Step::Scale(c, e) => acc.scale(&r.coeff(c), &Monomial::new(e)).unwrap(),
                Step::AddGenerator(_, 0, _) => acc,
                Step::AddGenerator(i, c, e) => {
                    let g = FullLabeledPoly::generator(&r, &f, i).scale(&r.coeff(c), &Monomial::new(e)).unwrap();
                    acc.add(&g, &r).unwrap()
                }
            };
            prop_assert!(acc.is_valid(&f, &r));
        }
    }

    #[test]
    fn standard_form_is_monotone_in_the_basis(keep in prop::collection::vec(any::<bool>(), 10), pick in 0usize..10, t in prop::collection::vec(0u32..2, 4)) {
        let full = fixtures::example_signature_basis();
        let ring = fixtures::example_system().ring;
        let subset: Vec<_> = full.elements.iter().zip(&keep).filter(|(_, k)| **k).map(|(e, _)| e.clone()).collect();
        let small = LabeledBasis::new(full.generators.clone(), subset);
        let el = &full.elements[pick];
        let t = Monomial::new(t);
        let g = el.poly.mul_term(&ring.coeff(1), &t);
        let sig = el.sig.mul_mono(&t);
        if !is_standard_form(&g, &sig, &small, &ring) {
            prop_assert!(!is_standard_form(&g, &sig, &full, &ring));
        }
    }

    #[test]
    fn division_certifies_and_interreduce_ignores_order(seed in 0u64..500, rot in 0usize..8) {
        let r = xyz();
        let f = random_system(&r, 3, 2, 3, seed);
        let q = random_system(&r, 1, 3, 4, seed + 1).remove(0);
        let d = divide(&q, &f, &r);
        prop_assert!(division_identity_holds(&q, &f, &d, &r));
        let gb = sigrep::prepare(&r, &f).unwrap().reduced().to_vec();
        let mut shuffled = gb.clone();
        shuffled.extend(f.iter().cloned());
        let n = shuffled.len();
        shuffled.rotate_left(rot % n);
        prop_assert_eq!(interreduce(&shuffled, &r), gb);
    }
}
