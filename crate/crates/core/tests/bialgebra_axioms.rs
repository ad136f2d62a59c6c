use exobi::bialgebra::*;
use exobi::freealg::{NcPoly, Word};
use exobi::rtt::{registry as rmatrix, rtt_relations};
use exobi::{Field, Gauss, Scalar};
use proptest::prelude::*;

fn s03_matrix() -> Presentation<Scalar> {
    matrix_presentation("S03", &rtt_relations(&rmatrix("S03").unwrap())).unwrap()
}

#[test]
fn matrix_coproduct_of_a() {
    let p = s03_matrix();
    let d = p.coproduct(&p.gen("a")).unwrap();
    let want = TensorPoly::from_pairs(&[(p.gen("a"), p.gen("a")), (p.gen("b"), p.gen("c"))]);
    assert_eq!(d, want);
    assert_eq!(p.counit(&p.gen("a")), Scalar::from_i64(1));
    assert_eq!(p.counit(&p.gen("b")), Scalar::from_i64(0));
}

#[test]
fn iterated_coproduct_of_a() {
    let p = s03_matrix();
    assert_eq!(p.iterated_coproduct(&p.gen("a"), 0).unwrap(), TensorPoly::from_poly(&p.gen("a")));
    let t = p.iterated_coproduct(&p.gen("a"), 2).unwrap();
    assert_eq!(t.arity(), 3);
    assert_eq!(t.len(), 4);
    let w = |s: &str| p.alphabet.word(s).unwrap();
    for slots in [["a", "a", "a"], ["a", "b", "c"], ["b", "c", "a"], ["b", "d", "c"]] {
        let key: Vec<Word> = slots.iter().map(|s| w(s)).collect();
        assert!(t.terms().any(|(k, c)| k == &key && *c == Scalar::from_i64(1)), "{slots:?}");
    }
}

#[test]
fn tilde_coproduct_and_counit() {
    let p = s03::<Gauss>();
    let d = p.coproduct(&p.gen("at")).unwrap();
    let want = TensorPoly::from_pairs(&[
        (p.gen("at"), p.gen("at")),
        (p.gen("bt"), p.gen("bt")),
        (p.gen("ct").neg(), p.gen("ct")),
        (p.gen("dt"), p.gen("dt")),
    ]);
    assert_eq!(d, want);
    assert_eq!(p.counit(&p.gen("dt")), Gauss::from_i64(0));
    assert_eq!(p.counit(&p.gen("at").pow(5)), Gauss::from_i64(1));
    assert_eq!(p.coproduct(&NcPoly::one()).unwrap(), TensorPoly::unit(2));
}

#[test]
fn registry_is_compatible() {
    for name in REGISTRY {
        let p = registry::<Gauss>(name).unwrap();
        let rep = p.check_compatibility(4);
        assert!(rep.passed(), "{name}: {:?}", rep.failures);
        assert!(rep.skipped.is_empty());
        assert_eq!(rep.relations_checked, p.relations().len());
    }
}

#[test]
fn matrix_presentation_is_compatible() {
    assert!(s03_matrix().check_compatibility(3).passed());
}

#[test]
fn omega_is_grouplike_and_central() {
    let p = s14o_hat::<Gauss>(HatOptions { omega: true, dhat_inverse: false });
    let w = p.parse("ah dh + bh ch").unwrap();
    assert_eq!(p.nf(&w), p.gen("w"));
    let dw = p.coproduct(&w).unwrap();
    assert_eq!(dw, TensorPoly::from_pairs(&[(p.gen("w"), p.gen("w"))]));
    for x in ["ah", "bh", "ch", "dh"] {
        assert_eq!(p.mul(&p.gen("w"), &p.gen(x)), p.mul(&p.gen(x), &p.gen("w")));
    }
    assert_eq!(p.mul(&p.gen("w"), &p.gen("wi")), NcPoly::one());
}

#[test]
fn dhat_inverse_has_no_coproduct() {
    let p = s14o_hat::<Gauss>(HatOptions { omega: true, dhat_inverse: true });
    assert!(p.coproduct(&p.gen("dhi")).is_err());
    let rep = p.check_compatibility(2);
    assert!(rep.passed());
    assert_eq!(rep.skipped.len(), 7);
}

#[test]
fn broken_relation_is_detected() {
    let p = s03::<Gauss>();
    let ab = p.alphabet.word("at bt").unwrap();
    let mut rels: Vec<NcPoly<Gauss>> = p.relations().into_iter().filter(|r| r.leading().unwrap().0 != &ab).collect();
    rels.push(p.parse("at bt - bt").unwrap());
    let broken = p.with_rules(&rels).unwrap();
    assert!(!broken.check_compatibility(2).passed());
}

#[test]
fn wrong_coproduct_is_detected() {
    let mut p = s14o::<Gauss>();
    let l = p.letter("bt") as usize;
    p.coproduct[l] = Some(TensorPoly::from_pairs(&[(p.gen("bt"), p.gen("at")), (p.gen("at"), p.gen("bt").neg())]));
    assert!(!p.check_compatibility(2).passed());
}

#[test]
fn export_round_trip() {
    for name in REGISTRY {
        let p = registry::<Gauss>(name).unwrap();
        let text = p.export_text();
        let rels = exobi::freealg::parse_relations::<Gauss>(&p.alphabet, &text).unwrap();
        assert_eq!(p.with_rules(&rels).unwrap().relations(), p.relations());
    }
}

fn element(n: usize) -> impl Strategy<Value = NcPoly<Gauss>> {
    prop::collection::vec((prop::collection::vec(0u8..4, 0..=n), -2i64..=2), 1..4).prop_map(|ts| {
        let mut p = NcPoly::zero();
        for (w, c) in ts {
            p.add_term(Word::from_slice(&w), Gauss::from_i64(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coproduct_is_multiplicative(x in element(3), y in element(3), k in 0usize..4) {
        let p = registry::<Gauss>(REGISTRY[k]).unwrap();
        let (x, y) = (p.nf(&x), p.nf(&y));
        let lhs = p.coproduct(&p.mul(&x, &y)).unwrap();
        let rhs = p.normalize_tensor(&p.coproduct(&x).unwrap().mul(&p.coproduct(&y).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_axiom(x in element(4), k in 0usize..3) {
        let p = registry::<Gauss>(REGISTRY[k]).unwrap();
        let x = p.nf(&x);
        let d = p.coproduct(&x).unwrap();
        prop_assert_eq!(d.contract_slot(0, |w| p.counit_word(w)).to_poly(), x.clone());
        prop_assert_eq!(d.contract_slot(1, |w| p.counit_word(w)).to_poly(), x);
    }

    #[test]
    fn coassociative(x in element(3), k in 0usize..3) {
        let p = registry::<Gauss>(REGISTRY[k]).unwrap();
        let d = p.coproduct(&x).unwrap();
        let l = p.normalize_tensor(&d.map_slot(0, 2, |w| p.coproduct_word(w).unwrap()));
        let r = p.normalize_tensor(&d.map_slot(1, 2, |w| p.coproduct_word(w).unwrap()));
        prop_assert_eq!(&l, &r);
        prop_assert_eq!(l, p.iterated_coproduct(&x, 2).unwrap());
    }
}
