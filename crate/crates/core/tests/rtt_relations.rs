use exobi::freealg::{parse_relations, Alphabet};
use exobi::linalg::Matrix;
use exobi::rtt::*;
use exobi::{Gauss, RatFunc, Scalar};

fn tilde_alphabet() -> Alphabet {
    Alphabet::new(&[("ã", "at"), ("b̃", "bt"), ("c̃", "ct"), ("d̃", "dt")])
}

fn ideal_eq(a: &[exobi::freealg::NcPoly<Scalar>], b: &[exobi::freealg::NcPoly<Scalar>]) -> bool {
    compare_ideals(a, b, 4, 4).equal()
}

#[test]
fn s03_matches_printed_set() {
    let rels = rtt_relations(&registry("S03").unwrap());
    assert_eq!(rels.len(), 8);
    assert!(ideal_eq(&rels, &printed_relations(printed::S03)));
}

#[test]
fn s14_generic_matches_printed_set() {
    let rels = rtt_relations(&registry("S14").unwrap());
    assert_eq!(rels.len(), 10);
    assert!(ideal_eq(&rels, &printed_relations(printed::S14)));
}

#[test]
fn s03_tilde_relations() {
    let rels = rtt_relations(&registry("S03").unwrap());
    let tilde = change_generators(&rels, &GeneratorChange::tilde());
    let expected = parse_relations::<Scalar>(
        &tilde_alphabet(),
        "bt^2 = ct^2 = 0\nat dt = dt at = 0\nat bt = 0\nbt dt = 0\ndt ct = 0\nct at = 0",
    )
    .unwrap();
    assert!(ideal_eq(&tilde, &expected));
}

#[test]
fn s14_q1_against_tilde_form() {
    let rels = rtt_relations(&registry("S14q1").unwrap());
    assert_eq!(rels.len(), 6);
    let tilde = change_generators(&rels, &GeneratorChange::tilde());
    let expected = parse_relations::<Scalar>(
        &tilde_alphabet(),
        "bt at = at bt\nct at = -at ct\ndt at = -at dt\nct bt = -bt ct\ndt bt = -bt dt\ndt ct = ct dt",
    )
    .unwrap();
    assert!(ideal_eq(&tilde, &expected));
}

#[test]
fn yang_baxter_registry() {
    for k in REGISTRY {
        assert!(yang_baxter_check(&registry(k).unwrap()), "{}", k);
    }
    let mut bad = registry("S03").unwrap();
    bad.m.set(0, 1, RatFunc::constant(Gauss::from_i64(1)));
    assert!(bad.is_nonsingular());
    assert!(!yang_baxter_check(&bad));
}

#[test]
fn gauge_equivalence() {
    let r0 = registry("R0").unwrap();
    let up = gauge_u::<Scalar>(true);
    let um = gauge_u::<Scalar>(false);
    assert_eq!(gauge_conjugate(&registry("S14q1").unwrap(), &up).unwrap(), r0);
    assert_eq!(gauge_conjugate(&registry("S14qm1").unwrap(), &um).unwrap(), r0);
    let r = registry("S03").unwrap();
    assert_eq!(gauge_conjugate(&r, &Matrix::identity(2)).unwrap(), r);
}
