use exobi::bialgebra::{registry, s03, s14, s14o, s14o_hat, HatOptions};
use exobi::freealg::{NcPoly, RewriteSystem, Strategy as Reduction, Word};
use exobi::Gauss;
use proptest::prelude::*;

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn s03_counts_double() {
    let p = s03::<Gauss>();
    assert_eq!(p.basis(0).len(), 1);
    for n in 1..=8 {
        assert_eq!(p.basis(n).len(), 1 << (n + 1), "N={n}");
    }
}

#[test]
fn s03_degree_two_words() {
    let p = s03::<Gauss>();
    let got: Vec<String> = p.basis(2).iter().map(|w| p.alphabet.fmt_word(w)).collect();
    let mut want: Vec<String> = ["at^2", "at ct", "bt at", "bt ct", "ct bt", "ct dt", "dt^2", "dt bt"]
        .iter()
        .map(|s| p.alphabet.fmt_word(&p.alphabet.word(s).unwrap()))
        .collect();
    want.sort_by_key(|s| p.basis(2).iter().position(|w| &p.alphabet.fmt_word(w) == s));
    assert_eq!(got, want);
}

#[test]
fn s14_counts_linear() {
    let p = s14::<Gauss>();
    for n in 1..=8 {
        assert_eq!(p.basis(n).len(), 2 * n + 2, "N={n}");
    }
}

#[test]
fn s14o_counts_cubic() {
    let p = s14o::<Gauss>();
    for n in 0..=8 {
        assert_eq!(p.basis(n).len(), binom(n + 3, 3), "N={n}");
    }
}

#[test]
fn confluence_degree_six() {
    for p in [s03::<Gauss>(), s14(), s14o()] {
        let rep = p.rules.confluence_probe(6);
        assert!(rep.is_clean(), "{}: {:?}", p.name, rep.divergences.first());
        assert!(rep.words_checked > 0);
    }
    let hat = s14o_hat::<Gauss>(HatOptions { omega: true, dhat_inverse: true });
    assert!(hat.rules.confluence_probe(4).is_clean());
}

#[test]
fn broken_orientation_diverges() {
    let p = s03::<Gauss>();
    let ab = p.alphabet.word("at bt").unwrap();
    let mut rels: Vec<NcPoly<Gauss>> = p.relations().into_iter().filter(|r| r.leading().unwrap().0 != &ab).collect();
    rels.push(p.parse("bt at - at").unwrap());
    let rs = RewriteSystem::from_relations(4, &rels).unwrap();
    let rep = rs.confluence_probe(3);
    assert!(!rep.is_clean());
}

#[test]
fn normal_form_examples() {
    let p = s03::<Gauss>();
    assert!(p.mul(&p.gen("at"), &p.gen("bt")).is_zero());
    let o = s14o::<Gauss>();
    assert_eq!(o.mul(&o.gen("ct"), &o.gen("at")), o.parse("-at ct").unwrap());
    assert_eq!(o.nf(&NcPoly::one()), NcPoly::one());
}

#[test]
fn basis_words_are_sorted_and_irreducible() {
    for name in ["S03", "S14", "S14o"] {
        let p = registry::<Gauss>(name).unwrap();
        for n in 0..=5 {
            let b = p.basis(n);
            assert!(b.windows(2).all(|w| w[0] < w[1]));
            assert!(b.iter().all(|w| p.rules.is_irreducible(w) && w.len() == n));
        }
    }
}

fn poly_strategy() -> impl Strategy<Value = NcPoly<Gauss>> {
    prop::collection::vec((prop::collection::vec(0u8..4, 0..=3), -3i64..=3), 0..5).prop_map(|ts| {
        let mut p = NcPoly::zero();
        for (w, c) in ts {
            p.add_term(Word::from_slice(&w), Gauss::from_i64(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn nf_idempotent(x in poly_strategy(), k in 0usize..3) {
        let p = registry::<Gauss>(["S03", "S14", "S14o"][k]).unwrap();
        let n = p.nf(&x);
        prop_assert_eq!(p.nf(&n), n.clone());
        prop_assert_eq!(p.rules.normal_form_with(&x, Reduction::Rightmost), n);
    }

    #[test]
    fn nf_multiplicative(x in poly_strategy(), y in poly_strategy(), k in 0usize..3) {
        let p = registry::<Gauss>(["S03", "S14", "S14o"][k]).unwrap();
        prop_assert_eq!(p.nf(&x.mul(&y)), p.mul(&p.nf(&x), &p.nf(&y)));
    }

    #[test]
    fn free_product_lengths_add(a in prop::collection::vec(0u8..4, 0..6), b in prop::collection::vec(0u8..4, 0..6)) {
        let (u, v) = (Word::from_slice(&a), Word::from_slice(&b));
        prop_assert_eq!(u.concat(&v).len(), u.len() + v.len());
    }
}
