use exobi::bialgebra::{s14o_hat, HatOptions};
use exobi::duality::dual_s14o;
use exobi::induced::*;
use exobi::reps::{RepContext, Side};
use exobi::{Error, Gauss};
use num_traits::Zero;
use proptest::prelude::*;
use std::sync::OnceLock;

type F = Gauss;
use HatLetter::*;

fn actions() -> &'static HatActions<F> {
    static A: OnceLock<HatActions<F>> = OnceLock::new();
    A.get_or_init(|| HatActions::new(&dual_s14o()).unwrap())
}

fn g(n: i64) -> F {
    F::from_i64(n)
}

fn pw(x: HatLetter, k: i64) -> HatPoly<F> {
    if k >= 0 {
        x.poly().pow(k as u32)
    } else {
        let inv = match x {
            D => DInv,
            W => WInv,
            _ => panic!("{x:?} is not invertible"),
        };
        inv.poly().pow((-k) as u32)
    }
}

fn word(parts: &[(HatLetter, i64)]) -> HatPoly<F> {
    parts.iter().fold(HatPoly::one(), |acc, &(x, k)| acc.mul(&pw(x, k)))
}

fn sgn(k: i64) -> F {
    g(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn act(side: Side, z: &str, f: &HatPoly<F>) -> HatPoly<F> {
    actions().act(side, z, f).unwrap()
}

#[test]
fn ring_satisfies_hatted_relations() {
    let p = s14o_hat::<F>(HatOptions { omega: true, dhat_inverse: true });
    for r in p.relations() {
        assert!(HatPoly::from_nc(&p, &r).unwrap().is_zero(), "{}", r.display(&p.alphabet));
    }
    let w = W.poly::<F>();
    for x in HatLetter::ALL {
        assert_eq!(w.mul(&x.poly()), x.poly().mul(&w));
    }
    assert_eq!(A.poly::<F>().mul(&D.poly()).add(&B.poly().mul(&C.poly())), w);
}

#[test]
fn a_hat_image_matches_its_expression() {
    for side in [Side::Left, Side::Right] {
        for z in actions().generators() {
            let direct = actions().letter_image(side, z, A).unwrap();
            assert_eq!(&act(side, z, &A.poly()), direct, "{side:?} {z}");
        }
    }
}

#[test]
fn left_action_tables() {
    for k in 0..6i64 {
        let kk = g(k);
        for x in [A, B, C, D] {
            let f = pw(x, k);
            assert_eq!(act(Side::Left, "A", &f), f.scale(&-kk.clone()));
            assert_eq!(act(Side::Left, "K", &f), f.scale(&sgn(k)));
            let s = if matches!(x, A | B) { -kk.clone() } else { kk.clone() };
            assert_eq!(act(Side::Left, "B", &f), f.scale(&s));
        }
        if k == 0 {
            continue;
        }
        let xp = |x| act(Side::Left, "Xp", &pw(x, k));
        let xm = |x| act(Side::Left, "Xm", &pw(x, k));
        assert_eq!(xp(A), word(&[(A, k - 1), (C, 1)]).scale(&(kk.clone() * sgn(k - 1))));
        assert_eq!(xp(B), word(&[(D, 1), (B, k - 1)]).scale(&kk));
        assert!(xp(C).is_zero());
        assert!(xp(D).is_zero());
        assert!(xm(A).is_zero());
        assert!(xm(B).is_zero());
        assert_eq!(xm(C), word(&[(A, 1), (C, k - 1)]).scale(&kk));
        assert_eq!(xm(D), word(&[(D, k - 1), (B, 1)]).scale(&(kk.clone() * sgn(k - 1))));
    }
    assert_eq!(act(Side::Left, "K", &HatPoly::one()), HatPoly::one());
    for z in ["A", "B", "C", "D", "Xp", "Xm"] {
        assert!(act(Side::Left, z, &HatPoly::one()).is_zero());
    }
}

#[test]
fn right_action_tables() {
    for k in 0..6i64 {
        let kk = g(k);
        for x in [A, B, C, D] {
            let f = pw(x, k);
            assert_eq!(act(Side::Right, "A", &f), f.scale(&kk));
            assert_eq!(act(Side::Right, "K", &f), f.scale(&sgn(k)));
            let s = if matches!(x, A | C) { kk.clone() } else { -kk.clone() };
            assert_eq!(act(Side::Right, "B", &f), f.scale(&s));
        }
        if k == 0 {
            continue;
        }
        let xp = |x| act(Side::Right, "Xp", &pw(x, k));
        let xm = |x| act(Side::Right, "Xm", &pw(x, k));
        assert!(xp(A).is_zero());
        assert_eq!(xp(B), word(&[(A, 1), (B, k - 1)]).scale(&(kk.clone() * sgn(k - 1))));
        assert!(xp(C).is_zero());
        assert_eq!(xp(D), word(&[(D, k - 1), (C, 1)]).scale(&kk));
        assert_eq!(xm(A), word(&[(A, k - 1), (B, 1)]).scale(&kk));
        assert!(xm(B).is_zero());
        assert_eq!(xm(C), word(&[(D, 1), (C, k - 1)]).scale(&(kk.clone() * sgn(k - 1))));
        assert!(xm(D).is_zero());
    }
    assert_eq!(act(Side::Right, "K", &HatPoly::one()), HatPoly::one());
}

#[test]
fn omega_powers() {
    for n in -3..=3i64 {
        let f = pw(W, n);
        assert_eq!(act(Side::Left, "A", &f), f.scale(&g(-2 * n)));
        assert_eq!(act(Side::Right, "A", &f), f.scale(&g(2 * n)));
        for side in [Side::Left, Side::Right] {
            assert_eq!(act(side, "K", &f), f);
            for z in ["B", "Xp", "Xm"] {
                assert!(act(side, z, &f).is_zero(), "{side:?} {z} ω^{n}");
            }
        }
    }
}

#[test]
fn negative_powers_follow_the_same_tables() {
    for k in -3..0i64 {
        let f = pw(D, k);
        let kk = g(k);
        assert_eq!(act(Side::Left, "A", &f), f.scale(&-kk.clone()));
        assert_eq!(act(Side::Left, "K", &f), f.scale(&sgn(k)));
        assert_eq!(act(Side::Left, "B", &f), f.scale(&kk));
        assert!(act(Side::Left, "Xp", &f).is_zero());
        assert_eq!(act(Side::Left, "Xm", &f), word(&[(D, k - 1), (B, 1)]).scale(&(kk.clone() * sgn(k - 1))));
        assert_eq!(act(Side::Right, "Xp", &f), word(&[(D, k - 1), (C, 1)]).scale(&kk));
        // π_L(Z)(d̂^{-k} d̂^k) through the opposite coproduct equals π_L(Z) 1.
        let h = pw(D, -k);
        for z in ["A", "B", "Xp", "Xm", "C", "D"] {
            let twisted = matches!(z, "Xp" | "Xm" | "C" | "D");
            let first = if twisted { act(Side::Left, "K", &f) } else { f.clone() };
            let split = first.mul(&act(Side::Left, z, &h)).add(&act(Side::Left, z, &f).mul(&h));
            assert!(split.is_zero(), "{z} d̂^{k}");
        }
    }
}

#[test]
fn left_and_right_actions_commute() {
    let p = s14o_hat::<F>(HatOptions::default());
    let mut elements = Vec::new();
    for n in 0..=4 {
        for w in p.basis(n) {
            elements.push(HatPoly::from_word(&p, &w).unwrap());
        }
    }
    for d in -2..=2 {
        for w in -1..=1 {
            elements.push(HatPoly::mono(Mono::new(d, 1, 1, w)));
        }
    }
    let failures = actions().commutation_failures(&elements).unwrap();
    assert!(failures.is_empty(), "{failures:?}");
}

fn eval_relation(side: Side, ctx: &RepContext<F>, r: &exobi::freealg::NcPoly<F>, f: &HatPoly<F>) -> Option<HatPoly<F>> {
    let mut out = HatPoly::zero();
    for (w, c) in r.terms() {
        let mut v = f.clone();
        for &l in w.letters().iter().rev() {
            v = actions().act(side, ctx.alphabet.alias(l), &v).ok()?;
        }
        out = out.add(&v.scale(c));
    }
    Some(out)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn actions_respect_relations(d in -3i64..4, b in 0u32..3, c in 0u32..3, w in -2i64..3, right in any::<bool>()) {
        let ctx = RepContext::new(&dual_s14o::<F>()).unwrap();
        let side = if right { Side::Right } else { Side::Left };
        let f = HatPoly::mono(Mono::new(d, b, c, w));
        for r in &ctx.relations {
            let v = eval_relation(side, &ctx, r, &f).unwrap();
            prop_assert!(v.is_zero(), "{} on {}", r.display(&ctx.alphabet), f);
        }
    }

    #[test]
    fn pi_l_respects_products(d1 in -2i64..3, b1 in 0u32..3, d2 in -2i64..3, c2 in 0u32..3, w in -1i64..2) {
        let f = HatPoly::<F>::mono(Mono::new(d1, b1, 0, w));
        let h = HatPoly::<F>::mono(Mono::new(d2, 0, c2, 0));
        for z in ["A", "B", "Xp", "Xm"] {
            let twisted = matches!(z, "Xp" | "Xm");
            let lhs = act(Side::Left, z, &f.mul(&h));
            let first = if twisted { act(Side::Left, "K", &f) } else { f.clone() };
            let rhs = first.mul(&act(Side::Left, z, &h)).add(&act(Side::Left, z, &f).mul(&h));
            prop_assert_eq!(lhs, rhs);
            let lhs = act(Side::Right, z, &f.mul(&h));
            let last = if twisted { act(Side::Right, "K", &h) } else { h.clone() };
            let rhs = act(Side::Right, z, &f).mul(&last).add(&f.mul(&act(Side::Right, z, &h)));
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn induced_modules_match_closed_forms() {
    let dual = dual_s14o::<F>();
    for nu in -3..=4i64 {
        for rho in [nu - 2, nu, nu + 4] {
            for basis in [InducedBasis::U, InducedBasis::Eta] {
                let m = induce(actions(), nu, rho, 8, basis).unwrap();
                let r = induced_report(&dual, &m).unwrap();
                assert!(r.passed(), "{nu} {rho} {basis:?}: {r:?}");
            }
        }
    }
}

#[test]
fn induced_vectors() {
    let u = induced_vector::<F>(2, 4, 3, InducedBasis::U);
    assert_eq!(u, word(&[(B, 3), (D, -1), (W, 1)]));
    let v = induced_vector::<F>(2, 4, 3, InducedBasis::Eta);
    assert_eq!(v, eta::<F>().pow(3).mul(&word(&[(D, 2), (W, 1)])));
}

#[test]
fn highest_weight_and_finite_submodule() {
    let dual = dual_s14o::<F>();
    let m = induce(actions(), 3, 5, 8, InducedBasis::U).unwrap();
    let xp = m.module.matrix("Xp").unwrap();
    let xm = m.module.matrix("Xm").unwrap();
    assert!(xp.col(0).iter().all(|x| x.is_zero()));
    assert!(xm.col(3).iter().all(|x| x.is_zero()));
    let r = induced_report(&dual, &m).unwrap();
    assert_eq!(r.invariant_dims, vec![4]);
    assert_eq!(r.finite_irreducible, Some(true));
}

#[test]
fn negative_nu_has_no_invariant_subspace() {
    let dual = dual_s14o::<F>();
    for nu in [-1i64, -2, -5] {
        let m = induce(actions(), nu, nu, 10, InducedBasis::U).unwrap();
        let r = induced_report(&dual, &m).unwrap();
        assert!(r.invariant_dims.is_empty());
        assert_eq!(r.finite_irreducible, None);
    }
}

#[test]
fn induce_rejects_bad_parameters() {
    assert!(matches!(induce(actions(), 1, 2, 8, InducedBasis::U), Err(Error::Invalid(_))));
    assert!(matches!(induce(actions(), 4, 4, 5, InducedBasis::U), Err(Error::Invalid(_))));
    assert!(induce(actions(), 4, 4, 6, InducedBasis::U).is_ok());
}

#[test]
fn eta_basis_signs_and_vector_fields() {
    for (nu, rho) in [(0i64, 0i64), (2, 4), (-1, 3), (3, -3)] {
        let c = eta_comparison(actions(), nu, rho, 8).unwrap();
        assert!(c.passed(), "{c:?}");
        // σ_ℓ = (-1)^{ℓ-1} σ_{ℓ-1} from matching the X⁺ columns.
        let mut s = 1i64;
        for (l, &sl) in c.signs.iter().enumerate() {
            if l > 0 && (l - 1) % 2 == 1 {
                s = -s;
            }
            assert_eq!(sl, s, "ℓ = {l}");
        }
    }
    let vf = vector_field_module::<F>(3, 1, 6);
    let xm = vf.matrix("Xm").unwrap();
    for l in 0..6 {
        assert_eq!(xm.get(l + 1, l), &g(3 - l as i64));
    }
}

#[test]
fn omega_structure() {
    let r = omega_checks::<F>().unwrap();
    assert!(r.passed(), "{r:?}");
    assert!(!r.antipode.gamma_m_is_omega);
}

#[test]
fn sl2_generators() {
    let r = sl2_check(&dual_s14o::<F>(), 8).unwrap();
    assert!(r.passed(), "{r:?}");
}
