use exobi::{Error, Field, Gauss, Poly, RatFunc};
use proptest::prelude::*;

fn gauss() -> impl Strategy<Value = Gauss> {
    (-6i64..=6, 1i64..=4, -6i64..=6).prop_map(|(a, d, b)| Gauss::from_ratio(a, d) + Gauss::from_pair(0, b))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(gauss(), 0..4).prop_map(Poly::from_coeffs)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| RatFunc::new(n, d).ok())
}

#[test]
fn specialize_examples() {
    let x: RatFunc = "(q^2-1)/(q+1)".parse().unwrap();
    assert_eq!(x.specialize(&Gauss::from_i64(-1)).unwrap(), Gauss::from_i64(-2));
    assert_eq!(RatFunc::q().specialize(&Gauss::from_i64(1)).unwrap(), Gauss::from_i64(1));
    let y: RatFunc = "1/(q^2-1)".parse().unwrap();
    assert!(matches!(y.specialize(&Gauss::from_i64(1)), Err(Error::Pole(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
        prop_assert_eq!((x.clone() * y.clone()) * z.clone(), x.clone() * (y.clone() * z.clone()));
        prop_assert_eq!(x.clone() * (y.clone() + z.clone()), x.clone() * y.clone() + x.clone() * z.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!(x.clone() - x.clone(), RatFunc::from_i64(0));
        if let Some(xi) = x.inv() {
            prop_assert_eq!(x.clone() * xi, RatFunc::from_i64(1));
        } else {
            prop_assert!(num_traits::Zero::is_zero(&x));
        }
    }

    #[test]
    fn print_parse_round_trip(x in ratfunc()) {
        let s = x.to_string();
        prop_assert_eq!(s.parse::<RatFunc>().unwrap(), x);
    }

    #[test]
    fn gauss_round_trip(x in gauss()) {
        prop_assert_eq!(x.to_string().parse::<Gauss>().unwrap(), x);
    }

    #[test]
    fn specialize_is_homomorphism(x in ratfunc(), y in ratfunc(), q0 in gauss()) {
        if let (Ok(a), Ok(b)) = (x.specialize(&q0), y.specialize(&q0)) {
            prop_assert_eq!((x.clone() * y.clone()).specialize(&q0).unwrap(), a.clone() * b.clone());
            prop_assert_eq!((x + y).specialize(&q0).unwrap(), a + b);
        }
    }
}
