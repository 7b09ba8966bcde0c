//! Property-based checks of the algebraic identities the engine relies on.

use num_traits::{One, Zero};
use proptest::prelude::*;
use qsusy::io::{read_series_csv, series_from_json, series_to_json, write_series_csv};
use qsusy::operators::{second_order_direct, t_plus_q, Partner};
use qsusy::qcore::{imag_unit, q_number, rat, real, Deformation, GaussRational, Rational};
use qsusy::qspecial::{q_exp, VacuumSpec};
use qsusy::PowerSeries;

const ORDER: usize = 8;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn gauss() -> impl Strategy<Value = GaussRational> {
    (small_rational(), small_rational()).prop_map(|(re, im)| GaussRational::new(re, im))
}

fn series() -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(gauss(), 1..=ORDER + 1)
        .prop_map(|cs| PowerSeries::new(cs, ORDER).unwrap())
}

fn real_series() -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(small_rational(), 1..=ORDER + 1)
        .prop_map(|cs| PowerSeries::from_real(cs, ORDER).unwrap())
}

fn deformation() -> impl Strategy<Value = Deformation> {
    (1i64..=7, 1i64..=7).prop_map(|(n, d)| Deformation::from_ratio(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in series(), b in series(), c in series()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &PowerSeries::one(ORDER), a);
    }

    #[test]
    fn division_round_trip(a in series(), b in series(), c0 in gauss()) {
        prop_assume!(!c0.is_zero());
        let mut cs = b.coeffs().to_vec();
        cs[0] = c0;
        let b = PowerSeries::new(cs, ORDER).unwrap();
        let q = a.try_div(&b).unwrap();
        prop_assert_eq!(&q * &b, a);
    }

    #[test]
    fn division_by_non_invertible_fails(a in series(), b in series()) {
        let b = b.truncate(ORDER - 1).shift_up(1);
        prop_assert!(a.try_div(&b).is_err());
    }

    #[test]
    fn q_leibniz(f in series(), g in series(), d in deformation()) {
        let lhs = (&f * &g).jackson_derivative(&d);
        let rhs = &(&f.jackson_derivative(&d) * &g.scale_arg_real(d.q()))
            + &(&f.scale_arg_real(&d.q_inv()) * &g.jackson_derivative(&d));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jackson_is_linear(f in series(), g in series(), c in gauss(), d in deformation()) {
        let combined = (&f.scale(&c) + &g).jackson_derivative(&d);
        let separate = &f.jackson_derivative(&d).scale(&c) + &g.jackson_derivative(&d);
        prop_assert_eq!(combined, separate);
    }

    #[test]
    fn i_rotation_commutes_with_jackson(f in series(), d in deformation()) {
        // D_q[f(ix)] = i·(D_q f)(ix)
        let lhs = f.i_rotate().jackson_derivative(&d);
        let rhs = f.jackson_derivative(&d).i_rotate().scale(&imag_unit());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(f.i_rotate().i_rotate(), f.scale_arg(&real(-Rational::one())));
    }

    #[test]
    fn scale_arg_is_evaluation_at_scaled_point(f in series(), lambda in small_rational(), x in small_rational()) {
        let lhs = f.scale_arg_real(&lambda).evaluate(&real(x.clone()));
        let rhs = f.evaluate(&real(&lambda * &x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_number_symmetry_and_growth(n in -30i64..=30, d in deformation()) {
        prop_assert_eq!(q_number(n, &d), q_number(n, &d.inverse()));
        prop_assert_eq!(q_number(-n, &d), -q_number(n, &d));
        if n >= 0 {
            prop_assert!(q_number(n + 1, &d) > q_number(n, &d));
            prop_assert!(q_number(n, &d) >= rat(n, 1));
        }
    }

    #[test]
    fn q_exp_symmetry(u in real_series(), d in deformation()) {
        let mut cs = u.coeffs().to_vec();
        cs[0] = GaussRational::zero();
        let u = PowerSeries::new(cs, ORDER).unwrap();
        prop_assert_eq!(q_exp(&u, &d).unwrap(), q_exp(&u, &d.inverse()).unwrap());
    }

    #[test]
    fn operators_are_linear(f in real_series(), g in real_series(), c in small_rational(), d in deformation()) {
        let v = VacuumSpec::regular(d, ORDER);
        for op in [t_plus_q(&v), second_order_direct(&v, Partner::F)] {
            let lhs = op.apply(&(&f.scale_real(&c) + &g));
            let rhs = &op.apply(&f).scale_real(&c) + &op.apply(&g);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn json_and_csv_round_trip(s in series()) {
        prop_assert_eq!(series_from_json(&series_to_json(&s)).unwrap(), s.clone());
        let mut buf = Vec::new();
        write_series_csv(&s, &mut buf).unwrap();
        prop_assert_eq!(read_series_csv(buf.as_slice()).unwrap(), s);
    }
}
