//! The pointwise evaluator (literal calls to f(qx), f(x/q)) against the
//! exact series action, for O_b of the regular vacuum acting on the
//! irregular one (which it does not annihilate).
use qsusy::operators::{second_order_direct, Partner};
use qsusy::qcore::rat;
use qsusy::qcore::Deformation;
use qsusy::qspecial::{q_gauss, VacuumSpec};

fn main() {
    let v = VacuumSpec::regular(Deformation::from_ratio(3, 2), 32);
    let op = second_order_direct(&v, Partner::B);
    let f = q_gauss(&VacuumSpec::new(rat(1, 2), v.deformation().clone(), 32).unwrap());
    let exact = op.apply(&f);
    for x in [-0.5, -0.25, 0.25, 0.5] {
        let point = op.apply_point_series(&f, x);
        let series = exact.evaluate_float(x);
        println!(
            "x = {x:>5}: pointwise {point:+.15e}  series {series:+.15e}  rel {:.1e}",
            ((point - series) / series).abs()
        );
    }
}
