//! The second-order partners O_b = T₋T₊ and O_f = T₊T₋ written out directly
//! (with terms acting on f(qx)) agree exactly with the compositions.
use qsusy::operators::{second_order_composed, second_order_direct, Partner};
use qsusy::qcore::{rat, Deformation};
use qsusy::qspecial::VacuumSpec;
use qsusy::verify::ramp_probe;

fn main() -> qsusy::Result<()> {
    let v = VacuumSpec::new(rat(1, 2), Deformation::from_ratio(5, 4), 24)?;
    let probe = ramp_probe(24);
    for which in [Partner::B, Partner::F] {
        let direct = second_order_direct(&v, which).apply(&probe);
        let composed = second_order_composed(&v, which).apply(&probe);
        println!(
            "O_{which}: order {} result, direct == composed: {}",
            direct.order(),
            direct.agrees_with(&composed)
        );
        println!(
            "  first coefficients: {} | {} | {}",
            direct.re(0),
            direct.re(1),
            direct.re(2)
        );
    }
    Ok(())
}
