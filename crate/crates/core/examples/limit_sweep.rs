//! Approach to the undeformed limit along q = 1 + 2⁻ᵏ: operator deviation,
//! β_q(0) − 2β (second order in q − 1) and Δβ_q (first order).
use qsusy::operators::{
    beta_origin_deviation, drift_deviation, dyadic_approach, limit_sweep, second_order_composed,
    successive_ratios, write_limit_csv, Partner,
};
use qsusy::qcore::{rat, to_f64, Deformation};
use qsusy::qspecial::{q_gauss, VacuumSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let beta = rat(-1, 2);
    let qs = dyadic_approach(6);
    let probe = q_gauss(&VacuumSpec::new(
        beta.clone(),
        Deformation::classical(),
        24,
    )?);
    let rows = limit_sweep(
        |d| {
            second_order_composed(
                &VacuumSpec::new(beta.clone(), d.clone(), 24).unwrap(),
                Partner::B,
            )
        },
        &qs,
        &probe,
    )?;
    println!("O_b deviation from h₀ on exp(-x²/2):");
    write_limit_csv(&rows, std::io::stdout())?;

    let ratios = |rows: &[qsusy::operators::LimitRow]| -> Vec<f64> {
        let values: Vec<_> = rows.iter().map(|r| r.deviation.clone()).collect();
        successive_ratios(&values).iter().map(to_f64).collect()
    };
    println!(
        "β_q(0) − 2β ratios: {:?}",
        ratios(&beta_origin_deviation(&beta, &qs)?)
    );
    println!(
        "Δβ_q ratios:        {:?}",
        ratios(&drift_deviation(&beta, &qs, 16)?)
    );
    Ok(())
}
