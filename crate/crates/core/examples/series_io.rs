//! Series arithmetic and the JSON / CSV wire formats.
use qsusy::io::{series_from_json, series_to_json, write_series_csv};
use qsusy::qcore::{rat, Deformation};
use qsusy::PowerSeries;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = PowerSeries::from_real(vec![rat(1, 1), rat(1, 2), rat(-1, 3)], 4)?;
    let b = PowerSeries::from_real(vec![rat(2, 1), rat(0, 1), rat(1, 1)], 4)?;
    let quotient = a.try_div(&b)?;
    assert!((&quotient * &b).agrees_with(&a));
    let dq = quotient.jackson_derivative(&Deformation::from_ratio(2, 1));
    let json = series_to_json(&dq);
    println!("{json}");
    assert_eq!(series_from_json(&json)?, dq);
    write_series_csv(&dq.i_rotate(), std::io::stdout())?;
    Ok(())
}
