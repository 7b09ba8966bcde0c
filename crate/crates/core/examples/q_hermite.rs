//! Deformed Rodrigues functions H_n^(q) next to the classical Hermite
//! polynomials. For q ≠ 1 the Rodrigues product does not terminate.
use qsusy::qcore::{format_rational, Deformation};
use qsusy::qspecial::{classical_hermite, q_hermite};

fn main() -> qsusy::Result<()> {
    let q = Deformation::from_ratio(3, 2);
    for n in 0..=4 {
        let classical = classical_hermite(n);
        let at_one = q_hermite(n, &Deformation::classical(), n + 4)?;
        let deformed = q_hermite(n, &q, n + 4)?;
        let show = |s: &qsusy::PowerSeries| {
            s.coeffs()
                .iter()
                .map(|c| format_rational(&c.re))
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!("n = {n}");
        println!("  recurrence   : [{}]", show(&classical));
        println!("  Rodrigues q=1: [{}]", show(&at_one));
        println!("  Rodrigues q={q}: [{}]", show(&deformed));
    }
    Ok(())
}
