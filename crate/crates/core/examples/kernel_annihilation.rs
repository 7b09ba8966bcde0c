//! The deformed intertwiner T₊ = D_q − x·β_q(x²) annihilates the deformed
//! Gaussian vacuum e_q(βx²) exactly, coefficient by coefficient.
use qsusy::operators::t_plus_q;
use qsusy::qcore::{rat, Deformation};
use qsusy::qspecial::{beta_q, q_gauss, VacuumSpec};

fn main() -> qsusy::Result<()> {
    let order = 40;
    for (n, m) in [(2, 1), (3, 2), (5, 4)] {
        for beta in [rat(-1, 2), rat(1, 2)] {
            let v = VacuumSpec::new(beta, Deformation::from_ratio(n, m), order)?;
            let residual = t_plus_q(&v).apply(&q_gauss(&v));
            println!(
                "q = {:>3}, β = {:>4}: β_q(0) = {:>6}, T₊ψ_q zero through x^{} : {}",
                v.deformation(),
                v.beta(),
                beta_q(&v).re(0),
                residual.order(),
                residual.is_zero()
            );
        }
    }
    Ok(())
}
