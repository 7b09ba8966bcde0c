//! Negative factorization energies from i-rotated excited states: at q = 1,
//! h₀u_p = −2(p+1)u_p, and the generalized intertwiner annihilates u_p for
//! any q.
use qsusy::operators::{susy_pair_limit, FactorizationPair};
use qsusy::qcore::{int, Deformation};
use qsusy::qspecial::{u_transform, VacuumSpec};

fn main() -> qsusy::Result<()> {
    let order = 24;
    let h0 = susy_pair_limit(&VacuumSpec::regular(Deformation::classical(), order)).0;
    for p in [0usize, 2, 4] {
        let u = u_transform(p, &Deformation::classical(), order)?;
        let lhs = h0.apply(&u);
        let rhs = u.scale_real(&int(-2 * (p as i64 + 1)));
        println!(
            "p = {p}: h₀u = −{}u : {}",
            2 * (p + 1),
            lhs.agrees_with(&rhs)
        );
    }
    for d in [Deformation::classical(), Deformation::from_ratio(3, 2)] {
        for p in [0usize, 2] {
            let pair = FactorizationPair::excited(p, &d, order)?;
            let u = u_transform(p, &d, order)?;
            println!(
                "q = {d}, p = {p}: ε = {}, labelled {}, T₊u = 0: {}, T₋T₊u = 0: {}",
                pair.epsilon,
                pair.labeled_energy.as_ref().unwrap(),
                pair.t_plus.apply(&u).is_zero(),
                pair.lower().apply(&u).is_zero()
            );
        }
    }
    Ok(())
}
