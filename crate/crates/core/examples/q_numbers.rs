//! Symmetric q-numbers and q-factorials, and their q ↔ 1/q invariance.
use qsusy::qcore::{q_factorial, q_number, Deformation};

fn main() -> qsusy::Result<()> {
    for d in [
        Deformation::from_ratio(2, 1),
        Deformation::from_ratio(3, 2),
        Deformation::classical(),
    ] {
        print!("q = {d:>3}:");
        for n in 0..=5 {
            let v = q_number(n, &d);
            assert_eq!(v, q_number(n, &d.inverse()));
            print!("  [{n}] = {v}");
        }
        println!("   [5]! = {}", q_factorial(5, &d)?);
    }
    Ok(())
}
