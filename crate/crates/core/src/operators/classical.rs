//! Undeformed operators: the Hermite and oscillator operators, the
//! classical Darboux intertwiner, and the supersymmetric pair `h₀`, `h₁`.

use num_traits::Zero;

use crate::error::{QError, Result};
use crate::qcore::{int, Deformation, Rational};
use crate::qspecial::VacuumSpec;
use crate::series::PowerSeries;

use super::generalized::{t_generalized, Sign};
use super::QOperator;

/// `T = D - u'/u`.
pub fn classical_darboux(u: &PowerSeries) -> Result<QOperator> {
    Ok(t_generalized(u, &Deformation::classical(), Sign::Plus)?.with_label("T"))
}

/// `T⁺ = -D - u'/u`.
pub fn classical_darboux_conjugate(u: &PowerSeries) -> Result<QOperator> {
    Ok(t_generalized(u, &Deformation::classical(), Sign::Minus)?.with_label("T+"))
}

/// `ΔV = -2 (ln u)''`, computed as `-2 (u'/u)'` so no logarithm is needed.
pub fn darboux_potential_difference(u: &PowerSeries) -> Result<PowerSeries> {
    if u.coeff(0).is_zero() {
        return Err(QError::NonInvertibleDivisor);
    }
    let log_derivative = u.derivative().try_div(u)?;
    Ok(log_derivative.derivative().scale_real(&int(-2)))
}

/// Hermite operator `D² - 2xD + 2n`.
pub fn classical_hermite_op(n: usize) -> QOperator {
    let d = QOperator::derivative();
    let drift = &QOperator::multiply_monomial(int(-2), 1) * &d;
    let op = &(&(&d * &d) + &drift) + &QOperator::constant(int(2 * n as i64));
    op.with_label(format!("O_H[n={n}]"))
}

/// Oscillator operator `-D² + x² - (2n+1)`.
pub fn classical_schrodinger_op(n: usize) -> QOperator {
    let d = QOperator::derivative();
    let potential =
        &QOperator::multiply_monomial(int(1), 2) - &QOperator::constant(int(2 * n as i64 + 1));
    (&(-&(&d * &d)) + &potential).with_label(format!("O_phi[n={n}]"))
}

/// The undeformed partners `h₀ = -D² + β₁²x² + β₁` and
/// `h₁ = -D² + β₁²x² - β₁`, where `β₁ = 2β` is the `q -> 1` value of `β_q`.
pub fn susy_pair_limit(v: &VacuumSpec) -> (QOperator, QOperator) {
    susy_pair_for(&v.classical_beta())
}

pub(crate) fn susy_pair_for(beta1: &Rational) -> (QOperator, QOperator) {
    let d = QOperator::derivative();
    let base = &(-&(&d * &d)) + &QOperator::multiply_monomial(beta1 * beta1, 2);
    let h0 = (&base + &QOperator::constant(beta1.clone())).with_label(format!("h0[β1={beta1}]"));
    let h1 = (&base - &QOperator::constant(beta1.clone())).with_label(format!("h1[β1={beta1}]"));
    (h0, h1)
}
