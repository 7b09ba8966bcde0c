//! Intertwiners built from an arbitrary nodeless transformation function,
//! and the factorization pairs they generate.

use std::fmt;

use num_traits::Signed;

use crate::error::{QError, Result};
use crate::qcore::{int, Deformation, Rational};
use crate::qspecial::{u_transform, VacuumSpec};
use crate::series::PowerSeries;

use super::deformed::{t_minus_q, t_plus_q};
use super::{point_jackson, Coefficient, QOperator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `±D_q - (D_q u)/u`.
///
/// The logarithmic q-derivative is computed by exact series division, so the
/// result is unchanged when `u` is multiplied by any nonzero constant.
pub fn t_generalized(u: &PowerSeries, d: &Deformation, sign: Sign) -> Result<QOperator> {
    let ratio = u.jackson_derivative(d).try_div(u)?;
    let u_point = u.clone();
    let q = d.to_f64();
    let coefficient = Coefficient::new(ratio, move |x| {
        let f = |y: f64| u_point.evaluate_float(y);
        point_jackson(&f, q, x) / f(x)
    });
    let dq = QOperator::jackson(d);
    let dq = match sign {
        Sign::Plus => dq,
        Sign::Minus => -&dq,
    };
    let op = &dq - &QOperator::multiply("D_q u/u", coefficient);
    Ok(op.with_label(format!("T{sign}[u, q={d}]")))
}

/// A pair of first-order intertwiners with the factorization energy they
/// were built for.
#[derive(Debug, Clone)]
pub struct FactorizationPair {
    pub t_plus: QOperator,
    pub t_minus: QOperator,
    /// Energy `ε ≤ 0` such that `T₋T₊ = h₀ - ε` in the undeformed case.
    pub epsilon: Rational,
    /// Human-readable description of the transformation function.
    pub source: String,
    /// Conventional label attached to the energy when it differs from the
    /// value verified against `h₀` (see [`FactorizationPair::excited`]).
    pub labeled_energy: Option<Rational>,
}

impl FactorizationPair {
    /// Zero-energy pair built on the vacuum `e_q(βx²)`.
    pub fn vacuum(v: &VacuumSpec) -> Self {
        Self {
            t_plus: t_plus_q(v),
            t_minus: t_minus_q(v),
            epsilon: int(0),
            source: format!("e_q({}·x²), q={}", v.beta(), v.deformation()),
            labeled_energy: None,
        }
    }

    /// Pair built on a caller-supplied transformation function.
    pub fn from_transformation(
        u: &PowerSeries,
        d: &Deformation,
        epsilon: Rational,
        source: impl Into<String>,
    ) -> Result<Self> {
        if epsilon.is_positive() {
            return Err(QError::PositiveFactorizationEnergy(epsilon));
        }
        Ok(Self {
            t_plus: t_generalized(u, d, Sign::Plus)?,
            t_minus: t_generalized(u, d, Sign::Minus)?,
            epsilon,
            source: source.into(),
            labeled_energy: None,
        })
    }

    /// Pair built on the i-rotated excited function `u_p^(q)` with even `p`.
    ///
    /// With `h₀ = -D² + x² - 1`, the undeformed `u_p` satisfies
    /// `h₀ u_p = -2(p+1) u_p`, which is the energy recorded here. The
    /// half-scaled convention `-(p+1)` is kept in `labeled_energy`.
    pub fn excited(p: usize, d: &Deformation, order: usize) -> Result<Self> {
        let u = u_transform(p, d, order)?;
        let p = p as i64;
        let mut pair =
            Self::from_transformation(&u, d, int(-2 * (p + 1)), format!("u_{p}^(q), q={d}"))?;
        pair.labeled_energy = Some(int(-(p + 1)));
        Ok(pair)
    }

    /// `T₋∘T₊`.
    pub fn lower(&self) -> QOperator {
        &self.t_minus * &self.t_plus
    }

    /// `T₊∘T₋`.
    pub fn upper(&self) -> QOperator {
        &self.t_plus * &self.t_minus
    }
}
