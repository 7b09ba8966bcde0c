//! Deformed intertwiners built on the q-Gaussian vacua and their
//! second-order q-nonlocal partners.

use std::fmt;
use std::str::FromStr;

use crate::qcore::{to_f64, Rational};
use crate::qspecial::{beta_q, beta_q_float, delta_beta_from, VacuumSpec};
use crate::series::PowerSeries;

use super::{point_jackson, Coefficient, QOperator};

/// Which product of intertwiners: `b` is `T₋T₊` (annihilates the vacuum),
/// `f` is `T₊T₋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Partner {
    B,
    F,
}

impl Partner {
    fn sign(self) -> i64 {
        match self {
            Partner::B => 1,
            Partner::F => -1,
        }
    }
}

impl fmt::Display for Partner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Partner::B => "b",
            Partner::F => "f",
        })
    }
}

impl FromStr for Partner {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "b" | "B" | "Ob" => Ok(Partner::B),
            "f" | "F" | "Of" => Ok(Partner::F),
            other => Err(format!("unknown partner {other:?}, expected b or f")),
        }
    }
}

struct Drift {
    beta: PowerSeries,
    beta0: f64,
    q: f64,
}

impl Drift {
    fn new(v: &VacuumSpec) -> Self {
        Self {
            beta: beta_q(v),
            beta0: to_f64(v.beta()),
            q: v.deformation().to_f64(),
        }
    }

    fn point(&self) -> impl Fn(f64) -> f64 + Send + Sync + Clone + 'static {
        let (beta, q) = (self.beta0, self.q);
        move |x| beta_q_float(beta, q, x)
    }
}

/// `x β_q(x²)`, the q-logarithmic derivative of the vacuum.
pub fn drift_coefficient(v: &VacuumSpec) -> Coefficient {
    let drift = Drift::new(v);
    let b = drift.point();
    Coefficient::new(drift.beta.shift_up(1), move |x| x * b(x))
}

/// `T₊ = D_q - β_q(x²) x`.
pub fn t_plus_q(v: &VacuumSpec) -> QOperator {
    let d = QOperator::jackson(v.deformation());
    let w = QOperator::multiply("xβ_q(x²)", drift_coefficient(v));
    (&d - &w).with_label(format!("T+[β={}, q={}]", v.beta(), v.deformation()))
}

/// `T₋ = -D_q - β_q(x²) x`.
pub fn t_minus_q(v: &VacuumSpec) -> QOperator {
    let d = QOperator::jackson(v.deformation());
    let w = QOperator::multiply("xβ_q(x²)", drift_coefficient(v));
    (&(-&d) - &w).with_label(format!("T-[β={}, q={}]", v.beta(), v.deformation()))
}

/// `O_b = T₋∘T₊` or `O_f = T₊∘T₋` as literal compositions.
pub fn second_order_composed(v: &VacuumSpec, which: Partner) -> QOperator {
    let (tp, tm) = (t_plus_q(v), t_minus_q(v));
    let op = match which {
        Partner::B => &tm * &tp,
        Partner::F => &tp * &tm,
    };
    op.with_label(format!(
        "O_{which}[β={}, q={}] composed",
        v.beta(),
        v.deformation()
    ))
}

/// The expanded five-term form of the partners,
///
/// ```text
/// O f = -D_q² f ∓ Δβ_q x D_q f + β_q²(x²) x² f(x)
///       ± [q (D_q β_q(x²)) x + β_q(q⁻²x²)] f(qx)
/// ```
///
/// with the upper signs for `b` and the lower for `f`. Terms marked `→x`
/// multiply the solution at `x`; terms marked `→qx` multiply `f(qx)` while
/// the bracketed coefficient stays a function of `x`.
pub fn second_order_direct(v: &VacuumSpec, which: Partner) -> QOperator {
    let d = v.deformation();
    let drift = Drift::new(v);
    let (q_exact, q) = (d.q().clone(), drift.q);
    let q_inv = d.q_inv();
    let sign = Rational::from_integer(which.sign().into());
    let b = drift.point();

    let beta = &drift.beta;
    let delta = delta_beta_from(beta, d);
    let dbeta = beta.jackson_derivative(d);

    let drift_term = {
        let b = b.clone();
        Coefficient::new(delta.shift_up(1), move |x| x * (b(x) - b(x / q) / q))
    };
    let potential = {
        let b = b.clone();
        Coefficient::new((beta * beta).shift_up(2), move |x| {
            let bx = b(x);
            x * x * bx * bx
        })
    };
    let shifted = {
        let series = &dbeta.shift_up(1).scale_real(&q_exact) + &beta.scale_arg_real(&q_inv);
        Coefficient::new(series, move |x| q * x * point_jackson(&b, q, x) + b(x / q))
    };

    let dq = QOperator::jackson(d);
    let kinetic = -&(&dq * &dq);
    let drift_op = &QOperator::multiply("xΔβ_q", drift_term) * &dq;
    let potential_op = QOperator::multiply("β_q²x²", potential);
    let shifted_op = QOperator::multiply_shifted("[q(D_qβ_q)x + β_q(q⁻²x²)]→qx", shifted, d);

    let op = &(&(&kinetic - &drift_op.scale(&sign)) + &potential_op) + &shifted_op.scale(&sign);
    op.with_label(format!("O_{which}[β={}, q={}] direct", v.beta(), d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{int, rat, real, Deformation};
    use crate::qspecial::q_gauss;
    use num_traits::Zero;

    fn grid() -> Vec<VacuumSpec> {
        let mut out = Vec::new();
        for q in [(2, 1), (3, 2), (5, 4)] {
            for beta in [rat(-1, 2), rat(1, 2)] {
                out.push(VacuumSpec::new(beta, Deformation::from_ratio(q.0, q.1), 16).unwrap());
            }
        }
        out
    }

    #[test]
    fn t_plus_annihilates_vacuum() {
        for v in grid() {
            let out = t_plus_q(&v).apply(&q_gauss(&v));
            assert_eq!(out.order(), v.order() - 1);
            assert!(out.is_zero(), "{v:?}");
        }
    }

    #[test]
    fn t_plus_on_constant() {
        let v = VacuumSpec::regular(Deformation::from_ratio(2, 1), 10);
        let out = t_plus_q(&v).apply(&PowerSeries::one(10));
        assert!(out.coeff(0).is_zero());
        assert_eq!(*out.re(1), -(v.beta() * v.deformation().number(2)));
        assert!((0..=out.order()).step_by(2).all(|k| out.coeff(k).is_zero()));
    }

    #[test]
    fn direct_equals_composed_small_grid() {
        let f = PowerSeries::from_real((0..=16).map(|k| rat(k - 7, k + 1)).collect(), 16).unwrap();
        for v in grid() {
            for which in [Partner::B, Partner::F] {
                let a = second_order_composed(&v, which).apply(&f);
                let b = second_order_direct(&v, which).apply(&f);
                assert_eq!(a.order(), 14);
                assert_eq!(a.first_disagreement(&b), None, "{which} {v:?}");
            }
        }
    }

    #[test]
    fn classical_partner_gap() {
        let v = VacuumSpec::regular(Deformation::classical(), 10);
        let one = PowerSeries::one(10);
        let gap = &second_order_composed(&v, Partner::F).apply(&one)
            - &second_order_composed(&v, Partner::B).apply(&one);
        assert!(gap.agrees_with(&PowerSeries::constant(real(int(2)), 10)));
    }

    #[test]
    fn classical_ob_is_oscillator() {
        let v = VacuumSpec::regular(Deformation::classical(), 12);
        let f = PowerSeries::from_real((0..=12).map(|k| rat(3 - k, 2 + k)).collect(), 12).unwrap();
        let expected = &(-f.derivative().derivative()) + &(&f.shift_up(2) - &f);
        assert!(second_order_composed(&v, Partner::B)
            .apply(&f)
            .agrees_with(&expected));
    }

    #[test]
    fn partner_parsing() {
        assert_eq!("Ob".parse::<Partner>().unwrap(), Partner::B);
        assert_eq!("f".parse::<Partner>().unwrap(), Partner::F);
        assert!("x".parse::<Partner>().is_err());
    }
}
