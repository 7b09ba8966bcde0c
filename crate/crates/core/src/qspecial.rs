//! Named q-deformed functions: the q-exponential, deformed oscillator vacua,
//! the drift coefficient `β_q(x²)`, q-Hermite functions from the deformed
//! Rodrigues formula, and i-rotated transformation functions. Classical
//! (`q = 1`) Hermite data is built independently by recurrence so it can
//! serve as an oracle.

use num_traits::{One, Zero};

use crate::error::{QError, Result};
use crate::qcore::{i_pow, int, q_factorials, rat, real, Deformation, GaussRational, Rational};
use crate::series::PowerSeries;

/// Gaussian vacuum `e_q(β x²)` together with the truncation order used for
/// every series derived from it.
///
/// `β = -1/2` is the regular vacuum, `β = +1/2` the irregular one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VacuumSpec {
    beta: Rational,
    deformation: Deformation,
    order: usize,
}

impl VacuumSpec {
    pub fn new(beta: Rational, deformation: Deformation, order: usize) -> Result<Self> {
        if beta.is_zero() {
            return Err(QError::ZeroBeta);
        }
        Ok(Self {
            beta,
            deformation,
            order,
        })
    }

    /// `β = -1/2`.
    pub fn regular(deformation: Deformation, order: usize) -> Self {
        Self::new(rat(-1, 2), deformation, order).expect("nonzero beta")
    }

    /// `β = +1/2`.
    pub fn irregular(deformation: Deformation, order: usize) -> Self {
        Self::new(rat(1, 2), deformation, order).expect("nonzero beta")
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn deformation(&self) -> &Deformation {
        &self.deformation
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Same vacuum at another deformation.
    pub fn with_deformation(&self, deformation: Deformation) -> Self {
        Self {
            deformation,
            ..self.clone()
        }
    }

    /// The `q -> 1` value of `β_q`, namely `2β`.
    pub fn classical_beta(&self) -> Rational {
        &self.beta * int(2)
    }
}

/// `e_q(c·x^k)` to the given order.
fn q_exp_monomial(c: &GaussRational, k: usize, order: usize, d: &Deformation) -> PowerSeries {
    debug_assert!(k >= 1);
    let terms = order / k;
    let facts = q_factorials(terms, d);
    let mut coeffs = vec![GaussRational::zero(); order + 1];
    let mut pow = GaussRational::one();
    for (n, fact) in facts.iter().enumerate() {
        coeffs[n * k] = &pow / fact;
        pow = &pow * c;
    }
    PowerSeries::new(coeffs, order).expect("sized to order")
}

/// The symmetric q-exponential `Σ uⁿ / [n]_q!` composed with a series `u`
/// that vanishes at the origin.
pub fn q_exp(u: &PowerSeries, d: &Deformation) -> Result<PowerSeries> {
    if !u.coeff(0).is_zero() {
        return Err(QError::NonzeroConstantTerm);
    }
    let order = u.order();
    let nonzero: Vec<usize> = (0..=order).filter(|&k| !u.coeff(k).is_zero()).collect();
    match nonzero.as_slice() {
        [] => return Ok(PowerSeries::one(order)),
        [k] => return Ok(q_exp_monomial(u.coeff(*k), *k, order, d)),
        _ => {}
    }
    let facts = q_factorials(order, d);
    let mut sum = PowerSeries::one(order);
    let mut power = PowerSeries::one(order);
    for fact in facts.iter().skip(1) {
        power = &power * u;
        if power.is_zero() {
            break;
        }
        sum = &sum + &power.scale_real(&fact.recip());
    }
    Ok(sum)
}

/// `e_q(λ x²)` for a rational `λ`.
fn q_exp_quadratic(lambda: &Rational, order: usize, d: &Deformation) -> PowerSeries {
    if lambda.is_zero() {
        return PowerSeries::one(order);
    }
    q_exp_monomial(&real(lambda.clone()), 2, order, d)
}

/// The deformed vacuum `ψ_q = e_q(β x²)`, normalized to constant term one.
pub fn q_gauss(v: &VacuumSpec) -> PowerSeries {
    q_exp_quadratic(&v.beta, v.order, &v.deformation)
}

/// The drift coefficient
/// `β_q(x²) = β (q e_q(qβx²) + q⁻¹ e_q(q⁻¹βx²)) / e_q(βx²)`.
///
/// It is the logarithmic Jackson derivative of the vacuum divided by `x`:
/// `D_q ψ_q = x β_q(x²) ψ_q`.
pub fn beta_q(v: &VacuumSpec) -> PowerSeries {
    let d = &v.deformation;
    let q = d.q();
    let q_inv = d.q_inv();
    let up = q_exp_quadratic(&(q * &v.beta), v.order, d).scale_real(q);
    let down = q_exp_quadratic(&(&q_inv * &v.beta), v.order, d).scale_real(&q_inv);
    (&up + &down)
        .try_div(&q_gauss(v))
        .expect("q-exponential has unit constant term")
        .scale_real(&v.beta)
}

/// `Δβ_q = β_q(x²) - q⁻¹ β_q(q⁻²x²)`, the coefficient of the first-order
/// drift term in the second-order partners. Vanishes identically at `q = 1`.
pub fn delta_beta_q(v: &VacuumSpec) -> PowerSeries {
    let b = beta_q(v);
    delta_beta_from(&b, &v.deformation)
}

pub(crate) fn delta_beta_from(beta: &PowerSeries, d: &Deformation) -> PowerSeries {
    let q_inv = d.q_inv();
    beta - &beta.scale_arg_real(&q_inv).scale_real(&q_inv)
}

/// Deformed Rodrigues form `(-1)ⁿ e_q(x²) D_qⁿ e_q(-x²)`.
///
/// For `q ≠ 1` the product does not terminate, so the result is a genuine
/// truncated series; only at `q = 1` does it reduce to the Hermite
/// polynomial. The returned series has exactly the requested order.
pub fn q_hermite(n: usize, d: &Deformation, order: usize) -> Result<PowerSeries> {
    let required = n + 2;
    if order < required {
        return Err(QError::InsufficientOrder {
            order,
            derivatives: n,
            required,
        });
    }
    let mut derived = q_exp_quadratic(&int(-1), order + n, d);
    for _ in 0..n {
        derived = derived.jackson_derivative(d);
    }
    let out = &q_exp_quadratic(&int(1), order, d) * &derived;
    Ok(if n % 2 == 1 { -out } else { out })
}

/// Deformed excited state `H_n^(q)(x) e_q(-x²/2)`.
pub fn q_excited_state(n: usize, d: &Deformation, order: usize) -> Result<PowerSeries> {
    let h = q_hermite(n, d, order)?;
    Ok(&h * &q_exp_quadratic(&rat(-1, 2), order, d))
}

/// Physicists' Hermite polynomial by the three-term recurrence, as a series
/// of order `n`.
pub fn classical_hermite(n: usize) -> PowerSeries {
    let mut prev: Vec<Rational> = vec![int(1)];
    if n == 0 {
        return PowerSeries::from_real(prev, 0).expect("fits");
    }
    let mut cur: Vec<Rational> = vec![int(0), int(2)];
    for k in 1..n {
        // H_{k+1} = 2x H_k - 2k H_{k-1}
        let mut next = vec![int(0); k + 2];
        for (j, c) in cur.iter().enumerate() {
            next[j + 1] += c * int(2);
        }
        for (j, c) in prev.iter().enumerate() {
            next[j] -= c * int(2 * k as i64);
        }
        prev = std::mem::replace(&mut cur, next);
    }
    PowerSeries::from_real(cur, n).expect("fits")
}

/// Oscillator normalization `(2ⁿ n! √π)^(-1/2)`.
pub fn classical_norm(n: usize) -> f64 {
    let fact: f64 = (1..=n).map(|k| k as f64).product();
    (2f64.powi(n as i32) * fact * std::f64::consts::PI.sqrt()).powf(-0.5)
}

/// `φₙ = e^{-x²/2} Hₙ(x)` truncated to `order`.
pub fn classical_phi(n: usize, order: usize) -> PowerSeries {
    let gauss = q_exp_quadratic(&rat(-1, 2), order, &Deformation::classical());
    &gauss * &classical_hermite(n).extend_polynomial(order)
}

/// `H_p^(q)(ix) e_q(x²/2)` before the phase is removed.
pub fn u_transform_unnormalized(p: usize, d: &Deformation, order: usize) -> Result<PowerSeries> {
    let h = q_hermite(p, d, order)?;
    Ok(&h.i_rotate() * &q_exp_quadratic(&rat(1, 2), order, d))
}

/// Transformation function `u_p^(q) = i^{-p} H_p^(q)(ix) e_q(x²/2)` for even
/// `p`. The phase makes every coefficient real and the constant term is
/// nonzero, so `u` is invertible as a series.
pub fn u_transform(p: usize, d: &Deformation, order: usize) -> Result<PowerSeries> {
    if p % 2 == 1 {
        return Err(QError::OddTransformationIndex(p));
    }
    let raw = u_transform_unnormalized(p, d, order)?;
    Ok(raw.scale(&i_pow(-(p as i64))))
}

/// `e_q(t)` summed in floating point until the terms stop contributing.
pub fn q_exp_float(t: f64, q: f64) -> f64 {
    let mut sum = 1.0;
    let mut term = 1.0;
    for n in 1..400 {
        let qn = if (q - 1.0).abs() < f64::EPSILON {
            n as f64
        } else {
            (q.powi(n) - q.powi(-n)) / (q - 1.0 / q)
        };
        term *= t / qn;
        sum += term;
        if term.abs() <= f64::EPSILON * sum.abs() * 1e-3 || !term.is_finite() {
            break;
        }
    }
    sum
}

/// Pointwise `β_q(x²)` in floating point, from the defining quotient.
pub fn beta_q_float(beta: f64, q: f64, x: f64) -> f64 {
    let x2 = x * x;
    beta * (q * q_exp_float(q * beta * x2, q) + q_exp_float(beta * x2 / q, q) / q)
        / q_exp_float(beta * x2, q)
}
