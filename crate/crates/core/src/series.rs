//! Truncated formal power series with exact Gaussian-rational coefficients.
//!
//! A [`PowerSeries`] of order `N` stores the coefficients of `x^0 ..= x^N`.
//! Coefficients past `N` are unknown, not zero, so every binary operation
//! keeps only the orders both operands can vouch for.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{QError, Result};
use crate::qcore::{i_pow, real, to_f64, Deformation, GaussRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<GaussRational>,
}

fn is_real(z: &GaussRational) -> bool {
    z.im.is_zero()
}

// Most series in this crate are real; skip the imaginary products when we can.
fn gmul(a: &GaussRational, b: &GaussRational) -> GaussRational {
    if is_real(a) && is_real(b) {
        real(&a.re * &b.re)
    } else {
        a * b
    }
}

impl PowerSeries {
    /// Builds a series of the given order, padding the tail with zeros.
    pub fn new(mut coeffs: Vec<GaussRational>, order: usize) -> Result<Self> {
        if coeffs.len() > order + 1 {
            return Err(QError::TooManyCoefficients {
                len: coeffs.len(),
                order,
            });
        }
        coeffs.resize(order + 1, GaussRational::zero());
        Ok(Self { coeffs })
    }

    /// Same as [`PowerSeries::new`] with real coefficients.
    pub fn from_real(coeffs: Vec<Rational>, order: usize) -> Result<Self> {
        Self::new(coeffs.into_iter().map(real).collect(), order)
    }

    /// Accepts a signed order as read from external input.
    pub fn with_signed_order(coeffs: Vec<GaussRational>, order: i64) -> Result<Self> {
        let order = usize::try_from(order).map_err(|_| QError::NegativeOrder(order))?;
        Self::new(coeffs, order)
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![GaussRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(GaussRational::one(), order)
    }

    pub fn constant(c: GaussRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c·x^k`, or the zero series if `k` lies beyond the order.
    pub fn monomial(c: GaussRational, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The identity function `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(GaussRational::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &GaussRational {
        &self.coeffs[n]
    }

    /// Real part of the coefficient of `x^n`.
    pub fn re(&self, n: usize) -> &Rational {
        &self.coeffs[n].re
    }

    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(is_real)
    }

    /// Drops coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Raises the order by padding with zeros. Only meaningful when the series
    /// is known to be a polynomial of degree at most its current order.
    pub fn extend_polynomial(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if order + 1 > coeffs.len() {
            coeffs.resize(order + 1, GaussRational::zero());
        }
        Self { coeffs }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| gmul(a, c)).collect(),
        }
    }

    pub fn scale_real(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by `x^k`. The result is known up to order `N + k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![GaussRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `self / b`, valid up to the smaller of the two orders.
    pub fn try_div(&self, b: &PowerSeries) -> Result<Self> {
        let b0 = &b.coeffs[0];
        if b0.is_zero() {
            return Err(QError::NonInvertibleDivisor);
        }
        let order = self.order().min(b.order());
        let b0_inv = b0.inv();
        let mut out: Vec<GaussRational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                if b.coeffs[k].is_zero() || out[n - k].is_zero() {
                    continue;
                }
                acc -= gmul(&b.coeffs[k], &out[n - k]);
            }
            out.push(gmul(&acc, &b0_inv));
        }
        Ok(Self { coeffs: out })
    }

    /// Substitution `x -> λx`: the coefficient of `x^n` picks up `λ^n`.
    pub fn scale_arg(&self, lambda: &GaussRational) -> Self {
        let mut pow = GaussRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(gmul(c, &pow));
            pow = gmul(&pow, lambda);
        }
        Self { coeffs }
    }

    pub fn scale_arg_real(&self, lambda: &Rational) -> Self {
        self.scale_arg(&real(lambda.clone()))
    }

    /// Substitution `x -> ix`.
    pub fn i_rotate(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| gmul(c, &i_pow(n as i64)))
                .collect(),
        }
    }

    /// Jackson derivative `x^n -> [n]_q x^(n-1)`. At `q = 1` this is the
    /// ordinary derivative. The order drops by one.
    ///
    /// # Panics
    ///
    /// Panics on an order-0 series, which has no known coefficient left
    /// after differentiation.
    pub fn jackson_derivative(&self, d: &Deformation) -> Self {
        assert!(self.order() >= 1, "cannot differentiate an order-0 series");
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c * d.number(n as i64))
                .collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        self.jackson_derivative(&Deformation::classical())
    }

    /// Horner evaluation of the retained polynomial.
    pub fn evaluate(&self, x0: &GaussRational) -> GaussRational {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussRational::zero(), |acc, c| gmul(&acc, x0) + c)
    }

    /// Floating-point Horner evaluation of the real parts.
    pub fn evaluate_float(&self, x0: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x0 + to_f64(&c.re))
    }

    /// First index, up to the common order, where the two series differ.
    pub fn first_disagreement(&self, other: &PowerSeries) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    /// Exact equality up to the common order.
    pub fn agrees_with(&self, other: &PowerSeries) -> bool {
        self.first_disagreement(other).is_none()
    }

    /// Largest `|re|` or `|im|` over the retained coefficients.
    pub fn max_abs_coeff(&self) -> Rational {
        self.coeffs
            .iter()
            .flat_map(|c| [c.re.abs(), c.im.abs()])
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Index of the first coefficient that is not exactly zero.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(),
        }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![GaussRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += gmul(a, b);
            }
        }
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for PowerSeries {
            type Output = PowerSeries;
            fn $m(self, rhs: PowerSeries) -> PowerSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PowerSeries> for PowerSeries {
            type Output = PowerSeries;
            fn $m(self, rhs: &PowerSeries) -> PowerSeries {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        -&self
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im.is_zero() {
                write!(f, "({})", c.re)?;
            } else {
                write!(f, "({} + {}i)", c.re, c.im)?;
            }
            match n {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{imag_unit, int, rat};

    fn poly(cs: &[(i64, i64)], order: usize) -> PowerSeries {
        PowerSeries::from_real(cs.iter().map(|&(p, q)| rat(p, q)).collect(), order).unwrap()
    }

    #[test]
    fn construction() {
        let c = poly(&[(1, 1)], 4);
        assert_eq!(c.order(), 4);
        assert_eq!(*c.re(0), int(1));
        assert!((1..=4).all(|k| c.coeff(k).is_zero()));
        assert_eq!(PowerSeries::x(4), poly(&[(0, 1), (1, 1)], 4));
        let s = poly(&[(1, 1), (0, 1), (-1, 2)], 2);
        assert_eq!(s.order(), 2);
        assert!(PowerSeries::from_real(vec![int(1); 4], 2).is_err());
        assert_eq!(
            PowerSeries::with_signed_order(vec![], -1),
            Err(QError::NegativeOrder(-1))
        );
    }

    #[test]
    fn ring_examples() {
        let a = poly(&[(1, 1), (1, 1)], 4);
        let b = poly(&[(1, 1), (-1, 1)], 4);
        assert_eq!(&a * &b, poly(&[(1, 1), (0, 1), (-1, 1)], 4));
        assert_eq!(&a + &PowerSeries::zero(4), a);
        let e = poly(&[(1, 1), (1, 1), (1, 2)], 2);
        let e_inv = poly(&[(1, 1), (-1, 1), (1, 2)], 2);
        assert_eq!(&e * &e_inv, PowerSeries::one(2));
    }

    #[test]
    fn mul_truncates_to_smaller_order() {
        let a = poly(&[(1, 1), (2, 1)], 5);
        let b = poly(&[(3, 1)], 2);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!((&a + &b).order(), 2);
    }

    #[test]
    fn division() {
        let a = poly(&[(2, 1), (0, 1), (5, 3)], 5);
        assert_eq!(a.try_div(&PowerSeries::one(5)).unwrap(), a);
        let geo = PowerSeries::one(3)
            .try_div(&poly(&[(1, 1), (-1, 1)], 3))
            .unwrap();
        assert_eq!(geo, poly(&[(1, 1), (1, 1), (1, 1), (1, 1)], 3));
        let q = poly(&[(1, 1), (0, 1), (-1, 1)], 3)
            .try_div(&poly(&[(1, 1), (-1, 1)], 3))
            .unwrap();
        assert_eq!(q, poly(&[(1, 1), (1, 1)], 3));
        assert_eq!(
            a.try_div(&PowerSeries::x(5)),
            Err(QError::NonInvertibleDivisor)
        );
    }

    #[test]
    fn argument_scaling() {
        let x2 = poly(&[(0, 1), (0, 1), (1, 1)], 3);
        assert_eq!(
            x2.scale_arg_real(&rat(3, 2)),
            poly(&[(0, 1), (0, 1), (9, 4)], 3)
        );
        let a = poly(&[(1, 1), (-2, 3), (5, 7), (1, 9)], 3);
        assert_eq!(a.scale_arg_real(&int(1)), a);
        assert_eq!(a.scale_arg_real(&rat(3, 2)).scale_arg_real(&rat(2, 3)), a);
    }

    #[test]
    fn i_rotation() {
        let c = poly(&[(7, 3)], 4);
        assert_eq!(c.i_rotate(), c);
        let x2 = poly(&[(0, 1), (0, 1), (1, 1)], 2);
        assert_eq!(x2.i_rotate(), -&x2);
        let even = poly(&[(1, 1), (0, 1), (1, 1), (0, 1), (1, 1)], 4);
        assert_eq!(
            even.i_rotate(),
            poly(&[(1, 1), (0, 1), (-1, 1), (0, 1), (1, 1)], 4)
        );
        let a = poly(&[(1, 1), (2, 1), (3, 1), (4, 1), (5, 1)], 4);
        assert_eq!(a.i_rotate().i_rotate().i_rotate().i_rotate(), a);
        assert_eq!(*PowerSeries::x(2).i_rotate().coeff(1), imag_unit());
    }

    #[test]
    fn jackson_derivative() {
        let two = Deformation::from_ratio(2, 1);
        let x3 = poly(&[(0, 1), (0, 1), (0, 1), (1, 1)], 3);
        let d = x3.jackson_derivative(&two);
        assert_eq!(d.order(), 2);
        assert_eq!(d, poly(&[(0, 1), (0, 1), (21, 4)], 2));
        assert!(poly(&[(4, 1)], 3).jackson_derivative(&two).is_zero());
        let p = poly(&[(1, 1), (1, 1), (1, 1)], 2);
        assert_eq!(p.derivative(), poly(&[(1, 1), (2, 1)], 1));
    }

    #[test]
    fn evaluation() {
        let a = poly(&[(3, 1), (5, 1), (-7, 2)], 2);
        assert_eq!(a.evaluate(&real(int(0))), real(int(3)));
        let s = poly(&[(1, 1), (0, 1), (-1, 2)], 2);
        assert_eq!(s.evaluate(&real(int(1))), real(rat(1, 2)));
        assert!((s.evaluate_float(1.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn truncated_q_exponential_at_one_half() {
        // Independent summation with the q-factorials built by hand.
        let d = Deformation::from_ratio(3, 2);
        let mut fact = int(1);
        let mut expected = int(0);
        let mut coeffs = Vec::new();
        for n in 0..=8i64 {
            if n > 0 {
                fact *= (d.power(n) - d.power(-n)) / (d.power(1) - d.power(-1));
            }
            coeffs.push(fact.recip());
            expected += fact.recip() * rat(1, 2).pow(n as i32);
        }
        let e = PowerSeries::from_real(coeffs, 8).unwrap();
        assert_eq!(e.evaluate(&real(rat(1, 2))), real(expected));
    }

    #[test]
    fn zero_series_equality() {
        let z = poly(&[(0, 1), (0, 1)], 3);
        assert_eq!(z, PowerSeries::zero(3));
        assert!(z.is_zero());
    }

    #[test]
    fn shift_and_agreement() {
        let a = poly(&[(1, 1), (2, 1)], 2);
        let s = a.shift_up(2);
        assert_eq!(s.order(), 4);
        assert_eq!(s, poly(&[(0, 1), (0, 1), (1, 1), (2, 1)], 4));
        assert!(a.agrees_with(&a.extend_polynomial(6)));
        assert_eq!(a.first_disagreement(&poly(&[(1, 1), (3, 1)], 5)), Some(1));
        assert_eq!(poly(&[(1, 1), (-9, 2)], 1).max_abs_coeff(), rat(9, 2));
    }
}
