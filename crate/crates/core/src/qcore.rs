//! Exact scalars and the symmetric q-number layer.
//!
//! Every quantity downstream is built from [`Rational`] (arbitrary precision,
//! always in lowest terms) and its Gaussian extension [`GaussRational`]. The
//! deformation parameter is an exact positive rational, so all identities in
//! this crate are checked with exact equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{QError, Result};

/// Arbitrary precision rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// `re + i·im` with exact rational parts.
pub type GaussRational = Complex<Rational>;

/// Shorthand for the rational `num/den`.
///
/// # Panics
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Embeds a rational on the real axis.
pub fn real(x: Rational) -> GaussRational {
    Complex::new(x, Rational::zero())
}

/// The imaginary unit.
pub fn imag_unit() -> GaussRational {
    Complex::new(Rational::zero(), Rational::one())
}

/// `i^k` for any integer `k`.
pub fn i_pow(k: i64) -> GaussRational {
    match k.rem_euclid(4) {
        0 => real(int(1)),
        1 => imag_unit(),
        2 => real(int(-1)),
        _ => -imag_unit(),
    }
}

pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"p/q"`, `"p"` or a plain decimal such as `"-1.25"` into an exact
/// rational. Decimals are never routed through floating point.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let err = || QError::ParseRational(s.to_string());
    if t.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = t.split_once('/') {
        let numer = BigInt::from_str(p.trim()).map_err(|_| err())?;
        let denom = BigInt::from_str(q.trim()).map_err(|_| err())?;
        if denom.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(numer, denom));
    }
    let (neg, body) = match t.as_bytes()[0] {
        b'-' => (true, &t[1..]),
        b'+' => (false, &t[1..]),
        _ => (false, t),
    };
    let (whole, frac) = match body.split_once('.') {
        Some((w, f)) => (w, f),
        None => (body, ""),
    };
    if (whole.is_empty() && frac.is_empty())
        || !whole.bytes().all(|b| b.is_ascii_digit())
        || !frac.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(err());
    }
    let digits = format!("{whole}{frac}");
    let numer = BigInt::from_str(&digits).map_err(|_| err())?;
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    let r = Rational::new(numer, denom);
    Ok(if neg { -r } else { r })
}

/// Formats as `"p/q"`, or `"p"` for integers.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// The deformation parameter `q > 0`.
///
/// `q` and `1/q` generate the same q-numbers. `q = 1` is allowed and selects
/// the classical branch explicitly rather than through a limit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Deformation {
    q: Rational,
}

impl Deformation {
    pub fn new(q: Rational) -> Result<Self> {
        if !q.is_positive() {
            return Err(QError::NonPositiveDeformation(q));
        }
        Ok(Self { q })
    }

    /// `q = num/den`.
    ///
    /// # Panics
    ///
    /// Panics if the ratio is not positive.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(rat(num, den)).expect("deformation must be positive")
    }

    /// The undeformed case `q = 1`.
    pub fn classical() -> Self {
        Self { q: Rational::one() }
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn q_inv(&self) -> Rational {
        self.q.recip()
    }

    /// The deformation `1/q`.
    pub fn inverse(&self) -> Self {
        Self { q: self.q_inv() }
    }

    pub fn is_classical(&self) -> bool {
        self.q.is_one()
    }

    /// `q^k` for any integer `k`.
    pub fn power(&self, k: i64) -> Rational {
        let k = i32::try_from(k).expect("exponent out of range");
        self.q.pow(k)
    }

    /// `q - 1/q`, zero in the classical case.
    pub fn spread(&self) -> Rational {
        &self.q - self.q_inv()
    }

    pub fn number(&self, n: i64) -> Rational {
        q_number(n, self)
    }

    pub fn factorial(&self, n: i64) -> Result<Rational> {
        q_factorial(n, self)
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.q)
    }
}

impl fmt::Display for Deformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// Symmetric q-number `[n]_q = (q^n - q^-n) / (q - q^-1)`, equal to `n` at
/// `q = 1`.
pub fn q_number(n: i64, d: &Deformation) -> Rational {
    if d.is_classical() {
        return int(n);
    }
    (d.power(n) - d.power(-n)) / d.spread()
}

/// `[1]_q [2]_q ... [n]_q`, with the empty product equal to one.
pub fn q_factorial(n: i64, d: &Deformation) -> Result<Rational> {
    if n < 0 {
        return Err(QError::NegativeFactorial(n));
    }
    Ok((1..=n).fold(Rational::one(), |acc, k| acc * q_number(k, d)))
}

/// The table `[0]_q!, [1]_q!, ..., [n]_q!`.
pub fn q_factorials(n: usize, d: &Deformation) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = Rational::one();
    out.push(acc.clone());
    for k in 1..=n as i64 {
        acc *= q_number(k, d);
        out.push(acc.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_number_small_cases() {
        let two = Deformation::from_ratio(2, 1);
        for q in [rat(2, 1), rat(3, 2), rat(7, 5), int(1)] {
            let d = Deformation::new(q).unwrap();
            assert_eq!(d.number(0), int(0));
            assert_eq!(d.number(1), int(1));
        }
        assert_eq!(two.number(2), rat(5, 2));
        assert_eq!(two.number(3), rat(21, 4));
        assert_eq!(Deformation::from_ratio(1, 2).number(2), rat(5, 2));
    }

    #[test]
    fn q_number_is_odd_in_n() {
        let d = Deformation::from_ratio(5, 4);
        for n in 0..8 {
            assert_eq!(d.number(-n), -d.number(n));
        }
    }

    #[test]
    fn q_factorial_values() {
        assert_eq!(
            q_factorial(0, &Deformation::from_ratio(2, 1)).unwrap(),
            int(1)
        );
        assert_eq!(
            q_factorial(3, &Deformation::from_ratio(2, 1)).unwrap(),
            rat(105, 8)
        );
        assert_eq!(q_factorial(3, &Deformation::classical()).unwrap(), int(6));
        assert_eq!(
            q_factorial(-1, &Deformation::classical()),
            Err(QError::NegativeFactorial(-1))
        );
        let table = q_factorials(5, &Deformation::from_ratio(3, 2));
        for (n, f) in table.iter().enumerate() {
            assert_eq!(
                *f,
                q_factorial(n as i64, &Deformation::from_ratio(3, 2)).unwrap()
            );
        }
    }

    #[test]
    fn doubling_identity() {
        for d in [Deformation::from_ratio(2, 1), Deformation::from_ratio(3, 7)] {
            for n in 1..10 {
                let lhs = d.number(2 * n) / d.number(n);
                assert_eq!(lhs, d.power(n) + d.power(-n));
            }
        }
    }

    #[test]
    fn rejects_non_positive_q() {
        assert!(Deformation::new(int(0)).is_err());
        assert!(Deformation::new(rat(-1, 2)).is_err());
    }

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("1.5").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        for bad in ["", "abc", "1.2.3", "1/0x", "1/0", "-", "."] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn formats_integers_without_denominator() {
        assert_eq!(format_rational(&int(4)), "4");
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
    }

    #[test]
    fn powers_of_i() {
        assert_eq!(i_pow(2), real(int(-1)));
        assert_eq!(i_pow(-2), real(int(-1)));
        assert_eq!(i_pow(-1), -imag_unit());
        assert_eq!(i_pow(4), real(int(1)));
        assert_eq!(imag_unit() * imag_unit(), real(int(-1)));
    }
}
