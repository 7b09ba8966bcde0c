//! Linear operators on truncated series and on pointwise evaluators.
//!
//! A [`QOperator`] carries two views of the same map: an exact action on
//! [`PowerSeries`] and a floating-point action on functions `f64 -> f64`
//! evaluated at a single point. The series view is exact near the origin;
//! the pointwise view realizes q-nonlocality literally through calls to
//! `f(qx)` and `f(x/q)`. Cross-checking the two is how the operator
//! definitions are validated away from `x = 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::qcore::{to_f64, Deformation, Rational};
use crate::series::PowerSeries;

pub mod classical;
pub mod deformed;
pub mod generalized;
pub mod limit;

pub use classical::{
    classical_darboux, classical_darboux_conjugate, classical_hermite_op, classical_schrodinger_op,
    darboux_potential_difference, susy_pair_limit,
};
pub use deformed::{
    drift_coefficient, second_order_composed, second_order_direct, t_minus_q, t_plus_q, Partner,
};
pub use generalized::{t_generalized, FactorizationPair, Sign};
pub use limit::{
    beta_origin_deviation, drift_deviation, dyadic_approach, limit_sweep, successive_ratios,
    write_limit_csv, LimitRow,
};

/// Real function of one variable, shared between operator closures.
pub type PointFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

type SeriesMap = Arc<dyn Fn(&PowerSeries) -> PowerSeries + Send + Sync>;
type PointMap = Arc<dyn Fn(&dyn Fn(f64) -> f64, f64) -> f64 + Send + Sync>;

/// A multiplicative coefficient function known both as a series and
/// pointwise.
#[derive(Clone)]
pub struct Coefficient {
    pub series: PowerSeries,
    pub point: PointFn,
}

impl Coefficient {
    pub fn new(series: PowerSeries, point: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            series,
            point: Arc::new(point),
        }
    }

    /// Pointwise view taken from the truncated series itself.
    pub fn from_series(series: PowerSeries) -> Self {
        let s = series.clone();
        Self::new(series, move |x| s.evaluate_float(x))
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Coefficient")
            .field("series", &self.series)
            .finish_non_exhaustive()
    }
}

/// Symmetric q-difference quotient of `f` at `x`. At `q = 1`, or at `x = 0`
/// where the quotient degenerates, a five-point central difference stands in
/// for the derivative.
pub fn point_jackson(f: &dyn Fn(f64) -> f64, q: f64, x: f64) -> f64 {
    if q == 1.0 || x == 0.0 {
        let h = 1e-3 * x.abs().max(1.0);
        return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
    }
    (f(q * x) - f(x / q)) / (x * (q - 1.0 / q))
}

/// A linear map with an exact series action and a pointwise action.
#[derive(Clone)]
pub struct QOperator {
    label: String,
    series: SeriesMap,
    point: PointMap,
    order_drop: usize,
}

impl QOperator {
    pub fn new(
        label: impl Into<String>,
        order_drop: usize,
        series: impl Fn(&PowerSeries) -> PowerSeries + Send + Sync + 'static,
        point: impl Fn(&dyn Fn(f64) -> f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            series: Arc::new(series),
            point: Arc::new(point),
            order_drop,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Number of trailing coefficients the action can invalidate.
    pub fn order_drop(&self) -> usize {
        self.order_drop
    }

    pub fn apply(&self, f: &PowerSeries) -> PowerSeries {
        (self.series)(f)
    }

    pub fn apply_point(&self, f: &dyn Fn(f64) -> f64, x: f64) -> f64 {
        (self.point)(f, x)
    }

    /// Pointwise action on the polynomial held by a truncated series.
    pub fn apply_point_series(&self, f: &PowerSeries, x: f64) -> f64 {
        self.apply_point(&|y| f.evaluate_float(y), x)
    }

    pub fn identity() -> Self {
        Self::new("I", 0, PowerSeries::clone, |f, x| f(x))
    }

    pub fn zero() -> Self {
        Self::new("0", 0, |f| PowerSeries::zero(f.order()), |_, _| 0.0)
    }

    /// The Jackson derivative `D_q` (the ordinary derivative at `q = 1`).
    pub fn jackson(d: &Deformation) -> Self {
        let dd = d.clone();
        let q = d.to_f64();
        let label = if d.is_classical() {
            "D".to_string()
        } else {
            format!("D_q[q={d}]")
        };
        Self::new(
            label,
            1,
            move |f| f.jackson_derivative(&dd),
            move |f, x| point_jackson(f, q, x),
        )
    }

    pub fn derivative() -> Self {
        Self::jackson(&Deformation::classical())
    }

    /// Multiplication by a coefficient function acting at `x`.
    pub fn multiply(label: impl Into<String>, c: Coefficient) -> Self {
        let Coefficient { series, point } = c;
        Self::new(label, 0, move |f| &series * f, move |f, x| point(x) * f(x))
    }

    /// Multiplication by a coefficient function against the q-shifted
    /// argument: `f ↦ c(x) · f(qx)`.
    pub fn multiply_shifted(label: impl Into<String>, c: Coefficient, d: &Deformation) -> Self {
        let Coefficient { series, point } = c;
        let q_exact = d.q().clone();
        let q = d.to_f64();
        Self::new(
            label,
            0,
            move |f| &series * &f.scale_arg_real(&q_exact),
            move |f, x| point(x) * f(q * x),
        )
    }

    /// `f ↦ c·x^k·f`, exact in the series view (the order rises by `k`).
    pub fn multiply_monomial(c: Rational, k: usize) -> Self {
        let cf = to_f64(&c);
        let label = match k {
            0 => format!("{c}"),
            1 => format!("{c}x"),
            _ => format!("{c}x^{k}"),
        };
        Self::new(
            label,
            0,
            move |f| f.shift_up(k).scale_real(&c),
            move |f, x| cf * x.powi(k as i32) * f(x),
        )
    }

    pub fn constant(c: Rational) -> Self {
        Self::multiply_monomial(c, 0)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &QOperator) -> Self {
        let (outer_s, inner_s) = (self.series.clone(), inner.series.clone());
        let (outer_p, inner_p) = (self.point.clone(), inner.point.clone());
        Self::new(
            format!("({})∘({})", self.label, inner.label),
            self.order_drop + inner.order_drop,
            move |f| outer_s(&inner_s(f)),
            move |f, x| outer_p(&|y| inner_p(f, y), x),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let (s, p) = (self.series.clone(), self.point.clone());
        let (c_exact, cf) = (c.clone(), to_f64(c));
        Self::new(
            format!("{c}·({})", self.label),
            self.order_drop,
            move |f| s(f).scale_real(&c_exact),
            move |f, x| cf * p(f, x),
        )
    }

    fn combine(&self, other: &QOperator, sign: f64, op: &str) -> Self {
        let (a_s, b_s) = (self.series.clone(), other.series.clone());
        let (a_p, b_p) = (self.point.clone(), other.point.clone());
        let negate = sign < 0.0;
        Self::new(
            format!("{} {op} {}", self.label, other.label),
            self.order_drop.max(other.order_drop),
            move |f| {
                let (a, b) = (a_s(f), b_s(f));
                if negate {
                    &a - &b
                } else {
                    &a + &b
                }
            },
            move |f, x| a_p(f, x) + sign * b_p(f, x),
        )
    }
}

impl fmt::Debug for QOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QOperator")
            .field("label", &self.label)
            .field("order_drop", &self.order_drop)
            .finish_non_exhaustive()
    }
}

impl Add for &QOperator {
    type Output = QOperator;

    fn add(self, rhs: &QOperator) -> QOperator {
        self.combine(rhs, 1.0, "+")
    }
}

impl Sub for &QOperator {
    type Output = QOperator;

    fn sub(self, rhs: &QOperator) -> QOperator {
        self.combine(rhs, -1.0, "-")
    }
}

/// Operator product, i.e. composition: `(a * b) f = a(b f)`.
impl Mul for &QOperator {
    type Output = QOperator;

    fn mul(self, rhs: &QOperator) -> QOperator {
        self.compose(rhs)
    }
}

impl Neg for &QOperator {
    type Output = QOperator;

    fn neg(self) -> QOperator {
        let (s, p) = (self.series.clone(), self.point.clone());
        QOperator::new(
            format!("-({})", self.label),
            self.order_drop,
            move |f| -s(f),
            move |f, x| -p(f, x),
        )
    }
}
