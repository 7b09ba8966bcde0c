//! Sweeps toward the undeformed limit `q -> 1`.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::qcore::{format_rational, int, to_f64, Deformation, Rational};
use crate::qspecial::{beta_q, delta_beta_q, VacuumSpec};
use crate::series::PowerSeries;

use super::QOperator;

/// Deviation of a deformed quantity from its `q = 1` counterpart.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitRow {
    pub q: Rational,
    pub deviation: Rational,
}

impl LimitRow {
    pub fn deviation_f64(&self) -> f64 {
        to_f64(&self.deviation)
    }
}

#[derive(Serialize)]
struct LimitRecord {
    q: String,
    deviation: String,
    deviation_float: f64,
}

impl From<&LimitRow> for LimitRecord {
    fn from(r: &LimitRow) -> Self {
        Self {
            q: format_rational(&r.q),
            deviation: format_rational(&r.deviation),
            deviation_float: r.deviation_f64(),
        }
    }
}

/// Writes rows as CSV with columns `q,deviation,deviation_float`.
pub fn write_limit_csv<W: std::io::Write>(rows: &[LimitRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record(["q", "deviation", "deviation_float"])?;
    }
    for r in rows {
        w.serialize(LimitRecord::from(r))?;
    }
    w.flush()?;
    Ok(())
}

/// Applies `builder(q)` to `probe` for every `q` and reports the largest
/// coefficient deviation from `builder(1)` applied to the same probe.
///
/// Rows come back in the order of `qs`; cells are evaluated in parallel.
pub fn limit_sweep<F>(builder: F, qs: &[Rational], probe: &PowerSeries) -> Result<Vec<LimitRow>>
where
    F: Fn(&Deformation) -> QOperator + Sync,
{
    let deformations: Vec<Deformation> = qs
        .iter()
        .cloned()
        .map(Deformation::new)
        .collect::<Result<_>>()?;
    let target = builder(&Deformation::classical()).apply(probe);
    Ok(deformations
        .par_iter()
        .map(|d| {
            let out = builder(d).apply(probe);
            LimitRow {
                q: d.q().clone(),
                deviation: (&out - &target).max_abs_coeff(),
            }
        })
        .collect())
}

/// `q_k = 1 + 2^-k` for `k = 1..=k_max`.
pub fn dyadic_approach(k_max: u32) -> Vec<Rational> {
    (1..=k_max)
        .map(|k| Rational::one() + Rational::new(1.into(), num_traits::pow(2.into(), k as usize)))
        .collect()
}

/// `values[i+1] / values[i]`; a zero denominator yields zero.
pub fn successive_ratios(values: &[Rational]) -> Vec<Rational> {
    values
        .windows(2)
        .map(|w| {
            if w[0].is_zero() {
                Rational::zero()
            } else {
                &w[1] / &w[0]
            }
        })
        .collect()
}

/// `|β_q(0) - 2β|` along `qs`.
pub fn beta_origin_deviation(beta: &Rational, qs: &[Rational]) -> Result<Vec<LimitRow>> {
    qs.iter()
        .map(|q| {
            let v = VacuumSpec::new(beta.clone(), Deformation::new(q.clone())?, 0)?;
            let b0 = beta_q(&v).re(0).clone();
            Ok(LimitRow {
                q: q.clone(),
                deviation: (b0 - beta * int(2)).abs(),
            })
        })
        .collect()
}

/// Largest coefficient of `Δβ_q` along `qs`; the series vanishes at `q = 1`.
pub fn drift_deviation(beta: &Rational, qs: &[Rational], order: usize) -> Result<Vec<LimitRow>> {
    qs.iter()
        .map(|q| {
            let v = VacuumSpec::new(beta.clone(), Deformation::new(q.clone())?, order)?;
            Ok(LimitRow {
                q: q.clone(),
                deviation: delta_beta_q(&v).max_abs_coeff(),
            })
        })
        .collect()
}
