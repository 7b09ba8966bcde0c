//! Identity suites: each check compares two exact series and records the
//! worst coefficient deviation and the first index where they disagree.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::operators::{
    beta_origin_deviation, classical_hermite_op, classical_schrodinger_op, drift_deviation,
    dyadic_approach, second_order_composed, second_order_direct, successive_ratios,
    susy_pair_limit, t_plus_q, Partner,
};
use crate::qcore::{format_rational, int, rat, real, Deformation, Rational};
use crate::qspecial::{classical_hermite, classical_phi, q_gauss, q_hermite, VacuumSpec};
use crate::series::PowerSeries;

pub const REPORT_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub worst_deviation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_offending_index: Option<usize>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
    pub version: String,
}

impl Report {
    /// Sorted so that parallel evaluation never changes the emitted bytes.
    pub fn new(mut checks: Vec<CheckResult>) -> Self {
        checks.sort();
        Self {
            checks,
            version: REPORT_VERSION.to_string(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Parameter map builder.
pub fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn vacuum_params(v: &VacuumSpec) -> BTreeMap<String, String> {
    params([
        ("beta", format_rational(v.beta())),
        ("q", v.deformation().to_string()),
        ("order", v.order().to_string()),
    ])
}

/// Exact comparison up to the common order.
pub fn compare(
    name: &str,
    params: BTreeMap<String, String>,
    got: &PowerSeries,
    expected: &PowerSeries,
) -> CheckResult {
    let n = got.order().min(expected.order());
    let diff = &got.truncate(n) - &expected.truncate(n);
    let first = diff.first_nonzero();
    CheckResult {
        name: name.to_string(),
        params,
        status: if first.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        worst_deviation: format_rational(&diff.max_abs_coeff()),
        first_offending_index: first,
    }
}

pub fn zero_check(name: &str, params: BTreeMap<String, String>, got: &PowerSeries) -> CheckResult {
    compare(name, params, got, &PowerSeries::zero(got.order()))
}

/// Check on a scalar bound rather than a series.
pub fn bound_check(
    name: &str,
    params: BTreeMap<String, String>,
    deviation: Rational,
    ok: bool,
) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        params,
        status: if ok { Status::Pass } else { Status::Fail },
        worst_deviation: format_rational(&deviation),
        first_offending_index: None,
    }
}

/// The `(q, β)` grid used when no single cell is requested.
pub fn default_cells(order: usize) -> Vec<VacuumSpec> {
    let mut cells = Vec::new();
    for (n, d) in [(2, 1), (3, 2), (5, 4)] {
        for beta in [rat(-1, 2), rat(1, 2)] {
            cells.push(VacuumSpec::new(beta, Deformation::from_ratio(n, d), order).expect("β ≠ 0"));
        }
    }
    cells
}

/// `T₊` annihilates its own vacuum.
pub fn kernel_suite(cells: &[VacuumSpec]) -> Vec<CheckResult> {
    cells
        .par_iter()
        .map(|v| zero_check("kernel", vacuum_params(v), &t_plus_q(v).apply(&q_gauss(v))))
        .collect()
}

/// Generic probe with no special relation to any vacuum.
pub fn ramp_probe(order: usize) -> PowerSeries {
    let coeffs = (0..=order as i64).map(|k| rat(k - 7, k + 1)).collect();
    PowerSeries::from_real(coeffs, order).expect("sized")
}

/// Five-term direct form against the literal compositions.
pub fn factorization_suite(cells: &[VacuumSpec]) -> Vec<CheckResult> {
    cells
        .par_iter()
        .flat_map_iter(|v| {
            let probes = [
                ("ramp", ramp_probe(v.order())),
                (
                    "gauss",
                    q_gauss(
                        &VacuumSpec::new(-v.beta(), v.deformation().clone(), v.order())
                            .expect("β ≠ 0"),
                    ),
                ),
            ];
            let mut out = Vec::new();
            for which in [Partner::B, Partner::F] {
                let composed = second_order_composed(v, which);
                let direct = second_order_direct(v, which);
                for (probe_name, probe) in &probes {
                    let mut p = vacuum_params(v);
                    p.insert("partner".into(), which.to_string());
                    p.insert("probe".into(), probe_name.to_string());
                    out.push(compare(
                        "factorization",
                        p,
                        &direct.apply(probe),
                        &composed.apply(probe),
                    ));
                }
            }
            out
        })
        .collect()
}

/// Random polynomial of degree at most `max_degree` with coefficients in
/// `[-5, 5] ∩ ℚ`, held in a series of the given order.
pub fn random_polynomial<R: Rng>(rng: &mut R, max_degree: usize, order: usize) -> PowerSeries {
    let degree = rng.gen_range(0..=max_degree);
    let coeffs = (0..=degree)
        .map(|_| {
            let den: i64 = rng.gen_range(1..=9);
            let num: i64 = rng.gen_range(-5 * den..=5 * den);
            rat(num, den)
        })
        .collect();
    PowerSeries::from_real(coeffs, order).expect("degree below order")
}

/// `D_q(FG) - (D_q F) G(qx) - F(x/q) D_q G`.
pub fn leibniz_defect(f: &PowerSeries, g: &PowerSeries, d: &Deformation) -> PowerSeries {
    let lhs = (f * g).jackson_derivative(d);
    let right = &(&f.jackson_derivative(d) * &g.scale_arg_real(d.q()))
        + &(&f.scale_arg_real(&d.q_inv()) * &g.jackson_derivative(d));
    &lhs - &right
}

/// q-Leibniz rule on `pairs` random polynomial pairs of degree ≤ 10 per `q`.
pub fn leibniz_suite(qs: &[Deformation], pairs: usize, seed: u64) -> Vec<CheckResult> {
    qs.par_iter()
        .map(|d| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut worst = Rational::zero();
            let mut first = None;
            for _ in 0..pairs {
                let f = random_polynomial(&mut rng, 10, 21);
                let g = random_polynomial(&mut rng, 10, 21);
                let defect = leibniz_defect(&f, &g, d);
                worst = worst.max(defect.max_abs_coeff());
                if first.is_none() {
                    first = defect.first_nonzero();
                }
            }
            CheckResult {
                name: "leibniz".into(),
                params: params([
                    ("q", d.to_string()),
                    ("pairs", pairs.to_string()),
                    ("seed", seed.to_string()),
                ]),
                status: if first.is_none() {
                    Status::Pass
                } else {
                    Status::Fail
                },
                worst_deviation: format_rational(&worst),
                first_offending_index: first,
            }
        })
        .collect()
}

/// Largest monomial degree probed by the undeformed-reduction check.
pub const REDUCTION_MAX_DEGREE: usize = 20;
/// Tolerance on the successive-ratio limit of `β_q(0) - 2β`.
pub const RATIO_TOLERANCE: (i64, i64) = (1, 20);

/// Undeformed reduction at `q = 1` plus the `q -> 1` sweeps.
pub fn limits_suite(betas: &[Rational], order: usize) -> Vec<CheckResult> {
    let order = order.max(REDUCTION_MAX_DEGREE + 2);
    let mut out = Vec::new();
    for beta in betas {
        let v = VacuumSpec::new(beta.clone(), Deformation::classical(), order).expect("β ≠ 0");
        let (h0, h1) = susy_pair_limit(&v);
        for (which, target) in [(Partner::B, &h0), (Partner::F, &h1)] {
            let op = second_order_composed(&v, which);
            for k in 0..=REDUCTION_MAX_DEGREE {
                let mono = PowerSeries::monomial(real(int(1)), k, order);
                let mut p = vacuum_params(&v);
                p.insert("partner".into(), which.to_string());
                p.insert("monomial".into(), k.to_string());
                out.push(compare(
                    "undeformed_reduction",
                    p,
                    &op.apply(&mono),
                    &target.apply(&mono),
                ));
            }
        }

        let qs = dyadic_approach(6);
        let origin = beta_origin_deviation(beta, &qs).expect("positive q");
        let values: Vec<Rational> = origin.iter().map(|r| r.deviation.clone()).collect();
        let ratios = successive_ratios(&values);
        let tol = rat(RATIO_TOLERANCE.0, RATIO_TOLERANCE.1);
        let quarter = rat(1, 4);
        let worst = ratios
            .iter()
            .map(|r| (r - &quarter).abs())
            .max()
            .unwrap_or_else(Rational::zero);
        out.push(bound_check(
            "beta_origin_rate",
            params([("beta", format_rational(beta))]),
            worst.clone(),
            worst <= tol,
        ));

        let drift = drift_deviation(beta, &qs, 16).expect("positive q");
        let at_one = drift_deviation(beta, &[int(1)], 16).expect("positive q");
        let shrinking = drift.windows(2).all(|w| w[1].deviation < w[0].deviation);
        out.push(bound_check(
            "drift_vanishes",
            params([("beta", format_rational(beta))]),
            at_one[0].deviation.clone(),
            shrinking && at_one[0].deviation.is_zero(),
        ));
    }
    out
}

/// Hermite and oscillator kernels, and the Rodrigues form at `q = 1`.
pub fn classical_suite(max_n: usize, order: usize) -> Vec<CheckResult> {
    (0..=max_n)
        .into_par_iter()
        .flat_map_iter(|n| {
            let p = || params([("n", n.to_string()), ("order", order.to_string())]);
            let h = classical_hermite(n).extend_polynomial(order);
            let rodrigues =
                q_hermite(n, &Deformation::classical(), order.max(n + 2)).expect("order checked");
            vec![
                zero_check("hermite_operator", p(), &classical_hermite_op(n).apply(&h)),
                zero_check(
                    "oscillator_operator",
                    p(),
                    &classical_schrodinger_op(n).apply(&classical_phi(n, order)),
                ),
                compare("rodrigues_classical", p(), &rodrigues, &h),
            ]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_small_orders() {
        let cells = default_cells(12);
        assert!(kernel_suite(&cells).iter().all(CheckResult::passed));
        assert!(factorization_suite(&cells[..2])
            .iter()
            .all(CheckResult::passed));
        assert!(leibniz_suite(&[Deformation::from_ratio(2, 1)], 10, 7)
            .iter()
            .all(CheckResult::passed));
        assert!(classical_suite(3, 10).iter().all(CheckResult::passed));
    }

    #[test]
    fn compare_reports_first_offender() {
        let a = PowerSeries::from_real(vec![int(1), int(2), int(3)], 2).unwrap();
        let b = PowerSeries::from_real(vec![int(1), int(5), int(-1)], 4).unwrap();
        let r = compare("x", BTreeMap::new(), &a, &b);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.first_offending_index, Some(1));
        assert_eq!(r.worst_deviation, "4");
    }

    #[test]
    fn leibniz_needs_the_shifts() {
        let d = Deformation::from_ratio(2, 1);
        let f = PowerSeries::from_real(vec![int(0), int(1)], 6).unwrap();
        let g = PowerSeries::from_real(vec![int(0), int(0), int(1)], 6).unwrap();
        assert!(leibniz_defect(&f, &g, &d).is_zero());
        // The undeformed product rule does not survive the deformation.
        let naive = &(&f * &g).jackson_derivative(&d)
            - &(&(&f.jackson_derivative(&d) * &g) + &(&f * &g.jackson_derivative(&d)));
        assert!(!naive.is_zero());
    }

    #[test]
    fn report_is_sorted() {
        let mut checks = kernel_suite(&default_cells(6));
        checks.reverse();
        let report = Report::new(checks);
        let names: Vec<_> = report.checks.iter().map(|c| c.params.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert!(report.to_json().contains("\"version\": \"1\""));
    }
}
