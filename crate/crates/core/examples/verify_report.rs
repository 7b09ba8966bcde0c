//! Runs the identity suites on a small grid and prints a JSON report.
use qsusy::qcore::Deformation;
use qsusy::verify::{
    classical_suite, default_cells, factorization_suite, kernel_suite, leibniz_suite, Report,
};

fn main() {
    let cells = default_cells(16);
    let mut checks = kernel_suite(&cells);
    checks.extend(factorization_suite(&cells));
    checks.extend(leibniz_suite(&[Deformation::from_ratio(3, 2)], 20, 1));
    checks.extend(classical_suite(6, 16));
    let report = Report::new(checks);
    println!(
        "{} checks, all pass: {}",
        report.checks.len(),
        report.all_pass()
    );
    let first = Report::new(report.checks[..3].to_vec());
    println!("{}", first.to_json());
}
