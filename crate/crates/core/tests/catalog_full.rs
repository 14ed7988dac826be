use umbral_ops::catalog::{run_all, Status};

#[test]
fn every_registered_identity_passes_at_its_tolerance() {
    let reports = run_all(None, 3, 42, None);
    let mut failures = Vec::new();
    for r in &reports {
        println!(
            "{:32} [{}] lhs={:?} rhs={:?} abs={:?} tol={:.1e} {:?} ({:.2}s)",
            r.id, r.point, r.lhs, r.rhs, r.abs_err, r.tol, r.status, r.elapsed_s
        );
        if r.status == Status::Fail {
            failures.push(format!("{} at [{}] abs_err={:?}", r.id, r.point, r.abs_err));
        }
    }
    assert!(
        reports.iter().filter(|r| r.status == Status::Pass).count() > 100,
        "expected a substantial pass count"
    );
    assert!(failures.is_empty(), "failures:\n{}", failures.join("\n"));
}
