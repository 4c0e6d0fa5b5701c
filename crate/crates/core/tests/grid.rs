//! Every check on every instance of the (d, n) grid, for random and
//! sum-of-squares inverse systems.

use std::time::Instant;

use gorlin::differentials::{build_resolution, build_resolution_via_elementary};
use gorlin::verify::{default_dmax, run_checks, Check};
use gorlin::{random_invsys, InverseSystem};

fn run(phi: &InverseSystem) {
    let (d, n) = (phi.d(), phi.n());
    let t = Instant::now();
    let res = build_resolution(phi).unwrap();
    let built = t.elapsed();
    let report = run_checks(&res, &Check::ALL, default_dmax(d, n));
    eprintln!("d={d} n={n}: build {built:?}, checks {:?}", t.elapsed() - built);
    for c in &report.checks {
        eprintln!("  {} {}", c.name, c.detail);
    }
    assert!(report.passed, "{report}");
}

#[test]
fn random_grid() {
    for d in 3..=5 {
        for n in 2..=3 {
            run(&random_invsys(d, n, 1000 + 10 * d as u64 + n as u64, 5).unwrap());
        }
    }
}

#[test]
fn sum_of_squares_family() {
    for d in 3..=5 {
        run(&InverseSystem::sum_of_powers(d, 2).unwrap());
    }
}

#[test]
fn routes_agree_on_grid() {
    for d in 3..=5 {
        for n in 2..=3 {
            let phi = random_invsys(d, n, 77 + d as u64 * n as u64, 5).unwrap();
            let a = build_resolution(&phi).unwrap();
            let b = build_resolution_via_elementary(&phi).unwrap();
            for r in 1..=d {
                assert_eq!(a.matrix(r), b.matrix(r), "d={d} n={n} r={r}");
            }
        }
    }
}
