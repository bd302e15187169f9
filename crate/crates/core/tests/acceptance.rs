//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Every scale and tolerance is pinned here.

use std::process::ExitCode;
use std::time::Instant;

use rootpoly::onevar::limit_ultra_to_bessel;
use rootpoly::par::Exec;
use rootpoly::verify::{self, CheckOutcome, OrthoFamilies};

const EXEC: Exec = Exec::Parallel;

/// Ultraspherical-to-Bessel gap at N = 200, λ = 1, x = 1.
/// Oracle (N up to 10^5): gap ≈ 0.301/N for k = 1 and 0.372/N for k = 2,
/// i.e. 1.505e-3 and 1.860e-3 at N = 200. Frozen below.
const LIMIT_N: u32 = 200;
const LIMIT_TOL: [(u32, f64); 3] = [(0, 1e-3), (1, 2e-3), (2, 2.5e-3)];

fn report(id: usize, title: &str, outcome: &CheckOutcome) -> bool {
    println!(
        "{} [{id:>2}] {title}: {} ({:.2}s)",
        if outcome.passed { "PASS" } else { "FAIL" },
        outcome.summary,
        outcome.seconds
    );
    outcome.passed
}

fn numeric_limits() -> CheckOutcome {
    let start = Instant::now();
    let mut passed = true;
    let mut parts = Vec::new();
    for (k, tol) in LIMIT_TOL {
        match limit_ultra_to_bessel(k, 1.0, 1.0, LIMIT_N) {
            Ok(row) => {
                passed &= row.gap < tol;
                parts.push(format!("k={k} gap={:.3e} < {tol:e}", row.gap));
            }
            Err(e) => {
                passed = false;
                parts.push(format!("k={k} error {e}"));
            }
        }
    }
    let zero = limit_ultra_to_bessel(1, 1.0, 0.0, LIMIT_N).map(|r| r.gap);
    passed &= zero.as_ref().is_ok_and(|g| *g < 1e-15);
    parts.push(format!("x=0 gap={zero:?}"));
    CheckOutcome {
        name: "numeric_limits",
        passed,
        summary: parts.join("; "),
        seconds: start.elapsed().as_secs_f64(),
        detail: serde_json::Value::Null,
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut all = true;

    all &= report(1, "root-system axioms, rank <= 4", &verify::check_root_axioms(4));
    all &= report(
        2,
        "rational Dunkl commutators, degree <= 6, rank <= 3, k in {0,1,2}",
        &verify::check_rational_commutators(3, 6, &[0, 1, 2], EXEC),
    );
    all &= report(
        3,
        "Cherednik commutators on |coords| <= 3 (A2, B2, C2), Heckman witness",
        &verify::check_cherednik(&["A2", "B2", "C2"], 3, &[0, 1, 2], EXEC),
    );

    let families: Vec<OrthoFamilies> = match verify::ortho_configs()
        .iter()
        .map(|c| verify::orthogonality_families(c, 6, EXEC))
        .collect()
    {
        Ok(f) => f,
        Err(e) => {
            println!("FAIL [ 4] orthogonality: error {e}");
            println!("FAIL [ 5] eigen-equation: no polynomials");
            println!("FAIL [ 7] q -> 1 limits: no polynomials");
            return ExitCode::FAILURE;
        }
    };
    all &= report(
        4,
        "full orthogonality, height <= 6, C2 k in {1,2,(1,2)}, A2 k in {1,2}, both families",
        &verify::check_orthogonality(&families),
    );
    all &= report(5, "eigen-equation for every Jacobi polynomial", &verify::check_eigen_equation(&families, EXEC));
    all &= report(
        6,
        "symmetrized Heckman joint eigenfunctions, C2 k=(1,1) j in {1,2}",
        &verify::check_symmetrized_heckman(EXEC),
    );
    all &= report(7, "Macdonald -> Jacobi and q-ultraspherical limits", &verify::check_q_limits(&families));
    all &= report(8, "A1 q-difference eigenvalues, n <= 8, k <= 2", &verify::check_qdiff(8, 2));
    all &= report(9, "one-variable Dunkl tower to order 30, k <= 3", &verify::check_tower(30, 3));
    all &= report(10, "shift operators, n <= 6, k <= 3, adjointness degree <= 6", &verify::check_shift(6, 3, 6));

    let tables = verify::check_norm_tables(3, EXEC);
    let anchored = tables.summary.contains("<P,P>=2 CT=2 ratio=1");
    let tables = CheckOutcome {
        passed: tables.passed && anchored,
        ..tables
    };
    all &= report(11, "CT and norm-ratio tables, A1 A2 B2 C2, k <= 2", &tables);

    all &= report(12, "ultraspherical -> Bessel at N = 200, λ = 1, x = 1", &numeric_limits());

    // The pinned constants agree with the ones the CLI gate uses.
    if LIMIT_TOL != verify::NUMERIC_LIMIT_TOLERANCES {
        println!("FAIL tolerance tables diverge between the acceptance run and the verify gate");
        all = false;
    }

    println!("total {:.1}s", start.elapsed().as_secs_f64());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
