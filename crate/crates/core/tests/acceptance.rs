//! Acceptance suite: one PASS/FAIL line per criterion, with elapsed time
//! against its budget. Runs without the libtest harness so the report is
//! always printed; the process exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use permlip::asymptotics::{relative_error, AsymptoticEstimate, DEFAULT_TOLERANCE};
use permlip::enumerator::catalan;
use permlip::genfunc::{fit_recurrence, gf_a, gf_a_from_b, IntPolynomial};
use permlip::m2::{a_count, a_counts, a_counts_via_recurrence, A_RECURRENCE};
use permlip::probe::{build_profile, monotonicity_check};
use permlip::verify::{run_suite, Suite};
use permlip::{BigCount, BruteForce, ConstraintSpec};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn spec(m: u32) -> ConstraintSpec {
    ConstraintSpec::new(m).expect("m >= 1")
}

fn big(c: &BigCount) -> BigInt {
    BigInt::from(c.0.clone())
}

fn initial_values(bf: &BruteForce) -> Outcome {
    let got: Vec<BigCount> = (1..=6)
        .map(|n| bf.count(n, spec(2)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let want = [1u64, 2, 5, 8, 12, 18].map(BigCount::from);
    ensure!(got == want, "got {got:?}");
    Ok("A_1..A_6 = 1, 2, 5, 8, 12, 18".into())
}

fn recurrence_validity(bf: &BruteForce) -> Outcome {
    let oracle: Vec<BigInt> = (1..=14)
        .map(|n| bf.count(n, spec(2)).map(|c| big(&c)))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    for n in 7..=14 {
        let predicted: BigInt = A_RECURRENCE
            .iter()
            .enumerate()
            .map(|(i, &c)| BigInt::from(c) * &oracle[n - 2 - i])
            .sum();
        ensure!(predicted == oracle[n - 1], "recurrence fails at n={n}");
    }
    let n_max = 1000;
    let closed = a_counts(n_max);
    let recurrence = a_counts_via_recurrence(n_max);
    let series = gf_a().series_coeffs(n_max + 1).map_err(|e| e.to_string())?;
    for n in 1..=n_max {
        let c = big(&closed[n - 1]);
        ensure!(
            c == big(&recurrence[n - 1]) && c == series[n],
            "engines disagree at n={n}"
        );
    }
    Ok(format!(
        "oracle 7..=14 and three engines agree on 1..={n_max}"
    ))
}

fn positional_theorem(bf: &BruteForce) -> Outcome {
    let mut checks = 0;
    for m in 1..=4 {
        let report = run_suite(Suite::MaxPosition, 10, Some(m), bf).map_err(|e| e.to_string())?;
        ensure!(report.passed(), "{report}");
        checks += report.checks;
    }
    Ok(format!("n <= 10, m in 1..=4, {checks} checks"))
}

fn structural_suite(bf: &BruteForce) -> Outcome {
    let mut checks = 0;
    for suite in [
        Suite::DClass,
        Suite::CBijection,
        Suite::BRecurrence,
        Suite::Split,
    ] {
        let report = run_suite(suite, 12, None, bf).map_err(|e| e.to_string())?;
        ensure!(report.passed(), "{report}");
        checks += report.checks;
    }
    Ok(format!(
        "D/C/B subclasses and split totals for n <= 12, {checks} checks"
    ))
}

fn gf_identities(_: &BruteForce) -> Outcome {
    let a = gf_a();
    ensure!(a.is_coprime(), "gf_A not in lowest terms");
    ensure!(
        gf_a_from_b() == a,
        "(1+x^2) B + x^2/(1-x)^2 = {:?}",
        gf_a_from_b()
    );
    let expanded = IntPolynomial::from_i64(&[1, -3, 3, -2, 2, -1]);
    ensure!(
        a.denominator() == &expanded,
        "denominator {}",
        a.denominator()
    );
    Ok(format!(
        "A(x) = ({}) / ({})",
        a.numerator(),
        a.denominator()
    ))
}

fn asymptotics(_: &BruteForce) -> Outcome {
    let est = AsymptoticEstimate::compute(DEFAULT_TOLERANCE).map_err(|e| e.to_string())?;
    ensure!(
        format!("{:.10}", est.rho) == "0.6823278038",
        "rho = {}",
        est.rho
    );
    ensure!(
        format!("{:.10}", est.amplitude) == "1.5076770639",
        "C = {}",
        est.amplitude
    );
    let a = est.alpha;
    ensure!((a.powi(3) - a.powi(2) - 1.0).abs() < 1e-10, "alpha = {a}");
    let err = |n| a_count(n).map(|c| relative_error(c.as_biguint(), n, &est));
    let (e60, e100) = (
        err(60).map_err(|e| e.to_string())?,
        err(100).map_err(|e| e.to_string())?,
    );
    ensure!(e60 < 1e-3, "relative error {e60:e} at n=60");
    ensure!(e100 < 1e-6, "relative error {e100:e} at n=100");
    Ok(format!(
        "rho={:.10} C={:.10}; rel err {e60:.1e} @60, {e100:.1e} @100",
        est.rho, est.amplitude
    ))
}

fn fitter_recovery(_: &BruteForce) -> Outcome {
    let terms: Vec<BigInt> = a_counts(20).iter().map(big).collect();
    let rec = fit_recurrence(&terms, 6, 6)
        .map_err(|e| e.to_string())?
        .ok_or("no recurrence found for A_n^(2)")?;
    let coeffs: Vec<i64> = rec
        .integer_coefficients()
        .ok_or("non-integer coefficients")?
        .iter()
        .map(|c| c.to_i64().unwrap_or(i64::MAX))
        .collect();
    ensure!(
        rec.order() == 5 && coeffs == A_RECURRENCE,
        "fitted {coeffs:?}"
    );
    let catalans: Vec<BigInt> = (1..=16).map(|n| big(&catalan(n))).collect();
    let found = fit_recurrence(&catalans, 5, 4).map_err(|e| e.to_string())?;
    ensure!(
        found.is_none(),
        "spurious recurrence for Catalan numbers: {found:?}"
    );
    Ok(format!(
        "order 5 {coeffs:?} from n = {}; Catalan: not found",
        rec.valid_from()
    ))
}

fn extremal_regimes(bf: &BruteForce) -> Outcome {
    for n in 2..=12 {
        let c = bf.count(n, spec(1)).map_err(|e| e.to_string())?;
        ensure!(c == 2, "A_{n}^(1) = {c}");
    }
    for n in 1..=10 {
        for m in (n as u32).saturating_sub(1).max(1)..=n as u32 + 1 {
            let c = bf.count(n, spec(m)).map_err(|e| e.to_string())?;
            ensure!(c == catalan(n), "A_{n}^({m}) = {c} != C_{n}");
        }
    }
    Ok("m = 1 constant 2; m >= n - 1 Catalan".into())
}

fn conjecture_probe(bf: &BruteForce) -> Outcome {
    let profiles = [2, 3]
        .map(|m| build_profile(m, 14, bf))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let report = monotonicity_check(&profiles).map_err(|e| e.to_string())?;
    ensure!(report.facts_hold(), "{report:?}");
    for (i, t3) in profiles[1].terms.iter().enumerate() {
        ensure!(
            *t3 <= catalan(i + 1),
            "A_{}^(3) = {t3} exceeds Catalan",
            i + 1
        );
    }
    // exact growth constant for m = 2; the probe's own estimate is a cross-check
    let a2 = AsymptoticEstimate::compute(DEFAULT_TOLERANCE)
        .map_err(|e| e.to_string())?
        .alpha;
    let fitted2 = profiles[0].alpha_estimate.ok_or("no alpha_2 estimate")?;
    ensure!(
        (fitted2 - a2).abs() < 1e-6,
        "probe alpha_2 {fitted2} != {a2}"
    );
    let observation = match profiles[1].alpha_estimate {
        Some(a3) => format!(
            "observed alpha_3 ~ {a3:.4} ({}{}), {} (alpha_2, 4) = ({a2:.4}, 4)",
            serde_json::to_value(profiles[1].method)
                .map_err(|e| e.to_string())?
                .as_str()
                .unwrap_or("?"),
            if profiles[1].low_confidence {
                ", low confidence"
            } else {
                ""
            },
            if a2 < a3 && a3 < 4.0 {
                "inside"
            } else {
                "OUTSIDE"
            },
        ),
        None => "alpha_3 not estimated".into(),
    };
    Ok(format!(
        "A^(2) <= A^(3) <= Catalan for n <= 14; {observation}"
    ))
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn(&BruteForce) -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            id: 1,
            name: "initial values",
            budget: secs(1),
            run: initial_values,
        },
        Criterion {
            id: 2,
            name: "recurrence validity",
            budget: secs(5),
            run: recurrence_validity,
        },
        Criterion {
            id: 3,
            name: "positional theorem",
            budget: secs(60),
            run: positional_theorem,
        },
        Criterion {
            id: 4,
            name: "structural suite",
            budget: secs(60),
            run: structural_suite,
        },
        Criterion {
            id: 5,
            name: "generating-function identities",
            budget: secs(1),
            run: gf_identities,
        },
        Criterion {
            id: 6,
            name: "asymptotics",
            budget: secs(1),
            run: asymptotics,
        },
        Criterion {
            id: 7,
            name: "fitter recovery",
            budget: secs(5),
            run: fitter_recovery,
        },
        Criterion {
            id: 8,
            name: "extremal regimes",
            budget: secs(30),
            run: extremal_regimes,
        },
        Criterion {
            id: 9,
            name: "conjecture probe",
            budget: secs(120),
            run: conjecture_probe,
        },
    ];
    let bf = BruteForce::default();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| (c.run)(&bf)))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > c.budget => {
                Err(format!("took {elapsed:.2?}, budget {:?}", c.budget))
            }
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += usize::from(outcome.is_err());
        println!(
            "{tag} criterion {}: {} [{elapsed:.2?}] {detail}",
            c.id, c.name
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
