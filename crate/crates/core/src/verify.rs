//! Check suites pitting the structural results against the brute-force
//! enumerator. Each suite stops at the first failed check.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::asymptotics::{convergence_report, AsymptoticEstimate, DEFAULT_TOLERANCE};
use crate::enumerator::BruteForce;
use crate::error::{Error, Result};
use crate::genfunc::{dominant_root, gf_a, gf_a_from_b, m2_recurrence, IntPolynomial};
use crate::m2;
use crate::perm::{ConstraintSpec, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    MaxPosition,
    DClass,
    CBijection,
    BRecurrence,
    Split,
    Gf,
    Asymptotics,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::MaxPosition,
        Suite::DClass,
        Suite::CBijection,
        Suite::BRecurrence,
        Suite::Split,
        Suite::Gf,
        Suite::Asymptotics,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MaxPosition => "max-position",
            Suite::DClass => "d-class",
            Suite::CBijection => "c-bijection",
            Suite::BRecurrence => "b-recurrence",
            Suite::Split => "split",
            Suite::Gf => "gf",
            Suite::Asymptotics => "asymptotics",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: pass ({} checks)", self.suite, self.checks),
            Some(msg) => write!(
                f,
                "{}: FAIL after {} checks: {msg}",
                self.suite, self.checks
            ),
        }
    }
}

struct Checker {
    checks: usize,
    failure: Option<String>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            checks: 0,
            failure: None,
        }
    }

    /// Records a check; returns false once anything has failed.
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        if self.failure.is_some() {
            return false;
        }
        self.checks += 1;
        if !ok {
            self.failure = Some(what());
        }
        ok
    }

    fn finish(self, suite: Suite) -> SuiteReport {
        SuiteReport {
            suite,
            checks: self.checks,
            failure: self.failure,
        }
    }
}

fn two() -> ConstraintSpec {
    ConstraintSpec::new(2).expect("valid")
}

fn set(ps: impl IntoIterator<Item = Permutation>) -> BTreeSet<Permutation> {
    ps.into_iter().collect()
}

/// Oracle members of `A_n^(2)` with the maximum at 1-based `position`.
fn oracle_with_max_at(bf: &BruteForce, n: usize, position: usize) -> Result<BTreeSet<Permutation>> {
    Ok(set(bf
        .enumerate(n, two())?
        .into_iter()
        .filter(|p| p.max_position() == position)))
}

/// Runs `suite` up to `n_max`. `m` restricts the max-position suite to a
/// single bound (default: `m = 1..=4`); other suites are `m = 2` only.
pub fn run_suite(
    suite: Suite,
    n_max: usize,
    m: Option<u32>,
    bf: &BruteForce,
) -> Result<SuiteReport> {
    let mut c = Checker::new();
    match suite {
        Suite::MaxPosition => {
            let bounds: Vec<u32> = m.map_or_else(|| (1..=4).collect(), |m| vec![m]);
            for &bound in &bounds {
                let spec = ConstraintSpec::new(bound)?;
                for n in 1..=n_max {
                    let census = bf.max_position_census(n, spec)?;
                    let support = census.support();
                    let allowed = |k: usize| k <= bound as usize || k == n;
                    c.check(support.iter().all(|&k| allowed(k)), || {
                        format!(
                            "m={bound} n={n}: maximum found outside {{1..m}} u {{n}}: {support:?}"
                        )
                    });
                    if n >= 2 {
                        let required: Vec<usize> =
                            (1..=(bound as usize).min(n - 1)).chain([n]).collect();
                        c.check(required.iter().all(|k| support.contains(k)), || {
                            format!("m={bound} n={n}: positions {required:?} not all realised: {support:?}")
                        });
                    }
                    c.check(census.total() == bf.count(n, spec)?, || {
                        format!("m={bound} n={n}: census total differs from count")
                    });
                }
            }
        }
        Suite::DClass => {
            for n in 2..=n_max {
                let oracle = oracle_with_max_at(bf, n, n)?;
                let built = m2::enumerate_d(n)?;
                c.check(
                    built.len() == n - 1 && set(built.clone()).len() == n - 1,
                    || {
                        format!(
                            "n={n}: |D_n| constructions = {}, expected {}",
                            built.len(),
                            n - 1
                        )
                    },
                );
                c.check(set(built) == oracle, || {
                    format!("n={n}: constructed D_n differs from oracle")
                });
                c.check(m2::d_count(n)? == oracle.len() as u64, || {
                    format!(
                        "n={n}: d_count disagrees with oracle |D_n| = {}",
                        oracle.len()
                    )
                });
            }
        }
        Suite::CBijection => {
            for n in 3..=n_max {
                let c_n = oracle_with_max_at(bf, n, 2)?;
                let b_smaller = oracle_with_max_at(bf, n - 2, 1)?;
                let image: Result<BTreeSet<_>> = c_n.iter().map(m2::phi_c_to_b).collect();
                let image = image?;
                c.check(image.len() == c_n.len(), || {
                    format!("n={n}: phi is not injective")
                });
                c.check(image == b_smaller, || format!("n={n}: phi(C_n) != B_(n-2)"));
                for p in &c_n {
                    let back = m2::psi_b_to_c(&m2::phi_c_to_b(p)?, n)?;
                    c.check(&back == p, || format!("n={n}: psi(phi({p})) = {back}"));
                }
                for q in &b_smaller {
                    let back = m2::phi_c_to_b(&m2::psi_b_to_c(q, n)?)?;
                    c.check(&back == q, || format!("n={n}: phi(psi({q})) = {back}"));
                }
                c.check(m2::c_count(n)? == c_n.len() as u64, || {
                    format!("n={n}: c_count disagrees with oracle |C_n| = {}", c_n.len())
                });
            }
        }
        Suite::BRecurrence => {
            for n in 1..=n_max {
                let oracle = oracle_with_max_at(bf, n, 1)?;
                let built = m2::enumerate_b(n)?;
                c.check(
                    set(built.clone()) == oracle && built.len() == oracle.len(),
                    || format!("n={n}: constructed B_n differs from oracle"),
                );
                c.check(m2::b_count(n)? == oracle.len() as u64, || {
                    format!(
                        "n={n}: b_count disagrees with oracle |B_n| = {}",
                        oracle.len()
                    )
                });
                if n >= 4 {
                    let top = n as u32;
                    let omega = m2::make_omega(n)?;
                    let rest: Vec<_> = oracle
                        .iter()
                        .filter(|p| p.at(2) == top - 2 && p.at(3) != top - 1)
                        .collect();
                    c.check(rest == vec![&omega], || {
                        format!(
                            "n={n}: expected only {omega} beyond Case 1 / Subcase 2a, got {rest:?}"
                        )
                    });
                }
                if n >= 5 {
                    let top = n as u32;
                    let subcase_2b = oracle
                        .iter()
                        .find(|p| p.at(2) == top - 2 && p.at(3) == top - 3);
                    c.check(subcase_2b.is_none(), || {
                        format!("n={n}: B_n member with pi_2 = n-2, pi_3 = n-3: {subcase_2b:?}")
                    });
                }
            }
        }
        Suite::Split => {
            for n in 3..=n_max {
                let classes = bf.classify_m2(n)?;
                let total = bf.count(n, two())?;
                let (b, cc, d) = (classes.b.len(), classes.c.len(), classes.d.len());
                c.check(classes.other.is_empty(), || {
                    format!(
                        "n={n}: members with maximum outside {{1, 2, n}}: {:?}",
                        classes.other
                    )
                });
                c.check(total == (b + cc + d) as u64, || {
                    format!("n={n}: |B|+|C|+|D| = {} != A_n = {total}", b + cc + d)
                });
                c.check(m2::a_count(n)? == total, || {
                    format!("n={n}: a_count != oracle {total}")
                });
                c.check(m2::a_count_via_recurrence(n)? == total, || {
                    format!("n={n}: recurrence != oracle {total}")
                });
            }
        }
        Suite::Gf => {
            let a = gf_a();
            c.check(a.is_coprime(), || {
                "gf_A numerator and denominator share a factor".into()
            });
            c.check(gf_a_from_b() == a, || {
                "(1+x^2)B(x) + x^2/(1-x)^2 != A(x)".into()
            });
            let expanded = IntPolynomial::from_i64(&[1, -3, 3, -2, 2, -1]);
            c.check(a.denominator() == &expanded, || {
                format!("denominator {} != 1-3x+3x^2-2x^3+2x^4-x^5", a.denominator())
            });
            let series = a.series_coeffs(n_max + 1)?;
            let closed = m2::a_counts(n_max);
            let recurrence = m2::a_counts_via_recurrence(n_max);
            for n in 1..=n_max {
                let s = &series[n];
                let cf = BigInt::from(closed[n - 1].0.clone());
                let rc = BigInt::from(recurrence[n - 1].0.clone());
                if !c.check(s == &cf && cf == rc, || {
                    format!("n={n}: series {s}, closed form {cf}, recurrence {rc}")
                }) {
                    break;
                }
            }
            let oracle_n = n_max.min(bf.ceiling()).min(12);
            for (n, s) in series.iter().enumerate().skip(1).take(oracle_n) {
                let brute = bf.count(n, two())?;
                c.check(&BigInt::from(brute.0.clone()) == s, || {
                    format!("n={n}: series {s} != brute force {brute}")
                });
            }
        }
        Suite::Asymptotics => {
            let est = AsymptoticEstimate::compute(DEFAULT_TOLERANCE)?;
            c.check(est.is_consistent(), || {
                format!("inconsistent estimate {est:?}")
            });
            let fmt10 = |x: f64| format!("{x:.10}");
            c.check(fmt10(est.rho) == "0.6823278038", || {
                format!("rho = {}", est.rho)
            });
            c.check(fmt10(est.alpha) == "1.4655712319", || {
                format!("alpha = {}", est.alpha)
            });
            c.check(fmt10(est.amplitude) == "1.5076770639", || {
                format!("C = {}", est.amplitude)
            });
            let via_rec = dominant_root(&m2_recurrence())?;
            c.check((via_rec - est.alpha).abs() < 1e-9, || {
                format!("dominant root {via_rec} != 1/rho {}", est.alpha)
            });
            let rows = convergence_report(n_max.max(100))?;
            c.check(rows[59].rel_error < 1e-3, || {
                format!("n=60 rel error {}", rows[59].rel_error)
            });
            c.check(rows[99].rel_error < 1e-6, || {
                format!("n=100 rel error {}", rows[99].rel_error)
            });
            for w in rows[19..].windows(2) {
                if !c.check(w[1].rel_error <= w[0].rel_error + 1e-13, || {
                    format!(
                        "rel error rises at n={}: {} > {}",
                        w[1].n, w[1].rel_error, w[0].rel_error
                    )
                }) {
                    break;
                }
            }
        }
    }
    Ok(c.finish(suite))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_desk_scale() {
        let bf = BruteForce::default();
        for suite in Suite::ALL {
            let n_max = match suite {
                Suite::Gf => 200,
                Suite::MaxPosition => 9,
                _ => 10,
            };
            let report = run_suite(suite, n_max, None, &bf).unwrap();
            assert!(report.passed(), "{report}");
            assert!(report.checks > 0);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in Suite::ALL {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn checker_stops_at_first_failure() {
        let mut c = Checker::new();
        assert!(c.check(true, || unreachable!()));
        assert!(!c.check(false, || "first".into()));
        assert!(!c.check(false, || "second".into()));
        let r = c.finish(Suite::Split);
        assert_eq!((r.checks, r.failure.as_deref()), (2, Some("first")));
    }

    #[test]
    fn ceiling_errors_surface() {
        let bf = BruteForce::with_ceiling(5);
        assert!(matches!(
            run_suite(Suite::Split, 6, None, &bf),
            Err(Error::CeilingExceeded { .. })
        ));
    }
}
