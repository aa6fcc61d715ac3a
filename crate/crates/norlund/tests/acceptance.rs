//! One PASS/FAIL line per acceptance criterion, each with its time budget.
//! Runs without the libtest harness so the lines are always printed:
//! `cargo test -p norlund --test acceptance`.

use std::process::Command;
use std::time::{Duration, Instant};

use norlund_core::verify::{run_identity, Overrides, VerificationReport, VerifyContext};

struct Criterion {
    label: &'static str,
    ids: &'static [&'static str],
    budget: Duration,
    extra: fn(&[VerificationReport]) -> Result<(), String>,
}

fn no_extra(_: &[VerificationReport]) -> Result<(), String> {
    Ok(())
}

fn dde_names_one_variant(reports: &[VerificationReport]) -> Result<(), String> {
    for r in reports {
        if !r.notes.contains("satisfied by: x-form") && !r.notes.contains("satisfied by: b-form") {
            return Err(format!(
                "report does not name a single variant: {}",
                r.notes
            ));
        }
    }
    Ok(())
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        label: "1 exact tables and umbral inversion",
        ids: &["norlund-table", "umbral-inversion"],
        budget: Duration::from_secs(1),
        extra: no_extra,
    },
    Criterion {
        label: "2 density cross-validation and normalization",
        ids: &["density-cross-validation", "density-normalization"],
        budget: Duration::from_secs(60),
        extra: no_extra,
    },
    Criterion {
        label: "3 log-moment closed form and spot values",
        ids: &["log-moment", "log-moment-spot-values"],
        budget: Duration::from_secs(30),
        extra: no_extra,
    },
    Criterion {
        label: "4 generating function order and closed forms",
        ids: &["genfun-asymptotic", "genfun-closed-forms"],
        budget: Duration::from_secs(10),
        extra: no_extra,
    },
    Criterion {
        label: "5 finite difference of binomial times digamma",
        ids: &["delta-digamma"],
        budget: Duration::from_secs(5),
        extra: no_extra,
    },
    Criterion {
        label: "6 integral I(a)",
        ids: &["integral-I-a"],
        budget: Duration::from_secs(5),
        extra: no_extra,
    },
    Criterion {
        label: "7 Chebyshev integrals",
        ids: &["chebyshev-integrals"],
        budget: Duration::from_secs(60),
        extra: no_extra,
    },
    Criterion {
        label: "8 Hurwitz zeta sums",
        ids: &["hurwitz-sums"],
        budget: Duration::from_secs(120),
        extra: no_extra,
    },
    Criterion {
        label: "9 differential-difference equation",
        ids: &["dde"],
        budget: Duration::from_secs(60),
        extra: dde_names_one_variant,
    },
    Criterion {
        label: "10 auxiliary integrals",
        ids: &["cosh-fourier-integrals", "psi-log-pair"],
        budget: Duration::from_secs(10),
        extra: no_extra,
    },
];

fn check(c: &Criterion) -> Result<Duration, String> {
    let start = Instant::now();
    let ctx = VerifyContext::default();
    let mut reports = Vec::new();
    for id in c.ids {
        reports.extend(run_identity(&ctx, id, &Overrides::default()).map_err(|e| e.to_string())?);
    }
    let elapsed = start.elapsed();
    if let Some(r) = reports.iter().find(|r| !r.passed) {
        return Err(format!(
            "{} failed: residual {:e} tolerance {:e} ({})",
            r.identity_id, r.residual, r.tolerance, r.notes
        ));
    }
    (c.extra)(&reports)?;
    if elapsed > c.budget {
        return Err(format!("took {elapsed:.2?}, budget {:?}", c.budget));
    }
    Ok(elapsed)
}

fn full_suite() -> Result<Duration, String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_norlund"))
        .args(["verify", "--suite", "all"])
        .env_remove(norlund::TOLERANCE_ENV)
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if out.status.code() != Some(0) {
        return Err(format!("exit status {:?}", out.status.code()));
    }
    if elapsed > Duration::from_secs(360) {
        return Err(format!("took {elapsed:.2?}, budget 6 min"));
    }
    Ok(elapsed)
}

fn main() {
    let mut failures = 0;
    for c in &CRITERIA {
        match check(c) {
            Ok(t) => println!("PASS  criterion {} ({t:.2?} of {:?})", c.label, c.budget),
            Err(e) => {
                failures += 1;
                println!("FAIL  criterion {}: {e}", c.label);
            }
        }
    }
    match full_suite() {
        Ok(t) => println!("PASS  full `verify --suite all` ({t:.2?} of 360s, exit 0)"),
        Err(e) => {
            failures += 1;
            println!("FAIL  full `verify --suite all`: {e}");
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
