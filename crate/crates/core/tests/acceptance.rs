//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the lines are always visible; exits nonzero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fortress::verify::{run_suite, Corpus, Suite, SuiteReport, VerifyOptions, TREE_COUNTS};

struct Criterion {
    id: usize,
    title: &'static str,
    suite: Suite,
    budget: Duration,
    /// Minimum number of individual checks the suite must have run.
    min_checked: usize,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn criteria() -> Vec<Criterion> {
    let trees_to_9: usize = TREE_COUNTS[1..=9].iter().sum();
    vec![
        Criterion {
            id: 1,
            title: "path law, n = 1..12",
            suite: Suite::PathLaw,
            budget: secs(5),
            min_checked: 12,
        },
        Criterion {
            id: 2,
            title: "cycle law, n = 3..12",
            suite: Suite::CycleLaw,
            budget: secs(5),
            min_checked: 10,
        },
        Criterion {
            id: 3,
            title: "Petersen graph parameters",
            suite: Suite::Petersen,
            budget: secs(10),
            min_checked: 1,
        },
        Criterion {
            id: 4,
            title: "tree rule = exact search, all trees n <= 9 and 500 random n <= 14",
            suite: Suite::TreeTheorem,
            budget: secs(600),
            min_checked: 9 + trees_to_9 + 500,
        },
        Criterion {
            id: 5,
            title: "failed / stalled / fort-complement equivalence, n <= 7",
            suite: Suite::Equivalence,
            budget: secs(600),
            min_checked: 200,
        },
        Criterion {
            id: 6,
            title: "fort-irrelevant = zf-irrelevant = star centers on trees",
            suite: Suite::Irrelevance,
            budget: secs(600),
            min_checked: 800,
        },
        Criterion {
            id: 7,
            title: "minimal zero forcing sets = minimal covers of minimal forts",
            suite: Suite::CoverDuality,
            budget: secs(600),
            min_checked: 800,
        },
        Criterion {
            id: 8,
            title: "F = n - smallest minimal fort",
            suite: Suite::ParameterIdentity,
            budget: secs(600),
            min_checked: 800,
        },
        Criterion {
            id: 9,
            title: "fort constructions, 200 instances each, n <= 16",
            suite: Suite::Constructions,
            budget: secs(600),
            min_checked: 800,
        },
        Criterion {
            id: 10,
            title: "failed-zf-irrelevant = path endpoints",
            suite: Suite::FailedIrrelevance,
            budget: secs(600),
            min_checked: 800,
        },
        Criterion {
            id: 11,
            title: "K_n and K_{m,n} well-failed, minimal forts of size 2",
            suite: Suite::Families,
            budget: secs(60),
            min_checked: 6 + 10,
        },
        Criterion {
            id: 12,
            title: "layered star tree rounds, residual edge, well-forced",
            suite: Suite::LayeredTree,
            budget: secs(60),
            min_checked: 1,
        },
    ]
}

fn main() -> ExitCode {
    let opts = VerifyOptions::default();
    let start = Instant::now();
    let corpus = match Corpus::build(&opts) {
        Ok(c) => c,
        Err(e) => {
            println!("corpus construction failed: {e}");
            return ExitCode::FAILURE;
        }
    };
    let build_time = start.elapsed();
    println!(
        "corpus: {} graphs ({} trees, {} random graphs, {} family graphs), built in {:.2?}",
        corpus.len(),
        corpus.trees.len(),
        corpus.random_graphs.len(),
        corpus.families.len(),
        build_time
    );

    let mut failures = 0;
    for c in criteria() {
        let t = Instant::now();
        let report: SuiteReport = run_suite(c.suite, &corpus, &opts);
        // the tree corpus is part of the tree criterion's cost
        let elapsed = t.elapsed()
            + if c.id == 4 {
                build_time
            } else {
                Duration::ZERO
            };
        let enough = report.checked >= c.min_checked;
        let in_time = elapsed <= c.budget;
        let pass = report.passed() && enough && in_time;
        if !pass {
            failures += 1;
        }
        println!(
            "criterion {:>2} {}: {} ({} checks, {} failed, {:.2?} of {:?})",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            report.checked,
            report.failed,
            elapsed,
            c.budget
        );
        if !enough {
            println!("    expected at least {} checks", c.min_checked);
        }
        for ce in &report.counterexamples {
            println!(
                "    {} [{}]: {}",
                ce.label,
                ce.graph6.as_deref().unwrap_or("-"),
                ce.detail
            );
        }
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
