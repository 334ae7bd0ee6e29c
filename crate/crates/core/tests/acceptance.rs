//! Acceptance criteria. One line per criterion; exits non-zero when a
//! criterion fails other than in the documented way.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use arclat::verify::{Suite, SuiteReport};

struct Criterion {
    id: u32,
    title: &'static str,
    runs: &'static [(Suite, usize)],
    budget: Duration,
    /// Checks known to fail, with the reason recorded alongside the code.
    known_red: &'static [&'static str],
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "bijections on S5, S6, B3, B4",
        runs: &[(Suite::BijectionA, 5), (Suite::BijectionA, 6), (Suite::BijectionB, 3), (Suite::BijectionB, 4)],
        budget: secs(10),
        known_red: &[],
    },
    Criterion {
        id: 2,
        title: "type-B diagram counts 8, 48, 384",
        runs: &[(Suite::DiagramCount, 2), (Suite::DiagramCount, 3), (Suite::DiagramCount, 4)],
        budget: secs(60),
        known_red: &[],
    },
    Criterion {
        id: 3,
        title: "canonical join representations on S4 and B3, quotient stability",
        runs: &[(Suite::Cjr, 3)],
        budget: secs(60),
        known_red: &[],
    },
    Criterion {
        id: 4,
        title: "arrow closure = subarc = forcing",
        runs: &[
            (Suite::ForcingOracle, 1),
            (Suite::ForcingOracle, 2),
            (Suite::ForcingOracle, 3),
            (Suite::ForcingOracle, 4),
            (Suite::ForcingOracle, 5),
        ],
        budget: secs(300),
        known_red: &[],
    },
    Criterion {
        id: 5,
        title: "shard geometry at B2, B3, A3, A4",
        runs: &[(Suite::ShardDigraph, 2), (Suite::ShardDigraph, 3), (Suite::ShardDigraphA, 3), (Suite::ShardDigraphA, 4)],
        budget: secs(120),
        known_red: &[],
    },
    Criterion {
        id: 6,
        title: "octagon has exactly four hexagon quotients",
        runs: &[(Suite::Octagon, 2)],
        budget: secs(1),
        known_red: &[],
    },
    Criterion {
        id: 7,
        title: "homomorphism congruences match closed forms, quotient is S4",
        runs: &[(Suite::Hom, 3), (Suite::Hom, 4)],
        budget: secs(60),
        known_red: &[],
    },
    Criterion {
        id: 8,
        title: "Cambrian patterns, sizes, meet representation, noncrossing partitions",
        runs: &[(Suite::Cambrian, 2), (Suite::Cambrian, 3), (Suite::Cambrian, 4)],
        budget: secs(180),
        known_red: &[],
    },
    Criterion {
        id: 9,
        title: "biCambrian generators and meets",
        runs: &[(Suite::Bicambrian, 3), (Suite::Bicambrian, 4)],
        budget: secs(60),
        // The listed linear generators miss four long arcs with endpoints 2
        // and 3; the lattice computation on B3 confirms the gap.
        known_red: &["linear-listed-generators-give-two-sided"],
    },
    Criterion {
        id: 10,
        title: "Con_A three-way equivalence, closure, verdicts",
        runs: &[(Suite::ConA, 2), (Suite::ConA, 3)],
        budget: secs(300),
        known_red: &[],
    },
    Criterion {
        id: 11,
        title: "w0 symmetry on S4 and S6",
        runs: &[(Suite::Symmetry, 2), (Suite::Symmetry, 3)],
        budget: secs(10),
        known_red: &[],
    },
];

fn main() -> ExitCode {
    let mut unexpected = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let reports: Vec<Result<SuiteReport, String>> =
            c.runs.iter().map(|&(s, n)| s.run(n).map_err(|e| format!("{s} n={n}: {e}"))).collect();
        let elapsed = start.elapsed();
        let mut failing: Vec<String> = Vec::new();
        let mut expected_red = Vec::new();
        for r in &reports {
            match r {
                Err(e) => failing.push(e.clone()),
                Ok(r) => {
                    for check in r.checks.iter().filter(|k| !k.pass) {
                        let label = format!("{} n={}: {}", r.suite, r.n, check.name);
                        if c.known_red.contains(&check.name.as_str()) {
                            expected_red.push(format!("{label} ({})", check.counterexamples.join("; ")));
                        } else {
                            failing.push(format!("{label}: {:?}", check.counterexamples));
                        }
                    }
                }
            }
        }
        let checked: usize = reports.iter().flatten().flat_map(|r| &r.checks).map(|k| k.checked).sum();
        let in_budget = elapsed <= c.budget;
        let green = failing.is_empty() && expected_red.is_empty() && in_budget;
        println!(
            "criterion {:>2} {} {} [{checked} checks, {:.2?} of {:?}]",
            c.id,
            if green { "PASS" } else { "FAIL" },
            c.title,
            elapsed,
            c.budget
        );
        for f in &expected_red {
            println!("    documented failure: {f}");
        }
        for f in &failing {
            println!("    failure: {f}");
        }
        if !in_budget {
            println!("    over budget");
        }
        let red_as_documented = c.known_red.iter().all(|k| expected_red.iter().any(|f| f.contains(k)));
        if !failing.is_empty() || !in_budget || !red_as_documented {
            unexpected.push(c.id);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria as documented");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
