//! The nine acceptance criteria, each run exactly at its stated bounds.
//! Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use jacksym::verify::{self, Check};

struct Criterion {
    number: u32,
    title: &'static str,
    run: fn() -> Vec<Check>,
}

const SEED: u64 = 20_240_601;

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            number: 1,
            title: "A^(k) P_λ = e_k(λ) P_λ for |λ| ≤ 8, k ≤ 4",
            run: || vec![verify::a_eigen(8, 4)],
        },
        Criterion {
            number: 2,
            title: "[A^(j), A^(k)] = 0 on weight ≤ 8, j, k ≤ 4",
            run: || vec![verify::a_commute(8, 4)],
        },
        Criterion {
            number: 3,
            title: "−A^(1) = H^(1) and A^(1)(A^(1)+1) − 2A^(2) = H^(2) on weight ≤ 8",
            run: || vec![verify::hs1(8), verify::hs2(8)],
        },
        Criterion {
            number: 4,
            title: "Jack orthogonality for weight ≤ 8 and P_(2)",
            run: || vec![verify::jack_orthogonal(8), verify::jack_p2()],
        },
        Criterion {
            number: 5,
            title: "Pieri rules and B/C hierarchies on weight ≤ 7, step evaluations on weight ≤ 6",
            run: || {
                vec![
                    verify::pieri_up(7),
                    verify::pieri_down(7),
                    verify::b_commutator(7, 8),
                    verify::c_commutator(7, 8),
                    verify::step_worked_values(),
                    verify::step_up_closed_form(6),
                    verify::step_down_closed_form(6),
                    verify::step_down_operator(6),
                    verify::step_up_operator(6),
                ]
            },
        },
        Criterion {
            number: 6,
            title: "S_N eigenvalues and stability for ℓ(λ) ≤ N ≤ 3, |λ| ≤ 6",
            run: || vec![verify::finite_eigen(6, 3), verify::finite_stability(6, 3)],
        },
        Criterion {
            number: 7,
            title: "determinantal identity: 100 random instances per N, M ≤ 4; series N ≤ 3, D ≤ 4; term counts N ≤ 6",
            run: || {
                vec![verify::detid_random(4, 4, 100, SEED), verify::detid_series(3, 4), verify::detid_term_counts(6)]
            },
        },
        Criterion { number: 8, title: "kernel lemma for all p_λ, |λ| ≤ 6", run: || vec![verify::kernel_lemma(6)] },
        Criterion {
            number: 9,
            title: "[a_m, a_n] = mα δ_{m+n,0} on weight ≤ 6, |m|, |n| ≤ 4",
            run: || vec![verify::heisenberg(6, 4)],
        },
    ]
}

fn main() -> ExitCode {
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let checks = (c.run)();
        let secs = start.elapsed().as_secs_f64();
        let ok = checks.iter().all(Check::passed);
        println!("{} criterion {}: {} [{secs:.1}s]", if ok { "PASS" } else { "FAIL" }, c.number, c.title);
        for check in &checks {
            println!("    {check}");
        }
        if !ok {
            failed += 1;
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
