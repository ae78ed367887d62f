//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//!
//! Arguments that name groups (`paths`, `colour`, ...) restrict the run;
//! anything else (such as flags passed by `cargo test`) is ignored. The seed
//! comes from `LD_SEED` when set.

use std::process::ExitCode;

use locdom_cli::cli::DEFAULT_SEED;
use locdom_cli::reproduce::{Group, Suite};

fn main() -> ExitCode {
    let groups: Vec<Group> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let seed = std::env::var("LD_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED);
    println!("acceptance suite, seed {seed}");
    let suite = Suite::new(seed);
    let outcomes = suite.run_groups(&groups);
    let mut failed = 0;
    for o in &outcomes {
        println!("{}", o.line());
        if !o.passed {
            failed += 1;
        } else if !o.within_budget() {
            println!(
                "FAIL criterion {:>2}: exceeded its {} s budget",
                o.criterion.id,
                o.criterion.budget.as_secs()
            );
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        outcomes.len() - failed,
        outcomes.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
