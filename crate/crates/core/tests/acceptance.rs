use std::process::ExitCode;

use nstl::verify::{run_check, VerifyConfig, CRITERIA};

// NSTL_MAX_R raises the rank bound (6 adds the r = 6 KL check).
fn main() -> ExitCode {
    let mut cfg = VerifyConfig::default();
    if let Some(r) = std::env::var("NSTL_MAX_R").ok().and_then(|v| v.parse().ok()) {
        cfg.max_r = r;
    }
    let mut failed = 0;
    for (id, _) in CRITERIA {
        let res = run_check(id, &cfg);
        let status = if res.passed { "PASS" } else { "FAIL" };
        println!("{status} {:>2} {:<20} {:>8.2}s  {}", res.id, res.name, res.elapsed.as_secs_f64(), res.detail);
        if !res.passed {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
