//! Randomized verification of the deficit inequality chains.
//!
//! Draws seeded random convex curves, evaluates every bound, and reports
//! the smallest slack seen per inequality together with the tightest
//! curve. An empty violation list is the point: the chains are proved, so
//! the sweep must never find a counterexample.
//!
//! Run with `cargo run --release --example inequality_sweep`.

use ovals::sweep;

fn main() {
    for constant_width in [false, true] {
        let summary = sweep(5000, 8, 20260819, 0.05, constant_width, 1e-9);
        println!(
            "{} curves{}:",
            summary.count,
            if constant_width {
                ", constant width"
            } else {
                ""
            }
        );
        for (bound, min_slack) in &summary.min_slack_per_bound {
            println!("  min slack {bound:<18} {min_slack:e}");
        }
        if let Some(witness) = &summary.tightest_witness {
            println!(
                "  tightest: seed {} at relative slack {:e}",
                witness.seed, witness.relative_slack
            );
            println!("    p(φ) = {}", witness.curve);
        }
        assert!(summary.violations.is_empty(), "{:?}", summary.violations);
        println!("  no violations\n");
    }
}
