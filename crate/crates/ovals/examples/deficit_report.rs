//! Full deficit analysis of three curves: a circle, an oval whose inner
//! parallel is an astroid, and a constant-width oval whose inner parallel
//! is a three-cusped hypocycloid.
//!
//! Run with `cargo run --example deficit_report`.

use ovals::{analyze, FourierSupport};

fn main() -> Result<(), ovals::Error> {
    let curves = [
        ("circle of radius 3", FourierSupport::constant(3.0)),
        (
            "astroid-parallel oval",
            FourierSupport::new(5.0, [(2, 0.0, 1.0)])?,
        ),
        (
            "constant-width oval",
            FourierSupport::new(8.0, [(3, 0.0, 1.0)])?,
        ),
    ];

    for (label, p) in curves {
        let report = analyze(&p, 1e-9)?;
        println!("{label}: p(φ) = {p}");
        println!("  L = {:<20} F = {}", report.length, report.area);
        println!(
            "  A = {:<20} F_e = {}",
            report.pedal_area, report.evolute_area
        );
        println!(
            "  delta = {:<16} delta2_sq = {}",
            report.deficit, report.delta2_sq
        );
        println!(
            "  constant width: {}, classification: {} (residual {:e})",
            report.constant_width,
            report.classification.case.label(),
            report.classification.residual
        );

        // Each slack certifies one inequality of the deficit chain
        //   0 ≤ 6πδ₂² ≤ 3π(A−F) ≤ Δ ≤ π|F_e|
        // (plus the sharper constant-width chain when it applies); a zero
        // slack means the curve attains that bound exactly.
        println!("  slacks:");
        for (name, value) in report.slacks.entries() {
            println!("    {name:<18} {value:e}");
        }
        println!();
    }
    Ok(())
}
