//! The evolute of a single-harmonic oval is similar to its inner parallel
//! at distance L/2π: ratio 2 for the n = 2 (astroid) family, ratio 3 for
//! the n = 3 (three-cusped hypocycloid) family. This example detects the
//! similarity numerically from the coefficient data alone.
//!
//! Run with `cargo run --example evolute_similarity`.

use std::f64::consts::TAU;

use ovals::{similarity_between, FourierSupport};

fn main() -> Result<(), ovals::Error> {
    let cases = [
        ("astroid family", FourierSupport::new(5.0, [(2, 0.0, 1.0)])?),
        (
            "hypocycloid family",
            FourierSupport::new(8.0, [(3, 0.0, 1.0)])?,
        ),
    ];

    for (label, p) in cases {
        let r = p.a0(); // L/2π of a support series is its mean term
        let parallel = p.parallel_support(r);
        let evolute = p.evolute_support();
        let report = similarity_between(&evolute, &parallel);

        println!("{label}: p(φ) = {p}");
        println!("  inner parallel at L/2π: q(φ) = {parallel}");
        println!("  evolute:                e(φ) = {evolute}");
        println!(
            "  evolute = parallel scaled ×{:.12} and rotated by {:.12} rad ({:.6}·2π)",
            report.ratio,
            report.rotation,
            report.rotation / TAU
        );
        println!("  max pointwise deviation: {:e}\n", report.max_deviation);
        assert!(report.max_deviation < 1e-9);
    }

    // Curves from different families are not similar; the report says so
    // through its deviation rather than by guessing.
    let astroid = FourierSupport::new(0.0, [(2, 0.0, 1.0)])?;
    let deltoid = FourierSupport::new(0.0, [(3, 1.0, 0.0)])?;
    let report = similarity_between(&deltoid, &astroid);
    println!(
        "astroid vs deltoid: best deviation {:.4} — not similar",
        report.max_deviation
    );
    Ok(())
}
