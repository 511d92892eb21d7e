//! A support series of degree d is determined by its values on any uniform
//! grid of more than 2d angles; `FourierSupport::from_samples` inverts that
//! evaluation. This example samples a known curve, rebuilds it, and compares
//! both the coefficients and the derived functionals.
//!
//! Run with `cargo run --example from_samples`.

use std::f64::consts::TAU;

use ovals::functionals;
use ovals::FourierSupport;

fn main() -> Result<(), ovals::Error> {
    let original = FourierSupport::new(4.0, [(2, 0.3, -0.1), (5, 0.02, 0.04), (7, -0.01, 0.0)])?;
    println!("original:  {original}");

    // 2·7 + 1 = 15 samples suffice; a denser grid only averages rounding.
    let m = 64;
    let samples: Vec<f64> = (0..m)
        .map(|k| original.value(TAU * f64::from(k) / f64::from(m)))
        .collect();
    let rebuilt = FourierSupport::from_samples(&samples, 7)?;
    println!("rebuilt:   {rebuilt}");

    let mut worst: f64 = (original.a0() - rebuilt.a0()).abs();
    for n in 1..=7 {
        let (a, b) = original.coefficient(n);
        let (ra, rb) = rebuilt.coefficient(n);
        worst = worst.max((a - ra).abs()).max((b - rb).abs());
    }
    println!("largest coefficient error: {worst:.2e}");
    assert!(worst < 1e-13);

    println!("\nfunctionals of original vs rebuilt:");
    for (name, f) in [
        ("length", functionals::length as fn(&FourierSupport) -> f64),
        ("signed area", functionals::signed_area),
        ("pedal area", functionals::pedal_area),
        ("evolute area", functionals::evolute_area),
        ("deficit", functionals::isoperimetric_deficit),
    ] {
        let (x, y) = (f(&original), f(&rebuilt));
        println!("  {name:<12} {x:>20.15}  vs {y:>20.15}");
        assert!((x - y).abs() <= 1e-12 * (1.0 + x.abs()));
    }

    // Degree is a hard cap: asking for too few harmonics aliases the tail.
    let truncated = FourierSupport::from_samples(&samples, 4)?;
    let (a5, b5) = truncated.coefficient(5);
    println!(
        "\ntruncating at degree 4 drops the n=5,7 content: coefficient(5) = ({a5}, {b5}), \
         area error {:.2e}",
        (functionals::signed_area(&original) - functionals::signed_area(&truncated)).abs()
    );
    Ok(())
}
