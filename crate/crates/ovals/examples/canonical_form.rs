//! Every support series with a single harmonic above order zero can be put
//! in the normal form  p(φ) = a₀ + A·cos(n(φ − φ₀)).  The phase φ₀ is only
//! defined modulo 2π/n; the canonical representative lives in [0, 2π/n).
//!
//! Run with `cargo run --example canonical_form`.

use std::f64::consts::{PI, TAU};

use ovals::{canonical_phase, FourierSupport};

fn main() -> Result<(), ovals::Error> {
    let base = FourierSupport::new(5.0, [(2, 1.0, 0.0)])?;

    println!("rotating {base} and recovering the phase:\n");
    for k in 0..8 {
        let theta = TAU * f64::from(k) / 8.0;
        let rotated = base.rotate(theta);
        let canon = canonical_phase(&rotated)?;

        // Rebuild the curve from the normal form alone.
        let rebuilt = FourierSupport::new(
            canon.a0,
            [(
                canon.n,
                canon.amplitude * (f64::from(canon.n) * canon.phi0).cos(),
                canon.amplitude * (f64::from(canon.n) * canon.phi0).sin(),
            )],
        )?;

        let deviation: f64 = (0..256)
            .map(|j| {
                let phi = TAU * f64::from(j) / 256.0;
                (rotated.value(phi) - rebuilt.value(phi)).abs()
            })
            .fold(0.0, f64::max);

        println!(
            "  rotate by {:>6.4}: φ₀ = {:>6.4}  (θ mod 2π/{} = {:>6.4}), rebuild deviation {:.1e}",
            theta,
            canon.phi0,
            canon.n,
            theta.rem_euclid(TAU / f64::from(canon.n)),
            deviation
        );
        // Compare phases circularly: rotating by exactly π lands a hair
        // below the period boundary, so φ₀ comes back as π − ε, not 0.
        let period = TAU / f64::from(canon.n);
        let diff = (canon.phi0 - theta).rem_euclid(period);
        assert!(diff.min(period - diff) < 1e-12);
        assert!(deviation < 1e-12);
    }

    // A pure sine harmonic is just a phase-shifted cosine.
    let sine = FourierSupport::new(8.0, [(3, 0.0, 1.0)])?;
    let canon = canonical_phase(&sine)?;
    println!(
        "\n{sine}  ⇒  p(φ) = {} + {}·cos({}(φ − {:.16}))",
        canon.a0, canon.amplitude, canon.n, canon.phi0
    );
    assert!((canon.phi0 - PI / 6.0).abs() < 1e-15);

    // Two distinct harmonics admit no such normal form.
    let mixed = FourierSupport::new(5.0, [(2, 1.0, 0.0), (3, 0.5, 0.0)])?;
    match canonical_phase(&mixed) {
        Err(e) => println!("\n{mixed}: {e}"),
        Ok(_) => unreachable!("mixed spectra have no single-harmonic normal form"),
    }
    Ok(())
}
