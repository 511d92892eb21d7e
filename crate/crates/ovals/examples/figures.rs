//! Renders the two canonical figures — each oval with its inner parallel
//! at distance L/2π and its evolute — as SVG files in the current
//! directory.
//!
//! Run with `cargo run --example figures`.

use ovals::{render_svg, FourierSupport, RenderSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let figures = [
        (
            "astroid_oval.svg",
            FourierSupport::new(5.0, [(2, 0.0, 1.0)])?,
        ),
        (
            "deltoid_oval.svg",
            FourierSupport::new(8.0, [(3, 0.0, 1.0)])?,
        ),
    ];

    // The default spec draws boundary, parallel at L/2π, and evolute: for
    // these single-harmonic ovals the parallel collapses onto the cusped
    // core curve, and the evolute is the same curve scaled and rotated.
    let spec = RenderSpec::default();

    for (name, p) in figures {
        let svg = render_svg(&p, &spec)?;
        std::fs::write(name, &svg)?;
        println!(
            "wrote {name}: p(φ) = {p}, {} bytes, {} layers",
            svg.len(),
            svg.matches("<polygon").count() + svg.matches("<circle").count()
        );
    }
    Ok(())
}
