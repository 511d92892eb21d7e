//! Deterministic SVG rendering of a curve and its derived constructions.
//!
//! A render draws any subset of four layers — the curve itself, its pedal
//! about the origin, its evolute, and an inner parallel — as closed
//! polygons in one padded viewbox. Output is a pure function of the input:
//! identical curve and spec give identical bytes. The y axis is flipped on
//! emission so figures appear in the usual mathematical orientation.

use std::f64::consts::TAU;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::functionals::length;
use crate::support::FourierSupport;

/// Drawable constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    Boundary,
    Pedal,
    Evolute,
    Parallel,
}

impl Layer {
    pub const ALL: [Layer; 4] = [
        Layer::Boundary,
        Layer::Pedal,
        Layer::Evolute,
        Layer::Parallel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Layer::Boundary => "boundary",
            Layer::Pedal => "pedal",
            Layer::Evolute => "evolute",
            Layer::Parallel => "parallel",
        }
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Layer {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "boundary" => Ok(Layer::Boundary),
            "pedal" => Ok(Layer::Pedal),
            "evolute" => Ok(Layer::Evolute),
            "parallel" => Ok(Layer::Parallel),
            other => Err(Error::invalid(format!(
                "unknown layer `{other}` (expected boundary, pedal, evolute, or parallel)"
            ))),
        }
    }
}

/// Offset distance for the parallel layer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParallelDistance {
    Explicit(f64),
    /// `L/2π` of the rendered curve — the distance at which the inner
    /// parallel of a single-harmonic oval collapses onto the cusped core.
    CanonicalRadius,
}

impl FromStr for ParallelDistance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "L/2pi" {
            return Ok(ParallelDistance::CanonicalRadius);
        }
        match s.parse::<f64>() {
            Ok(r) if r.is_finite() => Ok(ParallelDistance::Explicit(r)),
            _ => Err(Error::invalid(format!(
                "parallel distance must be a finite number or `L/2pi`, got `{s}`"
            ))),
        }
    }
}

/// Stroke styling for one layer.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerStyle {
    /// CSS color of the stroke (and of the dot a degenerate layer becomes).
    pub stroke: String,
    /// Stroke width as a fraction of the drawing extent.
    pub width: f64,
}

impl LayerStyle {
    fn new(stroke: &str, width: f64) -> Self {
        LayerStyle {
            stroke: stroke.to_owned(),
            width,
        }
    }
}

/// Per-layer styles; the defaults keep the curve dark and the derived
/// constructions distinguishable at a glance.
#[derive(Debug, Clone, PartialEq)]
pub struct LayerStyles {
    pub boundary: LayerStyle,
    pub pedal: LayerStyle,
    pub evolute: LayerStyle,
    pub parallel: LayerStyle,
}

impl Default for LayerStyles {
    fn default() -> Self {
        LayerStyles {
            boundary: LayerStyle::new("#1f2430", 0.006),
            pedal: LayerStyle::new("#3b6ea5", 0.004),
            evolute: LayerStyle::new("#b0413e", 0.004),
            parallel: LayerStyle::new("#2e8b57", 0.004),
        }
    }
}

impl LayerStyles {
    fn get(&self, layer: Layer) -> &LayerStyle {
        match layer {
            Layer::Boundary => &self.boundary,
            Layer::Pedal => &self.pedal,
            Layer::Evolute => &self.evolute,
            Layer::Parallel => &self.parallel,
        }
    }
}

/// What to draw and how densely to sample it.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    /// Layers in paint order; duplicates are drawn once. Must be nonempty.
    pub layers: Vec<Layer>,
    pub parallel_distance: ParallelDistance,
    /// Sample points per closed curve; at least 16.
    pub samples_per_curve: usize,
    pub styles: LayerStyles,
}

impl Default for RenderSpec {
    /// The figure triple: curve, inner parallel at `L/2π`, evolute.
    fn default() -> Self {
        RenderSpec {
            layers: vec![Layer::Boundary, Layer::Parallel, Layer::Evolute],
            parallel_distance: ParallelDistance::CanonicalRadius,
            samples_per_curve: 1024,
            styles: LayerStyles::default(),
        }
    }
}

/// Renders the selected layers of `p` as a standalone SVG document.
///
/// Each layer becomes one closed `<polygon>`; a degenerate layer whose
/// points all coincide (a circle's evolute, or its parallel at full radius)
/// becomes a `<circle>` dot instead. The viewbox is the bounding box of
/// everything drawn, padded by 5% of its larger side.
///
/// # Errors
///
/// Empty `layers`, `samples_per_curve < 16`, and a non-finite explicit
/// parallel distance are invalid arguments.
pub fn render_svg(p: &FourierSupport, spec: &RenderSpec) -> Result<String> {
    if spec.layers.is_empty() {
        return Err(Error::invalid("render spec selects no layers"));
    }
    let m = spec.samples_per_curve;
    if m < 16 {
        return Err(Error::invalid(format!(
            "samples_per_curve must be at least 16, got {m}"
        )));
    }
    let r = match spec.parallel_distance {
        ParallelDistance::Explicit(r) if r.is_finite() => r,
        ParallelDistance::Explicit(r) => {
            return Err(Error::invalid(format!(
                "parallel distance must be finite, got {r}"
            )));
        }
        ParallelDistance::CanonicalRadius => length(p) / TAU,
    };

    let mut layers: Vec<Layer> = Vec::new();
    for &layer in &spec.layers {
        if !layers.contains(&layer) {
            layers.push(layer);
        }
    }

    // Sample every layer up front (y already flipped) to size the viewbox.
    let mut drawn: Vec<(Layer, Vec<(f64, f64)>)> = Vec::new();
    for &layer in &layers {
        let support;
        let q = match layer {
            Layer::Boundary => p,
            Layer::Pedal => p,
            Layer::Evolute => {
                support = p.evolute_support();
                &support
            }
            Layer::Parallel => {
                support = p.parallel_support(r);
                &support
            }
        };
        let points: Vec<(f64, f64)> = (0..m)
            .map(|j| {
                let phi = TAU * j as f64 / m as f64;
                let pt = if layer == Layer::Pedal {
                    p.pedal_point(phi)
                } else {
                    q.boundary_point(phi)
                };
                (pt.x, -pt.y)
            })
            .collect();
        drawn.push((layer, points));
    }

    let mut x0 = f64::INFINITY;
    let mut y0 = f64::INFINITY;
    let mut x1 = f64::NEG_INFINITY;
    let mut y1 = f64::NEG_INFINITY;
    for (_, points) in &drawn {
        for &(x, y) in points {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
    }
    if x1 - x0 <= 0.0 && y1 - y0 <= 0.0 {
        // Everything drawn is a single point; give the dot room to exist.
        x0 -= 0.5;
        x1 += 0.5;
        y0 -= 0.5;
        y1 += 0.5;
    }
    let extent = (x1 - x0).max(y1 - y0);
    let pad = 0.05 * extent;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">",
        x0 - pad,
        y0 - pad,
        (x1 - x0) + 2.0 * pad,
        (y1 - y0) + 2.0 * pad,
    );
    for (layer, points) in &drawn {
        let style = spec.styles.get(*layer);
        let (fx, fy) = points[0];
        let degenerate = points.iter().all(|&(x, y)| (x - fx).hypot(y - fy) <= 1e-9);
        if degenerate {
            let _ = writeln!(
                out,
                "<circle id=\"{}\" cx=\"{fx:.6}\" cy=\"{fy:.6}\" r=\"{:.6}\" fill=\"{}\"/>",
                layer.name(),
                0.015 * extent,
                style.stroke,
            );
            continue;
        }
        let _ = write!(
            out,
            "<polygon id=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{:.6}\" points=\"",
            layer.name(),
            style.stroke,
            style.width * extent,
        );
        for (j, &(x, y)) in points.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{x:.6},{y:.6}");
        }
        out.push_str("\"/>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
