//! Sharp isoperimetric-deficit bounds for smooth convex curves, computed
//! exactly from Fourier support coefficients.
//!
//! A convex plane curve is stored through its support function
//! `p(φ) = a₀ + Σₙ (aₙ cos nφ + bₙ sin nφ)`. In this representation the
//! classical functionals — perimeter `L`, area `F`, pedal area `A`,
//! evolute area `F_e` — are closed forms in finitely many coefficients,
//! and the isoperimetric deficit `Δ = L² − 4πF` sits in a chain of sharp
//! bounds whose equality cases are completely explicit: circles, curves
//! parallel to an astroid, and (under constant width) curves parallel to
//! a three-cusped hypocycloid.
//!
//! ```
//! use ovals::{analyze, FourierSupport};
//!
//! // p(φ) = 5 + sin 2φ: an oval parallel to an astroid.
//! let p = FourierSupport::new(5.0, [(2, 0.0, 1.0)])?;
//! let report = analyze(&p, 1e-9)?;
//!
//! assert!((report.length - 10.0 * std::f64::consts::PI).abs() < 1e-12);
//! // The general lower bound Δ ≥ 3π(A − F) is attained on this family.
//! assert!(report.slacks.lower_general.abs() < 1e-9);
//! # Ok::<(), ovals::Error>(())
//! ```
//!
//! Every closed form has an independent quadrature route in
//! [`functionals::quadrature`]; derived curves (pedal, evolute, parallel
//! bodies) and similarity detection live in [`geometry`]; the inequality
//! chains, equality classification, and randomized violation sweeps in
//! [`inequalities`].

#![forbid(unsafe_code)]

pub mod cli;
mod error;
mod format;
pub mod functionals;
mod geometry;
mod inequalities;
mod render;
mod support;

pub use error::{Error, Result};
pub use format::{parse_curve, report_json, serialize_curve};
pub use geometry::{
    astroid_param_point, astroid_support, canonical_phase, hypocycloid3_param_point,
    hypocycloid3_support, similarity_between, CanonicalPhase, SimilarityReport,
};
pub use inequalities::{
    analyze, classify_equality, equality_grid_check, sweep, Bounds, CellOutcome, DeficitReport,
    EqualityCase, EqualityClass, GridCell, Slacks, SweepSummary, Violation, Witness,
};
pub use render::{render_svg, Layer, LayerStyle, LayerStyles, ParallelDistance, RenderSpec};
pub use support::{
    CurvatureMinimum, FourierSupport, Harmonic, PlanePoint, CONVEXITY_TOL, DEGENERATE_CONVEXITY_TOL,
};
