//! Verified inequality chains for convex curves.
//!
//! For a convex curve with isoperimetric deficit `Δ = L² − 4πF`, pedal area
//! `A` about the Steiner point, evolute area `F_e` and Steiner-ball
//! distance `δ₂`, the following hold:
//!
//! ```text
//! 0 ≤ 6πδ₂² ≤ 3π(A−F) ≤ Δ ≤ π|F_e|          (every convex curve)
//!     16πδ₂² ≤ (32π/9)(A−F) ≤ Δ              (constant width)
//!     A−F ≤ |F_e|/3                          (every convex curve)
//! ```
//!
//! [`analyze`] evaluates every quantity, bound and slack for one curve and
//! classifies its equality case; [`sweep`] hunts for violations over
//! deterministic random curves; [`equality_grid_check`] verifies that the
//! single-harmonic equality families are tight cell by cell. Slacks are
//! signed as `larger side − smaller side`, so a passing slack is ≥ 0.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::functionals::{
    delta2_squared, evolute_area, isoperimetric_deficit, length, pedal_area, pedal_gap, signed_area,
};
use crate::support::{FourierSupport, DEGENERATE_CONVEXITY_TOL};

/// Equality family of the deficit bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityCase {
    /// Spectral mass only at `n = 0`: the deficit vanishes.
    Circle,
    /// Mass at `{0, 2}`: parallel to an astroid; the general chain is tight.
    AstroidParallel,
    /// Mass at `{0, 3}`: parallel to a three-cusped hypocycloid; the
    /// constant-width chain is tight.
    Hypocycloid3Parallel,
    /// Anything else; every proved inequality is strict.
    Generic,
}

impl EqualityCase {
    /// Stable lowercase label used in reports and JSON.
    pub fn label(self) -> &'static str {
        match self {
            EqualityCase::Circle => "circle",
            EqualityCase::AstroidParallel => "astroid_parallel",
            EqualityCase::Hypocycloid3Parallel => "hypocycloid3_parallel",
            EqualityCase::Generic => "generic",
        }
    }
}

/// Classification outcome: the family plus the relative spectral mass
/// lying outside the family's harmonic set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EqualityClass {
    pub case: EqualityCase,
    /// Energy fraction outside the class's harmonics (for `Generic`: the
    /// smallest such fraction over the three candidate classes, i.e. the
    /// distance to the nearest equality family).
    pub residual: f64,
}

/// The bound values of the inequality chains. Constant-width entries are
/// present only when the curve has constant width.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds {
    /// `3π(A−F)`, lower bound for `Δ`.
    pub lower_general: f64,
    /// `6πδ₂²`, weaker lower bound for `Δ`.
    pub lower_groemer: f64,
    /// `π|F_e|`, upper bound for `Δ`.
    pub upper_hurwitz: f64,
    /// `|F_e|/3`, upper bound for the pedal gap `A−F`.
    pub pedal_gap_upper: f64,
    /// `(32π/9)(A−F)`, improved lower bound under constant width.
    pub lower_cw: Option<f64>,
    /// `16πδ₂²`, improved spectral lower bound under constant width.
    pub lower_groemer_cw: Option<f64>,
}

/// Signed slacks of every verified inequality (`larger − smaller`; all are
/// ≥ 0 up to rounding when the implementation is correct).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slacks {
    /// `Δ ≥ 0`.
    pub deficit_nonneg: f64,
    /// `A − F ≥ 0` (about the Steiner point).
    pub pedal_gap_nonneg: f64,
    /// `Δ − 3π(A−F)`.
    pub lower_general: f64,
    /// `Δ − 6πδ₂²`.
    pub lower_groemer: f64,
    /// `3π(A−F) − 6πδ₂²`: the two lower bounds are themselves ordered.
    pub chain_general: f64,
    /// `π|F_e| − Δ`.
    pub upper_hurwitz: f64,
    /// `|F_e|/3 − (A−F)`.
    pub pedal_gap_upper: f64,
    /// `Δ − (32π/9)(A−F)`, constant width only.
    pub lower_cw: Option<f64>,
    /// `Δ − 16πδ₂²`, constant width only.
    pub lower_groemer_cw: Option<f64>,
    /// `(32π/9)(A−F) − 16πδ₂²`, constant width only.
    pub chain_cw: Option<f64>,
}

impl Slacks {
    /// The present slacks as stable `(name, value)` pairs, in report order.
    pub fn entries(&self) -> Vec<(&'static str, f64)> {
        let mut out = vec![
            ("deficit_nonneg", self.deficit_nonneg),
            ("pedal_gap_nonneg", self.pedal_gap_nonneg),
            ("lower_general", self.lower_general),
            ("lower_groemer", self.lower_groemer),
            ("chain_general", self.chain_general),
            ("upper_hurwitz", self.upper_hurwitz),
            ("pedal_gap_upper", self.pedal_gap_upper),
        ];
        if let Some(v) = self.lower_cw {
            out.push(("lower_cw", v));
        }
        if let Some(v) = self.lower_groemer_cw {
            out.push(("lower_groemer_cw", v));
        }
        if let Some(v) = self.chain_cw {
            out.push(("chain_cw", v));
        }
        out
    }
}

/// Everything [`analyze`] knows about one curve: functionals, bounds,
/// slacks, width constancy, and the equality classification.
///
/// All functionals refer to the curve recentered at its Steiner point
/// (which changes none of them except the pedal area `A`).
#[derive(Debug, Clone, PartialEq)]
pub struct DeficitReport {
    /// Perimeter `L`.
    pub length: f64,
    /// Enclosed area `F`.
    pub area: f64,
    /// Pedal area `A` about the Steiner point.
    pub pedal_area: f64,
    /// Algebraic evolute area `F_e` (≤ 0).
    pub evolute_area: f64,
    /// Isoperimetric deficit `Δ`, by the cancellation-free spectral sum.
    pub deficit: f64,
    /// Squared L² distance to the Steiner ball.
    pub delta2_sq: f64,
    pub constant_width: bool,
    pub bounds: Bounds,
    pub slacks: Slacks,
    pub classification: EqualityClass,
}

/// Evaluates every functional, bound, and slack for `p`.
///
/// The curve is recentered to its Steiner point first, so the pedal area is
/// the one the tight bounds are stated for. `tol` drives constant-width
/// detection (per-coefficient, absolute) and equality classification
/// (relative spectral mass).
///
/// # Errors
///
/// The curve must be convex up to the degenerate margin:
/// `min(p + p'') > −1e−9`. Cusped boundary cases (minimum exactly 0) pass;
/// anything genuinely non-convex is reported with the offending minimum and
/// its angle.
pub fn analyze(p: &FourierSupport, tol: f64) -> Result<DeficitReport> {
    let cm = p.min_curvature_radius();
    if cm.value <= DEGENERATE_CONVEXITY_TOL {
        return Err(Error::NotConvex {
            min: cm.value,
            phi: cm.phi,
        });
    }
    let q = p.recenter_to_steiner();
    let area = signed_area(&q);
    let pedal = pedal_area(&q);
    let f_e = evolute_area(&q);
    let deficit = isoperimetric_deficit(&q);
    let delta2 = delta2_squared(&q);
    let constant_width = q.is_constant_width(tol);
    let classification = classify_equality(&q, tol);

    // Spectral route for A − F: the literal difference cancels the πa₀²
    // parts and loses the low bits the equality-case slacks live in.
    let gap = pedal_gap(&q);
    let bounds = Bounds {
        lower_general: 3.0 * PI * gap,
        lower_groemer: 6.0 * PI * delta2,
        upper_hurwitz: PI * f_e.abs(),
        pedal_gap_upper: f_e.abs() / 3.0,
        lower_cw: constant_width.then(|| 32.0 * PI / 9.0 * gap),
        lower_groemer_cw: constant_width.then_some(16.0 * PI * delta2),
    };
    let slacks = Slacks {
        deficit_nonneg: deficit,
        pedal_gap_nonneg: gap,
        lower_general: deficit - bounds.lower_general,
        lower_groemer: deficit - bounds.lower_groemer,
        chain_general: bounds.lower_general - bounds.lower_groemer,
        upper_hurwitz: bounds.upper_hurwitz - deficit,
        pedal_gap_upper: bounds.pedal_gap_upper - gap,
        lower_cw: bounds.lower_cw.map(|b| deficit - b),
        lower_groemer_cw: bounds.lower_groemer_cw.map(|b| deficit - b),
        chain_cw: bounds
            .lower_cw
            .and_then(|b| bounds.lower_groemer_cw.map(|g| b - g)),
    };
    Ok(DeficitReport {
        length: length(&q),
        area,
        pedal_area: pedal,
        evolute_area: f_e,
        deficit,
        delta2_sq: delta2,
        constant_width,
        bounds,
        slacks,
        classification,
    })
}

/// Classifies the equality case of `p` by relative spectral mass, after
/// recentering to the Steiner point.
///
/// With `T` the total energy `a₀² + Σ (aₙ²+bₙ²)` of the recentered curve:
/// mass outside `{0}` at most `tol·T` is a circle; outside `{0, 2}` at most
/// `tol·T` (with real `n = 2` content) is parallel to an astroid; outside
/// `{0, 3}` likewise for the three-cusped hypocycloid; anything else is
/// generic. The identically-zero curve counts as a circle of radius 0.
pub fn classify_equality(p: &FourierSupport, tol: f64) -> EqualityClass {
    let q = p.recenter_to_steiner();
    // Out-of-class masses are summed directly (not as total − in-class):
    // a subtraction would absorb energies near the rounding floor.
    let mut outside = 0.0;
    let mut outside2 = 0.0;
    let mut outside3 = 0.0;
    let mut mass2 = 0.0;
    let mut mass3 = 0.0;
    for h in q.harmonics() {
        let e = h.a * h.a + h.b * h.b;
        outside += e;
        match h.n {
            2 => mass2 = e,
            3 => mass3 = e,
            _ => {}
        }
        if h.n != 2 {
            outside2 += e;
        }
        if h.n != 3 {
            outside3 += e;
        }
    }
    let total = q.a0() * q.a0() + outside;
    if total == 0.0 {
        return EqualityClass {
            case: EqualityCase::Circle,
            residual: 0.0,
        };
    }
    let r_circle = outside / total;
    if r_circle <= tol {
        return EqualityClass {
            case: EqualityCase::Circle,
            residual: r_circle,
        };
    }
    let r_astroid = outside2 / total;
    if r_astroid <= tol && mass2 / total > tol {
        return EqualityClass {
            case: EqualityCase::AstroidParallel,
            residual: r_astroid,
        };
    }
    let r_hypo = outside3 / total;
    if r_hypo <= tol && mass3 / total > tol {
        return EqualityClass {
            case: EqualityCase::Hypocycloid3Parallel,
            residual: r_hypo,
        };
    }
    EqualityClass {
        case: EqualityCase::Generic,
        residual: r_circle.min(r_astroid).min(r_hypo),
    }
}

/// One recorded violation: a slack that fell below the sweep tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub seed: u64,
    pub bound: &'static str,
    pub slack: f64,
}

/// The curve whose primary lower bound came closest to equality.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub seed: u64,
    pub curve: FourierSupport,
    /// Slack of the primary bound scaled by `max(1, |Δ|)`.
    pub relative_slack: f64,
}

/// Aggregate result of a randomized sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub count: usize,
    /// Slacks below `−tol·max(1, |Δ|)`, sorted by seed; empty on a pass.
    pub violations: Vec<Violation>,
    /// Minimum raw slack observed per bound name.
    pub min_slack_per_bound: BTreeMap<&'static str, f64>,
    /// Tightest curve for the primary lower bound (`lower_cw` on a
    /// constant-width sweep, `lower_general` otherwise).
    pub tightest_witness: Option<Witness>,
}

/// Runs [`analyze`] over `count` deterministic random convex curves and
/// aggregates slack statistics.
///
/// Curve `i` uses seed `seed + i`; `constant_width_only` zeroes the even
/// harmonics before the convexity rescaling, so the generated curves are
/// constant width *and* convex. Evaluation is parallel but the summary is
/// identical to sequential evaluation: per-index seeding, order-independent
/// reductions, violations sorted by seed.
pub fn sweep(
    count: usize,
    degree: u32,
    seed: u64,
    min_radius: f64,
    constant_width_only: bool,
    tol: f64,
) -> SweepSummary {
    let primary = if constant_width_only {
        "lower_cw"
    } else {
        "lower_general"
    };

    #[derive(Default)]
    struct Agg {
        violations: Vec<Violation>,
        mins: BTreeMap<&'static str, f64>,
        tightest: Option<(f64, u64)>,
    }

    let merge = |mut left: Agg, right: Agg| {
        left.violations.extend(right.violations);
        for (name, value) in right.mins {
            left.mins
                .entry(name)
                .and_modify(|m| *m = m.min(value))
                .or_insert(value);
        }
        left.tightest = match (left.tightest, right.tightest) {
            (Some(a), Some(b)) => Some(if (b.0, b.1) < (a.0, a.1) { b } else { a }),
            (a, b) => a.or(b),
        };
        left
    };

    let agg = (0..count)
        .into_par_iter()
        .map(|i| {
            let curve_seed = seed.wrapping_add(i as u64);
            let p = FourierSupport::random_convex_filtered(
                degree,
                curve_seed,
                min_radius,
                constant_width_only,
            );
            let mut agg = Agg::default();
            match analyze(&p, 1e-12) {
                Ok(report) => {
                    let scale = report.deficit.abs().max(1.0);
                    for (name, slack) in report.slacks.entries() {
                        agg.mins.insert(name, slack);
                        if slack < -tol * scale {
                            agg.violations.push(Violation {
                                seed: curve_seed,
                                bound: name,
                                slack,
                            });
                        }
                        if name == primary {
                            agg.tightest = Some((slack / scale, curve_seed));
                        }
                    }
                }
                // random_convex guarantees convexity for sane min_radius;
                // a failure here is itself a reportable violation.
                Err(_) => agg.violations.push(Violation {
                    seed: curve_seed,
                    bound: "convexity",
                    slack: f64::NEG_INFINITY,
                }),
            }
            agg
        })
        .reduce(Agg::default, merge);

    let mut violations = agg.violations;
    violations.sort_by(|a, b| (a.seed, a.bound).cmp(&(b.seed, b.bound)));
    let tightest_witness = agg.tightest.map(|(relative_slack, wseed)| Witness {
        seed: wseed,
        curve: FourierSupport::random_convex_filtered(
            degree,
            wseed,
            min_radius,
            constant_width_only,
        ),
        relative_slack,
    });
    SweepSummary {
        count,
        violations,
        min_slack_per_bound: agg.mins,
        tightest_witness,
    }
}

/// Outcome of one cell of [`equality_grid_check`].
#[derive(Debug, Clone, PartialEq)]
pub enum CellOutcome {
    /// The family's bound is tight for this cell.
    Pass,
    /// The bound failed to be tight; the string carries the numbers.
    Fail(String),
    /// The cell's curve is not convex and was skipped.
    NonConvex,
}

/// One checked cell: the coefficients `a₀ + a cos nφ + b sin nφ` and what
/// happened.
#[derive(Debug, Clone, PartialEq)]
pub struct GridCell {
    pub a0: f64,
    pub a: f64,
    pub b: f64,
    pub outcome: CellOutcome,
}

/// Verifies tightness of the equality families over a coefficient grid.
///
/// Each cell is the single-harmonic curve `a₀ + a cos nφ + b sin nφ`. For
/// `n = 2` the check is `|Δ − 3π(A−F)| ≤ tol·Δ`; for `n = 3` it is
/// `|Δ − (32π/9)(A−F)| ≤ tol·Δ` plus constant width. Non-convex cells are
/// marked and skipped rather than failed.
///
/// # Errors
///
/// Only the two cusped families exist: `n` outside `{2, 3}` is an
/// invalid-argument error, as are non-finite cell coefficients.
pub fn equality_grid_check(n: u32, grid: &[(f64, f64, f64)], tol: f64) -> Result<Vec<GridCell>> {
    if n != 2 && n != 3 {
        return Err(Error::invalid(format!(
            "equality families exist for harmonics 2 and 3, not {n}"
        )));
    }
    grid.iter()
        .map(|&(a0, a, b)| {
            let p = FourierSupport::new(a0, [(n, a, b)])?;
            let outcome = if !p.is_convex(DEGENERATE_CONVEXITY_TOL) {
                CellOutcome::NonConvex
            } else {
                let deficit = isoperimetric_deficit(&p);
                let gap = pedal_gap(&p);
                let bound = if n == 2 {
                    3.0 * PI * gap
                } else {
                    32.0 * PI / 9.0 * gap
                };
                if (deficit - bound).abs() > tol * deficit {
                    CellOutcome::Fail(format!("deficit {deficit:.17e} vs bound {bound:.17e}"))
                } else if n == 3 && !p.is_constant_width(1e-12) {
                    CellOutcome::Fail("not constant width".into())
                } else {
                    CellOutcome::Pass
                }
            };
            Ok(GridCell { a0, a, b, outcome })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(a0: f64, harmonics: &[(u32, f64, f64)]) -> FourierSupport {
        FourierSupport::new(a0, harmonics.iter().copied()).unwrap()
    }

    fn oval2() -> FourierSupport {
        fs(5.0, &[(2, 0.0, 1.0)])
    }

    fn oval3() -> FourierSupport {
        fs(8.0, &[(3, 0.0, 1.0)])
    }

    fn rel_close(x: f64, y: f64, tol: f64) -> bool {
        (x - y).abs() <= tol * x.abs().max(y.abs()).max(1.0)
    }

    #[test]
    fn analyze_astroid_parallel_equalities() {
        let r = analyze(&oval2(), 1e-9).unwrap();
        let six_pi_sq = 6.0 * PI * PI;
        assert!(rel_close(r.deficit, six_pi_sq, 1e-12));
        assert!(rel_close(r.bounds.lower_general, six_pi_sq, 1e-12));
        assert!(rel_close(r.bounds.lower_groemer, six_pi_sq, 1e-12));
        assert!(rel_close(r.bounds.upper_hurwitz, six_pi_sq, 1e-12));
        assert!(r.slacks.lower_general.abs() < 1e-10);
        assert!(r.slacks.lower_groemer.abs() < 1e-10);
        assert!(r.slacks.upper_hurwitz.abs() < 1e-10);
        assert!(r.slacks.pedal_gap_upper.abs() < 1e-10);
        assert!(!r.constant_width);
        assert_eq!(r.bounds.lower_cw, None);
        assert_eq!(r.classification.case, EqualityCase::AstroidParallel);
        assert_eq!(r.classification.residual, 0.0);
    }

    #[test]
    fn analyze_constant_width_equalities() {
        let r = analyze(&oval3(), 1e-9).unwrap();
        let sixteen_pi_sq = 16.0 * PI * PI;
        assert!(rel_close(r.deficit, sixteen_pi_sq, 1e-12));
        assert!(r.constant_width);
        assert!(rel_close(r.bounds.lower_cw.unwrap(), sixteen_pi_sq, 1e-12));
        assert!(rel_close(
            r.bounds.lower_groemer_cw.unwrap(),
            sixteen_pi_sq,
            1e-12
        ));
        assert!(r.slacks.lower_cw.unwrap().abs() < 1e-10);
        assert!(r.slacks.lower_groemer_cw.unwrap().abs() < 1e-10);
        // The general bound stays strictly below and Hurwitz strictly above.
        assert!(rel_close(r.bounds.lower_general, 13.5 * PI * PI, 1e-12));
        assert!(r.slacks.lower_general > 1.0);
        assert!(rel_close(r.bounds.upper_hurwitz, 36.0 * PI * PI, 1e-12));
        assert!(r.slacks.upper_hurwitz > 1.0);
        assert_eq!(r.classification.case, EqualityCase::Hypocycloid3Parallel);
    }

    #[test]
    fn analyze_circle() {
        let r = analyze(&FourierSupport::constant(3.0), 1e-9).unwrap();
        assert!(rel_close(r.length, 6.0 * PI, 1e-14));
        assert!(rel_close(r.area, 9.0 * PI, 1e-14));
        assert_eq!(r.pedal_area, r.area);
        assert_eq!(r.deficit, 0.0);
        assert_eq!(r.delta2_sq, 0.0);
        assert_eq!(r.evolute_area, 0.0);
        assert!(r.constant_width);
        assert_eq!(r.classification.case, EqualityCase::Circle);
        for (_, slack) in r.slacks.entries() {
            assert_eq!(slack, 0.0);
        }
    }

    #[test]
    fn analyze_rejects_nonconvex() {
        let err = analyze(&fs(1.0, &[(2, 1.0, 0.0)]), 1e-9).unwrap_err();
        match err {
            Error::NotConvex { min, phi } => {
                assert!((min + 2.0).abs() < 1e-9);
                let p = fs(1.0, &[(2, 1.0, 0.0)]);
                assert!((p.radius_of_curvature(phi) - min).abs() < 1e-9);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn analyze_accepts_degenerate_boundary() {
        // min(p + p'') = 0 exactly: allowed by the relaxed gate.
        assert!(analyze(&oval3(), 1e-9).is_ok());
    }

    #[test]
    fn analyze_recenters_before_pedal_area() {
        let p = oval2();
        let shifted = p.translate(-0.7, 0.4);
        let r0 = analyze(&p, 1e-9).unwrap();
        let r1 = analyze(&shifted, 1e-9).unwrap();
        assert!(rel_close(r0.pedal_area, r1.pedal_area, 1e-12));
        assert!(rel_close(r0.deficit, r1.deficit, 1e-12));
        assert_eq!(r0.classification, r1.classification);
    }

    #[test]
    fn classify_examples() {
        let c = classify_equality(&oval2(), 1e-9);
        assert_eq!(c.case, EqualityCase::AstroidParallel);
        assert_eq!(c.residual, 0.0);

        let c = classify_equality(&oval3(), 1e-9);
        assert_eq!(c.case, EqualityCase::Hypocycloid3Parallel);

        let c = classify_equality(&fs(10.0, &[(2, 0.0, 0.5), (5, 0.5, 0.0)]), 1e-9);
        assert_eq!(c.case, EqualityCase::Generic);
        assert!(c.residual > 1e-4);

        assert_eq!(
            classify_equality(&FourierSupport::constant(2.0), 1e-9).case,
            EqualityCase::Circle
        );
        assert_eq!(
            classify_equality(&FourierSupport::constant(0.0), 1e-9).case,
            EqualityCase::Circle
        );
    }

    #[test]
    fn classify_tolerates_small_residual_mass() {
        let p = fs(5.0, &[(2, 0.0, 1.0), (7, 1e-9, 0.0)]);
        let c = classify_equality(&p, 1e-9);
        assert_eq!(c.case, EqualityCase::AstroidParallel);
        assert!(c.residual > 0.0 && c.residual < 1e-9);
        // Tighter tolerance demotes it to generic.
        let c = classify_equality(&p, 1e-22);
        assert_eq!(c.case, EqualityCase::Generic);
    }

    #[test]
    fn classify_ignores_steiner_offset() {
        let p = fs(5.0, &[(1, 2.0, -1.0), (2, 0.0, 1.0)]);
        assert_eq!(
            classify_equality(&p, 1e-9).case,
            EqualityCase::AstroidParallel
        );
    }

    #[test]
    fn deficit_zero_iff_circle() {
        for seed in 0..30 {
            let p = FourierSupport::random_convex(8, seed, 0.05);
            let r = analyze(&p, 1e-9).unwrap();
            let is_circle = r.classification.case == EqualityCase::Circle;
            assert_eq!(r.deficit <= 1e-12 * r.length * r.length, is_circle);
        }
        let r = analyze(&FourierSupport::constant(1.0), 1e-9).unwrap();
        assert_eq!(r.deficit, 0.0);
        assert_eq!(r.classification.case, EqualityCase::Circle);
    }

    #[test]
    fn pedal_gap_upper_is_tight_exactly_on_low_classes() {
        for p in [
            oval2(),
            FourierSupport::constant(2.0),
            fs(3.0, &[(2, 0.4, -0.2)]),
        ] {
            let r = analyze(&p, 1e-9).unwrap();
            assert!(r.slacks.pedal_gap_upper.abs() <= 1e-10, "{p}");
        }
        // An n ≥ 3 harmonic makes it strict.
        let r = analyze(&fs(9.0, &[(2, 0.3, 0.0), (3, 0.0, 0.4)]), 1e-9).unwrap();
        assert!(r.slacks.pedal_gap_upper > 1e-3);
    }

    #[test]
    fn sweep_finds_no_violations() {
        let summary = sweep(300, 8, 1234, 0.05, false, 1e-9);
        assert_eq!(summary.count, 300);
        assert!(summary.violations.is_empty());
        for name in [
            "deficit_nonneg",
            "pedal_gap_nonneg",
            "lower_general",
            "lower_groemer",
            "chain_general",
            "upper_hurwitz",
            "pedal_gap_upper",
        ] {
            let min = summary.min_slack_per_bound[name];
            assert!(min >= -1e-9, "{name}: {min}");
        }
        assert!(!summary.min_slack_per_bound.contains_key("lower_cw"));
        let witness = summary.tightest_witness.unwrap();
        assert!(witness.relative_slack >= 0.0);
        assert_eq!(
            witness.curve,
            FourierSupport::random_convex(8, witness.seed, 0.05)
        );
    }

    #[test]
    fn sweep_constant_width_mode() {
        let summary = sweep(200, 8, 77, 0.05, true, 1e-9);
        assert!(summary.violations.is_empty());
        for name in ["lower_cw", "lower_groemer_cw", "chain_cw"] {
            assert!(summary.min_slack_per_bound[name] >= -1e-9, "{name}");
        }
        let witness = summary.tightest_witness.unwrap();
        assert!(witness.curve.is_constant_width(1e-12));
    }

    #[test]
    fn sweep_is_deterministic() {
        let a = sweep(64, 6, 5, 0.05, false, 1e-9);
        let b = sweep(64, 6, 5, 0.05, false, 1e-9);
        assert_eq!(a, b);
    }

    #[test]
    fn sweep_unit_circle_case() {
        let summary = sweep(1, 0, 9, 0.05, false, 1e-9);
        assert!(summary.violations.is_empty());
        for name in [
            "deficit_nonneg",
            "lower_general",
            "lower_groemer",
            "upper_hurwitz",
        ] {
            assert_eq!(summary.min_slack_per_bound[name], 0.0, "{name}");
        }
    }

    #[test]
    fn grid_check_examples() {
        let cells = equality_grid_check(2, &[(5.0, 0.0, 1.0), (1.0, 0.0, 1.0)], 1e-10).unwrap();
        assert_eq!(cells[0].outcome, CellOutcome::Pass);
        assert_eq!(cells[1].outcome, CellOutcome::NonConvex);

        let cells = equality_grid_check(3, &[(8.0, 0.0, 1.0), (9.0, 0.7, -0.4)], 1e-10).unwrap();
        assert!(cells.iter().all(|c| c.outcome == CellOutcome::Pass));

        assert!(equality_grid_check(4, &[(5.0, 1.0, 0.0)], 1e-10).is_err());
    }

    #[test]
    fn grid_check_sweep_over_amplitudes() {
        let mut grid = Vec::new();
        for i in 0..10 {
            let amp = 0.2 + i as f64 * 0.1;
            grid.push((4.0, amp, 0.3));
        }
        for n in [2, 3] {
            let cells = equality_grid_check(n, &grid, 1e-9).unwrap();
            for cell in cells {
                match cell.outcome {
                    CellOutcome::Pass | CellOutcome::NonConvex => {}
                    CellOutcome::Fail(msg) => panic!("n={n} cell failed: {msg}"),
                }
            }
        }
    }
}
