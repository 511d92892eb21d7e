//! Property-based invariants over random support functions.
//!
//! Two curve sources: `arb_curve` draws arbitrary trigonometric polynomials
//! (convexity not required — the Parseval identities hold regardless), and
//! `arb_convex` draws from the seeded convex generator for the properties
//! that only make sense on ovals.

use std::f64::consts::TAU;

use proptest::prelude::*;

use ovals::functionals::{self, quadrature};
use ovals::{analyze, classify_equality, parse_curve, serialize_curve, FourierSupport};

fn arb_curve() -> impl Strategy<Value = FourierSupport> {
    (
        -3.0..10.0f64,
        proptest::collection::btree_map(1u32..=10, (-2.0..2.0f64, -2.0..2.0f64), 0..6),
    )
        .prop_map(|(a0, harmonics)| {
            FourierSupport::new(a0, harmonics.into_iter().map(|(n, (a, b))| (n, a, b))).unwrap()
        })
}

fn arb_convex() -> impl Strategy<Value = FourierSupport> {
    (any::<u64>(), 2u32..=10)
        .prop_map(|(seed, degree)| FourierSupport::random_convex(degree, seed, 0.05))
}

/// 1 + Σ nᵏ(|aₙ|+|bₙ|): a size bound for the k-th derivative of the series.
fn derivative_scale(p: &FourierSupport, order: u32) -> f64 {
    1.0 + p
        .harmonics()
        .iter()
        .map(|h| f64::from(h.n).powi(order as i32) * (h.a.abs() + h.b.abs()))
        .sum::<f64>()
}

fn close(x: f64, y: f64, rel: f64, abs: f64) -> bool {
    (x - y).abs() <= (rel * x.abs().max(y.abs())).max(abs)
}

proptest! {
    #[test]
    fn derivatives_match_central_differences(p in arb_curve(), phi in 0.0..TAU) {
        let h = 1e-5;
        for order in 1..=3u32 {
            let fd = (p.eval(phi + h, order - 1).unwrap()
                - p.eval(phi - h, order - 1).unwrap())
                / (2.0 * h);
            let exact = p.eval(phi, order).unwrap();
            let tol = 1e-9 * derivative_scale(&p, order + 2);
            prop_assert!((fd - exact).abs() <= tol, "order {order}: {fd} vs {exact}");
        }
    }

    #[test]
    fn area_and_deficit_ignore_translation(p in arb_curve(), dx in -5.0..5.0f64, dy in -5.0..5.0f64) {
        let q = p.translate(dx, dy);
        // The n = 1 weights vanish identically, so the sums are bit-equal.
        prop_assert_eq!(functionals::signed_area(&p), functionals::signed_area(&q));
        prop_assert_eq!(
            functionals::isoperimetric_deficit(&p),
            functionals::isoperimetric_deficit(&q)
        );
        prop_assert_eq!(functionals::delta2_squared(&p), functionals::delta2_squared(&q));
    }

    #[test]
    fn functionals_obey_the_scaling_laws(p in arb_curve(), lambda in 0.1..4.0f64) {
        let q = p.scale(lambda);
        prop_assert!(close(functionals::length(&q), lambda * functionals::length(&p), 1e-12, 1e-12));
        let l2 = lambda * lambda;
        for (f, g) in [
            (functionals::signed_area(&q), functionals::signed_area(&p)),
            (functionals::pedal_area(&q), functionals::pedal_area(&p)),
            (functionals::evolute_area(&q), functionals::evolute_area(&p)),
            (functionals::isoperimetric_deficit(&q), functionals::isoperimetric_deficit(&p)),
            (functionals::delta2_squared(&q), functionals::delta2_squared(&p)),
        ] {
            prop_assert!(close(f, l2 * g, 1e-12, 1e-12), "{f} vs {}", l2 * g);
        }
    }

    #[test]
    fn steiner_point_translates_exactly(p in arb_curve(), dx in -5.0..5.0f64, dy in -5.0..5.0f64) {
        // translate(a, b) re-describes the same body from the origin moved
        // to (a, b), so the Steiner coordinates shift the other way.
        let s = p.steiner_point();
        let t = p.translate(dx, dy).steiner_point();
        prop_assert_eq!(t.x, s.x - dx);
        prop_assert_eq!(t.y, s.y - dy);
    }

    #[test]
    fn recentering_kills_the_steiner_point(p in arb_curve()) {
        let q = p.recenter_to_steiner();
        prop_assert_eq!(q.steiner_point().x, 0.0);
        prop_assert_eq!(q.steiner_point().y, 0.0);
        prop_assert_eq!(functionals::signed_area(&p), functionals::signed_area(&q));
    }

    #[test]
    fn constant_width_iff_no_even_content(p in arb_curve()) {
        let has_even = p.harmonics().iter().any(|h| h.n % 2 == 0);
        prop_assert_eq!(p.is_constant_width(0.0), !has_even);
        if p.is_constant_width(0.0) {
            let w0 = p.width(0.0);
            for j in 1..64 {
                let w = p.width(TAU * j as f64 / 64.0);
                prop_assert!(close(w, w0, 1e-12, 1e-12), "width {w} vs {w0}");
            }
        }
    }

    #[test]
    fn curve_files_round_trip_exactly(p in arb_curve()) {
        prop_assert_eq!(parse_curve(&serialize_curve(&p)).unwrap(), p);
    }

    #[test]
    fn sampling_recovers_the_coefficients(p in arb_curve()) {
        let m = (2 * p.degree() as usize + 1).max(32);
        let samples: Vec<f64> = (0..m).map(|k| p.value(TAU * k as f64 / m as f64)).collect();
        let q = FourierSupport::from_samples(&samples, p.degree()).unwrap();
        let scale = derivative_scale(&p, 0);
        prop_assert!((q.a0() - p.a0()).abs() <= 1e-12 * scale);
        for h in p.harmonics() {
            let (a, b) = q.coefficient(h.n);
            prop_assert!((a - h.a).abs() <= 1e-11 * scale, "n {} a {} vs {}", h.n, a, h.a);
            prop_assert!((b - h.b).abs() <= 1e-11 * scale, "n {} b {} vs {}", h.n, b, h.b);
        }
    }

    #[test]
    fn rotation_acts_on_boundary_points(p in arb_curve(), theta in 0.0..TAU, phi in 0.0..TAU) {
        let rotated_curve = p.rotate(theta).boundary_point(phi + theta);
        let rotated_point = p.boundary_point(phi).rotated(theta);
        let tol = 1e-9 * derivative_scale(&p, 1);
        prop_assert!(rotated_curve.distance_to(rotated_point) <= tol);
    }

    #[test]
    fn pedal_point_is_the_foot_of_the_perpendicular(p in arb_curve(), phi in 0.0..TAU) {
        let (c, s) = (phi.cos(), phi.sin());
        let pedal = p.pedal_point(phi);
        let boundary = p.boundary_point(phi);
        let tol = 1e-9 * derivative_scale(&p, 1);
        // The pedal point sits on the tangent line at signed distance p(φ)…
        prop_assert!((pedal.x * c + pedal.y * s - p.value(phi)).abs() <= tol);
        // …and the boundary point lies on the same tangent line.
        prop_assert!(((boundary.x - pedal.x) * c + (boundary.y - pedal.y) * s).abs() <= tol);
    }

    #[test]
    fn parallel_curve_offsets_along_the_normal(p in arb_curve(), phi in 0.0..TAU, r in -2.0..2.0f64) {
        let outer = p.boundary_point(phi);
        let inner = p.parallel_support(r).boundary_point(phi);
        let tol = 1e-9 * derivative_scale(&p, 1) * (1.0 + r.abs());
        prop_assert!((outer.x - inner.x - r * phi.cos()).abs() <= tol);
        prop_assert!((outer.y - inner.y - r * phi.sin()).abs() <= tol);
    }

    #[test]
    fn evolute_support_is_the_rotated_derivative(p in arb_curve(), phi in 0.0..TAU) {
        let e = p.evolute_support();
        let expected = -p.eval(phi + std::f64::consts::FRAC_PI_2, 1).unwrap();
        let tol = 1e-9 * derivative_scale(&p, 1);
        prop_assert!((e.value(phi) - expected).abs() <= tol);
    }

    #[test]
    fn deficit_chain_holds_on_convex_curves(p in arb_convex()) {
        let report = analyze(&p, 1e-9).unwrap();
        let floor = -1e-9 * report.deficit.abs().max(1.0);
        for (name, slack) in report.slacks.entries() {
            prop_assert!(slack >= floor, "{name} slack {slack}");
        }
    }

    #[test]
    fn quadrature_agrees_off_the_convex_cone(p in arb_curve()) {
        let scale = 1.0 + derivative_scale(&p, 2).powi(2);
        for (label, closed, quad) in [
            ("L", functionals::length(&p), quadrature::length(&p)),
            ("F", functionals::signed_area(&p), quadrature::signed_area(&p)),
            ("A", functionals::pedal_area(&p), quadrature::pedal_area(&p)),
            ("F_e", functionals::evolute_area(&p), quadrature::evolute_area(&p)),
            ("gap", functionals::pedal_gap(&p), quadrature::pedal_gap(&p)),
        ] {
            prop_assert!(
                close(closed, quad, 1e-10, 1e-12 * scale),
                "{label}: {closed} vs {quad}"
            );
        }
    }

    #[test]
    fn classification_residual_is_a_mass_fraction(p in arb_curve()) {
        let class = classify_equality(&p, 1e-9);
        prop_assert!((0.0..=1.0).contains(&class.residual), "{}", class.residual);
    }
}
