//! Derived curves and point-level geometry: boundary, pedal, evolute and
//! parallel constructions, rigid motions on coefficients, the canonical
//! cusped curves (astroid, three-cusped hypocycloid), phase normal forms,
//! and similarity detection between generalized curves.
//!
//! Everything that produces a *curve* stays in coefficient space — the
//! evolute, parallel, rotation and scaling of a trigonometric-polynomial
//! support function are again trigonometric polynomials, so no sampling is
//! involved until a caller asks for points.

use std::f64::consts::{FRAC_PI_4, TAU};

use crate::error::{Error, Result};
use crate::support::{FourierSupport, Harmonic, PlanePoint};

impl FourierSupport {
    /// The point of the curve with outward normal angle `phi`: the envelope
    /// of the tangent-line family,
    /// `(p cos φ − p' sin φ, p sin φ + p' cos φ)`.
    pub fn boundary_point(&self, phi: f64) -> PlanePoint {
        let p = self.eval_any(phi, 0);
        let dp = self.eval_any(phi, 1);
        let (s, c) = phi.sin_cos();
        PlanePoint::new(p * c - dp * s, p * s + dp * c)
    }

    /// The foot of the perpendicular from the origin to the tangent line at
    /// normal angle `phi`: the polar point `r = p(φ)`.
    pub fn pedal_point(&self, phi: f64) -> PlanePoint {
        let p = self.eval_any(phi, 0);
        let (s, c) = phi.sin_cos();
        PlanePoint::new(p * c, p * s)
    }

    /// Generalized support function of the evolute, `p_e(φ) = −p'(φ + π/2)`.
    ///
    /// Computed exactly on coefficients: term-wise differentiation followed
    /// by the quarter-turn shift, whose `cos nπ/2, sin nπ/2` factors are
    /// integers chosen by `n mod 4`. The evolute is traced so that its
    /// point at parameter `φ − π/2` is the center of curvature of this
    /// curve at `φ` — the quarter-turn offset is inherent to describing an
    /// envelope of normals by a support function.
    pub fn evolute_support(&self) -> FourierSupport {
        let harmonics = self
            .harmonics()
            .iter()
            .map(|h| {
                let nf = f64::from(h.n);
                // Derivative pair, then shift φ → φ + π/2, then negate.
                let (da, db) = (nf * h.b, -nf * h.a);
                let (c, s) = match h.n % 4 {
                    0 => (1.0, 0.0),
                    1 => (0.0, 1.0),
                    2 => (-1.0, 0.0),
                    _ => (0.0, -1.0),
                };
                Harmonic {
                    n: h.n,
                    a: -(da * c + db * s),
                    b: -(db * c - da * s),
                }
            })
            .collect();
        FourierSupport::from_raw(0.0, harmonics)
    }

    /// Support function of the inner parallel curve at distance `r`:
    /// `a₀ − r`, all harmonics unchanged. Negative `r` offsets outward.
    pub fn parallel_support(&self, r: f64) -> FourierSupport {
        FourierSupport::from_raw(self.a0() - r, self.harmonics().to_vec())
    }

    /// The curve rotated by `theta` about the origin: `q(φ) = p(φ − θ)`,
    /// i.e. each pair turns by `nθ` in coefficient space.
    pub fn rotate(&self, theta: f64) -> FourierSupport {
        let harmonics = self
            .harmonics()
            .iter()
            .map(|h| {
                let (s, c) = (f64::from(h.n) * theta).sin_cos();
                Harmonic {
                    n: h.n,
                    a: h.a * c - h.b * s,
                    b: h.a * s + h.b * c,
                }
            })
            .collect();
        FourierSupport::from_raw(self.a0(), harmonics)
    }

    /// The curve scaled by `lambda` about the origin: every coefficient
    /// multiplied by `lambda`.
    pub fn scale(&self, lambda: f64) -> FourierSupport {
        let harmonics = self
            .harmonics()
            .iter()
            .map(|h| Harmonic {
                n: h.n,
                a: lambda * h.a,
                b: lambda * h.b,
            })
            .collect();
        FourierSupport::from_raw(lambda * self.a0(), harmonics)
    }
}

/// Generalized support function of the astroid traced by
/// `(2a sin³φ, 2a cos³φ)`: the single harmonic `b₂ = a`.
pub fn astroid_support(a: f64) -> FourierSupport {
    FourierSupport::from_raw(0.0, vec![Harmonic { n: 2, a: 0.0, b: a }])
}

/// The astroid point `(2a sin³φ, 2a cos³φ)`.
pub fn astroid_param_point(a: f64, phi: f64) -> PlanePoint {
    let (s, c) = phi.sin_cos();
    PlanePoint::new(2.0 * a * s * s * s, 2.0 * a * c * c * c)
}

/// Generalized support function of the three-cusped hypocycloid (deltoid):
/// the single harmonic `a₃ = a`.
pub fn hypocycloid3_support(a: f64) -> FourierSupport {
    FourierSupport::from_raw(0.0, vec![Harmonic { n: 3, a, b: 0.0 }])
}

/// The deltoid point `(−2a cos t − a cos 2t, −2a sin t + a sin 2t)`.
///
/// The support parametrization of [`hypocycloid3_support`] meets this curve
/// at `t = π − 2φ` (and double-covers it over a full period of `φ`).
pub fn hypocycloid3_param_point(a: f64, t: f64) -> PlanePoint {
    let (s1, c1) = t.sin_cos();
    let (s2, c2) = (2.0 * t).sin_cos();
    PlanePoint::new(-2.0 * a * c1 - a * c2, -2.0 * a * s1 + a * s2)
}

/// Normal form of a single-harmonic curve `a₀ + aₙ cos nφ + bₙ sin nφ`
/// with `n ∈ {2, 3}`.
///
/// For `n = 2` the normal form is `a₀ + amplitude·sin 2u` with
/// `u = φ − φ₀ + π/4`; for `n = 3` it is `a₀ + amplitude·cos 3u` with
/// `u = φ − φ₀`. The amplitude is always taken ≥ 0 (the opposite sign is a
/// phase shift the `phi0` interval absorbs), and `phi0` is normalized to
/// `[0, π)` for `n = 2` and `[0, 2π/3)` for `n = 3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalPhase {
    pub a0: f64,
    pub amplitude: f64,
    pub phi0: f64,
    /// Which family: 2 (astroid-parallel) or 3 (hypocycloid-parallel).
    pub n: u32,
}

impl CanonicalPhase {
    /// Rebuilds the original curve from the normal form: the canonical
    /// series rotated back by the phase shift. Inverse of
    /// [`canonical_phase`] up to rounding.
    pub fn reconstruct(&self) -> FourierSupport {
        match self.n {
            2 => FourierSupport::from_raw(
                self.a0,
                vec![Harmonic {
                    n: 2,
                    a: 0.0,
                    b: self.amplitude,
                }],
            )
            .rotate(self.phi0 - FRAC_PI_4),
            _ => FourierSupport::from_raw(
                self.a0,
                vec![Harmonic {
                    n: 3,
                    a: self.amplitude,
                    b: 0.0,
                }],
            )
            .rotate(self.phi0),
        }
    }
}

/// Computes the [`CanonicalPhase`] of a curve whose harmonic content is a
/// single pair of order 2 or 3.
///
/// Writing the pair as `ρ cos(n(φ − φ₀))` with `nφ₀ = atan2(bₙ, aₙ)` gives
/// the amplitude and raw phase; the sin/cos normal-form conventions and the
/// `phi0` intervals are as documented on [`CanonicalPhase`].
///
/// # Errors
///
/// Anything but exactly one stored harmonic of order 2 or 3 is an
/// invalid-argument error.
pub fn canonical_phase(p: &FourierSupport) -> Result<CanonicalPhase> {
    let [h] = p.harmonics() else {
        return Err(Error::invalid(format!(
            "normal form needs exactly one harmonic, found {}",
            p.harmonics().len()
        )));
    };
    if h.n != 2 && h.n != 3 {
        return Err(Error::invalid(format!(
            "normal form covers harmonic orders 2 and 3, found {}",
            h.n
        )));
    }
    let amplitude = h.a.hypot(h.b);
    // Raw phase lands in (−π/n, π/n]; the normal form repeats under
    // φ₀ → φ₀ + π (n = 2) resp. φ₀ + 2π/3 (n = 3), which is exactly the
    // headroom needed to shift a negative phase into the stated interval.
    let interval = if h.n == 2 {
        std::f64::consts::PI
    } else {
        TAU / 3.0
    };
    let mut phi0 = h.b.atan2(h.a) / f64::from(h.n);
    if phi0 < 0.0 {
        phi0 += interval;
    }
    Ok(CanonicalPhase {
        a0: p.a0(),
        amplitude,
        phi0,
        n: h.n,
    })
}

/// Result of [`similarity_between`]: the homothety ratio and rotation that
/// best map `source` onto `target`, with the residual sup deviation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilarityReport {
    /// Scale factor applied to `source`.
    pub ratio: f64,
    /// Rotation in `[0, 2π)` applied after scaling.
    pub rotation: f64,
    /// Sup over the angle grid of the pointwise deviation.
    pub max_deviation: f64,
    /// Set when either curve is the zero function; `ratio` and `rotation`
    /// carry no meaning then.
    pub degenerate: bool,
}

/// Detects whether `target` is (approximately) `source` scaled and rotated,
/// for generalized supports with pure harmonic content (`a₀ = 0`).
///
/// The scale candidate is the coefficient-norm ratio; rotation candidates
/// come from the per-harmonic phase equations `ψ_target = ψ_source + nθ`
/// (each shared order contributes its `n` solutions mod 2π). Every
/// candidate is scored by the sup over a 1024-angle grid of
/// `|boundary_point(target, φ) − R_θ·boundary_point(scale(source, λ), φ−θ)|`,
/// and the report carries the best; among near-ties the smallest rotation
/// wins, so symmetric curves report their first equivalent angle.
pub fn similarity_between(target: &FourierSupport, source: &FourierSupport) -> SimilarityReport {
    if target.is_zero() || source.is_zero() {
        return SimilarityReport {
            ratio: 0.0,
            rotation: 0.0,
            max_deviation: 0.0,
            degenerate: true,
        };
    }
    let energy = |p: &FourierSupport| p.a0() * p.a0() + p.harmonic_energy();
    let ratio = (energy(target) / energy(source)).sqrt();
    let scaled = source.scale(ratio);

    let mut candidates: Vec<f64> = Vec::new();
    for ht in target.harmonics() {
        let (sa, sb) = source.coefficient(ht.n);
        if sa == 0.0 && sb == 0.0 {
            continue;
        }
        let psi_t = ht.b.atan2(ht.a);
        let psi_s = sb.atan2(sa);
        for k in 0..ht.n {
            let theta = (psi_t - psi_s + TAU * f64::from(k)) / f64::from(ht.n);
            candidates.push(theta.rem_euclid(TAU));
        }
    }
    if candidates.is_empty() {
        // Disjoint spectra: no phase equation. Score the identity rotation
        // so the report still carries an honest (large) deviation.
        candidates.push(0.0);
    }
    candidates.sort_by(f64::total_cmp);
    candidates.dedup_by(|x, y| (*x - *y).abs() < 1e-12);

    const GRID: usize = 1024;
    let scored: Vec<(f64, f64)> = candidates
        .iter()
        .map(|&theta| {
            let mut sup = 0.0f64;
            for j in 0..GRID {
                let phi = TAU * j as f64 / GRID as f64;
                let t = target.boundary_point(phi);
                let s = scaled.boundary_point(phi - theta).rotated(theta);
                sup = sup.max(t.distance_to(s));
            }
            (sup, theta)
        })
        .collect();
    let best_sup = scored.iter().map(|&(s, _)| s).fold(f64::INFINITY, f64::min);
    // Equivalent rotations of a symmetric curve score equal only up to
    // rounding; resolve near-ties toward the smallest angle.
    let tie = best_sup + 1e-9 * energy(target).sqrt().max(1.0);
    let &(sup, theta) = scored
        .iter()
        .find(|&&(s, _)| s <= tie)
        .expect("candidate list is never empty");
    SimilarityReport {
        ratio,
        rotation: theta,
        max_deviation: sup,
        degenerate: false,
    }
}
