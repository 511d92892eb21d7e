//! Support-function curves as truncated Fourier series.
//!
//! A convex plane curve is described here by its support function: the signed
//! distance `p(φ)` from the origin to the tangent line with outward normal
//! `(cos φ, sin φ)`. Storing `p` as a truncated Fourier series
//!
//! ```text
//! p(φ) = a₀ + Σₙ aₙ cos nφ + bₙ sin nφ
//! ```
//!
//! turns every functional of interest (length, area, curvature, width, the
//! Steiner point) into a finite expression in the coefficients, which is what
//! this module exposes. Nothing below assumes convexity: a [`FourierSupport`]
//! may be a *generalized* support function of either sign, which is exactly
//! what inner parallel curves and evolutes produce. Convexity is a property
//! you test ([`FourierSupport::is_convex`]), not an invariant of the type.

use std::fmt;

use std::f64::consts::TAU;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Convexity margin used by default in strict contexts (length units).
///
/// `p + p''` must exceed this for a curve to count as convex. The figure
/// curve `8 + sin 3φ` has `min(p + p'') = 0` exactly, so strict checks
/// reject it; see [`DEGENERATE_CONVEXITY_TOL`].
pub const CONVEXITY_TOL: f64 = 1e-9;

/// Relaxed convexity margin admitting degenerate (cusped) boundary cases,
/// where `min(p + p'')` is zero up to rounding.
pub const DEGENERATE_CONVEXITY_TOL: f64 = -1e-9;

/// One Fourier harmonic of a support function: the pair of coefficients of
/// `cos nφ` and `sin nφ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Harmonic {
    pub n: u32,
    pub a: f64,
    pub b: f64,
}

impl Harmonic {
    /// Coefficient pair after `order` term-wise derivatives:
    /// `d/dφ` maps `(a, b)` to `(n·b, −n·a)`.
    fn derived(self, order: u32) -> (f64, f64) {
        let nf = f64::from(self.n);
        let (mut a, mut b) = (self.a, self.b);
        for _ in 0..order {
            let (da, db) = (nf * b, -nf * a);
            a = da;
            b = db;
        }
        (a, b)
    }

    fn energy(self) -> f64 {
        self.a * self.a + self.b * self.b
    }
}

/// A point of the Euclidean plane, in the same length units as the curve.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub const ORIGIN: PlanePoint = PlanePoint { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        PlanePoint { x, y }
    }

    pub fn distance_to(self, other: PlanePoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// The point rotated about the origin by `theta` radians.
    pub fn rotated(self, theta: f64) -> PlanePoint {
        let (s, c) = theta.sin_cos();
        PlanePoint {
            x: c * self.x - s * self.y,
            y: s * self.x + c * self.y,
        }
    }
}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Truncated Fourier series of a (generalized) support function.
///
/// Harmonics are stored sparsely and kept canonical: sorted by order,
/// at most one entry per order, no all-zero pairs. The degree is the
/// largest stored order (0 for a constant).
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSupport {
    a0: f64,
    harmonics: Vec<Harmonic>,
}

/// Location of the global minimum of `p + p''` over one period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvatureMinimum {
    /// The minimal value of `p + p''` (the signed radius of curvature).
    pub value: f64,
    /// An angle in `[0, 2π)` attaining it.
    pub phi: f64,
}

impl FourierSupport {
    /// The constant support function `p(φ) = a0`: a circle of radius `a0`
    /// centered at the origin (for `a0 > 0`).
    pub fn constant(a0: f64) -> Self {
        FourierSupport {
            a0,
            harmonics: Vec::new(),
        }
    }

    /// Builds a support function from `a0` and `(n, a_n, b_n)` triples.
    ///
    /// # Errors
    ///
    /// Rejects harmonic order 0 (that coefficient is `a0`), duplicate
    /// orders, and non-finite coefficients.
    pub fn new(a0: f64, harmonics: impl IntoIterator<Item = (u32, f64, f64)>) -> Result<Self> {
        if !a0.is_finite() {
            return Err(Error::invalid("a0 must be finite"));
        }
        let mut entries: Vec<Harmonic> = Vec::new();
        for (n, a, b) in harmonics {
            if n == 0 {
                return Err(Error::invalid("harmonic order 0 is the a0 coefficient"));
            }
            if !a.is_finite() || !b.is_finite() {
                return Err(Error::invalid(format!(
                    "coefficients of harmonic {n} must be finite"
                )));
            }
            entries.push(Harmonic { n, a, b });
        }
        entries.sort_by_key(|h| h.n);
        if entries.windows(2).any(|w| w[0].n == w[1].n) {
            return Err(Error::invalid("duplicate harmonic order"));
        }
        Ok(Self::from_raw(a0, entries))
    }

    /// Canonicalizes a coefficient list that is already sorted and free of
    /// duplicates: drops exact zero pairs. Internal fast path.
    pub(crate) fn from_raw(a0: f64, mut harmonics: Vec<Harmonic>) -> Self {
        debug_assert!(a0.is_finite());
        debug_assert!(harmonics.windows(2).all(|w| w[0].n < w[1].n));
        debug_assert!(harmonics.iter().all(|h| h.a.is_finite() && h.b.is_finite()));
        harmonics.retain(|h| h.a != 0.0 || h.b != 0.0);
        FourierSupport { a0, harmonics }
    }

    /// The mean value `a₀` (the mean width is `2a₀`).
    pub fn a0(&self) -> f64 {
        self.a0
    }

    /// The stored harmonics, sorted by order, zero pairs omitted.
    pub fn harmonics(&self) -> &[Harmonic] {
        &self.harmonics
    }

    /// The largest stored harmonic order, 0 for a constant.
    pub fn degree(&self) -> u32 {
        self.harmonics.last().map_or(0, |h| h.n)
    }

    /// The coefficient pair `(a_n, b_n)` for `n ≥ 1`, zeros when absent.
    pub fn coefficient(&self, n: u32) -> (f64, f64) {
        match self.harmonics.binary_search_by_key(&n, |h| h.n) {
            Ok(i) => (self.harmonics[i].a, self.harmonics[i].b),
            Err(_) => (0.0, 0.0),
        }
    }

    /// True for the identically-zero function.
    pub fn is_zero(&self) -> bool {
        self.a0 == 0.0 && self.harmonics.is_empty()
    }

    /// Total spectral energy of the harmonic part, `Σ (a_n² + b_n²)`.
    pub(crate) fn harmonic_energy(&self) -> f64 {
        self.harmonics.iter().map(|h| h.energy()).sum()
    }

    /// `p(φ)`. Shorthand for [`eval`](Self::eval) at order 0.
    pub fn value(&self, phi: f64) -> f64 {
        self.eval_any(phi, 0)
    }

    /// The `order`-th derivative of `p` at `phi`, by term-wise
    /// differentiation of the series.
    ///
    /// # Errors
    ///
    /// Orders above 3 are not part of the public surface (nothing geometric
    /// needs them) and yield an invalid-argument error.
    pub fn eval(&self, phi: f64, order: u32) -> Result<f64> {
        if order > 3 {
            return Err(Error::invalid(format!(
                "derivative order {order} is outside 0..=3"
            )));
        }
        Ok(self.eval_any(phi, order))
    }

    /// Series evaluation at any derivative order. Internal: refinement of
    /// curvature minima needs order 4.
    pub(crate) fn eval_any(&self, phi: f64, order: u32) -> f64 {
        let phi = phi.rem_euclid(TAU);
        let mut acc = if order == 0 { self.a0 } else { 0.0 };
        for h in &self.harmonics {
            let (a, b) = h.derived(order);
            let (s, c) = (f64::from(h.n) * phi).sin_cos();
            acc += a * c + b * s;
        }
        acc
    }

    /// Values of the `order`-th derivative on the uniform grid
    /// `φ_k = 2πk/m`, `k = 0..m`.
    ///
    /// Walks `(cos nφ, sin nφ)` up the harmonic orders by angle addition,
    /// one `sin_cos` per grid point; this keeps dense scans cheap for the
    /// sweep harness.
    pub(crate) fn sample_series(&self, m: usize, order: u32) -> Vec<f64> {
        assert!(m > 0, "empty sample grid");
        let c0 = if order == 0 { self.a0 } else { 0.0 };
        let derived: Vec<(u32, f64, f64)> = self
            .harmonics
            .iter()
            .map(|h| {
                let (a, b) = h.derived(order);
                (h.n, a, b)
            })
            .collect();
        let step = TAU / m as f64;
        let mut out = Vec::with_capacity(m);
        for k in 0..m {
            let phi = step * k as f64;
            let (s1, c1) = phi.sin_cos();
            let (mut cn, mut sn) = (1.0, 0.0);
            let mut n_cur = 0u32;
            let mut acc = c0;
            for &(n, a, b) in &derived {
                while n_cur < n {
                    let c = cn * c1 - sn * s1;
                    let s = sn * c1 + cn * s1;
                    cn = c;
                    sn = s;
                    n_cur += 1;
                }
                acc += a * cn + b * sn;
            }
            out.push(acc);
        }
        out
    }

    /// The signed radius of curvature `p(φ) + p''(φ)`.
    ///
    /// Positive everywhere exactly when the curve is convex; the metric
    /// radius is its absolute value.
    pub fn radius_of_curvature(&self, phi: f64) -> f64 {
        self.eval_any(phi, 0) + self.eval_any(phi, 2)
    }

    /// The series of `p + p''`: coefficient pairs scaled by `1 − n²`
    /// (which annihilates `n = 1`).
    pub(crate) fn curvature_series(&self) -> FourierSupport {
        let harmonics = self
            .harmonics
            .iter()
            .filter_map(|h| {
                let nf = f64::from(h.n);
                let w = 1.0 - nf * nf;
                if w == 0.0 {
                    None
                } else {
                    Some(Harmonic {
                        n: h.n,
                        a: w * h.a,
                        b: w * h.b,
                    })
                }
            })
            .collect();
        FourierSupport::from_raw(self.a0, harmonics)
    }

    /// Global minimum of `p + p''` over `[0, 2π)`.
    ///
    /// Dense uniform sampling (grid size `max(4096, 64·degree)`) locates the
    /// candidate basins; golden-section plus a Newton polish on `p' + p'''`
    /// refines the deepest ones. Accurate to about 1e−12 relative for
    /// degrees up to 64.
    pub fn min_curvature_radius(&self) -> CurvatureMinimum {
        let r = self.curvature_series();
        if r.harmonics.is_empty() {
            return CurvatureMinimum {
                value: r.a0,
                phi: 0.0,
            };
        }
        let m = (64 * r.degree() as usize).max(4096);
        let samples = r.sample_series(m, 0);
        let step = TAU / m as f64;

        // Grid-local minima, deepest first. Refining several basins guards
        // against near-ties where the global winner is not the deepest
        // grid sample.
        let mut basins: Vec<usize> = (0..m)
            .filter(|&k| {
                let prev = samples[(k + m - 1) % m];
                let next = samples[(k + 1) % m];
                samples[k] <= prev && samples[k] <= next
            })
            .collect();
        basins.sort_by(|&i, &j| samples[i].total_cmp(&samples[j]));
        basins.truncate(8);

        let mut best = CurvatureMinimum {
            value: f64::INFINITY,
            phi: 0.0,
        };
        for &k in &basins {
            let mut local = CurvatureMinimum {
                value: samples[k],
                phi: step * k as f64,
            };
            let lo = step * (k as f64 - 1.0);
            let hi = step * (k as f64 + 1.0);
            let (gphi, gval) = golden_min(|x| r.eval_any(x, 0), lo, hi);
            if gval < local.value {
                local = CurvatureMinimum {
                    value: gval,
                    phi: gphi,
                };
            }
            // Newton on the stationarity condition r'(φ) = 0, kept inside
            // the bracket and only while the basin stays locally convex.
            let mut phi = local.phi;
            for _ in 0..6 {
                let d1 = r.eval_any(phi, 1);
                let d2 = r.eval_any(phi, 2);
                if d2 <= 0.0 {
                    break;
                }
                let delta = d1 / d2;
                if !delta.is_finite() || delta.abs() > step {
                    break;
                }
                phi -= delta;
                if delta.abs() < 1e-15 {
                    break;
                }
            }
            let pval = r.eval_any(phi, 0);
            if pval < local.value {
                local = CurvatureMinimum { value: pval, phi };
            }
            if local.value < best.value {
                best = local;
            }
        }
        best.phi = best.phi.rem_euclid(TAU);
        best
    }

    /// Whether `min(p + p'') > tol`; i.e. the curve is convex with margin
    /// `tol` (which may be negative to admit degenerate cusps).
    pub fn is_convex(&self, tol: f64) -> bool {
        self.min_curvature_radius().value > tol
    }

    /// The Steiner point `(a₁, b₁)` — the curvature centroid of the curve.
    pub fn steiner_point(&self) -> PlanePoint {
        let (a1, b1) = self.coefficient(1);
        PlanePoint { x: a1, y: b1 }
    }

    /// The same curve described from the origin shifted to `(a, b)`:
    /// `q(φ) = p(φ) − a cos φ − b sin φ`.
    pub fn translate(&self, a: f64, b: f64) -> FourierSupport {
        let mut harmonics = self.harmonics.clone();
        match harmonics.binary_search_by_key(&1, |h| h.n) {
            Ok(i) => {
                harmonics[i].a -= a;
                harmonics[i].b -= b;
            }
            Err(i) => harmonics.insert(i, Harmonic { n: 1, a: -a, b: -b }),
        }
        FourierSupport::from_raw(self.a0, harmonics)
    }

    /// The curve re-described from its Steiner point: the `n = 1` harmonic
    /// is removed exactly. Equal to `translate` by the Steiner point and
    /// idempotent.
    pub fn recenter_to_steiner(&self) -> FourierSupport {
        let harmonics = self
            .harmonics
            .iter()
            .copied()
            .filter(|h| h.n != 1)
            .collect();
        FourierSupport::from_raw(self.a0, harmonics)
    }

    /// The width in direction `φ`: `p(φ) + p(φ + π)`.
    pub fn width(&self, phi: f64) -> f64 {
        self.value(phi) + self.value(phi + std::f64::consts::PI)
    }

    /// Whether the width is constant to within `tol`.
    ///
    /// Spectrally: every stored even harmonic of order ≥ 2 must have
    /// `max(|a_n|, |b_n|) ≤ tol` — odd harmonics cancel in
    /// `p(φ) + p(φ + π)` and never affect the width.
    pub fn is_constant_width(&self, tol: f64) -> bool {
        self.harmonics
            .iter()
            .filter(|h| h.n % 2 == 0)
            .all(|h| h.a.abs().max(h.b.abs()) <= tol)
    }

    /// Deterministic pseudo-random convex curve for sweep harnesses.
    ///
    /// Fixes `a₀ = 1` and no `n = 1` term, draws the pair for each
    /// `2 ≤ n ≤ degree` i.i.d. uniform in `[−1, 1]·n⁻³`, then rescales the
    /// whole harmonic part by the largest `λ ≤ 1` keeping the sampled grid
    /// minimum of `p + p''` at or above `min_radius` (bisection; `λ = 0`
    /// falls back to the unit circle). `min_radius` should stay well above
    /// the grid resolution error, i.e. `≫ 1e−5` for unit-scale curves.
    pub fn random_convex(degree: u32, seed: u64, min_radius: f64) -> FourierSupport {
        Self::random_convex_filtered(degree, seed, min_radius, false)
    }

    /// `random_convex` with an optional parity filter: `odd_only` drops the
    /// even harmonics (n ≥ 2) *before* the convexity rescaling, yielding
    /// constant-width curves without disturbing the random stream.
    pub(crate) fn random_convex_filtered(
        degree: u32,
        seed: u64,
        min_radius: f64,
        odd_only: bool,
    ) -> FourierSupport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut harmonics = Vec::new();
        for n in 2..=degree {
            let scale = f64::from(n).powi(-3);
            let a = rng.gen_range(-1.0..=1.0) * scale;
            let b = rng.gen_range(-1.0..=1.0) * scale;
            if !odd_only || n % 2 == 1 {
                harmonics.push(Harmonic { n, a, b });
            }
        }
        let shape = FourierSupport::from_raw(0.0, harmonics);
        let lambda = shape.convexity_rescale(degree, min_radius);
        let harmonics = shape
            .harmonics
            .iter()
            .map(|h| Harmonic {
                n: h.n,
                a: lambda * h.a,
                b: lambda * h.b,
            })
            .collect();
        FourierSupport::from_raw(1.0, harmonics)
    }

    /// Largest `λ ≤ 1` with `1 + λ·min_grid(g) ≥ min_radius`, where `g` is
    /// the harmonic part of this shape's `p + p''`. Affine in `λ`, but the
    /// contract is bisection on the grid minimum, which also survives any
    /// future non-affine predicate.
    fn convexity_rescale(&self, degree: u32, min_radius: f64) -> f64 {
        let g = self.curvature_series();
        debug_assert_eq!(g.a0, 0.0);
        if g.harmonics.is_empty() {
            return 1.0;
        }
        let m = (64 * degree as usize).max(4096);
        let gmin = g
            .sample_series(m, 0)
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        let feasible = |lambda: f64| 1.0 + lambda * gmin >= min_radius;
        if feasible(1.0) {
            return 1.0;
        }
        if !feasible(0.0) {
            return 0.0;
        }
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if feasible(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// Discrete Fourier analysis of `values[k] = p(2πk/M)` up to `degree`.
    ///
    /// Exact (to rounding) when the samples come from a series of degree
    /// ≤ `degree`, by discrete orthogonality.
    ///
    /// # Errors
    ///
    /// Needs `M ≥ 2·degree + 1` samples to resolve `degree`; fewer is an
    /// invalid-argument error, as are non-finite samples.
    pub fn from_samples(values: &[f64], degree: u32) -> Result<FourierSupport> {
        let m = values.len();
        if m < 2 * degree as usize + 1 {
            return Err(Error::invalid(format!(
                "{m} samples cannot resolve degree {degree}: need at least 2N+1"
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("samples must be finite"));
        }
        let mf = m as f64;
        let a0 = values.iter().sum::<f64>() / mf;
        let mut harmonics = Vec::with_capacity(degree as usize);
        for n in 1..=degree {
            let mut ca = 0.0;
            let mut cb = 0.0;
            for (k, &v) in values.iter().enumerate() {
                let (s, c) = (TAU * f64::from(n) * k as f64 / mf).sin_cos();
                ca += v * c;
                cb += v * s;
            }
            harmonics.push(Harmonic {
                n,
                a: 2.0 * ca / mf,
                b: 2.0 * cb / mf,
            });
        }
        Ok(FourierSupport::from_raw(a0, harmonics))
    }
}

impl fmt::Display for FourierSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a0)?;
        for h in &self.harmonics {
            if h.a != 0.0 {
                let sign = if h.a < 0.0 { " - " } else { " + " };
                write!(f, "{sign}{} cos({}φ)", h.a.abs(), h.n)?;
            }
            if h.b != 0.0 {
                let sign = if h.b < 0.0 { " - " } else { " + " };
                write!(f, "{sign}{} sin({}φ)", h.b.abs(), h.n)?;
            }
        }
        Ok(())
    }
}

/// Golden-section minimization on `[lo, hi]`; returns the best probe.
fn golden_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..40 {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}
