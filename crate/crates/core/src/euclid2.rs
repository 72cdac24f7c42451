//! Planar Euclidean curvature and its arc-length derivative.

use crate::curve::{PolyCurve2, SignatureCurve, SignatureSample};
use crate::error::{Error, Result};
use crate::geom::{coincident, distance, heron_area, turn2, Coords, Point2, TriangleSides};

/// Finite-difference rule for κ_s.
///
/// `S1` and `S2` are the classical one-sided and symmetric quotients; they
/// only converge when neighboring chords are nearly equal. `S3`..`S5` weight
/// the chords so they converge on arbitrary partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KappaSVariant {
    S1,
    S2,
    S3,
    S4,
    #[default]
    S5,
}

impl KappaSVariant {
    pub const ALL: [KappaSVariant; 5] = [Self::S1, Self::S2, Self::S3, Self::S4, Self::S5];
}

/// Chord lengths of a five-point window `P_{i−2}..P_{i+2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Chords {
    /// `|P_{i−2}P_{i−1}|`
    pub g: f64,
    /// `|P_{i−1}P_i|`
    pub a: f64,
    /// `|P_iP_{i+1}|`
    pub b: f64,
    /// `|P_{i+1}P_{i+2}|`
    pub d: f64,
    /// `|P_{i−1}P_{i+1}|`
    pub c: f64,
}

impl Chords {
    pub fn of<P: Coords>(w: &[P; 5]) -> Self {
        Self {
            g: distance(w[0], w[1]),
            a: distance(w[1], w[2]),
            b: distance(w[2], w[3]),
            d: distance(w[3], w[4]),
            c: distance(w[1], w[3]),
        }
    }
}

/// Curvature estimates at `P_{i−1}, P_i, P_{i+1}` together with the chords.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaStencil {
    pub chords: Chords,
    pub k_minus: f64,
    pub k0: f64,
    pub k_plus: f64,
}

impl KappaStencil {
    pub fn kappa_s(&self, v: KappaSVariant) -> f64 {
        match v {
            KappaSVariant::S1 => kappa_s_v1(self),
            KappaSVariant::S2 => kappa_s_v2(self),
            KappaSVariant::S3 => kappa_s_v3(self),
            KappaSVariant::S4 => kappa_s_v4(self),
            KappaSVariant::S5 => kappa_s_v5(self),
        }
    }
}

/// One-sided quotient `(κ₊ − κ₀)/b`.
pub fn kappa_s_v1(s: &KappaStencil) -> f64 {
    (s.k_plus - s.k0) / s.chords.b
}

/// Symmetric quotient `(κ₊ − κ₋)/c`.
pub fn kappa_s_v2(s: &KappaStencil) -> f64 {
    (s.k_plus - s.k_minus) / s.chords.c
}

/// `3(κ₊ − κ₀)/(a+b+d)`.
pub fn kappa_s_v3(s: &KappaStencil) -> f64 {
    let Chords { a, b, d, .. } = s.chords;
    3.0 * (s.k_plus - s.k0) / (a + b + d)
}

/// Average of the forward rule and its mirror image.
pub fn kappa_s_v4(s: &KappaStencil) -> f64 {
    let Chords { g, a, b, d, .. } = s.chords;
    1.5 * (s.k_plus - s.k0) / (a + b + d) + 1.5 * (s.k0 - s.k_minus) / (a + b + g)
}

/// Centered rule `3(κ₊ − κ₋)/(2a+2b+d+g)`.
pub fn kappa_s_v5(s: &KappaStencil) -> f64 {
    let Chords { g, a, b, d, .. } = s.chords;
    3.0 * (s.k_plus - s.k_minus) / (2.0 * a + 2.0 * b + d + g)
}

/// Signed curvature of the circle through three points, `±4Δ/(abc)`.
///
/// Positive when `Pm → P0 → Pp` turns counterclockwise. Triples that are
/// collinear to within coordinate rounding return exactly zero.
pub fn kappa_tilde(pm: Point2, p0: Point2, pp: Point2) -> Result<f64> {
    if coincident(pm, p0) || coincident(p0, pp) || coincident(pm, pp) {
        return Err(Error::DuplicatePoints { index: None });
    }
    let Some(cross) = turn2(pm, p0, pp) else {
        return Ok(0.0);
    };
    let sides = TriangleSides::of(pm, p0, pp);
    let mag = 4.0 * heron_area(sides)? / (sides.a * sides.b * sides.c);
    Ok(mag.copysign(cross))
}

/// Builds the κ_s stencil of a five-point window.
pub fn stencil2(w: &[Point2; 5]) -> Result<KappaStencil> {
    Ok(KappaStencil {
        chords: Chords::of(w),
        k_minus: kappa_tilde(w[0], w[1], w[2])?,
        k0: kappa_tilde(w[1], w[2], w[3])?,
        k_plus: kappa_tilde(w[2], w[3], w[4])?,
    })
}

/// Planar Euclidean signature `(κ̃, κ̃_s)` at every index with a full stencil.
pub fn euclid_signature2(curve: &PolyCurve2, variant: KappaSVariant) -> Result<SignatureCurve> {
    let range = curve.admissible(2, 2)?;
    let mut samples = Vec::with_capacity(range.len());
    for i in range {
        let w = curve.window::<5>(i, 2).expect("admissible index");
        // Attribute a failure to the point whose curvature could not be formed.
        let st = stencil2(&w).map_err(|e| e.at_index(i))?;
        samples.push(SignatureSample {
            index: i,
            t: curve.param(i),
            kappa: st.k0,
            kappa_s: st.kappa_s(variant),
            tau: None,
            tau_s: None,
        });
    }
    Ok(SignatureCurve {
        samples,
        skipped: Vec::new(),
    })
}
