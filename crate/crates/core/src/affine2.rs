//! Planar equi-affine curvature and its affine arc-length derivative.
//!
//! Everything here is built from signed parallelogram areas, which are
//! unchanged by area-preserving linear maps and translations.

use crate::curve::{PolyCurve2, SignatureCurve, SignatureSample};
use crate::error::{Error, Result};
use crate::geom::{
    bracket_checked, signed_parallelogram3 as br3, signed_parallelogram4 as br4, Point2,
};

/// Formula for the derivative of affine curvature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AffineVariant {
    /// `(κ̃₊ − κ̃₋)/(S̃_i + S̃_{i−1})`, consistent only on near-regular partitions.
    Old,
    /// `5(κ̃₊ − κ̃₋)` over the (1,2,2,2,2,1)-weighted sum of six segment lengths.
    #[default]
    New,
}

/// How the affine length `S̃_j` of the segment `P_j P_{j+1}` is estimated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SegmentRule {
    /// Exact-on-parabolas estimate from the four points `P_{j−1}..P_{j+2}`
    /// (window shifted to stay inside the seven-point stencil).
    #[default]
    FourPoint,
    /// `|[j, j+1, j+2]|^{1/3}`.
    TriangleForward,
    /// `|[j−1, j, j+1]|^{1/3}`.
    TriangleBackward,
}

impl SegmentRule {
    /// Stencil reach `(back, forward)` around the center index.
    pub fn reach(self) -> (usize, usize) {
        match self {
            SegmentRule::FourPoint => (3, 3),
            SegmentRule::TriangleForward => (3, 4),
            SegmentRule::TriangleBackward => (4, 3),
        }
    }
}

/// `[lmn]`, failing when the three points are collinear to within rounding.
fn bracket(pl: Point2, pm: Point2, pn: Point2) -> Result<f64> {
    bracket_checked(pl, pm, pn).ok_or(Error::DegenerateConfiguration { index: None })
}

/// All ten brackets `[lmn]`, `l < m < n`, in lexicographic order.
fn brackets10(p: &[Point2; 5]) -> Result<[f64; 10]> {
    let mut out = [0.0; 10];
    let mut k = 0;
    for l in 0..5 {
        for m in l + 1..5 {
            for n in m + 1..5 {
                out[k] = bracket(p[l], p[m], p[n])?;
                k += 1;
            }
        }
    }
    Ok(out)
}

/// `T = ¼ ∏ [lmn]` over the ten triples of five points.
pub fn t_invariant(p: &[Point2; 5]) -> Result<f64> {
    Ok(0.25 * brackets10(p)?.iter().product::<f64>())
}

/// The quartic bracket polynomial `S` of five points.
pub fn s_invariant(p: &[Point2; 5]) -> Result<f64> {
    brackets10(p)?;
    let b = |i: usize, j: usize, k: usize| br3(p[i], p[j], p[k]);
    let b4 = |i: usize, j: usize, k: usize, l: usize| br4(p[i], p[j], p[k], p[l]);
    let (b012, b013, b024, b034) = (b(0, 1, 2), b(0, 1, 3), b(0, 2, 4), b(0, 3, 4));
    let s4 = (b013 * b024 * b4(1, 2, 3, 4)).powi(2) + (b012 * b034 * b4(1, 3, 2, 4)).powi(2)
        - 2.0 * b012 * b034 * b013 * b024 * (b(1, 2, 3) * b(2, 3, 4) + b(1, 2, 4) * b(1, 3, 4));
    Ok(0.25 * s4)
}

/// Affine curvature estimate at the middle of five points, `−S/T^{2/3}`.
///
/// With the bracket conventions used here, `S/T^{2/3}` comes out with the
/// opposite sign to the affine curvature (−1 on the unit circle), hence the
/// leading minus. `T^{2/3}` is the squared real cube root, so clockwise
/// windows (negative `T`) are handled too.
pub fn affine_kappa(p: &[Point2; 5]) -> Result<f64> {
    let t = t_invariant(p)?;
    let s = s_invariant(p)?;
    Ok(-s / t.cbrt().powi(2))
}

/// Ok when all ten brackets of the window are nonzero with a common sign.
pub fn check_convex(p: &[Point2; 5]) -> Result<()> {
    let b = brackets10(p)?;
    if b.iter().all(|v| *v > 0.0) || b.iter().all(|v| *v < 0.0) {
        Ok(())
    } else {
        Err(Error::DegenerateConfiguration { index: None })
    }
}

/// Triangle estimate `(2Δ)^{1/3}` of the affine length from `P_j` to `P_{j+1}`.
pub fn affine_segment_length(pj: Point2, pj1: Point2, pj2: Point2) -> Result<f64> {
    Ok(bracket(pj, pj1, pj2)?.abs().cbrt())
}

/// Affine lengths of the three segments of a convex four-point window.
///
/// On a parabola parametrized by affine arc length every bracket equals
/// `D_ij·D_jk·D_ik/2`, where `D` are parameter gaps, so bracket ratios
/// determine the gaps exactly:
/// `D01/D23 = √([012][013]/([023][123]))`, `D03/D12 = √([023][013]/([012][123]))`.
pub fn four_point_segments(q: &[Point2; 4]) -> Result<[f64; 3]> {
    let b012 = bracket(q[0], q[1], q[2])?;
    let b013 = bracket(q[0], q[1], q[3])?;
    let b023 = bracket(q[0], q[2], q[3])?;
    let b123 = bracket(q[1], q[2], q[3])?;
    let r2 = b012 * b013 / (b023 * b123);
    let m2 = b023 * b013 / (b012 * b123);
    if !(r2 > 0.0 && m2 > 1.0) {
        return Err(Error::DegenerateConfiguration { index: None });
    }
    let r = r2.sqrt();
    let q_ratio = (m2.sqrt() - 1.0) / (1.0 + r);
    let p_ratio = r * q_ratio;
    let u = (2.0 * b012 / (p_ratio * (1.0 + p_ratio))).abs().cbrt();
    Ok([p_ratio * u, u, q_ratio * u])
}

/// Denominator of the corrected formula for segment lengths `S̃_{i−3}..S̃_{i+2}`.
pub fn new_denominator(s: &[f64; 6]) -> f64 {
    s[0] + 2.0 * (s[1] + s[2] + s[3] + s[4]) + s[5]
}

/// Curvature values and segment lengths around one center index.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineStencil {
    pub k_minus: f64,
    pub k0: f64,
    pub k_plus: f64,
    /// `S̃_{i−3}, …, S̃_{i+2}`.
    pub segments: [f64; 6],
}

impl AffineStencil {
    /// Builds the stencil from `window`, which holds `P_{i−back}..P_{i+fwd}`
    /// for the reach of `rule`. Every five-point curvature window must be
    /// convex.
    pub fn new(window: &[Point2], rule: SegmentRule) -> Result<Self> {
        let (back, fwd) = rule.reach();
        if window.len() != back + fwd + 1 {
            return Err(Error::TooFewPoints {
                needed: back + fwd + 1,
                got: window.len(),
            });
        }
        let at = |rel: isize| window[(back as isize + rel) as usize];
        let kappa_at = |rel: isize| -> Result<f64> {
            let w = [at(rel - 2), at(rel - 1), at(rel), at(rel + 1), at(rel + 2)];
            check_convex(&w)?;
            affine_kappa(&w)
        };
        let (k_minus, k0, k_plus) = (kappa_at(-1)?, kappa_at(0)?, kappa_at(1)?);
        let mut segments = [0.0; 6];
        for (slot, j) in segments.iter_mut().zip(-3isize..=2) {
            *slot = match rule {
                SegmentRule::FourPoint => {
                    let s = (j - 1).clamp(-3, 0);
                    let segs = four_point_segments(&[at(s), at(s + 1), at(s + 2), at(s + 3)])?;
                    segs[(j - s) as usize]
                }
                SegmentRule::TriangleForward => affine_segment_length(at(j), at(j + 1), at(j + 2))?,
                SegmentRule::TriangleBackward => {
                    affine_segment_length(at(j - 1), at(j), at(j + 1))?
                }
            };
        }
        Ok(Self {
            k_minus,
            k0,
            k_plus,
            segments,
        })
    }

    pub fn kappa_s(&self, v: AffineVariant) -> f64 {
        match v {
            AffineVariant::Old => affine_kappa_s_old(self),
            AffineVariant::New => affine_kappa_s_new(self),
        }
    }
}

pub fn affine_kappa_s_old(s: &AffineStencil) -> f64 {
    (s.k_plus - s.k_minus) / (s.segments[3] + s.segments[2])
}

pub fn affine_kappa_s_new(s: &AffineStencil) -> f64 {
    5.0 * (s.k_plus - s.k_minus) / new_denominator(&s.segments)
}

/// Affine signature `(κ̃, κ̃_s)` at every index with a full convex stencil.
///
/// Indices whose stencil is degenerate or non-convex (typically near
/// inflections) are listed in `skipped`. If no index survives, the first
/// such error is returned.
pub fn affine_signature(
    curve: &PolyCurve2,
    variant: AffineVariant,
    rule: SegmentRule,
) -> Result<SignatureCurve> {
    let (back, fwd) = rule.reach();
    let range = curve.admissible(back, fwd)?;
    let mut sig = SignatureCurve::default();
    let mut window = Vec::with_capacity(back + fwd + 1);
    for i in range {
        window.clear();
        window.extend(
            (-(back as isize)..=fwd as isize)
                .map(|k| curve.at(i as isize + k).expect("admissible")),
        );
        match AffineStencil::new(&window, rule) {
            Ok(st) => sig.samples.push(SignatureSample {
                index: i,
                t: curve.param(i),
                kappa: st.k0,
                kappa_s: st.kappa_s(variant),
                tau: None,
                tau_s: None,
            }),
            Err(e @ Error::DegenerateConfiguration { .. }) => sig.skipped.push((i, e.at_index(i))),
            Err(e) => return Err(e.at_index(i)),
        }
    }
    if sig.samples.is_empty() {
        if let Some((_, e)) = sig.skipped.first() {
            return Err(e.clone());
        }
    }
    Ok(sig)
}
