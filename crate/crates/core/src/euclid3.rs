//! Space-curve curvature, torsion and their arc-length derivatives.

use crate::curve::{PolyCurve3, SignatureCurve, SignatureSample};
use crate::error::{Error, Result};
use crate::euclid2::{Chords, KappaSVariant, KappaStencil};
use crate::geom::{
    coincident, collinear3, distance, heron_area, tetra_height, volume6_checked, Point3,
    TetraDistances, TriangleSides, CLAMP_TOL,
};

/// Orientation constant relating the chord triple product to the torsion
/// sign convention `τ = −(α_t × α_tt · α_ttt)/|α_t × α_tt|²`.
pub const TORSION_SIGN: f64 = -1.0;

/// Curvature below `VANISHING_KAPPA / span` makes torsion undefined.
pub const VANISHING_KAPPA: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TauVariant {
    /// `6H/(d e f κ̃)`
    #[default]
    T1,
    /// `(3/2)·H b/(f Δ_ebd)`
    T2,
}

/// How the tetrahedron height `H` is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HeightRoute {
    /// Triple product of successive chords over the Heron base area.
    #[default]
    SignedVolume,
    /// Cayley–Menger determinant of the six distances. Purely metric, but
    /// loses roughly `ε/h⁴` relative accuracy on fine partitions.
    CayleyMenger,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Sig3Options {
    pub kappa_s: KappaSVariant,
    pub tau: TauVariant,
    pub height: HeightRoute,
}

/// Unsigned curvature of the circle through three points, `4Δ/(abc)`.
pub fn kappa3(pm: Point3, p0: Point3, pp: Point3) -> Result<f64> {
    if coincident(pm, p0) || coincident(p0, pp) || coincident(pm, pp) {
        return Err(Error::DuplicatePoints { index: None });
    }
    if collinear3(pm, p0, pp) {
        return Ok(0.0);
    }
    let s = TriangleSides::of(pm, p0, pp);
    Ok(4.0 * heron_area(s)? / (s.a * s.b * s.c))
}

/// κ_s stencil of a five-point window in space.
pub fn stencil3(w: &[Point3; 5]) -> Result<KappaStencil> {
    Ok(KappaStencil {
        chords: Chords::of(w),
        k_minus: kappa3(w[0], w[1], w[2])?,
        k0: kappa3(w[1], w[2], w[3])?,
        k_plus: kappa3(w[2], w[3], w[4])?,
    })
}

pub fn kappa_s3(w: &[Point3; 5], variant: KappaSVariant) -> Result<f64> {
    Ok(stencil3(w)?.kappa_s(variant))
}

/// Geometry of the four points `Pm, P0, Pp, Pq` shared by both torsion rules.
struct Tetra {
    dist: TetraDistances,
    /// Signed height; zero for coplanar points.
    height: f64,
}

fn tetra(p: [Point3; 4], route: HeightRoute) -> Result<Tetra> {
    let [pm, p0, pp, pq] = p;
    let dist = TetraDistances::of(pm, p0, pp, pq);
    let base_area = heron_area(dist.base())?;
    let span = dist.a.max(dist.b).max(dist.c);
    if base_area <= CLAMP_TOL * span * span {
        return Err(Error::DegenerateBase { index: None });
    }
    let Some(vol6) = volume6_checked(pm, p0, pp, pq) else {
        return Ok(Tetra { dist, height: 0.0 });
    };
    let magnitude = match route {
        HeightRoute::SignedVolume => vol6.abs() / (2.0 * base_area),
        HeightRoute::CayleyMenger => tetra_height(dist)?,
    };
    Ok(Tetra {
        dist,
        height: TORSION_SIGN * magnitude.copysign(vol6),
    })
}

fn check_kappa(kappa: f64, span: f64) -> Result<()> {
    if kappa.abs() < VANISHING_KAPPA / span {
        Err(Error::VanishingCurvature { index: None })
    } else {
        Ok(())
    }
}

/// `τ̃₁ = 6H/(d e f κ̃)` at `P0`, where `kappa` is the curvature estimate at `P0`.
pub fn tau1(p: [Point3; 4], kappa: f64, route: HeightRoute) -> Result<f64> {
    let t = tetra(p, route)?;
    let TetraDistances { d, e, f, .. } = t.dist;
    check_kappa(kappa, f)?;
    Ok(6.0 * t.height / (d * e * f * kappa))
}

/// `τ̃₂ = (3/2)·H b/(f Δ_ebd)` at `P0`.
pub fn tau2(p: [Point3; 4], route: HeightRoute) -> Result<f64> {
    let t = tetra(p, route)?;
    let TetraDistances { b, d, e, f, .. } = t.dist;
    let area_ebd = heron_area(TriangleSides { a: e, b, c: d })?;
    let span = e.max(b).max(d);
    if area_ebd <= CLAMP_TOL * span * span || f <= CLAMP_TOL * span {
        return Err(Error::DegenerateBase { index: None });
    }
    Ok(1.5 * t.height * b / (f * area_ebd))
}

/// Inputs of the τ_s stencil: τ̃₁ at `P_{i−1}, P_i, P_{i+1}` and the chords
/// `g, a, b, d, h` of the window `P_{i−2}..P_{i+3}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorsionStencil {
    pub chords: Chords,
    /// `|P_{i+2}P_{i+3}|`
    pub h: f64,
    pub tau_minus: f64,
    pub tau0: f64,
    pub tau_plus: f64,
}

/// `4[τ̃₁₊ − τ̃₁₋ + (2a+2b−2d−3h+g)·τ̃₁κ̃_s/(6κ̃)]/(2a+2b+2d+h+g)`.
pub fn tau_s(st: &TorsionStencil, kappa: f64, kappa_s: f64) -> f64 {
    let Chords { g, a, b, d, .. } = st.chords;
    let h = st.h;
    let correction =
        (2.0 * a + 2.0 * b - 2.0 * d - 3.0 * h + g) * st.tau0 * kappa_s / (6.0 * kappa);
    4.0 * (st.tau_plus - st.tau_minus + correction) / (2.0 * a + 2.0 * b + 2.0 * d + h + g)
}

/// Everything computable from the six-point window `P_{i−2}..P_{i+3}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceStencil {
    pub kappa: KappaStencil,
    pub torsion: TorsionStencil,
    pub tau2: f64,
    /// Distance `e = |P_i P_{i+2}|`.
    pub e: f64,
}

impl SpaceStencil {
    pub fn new(w: &[Point3; 6], route: HeightRoute) -> Result<Self> {
        let five = [w[0], w[1], w[2], w[3], w[4]];
        let kappa = stencil3(&five)?;
        let tau_minus = tau1([w[0], w[1], w[2], w[3]], kappa.k_minus, route)?;
        let tau0 = tau1([w[1], w[2], w[3], w[4]], kappa.k0, route)?;
        let tau_plus = tau1([w[2], w[3], w[4], w[5]], kappa.k_plus, route)?;
        let tau2 = tau2([w[1], w[2], w[3], w[4]], route)?;
        Ok(Self {
            kappa,
            torsion: TorsionStencil {
                chords: kappa.chords,
                h: distance(w[4], w[5]),
                tau_minus,
                tau0,
                tau_plus,
            },
            tau2,
            e: distance(w[2], w[4]),
        })
    }

    pub fn sample(&self, index: usize, t: Option<f64>, opts: Sig3Options) -> SignatureSample {
        let kappa_s = self.kappa.kappa_s(opts.kappa_s);
        let tau = match opts.tau {
            TauVariant::T1 => self.torsion.tau0,
            TauVariant::T2 => self.tau2,
        };
        SignatureSample {
            index,
            t,
            kappa: self.kappa.k0,
            kappa_s,
            tau: Some(tau),
            tau_s: Some(tau_s(&self.torsion, self.kappa.k0, kappa_s)),
        }
    }
}

/// Space-curve signature `(κ̃, κ̃_s, τ̃, τ̃_s)` at every index with a full
/// six-point stencil `P_{i−2}..P_{i+3}`.
pub fn euclid_signature3(curve: &PolyCurve3, opts: Sig3Options) -> Result<SignatureCurve> {
    let range = curve.admissible(2, 3)?;
    let mut samples = Vec::with_capacity(range.len());
    for i in range {
        let w = curve.window::<6>(i, 2).expect("admissible index");
        let st = SpaceStencil::new(&w, opts.height).map_err(|e| e.at_index(i))?;
        samples.push(st.sample(i, curve.param(i), opts));
    }
    Ok(SignatureCurve {
        samples,
        skipped: Vec::new(),
    })
}
