//! Convergence studies, residual-order fits and invariance checks.
//!
//! Estimates are compared with the oracle at the sample parameters
//! themselves, so no interpolation error enters a study. Only indices with a
//! full stencil contribute, at every scale alike.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::affine2::{affine_kappa, affine_signature, AffineVariant, SegmentRule};
use crate::curve::{PolyCurve2, PolyCurve3, SignatureCurve};
use crate::error::{Error, Result};
use crate::euclid2::{euclid_signature2, kappa_tilde, KappaSVariant};
use crate::euclid3::{euclid_signature3, kappa3, tau1, tau2, HeightRoute, Sig3Options};
use crate::geom::{distance, Point2, Point3, TetraDistances};
use crate::oracle::{
    affine_arc_quadrature, oracle_affine2, oracle_euclid2, oracle_euclid3, study_partition,
    CurveModel, PartitionKind, PartitionSpec,
};

/// Which discrete signature is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Estimator {
    Euclid2 {
        variant: KappaSVariant,
    },
    Affine {
        variant: AffineVariant,
        rule: SegmentRule,
    },
    Euclid3 {
        options: Sig3Options,
    },
}

/// Which component of the signature is compared with the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Kappa,
    KappaS,
    Tau,
    TauS,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StudyConfig {
    pub curve: CurveModel,
    pub partition: PartitionKind,
    /// Parameter range; the model's default domain when `None`.
    pub range: Option<(f64, f64)>,
    /// Step sizes Δt, strictly decreasing.
    pub scales: Vec<f64>,
    pub estimator: Estimator,
    pub quantity: Quantity,
}

/// Error norms at one scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleResult {
    pub scale: f64,
    /// Number of samples compared.
    pub n: usize,
    pub max_err: f64,
    /// Root-mean-square error over the compared samples.
    pub l2_err: f64,
    /// Sample index and parameter of the largest error.
    pub worst_index: usize,
    pub worst_t: f64,
    /// Samples dropped because their stencil was degenerate.
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    pub rows: Vec<ScaleResult>,
    /// Least-squares slope of `log max_err` against `log scale`; `None` when
    /// every error is at rounding level.
    pub slope: Option<f64>,
    pub l2_slope: Option<f64>,
    /// Errors fall strictly at every refinement.
    pub monotone: bool,
    pub exact: bool,
    /// Only two scales were available for the fit.
    pub low_confidence: bool,
}

/// Errors below this (relative to the oracle magnitude) count as exact.
pub const EXACT_TOL: f64 = 1e-11;

impl ConvergenceReport {
    fn from_rows(rows: Vec<ScaleResult>, magnitude: f64) -> Self {
        let exact = rows
            .iter()
            .all(|r| r.max_err <= EXACT_TOL * magnitude.max(1.0));
        let fit = |f: fn(&ScaleResult) -> f64| {
            if exact {
                None
            } else {
                Some(fit_slope(
                    &rows.iter().map(|r| (r.scale, f(r))).collect::<Vec<_>>(),
                ))
            }
        };
        let slope = fit(|r| r.max_err);
        let l2_slope = fit(|r| r.l2_err);
        let monotone = rows.windows(2).all(|w| w[1].max_err < w[0].max_err);
        let low_confidence = rows.len() < 3;
        Self {
            rows,
            slope,
            l2_slope,
            monotone,
            exact,
            low_confidence,
        }
    }

    /// Ratio of finest-scale to coarsest-scale max error.
    pub fn reduction(&self) -> f64 {
        self.rows.last().map_or(f64::NAN, |l| l.max_err)
            / self.rows.first().map_or(f64::NAN, |f| f.max_err)
    }

    /// One-line summary: slope, monotonicity and flags.
    pub fn summary(&self) -> String {
        let slope = match self.slope {
            Some(s) => format!("{s:.4}"),
            None => "n/a".to_string(),
        };
        let mut line = format!(
            "slope={slope} monotone={} scales={}",
            self.monotone,
            self.rows.len()
        );
        if self.exact {
            line.push_str(" EXACT");
        }
        if self.low_confidence {
            line.push_str(" LOW_CONFIDENCE");
        }
        line
    }
}

/// Least-squares slope of `log y` against `log x`.
pub fn fit_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = logs.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = logs.iter().map(|(x, _)| (x - mx).powi(2)).sum();
    sxy / sxx
}

fn validate(cfg: &StudyConfig) -> Result<()> {
    if cfg.scales.len() < 2 {
        return Err(Error::InvalidStudy("need at least two scales".into()));
    }
    if cfg.scales.iter().any(|s| !(s.is_finite() && *s > 0.0))
        || cfg.scales.windows(2).any(|w| w[1] >= w[0])
    {
        return Err(Error::InvalidStudy(
            "scales must be positive and strictly decreasing".into(),
        ));
    }
    let dim = match cfg.estimator {
        Estimator::Euclid3 { .. } => 3,
        _ => 2,
    };
    if cfg.curve.dim() != dim {
        return Err(Error::InvalidStudy(format!(
            "estimator needs a {dim}-dimensional curve, got {}",
            cfg.curve.dim()
        )));
    }
    if dim == 2 && matches!(cfg.quantity, Quantity::Tau | Quantity::TauS) {
        return Err(Error::InvalidStudy(
            "torsion is only defined for space curves".into(),
        ));
    }
    Ok(())
}

/// Sample parameters and closure flag at one scale.
fn partition_at(cfg: &StudyConfig, scale: f64) -> Result<(Vec<f64>, bool)> {
    let spec = PartitionSpec {
        kind: cfg.partition.clone(),
        dt: scale,
        range: cfg.range.unwrap_or_else(|| cfg.curve.domain()),
    };
    study_partition(&cfg.curve, &spec)
}

fn with_scale<T>(scale: f64, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::AtScale {
        scale,
        source: Box::new(e),
    })
}

/// Discrete signature of `model` sampled at `ts`.
pub fn sample_signature(
    model: &CurveModel,
    ts: &[f64],
    closed: bool,
    est: Estimator,
) -> Result<SignatureCurve> {
    match est {
        Estimator::Euclid2 { variant } => euclid_signature2(&model.sample2(ts, closed)?, variant),
        Estimator::Affine { variant, rule } => {
            affine_signature(&model.sample2(ts, closed)?, variant, rule)
        }
        Estimator::Euclid3 { options } => euclid_signature3(&model.sample3(ts, closed)?, options),
    }
}

/// Exact value of `q` at `t` for the oracle matching `est`.
fn oracle_value(model: &CurveModel, est: Estimator, q: Quantity, t: f64) -> Result<f64> {
    match est {
        Estimator::Euclid2 { .. } | Estimator::Affine { .. } => {
            let (k, ks) = match est {
                Estimator::Affine { .. } => oracle_affine2(model, t)?,
                _ => oracle_euclid2(model, t)?,
            };
            Ok(if q == Quantity::Kappa { k } else { ks })
        }
        Estimator::Euclid3 { .. } => {
            let o = oracle_euclid3(model, t)?;
            Ok(match q {
                Quantity::Kappa => o.kappa,
                Quantity::KappaS => o.kappa_s,
                Quantity::Tau => o.tau,
                Quantity::TauS => o.tau_s,
            })
        }
    }
}

/// Aggregates `(index, t, error)` triples into one row.
fn row(scale: f64, errs: &[(usize, f64, f64)], skipped: usize) -> Result<ScaleResult> {
    if errs.is_empty() {
        return Err(Error::InvalidStudy(format!(
            "no admissible samples at scale {scale}"
        )));
    }
    let worst = errs
        .iter()
        .max_by(|a, b| a.2.total_cmp(&b.2))
        .expect("non-empty");
    let l2 = (errs.iter().map(|e| e.2 * e.2).sum::<f64>() / errs.len() as f64).sqrt();
    Ok(ScaleResult {
        scale,
        n: errs.len(),
        max_err: worst.2,
        l2_err: l2,
        worst_index: worst.0,
        worst_t: worst.1,
        skipped,
    })
}

/// Estimator error against the oracle across the scale ladder.
pub fn run_convergence(cfg: &StudyConfig) -> Result<ConvergenceReport> {
    validate(cfg)?;
    let mut rows = Vec::with_capacity(cfg.scales.len());
    let mut magnitude = 0.0_f64;
    for &scale in &cfg.scales {
        let (ts, closed) = with_scale(scale, partition_at(cfg, scale))?;
        let sig = with_scale(
            scale,
            sample_signature(&cfg.curve, &ts, closed, cfg.estimator),
        )?;
        let mut errs = Vec::with_capacity(sig.len());
        for s in &sig.samples {
            let t = ts[s.index];
            let exact = with_scale(
                scale,
                oracle_value(&cfg.curve, cfg.estimator, cfg.quantity, t),
            )?;
            let est = match cfg.quantity {
                Quantity::Kappa => s.kappa,
                Quantity::KappaS => s.kappa_s,
                Quantity::Tau => s.tau.expect("space signature"),
                Quantity::TauS => s.tau_s.expect("space signature"),
            };
            magnitude = magnitude.max(exact.abs());
            errs.push((s.index, t, (est - exact).abs()));
        }
        rows.push(row(scale, &errs, sig.skipped.len())?);
    }
    Ok(ConvergenceReport::from_rows(rows, magnitude))
}

/// Leading-order expansions whose remainder order is measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expansion {
    /// Planar `κ̃ = κ + (b−a)κ_s/3`.
    Euclid2K,
    /// The same expansion for space curves.
    Euclid3K,
    /// `τ̃₁ = τ + (τκ_s/6κ)(a−b+3e) + (τ_s/4)(b−a+e)`.
    Tau1,
    /// `τ̃₂ = τ + (τκ_s/6κ)(a+b+e) + (τ_s/4)(b−a+e)`, the usual statement.
    Tau2,
    /// `τ̃₂ = τ + (τκ_s/6κ)(e−a−b) + (τ_s/4)(b−a+e)`, the coefficient obtained
    /// by expanding `τ̃₂` directly.
    Tau2Rederived,
    /// Affine `κ̃ = κ + (ΣL_j/5)κ_s`, `L_j` the signed affine arc length from
    /// `P_i` to `P_j`, `j = i−2..i+2`.
    AffineK,
}

impl Expansion {
    /// Stencil reach `(back, forward)`.
    fn reach(self) -> (usize, usize) {
        match self {
            Expansion::Euclid2K | Expansion::Euclid3K => (1, 1),
            Expansion::Tau1 | Expansion::Tau2 | Expansion::Tau2Rederived => (1, 2),
            Expansion::AffineK => (2, 2),
        }
    }

    fn dim(self) -> usize {
        match self {
            Expansion::Euclid2K | Expansion::AffineK => 2,
            _ => 3,
        }
    }
}

fn height_route(cfg: &StudyConfig) -> HeightRoute {
    match cfg.estimator {
        Estimator::Euclid3 { options } => options.height,
        _ => HeightRoute::default(),
    }
}

fn residual_at(
    cfg: &StudyConfig,
    exp: Expansion,
    c2: Option<&PolyCurve2>,
    c3: Option<&PolyCurve3>,
    ts: &[f64],
    i: usize,
) -> Result<f64> {
    let model = &cfg.curve;
    let t = ts[i];
    let ii = i as isize;
    match exp {
        Expansion::Euclid2K => {
            let c = c2.expect("planar");
            let w = c.window::<3>(i, 1).expect("admissible");
            let (k, ks) = oracle_euclid2(model, t)?;
            let (a, b) = (distance(w[0], w[1]), distance(w[1], w[2]));
            Ok(kappa_tilde(w[0], w[1], w[2])? - k - (b - a) * ks / 3.0)
        }
        Expansion::Euclid3K => {
            let c = c3.expect("space");
            let w = c.window::<3>(i, 1).expect("admissible");
            let o = oracle_euclid3(model, t)?;
            let (a, b) = (distance(w[0], w[1]), distance(w[1], w[2]));
            Ok(kappa3(w[0], w[1], w[2])? - o.kappa - (b - a) * o.kappa_s / 3.0)
        }
        Expansion::Tau1 | Expansion::Tau2 | Expansion::Tau2Rederived => {
            let c = c3.expect("space");
            let w = c.window::<4>(i, 1).expect("admissible");
            let o = oracle_euclid3(model, t)?;
            let TetraDistances { a, b, e, .. } = TetraDistances::of(w[0], w[1], w[2], w[3]);
            let route = height_route(cfg);
            let (est, coeff) = match exp {
                Expansion::Tau1 => (tau1(w, kappa3(w[0], w[1], w[2])?, route)?, a - b + 3.0 * e),
                Expansion::Tau2 => (tau2(w, route)?, a + b + e),
                _ => (tau2(w, route)?, e - a - b),
            };
            let first = o.tau * o.kappa_s / (6.0 * o.kappa) * coeff + o.tau_s / 4.0 * (b - a + e);
            Ok(est - o.tau - first)
        }
        Expansion::AffineK => {
            let c = c2.expect("planar");
            let w = c.window::<5>(i, 2).expect("admissible");
            let (k, ks) = oracle_affine2(model, t)?;
            let mut sum = 0.0;
            for j in ii - 2..=ii + 2 {
                if j != ii {
                    sum += affine_arc_quadrature(model, t, ts[j as usize])?;
                }
            }
            Ok(affine_kappa(&w)? - k - sum / 5.0 * ks)
        }
    }
}

/// Order of the remainder after subtracting a leading-order expansion.
///
/// The estimator, oracle and first-order term are evaluated at the sample
/// points; the report's errors are the absolute remainders.
pub fn residual_order(cfg: &StudyConfig, exp: Expansion) -> Result<ConvergenceReport> {
    validate_residual(cfg, exp)?;
    let (back, fwd) = exp.reach();
    let mut rows = Vec::new();
    for &scale in &cfg.scales {
        // Residuals need monotone parameters across the stencil (affine
        // arc lengths are integrated between sample parameters), so closed
        // curves are treated as open here.
        let (ts, _) = with_scale(scale, partition_at(cfg, scale))?;
        let (c2, c3) = if exp.dim() == 2 {
            (
                Some(with_scale(scale, cfg.curve.sample2(&ts, false))?),
                None,
            )
        } else {
            (
                None,
                Some(with_scale(scale, cfg.curve.sample3(&ts, false))?),
            )
        };
        let range = with_scale(
            scale,
            match (&c2, &c3) {
                (Some(c), _) => c.admissible(back, fwd),
                (_, Some(c)) => c.admissible(back, fwd),
                _ => unreachable!(),
            },
        )?;
        let mut errs = Vec::with_capacity(range.len());
        for i in range {
            let r = with_scale(
                scale,
                residual_at(cfg, exp, c2.as_ref(), c3.as_ref(), &ts, i).map_err(|e| e.at_index(i)),
            )?;
            errs.push((i, ts[i], r.abs()));
        }
        rows.push(row(scale, &errs, 0)?);
    }
    Ok(ConvergenceReport::from_rows(rows, 1.0))
}

fn validate_residual(cfg: &StudyConfig, exp: Expansion) -> Result<()> {
    if cfg.scales.len() < 2
        || cfg.scales.windows(2).any(|w| w[1] >= w[0])
        || cfg.scales.iter().any(|s| *s <= 0.0)
    {
        return Err(Error::InvalidStudy(
            "scales must be positive and strictly decreasing".into(),
        ));
    }
    if cfg.curve.dim() != exp.dim() {
        return Err(Error::InvalidStudy(format!(
            "{exp:?} needs a {}-dimensional curve",
            exp.dim()
        )));
    }
    Ok(())
}

/// Denominator used to normalize `τ̃₁ − τ̃₂` in [`nonequivalence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonEquivDenominator {
    /// `e − b`
    EMinusB,
    /// `a + e`
    APlusE,
}

/// One scale of the torsion non-equivalence study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonEquivRow {
    pub scale: f64,
    pub n: usize,
    /// Least-squares factor `ρ` in `τ̃₁ − τ̃₂ ≈ ρ · D · τκ_s/(3κ)`, `D` the
    /// selected chord combination. The predicted limit is `ρ = 1`.
    pub ratio: f64,
}

/// Measures `(τ̃₁ − τ̃₂)/D` against `τκ_s/(3κ)` at every scale.
pub fn nonequivalence(cfg: &StudyConfig, denom: NonEquivDenominator) -> Result<Vec<NonEquivRow>> {
    validate_residual(cfg, Expansion::Tau1)?;
    let route = height_route(cfg);
    let mut out = Vec::new();
    for &scale in &cfg.scales {
        let (ts, _) = with_scale(scale, partition_at(cfg, scale))?;
        let c = with_scale(scale, cfg.curve.sample3(&ts, false))?;
        let (mut sxy, mut sxx, mut n) = (0.0, 0.0, 0);
        for i in with_scale(scale, c.admissible(1, 2))? {
            let w = c.window::<4>(i, 1).expect("admissible");
            let step = || -> Result<(f64, f64)> {
                let o = oracle_euclid3(&cfg.curve, ts[i])?;
                let TetraDistances { a, b, e, .. } = TetraDistances::of(w[0], w[1], w[2], w[3]);
                let diff = tau1(w, kappa3(w[0], w[1], w[2])?, route)? - tau2(w, route)?;
                let d = match denom {
                    NonEquivDenominator::EMinusB => e - b,
                    NonEquivDenominator::APlusE => a + e,
                };
                Ok((diff, d * o.tau * o.kappa_s / (3.0 * o.kappa)))
            };
            let (y, x) = with_scale(scale, step().map_err(|e| e.at_index(i)))?;
            sxy += x * y;
            sxx += x * x;
            n += 1;
        }
        out.push(NonEquivRow {
            scale,
            n,
            ratio: sxy / sxx,
        });
    }
    Ok(out)
}

/// Transformation group sampled by [`invariance_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    /// Planar rotations and translations.
    SE2,
    /// Spatial rotations and translations.
    SE3,
    /// Area-preserving linear maps and translations.
    SA2,
}

/// `x ↦ Mx + v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transform {
    pub linear: [[f64; 3]; 3],
    pub translation: [f64; 3],
}

impl Transform {
    pub fn apply2(&self, p: Point2) -> Point2 {
        let m = &self.linear;
        Point2::new(
            m[0][0] * p.x + m[0][1] * p.y + self.translation[0],
            m[1][0] * p.x + m[1][1] * p.y + self.translation[1],
        )
    }

    pub fn apply3(&self, p: Point3) -> Point3 {
        let m = &self.linear;
        let v = [p.x, p.y, p.z];
        let row = |r: usize| m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2] + self.translation[r];
        Point3::new(row(0), row(1), row(2))
    }
}

/// The `trial`-th random element of `group` for a given seed.
///
/// Each trial reads its own ChaCha8 stream, so elements do not depend on how
/// many trials were drawn before.
pub fn group_element(group: Group, seed: u64, trial: u64) -> Transform {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut translation = [0.0; 3];
    let dim = if group == Group::SE3 { 3 } else { 2 };
    for v in translation.iter_mut().take(dim) {
        *v = rng.random_range(-1.0..1.0);
    }
    let mut linear = [[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 1.0]];
    match group {
        Group::SE2 => {
            let th: f64 = rng.random_range(0.0..TAU);
            linear[0] = [th.cos(), -th.sin(), 0.0];
            linear[1] = [th.sin(), th.cos(), 0.0];
        }
        Group::SA2 => loop {
            let mut m: [f64; 4] = std::array::from_fn(|_| rng.random_range(-2.0..=2.0));
            let mut det = m[0] * m[3] - m[1] * m[2];
            if det.abs() < 0.1 {
                continue;
            }
            if det < 0.0 {
                m.swap(0, 2);
                m.swap(1, 3);
                det = -det;
            }
            let s = 1.0 / det.sqrt();
            linear[0] = [m[0] * s, m[1] * s, 0.0];
            linear[1] = [m[2] * s, m[3] * s, 0.0];
            break;
        },
        Group::SE3 => {
            // Uniform unit quaternion.
            let (u1, u2, u3): (f64, f64, f64) = (rng.random(), rng.random(), rng.random());
            let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
            let (x, y, z, w) = (
                a * (TAU * u2).sin(),
                a * (TAU * u2).cos(),
                b * (TAU * u3).sin(),
                b * (TAU * u3).cos(),
            );
            linear = [
                [
                    1.0 - 2.0 * (y * y + z * z),
                    2.0 * (x * y - z * w),
                    2.0 * (x * z + y * w),
                ],
                [
                    2.0 * (x * y + z * w),
                    1.0 - 2.0 * (x * x + z * z),
                    2.0 * (y * z - x * w),
                ],
                [
                    2.0 * (x * z - y * w),
                    2.0 * (y * z + x * w),
                    1.0 - 2.0 * (x * x + y * y),
                ],
            ];
        }
    }
    Transform {
        linear,
        translation,
    }
}

/// A sampled curve together with the signature to compute on it.
#[derive(Debug, Clone, Copy)]
pub enum SignatureInput<'a> {
    Euclid2(&'a PolyCurve2, KappaSVariant),
    Affine(&'a PolyCurve2, AffineVariant, SegmentRule),
    Euclid3(&'a PolyCurve3, Sig3Options),
}

impl SignatureInput<'_> {
    fn compute(&self, t: Option<&Transform>) -> Result<SignatureCurve> {
        match *self {
            SignatureInput::Euclid2(c, v) => match t {
                Some(t) => euclid_signature2(&c.map(|p| t.apply2(p)), v),
                None => euclid_signature2(c, v),
            },
            SignatureInput::Affine(c, v, r) => match t {
                Some(t) => affine_signature(&c.map(|p| t.apply2(p)), v, r),
                None => affine_signature(c, v, r),
            },
            SignatureInput::Euclid3(c, o) => match t {
                Some(t) => euclid_signature3(&c.map(|p| t.apply3(p)), o),
                None => euclid_signature3(c, o),
            },
        }
    }

    fn dim(&self) -> usize {
        match self {
            SignatureInput::Euclid3(..) => 3,
            _ => 2,
        }
    }
}

/// Largest deviation between two signatures, per component relative to the
/// largest magnitude of that component in `reference`.
///
/// Signatures with different sample sets are infinitely far apart.
pub fn signature_deviation(reference: &SignatureCurve, other: &SignatureCurve) -> f64 {
    if reference.len() != other.len()
        || reference
            .samples
            .iter()
            .zip(&other.samples)
            .any(|(a, b)| a.index != b.index)
    {
        return f64::INFINITY;
    }
    let Some(first) = reference.samples.first() else {
        return 0.0;
    };
    let width = first.values().len();
    let mut scale = vec![0.0_f64; width];
    for s in &reference.samples {
        for (m, v) in scale.iter_mut().zip(s.values()) {
            *m = m.max(v.abs());
        }
    }
    let mut worst = 0.0_f64;
    for (a, b) in reference.samples.iter().zip(&other.samples) {
        for ((x, y), m) in a.values().iter().zip(b.values()).zip(&scale) {
            let d = (x - y).abs() / if *m > 0.0 { *m } else { 1.0 };
            worst = worst.max(if d.is_nan() { f64::INFINITY } else { d });
        }
    }
    worst
}

/// Worst relative change of the signature over `trials` random group elements.
pub fn invariance_check(
    input: SignatureInput<'_>,
    group: Group,
    trials: u64,
    seed: u64,
) -> Result<f64> {
    let gdim = if group == Group::SE3 { 3 } else { 2 };
    if gdim != input.dim() {
        return Err(Error::InvalidStudy(format!(
            "{group:?} acts on {gdim}-dimensional points"
        )));
    }
    let reference = input.compute(None)?;
    let mut worst = 0.0_f64;
    for trial in 0..trials {
        let g = group_element(group, seed, trial);
        let moved = input.compute(Some(&g))?;
        worst = worst.max(signature_deviation(&reference, &moved));
    }
    Ok(worst)
}
