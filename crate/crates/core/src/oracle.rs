//! Analytic test curves, their exact invariants, and sampling partitions.

use std::cell::Cell;
use std::f64::consts::{FRAC_PI_2, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::{PolyCurve2, PolyCurve3};
use crate::error::{Error, Result};
use crate::geom::{Point2, Point3};

/// Highest derivative order provided by [`CurveModel::derivative`].
pub const MAX_ORDER: usize = 5;

/// Smallest parameter accepted by the `sqrt_helix` model.
pub const SQRT_HELIX_T_MIN: f64 = 1e-3;

const SPEED_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape {
    /// Polar curve `r = 1 + ε cos(k t)`.
    PolarCos {
        eps: f64,
        k: f64,
    },
    Circle {
        r: f64,
    },
    Ellipse {
        a: f64,
        b: f64,
    },
    /// `(a cos t, a sin t, b t)`.
    Helix {
        a: f64,
        b: f64,
    },
    /// `(cos t, sin t, √t)`.
    SqrtHelix,
}

/// Parameters for [`builtin_curve`]; unused fields are ignored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveParams {
    pub eps: f64,
    pub k: f64,
    pub r: f64,
    pub a: f64,
    pub b: f64,
}

impl Default for CurveParams {
    fn default() -> Self {
        Self {
            eps: 0.1,
            k: 1.0,
            r: 1.0,
            a: 1.0,
            b: 1.0,
        }
    }
}

/// An analytic curve with exact derivatives up to order five.
///
/// `param_scale` λ reparametrizes the base curve as `u ↦ base(λu)`, which
/// lets tests check that oracle outputs do not depend on the parametrization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveModel {
    shape: Shape,
    param_scale: f64,
}

pub const BUILTIN_NAMES: [&str; 5] = ["polar_cos", "circle", "ellipse", "helix", "sqrt_helix"];

pub fn builtin_curve(name: &str, p: &CurveParams) -> Result<CurveModel> {
    let positive = |what: &str, v: f64| {
        if v.is_finite() && v > 0.0 {
            Ok(v)
        } else {
            Err(Error::InvalidCurve(format!(
                "{what} must be positive, got {v}"
            )))
        }
    };
    let shape = match name {
        "polar_cos" => {
            if !(p.eps.is_finite() && p.eps.abs() < 1.0 && p.k.is_finite()) {
                return Err(Error::InvalidCurve(format!(
                    "polar_cos needs |eps| < 1, got {}",
                    p.eps
                )));
            }
            Shape::PolarCos { eps: p.eps, k: p.k }
        }
        "circle" => Shape::Circle {
            r: positive("R", p.r)?,
        },
        "ellipse" => Shape::Ellipse {
            a: positive("a", p.a)?,
            b: positive("b", p.b)?,
        },
        "helix" => Shape::Helix {
            a: positive("a", p.a)?,
            b: p.b,
        },
        "sqrt_helix" => Shape::SqrtHelix,
        other => return Err(Error::UnknownCurve(other.to_string())),
    };
    Ok(CurveModel::new(shape))
}

impl CurveModel {
    pub fn new(shape: Shape) -> Self {
        Self {
            shape,
            param_scale: 1.0,
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// The same curve traversed as `u ↦ self(λu)`.
    pub fn rescaled(&self, lambda: f64) -> Self {
        Self {
            shape: self.shape,
            param_scale: self.param_scale * lambda,
        }
    }

    pub fn dim(&self) -> usize {
        match self.shape {
            Shape::Helix { .. } | Shape::SqrtHelix => 3,
            _ => 2,
        }
    }

    /// Period in the model's own parameter, for closed curves.
    pub fn period(&self) -> Option<f64> {
        let base = match self.shape {
            Shape::Circle { .. } | Shape::Ellipse { .. } => Some(TAU),
            Shape::PolarCos { k, .. } if k.fract() == 0.0 => Some(TAU),
            _ => None,
        };
        base.map(|p| p / self.param_scale)
    }

    pub fn is_closed(&self) -> bool {
        self.period().is_some()
    }

    /// Default parameter range: one period for closed curves, two turns for
    /// the helix, `[π/2, 3π/2]` for `sqrt_helix`.
    pub fn domain(&self) -> (f64, f64) {
        let (lo, hi) = match self.shape {
            Shape::Helix { .. } => (0.0, 2.0 * TAU),
            Shape::SqrtHelix => (FRAC_PI_2, 3.0 * FRAC_PI_2),
            _ => (0.0, TAU),
        };
        (lo / self.param_scale, hi / self.param_scale)
    }

    /// Checks that `t` lies where the model is smooth.
    pub fn check_param(&self, t: f64) -> Result<()> {
        if !t.is_finite() {
            return Err(Error::SingularParametrization { t });
        }
        if self.shape == Shape::SqrtHelix && self.param_scale * t < SQRT_HELIX_T_MIN {
            return Err(Error::SingularParametrization { t });
        }
        Ok(())
    }

    /// `n`-th derivative of the position at `t`, as `[x, y, z]` (`z = 0` in 2D).
    pub fn derivative(&self, n: usize, t: f64) -> Result<[f64; 3]> {
        assert!(n <= MAX_ORDER, "derivative order {n} not provided");
        self.check_param(t)?;
        let lam = self.param_scale;
        let s = lam * t;
        let scale = lam.powi(n as i32);
        let v = base_derivative(self.shape, n, s);
        Ok(v.map(|c| c * scale))
    }

    /// Up to `MAX_ORDER + 1` derivatives, starting at order 0.
    fn jet<const N: usize>(&self, t: f64) -> Result<[[f64; 3]; N]> {
        let mut out = [[0.0; 3]; N];
        for (n, slot) in out.iter_mut().enumerate() {
            *slot = self.derivative(n, t)?;
        }
        Ok(out)
    }

    pub fn point2(&self, t: f64) -> Result<Point2> {
        let [x, y, _] = self.derivative(0, t)?;
        Ok(Point2::new(x, y))
    }

    pub fn point3(&self, t: f64) -> Result<Point3> {
        let [x, y, z] = self.derivative(0, t)?;
        Ok(Point3::new(x, y, z))
    }

    pub fn sample2(&self, ts: &[f64], closed: bool) -> Result<PolyCurve2> {
        let pts = ts
            .iter()
            .map(|t| self.point2(*t))
            .collect::<Result<Vec<_>>>()?;
        PolyCurve2::with_params(pts, ts.to_vec(), closed)
    }

    pub fn sample3(&self, ts: &[f64], closed: bool) -> Result<PolyCurve3> {
        let pts = ts
            .iter()
            .map(|t| self.point3(*t))
            .collect::<Result<Vec<_>>>()?;
        PolyCurve3::with_params(pts, ts.to_vec(), closed)
    }
}

/// `n`-th derivative of `A e^{iωt}` as a planar vector.
fn rotating(n: usize, amp: f64, omega: f64, t: f64) -> [f64; 2] {
    let phase = omega * t + n as f64 * FRAC_PI_2;
    let m = amp * omega.powi(n as i32);
    [m * phase.cos(), m * phase.sin()]
}

fn base_derivative(shape: Shape, n: usize, t: f64) -> [f64; 3] {
    let phase = t + n as f64 * FRAC_PI_2;
    match shape {
        Shape::PolarCos { eps, k } => {
            // (1 + ε cos kt)e^{it} = e^{it} + (ε/2)(e^{i(1+k)t} + e^{i(1−k)t})
            let terms = [(1.0, 1.0), (0.5 * eps, 1.0 + k), (0.5 * eps, 1.0 - k)];
            let mut v = [0.0; 3];
            for (amp, omega) in terms {
                let [x, y] = rotating(n, amp, omega, t);
                v[0] += x;
                v[1] += y;
            }
            v
        }
        Shape::Circle { r } => [r * phase.cos(), r * phase.sin(), 0.0],
        Shape::Ellipse { a, b } => [a * phase.cos(), b * phase.sin(), 0.0],
        Shape::Helix { a, b } => {
            let z = match n {
                0 => b * t,
                1 => b,
                _ => 0.0,
            };
            [a * phase.cos(), a * phase.sin(), z]
        }
        Shape::SqrtHelix => {
            // d^n/dt^n t^{1/2} = c_n t^{1/2 − n}
            const C: [f64; 6] = [1.0, 0.5, -0.25, 0.375, -0.9375, 3.28125];
            [phase.cos(), phase.sin(), C[n] * t.powf(0.5 - n as f64)]
        }
    }
}

fn cross2(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[0] * v[1] - u[1] * v[0]
}

fn dot3(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn cross3(u: [f64; 3], v: [f64; 3]) -> [f64; 3] {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn require_dim(model: &CurveModel, dim: usize) -> Result<()> {
    if model.dim() == dim {
        Ok(())
    } else {
        Err(Error::InvalidCurve(format!(
            "expected a {dim}-dimensional curve, got {}",
            model.dim()
        )))
    }
}

/// Exact signed curvature and its arc-length derivative of a planar model.
pub fn oracle_euclid2(model: &CurveModel, t: f64) -> Result<(f64, f64)> {
    require_dim(model, 2)?;
    let [_, x1, x2, x3] = model.jet::<4>(t)?;
    let speed2 = dot3(x1, x1);
    let speed = speed2.sqrt();
    if speed <= SPEED_TOL {
        return Err(Error::SingularParametrization { t });
    }
    let c = cross2(x1, x2);
    let kappa = c / (speed2 * speed);
    let kappa_t = (cross2(x1, x3) * speed2 - 3.0 * c * dot3(x1, x2)) / (speed2 * speed2 * speed);
    Ok((kappa, kappa_t / speed))
}

/// Exact equi-affine curvature and its affine arc-length derivative.
///
/// With `Δ = det(x′, x″)` the affine arc length is `|Δ|^{1/3} dt` and
/// `κ = (9Δ·det(x″,x‴) + 3Δ·Δ″ − 5Δ′²)/(9|Δ|^{8/3})`.
pub fn oracle_affine2(model: &CurveModel, t: f64) -> Result<(f64, f64)> {
    require_dim(model, 2)?;
    let [_, x1, x2, x3, x4, x5] = model.jet::<6>(t)?;
    let d = cross2(x1, x2);
    let scale = dot3(x1, x1).powf(1.5);
    if d.abs() <= SPEED_TOL * scale.max(SPEED_TOL) {
        return Err(Error::InflectionPoint { t });
    }
    let d1 = cross2(x1, x3);
    let d23 = cross2(x2, x3);
    let d2 = d23 + cross2(x1, x4);
    let d23_1 = cross2(x2, x4);
    let d3 = 2.0 * cross2(x2, x4) + cross2(x1, x5);
    let n = 9.0 * d * d23 + 3.0 * d * d2 - 5.0 * d1 * d1;
    let n1 = 9.0 * d1 * d23 + 9.0 * d * d23_1 + 3.0 * d1 * d2 + 3.0 * d * d3 - 10.0 * d1 * d2;
    let root = d.abs().cbrt();
    let w = root.powi(8);
    let kappa = n / (9.0 * w);
    let kappa_t = n1 / (9.0 * w) - 8.0 / 3.0 * n * d1 / (9.0 * w * d);
    Ok((kappa, kappa_t / root))
}

/// Exact space-curve invariants at one parameter value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleSample {
    pub t: f64,
    pub kappa: f64,
    pub kappa_s: f64,
    pub tau: f64,
    pub tau_s: f64,
}

/// Closed-form invariants of `(cos t, sin t, √t)`.
pub fn sqrt_helix_closed_form(t: f64) -> OracleSample {
    let q = 16.0 * t.powi(3) + 4.0 * t * t + 1.0;
    let st = t.sqrt();
    let w = 1.0 + 4.0 * t;
    OracleSample {
        t,
        kappa: 2.0 * q.sqrt() / w.powf(1.5),
        kappa_s: 8.0 * (8.0 * t * t + 2.0 * t - 3.0) * st / (q.sqrt() * w.powi(3)),
        tau: -2.0 * st * (3.0 + 4.0 * t * t) / q,
        tau_s: 2.0 * (64.0 * t.powi(5) - 16.0 * t.powi(4) + 240.0 * t.powi(3) + 16.0 * t * t - 3.0)
            / (w.sqrt() * q * q),
    }
}

/// Exact space-curve invariants: closed forms for `sqrt_helix`, the general
/// derivative formulas otherwise.
pub fn oracle_euclid3(model: &CurveModel, t: f64) -> Result<OracleSample> {
    require_dim(model, 3)?;
    model.check_param(t)?;
    match model.shape {
        Shape::SqrtHelix => Ok(OracleSample {
            t,
            ..sqrt_helix_closed_form(model.param_scale * t)
        }),
        _ => oracle_euclid3_general(model, t),
    }
}

/// `κ = |x′×x″|/|x′|³`, `τ = −(x′×x″)·x‴/|x′×x″|²` and their chain-rule
/// arc-length derivatives.
pub fn oracle_euclid3_general(model: &CurveModel, t: f64) -> Result<OracleSample> {
    require_dim(model, 3)?;
    let [_, x1, x2, x3, x4] = model.jet::<5>(t)?;
    let speed2 = dot3(x1, x1);
    let speed = speed2.sqrt();
    if speed <= SPEED_TOL {
        return Err(Error::SingularParametrization { t });
    }
    let c = cross3(x1, x2);
    let c1 = cross3(x1, x3);
    let cc = dot3(c, c);
    let cn = cc.sqrt();
    let speed3 = speed2 * speed;
    let kappa = cn / speed3;
    let kappa_t = dot3(c, c1) / (cn * speed3) - 3.0 * cn * dot3(x1, x2) / (speed3 * speed2);
    if cn <= SPEED_TOL * speed3 {
        return Err(Error::SingularParametrization { t });
    }
    let cx3 = dot3(c, x3);
    let tau = -cx3 / cc;
    let tau_t = -(dot3(c, x4) * cc - 2.0 * cx3 * dot3(c, c1)) / (cc * cc);
    Ok(OracleSample {
        t,
        kappa,
        kappa_s: kappa_t / speed,
        tau,
        tau_s: tau_t / speed,
    })
}

/// Affine arc length `∫ |det(x′, x″)|^{1/3} dt` over `[t0, t1]`.
///
/// Fails if the equi-affine speed vanishes or changes sign inside the interval.
pub fn affine_arc_quadrature(model: &CurveModel, t0: f64, t1: f64) -> Result<f64> {
    require_dim(model, 2)?;
    if t0 == t1 {
        return Ok(0.0);
    }
    let (lo, hi, sign) = if t0 < t1 {
        (t0, t1, 1.0)
    } else {
        (t1, t0, -1.0)
    };
    let speed = |t: f64| -> Result<f64> {
        let [_, x1, x2] = model.jet::<3>(t)?;
        Ok(cross2(x1, x2))
    };
    let orientation = speed(0.5 * (lo + hi))?.signum();
    const PROBES: usize = 64;
    for k in 0..=PROBES {
        let t = lo + (hi - lo) * k as f64 / PROBES as f64;
        if speed(t)? * orientation <= 0.0 {
            return Err(Error::InflectionPoint { t });
        }
    }
    let failure: Cell<Option<Error>> = Cell::new(None);
    let out = quadrature::integrate(
        |t| match speed(t) {
            Ok(v) if v * orientation > 0.0 => v.abs().cbrt(),
            Ok(_) => {
                failure.set(Some(Error::InflectionPoint { t }));
                0.0
            }
            Err(e) => {
                failure.set(Some(e));
                0.0
            }
        },
        lo,
        hi,
        1e-12,
    );
    match failure.into_inner() {
        Some(e) => Err(e),
        None => Ok(sign * out.integral),
    }
}

/// Rule producing parameter values.
#[derive(Debug, Clone, PartialEq)]
pub enum PartitionKind {
    /// `t_i = t_lo + i·Δt`.
    Regular,
    /// Steps `w_0Δt, w_1Δt, …` cycling through the weights.
    Pattern(Vec<f64>),
    /// Regular grid with interior points displaced uniformly by up to
    /// `±amplitude·Δt/2`; `amplitude ∈ [0, 1)` keeps the order.
    Jitter { seed: u64, amplitude: f64 },
}

impl PartitionKind {
    /// The irregular `1, ½, ⅓` pattern.
    pub fn default_pattern() -> Self {
        PartitionKind::Pattern(vec![1.0, 0.5, 1.0 / 3.0])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PartitionSpec {
    pub kind: PartitionKind,
    pub dt: f64,
    pub range: (f64, f64),
}

/// Hard cap against accidental runaway partitions.
pub const MAX_PARTITION_POINTS: usize = 10_000_000;

/// Parameter values from `range.0` up to `range.1`.
///
/// A step that would reach or overshoot `range.1` (up to `1e-9·Δt`) is
/// clipped to end exactly there.
pub fn generate_partition(spec: &PartitionSpec) -> Result<Vec<f64>> {
    let (lo, hi) = spec.range;
    if !(lo.is_finite() && hi.is_finite() && hi > lo) {
        return Err(Error::EmptyRange);
    }
    let dt = spec.dt;
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::InvalidPartition(format!(
            "step must be positive, got {dt}"
        )));
    }
    let weights: Vec<f64> = match &spec.kind {
        PartitionKind::Pattern(w) => {
            if w.is_empty() || w.iter().any(|x| !(x.is_finite() && *x > 0.0)) {
                return Err(Error::InvalidPartition(format!(
                    "weights must be positive, got {w:?}"
                )));
            }
            w.clone()
        }
        PartitionKind::Jitter { amplitude, .. } if !(0.0..1.0).contains(amplitude) => {
            return Err(Error::InvalidPartition(format!(
                "jitter amplitude must lie in [0, 1), got {amplitude}"
            )));
        }
        _ => vec![1.0],
    };
    let mean = weights.iter().sum::<f64>() / weights.len() as f64;
    if (hi - lo) / (dt * mean) > MAX_PARTITION_POINTS as f64 {
        return Err(Error::InvalidPartition("too many points".into()));
    }
    let snap = 1e-9 * dt;
    let mut ts = vec![lo];
    let mut acc = lo;
    for step in 1.. {
        let next = match spec.kind {
            PartitionKind::Pattern(_) => {
                acc += weights[(step - 1) % weights.len()] * dt;
                acc
            }
            _ => lo + step as f64 * dt,
        };
        if next >= hi - snap {
            ts.push(hi);
            break;
        }
        ts.push(next);
    }
    if let PartitionKind::Jitter { seed, amplitude } = spec.kind {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let last = ts.len() - 1;
        for t in &mut ts[1..last] {
            *t += amplitude * dt * (rng.random::<f64>() - 0.5);
        }
        // The clipped final interval can be shorter than Δt.
        if last >= 2 && ts[last - 1] >= ts[last] {
            ts.remove(last - 1);
        }
    }
    Ok(ts)
}

/// Partition for a study of `model`; on a closed model whose range spans a
/// full period the duplicate endpoint is dropped and the curve wraps.
pub fn study_partition(model: &CurveModel, spec: &PartitionSpec) -> Result<(Vec<f64>, bool)> {
    let mut ts = generate_partition(spec)?;
    let closed = match model.period() {
        Some(p) => {
            let span = spec.range.1 - spec.range.0;
            (span - p).abs() <= 1e-9 * p
        }
        None => false,
    };
    if closed {
        ts.pop();
    }
    Ok((ts, closed))
}
