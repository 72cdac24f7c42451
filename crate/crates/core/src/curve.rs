use crate::error::{Error, Result};
use crate::geom::{Coords, Point2, Point3};

/// Ordered samples of a curve, optionally tagged with parameter values.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCurve<P> {
    points: Vec<P>,
    params: Option<Vec<f64>>,
    closed: bool,
}

pub type PolyCurve2 = PolyCurve<Point2>;
pub type PolyCurve3 = PolyCurve<Point3>;

impl<P: Coords> PolyCurve<P> {
    pub fn new(points: Vec<P>, closed: bool) -> Result<Self> {
        if let Some(i) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite { index: Some(i) });
        }
        Ok(Self {
            points,
            params: None,
            closed,
        })
    }

    /// Attaches strictly increasing parameter values, one per point.
    pub fn with_params(points: Vec<P>, params: Vec<f64>, closed: bool) -> Result<Self> {
        if params.len() != points.len() {
            return Err(Error::InvalidPartition(format!(
                "{} parameters for {} points",
                params.len(),
                points.len()
            )));
        }
        if params
            .windows(2)
            .any(|w| w[1].partial_cmp(&w[0]) != Some(std::cmp::Ordering::Greater))
        {
            return Err(Error::InvalidPartition(
                "parameters must increase strictly".into(),
            ));
        }
        let mut c = Self::new(points, closed)?;
        c.params = Some(params);
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    pub fn params(&self) -> Option<&[f64]> {
        self.params.as_deref()
    }

    pub fn param(&self, i: usize) -> Option<f64> {
        self.params.as_ref().map(|p| p[i])
    }

    /// Point at signed offset `i`, wrapping on closed curves.
    pub fn at(&self, i: isize) -> Option<P> {
        let n = self.points.len() as isize;
        if self.closed && n > 0 {
            Some(self.points[i.rem_euclid(n) as usize])
        } else if (0..n).contains(&i) {
            Some(self.points[i as usize])
        } else {
            None
        }
    }

    /// The `N` consecutive points starting `back` samples before `i`.
    pub fn window<const N: usize>(&self, i: usize, back: usize) -> Option<[P; N]> {
        let start = i as isize - back as isize;
        let mut out = [self.points.first().copied()?; N];
        for (k, slot) in out.iter_mut().enumerate() {
            *slot = self.at(start + k as isize)?;
        }
        Some(out)
    }

    /// Indices whose stencil `i−back ..= i+fwd` exists.
    ///
    /// Open curves truncate at both ends; closed curves wrap and admit every
    /// index as long as the stencil does not overlap itself.
    pub fn admissible(&self, back: usize, fwd: usize) -> Result<std::ops::Range<usize>> {
        let needed = back + fwd + 1;
        let n = self.points.len();
        if n < needed {
            return Err(Error::TooFewPoints { needed, got: n });
        }
        Ok(if self.closed { 0..n } else { back..n - fwd })
    }

    /// Applies `f` to every point, keeping parameters and closure.
    pub fn map(&self, f: impl Fn(P) -> P) -> Self {
        Self {
            points: self.points.iter().map(|p| f(*p)).collect(),
            params: self.params.clone(),
            closed: self.closed,
        }
    }
}

/// One point of a discrete signature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignatureSample {
    /// Index of the sample point the stencil is centered on.
    pub index: usize,
    /// Curve parameter at that point, when the input carried one.
    pub t: Option<f64>,
    pub kappa: f64,
    pub kappa_s: f64,
    pub tau: Option<f64>,
    pub tau_s: Option<f64>,
}

impl SignatureSample {
    /// The invariant tuple: `(κ, κ_s)` or `(κ, κ_s, τ, τ_s)`.
    pub fn values(&self) -> Vec<f64> {
        let mut v = vec![self.kappa, self.kappa_s];
        v.extend(self.tau);
        v.extend(self.tau_s);
        v
    }
}

/// A discrete signature: samples in curve order plus indices that were
/// skipped because their stencil was degenerate.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SignatureCurve {
    pub samples: Vec<SignatureSample>,
    pub skipped: Vec<(usize, Error)>,
}

impl SignatureCurve {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}
