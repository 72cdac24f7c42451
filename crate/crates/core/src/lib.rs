//! Numerically invariant signature curves.
//!
//! A signature curve is the locus of differential invariants traced as a point
//! moves along a curve: `(κ, κ_s)` for planar curves, `(κ, κ_s, τ, τ_s)` for
//! space curves. Two curves related by a group transformation have the same
//! signature, so the signature can be used to compare sampled curves modulo
//! the group.
//!
//! The estimators in this crate are written purely in terms of joint
//! invariants of consecutive sample points (distances for the Euclidean
//! group, signed areas for the equi-affine group), so the discrete signature
//! is exactly invariant up to floating-point rounding, and the κ_s / τ_s
//! stencils stay convergent on irregular partitions.
//!
//! Modules:
//! - [`geom`]: joint-invariant primitives (distances, Heron area, signed
//!   parallelogram areas, tetrahedron volume and height).
//! - [`euclid2`]: planar Euclidean curvature and the five κ_s stencils.
//! - [`affine2`]: planar equi-affine curvature and its arc-length derivative.
//! - [`euclid3`]: space-curve curvature, torsion and their derivatives.
//! - [`oracle`]: analytic test curves, exact invariants and partitions.
//! - [`harness`]: convergence studies, residual-order fits, invariance checks.
//! - [`io`]: point CSV ingestion and report serialization.

pub mod affine2;
pub mod curve;
pub mod error;
pub mod euclid2;
pub mod euclid3;
pub mod geom;
pub mod harness;
pub mod io;
pub mod oracle;

pub use curve::{PolyCurve, PolyCurve2, PolyCurve3, SignatureCurve};
pub use error::{Error, ErrorClass, Result};
pub use geom::{Point2, Point3};
