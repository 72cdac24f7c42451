//! Joint-invariant primitives shared by the signature estimators.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative tolerance used when clamping rounding-level negative discriminants.
pub const CLAMP_TOL: f64 = 1e-12;

/// Multiple of machine epsilon used by the degeneracy predicates.
pub const COLLINEAR_TOL: f64 = 8.0 * f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Coordinates in a Euclidean space of fixed dimension.
pub trait Coords:
    Copy
    + std::fmt::Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<f64, Output = Self>
    + Send
    + Sync
{
    const DIM: usize;
    fn dot(self, other: Self) -> f64;
    fn to_vec(self) -> Vec<f64>;
    /// Builds a point from exactly `DIM` values.
    fn from_slice(v: &[f64]) -> Self;

    fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }
    fn is_finite(self) -> bool {
        self.to_vec().iter().all(|c| c.is_finite())
    }
    /// Largest absolute coordinate.
    fn max_abs(self) -> f64 {
        self.to_vec().iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Checked constructor rejecting NaN and infinite coordinates.
    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        let p = Self::new(x, y);
        if p.is_finite() {
            Ok(p)
        } else {
            Err(Error::NonFinite { index: None })
        }
    }

    /// z-component of the planar cross product.
    pub fn cross(self, o: Self) -> f64 {
        self.x * o.y - self.y * o.x
    }
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn try_new(x: f64, y: f64, z: f64) -> Result<Self> {
        let p = Self::new(x, y, z);
        if p.is_finite() {
            Ok(p)
        } else {
            Err(Error::NonFinite { index: None })
        }
    }

    pub fn cross(self, o: Self) -> Self {
        Self::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }
}

macro_rules! impl_vector_ops {
    ($t:ident { $($f:ident),+ }, $dim:expr) => {
        impl Add for $t {
            type Output = Self;
            fn add(self, o: Self) -> Self { Self { $($f: self.$f + o.$f),+ } }
        }
        impl Sub for $t {
            type Output = Self;
            fn sub(self, o: Self) -> Self { Self { $($f: self.$f - o.$f),+ } }
        }
        impl Mul<f64> for $t {
            type Output = Self;
            fn mul(self, s: f64) -> Self { Self { $($f: self.$f * s),+ } }
        }
        impl Neg for $t {
            type Output = Self;
            fn neg(self) -> Self { Self { $($f: -self.$f),+ } }
        }
        impl Coords for $t {
            const DIM: usize = $dim;
            fn dot(self, o: Self) -> f64 { 0.0 $(+ self.$f * o.$f)+ }
            fn to_vec(self) -> Vec<f64> { vec![$(self.$f),+] }
            fn from_slice(v: &[f64]) -> Self {
                let mut it = v.iter().copied();
                Self { $($f: it.next().expect("too few coordinates")),+ }
            }
        }
    };
}

impl_vector_ops!(Point2 { x, y }, 2);
impl_vector_ops!(Point3 { x, y, z }, 3);

pub fn distance<P: Coords>(p: P, q: P) -> f64 {
    (p - q).norm()
}

/// True when `p` and `q` agree to within rounding of their magnitude.
pub fn coincident<P: Coords>(p: P, q: P) -> bool {
    let scale = p.max_abs().max(q.max_abs());
    (p - q).max_abs() <= 4.0 * f64::EPSILON * scale
}

/// Largest absolute coordinate among `pts`.
fn coord_scale<P: Coords>(pts: &[P]) -> f64 {
    pts.iter().fold(0.0, |m, p| m.max(p.max_abs()))
}

/// Rounding floor of `u × v` for chords of points with coordinates up to `c`.
///
/// Rounding the points to doubles moves each coordinate by up to `ε·c`, which
/// perturbs the cross product by about `ε·c·(|u| + |v|)` on top of the
/// `ε·|u||v|` of the product itself.
fn cross_floor(c: f64, nu: f64, nv: f64) -> f64 {
    COLLINEAR_TOL * (nu * nv + c * (nu + nv))
}

/// Cross product `(P0−Pm) × (Pp−P0)`, or `None` when the three points are
/// collinear to within the rounding of their coordinates.
pub fn turn2(pm: Point2, p0: Point2, pp: Point2) -> Option<f64> {
    let (u, v) = (p0 - pm, pp - p0);
    let cross = u.cross(v);
    (cross.abs() > cross_floor(coord_scale(&[pm, p0, pp]), u.norm(), v.norm())).then_some(cross)
}

/// Bracket `[ijk] = (Pi−Pj) × (Pi−Pk)`, or `None` when the points are
/// collinear to within rounding.
pub fn bracket_checked(pi: Point2, pj: Point2, pk: Point2) -> Option<f64> {
    let (u, v) = (pi - pj, pi - pk);
    let b = u.cross(v);
    (b.abs() > cross_floor(coord_scale(&[pi, pj, pk]), u.norm(), v.norm())).then_some(b)
}

/// True when three space points are collinear to within rounding.
pub fn collinear3(pm: Point3, p0: Point3, pp: Point3) -> bool {
    let (u, v) = (p0 - pm, pp - p0);
    u.cross(v).norm() <= cross_floor(coord_scale(&[pm, p0, pp]), u.norm(), v.norm())
}

/// `det(P1−P0, P2−P1, P3−P2)`, or `None` when the four points are coplanar
/// to within rounding.
pub fn volume6_checked(p0: Point3, p1: Point3, p2: Point3, p3: Point3) -> Option<f64> {
    let (u, v, w) = (p1 - p0, p2 - p1, p3 - p2);
    let (nu, nv, nw) = (u.norm(), v.norm(), w.norm());
    let c = coord_scale(&[p0, p1, p2, p3]);
    let floor = COLLINEAR_TOL * (nu * nv * nw + c * (nu * nv + nv * nw + nu * nw));
    let det = u.cross(v).dot(w);
    (det.abs() > floor).then_some(det)
}

/// Side lengths of a triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleSides {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl TriangleSides {
    /// Validates signs and the triangle inequality (up to rounding).
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if ![a, b, c].iter().all(|s| s.is_finite() && *s >= 0.0) {
            return Err(Error::InvalidSides(format!("({a}, {b}, {c})")));
        }
        let max = a.max(b).max(c);
        let slack = a + b + c - 2.0 * max;
        if slack < -4.0 * f64::EPSILON * max {
            return Err(Error::InvalidSides(format!(
                "({a}, {b}, {c}) violate the triangle inequality"
            )));
        }
        Ok(Self { a, b, c })
    }

    pub fn of<P: Coords>(p: P, q: P, r: P) -> Self {
        Self {
            a: distance(p, q),
            b: distance(q, r),
            c: distance(p, r),
        }
    }
}

/// Triangle area from side lengths.
///
/// Sorted-operand form of Heron's formula: with `a ≥ b ≥ c` the product
/// `(a+(b+c))(c−(a−b))(c+(a−b))(a+(b−c))` is accurate even for needle
/// triangles, where the semiperimeter form cancels catastrophically.
pub fn heron_area(s: TriangleSides) -> Result<f64> {
    let mut v = [s.a, s.b, s.c];
    v.sort_by(|x, y| y.total_cmp(x));
    let [a, b, c] = v;
    let p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    if p >= 0.0 {
        Ok(0.25 * p.sqrt())
    } else if p >= -CLAMP_TOL * a.powi(4) {
        Ok(0.0)
    } else {
        Err(Error::NegativeDiscriminant { product: p })
    }
}

/// `[ijk]`: signed area of the parallelogram on `Pi−Pj` and `Pi−Pk`.
pub fn signed_parallelogram3(pi: Point2, pj: Point2, pk: Point2) -> f64 {
    (pi - pj).cross(pi - pk)
}

/// `[ijkl]`: signed area of the parallelogram on `Pi−Pj` and `Pk−Pl`.
pub fn signed_parallelogram4(pi: Point2, pj: Point2, pk: Point2, pl: Point2) -> f64 {
    (pi - pj).cross(pk - pl)
}

/// The six mutual distances of four points `P0..P3`.
///
/// Labeling: `a = |P0P1|`, `b = |P1P2|`, `c = |P0P2|`, `d = |P2P3|`,
/// `e = |P1P3|`, `f = |P0P3|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TetraDistances {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

impl TetraDistances {
    /// Validates signs and realizability in 3-space.
    pub fn new(a: f64, b: f64, c: f64, d: f64, e: f64, f: f64) -> Result<Self> {
        let t = Self { a, b, c, d, e, f };
        if !t.as_array().iter().all(|s| s.is_finite() && *s >= 0.0) {
            return Err(Error::InvalidSides(format!("{:?}", t.as_array())));
        }
        cayley_menger_volume(t)?;
        Ok(t)
    }

    pub fn of<P: Coords>(p0: P, p1: P, p2: P, p3: P) -> Self {
        Self {
            a: distance(p0, p1),
            b: distance(p1, p2),
            c: distance(p0, p2),
            d: distance(p2, p3),
            e: distance(p1, p3),
            f: distance(p0, p3),
        }
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    /// The base triangle `P0 P1 P2`.
    pub fn base(&self) -> TriangleSides {
        TriangleSides {
            a: self.a,
            b: self.b,
            c: self.c,
        }
    }
}

/// Tetrahedron volume from its six edge lengths, `288·V² = CM`.
///
/// Distances are normalized by the longest edge before the 5×5 determinant
/// is taken, so the clamp tolerance is relative.
pub fn cayley_menger_volume(t: TetraDistances) -> Result<f64> {
    let scale = t.as_array().iter().fold(0.0_f64, |m, v| m.max(*v));
    if scale == 0.0 {
        return Ok(0.0);
    }
    let sq = |v: f64| (v / scale) * (v / scale);
    // Point order P0, P1, P2, P3.
    let d01 = sq(t.a);
    let d12 = sq(t.b);
    let d02 = sq(t.c);
    let d23 = sq(t.d);
    let d13 = sq(t.e);
    let d03 = sq(t.f);
    let m = [
        [0.0, 1.0, 1.0, 1.0, 1.0],
        [1.0, 0.0, d01, d02, d03],
        [1.0, d01, 0.0, d12, d13],
        [1.0, d02, d12, 0.0, d23],
        [1.0, d03, d13, d23, 0.0],
    ];
    let det = determinant(m);
    if det >= 0.0 {
        Ok((det / 288.0).sqrt() * scale.powi(3))
    } else if det >= -CLAMP_TOL {
        Ok(0.0)
    } else {
        Err(Error::NotRealizable { det })
    }
}

/// Determinant by Gaussian elimination with partial pivoting.
fn determinant<const N: usize>(mut m: [[f64; N]; N]) -> f64 {
    let mut det = 1.0;
    for col in 0..N {
        let pivot = (col..N)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .expect("non-empty range");
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in col + 1..N {
            let factor = m[row][col] / m[col][col];
            let pivot_row = m[col];
            for (v, p) in m[row].iter_mut().zip(pivot_row).skip(col) {
                *v -= factor * p;
            }
        }
    }
    det
}

/// Height of `P3` above the plane of the base triangle `P0 P1 P2`, `3V/Δ`.
pub fn tetra_height(t: TetraDistances) -> Result<f64> {
    let base = heron_area(t.base())?;
    let scale = t.a.max(t.b).max(t.c);
    if base <= CLAMP_TOL * scale * scale {
        return Err(Error::DegenerateBase { index: None });
    }
    Ok(3.0 * cayley_menger_volume(t)? / base)
}

/// `det(P1−P0, P2−P1, P3−P2)`, six times the signed tetrahedron volume.
pub fn signed_volume6(p0: Point3, p1: Point3, p2: Point3, p3: Point3) -> f64 {
    (p1 - p0).cross(p2 - p1).dot(p3 - p2)
}
