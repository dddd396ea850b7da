//! Exact integer geometry: orientation predicates, hulls and validated point sets.
//!
//! Determinants are evaluated in `i128` with overflow checks and fall back to
//! arbitrary precision when a product does not fit, so every sign is exact for
//! any `i64` input.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};

/// A planar point with integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: i64,
    pub y: i64,
}

impl Point2 {
    pub const fn new(x: i64, y: i64) -> Self {
        Point2 { x, y }
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A point in space with integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point3 {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl Point3 {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        Point3 { x, y, z }
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Sign of a determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative = -1,
    Zero = 0,
    Positive = 1,
}

impl Sign {
    pub fn of_i128(v: i128) -> Sign {
        match v.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    fn of_big(v: &BigInt) -> Sign {
        if v.is_negative() {
            Sign::Negative
        } else if v.is_positive() {
            Sign::Positive
        } else {
            Sign::Zero
        }
    }

    pub fn value(self) -> i32 {
        self as i32
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

fn det2_i128(a: i128, b: i128, c: i128, d: i128) -> Option<i128> {
    a.checked_mul(d)?.checked_sub(b.checked_mul(c)?)
}

/// Orientation of the triple `(a, b, c)`: positive for a counterclockwise turn.
pub fn orient2d(a: Point2, b: Point2, c: Point2) -> Sign {
    let (bx, by) = (b.x as i128 - a.x as i128, b.y as i128 - a.y as i128);
    let (cx, cy) = (c.x as i128 - a.x as i128, c.y as i128 - a.y as i128);
    match det2_i128(bx, by, cx, cy) {
        Some(v) => Sign::of_i128(v),
        None => {
            let det = BigInt::from(bx) * BigInt::from(cy) - BigInt::from(by) * BigInt::from(cx);
            Sign::of_big(&det)
        }
    }
}

fn det3_i128(r: [[i128; 3]; 3]) -> Option<i128> {
    let m0 = det2_i128(r[1][1], r[1][2], r[2][1], r[2][2])?;
    let m1 = det2_i128(r[1][0], r[1][2], r[2][0], r[2][2])?;
    let m2 = det2_i128(r[1][0], r[1][1], r[2][0], r[2][1])?;
    r[0][0].checked_mul(m0)?.checked_sub(r[0][1].checked_mul(m1)?)?.checked_add(r[0][2].checked_mul(m2)?)
}

fn det3_big(r: [[i128; 3]; 3]) -> BigInt {
    let b = |v: i128| BigInt::from(v);
    let m0 = b(r[1][1]) * b(r[2][2]) - b(r[1][2]) * b(r[2][1]);
    let m1 = b(r[1][0]) * b(r[2][2]) - b(r[1][2]) * b(r[2][0]);
    let m2 = b(r[1][0]) * b(r[2][1]) - b(r[1][1]) * b(r[2][0]);
    b(r[0][0]) * m0 - b(r[0][1]) * m1 + b(r[0][2]) * m2
}

/// Sign of `det[b - a; c - a; d - a]`.
pub fn orient3d(a: Point3, b: Point3, c: Point3, d: Point3) -> Sign {
    let row = |p: Point3| [p.x as i128 - a.x as i128, p.y as i128 - a.y as i128, p.z as i128 - a.z as i128];
    let r = [row(b), row(c), row(d)];
    match det3_i128(r) {
        Some(v) => Sign::of_i128(v),
        None => Sign::of_big(&det3_big(r)),
    }
}

/// True iff `q` lies strictly inside the triangle `abc` (either orientation).
pub fn in_triangle_strict(a: Point2, b: Point2, c: Point2, q: Point2) -> bool {
    let o = orient2d(a, b, c);
    o != Sign::Zero && orient2d(a, b, q) == o && orient2d(b, c, q) == o && orient2d(c, a, q) == o
}

/// True iff `q` lies strictly inside the tetrahedron `abcd` (either orientation).
pub fn in_tetrahedron_strict(a: Point3, b: Point3, c: Point3, d: Point3, q: Point3) -> bool {
    let o = orient3d(a, b, c, d);
    o != Sign::Zero
        && orient3d(q, b, c, d) == o
        && orient3d(a, q, c, d) == o
        && orient3d(a, b, q, d) == o
        && orient3d(a, b, c, q) == o
}

/// Indices of the planar convex hull of `idx`, counterclockwise from the
/// lexicographically smallest point. Assumes no three input points are collinear.
pub fn hull2d(points: &[Point2], idx: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = idx.to_vec();
    order.sort_by_key(|&i| points[i]);
    if order.len() < 3 {
        return order;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * order.len());
    for &i in order.iter() {
        while hull.len() >= 2
            && orient2d(points[hull[hull.len() - 2]], points[hull[hull.len() - 1]], points[i]) != Sign::Positive
        {
            hull.pop();
        }
        hull.push(i);
    }
    let lower = hull.len() + 1;
    for &i in order.iter().rev().skip(1) {
        while hull.len() >= lower
            && orient2d(points[hull[hull.len() - 2]], points[hull[hull.len() - 1]], points[i]) != Sign::Positive
        {
            hull.pop();
        }
        hull.push(i);
    }
    hull.pop();
    hull
}

/// Oriented boundary facets of the hull of `idx` in general position: each triple
/// is returned with its orientation chosen so the remaining points are on the
/// negative side (`orient3d(a, b, c, q) < 0`).
pub fn hull3d_facets(points: &[Point3], idx: &[usize]) -> Vec<[usize; 3]> {
    let m = idx.len();
    let mut facets = Vec::new();
    if m < 4 {
        return facets;
    }
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                let (a, b, c) = (idx[i], idx[j], idx[k]);
                let mut side = Sign::Zero;
                let mut supporting = true;
                for &q in idx {
                    if q == a || q == b || q == c {
                        continue;
                    }
                    let s = orient3d(points[a], points[b], points[c], points[q]);
                    if side == Sign::Zero {
                        side = s;
                    } else if s != side {
                        supporting = false;
                        break;
                    }
                }
                if supporting {
                    if side == Sign::Positive {
                        facets.push([a, c, b]);
                    } else {
                        facets.push([a, b, c]);
                    }
                }
            }
        }
    }
    facets
}

/// Coordinates of a validated point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coords {
    Planar(Vec<Point2>),
    Spatial(Vec<Point3>),
}

/// A point set in general position with its extreme points cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    coords: Coords,
    hull: Vec<usize>,
}

impl PointSet {
    /// Validates a planar point set.
    pub fn planar(points: Vec<Point2>) -> Result<PointSet> {
        validate(Coords::Planar(points))
    }

    /// Validates a point set in space.
    pub fn spatial(points: Vec<Point3>) -> Result<PointSet> {
        validate(Coords::Spatial(points))
    }

    pub fn dim(&self) -> usize {
        match self.coords {
            Coords::Planar(_) => 2,
            Coords::Spatial(_) => 3,
        }
    }

    pub fn len(&self) -> usize {
        match &self.coords {
            Coords::Planar(p) => p.len(),
            Coords::Spatial(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn coords(&self) -> &Coords {
        &self.coords
    }

    /// Extreme points. In the plane these are in counterclockwise hull order
    /// starting at the lexicographically smallest point; in space they are sorted.
    pub fn hull_vertices(&self) -> &[usize] {
        &self.hull
    }

    /// Number of extreme points.
    pub fn h(&self) -> usize {
        self.hull.len()
    }

    pub fn is_extreme(&self, i: usize) -> bool {
        self.hull.contains(&i)
    }

    pub fn points2(&self) -> Result<&[Point2]> {
        match &self.coords {
            Coords::Planar(p) => Ok(p),
            Coords::Spatial(_) => Err(Error::WrongDimension { expected: 2, actual: 3 }),
        }
    }

    pub fn points3(&self) -> Result<&[Point3]> {
        match &self.coords {
            Coords::Spatial(p) => Ok(p),
            Coords::Planar(_) => Err(Error::WrongDimension { expected: 3, actual: 2 }),
        }
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i < self.len() {
            Ok(())
        } else {
            Err(Error::InvalidIndex(i))
        }
    }
}

/// Checks distinctness and general position and computes the extreme points.
pub fn validate(coords: Coords) -> Result<PointSet> {
    match coords {
        Coords::Planar(points) => {
            let n = points.len();
            if n < 3 {
                return Err(Error::TooFewPoints { dim: 2, needed: 3, got: n });
            }
            check_distinct(&points)?;
            for i in 0..n {
                for j in (i + 1)..n {
                    for k in (j + 1)..n {
                        if orient2d(points[i], points[j], points[k]) == Sign::Zero {
                            return Err(Error::DegeneratePosition(vec![i, j, k]));
                        }
                    }
                }
            }
            let all: Vec<usize> = (0..n).collect();
            let hull = hull2d(&points, &all);
            Ok(PointSet { coords: Coords::Planar(points), hull })
        }
        Coords::Spatial(points) => {
            let n = points.len();
            if n < 4 {
                return Err(Error::TooFewPoints { dim: 3, needed: 4, got: n });
            }
            check_distinct(&points)?;
            for i in 0..n {
                for j in (i + 1)..n {
                    for k in (j + 1)..n {
                        for l in (k + 1)..n {
                            if orient3d(points[i], points[j], points[k], points[l]) == Sign::Zero {
                                return Err(Error::DegeneratePosition(vec![i, j, k, l]));
                            }
                        }
                    }
                }
            }
            let all: Vec<usize> = (0..n).collect();
            let mut hull: Vec<usize> = hull3d_facets(&points, &all).into_iter().flatten().collect();
            hull.sort_unstable();
            hull.dedup();
            Ok(PointSet { coords: Coords::Spatial(points), hull })
        }
    }
}

fn check_distinct<P: Ord + Copy>(points: &[P]) -> Result<()> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by_key(|&i| points[i]);
    for w in order.windows(2) {
        if points[w[0]] == points[w[1]] {
            let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
            return Err(Error::DuplicatePoint(a, b));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::new(x, y)
    }

    fn q(x: i64, y: i64, z: i64) -> Point3 {
        Point3::new(x, y, z)
    }

    #[test]
    fn orient2d_examples() {
        assert_eq!(orient2d(p(0, 0), p(1, 0), p(0, 1)), Sign::Positive);
        assert_eq!(orient2d(p(0, 0), p(0, 1), p(1, 0)), Sign::Negative);
        assert_eq!(orient2d(p(0, 0), p(1, 1), p(2, 2)), Sign::Zero);
    }

    #[test]
    fn orient3d_examples() {
        let (a, b, c, d) = (q(0, 0, 0), q(1, 0, 0), q(0, 1, 0), q(0, 0, 1));
        assert_eq!(orient3d(a, b, c, d), Sign::Positive);
        assert_eq!(orient3d(a, b, d, c), Sign::Negative);
        assert_eq!(orient3d(a, b, c, q(1, 1, 0)), Sign::Zero);
    }

    #[test]
    fn huge_coordinates_stay_exact() {
        let m = i64::MAX;
        // (m, m) lies on the diagonal through the origin and (1, 1).
        assert_eq!(orient2d(p(0, 0), p(1, 1), p(m, m)), Sign::Zero);
        assert_eq!(orient2d(p(-m, -m), p(m, m - 1), p(m, m)), Sign::Positive);
        assert_eq!(orient2d(p(i64::MIN, 0), p(i64::MAX, 0), p(0, 1)), Sign::Positive);
        let big = q(m, m, m);
        assert_eq!(orient3d(q(0, 0, 0), q(1, 0, 0), q(0, 1, 0), big), Sign::Positive);
        assert_eq!(orient3d(q(-m, 0, 0), q(m, 0, 0), q(0, m, 0), q(0, 0, -m)), Sign::Negative);
    }

    #[test]
    fn validate_square() {
        let s = PointSet::planar(vec![p(0, 0), p(2, 0), p(2, 2), p(0, 2)]).unwrap();
        assert_eq!(s.h(), 4);
        assert_eq!(s.hull_vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn validate_triangle_with_interior_point() {
        let s = PointSet::planar(vec![p(0, 0), p(4, 0), p(2, 4), p(2, 1)]).unwrap();
        assert_eq!(s.h(), 3);
        assert!(!s.is_extreme(3));
    }

    #[test]
    fn hull_starts_at_lexicographic_minimum() {
        let s = PointSet::planar(vec![p(5, 5), p(0, 3), p(9, 1), p(1, 0), p(4, 3)]).unwrap();
        assert_eq!(s.hull_vertices(), &[1, 3, 2, 0]);
    }

    #[test]
    fn validate_rejects_degenerate_input() {
        let err = PointSet::planar(vec![p(0, 0), p(1, 1), p(2, 2), p(0, 5)]).unwrap_err();
        assert_eq!(err, Error::DegeneratePosition(vec![0, 1, 2]));
        let err = PointSet::planar(vec![p(0, 0), p(1, 3), p(0, 0)]).unwrap_err();
        assert_eq!(err, Error::DuplicatePoint(0, 2));
        let err = PointSet::planar(vec![p(0, 0), p(1, 3)]).unwrap_err();
        assert!(matches!(err, Error::TooFewPoints { .. }));
        let err = PointSet::spatial(vec![q(0, 0, 0), q(1, 0, 0), q(0, 1, 0), q(1, 1, 0), q(0, 0, 1)]).unwrap_err();
        assert_eq!(err, Error::DegeneratePosition(vec![0, 1, 2, 3]));
    }

    #[test]
    fn spatial_hull() {
        let s = PointSet::spatial(vec![q(0, 0, 0), q(6, 0, 0), q(0, 6, 0), q(0, 0, 6), q(1, 1, 1)]).unwrap();
        assert_eq!(s.hull_vertices(), &[0, 1, 2, 3]);
        let facets = hull3d_facets(s.points3().unwrap(), &[0, 1, 2, 3, 4]);
        assert_eq!(facets.len(), 4);
    }

    #[test]
    fn simplex_membership() {
        assert!(in_triangle_strict(p(0, 0), p(4, 0), p(2, 4), p(2, 1)));
        assert!(!in_triangle_strict(p(0, 0), p(4, 0), p(2, 4), p(5, 5)));
        assert!(in_triangle_strict(p(0, 0), p(2, 4), p(4, 0), p(2, 1)));
        let (a, b, c, d) = (q(0, 0, 0), q(6, 0, 0), q(0, 6, 0), q(0, 0, 6));
        assert!(in_tetrahedron_strict(a, b, c, d, q(1, 1, 1)));
        assert!(!in_tetrahedron_strict(a, b, c, d, q(5, 5, 5)));
    }
}
