//! Point-set constructions: convex position, seeded random sets, the
//! quadrilateral-with-chain set, Horton sets and small named fixtures.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::census::DirectedEdge;
use crate::error::{Error, Result};
use crate::geometry::{orient2d, orient3d, Point2, Point3, PointSet, Sign};

/// Which construction to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Convex,
    Random,
    Chain,
    Horton,
    Fixture,
}

/// A parsed generator request such as `random:n=9,seed=7` or
/// `fixture:name=triangle-interior`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub seed: u64,
    pub bbox: Option<i64>,
    pub dim: Option<usize>,
    pub name: Option<String>,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize) -> Self {
        GenSpec { kind, n, seed: 0, bbox: None, dim: None, name: None }
    }

    pub fn random(n: usize, seed: u64) -> Self {
        GenSpec { seed, ..Self::new(GenKind::Random, n) }
    }
}

impl FromStr for GenSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::BadParam(msg);
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let kind = match kind {
            "convex" => GenKind::Convex,
            "random" => GenKind::Random,
            "chain" => GenKind::Chain,
            "horton" => GenKind::Horton,
            "fixture" => GenKind::Fixture,
            other => return Err(bad(format!("unknown generator `{other}`"))),
        };
        let mut spec = GenSpec::new(kind, 0);
        for part in rest.split(',').filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| bad(format!("expected key=value, got `{part}`")))?;
            let num = |v: &str| v.parse::<u64>().map_err(|_| bad(format!("bad value for {key}: `{v}`")));
            match key {
                "n" => spec.n = num(value)? as usize,
                "seed" => spec.seed = num(value)?,
                "bbox" => spec.bbox = Some(num(value)? as i64),
                "dim" => spec.dim = Some(num(value)? as usize),
                "name" => spec.name = Some(value.to_string()),
                other => return Err(bad(format!("unknown generator key `{other}`"))),
            }
        }
        if spec.kind == GenKind::Fixture && spec.name.is_none() {
            return Err(bad("fixture needs name=...".into()));
        }
        if spec.kind != GenKind::Fixture && spec.n == 0 {
            return Err(bad("generator needs n=...".into()));
        }
        Ok(spec)
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            GenKind::Convex => "convex",
            GenKind::Random => "random",
            GenKind::Chain => "chain",
            GenKind::Horton => "horton",
            GenKind::Fixture => "fixture",
        };
        write!(f, "{kind}:")?;
        let mut parts = Vec::new();
        if let Some(name) = &self.name {
            parts.push(format!("name={name}"));
        }
        if self.kind != GenKind::Fixture {
            parts.push(format!("n={}", self.n));
        }
        if self.kind == GenKind::Random {
            parts.push(format!("seed={}", self.seed));
        }
        if let Some(b) = self.bbox {
            parts.push(format!("bbox={b}"));
        }
        if let Some(d) = self.dim {
            parts.push(format!("dim={d}"));
        }
        f.write_str(&parts.join(","))
    }
}

/// A generated set, plus the two distinguished edges of the chain construction.
#[derive(Debug, Clone)]
pub struct Generated {
    pub set: PointSet,
    pub edges: Option<(DirectedEdge, DirectedEdge)>,
}

/// Runs a generator request. `dim` defaults to 2 except for 3D-only fixtures.
pub fn generate(spec: &GenSpec) -> Result<Generated> {
    let dim = spec.dim.unwrap_or(2);
    if dim != 2 && dim != 3 {
        return Err(Error::BadDimension(dim));
    }
    let plain = |set| Ok(Generated { set, edges: None });
    match spec.kind {
        GenKind::Convex => plain(gen_convex(spec.n, dim)?),
        GenKind::Random => {
            let side = spec.bbox.unwrap_or_else(|| default_bbox(spec.n));
            plain(gen_random(spec.n, spec.seed, side, dim)?)
        }
        GenKind::Chain => {
            let (set, e, f) = gen_chain(spec.n)?;
            Ok(Generated { set, edges: Some((e, f)) })
        }
        GenKind::Horton => plain(gen_horton(spec.n)?),
        GenKind::Fixture => plain(fixture(spec.name.as_deref().unwrap_or_default())?),
    }
}

/// `n` points on the parabola `(i, i^2)` (plane) or the moment curve
/// `(i, i^2, i^3)` (space), `i = 1..=n`.
pub fn gen_convex(n: usize, dim: usize) -> Result<PointSet> {
    match dim {
        2 => {
            if n < 3 {
                return Err(Error::BadN { n, reason: "convex position needs n >= 3".into() });
            }
            PointSet::planar((1..=n as i64).map(|i| Point2::new(i, i * i)).collect())
        }
        3 => {
            if n < 4 {
                return Err(Error::BadN { n, reason: "convex position in space needs n >= 4".into() });
            }
            PointSet::spatial((1..=n as i64).map(|i| Point3::new(i, i * i, i * i * i)).collect())
        }
        d => Err(Error::BadDimension(d)),
    }
}

/// Side length of the default sampling box, `4 n^2`.
pub fn default_bbox(n: usize) -> i64 {
    4 * (n as i64).pow(2).max(1)
}

/// Seeded uniform integer points in `[0, side)^dim`. Each new point is redrawn
/// until it keeps the set distinct and in general position.
pub fn gen_random(n: usize, seed: u64, side: i64, dim: usize) -> Result<PointSet> {
    if side < 2 {
        return Err(Error::BadParam(format!("bounding box side {side} too small")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = 1000 * n.max(1);
    let mut rejected = 0;
    match dim {
        2 => {
            if n < 3 {
                return Err(Error::BadN { n, reason: "need n >= 3".into() });
            }
            let mut pts: Vec<Point2> = Vec::with_capacity(n);
            while pts.len() < n {
                let c = Point2::new(rng.gen_range(0..side), rng.gen_range(0..side));
                let ok = !pts.contains(&c)
                    && (0..pts.len()).all(|i| ((i + 1)..pts.len()).all(|j| orient2d(pts[i], pts[j], c) != Sign::Zero));
                if ok {
                    pts.push(c);
                } else {
                    rejected += 1;
                    if rejected > budget {
                        return Err(Error::RetryBudgetExceeded(rejected));
                    }
                }
            }
            PointSet::planar(pts)
        }
        3 => {
            if n < 4 {
                return Err(Error::BadN { n, reason: "need n >= 4".into() });
            }
            let mut pts: Vec<Point3> = Vec::with_capacity(n);
            while pts.len() < n {
                let c = Point3::new(rng.gen_range(0..side), rng.gen_range(0..side), rng.gen_range(0..side));
                let m = pts.len();
                let ok = !pts.contains(&c)
                    && (0..m).all(|i| {
                        ((i + 1)..m).all(|j| {
                            // three collinear points make every fourth point coplanar with them
                            let collinear = {
                                let (a, b) = (pts[i], pts[j]);
                                let u = [b.x - a.x, b.y - a.y, b.z - a.z];
                                let v = [c.x - a.x, c.y - a.y, c.z - a.z];
                                u[1] as i128 * v[2] as i128 == u[2] as i128 * v[1] as i128
                                    && u[2] as i128 * v[0] as i128 == u[0] as i128 * v[2] as i128
                                    && u[0] as i128 * v[1] as i128 == u[1] as i128 * v[0] as i128
                            };
                            !collinear && ((j + 1)..m).all(|k| orient3d(pts[i], pts[j], pts[k], c) != Sign::Zero)
                        })
                    });
                if ok {
                    pts.push(c);
                } else {
                    rejected += 1;
                    if rejected > budget {
                        return Err(Error::RetryBudgetExceeded(rejected));
                    }
                }
            }
            PointSet::spatial(pts)
        }
        d => Err(Error::BadDimension(d)),
    }
}

/// The square `(0,0), (M,0), (M,M), (0,M)` with `n - 4` further points on a
/// chain just below the top side, sagging away from it. Returns the set, the
/// bottom edge `e = (0,0) -> (M,0)` with `A_1(S; e) = 4 - n`, and an edge `f`
/// on the chain side with `A_1(S; f) = 1`: the top side itself for `n = 5`,
/// otherwise the edge from the second chain point to `(0,M)`.
pub fn gen_chain(n: usize) -> Result<(PointSet, DirectedEdge, DirectedEdge)> {
    if n < 5 {
        return Err(Error::BadN { n, reason: "chain construction needs n >= 5".into() });
    }
    let m = (n - 4) as i64;
    let step = 4 * (m + 1);
    let side = step * (m + 1);
    let mut pts = vec![Point2::new(0, 0), Point2::new(side, 0), Point2::new(side, side), Point2::new(0, side)];
    for i in 1..=m {
        pts.push(Point2::new(i * step, side - 1 - i * (m + 1 - i)));
    }
    let set = PointSet::planar(pts)?;
    let f = if n == 5 { DirectedEdge::new(2, 3) } else { DirectedEdge::new(5, 3) };
    Ok((set, DirectedEdge::new(0, 1), f))
}

/// Horton set of `n = 2^j` points: the even-ranked half is a Horton set, the
/// odd-ranked half is a Horton set lifted so high that every line through two
/// lower points passes below all upper points and vice versa.
pub fn gen_horton(n: usize) -> Result<PointSet> {
    if n < 4 || !n.is_power_of_two() {
        return Err(Error::BadN { n, reason: "Horton sets need a power of two >= 4".into() });
    }
    PointSet::planar(horton_points(n))
}

fn horton_points(n: usize) -> Vec<Point2> {
    if n == 1 {
        return vec![Point2::new(0, 0)];
    }
    let half = horton_points(n / 2);
    let span = half.iter().map(|p| p.y).max().unwrap_or(0);
    // slopes within a half are at most span / 2 and x stays below n
    let lift = span * (n as i64 + 2) + 1;
    let mut out = Vec::with_capacity(n);
    for p in half {
        out.push(Point2::new(2 * p.x, p.y));
        out.push(Point2::new(2 * p.x + 1, p.y + lift));
    }
    out
}

/// Named small sets used in tests and examples.
pub fn fixture(name: &str) -> Result<PointSet> {
    let planar = |c: &[(i64, i64)]| PointSet::planar(c.iter().map(|&(x, y)| Point2::new(x, y)).collect());
    let spatial = |c: &[(i64, i64, i64)]| PointSet::spatial(c.iter().map(|&(x, y, z)| Point3::new(x, y, z)).collect());
    match name {
        "triangle-interior" => planar(&[(0, 0), (4, 0), (2, 4), (2, 1)]),
        "square" => planar(&[(0, 0), (2, 0), (2, 2), (0, 2)]),
        "convex5" => planar(&[(1, 1), (2, 4), (3, 9), (4, 16), (5, 25)]),
        "tetra" => spatial(&[(0, 0, 0), (6, 0, 0), (0, 6, 0), (0, 0, 6)]),
        "tetra-interior" => spatial(&[(0, 0, 0), (6, 0, 0), (0, 6, 0), (0, 0, 6), (1, 1, 1)]),
        other => Err(Error::BadParam(format!("unknown fixture `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trip() {
        for s in ["random:n=9,seed=7", "horton:n=16", "convex:n=6,dim=3", "fixture:name=tetra", "chain:n=7"] {
            let spec: GenSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("blob:n=3".parse::<GenSpec>().is_err());
        assert!("random:seed=3".parse::<GenSpec>().is_err());
        assert!("random:n=x".parse::<GenSpec>().is_err());
    }

    #[test]
    fn random_is_deterministic() {
        let a = gen_random(8, 1, default_bbox(8), 2).unwrap();
        let b = gen_random(8, 1, default_bbox(8), 2).unwrap();
        assert_eq!(a, b);
        let c = gen_random(8, 2, default_bbox(8), 2).unwrap();
        assert_ne!(a, c);
        let d = gen_random(8, 1, default_bbox(8), 3).unwrap();
        assert_eq!(d.dim(), 3);
    }

    #[test]
    fn tiny_box_exhausts_budget() {
        assert!(matches!(gen_random(10, 0, 2, 2), Err(Error::RetryBudgetExceeded(_))));
    }

    #[test]
    fn convex_sets() {
        assert_eq!(gen_convex(5, 2).unwrap().h(), 5);
        assert_eq!(gen_convex(7, 3).unwrap().h(), 7);
        assert!(gen_convex(2, 2).is_err());
    }

    #[test]
    fn horton_sets_validate() {
        for n in [4, 8, 16, 32, 64] {
            assert_eq!(gen_horton(n).unwrap().len(), n);
        }
        assert!(gen_horton(12).is_err());
    }

    #[test]
    fn chain_attains_both_extremes() {
        use crate::census::{a1_point_edge_in, polygons};
        for n in 5..=7 {
            let (s, e, f) = gen_chain(n).unwrap();
            let pts = s.points2().unwrap();
            let recs = polygons(&s).unwrap();
            let a1 = |d: DirectedEdge| -> i128 {
                (0..n).filter(|&r| r != d.p && r != d.q).map(|r| a1_point_edge_in(pts, &recs, r, d)).sum()
            };
            assert_eq!(a1(e), 4 - n as i128);
            assert_eq!(a1(f), 1);
        }
    }

    #[test]
    fn chain_hull_is_the_square() {
        for n in 5..12 {
            let (s, _, _) = gen_chain(n).unwrap();
            assert_eq!(s.h(), 4);
            assert_eq!(s.len(), n);
        }
    }
}
