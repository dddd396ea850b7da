//! Convex polytopes spanned by point sets in space.
//!
//! The census visits every subset of at least four points. A subset is in
//! convex position iff each of its points lies on a supporting facet of the
//! subset's hull, and a point is interior iff it is strictly on the inner side
//! of every facet. The brute-force oracle in [`crate::census::census_brute`]
//! uses the independent tetrahedron-containment route below instead.

use rayon::prelude::*;

use crate::census::CensusTable;
use crate::error::{Error, Result};
use crate::geometry::{hull3d_facets, in_tetrahedron_strict, orient3d, Point3, PointSet, Sign};

/// A triple of point indices whose positive side is where
/// `orient3d(a, b, c, .) > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedFacet {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl OrientedFacet {
    pub const fn new(a: usize, b: usize, c: usize) -> Self {
        OrientedFacet { a, b, c }
    }

    pub fn flipped(self) -> Self {
        OrientedFacet { a: self.a, b: self.c, c: self.b }
    }
}

/// A convex polytope spanned by the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeRecord {
    /// Bit `i` set iff point `i` is a vertex.
    pub mask: u64,
    pub interior: usize,
}

impl PolytopeRecord {
    pub fn k(&self) -> usize {
        self.mask.count_ones() as usize
    }
}

/// True iff no member lies inside a tetrahedron spanned by four other members.
pub fn convex_position_by_simplices(pts: &[Point3], members: &[usize]) -> bool {
    members.iter().all(|&v| {
        let rest: Vec<usize> = members.iter().copied().filter(|&u| u != v).collect();
        !inside_by_simplices(pts, &rest, v)
    })
}

/// True iff `q` lies strictly inside some tetrahedron of `members`. In general
/// position this is the same as lying strictly inside their hull.
pub fn inside_by_simplices(pts: &[Point3], members: &[usize], q: usize) -> bool {
    let m = members.len();
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                for l in (k + 1)..m {
                    let [a, b, c, d] = [members[i], members[j], members[k], members[l]];
                    if in_tetrahedron_strict(pts[a], pts[b], pts[c], pts[d], pts[q]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn check_cap(set: &PointSet, cap: usize) -> Result<()> {
    let n = set.len();
    if n > cap || n >= 64 {
        Err(Error::OracleCapExceeded { n, cap })
    } else {
        Ok(())
    }
}

/// Every convex polytope of a spatial set with its interior count.
pub fn polytopes(set: &PointSet, cap: usize) -> Result<Vec<PolytopeRecord>> {
    check_cap(set, cap)?;
    let pts = set.points3()?;
    let n = pts.len();
    let records: Vec<PolytopeRecord> = (1u64..(1u64 << n))
        .into_par_iter()
        .filter(|mask| mask.count_ones() >= 4)
        .filter_map(|mask| {
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let facets = hull3d_facets(pts, &members);
            let mut on_hull = 0u64;
            for f in &facets {
                for &v in f {
                    on_hull |= 1 << v;
                }
            }
            if on_hull != mask {
                return None;
            }
            let interior = (0..n)
                .filter(|&q| mask >> q & 1 == 0)
                .filter(|&q| facets.iter().all(|f| orient3d(pts[f[0]], pts[f[1]], pts[f[2]], pts[q]) == Sign::Negative))
                .count();
            Some(PolytopeRecord { mask, interior })
        })
        .collect();
    Ok(records)
}

/// Census of a spatial set: `X[k, l]` for `k >= 4`.
pub fn census3(set: &PointSet, cap: usize) -> Result<CensusTable> {
    let mut table = CensusTable::new(set.len(), set.h(), 3);
    for r in polytopes(set, cap)? {
        table.add(r.k(), r.interior, 1);
    }
    Ok(table)
}

/// Alternating sum `sum_k (-1)^(k+d+1) X[k, 0](S; f)` over empty polytopes
/// having `f` as a facet and lying on its positive side.
pub fn facet_alt_sum(set: &PointSet, f: OrientedFacet, cap: usize) -> Result<i128> {
    for i in [f.a, f.b, f.c] {
        set.check_index(i)?;
    }
    if f.a == f.b || f.b == f.c || f.a == f.c {
        return Err(Error::BadParam("facet vertices must be distinct".into()));
    }
    let records = polytopes(set, cap)?;
    Ok(facet_alt_sum_in(set.points3()?, &records, f))
}

/// Same as [`facet_alt_sum`] over precomputed polytope records.
pub fn facet_alt_sum_in(pts: &[Point3], records: &[PolytopeRecord], f: OrientedFacet) -> i128 {
    let fmask = (1u64 << f.a) | (1u64 << f.b) | (1u64 << f.c);
    records
        .iter()
        .filter(|r| r.interior == 0 && r.mask & fmask == fmask)
        .filter(|r| {
            (0..pts.len())
                .filter(|&q| r.mask >> q & 1 == 1 && fmask >> q & 1 == 0)
                .all(|q| orient3d(pts[f.a], pts[f.b], pts[f.c], pts[q]) == Sign::Positive)
        })
        .map(|r| if (r.k() + 3 + 1) % 2 == 0 { 1 } else { -1 })
        .sum()
}

/// True iff some point lies strictly on the positive side of `f`.
pub fn has_point_positive(pts: &[Point3], f: OrientedFacet) -> bool {
    (0..pts.len()).any(|q| orient3d(pts[f.a], pts[f.b], pts[f.c], pts[q]) == Sign::Positive)
}
