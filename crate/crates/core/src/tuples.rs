//! Counting `r`-tuples of vertex-disjoint edges in convex position whose
//! common half-plane region has no point of the set in its interior.
//!
//! This is an enumeration independent of the polygon census, so comparing
//! `T_r` with the `r`-th alternating moment of the empty-polygon counts checks
//! both at once.

use rayon::prelude::*;

use crate::census::census;
use crate::error::Result;
use crate::geometry::{hull2d, orient2d, Point2, PointSet, Sign};
use crate::identities::moment;
use crate::report::{Context, VerificationReport};

/// An undirected edge `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

/// True iff the edges are pairwise vertex-disjoint, their endpoints are in
/// convex position, and every edge is a hull edge of the endpoints.
pub fn is_valid_tuple(pts: &[Point2], edges: &[Edge]) -> bool {
    let mut ends: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    ends.sort_unstable();
    if ends.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let hull = hull2d(pts, &ends);
    if hull.len() != ends.len() {
        return false;
    }
    let m = hull.len();
    edges.iter().all(|&(u, v)| {
        let i = hull.iter().position(|&x| x == u).expect("endpoint on hull");
        hull[(i + 1) % m] == v || hull[(i + m - 1) % m] == v
    })
}

/// True iff no point lies strictly inside every closed half-plane bounded by
/// an edge's supporting line and containing the other edges. Assumes
/// [`is_valid_tuple`].
pub fn tau_empty(pts: &[Point2], edges: &[Edge]) -> bool {
    let sides: Vec<(Point2, Point2, Sign)> = edges
        .iter()
        .map(|&(u, v)| {
            let other = edges.iter().find(|&&e| e != (u, v)).expect("r >= 2").0;
            (pts[u], pts[v], orient2d(pts[u], pts[v], pts[other]))
        })
        .collect();
    !(0..pts.len()).any(|q| sides.iter().all(|&(a, b, s)| orient2d(a, b, pts[q]) == s))
}

fn extend(pts: &[Point2], all: &[Edge], from: usize, r: usize, chosen: &mut Vec<Edge>, used: &mut Vec<bool>) -> u64 {
    if chosen.len() == r {
        return u64::from(is_valid_tuple(pts, chosen) && tau_empty(pts, chosen));
    }
    let mut count = 0;
    for i in from..all.len() {
        let (u, v) = all[i];
        if used[u] || used[v] {
            continue;
        }
        used[u] = true;
        used[v] = true;
        chosen.push((u, v));
        count += extend(pts, all, i + 1, r, chosen, used);
        chosen.pop();
        used[u] = false;
        used[v] = false;
    }
    count
}

/// `T_r`: number of unordered valid tuples with empty region.
pub fn count_tr(set: &PointSet, r: usize) -> Result<u64> {
    let pts = set.points2()?;
    let n = pts.len();
    if r < 2 || 2 * r > n {
        return Ok(0);
    }
    let all: Vec<Edge> = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    let count = (0..all.len())
        .into_par_iter()
        .map(|first| {
            let (u, v) = all[first];
            let mut used = vec![false; n];
            used[u] = true;
            used[v] = true;
            let mut chosen = vec![(u, v)];
            extend(pts, &all, first + 1, r, &mut chosen, &mut used)
        })
        .sum();
    Ok(count)
}

/// Checks `M_r(S) = -T_r(S)`.
pub fn verify_moment_tuples(set: &PointSet, r: usize, context: &Context) -> Result<VerificationReport> {
    let table = census(set)?;
    let tr = count_tr(set, r)? as i128;
    Ok(VerificationReport::equal(format!("moment-{r}-vs-tuples"), -tr, moment(&table, r), context))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(coords: &[(i64, i64)]) -> PointSet {
        PointSet::planar(coords.iter().map(|&(x, y)| Point2::new(x, y)).collect()).unwrap()
    }

    fn quad() -> PointSet {
        set(&[(0, 0), (4, 0), (4, 4), (0, 4)])
    }

    #[test]
    fn tuple_validity() {
        let s = quad();
        let pts = s.points2().unwrap();
        assert!(is_valid_tuple(pts, &[(0, 1), (2, 3)]));
        assert!(!is_valid_tuple(pts, &[(0, 2), (1, 3)]));
        assert!(!is_valid_tuple(pts, &[(0, 1), (1, 2)]));
    }

    #[test]
    fn tau_emptiness() {
        let s = quad();
        assert!(tau_empty(s.points2().unwrap(), &[(0, 1), (2, 3)]));
        let s = set(&[(0, 0), (4, 0), (4, 4), (0, 4), (1, 2)]);
        assert!(!tau_empty(s.points2().unwrap(), &[(0, 1), (2, 3)]));
    }

    #[test]
    fn counts() {
        assert_eq!(count_tr(&quad(), 2).unwrap(), 2);
        assert_eq!(count_tr(&quad(), 3).unwrap(), 0);
        let convex5 = set(&(1..=5).map(|i| (i, i * i)).collect::<Vec<_>>());
        let m2 = moment(&census(&convex5).unwrap(), 2);
        assert_eq!(count_tr(&convex5, 2).unwrap() as i128, -m2);
    }

    #[test]
    fn verification_report() {
        let r = verify_moment_tuples(&quad(), 2, &Context::default()).unwrap();
        assert!(r.pass);
        assert_eq!((r.expected.as_str(), r.computed.as_str()), ("-2", "-2"));
    }
}
