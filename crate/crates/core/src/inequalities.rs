//! Truncated alternating sums and the inequalities they obey.
//!
//! For `t >= 3`, the partial sum `X[3,1] - X[4,1] + ... + (-1)^(t+1) X[t,1]` is
//! at least `n - h` for odd `t` and at most `n - h` for even `t`, with equality
//! exactly when `X[t+1, 1] = 0`. The same pattern holds per interior point (bound
//! 1, counting polygons whose only interior point is that point) and per
//! directed edge with a nonempty left side (bound 1, empty polygons on the edge).

use std::collections::BTreeMap;

use crate::census::{
    census_containing_point_in, edge_census_in, has_point_left, polygons, CensusTable, DirectedEdge, PolygonRecord,
};
use crate::error::Result;
use crate::geometry::{Point2, PointSet};
use crate::report::{Context, VerificationReport};

fn partial(counts: impl Fn(usize) -> u64, t: usize) -> i128 {
    (3..=t)
        .map(|k| {
            let c = counts(k) as i128;
            if k % 2 == 1 {
                c
            } else {
                -c
            }
        })
        .sum()
}

fn bound_reports(
    id: &str,
    bound: i128,
    counts: impl Fn(usize) -> u64,
    t: usize,
    ctx: &Context,
) -> [VerificationReport; 2] {
    let value = partial(&counts, t);
    let side = if t % 2 == 1 {
        VerificationReport::at_least(format!("{id}-t{t}"), bound, value, ctx)
    } else {
        VerificationReport::at_most(format!("{id}-t{t}"), bound, value, ctx)
    };
    let tight =
        VerificationReport::equal(format!("{id}-tight-iff-next-zero-t{t}"), counts(t + 1) == 0, value == bound, ctx);
    [side, tight]
}

/// All inequality checks for one `t`, over a precomputed census and polygon list.
pub fn check_inequalities_in(
    pts: &[Point2],
    set: &PointSet,
    table: &CensusTable,
    records: &[PolygonRecord],
    t: usize,
    ctx: &Context,
) -> Vec<VerificationReport> {
    let n = set.len();
    let interior = (n - set.h()) as i128;
    let mut out = Vec::new();
    out.extend(bound_reports("partial-a1", interior, |k| table.get(k, 1), t, ctx));

    for p in (0..n).filter(|&p| !set.is_extreme(p)) {
        let per_point: BTreeMap<usize, u64> = census_containing_point_in(pts, records, p);
        let get = |k: usize| per_point.get(&k).copied().unwrap_or(0);
        out.extend(bound_reports(&format!("partial-a1-point{p}"), 1, get, t, ctx));
    }

    for p in 0..n {
        for q in (0..n).filter(|&q| q != p) {
            let e = DirectedEdge::new(p, q);
            if !has_point_left(pts, e) {
                continue;
            }
            let per_edge = edge_census_in(records, e);
            let get = |k: usize| per_edge.get(&(k, 0)).copied().unwrap_or(0);
            out.extend(bound_reports(&format!("partial-a0-edge{p}-{q}"), 1, get, t, ctx));
        }
    }

    out.push(VerificationReport::at_least(
        "x41-lower-bound",
        table.get(3, 1) as i128 - interior,
        table.get(4, 1) as i128,
        ctx,
    ));
    out
}

/// Runs every truncated-sum inequality for a single `t >= 3` on a planar set.
pub fn check_inequalities(set: &PointSet, t: usize, ctx: &Context) -> Result<Vec<VerificationReport>> {
    let pts = set.points2()?;
    let records = polygons(set)?;
    let mut table = CensusTable::new(set.len(), set.h(), 2);
    for r in &records {
        table.add(r.k(), r.interior, 1);
    }
    Ok(check_inequalities_in(pts, set, &table, &records, t, ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    #[test]
    fn convex_sets_are_tight() {
        let s = PointSet::planar((1..=6).map(|i| Point2::new(i, i * i)).collect()).unwrap();
        for t in 3..=6 {
            let reports = check_inequalities(&s, t, &Context::default()).unwrap();
            let main = reports.iter().find(|r| r.id == format!("partial-a1-t{t}")).unwrap();
            assert_eq!(main.computed, "0");
            assert!(all_pass(&reports));
        }
    }

    #[test]
    fn small_set_with_interior_points() {
        let coords = [(0, 0), (20, 1), (22, 17), (3, 19), (9, 6), (13, 11), (7, 13)];
        let s = PointSet::planar(coords.iter().map(|&(x, y)| Point2::new(x, y)).collect()).unwrap();
        for t in 3..=7 {
            let reports = check_inequalities(&s, t, &Context::default()).unwrap();
            assert!(all_pass(&reports), "{:?}", reports.iter().find(|r| !r.pass));
        }
    }
}
