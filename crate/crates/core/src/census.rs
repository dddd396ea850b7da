//! Planar census of convex polygons with interior-point counts.
//!
//! Every convex polygon is reached exactly once from its lexicographically
//! smallest vertex (the anchor): the remaining points to the right of the anchor
//! are sorted by angle, and convex chains are grown depth-first, keeping only
//! left turns. The interior count of a polygon is the sum of the interior counts
//! of its fan triangles around the anchor, which is exact because no point of a
//! set in general position lies on a diagonal.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{hull2d, in_triangle_strict, orient2d, Point2, PointSet, Sign};

/// Default largest point count accepted by the brute-force oracles.
pub const DEFAULT_ORACLE_CAP: usize = 12;

/// Exact counts `X[k, l]` of convex `k`-gons (or `k`-vertex polytopes) with
/// exactly `l` interior points. Only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    pub n: usize,
    pub h: usize,
    pub dim: usize,
    counts: BTreeMap<(usize, usize), u64>,
}

impl CensusTable {
    pub fn new(n: usize, h: usize, dim: usize) -> Self {
        CensusTable { n, h, dim, counts: BTreeMap::new() }
    }

    /// `X[k, l]`, zero when absent.
    pub fn get(&self, k: usize, l: usize) -> u64 {
        self.counts.get(&(k, l)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, k: usize, l: usize, count: u64) {
        if count > 0 {
            *self.counts.entry((k, l)).or_insert(0) += count;
        }
    }

    /// Nonzero entries sorted by `(k, l)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.counts.iter().map(|(&(k, l), &c)| (k, l, c))
    }

    pub fn merge(&mut self, other: &CensusTable) {
        for (k, l, c) in other.entries() {
            self.add(k, l, c);
        }
    }

    /// `n - h`.
    pub fn interior_points(&self) -> usize {
        self.n - self.h
    }

    /// Largest `k` with a nonzero entry.
    pub fn max_k(&self) -> usize {
        self.counts.keys().map(|&(k, _)| k).max().unwrap_or(0)
    }
}

/// Ordered pair of point indices; the polygon side is the closed half-plane to
/// its left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectedEdge {
    pub p: usize,
    pub q: usize,
}

impl DirectedEdge {
    pub const fn new(p: usize, q: usize) -> Self {
        DirectedEdge { p, q }
    }

    pub fn reversed(self) -> Self {
        DirectedEdge { p: self.q, q: self.p }
    }
}

/// A convex polygon of the set with its exact interior count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonRecord {
    /// Vertex indices in counterclockwise order, starting at the anchor.
    pub vertices: Vec<usize>,
    pub interior: usize,
}

impl PolygonRecord {
    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    /// True iff `e` is a boundary edge traversed from `e.p` to `e.q` in
    /// counterclockwise order, i.e. the polygon lies to the left of `e`.
    pub fn has_edge(&self, e: DirectedEdge) -> bool {
        let k = self.vertices.len();
        self.vertices.iter().position(|&v| v == e.p).is_some_and(|i| self.vertices[(i + 1) % k] == e.q)
    }

    /// True iff point `q` lies strictly inside the polygon.
    pub fn contains(&self, points: &[Point2], q: usize) -> bool {
        if self.vertices.contains(&q) {
            return false;
        }
        let k = self.vertices.len();
        (0..k).all(|i| {
            let a = points[self.vertices[i]];
            let b = points[self.vertices[(i + 1) % k]];
            orient2d(a, b, points[q]) == Sign::Positive
        })
    }
}

/// Interior counts of all triangles of a planar set.
#[derive(Debug, Clone)]
pub struct TriangleTable {
    n: usize,
    counts: Vec<u32>,
}

impl TriangleTable {
    /// Number of points strictly inside the triangle on `a, b, c` (any order).
    pub fn get(&self, a: usize, b: usize, c: usize) -> usize {
        self.counts[(a * self.n + b) * self.n + c] as usize
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Computes the interior count of every triangle by direct point location.
pub fn triangle_table(set: &PointSet) -> Result<TriangleTable> {
    let pts = set.points2()?;
    let n = pts.len();
    let rows: Vec<Vec<(usize, usize, u32)>> = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut row = Vec::new();
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    let inside = (0..n)
                        .filter(|&q| q != a && q != b && q != c)
                        .filter(|&q| in_triangle_strict(pts[a], pts[b], pts[c], pts[q]))
                        .count() as u32;
                    row.push((b, c, inside));
                }
            }
            row
        })
        .collect();
    let mut counts = vec![0u32; n * n * n];
    for (a, row) in rows.into_iter().enumerate() {
        for (b, c, v) in row {
            for (x, y, z) in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                counts[(x * n + y) * n + z] = v;
            }
        }
    }
    Ok(TriangleTable { n, counts })
}

/// Points lexicographically after `anchor`, sorted counterclockwise by angle
/// around it. They all lie in a half-plane, so the angular order is total.
fn angular_order(pts: &[Point2], anchor: usize) -> Vec<usize> {
    let a = pts[anchor];
    let mut rest: Vec<usize> = (0..pts.len()).filter(|&i| pts[i] > a).collect();
    rest.sort_by(|&i, &j| match orient2d(a, pts[i], pts[j]) {
        Sign::Positive => std::cmp::Ordering::Less,
        Sign::Negative => std::cmp::Ordering::Greater,
        Sign::Zero => std::cmp::Ordering::Equal,
    });
    rest
}

struct AnchorWalk<'a> {
    pts: &'a [Point2],
    tri: &'a TriangleTable,
    anchor: usize,
    order: Vec<usize>,
    chain: Vec<usize>,
}

impl AnchorWalk<'_> {
    /// Extends the chain `anchor, .., order[last]` with every later point that
    /// keeps the chain convex and the anchor on the left of the new edge.
    fn grow<F: FnMut(&[usize], usize)>(&mut self, last: usize, interior: usize, visit: &mut F) {
        let a = self.anchor;
        let tail = self.order[last];
        let prev = self.chain[self.chain.len() - 2];
        for next_pos in (last + 1)..self.order.len() {
            let w = self.order[next_pos];
            if orient2d(self.pts[prev], self.pts[tail], self.pts[w]) != Sign::Positive {
                continue;
            }
            // a convex polygon keeps the anchor to the left of every edge
            if orient2d(self.pts[tail], self.pts[w], self.pts[a]) != Sign::Positive {
                continue;
            }
            let inner = interior + self.tri.get(a, tail, w);
            self.chain.push(w);
            visit(&self.chain, inner);
            self.grow(next_pos, inner, visit);
            self.chain.pop();
        }
    }
}

fn walk_anchor<F: FnMut(&[usize], usize)>(pts: &[Point2], tri: &TriangleTable, anchor: usize, visit: &mut F) {
    let order = angular_order(pts, anchor);
    let mut walk = AnchorWalk { pts, tri, anchor, order, chain: vec![anchor] };
    for first in 0..walk.order.len() {
        let v = walk.order[first];
        walk.chain.push(v);
        grow_from_edge(&mut walk, first, visit);
        walk.chain.pop();
    }
}

fn grow_from_edge<F: FnMut(&[usize], usize)>(walk: &mut AnchorWalk<'_>, first: usize, visit: &mut F) {
    let a = walk.anchor;
    let v = walk.order[first];
    for next_pos in (first + 1)..walk.order.len() {
        let w = walk.order[next_pos];
        // angular order already makes (a, v, w) a left turn
        let inner = walk.tri.get(a, v, w);
        walk.chain.push(w);
        visit(&walk.chain, inner);
        walk.grow(next_pos, inner, visit);
        walk.chain.pop();
    }
}

/// Visits every convex polygon (`k >= 3`) of a planar set exactly once.
pub fn enumerate_polygons<F: FnMut(&PolygonRecord)>(set: &PointSet, mut visit: F) -> Result<()> {
    let pts = set.points2()?;
    let tri = triangle_table(set)?;
    for anchor in 0..pts.len() {
        walk_anchor(pts, &tri, anchor, &mut |chain: &[usize], interior: usize| {
            visit(&PolygonRecord { vertices: chain.to_vec(), interior });
        });
    }
    Ok(())
}

/// All convex polygons of a planar set, in anchor order.
pub fn polygons(set: &PointSet) -> Result<Vec<PolygonRecord>> {
    let mut out = Vec::new();
    enumerate_polygons(set, |r| out.push(r.clone()))?;
    Ok(out)
}

/// Exact census of a planar set. Anchors are processed in parallel and merged
/// by entrywise addition.
pub fn census(set: &PointSet) -> Result<CensusTable> {
    let pts = set.points2()?;
    let n = pts.len();
    let tri = triangle_table(set)?;
    let partial: Vec<Vec<u64>> = (0..n)
        .into_par_iter()
        .map(|anchor| {
            let mut dense = vec![0u64; (n + 1) * (n + 1)];
            walk_anchor(pts, &tri, anchor, &mut |chain: &[usize], interior: usize| {
                dense[chain.len() * (n + 1) + interior] += 1;
            });
            dense
        })
        .collect();
    let mut table = CensusTable::new(n, set.h(), 2);
    for dense in partial {
        for k in 3..=n {
            for l in 0..=(n - k) {
                table.add(k, l, dense[k * (n + 1) + l]);
            }
        }
    }
    Ok(table)
}

/// Census by checking every subset: planar subsets are in convex position iff
/// their hull uses all of them; spatial subsets iff no point lies in a
/// tetrahedron of the others.
pub fn census_brute(set: &PointSet, cap: usize) -> Result<CensusTable> {
    let n = set.len();
    if n > cap || n >= 64 {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let mut table = CensusTable::new(n, set.h(), set.dim());
    let min_k = set.dim() + 1;
    for mask in 1u64..(1u64 << n) {
        let k = mask.count_ones() as usize;
        if k < min_k {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let others = (0..n).filter(|&i| mask >> i & 1 == 0);
        let interior = match set.dim() {
            2 => {
                let pts = set.points2()?;
                let hull = hull2d(pts, &members);
                if hull.len() != k {
                    continue;
                }
                others
                    .filter(|&q| {
                        (0..k).all(|i| orient2d(pts[hull[i]], pts[hull[(i + 1) % k]], pts[q]) == Sign::Positive)
                    })
                    .count()
            }
            _ => {
                let pts = set.points3()?;
                if !crate::space::convex_position_by_simplices(pts, &members) {
                    continue;
                }
                others.filter(|&q| crate::space::inside_by_simplices(pts, &members, q)).count()
            }
        };
        table.add(k, interior, 1);
    }
    Ok(table)
}

/// Counts, per `k`, the convex `k`-gons whose only interior point is `p`.
pub fn census_containing_point(set: &PointSet, p: usize) -> Result<BTreeMap<usize, u64>> {
    set.check_index(p)?;
    let pts = set.points2()?;
    let mut out = BTreeMap::new();
    if set.is_extreme(p) {
        return Ok(out);
    }
    enumerate_polygons(set, |r| {
        if r.interior == 1 && r.contains(pts, p) {
            *out.entry(r.k()).or_insert(0) += 1;
        }
    })?;
    Ok(out)
}

/// Same as [`census_containing_point`] over precomputed polygon records.
pub fn census_containing_point_in(pts: &[Point2], records: &[PolygonRecord], p: usize) -> BTreeMap<usize, u64> {
    let mut out = BTreeMap::new();
    for r in records.iter().filter(|r| r.interior == 1 && r.contains(pts, p)) {
        *out.entry(r.k()).or_insert(0) += 1;
    }
    out
}

fn check_edge(set: &PointSet, e: DirectedEdge) -> Result<()> {
    set.check_index(e.p)?;
    set.check_index(e.q)?;
    if e.p == e.q {
        return Err(Error::EndpointConflict(e.p));
    }
    Ok(())
}

/// `X[k, l](S; e)`: polygons with `e` as a boundary edge lying to its left.
pub fn edge_census(set: &PointSet, e: DirectedEdge) -> Result<BTreeMap<(usize, usize), u64>> {
    check_edge(set, e)?;
    let records = polygons(set)?;
    Ok(edge_census_in(&records, e))
}

/// Same as [`edge_census`] over precomputed polygon records.
pub fn edge_census_in(records: &[PolygonRecord], e: DirectedEdge) -> BTreeMap<(usize, usize), u64> {
    let mut out = BTreeMap::new();
    for r in records.iter().filter(|r| r.has_edge(e)) {
        *out.entry((r.k(), r.interior)).or_insert(0) += 1;
    }
    out
}

fn alt_sign(exponent: usize) -> i128 {
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `A_l = sum_k (-1)^(k+d+1) X[k, l]`; in the plane this is `sum_k (-1)^(k+1) X[k, l]`.
pub fn alt_sum(table: &CensusTable, l: usize) -> i128 {
    table.entries().filter(|&(_, ll, _)| ll == l).map(|(k, _, c)| alt_sign(k + table.dim + 1) * c as i128).sum()
}

/// Alternating sum `sum_k (-1)^(k+1) c_k` of a per-`k` count map.
pub fn alt_sum_by_k(counts: &BTreeMap<usize, u64>) -> i128 {
    counts.iter().map(|(&k, &c)| alt_sign(k + 1) * c as i128).sum()
}

/// Alternating sum over column `l` of a per-edge census.
pub fn edge_alt_sum(counts: &BTreeMap<(usize, usize), u64>, l: usize) -> i128 {
    counts.iter().filter(|(&(_, ll), _)| ll == l).map(|(&(k, _), &c)| alt_sign(k + 1) * c as i128).sum()
}

/// Alternating sum of polygons to the left of `e`, with `e` on the boundary and
/// exactly `p` inside. Always one of -1, 0, 1.
pub fn a1_point_edge(set: &PointSet, p: usize, e: DirectedEdge) -> Result<i128> {
    check_edge(set, e)?;
    set.check_index(p)?;
    if p == e.p || p == e.q {
        return Err(Error::EndpointConflict(p));
    }
    let records = polygons(set)?;
    Ok(a1_point_edge_in(set.points2()?, &records, p, e))
}

/// Same as [`a1_point_edge`] over precomputed polygon records.
pub fn a1_point_edge_in(pts: &[Point2], records: &[PolygonRecord], p: usize, e: DirectedEdge) -> i128 {
    records.iter().filter(|r| r.interior == 1 && r.has_edge(e) && r.contains(pts, p)).map(|r| alt_sign(r.k() + 1)).sum()
}

/// True iff some point other than the endpoints lies strictly left of `e`.
pub fn has_point_left(pts: &[Point2], e: DirectedEdge) -> bool {
    (0..pts.len()).any(|i| i != e.p && i != e.q && orient2d(pts[e.p], pts[e.q], pts[i]) == Sign::Positive)
}
