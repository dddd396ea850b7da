//! Verification batteries: every identity and inequality that applies to one
//! point set, collected as [`VerificationReport`]s.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::census::{
    a1_point_edge_in, alt_sum, alt_sum_by_k, census_brute, census_containing_point_in, edge_alt_sum, edge_census_in,
    has_point_left, polygons, CensusTable, DirectedEdge, PolygonRecord, DEFAULT_ORACLE_CAP,
};
use crate::error::{Error, Result};
use crate::generators::{generate, GenKind, GenSpec};
use crate::geometry::PointSet;
use crate::identities::{
    catalogue, closed_form, decompose_weight, m0_expected, m1_expected, mixed_moment_expected, mixed_moment_sum,
    moment, poly_sum, weighted_sum, WeightSpec,
};
use crate::inequalities::check_inequalities_in;
use crate::report::{Context, VerificationReport};
use crate::space::{facet_alt_sum_in, has_point_positive, polytopes, OrientedFacet};
use crate::tuples::count_tr;

/// Which battery to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Planar,
    D3,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "planar" => Ok(Suite::Planar),
            "d3" => Ok(Suite::D3),
            "all" => Ok(Suite::All),
            other => Err(Error::BadParam(format!("unknown suite `{other}`"))),
        }
    }
}

/// Size limits for the more expensive checks.
#[derive(Debug, Clone, Copy)]
pub struct Options {
    /// Largest set compared against the subset-enumeration oracle.
    pub oracle_cap: usize,
    /// Largest set for which edge tuples are counted.
    pub tuple_limit: usize,
    /// Largest set for which per-point and per-edge laws are checked.
    pub local_limit: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { oracle_cap: DEFAULT_ORACLE_CAP, tuple_limit: 10, local_limit: 12 }
    }
}

pub fn context_for(set: &PointSet, seed: Option<u64>, source: impl Into<String>) -> Context {
    Context { n: set.len(), h: set.h(), dim: set.dim(), seed, source: source.into() }
}

fn binom(n: usize) -> i128 {
    (n * n.saturating_sub(1) / 2) as i128
}

fn table_from(set: &PointSet, records: &[PolygonRecord]) -> CensusTable {
    let mut table = CensusTable::new(set.len(), set.h(), set.dim());
    for r in records {
        table.add(r.k(), r.interior, 1);
    }
    table
}

fn render(table: &CensusTable) -> String {
    let parts: Vec<String> = table.entries().map(|(k, l, c)| format!("{k}/{l}:{c}")).collect();
    parts.join(" ")
}

fn oracle_report(set: &PointSet, table: &CensusTable, cap: usize, ctx: &Context) -> Result<Option<VerificationReport>> {
    if set.len() > cap {
        return Ok(None);
    }
    let brute = census_brute(set, cap)?;
    Ok(Some(VerificationReport::equal("oracle-equivalence", render(&brute), render(table), ctx)))
}

fn weight_reports(table: &CensusTable, ctx: &Context) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for w in catalogue(table.n, table.dim) {
        out.push(VerificationReport::equal(
            format!("weighted-{}", w.name),
            closed_form(&w, table.n, table.dim)?,
            weighted_sum(table, &w)?,
            ctx,
        ));
    }
    for r in 0..=2 {
        out.push(VerificationReport::equal(
            format!("mixed-moment-f{r}"),
            mixed_moment_expected(table.n, table.dim, r)?,
            mixed_moment_sum(table, r)?,
            ctx,
        ));
    }
    Ok(out)
}

/// Reconstructs the Fibonacci weighted sum from `n - d` polynomial sums.
fn decomposition_report(table: &CensusTable, ctx: &Context) -> Result<VerificationReport> {
    let (n, dim) = (table.n, table.dim);
    let xs: Vec<BigRational> = (1..=(n - dim) as i64).map(|x| BigRational::from_integer(BigInt::from(x))).collect();
    let w = WeightSpec::fibonacci();
    let coeffs = decompose_weight(&w, n, dim, &xs)?;
    let rebuilt: BigRational = coeffs.iter().zip(&xs).map(|(c, x)| c * poly_sum(table, x)).sum();
    Ok(VerificationReport::equal("decomposition-fib", weighted_sum(table, &w)?, rebuilt, ctx))
}

/// Every planar check on one set.
pub fn planar_battery(set: &PointSet, ctx: &Context, opts: &Options) -> Result<Vec<VerificationReport>> {
    let pts = set.points2()?;
    let (n, h) = (set.len(), set.h());
    let records = polygons(set)?;
    let table = table_from(set, &records);
    let mut out = Vec::new();

    out.extend(oracle_report(set, &table, opts.oracle_cap, ctx)?);
    out.push(VerificationReport::equal("eq1-alternating-empty", binom(n) - n as i128 + 1, alt_sum(&table, 0), ctx));
    out.push(VerificationReport::equal("eq2-weighted-empty", 2 * binom(n) - h as i128, moment(&table, 1), ctx));
    out.push(VerificationReport::equal("a1-equals-interior", (n - h) as i128, alt_sum(&table, 1), ctx));
    out.push(VerificationReport::equal("moment-m0", m0_expected(n, 2), moment(&table, 0), ctx));
    out.push(VerificationReport::equal("moment-m1", m1_expected(n, h, 2), moment(&table, 1), ctx));

    if n <= opts.tuple_limit {
        for r in [2, 3] {
            let tr = count_tr(set, r)? as i128;
            out.push(VerificationReport::equal(format!("moment-{r}-vs-tuples"), -tr, moment(&table, r), ctx));
        }
    }

    if n <= opts.local_limit {
        for p in 0..n {
            let per_point = census_containing_point_in(pts, &records, p);
            let expected = i128::from(!set.is_extreme(p));
            out.push(VerificationReport::equal(format!("a1-point{p}"), expected, alt_sum_by_k(&per_point), ctx));
        }
        let lower = (h.max(4) as i128) - n as i128;
        for p in 0..n {
            for q in (0..n).filter(|&q| q != p) {
                let e = DirectedEdge::new(p, q);
                let counts = edge_census_in(&records, e);
                let left = i128::from(has_point_left(pts, e));
                out.push(VerificationReport::equal(format!("a0-edge{p}-{q}"), left, edge_alt_sum(&counts, 0), ctx));
                let mut total = 0;
                for r in (0..n).filter(|&r| r != p && r != q) {
                    let v = a1_point_edge_in(pts, &records, r, e);
                    total += v;
                    out.push(VerificationReport::one_of(format!("a1-point{r}-edge{p}-{q}"), &[-1, 0, 1], v, ctx));
                }
                // with three points the lower bound would exceed the upper one
                if n >= 4 {
                    out.push(VerificationReport::within(format!("a1-edge{p}-{q}"), lower, 1, total, ctx));
                }
            }
        }
        for t in 3..=n {
            out.extend(check_inequalities_in(pts, set, &table, &records, t, ctx));
        }
    }

    out.extend(weight_reports(&table, ctx)?);
    out.push(decomposition_report(&table, ctx)?);
    if n >= 10 {
        out.push(VerificationReport::at_least("empty-pentagon-exists", 1, table.get(5, 0), ctx));
    }
    Ok(out)
}

/// Every spatial check on one set (at most [`DEFAULT_ORACLE_CAP`] points, or
/// the oracle cap if larger).
pub fn d3_battery(set: &PointSet, ctx: &Context, opts: &Options) -> Result<Vec<VerificationReport>> {
    let pts = set.points3()?;
    let (n, h) = (set.len(), set.h());
    let records = polytopes(set, opts.oracle_cap.max(DEFAULT_ORACLE_CAP))?;
    let mut table = CensusTable::new(n, h, 3);
    for r in &records {
        table.add(r.k(), r.interior, 1);
    }
    let mut out = Vec::new();
    if n <= opts.oracle_cap {
        let brute = census_brute(set, opts.oracle_cap)?;
        out.push(VerificationReport::equal("oracle-equivalence-d3", render(&brute), render(&table), ctx));
    }
    out.push(VerificationReport::equal("a1-equals-interior", (n - h) as i128, alt_sum(&table, 1), ctx));
    out.push(VerificationReport::equal("moment-m0", m0_expected(n, 3), moment(&table, 0), ctx));
    out.push(VerificationReport::equal("moment-m1", m1_expected(n, h, 3), moment(&table, 1), ctx));
    out.extend(weight_reports(&table, ctx)?);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a == b || b == c || a == c || a > b || a > c {
                    continue;
                }
                let f = OrientedFacet::new(a, b, c);
                let expected = i128::from(has_point_positive(pts, f));
                out.push(VerificationReport::equal(
                    format!("facet{a}-{b}-{c}"),
                    expected,
                    facet_alt_sum_in(pts, &records, f),
                    ctx,
                ));
            }
        }
    }
    Ok(out)
}

/// No empty convex 7-gon or larger.
pub fn horton_report(table: &CensusTable, ctx: &Context) -> VerificationReport {
    let large: u64 = table.entries().filter(|&(k, l, _)| k >= 7 && l == 0).map(|(_, _, c)| c).sum();
    VerificationReport::equal("no-empty-7gon", 0, large, ctx)
}

/// The chain construction reaches both ends of the per-edge bound.
pub fn chain_reports(
    set: &PointSet,
    e: DirectedEdge,
    f: DirectedEdge,
    ctx: &Context,
) -> Result<Vec<VerificationReport>> {
    let pts = set.points2()?;
    let records = polygons(set)?;
    let n = set.len();
    let a1 = |d: DirectedEdge| -> i128 {
        (0..n).filter(|&r| r != d.p && r != d.q).map(|r| a1_point_edge_in(pts, &records, r, d)).sum()
    };
    Ok(vec![
        VerificationReport::equal("chain-lower-extreme", 4 - n as i128, a1(e), ctx),
        VerificationReport::equal("chain-upper-extreme", 1, a1(f), ctx),
    ])
}

/// Runs the battery matching `set`'s dimension.
pub fn battery(set: &PointSet, ctx: &Context, opts: &Options) -> Result<Vec<VerificationReport>> {
    match set.dim() {
        2 => planar_battery(set, ctx, opts),
        _ => d3_battery(set, ctx, opts),
    }
}

/// Checks a single loaded set against a suite. A suite that does not match
/// the set's dimension is an input error, except `all`.
pub fn verify_set(set: &PointSet, suite: Suite, ctx: &Context, opts: &Options) -> Result<Vec<VerificationReport>> {
    match (suite, set.dim()) {
        (Suite::Planar, 3) => Err(Error::WrongDimension { expected: 2, actual: 3 }),
        (Suite::D3, 2) => Err(Error::WrongDimension { expected: 3, actual: 2 }),
        _ => battery(set, ctx, opts),
    }
}

/// Generates `trials` sets from `spec` (the seed advancing by one per trial
/// for random sets) and runs the suite on each. For `d3`, random sets are
/// drawn in space; for `all`, random sets are drawn in both dimensions.
pub fn verify_generated(
    spec: &GenSpec,
    suite: Suite,
    trials: usize,
    opts: &Options,
) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for trial in 0..trials.max(1) {
        let mut spec = spec.clone();
        spec.seed = spec.seed.wrapping_add(trial as u64);
        let dims: Vec<usize> = match (spec.kind, suite, spec.dim) {
            (_, _, Some(d)) => vec![d],
            (GenKind::Random | GenKind::Convex, Suite::D3, None) => vec![3],
            (GenKind::Random | GenKind::Convex, Suite::All, None) => vec![2, 3],
            _ => vec![2],
        };
        for dim in dims {
            spec.dim = Some(dim);
            let generated = generate(&spec)?;
            let set = &generated.set;
            let seed = (spec.kind == GenKind::Random).then_some(spec.seed);
            let ctx = context_for(set, seed, spec.to_string());
            out.extend(verify_set(set, suite, &ctx, opts)?);
            if spec.kind == GenKind::Horton {
                let records = polygons(set)?;
                out.push(horton_report(&table_from(set, &records), &ctx));
            }
            if let Some((e, f)) = generated.edges {
                out.extend(chain_reports(set, e, f, &ctx)?);
            }
        }
    }
    Ok(out)
}
