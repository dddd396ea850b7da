//! Point files and census serialization.
//!
//! A point file holds one point per line as whitespace-separated integers.
//! Lines starting with `#` are comments, except for an optional `# dim=2` or
//! `# dim=3` header. Without a header the dimension is the column count.

use serde_json::{json, Map, Value};

use crate::census::{alt_sum, CensusTable};
use crate::error::{Error, Result};
use crate::geometry::{Coords, Point2, Point3, PointSet};
use crate::identities::{mixed_moment_sum_any, moment};

/// Largest integer a JSON consumer using doubles can hold exactly.
pub const MAX_SAFE_INTEGER: i128 = (1 << 53) - 1;

/// Parses a point file and validates the set.
pub fn parse_points(text: &str) -> Result<PointSet> {
    let mut dim: Option<usize> = None;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(d) = comment.trim().strip_prefix("dim=") {
                let d: usize =
                    d.trim().parse().map_err(|_| Error::BadParam(format!("line {}: bad dim header", lineno + 1)))?;
                if d != 2 && d != 3 {
                    return Err(Error::BadDimension(d));
                }
                dim = Some(d);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| tok.parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::BadParam(format!("line {}: expected integers, got `{line}`", lineno + 1)))?;
        rows.push(row);
    }
    let dim = match dim {
        Some(d) => d,
        None => rows.first().map(Vec::len).unwrap_or(2),
    };
    if dim != 2 && dim != 3 {
        return Err(Error::BadDimension(dim));
    }
    if let Some(row) = rows.iter().find(|r| r.len() != dim) {
        return Err(Error::WrongDimension { expected: dim, actual: row.len() });
    }
    if dim == 2 {
        PointSet::planar(rows.iter().map(|r| Point2::new(r[0], r[1])).collect())
    } else {
        PointSet::spatial(rows.iter().map(|r| Point3::new(r[0], r[1], r[2])).collect())
    }
}

/// Renders a point set with a dimension header and optional comment lines.
pub fn write_points(set: &PointSet, comments: &[String]) -> String {
    let mut out = format!("# dim={}\n", set.dim());
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    match set.coords() {
        Coords::Planar(pts) => {
            for p in pts {
                out.push_str(&format!("{} {}\n", p.x, p.y));
            }
        }
        Coords::Spatial(pts) => {
            for p in pts {
                out.push_str(&format!("{} {} {}\n", p.x, p.y, p.z));
            }
        }
    }
    out
}

/// An exact integer as a JSON number, or as a decimal string when a double
/// could not hold it.
pub fn exact(v: i128) -> Value {
    if v.abs() <= MAX_SAFE_INTEGER {
        json!(v as i64)
    } else {
        Value::String(v.to_string())
    }
}

/// Census plus derived alternating sums as a JSON object.
pub fn census_json(table: &CensusTable) -> Value {
    let entries: Vec<Value> =
        table.entries().map(|(k, l, c)| json!({ "k": k, "l": l, "count": exact(c as i128) })).collect();
    let mut moments = Map::new();
    let mut mixed = Map::new();
    for r in 0..=2 {
        moments.insert(format!("m{r}"), exact(moment(table, r)));
        mixed.insert(format!("f{r}"), exact(mixed_moment_sum_any(table, r)));
    }
    json!({
        "n": table.n,
        "h": table.h,
        "dim": table.dim,
        "entries": entries,
        "derived": {
            "eq1": exact(alt_sum(table, 0)),
            "eq2": exact(moment(table, 1)),
            "a1": exact(alt_sum(table, 1)),
            "moments": moments,
            "mixed": mixed,
        },
    })
}

/// Census as CSV with header `k,l,count`.
pub fn census_csv(table: &CensusTable) -> String {
    let mut out = String::from("k,l,count\n");
    for (k, l, c) in table.entries() {
        out.push_str(&format!("{k},{l},{c}\n"));
    }
    out
}
