//! Exact census of convex polygons (and polytopes in space) spanned by a point
//! set in general position, counted by number of vertices `k` and number of
//! interior points `l`, together with checks of the identities these counts
//! satisfy: alternating sums, alternating moments, weighted sums whose value
//! depends only on the number of points, and the related inequalities.
//!
//! ```
//! use island_census::{census, Point2, PointSet};
//!
//! let set = PointSet::planar(vec![
//!     Point2::new(0, 0),
//!     Point2::new(4, 0),
//!     Point2::new(2, 4),
//!     Point2::new(2, 1),
//! ])
//! .unwrap();
//! let table = census(&set).unwrap();
//! assert_eq!(table.get(3, 0), 3);
//! assert_eq!(table.get(3, 1), 1);
//! ```

pub mod census;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod identities;
pub mod inequalities;
pub mod io;
pub mod linalg;
pub mod report;
pub mod space;
pub mod tuples;
pub mod verify;

pub use census::{census, census_brute, CensusTable, DirectedEdge, PolygonRecord, DEFAULT_ORACLE_CAP};
pub use error::{Error, Result};
pub use geometry::{orient2d, orient3d, Point2, Point3, PointSet, Sign};
pub use identities::{Weight, WeightSpec};
pub use report::VerificationReport;
pub use space::{census3, OrientedFacet};
