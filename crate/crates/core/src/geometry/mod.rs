//! Exact point/halfspace scenes and the geometric graph classes built on them.

mod hierarchy;
mod incidence;
mod scene;
mod signrank;
mod udg;

pub mod format;
pub mod generate;

use thiserror::Error;

use crate::graph::format::FormatError;

pub use hierarchy::{measure, point_box_incidence, point_line_incidence, HierarchyMeasure, Line, PointBox};
pub use incidence::{has_biclique, verify_incidence_degeneracy, IncidenceReport, InteriorPoint};
pub use scene::{dot, Halfspace, Scene};
pub use signrank::{
    pattern_index, perturb_last_coordinate, positive_complement, positive_partition, sign_pattern, sign_positive,
    signrank3_decompose, signrank_split, PositiveGroup, SignRank3Decomposition, SignRankPiece, SignRankSplit,
};
pub use udg::{Cell, UdgRealization, CELL_OFFSETS};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("expected dimension {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("point {point} lies on the boundary of halfspace {halfspace}")]
    Boundary { point: usize, halfspace: usize },
    #[error("inner product of row {row} and column {column} is zero")]
    ZeroProduct { row: usize, column: usize },
    #[error("row {0} has a zero last coordinate")]
    ZeroLastCoordinate(usize),
    #[error("normals are not pairwise non-negative")]
    NotPositive,
    #[error("radius must be positive")]
    NonPositiveRadius,
    #[error("points {0} and {1} are exactly one radius apart")]
    UdgBoundary(usize, usize),
    #[error("incidence graph contains the forbidden biclique for s = {s}")]
    NotFree { s: usize },
    #[error("dimension {0} is not supported here")]
    UnsupportedDimension(usize),
    #[error(transparent)]
    Format(#[from] FormatError),
}
