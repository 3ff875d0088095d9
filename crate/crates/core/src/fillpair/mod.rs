//! Filling pairs as combinatorial maps, and the surgery that turns their
//! complementary polygons into a single polygonal cusp.

mod dual;
mod generate;
mod glue;
mod map;
mod pipeline;
mod spread;

pub use dual::{dual_graph, DualGraph};
pub use generate::{enumerate_filling_pairs, pair_from_orders};
pub use glue::{glue_along_forest, GluedPolygon};
pub use map::{
    compute_faces, genus_of, CombinatorialMap, Curve, FaceStructure, GenusData, MapDocument,
};
pub use pipeline::{
    length_lower_bound, verify_bound_pipeline, IntegerIdentity, PipelineReport, SeparationCase,
};
pub use spread::{check_spread_forest, find_spread_forest, SpreadForest, SpreadSearch};
