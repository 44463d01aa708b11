//! Brute-force checks over small finite fields for split `GL_r`.

pub mod bt1;
pub mod census;
pub mod ff;
pub mod linalg;

pub use bt1::{bt1_final_type, canonical_flag, FinalType, TruncationTriple};
pub use census::{
    census_counts, gl_point_counts, point_count_check, predicted_counts, twisted_move,
    twisted_orbit_enumeration, type_census, OrbitPartition,
};
pub use ff::FiniteField;
