//! Vertex angle-equation machinery: corner packings and their complete
//! enumeration, the corner-equation solver, the fractional-part
//! elimination criterion with its k-table, and the N = 6 case analysis.

pub mod elimination;
pub mod hexagon;
pub mod packing;

pub use elimination::{check_2k_over_n, eq1_evaluate, select_k, Eq1Witness};
pub use hexagon::{n6_case_analysis, N6Branch, N6CaseRecord, N6Verdict};
pub use packing::{enumerate_packings, solve_corner_equation, TrianglePair, VertexEquation};
