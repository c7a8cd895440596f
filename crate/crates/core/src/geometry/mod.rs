//! Exact geometry on rational boxes: points, intervals with open/closed
//! endpoints, box unions, faces of the unit cube and the depth engine.

pub mod aabox;
pub mod ball;
pub mod depth;
pub mod face;
mod grid;
pub mod interval;
pub mod orientation;
pub mod partition;
pub mod point;
pub mod union;

pub use aabox::AxisBox;
pub use ball::{BallSpec, Openness};
pub use depth::{depth_arrangement, depth_profile, pigeonhole_ratio, DepthProfile, DepthResult};
pub use face::{Face, FaceTag, Vertex};
pub use interval::Interval;
pub use orientation::{oriented_quadrant, Orientation};
pub use partition::{check_partition, PartitionDefect};
pub use point::{clamp_map, linf_distance, on_opposite_faces, smallest_face, Point};
pub use union::{boxunion_difference, boxunion_measure, minkowski_sum_open_box, BoxUnion};
