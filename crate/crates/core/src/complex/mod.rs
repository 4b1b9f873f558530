//! The cell complex of a locus: moves between cells, paths connecting
//! maximal cells, and the intersection graph of one-dimensional loci.

pub mod graph;
pub mod ops;
pub mod path;

pub use graph::{betti_closed_form, build_intersection_graph, IntersectionGraph};
pub use ops::{cycle_out, cycle_out_steps, is_adjacent, swap_in_for, swap_into};
pub use path::{connect_path, descend_height, height, verify_path, walk_to_base};
