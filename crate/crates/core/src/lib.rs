//! Packing colorings of paths, cycles, their generalized coronae `G⊙pK_1`,
//! and of their orientations.

pub mod closed_form;
pub mod coloring;
pub mod dot;
pub mod digraph;
pub mod error;
pub mod graph;
pub mod io;
pub mod library;
pub mod oriented;
pub mod pattern;
pub mod solver;
pub mod verify;

pub use coloring::Coloring;
pub use digraph::{enumerate_orientations, orient, orient_arcs, weak_directed_distances, OrientedGraph};
pub use error::{Error, Result};
pub use graph::{distances, CoronaLayout, Distance, DistanceMatrix, Family, Graph, VertexRole};
