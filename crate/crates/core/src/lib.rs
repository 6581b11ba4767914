//! Total colouring of {square, unichord}-free graphs of maximum degree 3.
//!
//! Every such graph other than `K4` has a total colouring with 4 colours.
//! [`engine::total_colour`] finds one by recursing along 1-cutsets and
//! extremal proper 2-cutsets down to sparse graphs and 2-extensions of the
//! Petersen and Heawood graphs, which [`basic`] colours directly.

pub mod basic;
pub mod colouring;
pub mod decomposition;
pub mod dot;
pub mod edge_colouring;
pub mod engine;
pub mod families;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod path_extension;
pub mod recognition;

pub use colouring::{Colour, Relabel, TotalColouring};
pub use engine::{total_colour, EngineError, EngineOptions, Outcome};
pub use graph::{Edge, Element, Graph, Vertex};
