//! Exact computations in combinatorial Hopf algebras of rooted trees and
//! words: Connes-Kreimer, Grossman-Larson and planar tree Hopf algebras,
//! shuffle and quasi-shuffle algebras, Lyndon words and Hall sets, the maps
//! between them, and truncations of the universal singular frame.

pub mod algebra;
pub mod error;
pub mod frame;
pub mod lyndon;
pub mod morphisms;
pub mod parse;
pub mod suites;
pub mod tree_hopf;
pub mod trees;
pub mod words;

pub use algebra::{q, qi, LinComb, Rational, Tensor};
pub use error::{Error, Result};
pub use frame::{ForestFunctional, FrameSeries, UnivariatePoly};
pub use lyndon::{HallForest, HallTree, Orientation};
pub use morphisms::{Composition, NsymWord, Partition};
pub use trees::{Forest, OrderedForest, PlanarTree, Tree};
pub use words::{DualWord, HoffmanPairing, Word};
