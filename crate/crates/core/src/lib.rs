//! Distance-based vertex partitions of finite simple graphs and the
//! (quasi-)distance-balanced classification built on them.

pub mod balance;
pub mod cli;
pub mod constructions;
pub mod distance;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod rational;
pub mod verification;

pub use balance::{classify, w_partition, BalanceReport, Classification, WPartition};
pub use distance::DistanceMatrix;
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{parse_graph6, to_graph6};
pub use rational::Rational;
