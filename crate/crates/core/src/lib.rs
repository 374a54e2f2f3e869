//! Murnaghan-Nakayama expansions of power sums against K-k-Schur and k-Schur
//! functions, computed on bounded partitions and (k+1)-cores.

pub mod actions;
pub mod correspondences;
pub mod error;
pub mod hookwords;
pub mod mnrule;
pub mod shapes;

pub use actions::{act, act_bounded, cyclic_interval, ActionResult, CyclicInterval, Representation};
pub use correspondences::{
    bounded_of_core, core_of_bounded, core_of_word, k_conjugate, word_of_bounded, BoundedPartition, GeneratorWord,
};
pub use error::{Error, Result};
pub use shapes::{Cell, Core, Partition, SkewShape};
