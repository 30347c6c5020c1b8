//! Exact combinatorics of ordered multiset partitions.
//!
//! The crate computes the `minimaj` and major-index statistics on ordered
//! multiset partitions, the bijection between minimaj-ordered partitions and
//! tuples of tableaux, crystal operators on both sides, the graded
//! polynomials `Val` with their Schur expansions, and the shift bijection
//! carrying `minimaj` to the major index.  Everything is exact (integer
//! polynomial coefficients are arbitrary precision) and deterministic.

pub mod bijection;
pub mod crystal;
pub mod equidist;
pub mod error;
pub mod omp;
pub mod symfunc;
pub mod tableaux;
pub mod verify;

pub use bijection::{from_tableaux, key_from_tuple, to_tableaux};
pub use crystal::{
    crystal_graph, is_highest_weight, lower, lower_explicit, raise, tuple_lower, tuple_raise,
    word_lower, word_raise, Component, CrystalEdge, CrystalGraph,
};
pub use equidist::{
    l_shift, maj_to_minimaj, maj_to_minimaj_with_trace, minimaj_to_maj,
    minimaj_to_maj_with_trace, r_shift, read_inverse, read_tuple, ShiftReason, ShiftStep,
    ShiftTrace,
};
pub use error::{Error, Result};
pub use omp::{
    enumerate_partitions, major_index_by_recursion, render_blocks, BlockParts, DescentData,
    Letter, MinimajView, OrderedMultisetPartition, Weight, WeakOrderedMultisetPartition,
};
pub use symfunc::{
    elementary, gaussian_binomial, partitions_of, schur, t_factorial, t_integer, to_schur_basis,
    val_crystal, val_direct, val_rhs_syt, verify_descent_class, SchurExpansion, SymPolynomial,
    TPolynomial,
};
pub use tableaux::{
    enumerate_ssyt, enumerate_syt, shape_from_descents, syt_des_maj, RibbonShape, Shape, Tableau,
    TableauTuple,
};
pub use verify::{check_names, run_all, run_named, CheckConfig, CheckReport};
