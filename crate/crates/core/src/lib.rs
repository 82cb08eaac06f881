//! Numerical certification toolkit for special Weingarten surfaces spanning
//! planar convex curves.

// `!(x > 0.0)` is used on purpose so that NaN inputs are rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod catenoid;
pub mod certify;
pub mod cli;
pub mod curve;
pub mod gexpr;
pub mod limacon;
pub mod numeric;
pub mod report;
pub mod svg;
pub mod weingarten;
