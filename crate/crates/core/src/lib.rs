//! Exact arithmetic on orbifold scrolls, resolution of their coarse central
//! fibers, admissible-cover dual graphs and the boundary classification of the
//! locus of plane quintics in genus 6.

pub mod classify;
pub mod covergraphs;
pub mod frac;
pub mod golden;
pub mod orbiscroll;
pub mod parity;
pub mod recillas;
pub mod resolve;

pub use frac::Frac;
