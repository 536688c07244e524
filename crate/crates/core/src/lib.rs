//! Exact computation and cross-checking of the alternating Eulerian
//! polynomials of types A and B.

pub mod exactpoly;
pub mod par;
pub mod permstats;
pub mod grammar;
pub mod families;
pub mod egfseries;
pub mod verify;
pub mod cli;
pub mod report;
