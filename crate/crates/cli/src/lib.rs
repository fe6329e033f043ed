//! Command-line front end for the bicomplex dynamics library: point
//! classification, orbit inspection, slice rendering and the built-in
//! verification suites.

pub mod commands;
pub mod config;
pub mod par;
pub mod parse;
pub mod verify;
