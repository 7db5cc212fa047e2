//! Library side of the command-line front end: the small-group
//! catalogue, corpus generation, verification harness and report types.

pub mod corpus;
pub mod families;
pub mod report;
pub mod verify;
