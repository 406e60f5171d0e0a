//! Exact construction and verification of the quantum integral of the deformed
//! Calogero-Moser-Sutherland system attached to the configuration `AG2`.

pub mod exactfield;
pub mod weylops;
pub mod ag2config;
pub mod cmsbuild;
pub mod verifysuite;
pub mod ratlimit;
