//! Library side of the command-line driver: the bundled catalog, dossier
//! persistence, the ν-search harness, and the catalog reproduction report.

pub mod catalog;
pub mod dossier;
pub mod reproduce;
pub mod search;
