pub mod base_fields;
pub mod cli;
pub mod diskoid;
pub mod error;
pub mod newton;
pub mod parse;
pub mod polynomials;
pub mod report;
pub mod suites;
pub mod valuations;
pub mod value_group;
