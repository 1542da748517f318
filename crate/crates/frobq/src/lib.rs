//! Command-line front end, element text format, JSON/CSV output and a
//! multi-threaded region scan on top of [`frobq_core`].

pub mod cli;
pub mod element;
pub mod json;
pub mod region;

pub use cli::run;
pub use element::{parse_element, ParseElementError};
