//! Expression language and command-line front end for `clw-core`.

pub mod app;
pub mod eval;
pub mod expr;
pub mod table;

pub use app::run;
