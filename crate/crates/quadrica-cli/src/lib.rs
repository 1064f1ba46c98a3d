//! Application logic for the `quadrica` binary, kept in a library so the
//! acceptance suite can drive the same code paths as the executable.

pub mod app;
pub mod verify;

pub use app::run;
