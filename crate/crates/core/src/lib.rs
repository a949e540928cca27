pub mod catalog;
pub mod cli;
pub mod cochain;
pub mod config;
pub mod cohomology;
pub mod autext;
pub mod crossmod;
pub mod error;
pub mod factor;
pub mod group;
pub mod io;
pub mod gs;
pub mod kernel;
pub mod module;
pub mod nonabelian;
pub mod snf;

pub use error::{Error, Result};
