pub mod arith;
pub mod cli;
pub mod cobar;
pub mod error;
pub mod fgl;
pub mod hopf;
pub mod modl;
pub mod numpoly;
pub mod report;
pub mod sample;

pub use error::{Error, Result};
