pub mod error;
pub mod dunklops;
pub mod exactnum;
pub mod laurent;
pub mod linalg;
pub mod onevar;
pub mod orthopoly;
pub mod par;
pub mod rootdata;
pub mod verify;

pub use error::{Error, Result};
