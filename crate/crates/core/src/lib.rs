pub mod cli;
pub mod error;
pub mod format;
pub mod octonion;
pub mod oeigen;
pub mod olinsolve;
pub mod omatrix;
pub mod orep;
#[cfg(test)]
mod proptests;
pub mod quaternion;
pub mod random;
pub mod realmat;
pub mod verify;

pub use error::{Error, Result};
pub use octonion::{associator, Octonion};
pub use quaternion::Quaternion;
pub use realmat::{RealMatrix, RealVector};
