//! Exact computer algebra for Clifford, Weyl and Clifford-Weyl
//! superalgebras over `Q(i, √2)`.

pub mod clifford;
pub mod clw;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod oracle;
pub mod parity;
pub mod random;
pub mod roots;
pub mod scalar;
pub mod space;
pub mod star;
pub mod symmetric;
mod text;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use space::SuperSpace;
