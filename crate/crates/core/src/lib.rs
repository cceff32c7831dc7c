pub mod acceptance;
pub mod bipartite;
pub mod bits;
pub mod blockseq;
pub mod decomp;
pub mod error;
pub mod fragility;
pub mod incrim;
pub mod matroid;
pub mod pfield;
pub mod pmatrix;
pub mod reptheory;
mod textio;

pub use error::{Error, Result};
