//! Exact group and Tate cohomology of finite groups, and unramified local
//! class field theory computed on top of it.

pub mod abgroup;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod gmodule;
pub mod group;
pub mod localfield;
pub mod serial;

pub use error::{Error, Result};
