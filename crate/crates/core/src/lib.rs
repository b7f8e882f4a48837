//! Extensions of finite groups given by Cayley tables: fiber products,
//! pullbacks and pushforwards, Baer sums, the action of `Ext(G, Z)` on
//! extensions with a fixed outer action, and the classification of split
//! extensions, each checked against factor-system and cocycle searches.

pub mod aut;
pub mod catalog;
pub mod classes;
pub mod cli;
pub mod cocycles;
pub mod error;
pub mod extension;
pub mod group;
pub mod hom;
pub mod io;
pub mod outer;
pub mod report;
pub mod split;
pub mod torsor;

#[cfg(test)]
pub(crate) mod testing;

pub use error::{Error, Result};
