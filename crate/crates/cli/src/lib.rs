//! Command implementations behind the `navspace` binary.

pub mod commands;
mod config;
pub mod selftest;

pub use config::{RunConfig, KEYS};
