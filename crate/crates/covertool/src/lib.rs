//! Support library for the `covertool` binary: graph text formats, corpus
//! enumeration, and the append-only result cache.

pub mod cache;
pub mod corpus;
pub mod formats;
