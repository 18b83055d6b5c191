//! Support library for the `mincuts` binary and its test harness.

pub mod corpus;
