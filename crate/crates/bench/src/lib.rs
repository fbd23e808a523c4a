//! Benchmarks for `fpp-core`; see `benches/core.rs`.
