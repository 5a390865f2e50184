//! Criterion benchmarks for the `schroder` crate live under `benches/`.
