//! Benchmarks for fcy-core live under `benches/`.
