//! Benchmarks for the algebra kernels live under `benches/`.
