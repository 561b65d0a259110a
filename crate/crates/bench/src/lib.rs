//! Criterion benchmarks for the `poisson` library; see `benches/`.
