//! Criterion benchmarks for the summation kernels; see `benches/kernels.rs`.
