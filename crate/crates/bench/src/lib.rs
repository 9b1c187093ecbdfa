//! Criterion benchmarks for the law checkers live in `benches/`.
