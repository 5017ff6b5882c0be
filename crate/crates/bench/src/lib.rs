//! Criterion benchmarks for basex-core live under `benches/`.
