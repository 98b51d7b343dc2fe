#pragma once

#include <cstdint>

namespace spectra {

/// Size caps shared by constructions, enumeration and the counting kernels.
/// Every field can be overridden from the CLI.
struct Limits {
  /// Largest structure a construction (N(R), Mal'cev, products, catalog) may produce.
  std::uint64_t order_cap = 4096;
  /// Rings up to this order get a materialized |R|x|R| product table.
  std::uint64_t table_threshold = 4096;
  /// Ring order cap for exhaustive structure-constant sweeps.
  std::uint64_t general_order_cap = 64;
  /// Ring order cap for bilinear V+W families.
  std::uint64_t bilinear_order_cap = 256;
  /// Candidate tensors a single sweep may visit.
  std::uint64_t candidate_budget = std::uint64_t{1} << 30;
};

/// Hard ceiling on element counts; indices are 32-bit.
inline constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 24;

/// Worker count for the counting kernels: SPECTRA_THREADS if set, else the
/// hardware concurrency (at least 1).
unsigned worker_count();

}  // namespace spectra
