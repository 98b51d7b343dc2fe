#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "spectra/group.hpp"
#include "spectra/limits.hpp"

namespace spectra {

/// Coefficient vector (c_1..c_k) with 0 <= c_m < d_m.
using Coefficients = std::vector<std::int64_t>;
/// sc[i][j] = e_i * e_j as a coefficient vector.
using StructureConstants = std::vector<std::vector<Coefficients>>;

/// A finite, possibly nonassociative ring.
///
/// The additive group is Z_{d_1} x ... x Z_{d_k}; multiplication is the
/// bilinear extension of the generator products sc[i][j]. Elements are dense
/// indices with x_1 as the least significant mixed-radix digit:
/// index = x_1 + d_1*(x_2 + d_2*(...)). The order-1 ring has k = 0.
///
/// The object is an immutable handle; copies share the precomputed tables.
class FiniteRing {
 public:
  std::uint32_t order() const noexcept;
  std::size_t rank() const noexcept;
  std::span<const std::int64_t> invariants() const noexcept;
  const StructureConstants& structure_constants() const noexcept;

  Element zero() const noexcept { return 0; }
  /// The i-th additive generator e_i.
  Element generator(std::size_t i) const noexcept;

  Element encode(std::span<const std::int64_t> coords) const;
  Coefficients decode(Element x) const;
  std::uint32_t digit(Element x, std::size_t i) const noexcept;

  Element add(Element x, Element y) const noexcept;
  Element sub(Element x, Element y) const noexcept;
  Element neg(Element x) const noexcept;
  /// m*x for any integer m.
  Element scale(std::int64_t m, Element x) const noexcept;
  Element mul(Element x, Element y) const noexcept;

  std::uint64_t additive_order(Element x) const noexcept;

  /// out[y] = x*y for every element y (out.size() == order()).
  void left_products(Element x, std::span<Element> out) const;
  /// out[y] = y*x for every element y.
  void right_products(Element x, std::span<Element> out) const;

  bool has_product_table() const noexcept;

  /// Trilinear, so checking generator triples suffices.
  bool is_associative() const;
  bool is_commutative() const;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b);

  struct Impl;

 private:
  friend FiniteRing validate_ring(std::vector<std::int64_t> invariants,
                                  const StructureConstants& sc, const Limits& limits);
  std::shared_ptr<const Impl> impl_;
};

/// Validates the invariant list (every d_i >= 2) and the shape, range and
/// order-compatibility of every structure constant. Throws spectra::Error with
/// InvalidInvariants / MalformedVector / IncompatibleOrder / OrderOverflow.
FiniteRing validate_ring(std::vector<std::int64_t> invariants, const StructureConstants& sc,
                         const Limits& limits = {});

/// All-zero structure constants on the given invariants.
StructureConstants zero_structure_constants(std::span<const std::int64_t> invariants);

inline Element ring_mul(const FiniteRing& r, Element x, Element y) { return r.mul(x, y); }
inline Element ring_add(const FiniteRing& r, Element x, Element y) { return r.add(x, y); }
inline Element ring_neg(const FiniteRing& r, Element x) { return r.neg(x); }

}  // namespace spectra
