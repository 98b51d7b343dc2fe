#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace spectra {

/// Dense element index. Group elements are 0..n-1; ring elements use the
/// mixed-radix encoding described in ring.hpp.
using Element = std::uint32_t;

/// A finite group stored as its Cayley table.
///
/// Instances are immutable once built. Obtain one from validate_group (which
/// checks every axiom) or from a construction in constructions.hpp.
class FiniteGroup {
 public:
  std::uint32_t order() const noexcept { return n_; }
  Element identity() const noexcept { return identity_; }

  Element op(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  Element inv(Element a) const noexcept { return inverse_[a]; }

  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  std::span<const Element> table() const noexcept { return table_; }

  bool is_abelian() const noexcept;

  /// Trusted constructor for tables produced by the library's own
  /// constructions; only the inverse map is derived. Use validate_group for
  /// anything read from outside.
  static FiniteGroup from_trusted_table(std::uint32_t n, std::vector<Element> table,
                                        Element identity);

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  std::uint32_t n_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

/// Checks closure, the identity law, the Latin-square property and
/// associativity (plain triple loop, early exit). Throws spectra::Error with
/// NotClosed / NoIdentity / NotLatin / NotAssociative; the message carries
/// the witness.
FiniteGroup validate_group(std::uint32_t n, std::span<const std::int64_t> table,
                           std::int64_t identity);

/// Convenience overload for row-major nested tables.
FiniteGroup validate_group(const std::vector<std::vector<std::int64_t>>& table,
                           std::int64_t identity);

inline Element group_op(const FiniteGroup& g, Element a, Element b) { return g.op(a, b); }
inline Element group_inv(const FiniteGroup& g, Element a) { return g.inv(a); }

}  // namespace spectra
