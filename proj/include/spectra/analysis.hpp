#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spectra/group.hpp"
#include "spectra/ring.hpp"

namespace spectra {

/// Membership bitset of a subgroup of a group, or of an additive subgroup of
/// a ring. The factories below check that the set contains the identity and
/// is closed.
class SubgroupMask {
 public:
  static SubgroupMask of_group(const FiniteGroup& g, std::vector<bool> members);
  static SubgroupMask of_ring(const FiniteRing& r, std::vector<bool> members);

  bool contains(Element x) const noexcept { return members_[x]; }
  std::uint32_t size() const noexcept { return size_; }
  std::uint32_t parent_order() const noexcept { return static_cast<std::uint32_t>(members_.size()); }
  bool is_trivial() const noexcept { return size_ == 1; }
  std::vector<Element> elements() const;
  const std::vector<bool>& bits() const noexcept { return members_; }

  /// a subset of b
  bool subset_of(const SubgroupMask& other) const noexcept;

  friend bool operator==(const SubgroupMask&, const SubgroupMask&) = default;

 private:
  SubgroupMask(std::vector<bool> members);
  std::vector<bool> members_;
  std::uint32_t size_ = 0;
};

enum class StructureKind { Group, Ring };

/// Lower central series (groups) or power chain R^1, R^2, ... (rings).
/// class_value is empty when the structure is not nilpotent.
struct NilpotencyReport {
  StructureKind kind = StructureKind::Group;
  std::optional<int> class_value;
  std::vector<SubgroupMask> series;

  bool nilpotent() const noexcept { return class_value.has_value(); }
  bool class_at_most(int c) const noexcept { return class_value && *class_value <= c; }
};

SubgroupMask center_group(const FiniteGroup& g);
/// a^-1 b^-1 a b
Element commutator(const FiniteGroup& g, Element a, Element b);
SubgroupMask generated_subgroup(const FiniteGroup& g, std::span<const Element> seed);
bool is_normal(const FiniteGroup& g, const SubgroupMask& n);

/// G_0 = G, G_i = <[x,g] : x in G_{i-1}, g in G>. Class n means G_n = {e}
/// and G_{n-1} != {e}; the trivial group has class 0.
NilpotencyReport lower_central_series(const FiniteGroup& g);

/// Smallest additive subgroup containing seed.
SubgroupMask additive_span(const FiniteRing& r, std::span<const Element> seed);

/// R^1 = R, R^n = additive span of the union of R^i * R^j over i + j = n.
/// Class n means every n-fold product under every bracketing vanishes and
/// some (n-1)-fold product does not; the null ring has class 2 and the order-1
/// ring class 1.
NilpotencyReport ring_powers(const FiniteRing& r);

bool is_antisymmetric(const FiniteRing& r);
bool is_strongly_antisymmetric(const FiniteRing& r);

struct OrderInfo {
  std::uint64_t order = 0;
  bool is_odd = false;
  /// The prime p when order = p^n with n >= 1.
  std::optional<std::uint64_t> prime;

  bool is_p_ring(std::uint64_t p) const noexcept { return prime && *prime == p; }
};

OrderInfo parity_and_p(std::uint64_t order);
inline OrderInfo parity_and_p(const FiniteGroup& g) { return parity_and_p(g.order()); }
inline OrderInfo parity_and_p(const FiniteRing& r) { return parity_and_p(r.order()); }

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

struct Quotient {
  FiniteGroup group;
  /// coset_of[g] = index of gN in group
  std::vector<Element> coset_of;
  /// lowest element index of each coset
  std::vector<Element> representative;
};

/// Throws NotNormal with a conjugation witness.
Quotient quotient_group(const FiniteGroup& g, const SubgroupMask& n);

struct SubgroupTable {
  FiniteGroup group;
  /// embedding[i] = parent element of the subgroup's i-th element
  std::vector<Element> embedding;
};

/// The subgroup as a standalone group, elements relabeled in increasing order.
SubgroupTable subgroup_as_group(const FiniteGroup& g, const SubgroupMask& h);

struct AbelianDecomposition {
  /// d_1 | d_2 | ... | d_k, each >= 2
  std::vector<std::int64_t> invariants;
  /// basis[i] has order invariants[i] and the basis is independent
  std::vector<Element> basis;
};

/// Splits off a maximal-order cyclic factor (lowest index among ties),
/// recurses on the quotient and lifts the quotient basis back with matching
/// orders. Throws NotAbelian.
AbelianDecomposition abelian_decomposition(const FiniteGroup& a);

std::uint64_t element_order(const FiniteGroup& g, Element x);

struct PrimaryComponent {
  std::uint64_t prime = 0;
  FiniteRing ring;
  /// basis[i] is the element of the parent ring that the component's
  /// generator e_i maps to
  std::vector<Element> basis;

  /// Image of a component element in the parent ring.
  Element embed(const FiniteRing& parent, Element x) const;
};

/// One component per prime divisor of |R|, in increasing prime order.
std::vector<PrimaryComponent> p_primary_decomposition(const FiniteRing& r,
                                                      const Limits& limits = {});

}  // namespace spectra
