#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "spectra/group.hpp"
#include "spectra/limits.hpp"
#include "spectra/ring.hpp"

namespace spectra {

/// N(R): additive group R x R with (a,x)(b,y) = (0,ab). Generators of the
/// first copy come first. Throws OrderOverflow above limits.order_cap.
FiniteRing construct_N(const FiniteRing& r, const Limits& limits = {});

/// G_N: the elements of N under a o b = a + b + ab, identity 0. Requires N
/// associative (NotAssociative) and nilpotent (NotNilpotent).
FiniteGroup circle_group(const FiniteRing& n, const Limits& limits = {});

/// Optional randomization of the coset representatives used by
/// commutator_ring; the default picks the lowest index in each coset.
struct RepresentativeChoice {
  std::optional<std::uint64_t> random_seed;
};

struct CommutatorRing {
  FiniteRing ring;
  /// ring element of (gZ, 1) and (Z, z); image[g] for g in G is (gZ, z_g)
  /// where g = rep(gZ) * z_g
  std::vector<Element> image;
};

/// R_G on G/Z + Z with (aZ,x)(bZ,y) = (Z,[a,b]). Requires class <= 2
/// (NotClass2).
CommutatorRing commutator_ring_with_map(const FiniteGroup& g, RepresentativeChoice choice = {},
                                        const Limits& limits = {});
FiniteRing commutator_ring(const FiniteGroup& g, const Limits& limits = {});

/// Pairs (a,b) of ring elements with (a,b)(c,d) = (a+c, ac+b+d); the pair is
/// encoded as a + |R| * b. Works for any ring.
FiniteGroup malcev_group(const FiniteRing& r, const Limits& limits = {});

/// (g1,g2) encoded as g1 + |G1| * g2.
FiniteGroup direct_product_group(const FiniteGroup& g1, const FiniteGroup& g2,
                                 const Limits& limits = {});
/// Invariants concatenated, block-diagonal structure constants.
FiniteRing direct_product_ring(const FiniteRing& r1, const FiniteRing& r2,
                               const Limits& limits = {});

// ---------------------------------------------------------------------------
// Catalog

enum class CatalogKind {
  Cyclic,
  Dihedral,
  Quaternion8,
  Symmetric,
  Heisenberg,
  Klein4,
  NullRing,
  ZnRing,
  Ut3Ring,
  MatrixRing2,
};

/// Parsed catalog name such as "heisenberg:3", "null:2,2" or "q8".
struct CatalogName {
  CatalogKind kind = CatalogKind::Cyclic;
  std::vector<std::int64_t> params;

  static CatalogName parse(const std::string& text);
  std::string str() const;
  bool is_group() const noexcept;
};

using Structure = std::variant<FiniteGroup, FiniteRing>;

/// Builds and validates a catalog structure. Throws UnknownName or
/// ParamOutOfRange.
Structure catalog(const CatalogName& name, const Limits& limits = {});
Structure catalog(const std::string& name, const Limits& limits = {});
FiniteGroup catalog_group(const std::string& name, const Limits& limits = {});
FiniteRing catalog_ring(const std::string& name, const Limits& limits = {});

/// One-line usage for every catalog entry.
std::vector<std::string> catalog_entries();

/// Unitriangular 3x3 matrices over F_p by direct coordinates:
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
FiniteGroup heisenberg_direct(std::int64_t p);

bool is_prime(std::int64_t n);

}  // namespace spectra
