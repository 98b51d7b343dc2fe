#pragma once

#include <cstdint>
#include <string>

#include "spectra/group.hpp"
#include "spectra/rational.hpp"
#include "spectra/ring.hpp"

namespace spectra {

/// f(X,Y) = a*XY + b*YX with integer coefficients.
struct PolySpec {
  std::int64_t a = 1;
  std::int64_t b = -1;

  /// "a,b"
  static PolySpec parse(const std::string& text);
  std::string str() const;
  friend bool operator==(const PolySpec&, const PolySpec&) = default;
};

inline constexpr PolySpec kCommute{1, -1};
inline constexpr PolySpec kAnnihilate{1, 0};

enum class CountMethod { Brute, ClassCount };

struct ProbabilityResult {
  Rational value;
  std::uint64_t favorable = 0;
  std::uint64_t total = 0;
  CountMethod method = CountMethod::Brute;
};

/// Number of conjugacy classes.
std::uint64_t conjugacy_class_count(const FiniteGroup& g);

/// Brute: sum of centralizer sizes. ClassCount: k(G)/|G|, reported as
/// k(G)*|G| favorable pairs out of |G|^2.
ProbabilityResult pr_c_group(const FiniteGroup& g, CountMethod method = CountMethod::Brute);

/// Fraction of pairs (x,y) with a*xy + b*yx = 0.
ProbabilityResult pr_f_ring(const FiniteRing& r, PolySpec f);

inline ProbabilityResult pr_c_ring(const FiniteRing& r) { return pr_f_ring(r, kCommute); }
inline ProbabilityResult pr_ann_ring(const FiniteRing& r) { return pr_f_ring(r, kAnnihilate); }

}  // namespace spectra
