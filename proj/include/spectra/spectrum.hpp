#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectra/limits.hpp"
#include "spectra/probability.hpp"
#include "spectra/rational.hpp"
#include "spectra/ring.hpp"

namespace spectra {

/// A set of probability values with the number of (labeled) structures that
/// attain each one, plus the first structure seen for each value.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::string family, PolySpec poly) : family_(std::move(family)), poly_(poly) {}

  void add(const Rational& value, std::uint64_t count = 1,
           std::optional<FiniteRing> witness = std::nullopt);
  /// Set union with summed multiplicities. Witnesses from *this win ties.
  void merge(const Spectrum& other);

  const std::string& family() const noexcept { return family_; }
  PolySpec poly() const noexcept { return poly_; }
  bool contains(const Rational& v) const { return entries_.count(v) != 0; }
  std::uint64_t count(const Rational& v) const;
  /// Ascending.
  std::vector<Rational> values() const;
  const std::optional<FiniteRing>& witness(const Rational& v) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::uint64_t total_count() const;

 private:
  struct Entry {
    std::uint64_t count = 0;
    std::optional<FiniteRing> witness;
  };
  std::string family_;
  PolySpec poly_{};
  std::map<Rational, Entry> entries_;
};

/// Rings on V + W with (v,w)(v',w') = (0, beta(v,v')).
struct BilinearFamilySpec {
  std::vector<std::int64_t> v_invariants;
  std::vector<std::int64_t> w_invariants;
  /// beta(e_i,e_i) = 0 and beta(e_j,e_i) = -beta(e_i,e_j)
  bool alternating = true;

  std::string str() const;
};

using RingVisitor = std::function<void(const FiniteRing&)>;

/// Number of beta tables the family ranges over. Throws CapExceeded when
/// |V||W| exceeds limits.bilinear_order_cap and ParamOutOfRange for an empty W
/// or V.
std::uint64_t bilinear_candidate_count(const BilinearFamilySpec& spec, const Limits& limits = {});
void enumerate_bilinear_rings(const BilinearFamilySpec& spec, const RingVisitor& visit,
                              const Limits& limits = {});
std::vector<FiniteRing> bilinear_rings(const BilinearFamilySpec& spec, const Limits& limits = {});

struct RingFilter {
  bool associative = false;
  bool commutative = false;
  bool antisymmetric = false;
  bool nilpotent = false;
  /// keep only rings whose power chain reaches 0 by this class
  std::optional<int> max_class;

  bool accepts(const FiniteRing& r) const;
  bool empty() const noexcept {
    return !associative && !commutative && !antisymmetric && !nilpotent && !max_class;
  }
};

/// Number of order-compatible structure-constant tensors on the invariants.
/// Throws CapExceeded (ring order above limits.general_order_cap) or
/// BudgetExceeded (count above limits.candidate_budget, count in message).
std::uint64_t general_candidate_count(const std::vector<std::int64_t>& invariants,
                                      const Limits& limits = {});
/// Visits every accepted tensor in a fixed order, no isomorphism reduction.
void enumerate_general_rings(const std::vector<std::int64_t>& invariants, const RingFilter& filter,
                             const RingVisitor& visit, const Limits& limits = {});
/// The ring at a given position of the sweep (0 <= index < candidate count).
FiniteRing general_ring_at(const std::vector<std::int64_t>& invariants, std::uint64_t index,
                           const Limits& limits = {});

/// Throws EmptyFamily for an empty input.
Spectrum spectrum_of(const std::vector<FiniteRing>& rings, PolySpec f, std::string family = {});

/// Parallel spectrum of a general sweep; the candidate range is split into
/// contiguous shards and shard spectra are merged in shard order.
Spectrum general_spectrum(const std::vector<std::int64_t>& invariants, const RingFilter& filter,
                          PolySpec f, const Limits& limits = {}, unsigned workers = 0);
Spectrum bilinear_spectrum(const BilinearFamilySpec& spec, PolySpec f, const Limits& limits = {});

struct GateViolation {
  Rational value;
  std::string reason;
  std::optional<FiniteRing> witness;
};

struct GateReport {
  bool pass = true;
  std::vector<GateViolation> violations;
};

/// True for 1, 7/16, 11/27, 25/64, 11/32 and (2^(2k)+1)/2^(2k+1), k >= 1.
bool in_large_commuting_list(const Rational& v);

/// Every value >= 11/32 must be in the list above and 1/2 must be absent.
GateReport gate_check_32(const Spectrum& s);

struct RoundTripFailure {
  std::string instance;
  std::string detail;
};

struct RoundTripReport {
  std::uint64_t rings_checked = 0;
  std::uint64_t groups_checked = 0;
  std::uint64_t max_order = 0;
  std::vector<RoundTripFailure> failures;
};

/// For odd rings R with |R| <= cap: Pr_c(R) = Pr_c(G_{N(R)}). For odd
/// class <= 2 groups G with |G| <= cap: Pr_c(G) = Pr_ann(R_G) = Pr_c(R_G).
RoundTripReport odd_round_trip(std::uint64_t order_cap, const Limits& limits = {});

}  // namespace spectra
