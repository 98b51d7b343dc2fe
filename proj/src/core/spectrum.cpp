#include "spectra/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "spectra/analysis.hpp"
#include "spectra/constructions.hpp"
#include "spectra/error.hpp"

namespace spectra {

void Spectrum::add(const Rational& value, std::uint64_t count, std::optional<FiniteRing> witness) {
  auto& entry = entries_[value];
  entry.count += count;
  if (!entry.witness && witness) entry.witness = std::move(witness);
}

void Spectrum::merge(const Spectrum& other) {
  for (const auto& [value, entry] : other.entries_) add(value, entry.count, entry.witness);
}

std::uint64_t Spectrum::count(const Rational& v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? 0 : it->second.count;
}

std::vector<Rational> Spectrum::values() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& [value, entry] : entries_) out.push_back(value);
  return out;
}

const std::optional<FiniteRing>& Spectrum::witness(const Rational& v) const {
  static const std::optional<FiniteRing> kNone;
  auto it = entries_.find(v);
  return it == entries_.end() ? kNone : it->second.witness;
}

std::uint64_t Spectrum::total_count() const {
  std::uint64_t total = 0;
  for (const auto& [value, entry] : entries_) total += entry.count;
  return total;
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::uint64_t product(const std::vector<std::int64_t>& v) {
  std::uint64_t p = 1;
  for (auto d : v) p *= static_cast<std::uint64_t>(d);
  return p;
}

/// Coefficient vectors over dims whose additive order divides g.
std::vector<Coefficients> vectors_dividing(const std::vector<std::int64_t>& dims, std::int64_t g) {
  std::vector<Coefficients> out;
  Coefficients v(dims.size(), 0);
  while (true) {
    std::int64_t ord = 1;
    for (std::size_t m = 0; m < dims.size(); ++m) ord = std::lcm(ord, dims[m] / std::gcd(v[m], dims[m]));
    if (g % ord == 0) out.push_back(v);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == dims[i]) v[i++] = 0;
    if (i == v.size()) return out;
  }
}

std::uint64_t checked_product(const std::vector<std::size_t>& counts, std::uint64_t budget,
                              const std::string& what) {
  std::uint64_t total = 1;
  for (auto c : counts) {
    if (c != 0 && total > budget / c) {
      fail(ErrorCode::BudgetExceeded, what + ": candidate count exceeds budget " +
                                          std::to_string(budget));
    }
    total *= c;
  }
  if (total > budget) {
    fail(ErrorCode::BudgetExceeded, what + ": " + std::to_string(total) +
                                        " candidates exceed budget " + std::to_string(budget));
  }
  return total;
}

struct BilinearPlan {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  std::vector<std::vector<Coefficients>> choices;
  std::uint64_t candidates = 0;
};

BilinearPlan plan_bilinear(const BilinearFamilySpec& spec, const Limits& limits) {
  if (spec.v_invariants.empty() || spec.w_invariants.empty()) {
    fail(ErrorCode::ParamOutOfRange, "bilinear family needs nontrivial V and W");
  }
  for (auto d : spec.v_invariants) {
    if (d < 2) fail(ErrorCode::InvalidInvariants, "V invariants must be >= 2");
  }
  for (auto d : spec.w_invariants) {
    if (d < 2) fail(ErrorCode::InvalidInvariants, "W invariants must be >= 2");
  }
  const auto order = product(spec.v_invariants) * product(spec.w_invariants);
  if (order > limits.bilinear_order_cap) {
    fail(ErrorCode::CapExceeded, spec.str() + " has order " + std::to_string(order) + " (cap " +
                                     std::to_string(limits.bilinear_order_cap) + ")");
  }
  BilinearPlan plan;
  const auto r = spec.v_invariants.size();
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = spec.alternating ? i + 1 : 0; j < r; ++j) {
      plan.entries.emplace_back(i, j);
      plan.choices.push_back(
          vectors_dividing(spec.w_invariants, std::gcd(spec.v_invariants[i], spec.v_invariants[j])));
      counts.push_back(plan.choices.back().size());
    }
  }
  plan.candidates = checked_product(counts, limits.candidate_budget, spec.str());
  return plan;
}

struct GeneralPlan {
  std::vector<std::vector<Coefficients>> choices;  // row-major over (i,j)
  std::uint64_t candidates = 0;
};

GeneralPlan plan_general(const std::vector<std::int64_t>& invariants, const Limits& limits) {
  for (auto d : invariants) {
    if (d < 2) fail(ErrorCode::InvalidInvariants, "invariants must be >= 2");
  }
  const auto order = product(invariants);
  if (order > limits.general_order_cap) {
    fail(ErrorCode::CapExceeded, "order " + std::to_string(order) + " exceeds general cap " +
                                     std::to_string(limits.general_order_cap));
  }
  GeneralPlan plan;
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    for (std::size_t j = 0; j < invariants.size(); ++j) {
      plan.choices.push_back(vectors_dividing(invariants, std::gcd(invariants[i], invariants[j])));
      counts.push_back(plan.choices.back().size());
    }
  }
  plan.candidates = checked_product(counts, limits.candidate_budget, "general sweep");
  return plan;
}

FiniteRing general_from_plan(const std::vector<std::int64_t>& invariants, const GeneralPlan& plan,
                             std::uint64_t index, const Limits& limits) {
  const auto k = invariants.size();
  StructureConstants sc(k, std::vector<Coefficients>(k));
  for (std::size_t e = 0; e < plan.choices.size(); ++e) {
    const auto& opts = plan.choices[e];
    sc[e / k][e % k] = opts[index % opts.size()];
    index /= opts.size();
  }
  return validate_ring(invariants, sc, limits);
}

}  // namespace

std::string BilinearFamilySpec::str() const {
  return "bilinear V=(" + join(v_invariants) + ") W=(" + join(w_invariants) + ")" +
         (alternating ? " alternating" : "");
}

std::uint64_t bilinear_candidate_count(const BilinearFamilySpec& spec, const Limits& limits) {
  return plan_bilinear(spec, limits).candidates;
}

void enumerate_bilinear_rings(const BilinearFamilySpec& spec, const RingVisitor& visit,
                              const Limits& limits) {
  const auto plan = plan_bilinear(spec, limits);
  const auto r = spec.v_invariants.size();
  const auto s = spec.w_invariants.size();
  std::vector<std::int64_t> dims = spec.v_invariants;
  dims.insert(dims.end(), spec.w_invariants.begin(), spec.w_invariants.end());
  for (std::uint64_t index = 0; index < plan.candidates; ++index) {
    auto sc = zero_structure_constants(dims);
    auto rest = index;
    for (std::size_t e = 0; e < plan.entries.size(); ++e) {
      const auto& opts = plan.choices[e];
      const auto& beta = opts[rest % opts.size()];
      rest /= opts.size();
      const auto [i, j] = plan.entries[e];
      for (std::size_t m = 0; m < s; ++m) {
        sc[i][j][r + m] = beta[m];
        if (spec.alternating) {
          const auto w = spec.w_invariants[m];
          sc[j][i][r + m] = (w - beta[m]) % w;
        }
      }
    }
    visit(validate_ring(dims, sc, limits));
  }
}

std::vector<FiniteRing> bilinear_rings(const BilinearFamilySpec& spec, const Limits& limits) {
  std::vector<FiniteRing> out;
  enumerate_bilinear_rings(spec, [&](const FiniteRing& r) { out.push_back(r); }, limits);
  return out;
}

bool RingFilter::accepts(const FiniteRing& r) const {
  if (associative && !r.is_associative()) return false;
  if (commutative && !r.is_commutative()) return false;
  if (antisymmetric && !is_antisymmetric(r)) return false;
  if (nilpotent || max_class) {
    const auto report = ring_powers(r);
    if (!report.nilpotent()) return false;
    if (max_class && *report.class_value > *max_class) return false;
  }
  return true;
}

std::uint64_t general_candidate_count(const std::vector<std::int64_t>& invariants,
                                      const Limits& limits) {
  return plan_general(invariants, limits).candidates;
}

void enumerate_general_rings(const std::vector<std::int64_t>& invariants, const RingFilter& filter,
                             const RingVisitor& visit, const Limits& limits) {
  const auto plan = plan_general(invariants, limits);
  for (std::uint64_t index = 0; index < plan.candidates; ++index) {
    auto ring = general_from_plan(invariants, plan, index, limits);
    if (filter.accepts(ring)) visit(ring);
  }
}

FiniteRing general_ring_at(const std::vector<std::int64_t>& invariants, std::uint64_t index,
                           const Limits& limits) {
  const auto plan = plan_general(invariants, limits);
  if (index >= plan.candidates) {
    fail(ErrorCode::ParamOutOfRange, "candidate index " + std::to_string(index) + " >= " +
                                         std::to_string(plan.candidates));
  }
  return general_from_plan(invariants, plan, index, limits);
}

Spectrum spectrum_of(const std::vector<FiniteRing>& rings, PolySpec f, std::string family) {
  if (rings.empty()) fail(ErrorCode::EmptyFamily, "spectrum of an empty family");
  Spectrum s(std::move(family), f);
  for (const auto& r : rings) s.add(pr_f_ring(r, f).value, 1, r);
  return s;
}

Spectrum general_spectrum(const std::vector<std::int64_t>& invariants, const RingFilter& filter,
                          PolySpec f, const Limits& limits, unsigned workers) {
  const auto plan = plan_general(invariants, limits);
  if (workers == 0) workers = worker_count();
  workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, plan.candidates)));
  std::string family = "general (" + join(invariants) + ")";
  std::vector<Spectrum> shards(workers, Spectrum(family, f));
  auto sweep = [&](unsigned w) {
    const auto begin = plan.candidates * w / workers;
    const auto end = plan.candidates * (w + 1) / workers;
    for (auto index = begin; index < end; ++index) {
      auto ring = general_from_plan(invariants, plan, index, limits);
      if (filter.accepts(ring)) shards[w].add(pr_f_ring(ring, f).value, 1, ring);
    }
  };
  if (workers == 1) {
    sweep(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(sweep, w);
    for (auto& t : threads) t.join();
  }
  Spectrum out(family, f);
  for (const auto& s : shards) out.merge(s);
  if (out.empty()) fail(ErrorCode::EmptyFamily, family + ": no ring passed the filter");
  return out;
}

Spectrum bilinear_spectrum(const BilinearFamilySpec& spec, PolySpec f, const Limits& limits) {
  Spectrum s(spec.str(), f);
  enumerate_bilinear_rings(spec, [&](const FiniteRing& r) { s.add(pr_f_ring(r, f).value, 1, r); },
                           limits);
  if (s.empty()) fail(ErrorCode::EmptyFamily, spec.str());
  return s;
}

bool in_large_commuting_list(const Rational& v) {
  static const Rational kSporadic[] = {Rational(1), Rational(7, 16), Rational(11, 27),
                                       Rational(25, 64), Rational(11, 32)};
  for (const auto& s : kSporadic) {
    if (v == s) return true;
  }
  // (2^(2k)+1) / 2^(2k+1): denominator an odd power of two >= 8, numerator den/2 + 1
  const auto den = v.den();
  if (den < 8 || (den & (den - 1)) != 0) return false;
  const int exponent = __builtin_ctzll(static_cast<unsigned long long>(den));
  return exponent % 2 == 1 && v.num() == den / 2 + 1;
}

GateReport gate_check_32(const Spectrum& s) {
  GateReport report;
  const Rational threshold(11, 32);
  const Rational half(1, 2);
  for (const auto& v : s.values()) {
    if (v == half) {
      report.violations.push_back({v, "1/2 is not a commuting probability of any finite ring",
                                   s.witness(v)});
    } else if (v >= threshold && !in_large_commuting_list(v)) {
      report.violations.push_back({v, "value >= 11/32 outside the known list", s.witness(v)});
    }
  }
  report.pass = report.violations.empty();
  return report;
}

RoundTripReport odd_round_trip(std::uint64_t order_cap, const Limits& limits) {
  Limits inner = limits;
  inner.order_cap = std::max<std::uint64_t>(limits.order_cap, order_cap * order_cap);
  inner.bilinear_order_cap = std::max<std::uint64_t>(limits.bilinear_order_cap, order_cap);
  inner.general_order_cap = std::max<std::uint64_t>(limits.general_order_cap, 9);
  RoundTripReport report;

  std::vector<std::pair<std::string, FiniteRing>> rings;
  auto add_ring = [&](const std::string& label, const FiniteRing& r) {
    if (r.order() % 2 == 1 && r.order() <= order_cap) rings.emplace_back(label, r);
  };
  auto fits = [&](std::uint64_t order) { return order <= order_cap; };

  for (std::int64_t n = 3; fits(static_cast<std::uint64_t>(n)); n += 2) {
    add_ring("zn:" + std::to_string(n), catalog_ring("zn:" + std::to_string(n), inner));
  }
  for (const std::vector<std::int64_t>& dims :
       {std::vector<std::int64_t>{3}, {5}, {3, 3}, {9}, {3, 9}, {5, 5}, {3, 3, 3}, {3, 3, 3, 3}}) {
    if (!fits(product(dims))) continue;
    add_ring("null:" + join(dims), validate_ring(dims, zero_structure_constants(dims), inner));
  }
  if (fits(27)) add_ring("ut3:3", catalog_ring("ut3:3", inner));
  if (fits(81)) {
    add_ring("zn:3 x ut3:3", direct_product_ring(catalog_ring("zn:3", inner),
                                                 catalog_ring("ut3:3", inner), inner));
  }
  for (const std::vector<std::int64_t>& dims :
       {std::vector<std::int64_t>{3}, {5}, {7}, {9}, {3, 3}}) {
    if (!fits(product(dims))) continue;
    std::uint64_t index = 0;
    enumerate_general_rings(dims, {}, [&](const FiniteRing& r) {
      add_ring("general (" + join(dims) + ") #" + std::to_string(index++), r);
    }, inner);
  }
  if (fits(27)) {
    std::uint64_t index = 0;
    enumerate_bilinear_rings({{3, 3}, {3}, false}, [&](const FiniteRing& r) {
      add_ring("bilinear V=(3,3) W=(3) #" + std::to_string(index++), r);
    }, inner);
  }
  if (fits(81)) {
    const auto family = bilinear_rings({{3, 3, 3}, {3}, true}, inner);
    for (std::size_t index : {std::size_t{0}, family.size() / 2, family.size() - 1}) {
      add_ring("bilinear V=(3,3,3) W=(3) alternating #" + std::to_string(index), family[index]);
    }
  }

  std::vector<std::pair<std::string, FiniteGroup>> groups;
  auto add_group = [&](const std::string& label, const FiniteGroup& g) {
    if (g.order() % 2 == 1 && g.order() <= order_cap) groups.emplace_back(label, g);
  };
  for (std::int64_t n = 1; fits(static_cast<std::uint64_t>(n)); n += 2) {
    add_group("cyclic:" + std::to_string(n), catalog_group("cyclic:" + std::to_string(n), inner));
  }
  if (fits(9)) {
    add_group("cyclic:3 x cyclic:3", direct_product_group(catalog_group("cyclic:3", inner),
                                                          catalog_group("cyclic:3", inner), inner));
  }
  if (fits(27)) add_group("heisenberg:3", catalog_group("heisenberg:3", inner));
  if (fits(81)) {
    add_group("heisenberg:3 x cyclic:3",
              direct_product_group(catalog_group("heisenberg:3", inner),
                                   catalog_group("cyclic:3", inner), inner));
  }
  if (fits(125)) add_group("heisenberg:5", catalog_group("heisenberg:5", inner));

  for (const auto& [label, r] : rings) {
    ++report.rings_checked;
    report.max_order = std::max<std::uint64_t>(report.max_order, r.order());
    const auto nr = construct_N(r, inner);
    const auto gn = circle_group(nr, inner);
    const auto lhs = pr_c_ring(r).value;
    const auto rhs = pr_c_group(gn).value;
    if (lhs != rhs) {
      report.failures.push_back({label, "Pr_c(R) = " + lhs.str() + " but Pr_c(G_N(R)) = " + rhs.str()});
    }
    if (r.is_associative() && ring_powers(r).class_at_most(3)) {
      add_group("circle(" + label + ")", circle_group(r, inner));
    }
  }
  for (const auto& [label, g] : groups) {
    ++report.groups_checked;
    report.max_order = std::max<std::uint64_t>(report.max_order, g.order());
    if (!lower_central_series(g).class_at_most(2)) {
      report.failures.push_back({label, "group is not nilpotent of class <= 2"});
      continue;
    }
    const auto rg = commutator_ring(g, inner);
    const auto pg = pr_c_group(g).value;
    const auto pann = pr_ann_ring(rg).value;
    const auto pc = pr_c_ring(rg).value;
    if (rg.order() != g.order() || !is_antisymmetric(rg)) {
      report.failures.push_back({label, "R_G has the wrong order or is not antisymmetric"});
    }
    if (pg != pann || pann != pc) {
      report.failures.push_back({label, "Pr_c(G) = " + pg.str() + ", Pr_ann(R_G) = " + pann.str() +
                                            ", Pr_c(R_G) = " + pc.str()});
    }
  }
  return report;
}

}  // namespace spectra
