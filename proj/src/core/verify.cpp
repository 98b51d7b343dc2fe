#include "spectra/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "spectra/analysis.hpp"
#include "spectra/constructions.hpp"
#include "spectra/error.hpp"
#include "spectra/serialize.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

namespace {

nlohmann::json to_json(const nlohmann::json& j) { return j; }

struct Labeled {
  std::string label;
  FiniteRing ring;
};

struct LabeledGroup {
  std::string label;
  FiniteGroup group;
};

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  void instance(std::uint64_t order, std::uint64_t count = 1) {
    report_.instances += count;
    report_.max_order = std::max(report_.max_order, order);
  }

  template <typename S>
  bool expect(bool ok, const std::string& label, const std::string& violation, const S& witness) {
    if (!ok) report_.failures.push_back({label, violation, to_json(witness)});
    return ok;
  }

  template <typename S>
  bool expect_equal(const Rational& lhs, const Rational& rhs, const std::string& label,
                    const std::string& what, const S& witness) {
    return expect(lhs == rhs, label, what + ": " + lhs.str() + " != " + rhs.str(), witness);
  }

  /// Runs body, converting a library error into a failure.
  template <typename S>
  void guarded(const std::string& label, const S& witness, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      report_.failures.push_back({label, e.what(), to_json(witness)});
    }
  }

  void note(std::string line) { report_.notes.push_back(std::move(line)); }

 private:
  VerifyReport& report_;
};

std::vector<Labeled> catalog_rings(const std::vector<std::string>& names, const Limits& limits) {
  std::vector<Labeled> out;
  for (const auto& n : names) out.push_back({n, catalog_ring(n, limits)});
  return out;
}

std::vector<Labeled> sample_general(const std::vector<std::int64_t>& dims, std::size_t count,
                                    std::mt19937_64& rng, const Limits& limits) {
  const auto total = general_candidate_count(dims, limits);
  std::vector<std::uint64_t> picks;
  std::uniform_int_distribution<std::uint64_t> dist(0, total - 1);
  while (picks.size() < std::min<std::uint64_t>(count, total)) {
    auto p = dist(rng);
    if (std::find(picks.begin(), picks.end(), p) == picks.end()) picks.push_back(p);
  }
  std::sort(picks.begin(), picks.end());
  std::vector<Labeled> out;
  std::string tag;
  for (auto d : dims) tag += (tag.empty() ? "" : ",") + std::to_string(d);
  for (auto p : picks) {
    out.push_back({"general (" + tag + ") #" + std::to_string(p), general_ring_at(dims, p, limits)});
  }
  return out;
}

/// First nonassociative ring of the (2,2) sweep.
Labeled first_nonassociative_22(const Limits& limits) {
  const std::vector<std::int64_t> dims{2, 2};
  const auto total = general_candidate_count(dims, limits);
  for (std::uint64_t i = 0; i < total; ++i) {
    auto r = general_ring_at(dims, i, limits);
    if (!r.is_associative()) return {"general (2,2) #" + std::to_string(i), r};
  }
  fail(ErrorCode::Internal, "no nonassociative ring on (2,2)");
}

void append_bilinear(std::vector<Labeled>& out, const BilinearFamilySpec& spec, const Limits& limits) {
  std::size_t index = 0;
  enumerate_bilinear_rings(spec, [&](const FiniteRing& r) {
    out.push_back({spec.str() + " #" + std::to_string(index++), r});
  }, limits);
}

std::vector<Labeled> small_ring_pool(std::mt19937_64& rng, const Limits& limits) {
  auto pool = catalog_rings({"zn:2", "zn:3", "zn:4", "zn:5", "zn:6", "zn:7", "zn:8", "zn:9", "zn:10",
                             "zn:12", "null:2", "null:2,2", "null:3,3", "null:2,4", "ut3:2", "ut3:3",
                             "matrix2:2"},
                            limits);
  pool.push_back(first_nonassociative_22(limits));
  for (auto& r : sample_general({2, 2}, 8, rng, limits)) pool.push_back(std::move(r));
  append_bilinear(pool, {{2, 2}, {2}, true}, limits);
  return pool;
}

std::vector<LabeledGroup> class2_catalog_groups(const Limits& limits) {
  std::vector<LabeledGroup> out;
  for (const char* name : {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
                           "cyclic:8", "cyclic:12", "klein4", "dihedral:2", "dihedral:4",
                           "quaternion8", "heisenberg:2", "heisenberg:3", "heisenberg:5"}) {
    out.push_back({name, catalog_group(name, limits)});
  }
  out.push_back({"cyclic:2 x cyclic:4",
                 direct_product_group(catalog_group("cyclic:2", limits),
                                      catalog_group("cyclic:4", limits), limits)});
  out.push_back({"quaternion8 x cyclic:3",
                 direct_product_group(catalog_group("quaternion8", limits),
                                      catalog_group("cyclic:3", limits), limits)});
  return out;
}

/// Associative rings of class <= 3 and order <= 64 used by the circle-group suite.
std::vector<Labeled> class3_rings(const Limits& limits) {
  std::vector<Labeled> out = catalog_rings(
      {"ut3:2", "ut3:3", "null:2", "null:3", "null:4", "null:2,2", "null:2,4", "null:8",
       "null:3,3", "null:2,2,2", "null:2,2,2,2", "null:4,4", "null:2,2,2,2,2,2"},
      limits);
  for (const char* base : {"zn:2", "zn:3", "zn:4", "zn:5", "zn:6", "zn:7", "zn:8"}) {
    out.push_back({std::string("N(") + base + ")", construct_N(catalog_ring(base, limits), limits)});
  }
  RingFilter filter;
  filter.associative = true;
  filter.max_class = 3;
  for (const std::vector<std::int64_t>& dims :
       {std::vector<std::int64_t>{2}, {3}, {4}, {5}, {2, 2}, {2, 4}, {3, 3}}) {
    std::string tag;
    for (auto d : dims) tag += (tag.empty() ? "" : ",") + std::to_string(d);
    std::size_t index = 0;
    enumerate_general_rings(dims, filter, [&](const FiniteRing& r) {
      out.push_back({"general (" + tag + ") accepted #" + std::to_string(index++), r});
    }, limits);
  }
  for (const auto& spec : {BilinearFamilySpec{{2, 2}, {2}, true}, BilinearFamilySpec{{2, 2}, {2}, false},
                           BilinearFamilySpec{{2, 2, 2}, {2}, true}, BilinearFamilySpec{{3, 3}, {3}, true},
                           BilinearFamilySpec{{2, 2}, {2, 2}, true},
                           BilinearFamilySpec{{2, 2, 2, 2}, {2}, true},
                           BilinearFamilySpec{{2, 2, 2}, {2, 2}, true}}) {
    append_bilinear(out, spec, limits);
  }
  return out;
}

// ---------------------------------------------------------------------------

void suite_lemma11(Checker& c, std::mt19937_64& rng, const Limits& limits) {
  auto pool = small_ring_pool(rng, limits);
  for (const auto& [label, r] : pool) {
    if (r.order() > 32) continue;
    c.instance(r.order());
    c.guarded(label, r, [&, &label = label, &r = r] {
      const auto n = construct_N(r, limits);
      c.expect(n.order() == r.order() * r.order(), label, "|N(R)| != |R|^2", r);
      c.expect(ring_powers(n).class_at_most(3), label, "N(R) is not nilpotent of class <= 3", r);
      for (auto f : {kCommute, kAnnihilate}) {
        c.expect_equal(pr_f_ring(r, f).value, pr_f_ring(n, f).value, label,
                       "Pr_f(R) vs Pr_f(N(R)) for f=" + f.str(), r);
      }
    });
  }
  c.note("rings of order <= 32 from catalog, general (2,2) and bilinear families");
}

void suite_lemma31(Checker& c, const Limits& limits) {
  for (const auto& [label, n] : class3_rings(limits)) {
    c.instance(n.order());
    c.guarded(label, n, [&, &label = label, &n = n] {
      const auto g = circle_group(n, limits);
      std::vector<std::int64_t> flat(g.table().begin(), g.table().end());
      try {
        validate_group(g.order(), flat, g.identity());
      } catch (const Error& e) {
        c.expect(false, label, std::string("G_N fails validation: ") + e.what(), n);
        return;
      }
      bool same = true;
      for (Element a = 0; a < n.order() && same; ++a) {
        for (Element b = 0; b < n.order() && same; ++b) {
          same = commutator(g, a, b) == n.sub(n.mul(a, b), n.mul(b, a));
        }
      }
      c.expect(same, label, "[a,b] in G_N differs from ab - ba", n);
      for (Element a = 0; a < n.order(); ++a) {
        const auto inverse = n.add(n.neg(a), n.mul(a, a));
        if (!c.expect(g.op(a, inverse) == g.identity(), label, "a o (-a + a^2) != 0", n)) break;
      }
      c.expect(lower_central_series(g).class_at_most(2), label, "G_N has class > 2", n);
      c.expect_equal(pr_c_ring(n).value, pr_c_group(g).value, label, "Pr_c(N) vs Pr_c(G_N)", n);
    });
  }
  c.note("associative rings of class <= 3, order <= 64: catalog, N(Z_n), filtered sweeps, bilinear families");
}

void suite_lemma32(Checker& c, std::uint64_t seed, const Limits& limits) {
  auto groups = class2_catalog_groups(limits);
  std::size_t circle_count = 0;
  for (const auto& [label, n] : class3_rings(limits)) {
    groups.push_back({"circle(" + label + ")", circle_group(n, limits)});
    ++circle_count;
  }
  std::uint64_t index = 0;
  for (const auto& [label, g] : groups) {
    c.instance(g.order());
    c.guarded(label, g, [&, &label = label, &g = g] {
      const auto built = commutator_ring_with_map(g, {}, limits);
      const auto& rg = built.ring;
      try {
        validate_ring(std::vector<std::int64_t>(rg.invariants().begin(), rg.invariants().end()),
                      rg.structure_constants(), limits);
      } catch (const Error& e) {
        c.expect(false, label, std::string("R_G fails validation: ") + e.what(), g);
        return;
      }
      c.expect(is_strongly_antisymmetric(rg), label, "R_G is not strongly antisymmetric", g);
      c.expect(ring_powers(rg).class_at_most(3), label, "R_G has class > 3", g);
      c.expect(rg.order() == g.order(), label, "|R_G| != |G|", g);
      c.expect_equal(pr_c_group(g).value, pr_ann_ring(rg).value, label, "Pr_c(G) vs Pr_ann(R_G)", g);
      if (g.order() <= 64) {
        bool hom = true;
        for (Element a = 0; a < g.order() && hom; ++a) {
          for (Element b = 0; b < g.order() && hom; ++b) {
            hom = rg.mul(built.image[a], built.image[b]) == built.image[commutator(g, a, b)];
          }
        }
        c.expect(hom, label, "image(a)*image(b) != image([a,b])", g);
        const auto shuffled = commutator_ring_with_map(g, {seed + index}, limits);
        c.expect(shuffled.ring == rg, label, "R_G depends on the coset representatives", g);
      }
    });
    ++index;
  }
  c.note("catalog class-2 groups plus " + std::to_string(circle_count) + " circle groups");
}

void suite_lemma33(Checker& c, const Limits& limits) {
  std::vector<Labeled> rings;
  for (const auto& spec : {BilinearFamilySpec{{3, 3}, {3}, true}, BilinearFamilySpec{{3, 3}, {3}, false},
                           BilinearFamilySpec{{3, 3, 3}, {3}, true}, BilinearFamilySpec{{3, 3}, {3, 3}, true},
                           BilinearFamilySpec{{5, 5}, {5}, true}, BilinearFamilySpec{{3, 9}, {3}, true},
                           BilinearFamilySpec{{3, 3}, {9}, true},
                           BilinearFamilySpec{{3, 3, 3}, {3, 3}, true}}) {
    append_bilinear(rings, spec, limits);
  }
  std::uint64_t skipped = 0;
  for (const auto& [label, r] : rings) {
    if (r.order() % 2 == 0 || !is_antisymmetric(r)) {
      ++skipped;
      continue;
    }
    c.instance(r.order());
    c.expect_equal(pr_c_ring(r).value, pr_ann_ring(r).value, label, "Pr_c(R) vs Pr_ann(R)", r);
  }
  c.note("odd bilinear families; " + std::to_string(skipped) + " non-antisymmetric rings skipped");
}

void suite_malcev(Checker& c, std::mt19937_64& rng, const Limits& limits) {
  auto rings = catalog_rings({"zn:2", "zn:3", "zn:4", "zn:5", "zn:6", "zn:8", "null:2,2", "ut3:2",
                              "matrix2:2"},
                             limits);
  rings.push_back(first_nonassociative_22(limits));
  for (auto& r : sample_general({2, 2}, 12, rng, limits)) rings.push_back(std::move(r));
  append_bilinear(rings, {{2, 2}, {2}, true}, limits);
  std::uint64_t nonassociative = 0;
  for (const auto& [label, r] : rings) {
    c.instance(r.order());
    if (!r.is_associative()) ++nonassociative;
    c.guarded(label, r, [&, &label = label, &r = r] {
      const auto g = malcev_group(r, limits);
      std::vector<std::int64_t> flat(g.table().begin(), g.table().end());
      try {
        validate_group(g.order(), flat, g.identity());
      } catch (const Error& e) {
        c.expect(false, label, std::string("Mal'cev group fails validation: ") + e.what(), r);
        return;
      }
      const auto n = r.order();
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          const Element pair = a + n * b;
          const Element inverse = r.neg(a) + n * r.sub(r.mul(a, a), b);
          if (!c.expect(g.inv(pair) == inverse, label, "(a,b)^-1 != (-a, a^2 - b)", r)) return;
        }
      }
      c.expect(lower_central_series(g).class_at_most(2), label, "Mal'cev group has class > 2", r);
      c.expect_equal(pr_c_ring(r).value, pr_c_group(g).value, label, "Pr_c(R) vs Pr_c(M(R))", r);
    });
  }
  c.note(std::to_string(nonassociative) + " nonassociative rings included");
}

void suite_multiplicativity(Checker& c, std::mt19937_64& rng, const Limits& limits) {
  const auto pool = small_ring_pool(rng, limits);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t pairs = 0;
  while (pairs < 25) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    if (std::uint64_t{a.ring.order()} * b.ring.order() > limits.order_cap) continue;
    ++pairs;
    const auto label = a.label + " x " + b.label;
    const auto prod = direct_product_ring(a.ring, b.ring, limits);
    c.instance(prod.order());
    for (auto f : {kCommute, kAnnihilate}) {
      c.expect_equal(pr_f_ring(prod, f).value, pr_f_ring(a.ring, f).value * pr_f_ring(b.ring, f).value,
                     label, "Pr_f(R1 x R2) vs Pr_f(R1) Pr_f(R2) for f=" + f.str(), prod);
      Rational by_primes(1);
      for (const auto& comp : p_primary_decomposition(prod, limits)) {
        by_primes = by_primes * pr_f_ring(comp.ring, f).value;
      }
      c.expect_equal(pr_f_ring(prod, f).value, by_primes, label,
                     "Pr_f(R) vs product over p-components for f=" + f.str(), prod);
    }
  }
  c.note("25 seeded pairs from the small ring pool");
}

void suite_thm21(Checker& c, std::mt19937_64& rng, const Limits& limits) {
  for (const auto& [label, r] : small_ring_pool(rng, limits)) {
    if (r.order() > 32) continue;
    c.instance(r.order());
    c.guarded(label, r, [&, &label = label, &r = r] {
      const auto g = circle_group(construct_N(r, limits), limits);
      c.expect(lower_central_series(g).class_at_most(2), label, "G_N(R) has class > 2", r);
      c.expect_equal(pr_c_ring(r).value, pr_c_group(g).value, label, "Pr_c(R) vs Pr_c(G_N(R))", r);
    });
  }
  for (const auto& [label, g] : class2_catalog_groups(limits)) {
    c.instance(g.order());
    c.guarded(label, g, [&, &label = label, &g = g] {
      const auto rg = commutator_ring(g, limits);
      c.expect(is_strongly_antisymmetric(rg) && ring_powers(rg).class_at_most(3), label,
               "R_G is not in R_sa with class <= 3", g);
      c.expect_equal(pr_c_group(g).value, pr_ann_ring(rg).value, label, "Pr_c(G) vs Pr_ann(R_G)", g);
    });
  }
  c.note("ring side: small ring pool (order <= 32); group side: catalog class-2 groups");
}

void suite_odd22(Checker& c, const Limits& limits) {
  const auto rt = odd_round_trip(81, limits);
  c.instance(rt.max_order, rt.rings_checked + rt.groups_checked);
  c.note(std::to_string(rt.rings_checked) + " odd rings, " + std::to_string(rt.groups_checked) +
         " odd class-2 groups, cap 81");
  for (const auto& f : rt.failures) c.expect(false, f.instance, f.detail, nlohmann::json(nullptr));
}

void suite_gate32(Checker& c, const Limits& limits) {
  std::vector<Spectrum> spectra;
  spectra.push_back(general_spectrum({2, 2}, {}, kCommute, limits));
  spectra.push_back(general_spectrum({2, 4}, {}, kCommute, limits));
  spectra.push_back(general_spectrum({3, 3}, {}, kCommute, limits));
  for (const auto& spec : {BilinearFamilySpec{{2, 2}, {2}, true}, BilinearFamilySpec{{2, 2, 2}, {2}, true},
                           BilinearFamilySpec{{3, 3}, {3}, true}}) {
    spectra.push_back(bilinear_spectrum(spec, kCommute, limits));
  }
  Spectrum all("union", kCommute);
  for (const auto& s : spectra) {
    all.merge(s);
    const auto gate = gate_check_32(s);
    std::string values;
    for (const auto& v : s.values()) values += (values.empty() ? "" : " ") + v.str();
    c.note(s.family() + ": " + std::to_string(s.total_count()) + " rings, values {" + values + "}");
    for (const auto& v : s.values()) {
      if (const auto& w = s.witness(v)) c.instance(w->order());
    }
    for (const auto& violation : gate.violations) {
      c.expect(false, s.family(), violation.value.str() + ": " + violation.reason,
               violation.witness ? to_json(*violation.witness) : nlohmann::json(nullptr));
    }
  }
  c.expect(gate_check_32(all).pass, "union", "gate fails on the union of all spectra",
           nlohmann::json(nullptr));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = {"lemma11", "lemma31", "lemma32",
                                                  "lemma33", "malcev",  "multiplicativity",
                                                  "thm21",   "odd22",   "gate32"};
  return kNames;
}

VerifyReport run_suite(const std::string& name, std::uint64_t seed, const Limits& limits) {
  VerifyReport report;
  report.suite = name;
  report.seed = seed;
  Checker c(report);
  std::mt19937_64 rng(seed);
  const auto start = std::chrono::steady_clock::now();
  if (name == "lemma11") {
    suite_lemma11(c, rng, limits);
  } else if (name == "lemma31") {
    suite_lemma31(c, limits);
  } else if (name == "lemma32") {
    suite_lemma32(c, seed, limits);
  } else if (name == "lemma33") {
    suite_lemma33(c, limits);
  } else if (name == "malcev") {
    suite_malcev(c, rng, limits);
  } else if (name == "multiplicativity") {
    suite_multiplicativity(c, rng, limits);
  } else if (name == "thm21") {
    suite_thm21(c, rng, limits);
  } else if (name == "odd22") {
    suite_odd22(c, limits);
  } else if (name == "gate32") {
    suite_gate32(c, limits);
  } else {
    fail(ErrorCode::UnknownName, "unknown verify suite '" + name + "'");
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"instance", f.instance}, {"violation", f.violation}, {"witness", f.witness}});
  }
  return {{"suite", report.suite},         {"seed", report.seed},
          {"instances", report.instances}, {"max_order", report.max_order},
          {"failures", failures},          {"notes", report.notes},
          {"pass", report.passed()},       {"wall_seconds", report.wall_seconds}};
}

}  // namespace spectra
