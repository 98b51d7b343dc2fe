#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spectra/analysis.hpp"
#include "spectra/constructions.hpp"
#include "spectra/probability.hpp"
#include "spectra/spectrum.hpp"
#include "test_util.hpp"

using namespace spectra;

namespace {

FiniteGroup from_oracle(const oracle::CayleyTable& t) { return validate_group(t.table, t.identity); }

FiniteGroup s3_oracle() { return from_oracle(oracle::cayley(oracle::symmetric(3), oracle::compose)); }

FiniteGroup q8_oracle() { return from_oracle(oracle::cayley(oracle::q8(), oracle::qmul)); }

Element perm_index(const std::vector<oracle::Perm>& elems, const oracle::Perm& p) {
  return static_cast<Element>(std::find(elems.begin(), elems.end(), p) - elems.begin());
}

std::vector<FiniteGroup> group_pool() {
  std::vector<FiniteGroup> out;
  for (const char* name : {"cyclic:1", "cyclic:12", "klein4", "dihedral:3", "dihedral:4", "dihedral:5",
                           "dihedral:8", "q8", "symmetric:3", "symmetric:4", "heisenberg:3",
                           "heisenberg:5"}) {
    out.push_back(catalog_group(name));
  }
  out.push_back(direct_product_group(catalog_group("q8"), catalog_group("cyclic:3")));
  out.push_back(direct_product_group(catalog_group("dihedral:4"), catalog_group("symmetric:3")));
  out.push_back(circle_group(catalog_ring("ut3:2")));
  out.push_back(circle_group(catalog_ring("ut3:3")));
  out.push_back(q8_oracle());
  out.push_back(from_oracle(oracle::cayley(oracle::dihedral8(), oracle::compose)));
  return out;
}

// Brute-force derived subgroup, independent of lower_central_series.
SubgroupMask derived_subgroup(const FiniteGroup& g) {
  std::vector<Element> comms;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) comms.push_back(commutator(g, a, b));
  return generated_subgroup(g, comms);
}

}  // namespace

TEST_CASE("center_group examples") {
  const auto z12 = catalog_group("cyclic:12");
  CHECK(center_group(z12).size() == 12);
  CHECK(center_group(s3_oracle()).size() == 1);
  const auto q8 = q8_oracle();
  const auto z = center_group(q8);
  CHECK(z.size() == 2);
  CHECK(z.contains(0));
  CHECK(z.contains(4));  // -1 in the oracle ordering
  CHECK(center_group(catalog_group("q8")).size() == 2);
}

TEST_CASE("commutator examples") {
  const auto z12 = catalog_group("cyclic:12");
  for (Element a = 0; a < 12; ++a)
    for (Element b = 0; b < 12; ++b) CHECK(commutator(z12, a, b) == z12.identity());
  const auto s3 = oracle::symmetric(3);
  const auto g = s3_oracle();
  for (Element a = 0; a < 6; ++a) CHECK(commutator(g, a, a) == g.identity());
  const auto c = commutator(g, perm_index(s3, {1, 0, 2}), perm_index(s3, {0, 2, 1}));
  const auto& cp = s3[c];
  CHECK(cp != oracle::Perm{0, 1, 2});
  CHECK(oracle::compose(cp, oracle::compose(cp, cp)) == oracle::Perm{0, 1, 2});
}

TEST_CASE("generated_subgroup examples") {
  const auto s3 = oracle::symmetric(3);
  const auto g = s3_oracle();
  const std::vector<Element> e{g.identity()};
  CHECK(generated_subgroup(g, e).is_trivial());
  const std::vector<Element> cyc{perm_index(s3, {1, 2, 0})};
  CHECK(generated_subgroup(g, cyc).size() == 3);
  CHECK(derived_subgroup(q8_oracle()).size() == 2);
  CHECK(derived_subgroup(q8_oracle()) == center_group(q8_oracle()));
}

TEST_CASE("lower_central_series examples") {
  const auto ab = lower_central_series(catalog_group("cyclic:12"));
  REQUIRE(ab.nilpotent());
  CHECK(*ab.class_value == 1);
  const auto q8 = lower_central_series(q8_oracle());
  REQUIRE(q8.nilpotent());
  CHECK(*q8.class_value == 2);
  REQUIRE(q8.series.size() == 3);
  CHECK(q8.series[0].size() == 8);
  CHECK(q8.series[1].size() == 2);
  CHECK(q8.series[2].size() == 1);
  const auto s3 = lower_central_series(s3_oracle());
  CHECK_FALSE(s3.nilpotent());
  CHECK(s3.series.back().size() == 3);
  CHECK(*lower_central_series(catalog_group("cyclic:1")).class_value == 0);
  CHECK(*lower_central_series(catalog_group("dihedral:8")).class_value == 3);
}

TEST_CASE("ring_powers examples") {
  const auto null = ring_powers(catalog_ring("null:2,2"));
  REQUIRE(null.nilpotent());
  CHECK(*null.class_value == 2);
  const auto ut = ring_powers(catalog_ring("ut3:2"));
  REQUIRE(ut.nilpotent());
  CHECK(*ut.class_value == 3);
  CHECK(ut.series[1].size() == 2);
  CHECK_FALSE(ring_powers(catalog_ring("zn:2")).nilpotent());
  CHECK_FALSE(ring_powers(catalog_ring("zn:4")).nilpotent());
}

TEST_CASE("antisymmetry examples") {
  const auto null = catalog_ring("null:3,3");
  CHECK(is_antisymmetric(null));
  CHECK(is_strongly_antisymmetric(null));
  const auto z3 = catalog_ring("zn:3");
  CHECK_FALSE(is_antisymmetric(z3));
  CHECK_FALSE(is_strongly_antisymmetric(z3));
  const auto rq8 = commutator_ring(q8_oracle());
  CHECK(is_antisymmetric(rq8));
  CHECK(is_strongly_antisymmetric(rq8));
  // x*y = -y*x on generators but x*x != 0: antisymmetric only.
  const auto weak = validate_ring({2}, {{{1}}});
  CHECK(is_antisymmetric(weak));
  CHECK_FALSE(is_strongly_antisymmetric(weak));
}

TEST_CASE("parity_and_p examples") {
  const auto a = parity_and_p(8);
  CHECK(a.is_p_ring(2));
  CHECK_FALSE(a.is_odd);
  const auto b = parity_and_p(27);
  CHECK(b.is_p_ring(3));
  CHECK(b.is_odd);
  const auto c = parity_and_p(12);
  CHECK_FALSE(c.prime.has_value());
  CHECK_FALSE(c.is_odd);
  CHECK(prime_divisors(360) == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("quotient_group examples") {
  const auto g = catalog_group("dihedral:4");
  std::vector<bool> all(g.order(), true);
  CHECK(quotient_group(g, SubgroupMask::of_group(g, all)).group.order() == 1);
  std::vector<bool> e(g.order(), false);
  e[g.identity()] = true;
  const auto same = quotient_group(g, SubgroupMask::of_group(g, e));
  CHECK(same.group.order() == 8);
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b)
      CHECK(same.group.op(same.coset_of[a], same.coset_of[b]) == same.coset_of[g.op(a, b)]);

  const auto q8 = q8_oracle();
  const auto qz = quotient_group(q8, center_group(q8));
  CHECK(qz.group.order() == 4);
  CHECK(qz.group.is_abelian());
  CHECK(abelian_decomposition(qz.group).invariants == std::vector<std::int64_t>{2, 2});

  const auto s3 = oracle::symmetric(3);
  const auto gs3 = s3_oracle();
  const std::vector<Element> t{perm_index(s3, {1, 0, 2})};
  CHECK(error_code_of([&] { quotient_group(gs3, generated_subgroup(gs3, t)); }) == ErrorCode::NotNormal);
}

TEST_CASE("abelian_decomposition examples") {
  CHECK(abelian_decomposition(catalog_group("cyclic:6")).invariants == std::vector<std::int64_t>{6});
  CHECK(abelian_decomposition(catalog_group("klein4")).invariants == std::vector<std::int64_t>{2, 2});
  const auto z2z4 = direct_product_group(catalog_group("cyclic:2"), catalog_group("cyclic:4"));
  CHECK(abelian_decomposition(z2z4).invariants == std::vector<std::int64_t>{2, 4});
  CHECK(abelian_decomposition(catalog_group("cyclic:1")).invariants.empty());
  CHECK(error_code_of([] { abelian_decomposition(catalog_group("q8")); }) == ErrorCode::NotAbelian);
}

TEST_CASE("property: abelian_decomposition basis generates with the right orders") {
  std::vector<FiniteGroup> pool;
  const auto c2 = catalog_group("cyclic:2");
  const auto c4 = catalog_group("cyclic:4");
  const auto c6 = catalog_group("cyclic:6");
  const auto c9 = catalog_group("cyclic:9");
  pool.push_back(direct_product_group(c4, c6));
  pool.push_back(direct_product_group(direct_product_group(c2, c4), c4));
  pool.push_back(direct_product_group(c6, c9));
  pool.push_back(direct_product_group(direct_product_group(c2, c2), c6));
  for (const auto& g : pool) {
    const auto d = abelian_decomposition(g);
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < d.invariants.size(); ++i) {
      CHECK(element_order(g, d.basis[i]) == static_cast<std::uint64_t>(d.invariants[i]));
      if (i > 0) CHECK(d.invariants[i] % d.invariants[i - 1] == 0);
      prod *= static_cast<std::uint64_t>(d.invariants[i]);
    }
    CHECK(prod == g.order());
    CHECK(generated_subgroup(g, d.basis).size() == g.order());
  }
}

TEST_CASE("p_primary_decomposition examples") {
  const auto ut = catalog_ring("ut3:2");
  const auto single = p_primary_decomposition(ut);
  REQUIRE(single.size() == 1);
  CHECK(single[0].prime == 2);
  CHECK(single[0].ring == ut);

  const auto z6 = p_primary_decomposition(catalog_ring("zn:6"));
  REQUIRE(z6.size() == 2);
  CHECK(z6[0].prime == 2);
  CHECK(z6[0].ring.order() == 2);
  CHECK(z6[1].prime == 3);
  CHECK(z6[1].ring.order() == 3);
  CHECK(pr_ann_ring(z6[0].ring).value == Rational(3, 4));

  const auto nulls = p_primary_decomposition(direct_product_ring(catalog_ring("null:2"), catalog_ring("null:3")));
  REQUIRE(nulls.size() == 2);
  CHECK(nulls[0].ring.order() == 2);
  CHECK(nulls[1].ring.order() == 3);
  for (const auto& c : nulls) CHECK(*ring_powers(c.ring).class_value == 2);
}

TEST_CASE("property: center elements commute with everything") {
  for (const auto& g : group_pool()) {
    const auto z = center_group(g);
    for (Element c : z.elements())
      for (Element a = 0; a < g.order(); ++a) REQUIRE(g.op(a, c) == g.op(c, a));
    for (Element a = 0; a < g.order(); ++a) {
      if (z.contains(a)) continue;
      bool central = true;
      for (Element b = 0; b < g.order() && central; ++b) central = g.op(a, b) == g.op(b, a);
      CHECK_FALSE(central);
    }
  }
}

TEST_CASE("property: lower central series terms are normal and nested") {
  for (const auto& g : group_pool()) {
    const auto rep = lower_central_series(g);
    for (std::size_t i = 0; i < rep.series.size(); ++i) {
      CHECK(is_normal(g, rep.series[i]));
      if (i > 0) CHECK(rep.series[i].subset_of(rep.series[i - 1]));
    }
  }
}

TEST_CASE("property: class at most 2 iff derived subgroup is central") {
  for (const auto& g : group_pool()) {
    const bool via_series = lower_central_series(g).class_at_most(2);
    const bool via_center = derived_subgroup(g).subset_of(center_group(g));
    CHECK(via_series == via_center);
  }
}

TEST_CASE("property: quotient of a class-2 group by its center is abelian") {
  for (const auto& g : group_pool()) {
    if (!lower_central_series(g).class_at_most(2)) continue;
    CHECK(quotient_group(g, center_group(g)).group.is_abelian());
  }
}

TEST_CASE("property: ring power chain is nested and class <= 3 kills triple products") {
  for (const std::vector<std::int64_t>& inv : {std::vector<std::int64_t>{2, 2}, {4}, {2, 4}}) {
    enumerate_general_rings(inv, {}, [](const FiniteRing& r) {
      const auto rep = ring_powers(r);
      for (std::size_t i = 1; i < rep.series.size(); ++i) REQUIRE(rep.series[i].subset_of(rep.series[i - 1]));
      if (!rep.class_at_most(3)) return;
      for (Element a = 0; a < r.order(); ++a)
        for (Element b = 0; b < r.order(); ++b) {
          const auto ab = r.mul(a, b);
          for (Element c = 0; c < r.order(); ++c) {
            REQUIRE(r.mul(ab, c) == r.zero());
            REQUIRE(r.mul(a, r.mul(b, c)) == r.zero());
          }
        }
    });
  }
}

TEST_CASE("property: strong antisymmetry implies antisymmetry") {
  std::uint64_t strong = 0;
  for (const std::vector<std::int64_t>& inv : {std::vector<std::int64_t>{2, 2}, {3, 3}, {2, 4}}) {
    enumerate_general_rings(inv, {}, [&](const FiniteRing& r) {
      const bool s = is_strongly_antisymmetric(r);
      const bool a = is_antisymmetric(r);
      if (s) ++strong;
      REQUIRE((!s || a));
      bool brute = true;
      for (Element x = 0; x < r.order() && brute; ++x)
        for (Element y = 0; y < r.order() && brute; ++y) brute = r.mul(x, y) == r.neg(r.mul(y, x));
      REQUIRE(brute == a);
    });
  }
  CHECK(strong > 0);
}

TEST_CASE("property: Pr_f is the product over p-primary components") {
  std::vector<FiniteRing> pool{catalog_ring("zn:12"), catalog_ring("zn:30"),
                               direct_product_ring(catalog_ring("ut3:2"), catalog_ring("ut3:3")),
                               direct_product_ring(catalog_ring("matrix2:2"), catalog_ring("zn:5")),
                               direct_product_ring(catalog_ring("null:2,2"), catalog_ring("ut3:3"))};
  std::mt19937_64 rng(5);
  for (int t = 0; t < 4; ++t) {
    pool.push_back(direct_product_ring(general_ring_at({2, 2}, rng() % 256), general_ring_at({3}, rng() % 3)));
  }
  for (const auto& r : pool) {
    const auto comps = p_primary_decomposition(r);
    for (const PolySpec f : {kCommute, kAnnihilate, PolySpec{1, 1}, PolySpec{2, 3}}) {
      Rational prod(1);
      for (const auto& c : comps) prod = prod * pr_f_ring(c.ring, f).value;
      CHECK(pr_f_ring(r, f).value == prod);
    }
    for (const auto& c : comps) {
      for (Element x = 0; x < c.ring.order(); ++x)
        for (Element y = 0; y < c.ring.order(); ++y)
          REQUIRE(c.embed(r, c.ring.mul(x, y)) == r.mul(c.embed(r, x), c.embed(r, y)));
    }
  }
}
