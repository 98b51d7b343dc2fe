#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "spectra/analysis.hpp"
#include "spectra/constructions.hpp"
#include "spectra/probability.hpp"
#include "spectra/spectrum.hpp"
#include "test_util.hpp"

using namespace spectra;

namespace {

// Pr_f straight from the definition, no fast paths.
Rational brute_pr_f(const FiniteRing& r, PolySpec f) {
  std::uint64_t hits = 0;
  for (Element x = 0; x < r.order(); ++x)
    for (Element y = 0; y < r.order(); ++y)
      hits += r.add(r.scale(f.a, r.mul(x, y)), r.scale(f.b, r.mul(y, x))) == r.zero();
  return Rational::from_counts(hits, std::uint64_t{r.order()} * r.order());
}

}  // namespace

TEST_CASE("group commuting probability examples") {
  const auto s3 = oracle::symmetric(3);
  const auto s3_pairs = oracle::commuting_pairs(s3, oracle::compose);
  CHECK(s3_pairs == 18);
  const auto s3_table = oracle::cayley(s3, oracle::compose);
  const auto g = validate_group(s3_table.table, s3_table.identity);
  CHECK(pr_c_group(g).value == Rational(1, 2));
  CHECK(pr_c_group(catalog_group("symmetric:3")).value == Rational(1, 2));

  for (const char* name : {"cyclic:1", "cyclic:7", "klein4"}) CHECK(pr_c_group(catalog_group(name)).value == Rational(1));

  const auto d4 = oracle::dihedral8();
  REQUIRE(d4.size() == 8);
  CHECK(oracle::commuting_pairs(d4, oracle::compose) == 40);
  CHECK(oracle::conjugacy_classes(d4) == 5);
  const auto d4r = pr_c_group(catalog_group("dihedral:4"));
  CHECK(d4r.value == Rational(5, 8));
  CHECK(d4r.favorable == 40);
  CHECK(pr_c_group(catalog_group("dihedral:4"), CountMethod::ClassCount).value == Rational(5, 8));

  CHECK(oracle::commuting_pairs(oracle::q8(), oracle::qmul) == 40);
  CHECK(pr_c_group(catalog_group("q8")).value == Rational(5, 8));

  const auto s4 = oracle::symmetric(4);
  CHECK(oracle::conjugacy_classes(s4) == 5);
  CHECK(pr_c_group(catalog_group("symmetric:4")).value == Rational(5, 24));

  const auto s5 = oracle::symmetric(5);
  const auto k5 = oracle::conjugacy_classes(s5);
  CHECK(k5 == 7);
  CHECK(pr_c_group(catalog_group("symmetric:5")).value == Rational(7, 120));
  CHECK(pr_c_group(catalog_group("symmetric:5")).value == Rational::from_counts(k5, s5.size()));
}

TEST_CASE("ring probability examples") {
  CHECK(pr_c_ring(catalog_ring("zn:12")).value == Rational(1));
  CHECK(pr_ann_ring(catalog_ring("null:2,3")).value == Rational(1));

  const auto m2 = oracle::strict_upper3(2);
  auto mul2 = [](const oracle::Mat& a, const oracle::Mat& b) { return oracle::matmul(a, b, 2); };
  CHECK(oracle::commuting_pairs(m2, mul2) == 40);
  CHECK(pr_c_ring(catalog_ring("ut3:2")).value == Rational(5, 8));

  const auto m3 = oracle::strict_upper3(3);
  auto mul3 = [](const oracle::Mat& a, const oracle::Mat& b) { return oracle::matmul(a, b, 3); };
  CHECK(oracle::commuting_pairs(m3, mul3) == 297);
  CHECK(pr_c_ring(catalog_ring("ut3:3")).value == Rational(11, 27));

  for (std::int64_t p : {2, 3, 5, 7, 11}) {
    CHECK(pr_ann_ring(catalog_ring("zn:" + std::to_string(p))).value == Rational(2 * p - 1, p * p));
  }
  CHECK(pr_ann_ring(catalog_ring("zn:2")).value == Rational(3, 4));

  const auto h3 = oracle::unitriangular3(3);
  CHECK(oracle::commuting_pairs(h3, mul3) == 297);
  CHECK(pr_ann_ring(commutator_ring(catalog_group("heisenberg:3"))).value == Rational(11, 27));
}

TEST_CASE("full 2x2 matrix rings match the matrix oracle") {
  for (std::int64_t p : {2, 3}) {
    CAPTURE(p);
    const auto mats = oracle::all_2x2(p);
    auto mul = [p](const oracle::Mat& a, const oracle::Mat& b) { return oracle::matmul(a, b, p); };
    const auto n = mats.size() * mats.size();
    const auto r = catalog_ring("matrix2:" + std::to_string(p));
    CHECK(pr_c_ring(r).value == Rational::from_counts(oracle::commuting_pairs(mats, mul), n));
    CHECK(pr_ann_ring(r).value == Rational::from_counts(oracle::zero_product_pairs(mats, mul), n));
  }
  CHECK(pr_c_ring(catalog_ring("matrix2:2")).value == Rational(11, 32));
}

TEST_CASE("PolySpec parsing") {
  CHECK(PolySpec::parse("1,-1") == kCommute);
  CHECK(PolySpec::parse("1,0") == kAnnihilate);
  CHECK(PolySpec::parse("-2,3") == PolySpec{-2, 3});
  CHECK(error_code_of([] { PolySpec::parse("1,2,3"); }) == ErrorCode::ParseError);
  CHECK(kCommute.str() == "1,-1");
  CHECK(error_code_of([] { PolySpec::parse("1"); }) == ErrorCode::ParseError);
  CHECK(error_code_of([] { PolySpec::parse("a,b"); }) == ErrorCode::ParseError);
}

TEST_CASE("property: class count agrees with brute force on catalog groups") {
  for (const char* name : {"cyclic:9", "klein4", "dihedral:3", "dihedral:4", "dihedral:6", "dihedral:7",
                           "q8", "symmetric:3", "symmetric:4", "symmetric:5", "heisenberg:3",
                           "heisenberg:5"}) {
    CAPTURE(name);
    const auto g = catalog_group(name);
    const auto brute = pr_c_group(g, CountMethod::Brute);
    CHECK(brute.value == pr_c_group(g, CountMethod::ClassCount).value);
    CHECK(brute.favorable >= g.order());
    CHECK((brute.favorable - g.order()) % 2 == 0);
    CHECK(brute.total == std::uint64_t{g.order()} * g.order());
  }
}

TEST_CASE("property: fast paths agree with the definition") {
  std::mt19937_64 rng(17);
  std::vector<FiniteRing> pool{catalog_ring("ut3:3"), catalog_ring("matrix2:2"), catalog_ring("zn:9")};
  for (const std::vector<std::int64_t>& inv : {std::vector<std::int64_t>{2, 2}, {2, 4}, {3, 3}, {2, 2, 2}}) {
    const auto count = general_candidate_count(inv);
    for (int t = 0; t < 5; ++t) pool.push_back(general_ring_at(inv, rng() % count));
  }
  std::uniform_int_distribution<std::int64_t> coef(-5, 5);
  for (const auto& r : pool) {
    std::vector<PolySpec> polys{kCommute, kAnnihilate, {0, 1}, {1, 1}};
    for (int t = 0; t < 4; ++t) polys.push_back({coef(rng), coef(rng)});
    for (const auto f : polys) {
      CAPTURE(f.str());
      const auto v = pr_f_ring(r, f).value;
      CHECK(v == brute_pr_f(r, f));
      CHECK(v > Rational(0));
      CHECK(v <= Rational(1));
    }
  }
  // Pr_f = 1 exactly when the relation holds everywhere.
  CHECK(pr_f_ring(catalog_ring("ut3:2"), {0, 0}).value == Rational(1));
  CHECK(pr_f_ring(catalog_ring("zn:5"), {1, -1}).value == Rational(1));
  CHECK(pr_f_ring(catalog_ring("zn:5"), {1, 1}).value < Rational(1));
}

TEST_CASE("property: odd antisymmetric rings have Pr_c = Pr_ann") {
  std::uint64_t seen = 0;
  RingFilter f;
  f.antisymmetric = true;
  for (const std::vector<std::int64_t>& inv : {std::vector<std::int64_t>{3, 3}, {9}, {5}, {3, 9}}) {
    enumerate_general_rings(inv, f, [&](const FiniteRing& r) {
      ++seen;
      REQUIRE(pr_c_ring(r).value == pr_ann_ring(r).value);
    });
  }
  CHECK(seen > 10);
}

TEST_CASE("property: Pr_f is multiplicative over direct products") {
  const std::vector<std::string> names{"zn:2", "zn:3", "zn:4", "zn:6", "null:2", "null:3,3", "ut3:2", "ut3:3",
                                       "matrix2:2", "null:2,2"};
  std::mt19937_64 rng(23);
  for (int t = 0; t < 25; ++t) {
    const auto r1 = catalog_ring(names[rng() % names.size()]);
    const auto r2 = catalog_ring(names[rng() % names.size()]);
    if (std::uint64_t{r1.order()} * r2.order() > 4096) continue;
    const auto prod = direct_product_ring(r1, r2);
    for (const PolySpec f : {kCommute, kAnnihilate}) {
      CHECK(pr_f_ring(prod, f).value == pr_f_ring(r1, f).value * pr_f_ring(r2, f).value);
    }
  }
}

TEST_CASE("counting is independent of the worker count") {
  const auto r = direct_product_ring(catalog_ring("ut3:3"), catalog_ring("ut3:3"));
  const auto g = circle_group(catalog_ring("ut3:5"));
  setenv("SPECTRA_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  const auto c1 = pr_c_ring(r).value;
  const auto a1 = pr_ann_ring(r).value;
  const auto f1 = pr_f_ring(r, {2, 1}).value;
  const auto g1 = pr_c_group(g).value;
  setenv("SPECTRA_THREADS", "3", 1);
  CHECK(worker_count() == 3);
  CHECK(pr_c_ring(r).value == c1);
  CHECK(pr_ann_ring(r).value == a1);
  CHECK(pr_f_ring(r, {2, 1}).value == f1);
  CHECK(pr_c_group(g).value == g1);
  unsetenv("SPECTRA_THREADS");
  CHECK(c1 == Rational(11, 27) * Rational(11, 27));
}
