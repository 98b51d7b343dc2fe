#include "spectra/probability.hpp"

#include <charconv>
#include <cstdlib>
#include <thread>

#include "parallel.hpp"
#include "spectra/error.hpp"

namespace spectra {

unsigned worker_count() {
  if (const char* env = std::getenv("SPECTRA_THREADS")) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
    if (ec == std::errc{} && v > 0) return v;
  }
  const auto hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

PolySpec PolySpec::parse(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) fail(ErrorCode::ParseError, "poly must be 'a,b': " + text);
  auto parse_one = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      fail(ErrorCode::ParseError, "poly must be 'a,b' with integers: " + text);
    }
    return v;
  };
  const std::string_view view(text);
  return PolySpec{parse_one(view.substr(0, comma)), parse_one(view.substr(comma + 1))};
}

std::string PolySpec::str() const { return std::to_string(a) + "," + std::to_string(b); }

std::uint64_t conjugacy_class_count(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::uint64_t classes = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++classes;
    for (Element h = 0; h < g.order(); ++h) seen[g.op(g.op(h, x), g.inv(h))] = true;
  }
  return classes;
}

ProbabilityResult pr_c_group(const FiniteGroup& g, CountMethod method) {
  ProbabilityResult res;
  res.method = method;
  const std::uint64_t n = g.order();
  res.total = n * n;
  if (method == CountMethod::ClassCount) {
    res.favorable = conjugacy_class_count(g) * n;
  } else {
    res.favorable = detail::parallel_sum(n, n, [&](std::uint64_t begin, std::uint64_t end) {
      std::uint64_t count = 0;
      for (auto a = static_cast<Element>(begin); a < end; ++a) {
        const auto row = g.row(a);
        for (Element b = 0; b < n; ++b) count += row[b] == g.op(b, a) ? 1 : 0;
      }
      return count;
    });
  }
  res.value = Rational::from_counts(res.favorable, res.total);
  return res;
}

ProbabilityResult pr_f_ring(const FiniteRing& r, PolySpec f) {
  ProbabilityResult res;
  const std::uint64_t n = r.order();
  res.total = n * n;
  // a*xy + b*yx = 0  <=>  a*xy == -(b*yx)
  std::vector<Element> scaled_a(n);
  std::vector<Element> scaled_neg_b(n);
  for (Element e = 0; e < n; ++e) {
    scaled_a[e] = r.scale(f.a, e);
    scaled_neg_b[e] = r.scale(-f.b, e);
  }
  res.favorable = detail::parallel_sum(n, n, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Element> left(n);
    std::vector<Element> right(n);
    std::uint64_t count = 0;
    for (auto x = static_cast<Element>(begin); x < end; ++x) {
      r.left_products(x, left);
      if (f.b != 0) r.right_products(x, right);
      if (f == kCommute) {
        for (Element y = 0; y < n; ++y) count += left[y] == right[y] ? 1 : 0;
      } else if (f == kAnnihilate) {
        for (Element y = 0; y < n; ++y) count += left[y] == 0 ? 1 : 0;
      } else if (f.b == 0) {
        for (Element y = 0; y < n; ++y) count += scaled_a[left[y]] == 0 ? 1 : 0;
      } else {
        for (Element y = 0; y < n; ++y) {
          count += scaled_a[left[y]] == scaled_neg_b[right[y]] ? 1 : 0;
        }
      }
    }
    return count;
  });
  res.value = Rational::from_counts(res.favorable, res.total);
  return res;
}

}  // namespace spectra
