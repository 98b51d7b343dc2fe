#pragma once

// Independent reference constructions. Nothing here calls into the library;
// tests compare library output against these.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<std::int64_t>>;

struct CayleyTable {
  Table table;
  std::int64_t identity = 0;
};

template <typename T, typename Op>
CayleyTable cayley(const std::vector<T>& elems, Op op) {
  CayleyTable out;
  const auto n = elems.size();
  out.table.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = op(elems[i], elems[j]);
      out.table[i][j] = std::find(elems.begin(), elems.end(), c) - elems.begin();
    }
  }
  return out;
}

template <typename T, typename Op>
std::uint64_t commuting_pairs(const std::vector<T>& elems, Op op) {
  std::uint64_t n = 0;
  for (const auto& a : elems)
    for (const auto& b : elems) n += op(a, b) == op(b, a);
  return n;
}

// Permutations as images of 0..n-1; compose(p, q) applies q first.
using Perm = std::vector<int>;

inline Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline std::vector<Perm> symmetric(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<Perm> closure(std::vector<Perm> gens) {
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> out{id};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      auto c = compose(out[i], g);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
  }
  return out;
}

// Symmetries of a square with vertices 0..3.
inline std::vector<Perm> dihedral8() { return closure({{1, 2, 3, 0}, {0, 3, 2, 1}}); }

inline std::uint64_t conjugacy_classes(const std::vector<Perm>& g) {
  std::vector<bool> seen(g.size());
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (seen[i]) continue;
    ++k;
    for (const auto& h : g) {
      Perm hinv(h.size());
      for (std::size_t t = 0; t < h.size(); ++t) hinv[h[t]] = static_cast<int>(t);
      auto c = compose(compose(h, g[i]), hinv);
      seen[std::find(g.begin(), g.end(), c) - g.begin()] = true;
    }
  }
  return k;
}

// Unit quaternions ±1, ±i, ±j, ±k as (sign, axis) with axis 0=1, 1=i, 2=j, 3=k.
struct Quat {
  int sign;
  int axis;
  bool operator==(const Quat&) const = default;
};

inline Quat qmul(Quat a, Quat b) {
  static constexpr int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  return {a.sign * b.sign * sign[a.axis][b.axis], axis[a.axis][b.axis]};
}

inline std::vector<Quat> q8() {
  std::vector<Quat> out;
  for (int s : {1, -1})
    for (int a = 0; a < 4; ++a) out.push_back({s, a});
  return out;
}

// Square matrices over Z/m.
using Mat = std::vector<std::vector<std::int64_t>>;

inline Mat matmul(const Mat& x, const Mat& y, std::int64_t m) {
  const auto n = x.size();
  Mat z(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) z[i][j] = (z[i][j] + x[i][k] * y[k][j]) % m;
  return z;
}

inline Mat matadd(const Mat& x, const Mat& y, std::int64_t m) {
  Mat z = x;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) z[i][j] = (x[i][j] + y[i][j]) % m;
  return z;
}

// Strictly upper triangular 3x3 matrices over F_p.
inline std::vector<Mat> strict_upper3(std::int64_t p) {
  std::vector<Mat> out;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c) out.push_back({{0, a, b}, {0, 0, c}, {0, 0, 0}});
  return out;
}

// Unitriangular 3x3 matrices over F_p (the Heisenberg group).
inline std::vector<Mat> unitriangular3(std::int64_t p) {
  auto out = strict_upper3(p);
  for (auto& m : out)
    for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return out;
}

inline std::vector<Mat> all_2x2(std::int64_t p) {
  std::vector<Mat> out;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d) out.push_back({{a, b}, {c, d}});
  return out;
}

template <typename Mul>
std::uint64_t zero_product_pairs(const std::vector<Mat>& elems, Mul mul) {
  std::uint64_t n = 0;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      const auto c = mul(a, b);
      bool zero = true;
      for (const auto& row : c)
        for (auto v : row) zero = zero && v == 0;
      n += zero;
    }
  return n;
}

// Ordered pairs of vectors in F_p^2 with zero determinant.
inline std::uint64_t dependent_pairs(std::int64_t p) {
  std::uint64_t n = 0;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d) n += ((a * d - b * c) % p + p) % p == 0;
  return n;
}

}  // namespace oracle
