#include "spectra/group.hpp"

#include <string>

#include "spectra/error.hpp"
#include "spectra/limits.hpp"

namespace spectra {

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < n_; ++a) {
    for (Element b = a + 1; b < n_; ++b) {
      if (op(a, b) != op(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup FiniteGroup::from_trusted_table(std::uint32_t n, std::vector<Element> table,
                                            Element identity) {
  FiniteGroup g;
  g.n_ = n;
  g.identity_ = identity;
  g.table_ = std::move(table);
  g.inverse_.assign(n, identity);
  for (Element a = 0; a < n; ++a) {
    auto r = g.row(a);
    for (Element b = 0; b < n; ++b) {
      if (r[b] == identity) {
        g.inverse_[a] = b;
        break;
      }
    }
  }
  return g;
}

FiniteGroup validate_group(std::uint32_t n, std::span<const std::int64_t> table,
                           std::int64_t identity) {
  if (n == 0) fail(ErrorCode::NotClosed, "group must have at least one element");
  if (n > kMaxElements) fail(ErrorCode::OrderOverflow, "group order " + std::to_string(n));
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  if (table.size() != nn) {
    fail(ErrorCode::NotClosed, "table has " + std::to_string(table.size()) + " entries, expected " +
                                   std::to_string(nn));
  }
  for (std::size_t idx = 0; idx < nn; ++idx) {
    if (table[idx] < 0 || table[idx] >= n) {
      fail(ErrorCode::NotClosed, "entry (" + std::to_string(idx / n) + "," +
                                     std::to_string(idx % n) + ") = " + std::to_string(table[idx]) +
                                     " is outside 0.." + std::to_string(n - 1));
    }
  }
  if (identity < 0 || identity >= n) {
    fail(ErrorCode::NoIdentity, "identity index " + std::to_string(identity) + " out of range");
  }
  std::vector<Element> t(table.begin(), table.end());
  const auto e = static_cast<Element>(identity);
  for (Element i = 0; i < n; ++i) {
    if (t[static_cast<std::size_t>(e) * n + i] != i || t[static_cast<std::size_t>(i) * n + e] != i) {
      fail(ErrorCode::NoIdentity,
           std::to_string(e) + " is not a two-sided identity (fails at element " +
               std::to_string(i) + ")");
    }
  }
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (Element i = 0; i < n; ++i) {
    ++stamp;
    for (Element j = 0; j < n; ++j) {
      auto v = t[static_cast<std::size_t>(i) * n + j];
      if (seen[v] == stamp) {
        fail(ErrorCode::NotLatin, "row " + std::to_string(i) + " repeats " + std::to_string(v));
      }
      seen[v] = stamp;
    }
  }
  for (Element j = 0; j < n; ++j) {
    ++stamp;
    for (Element i = 0; i < n; ++i) {
      auto v = t[static_cast<std::size_t>(i) * n + j];
      if (seen[v] == stamp) {
        fail(ErrorCode::NotLatin, "column " + std::to_string(j) + " repeats " + std::to_string(v));
      }
      seen[v] = stamp;
    }
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      const Element ij = t[static_cast<std::size_t>(i) * n + j];
      const Element* row_ij = t.data() + static_cast<std::size_t>(ij) * n;
      const Element* row_i = t.data() + static_cast<std::size_t>(i) * n;
      const Element* row_j = t.data() + static_cast<std::size_t>(j) * n;
      for (Element k = 0; k < n; ++k) {
        if (row_ij[k] != row_i[row_j[k]]) {
          fail(ErrorCode::NotAssociative, "(" + std::to_string(i) + "*" + std::to_string(j) +
                                              ")*" + std::to_string(k) + " != " +
                                              std::to_string(i) + "*(" + std::to_string(j) + "*" +
                                              std::to_string(k) + ")");
        }
      }
    }
  }
  return FiniteGroup::from_trusted_table(n, std::move(t), e);
}

FiniteGroup validate_group(const std::vector<std::vector<std::int64_t>>& table,
                           std::int64_t identity) {
  const auto n = static_cast<std::uint32_t>(table.size());
  std::vector<std::int64_t> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].size() != n) {
      fail(ErrorCode::NotClosed, "row " + std::to_string(i) + " has " +
                                     std::to_string(table[i].size()) + " entries, expected " +
                                     std::to_string(n));
    }
    flat.insert(flat.end(), table[i].begin(), table[i].end());
  }
  return validate_group(n, flat, identity);
}

}  // namespace spectra
