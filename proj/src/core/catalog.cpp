#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <string>

#include "spectra/constructions.hpp"
#include "spectra/error.hpp"

namespace spectra {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

struct KindInfo {
  CatalogKind kind;
  const char* canonical;
  bool group;
  const char* usage;
};

constexpr KindInfo kKinds[] = {
    {CatalogKind::Cyclic, "cyclic", true, "cyclic:n         cyclic group of order n"},
    {CatalogKind::Dihedral, "dihedral", true, "dihedral:n       dihedral group of order 2n"},
    {CatalogKind::Quaternion8, "quaternion8", true, "quaternion8      quaternion group Q8 (alias q8)"},
    {CatalogKind::Symmetric, "symmetric", true, "symmetric:n      symmetric group S_n, n <= 5"},
    {CatalogKind::Heisenberg, "heisenberg", true,
     "heisenberg:p     unitriangular 3x3 matrices over F_p, p prime <= 13"},
    {CatalogKind::Klein4, "klein4", true, "klein4           Klein four-group"},
    {CatalogKind::NullRing, "null", false, "null:d1,d2,...   null ring on Z_d1 x Z_d2 x ..."},
    {CatalogKind::ZnRing, "zn", false, "zn:n             the ring Z/nZ"},
    {CatalogKind::Ut3Ring, "ut3", false,
     "ut3:p            strictly upper-triangular 3x3 matrices over F_p"},
    {CatalogKind::MatrixRing2, "matrix2", false, "matrix2:p        full 2x2 matrix ring over F_p"},
};

const KindInfo& info(CatalogKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  fail(ErrorCode::Internal, "catalog kind without metadata");
}

std::int64_t parse_param(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorCode::ParseError, "bad catalog parameter in '" + whole + "'");
  }
  return v;
}

void require(bool ok, const CatalogName& name, const std::string& why) {
  if (!ok) fail(ErrorCode::ParamOutOfRange, name.str() + ": " + why);
}

void require_params(const CatalogName& name, std::size_t count) {
  require(name.params.size() == count, name,
          "expected " + std::to_string(count) + " parameter(s)");
}

FiniteGroup cyclic(std::int64_t n) {
  const auto m = static_cast<std::uint32_t>(n);
  std::vector<Element> table(std::size_t{m} * m);
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) table[std::size_t{a} * m + b] = (a + b) % m;
  }
  return FiniteGroup::from_trusted_table(m, std::move(table), 0);
}

// r^i s^a with index i + n*a
FiniteGroup dihedral(std::int64_t n) {
  const auto rn = static_cast<Element>(n);
  const auto m = 2 * rn;
  std::vector<Element> table(std::size_t{m} * m);
  for (Element x = 0; x < m; ++x) {
    for (Element y = 0; y < m; ++y) {
      const auto i = x % rn, a = x / rn, j = y % rn, b = y / rn;
      const auto rot = a == 0 ? (i + j) % rn : (i + rn - j) % rn;
      table[std::size_t{x} * m + y] = rot + rn * ((a + b) % 2);
    }
  }
  return FiniteGroup::from_trusted_table(m, std::move(table), 0);
}

// sign * 4 + unit, units 1,i,j,k
FiniteGroup quaternion8() {
  // unit product: {sign, unit}
  constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  constexpr Element kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<Element> table(64);
  for (Element x = 0; x < 8; ++x) {
    for (Element y = 0; y < 8; ++y) {
      const auto ux = x % 4, uy = y % 4;
      const auto sign = (x / 4 + y / 4 + static_cast<Element>(kSign[ux][uy])) % 2;
      table[x * 8 + y] = sign * 4 + kUnit[ux][uy];
    }
  }
  return FiniteGroup::from_trusted_table(8, std::move(table), 0);
}

// permutations in lexicographic order; (s*t)(x) = s(t(x))
FiniteGroup symmetric(std::int64_t n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::map<std::vector<int>, Element> index;
  for (Element i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  const auto m = static_cast<std::uint32_t>(perms.size());
  std::vector<Element> table(std::size_t{m} * m);
  std::vector<int> composed(perm.size());
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      for (std::size_t x = 0; x < composed.size(); ++x) composed[x] = perms[a][perms[b][x]];
      table[std::size_t{a} * m + b] = index.at(composed);
    }
  }
  return FiniteGroup::from_trusted_table(m, std::move(table), 0);
}

FiniteRing zn_ring(std::int64_t n, const Limits& limits) {
  StructureConstants sc{{{1}}};
  return validate_ring({n}, sc, limits);
}

// basis e12, e13, e23
FiniteRing ut3_ring(std::int64_t p, const Limits& limits) {
  std::vector<std::int64_t> dims{p, p, p};
  auto sc = zero_structure_constants(dims);
  sc[0][2] = {0, 1, 0};
  return validate_ring(dims, sc, limits);
}

// basis E11, E12, E21, E22 (index 2*row + col)
FiniteRing matrix_ring2(std::int64_t p, const Limits& limits) {
  std::vector<std::int64_t> dims(4, p);
  auto sc = zero_structure_constants(dims);
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      if (x % 2 == y / 2) sc[x][y][2 * (x / 2) + y % 2] = 1;
    }
  }
  return validate_ring(dims, sc, limits);
}

}  // namespace

FiniteGroup heisenberg_direct(std::int64_t p) {
  const auto q = static_cast<Element>(p);
  const auto m = q * q * q;
  std::vector<Element> table(std::size_t{m} * m);
  for (Element x = 0; x < m; ++x) {
    const auto a = x % q, b = (x / q) % q, c = x / (q * q);
    for (Element y = 0; y < m; ++y) {
      const auto a2 = y % q, b2 = (y / q) % q, c2 = y / (q * q);
      table[std::size_t{x} * m + y] = (a + a2) % q + q * ((b + b2) % q) + q * q * ((c + c2 + a * b2) % q);
    }
  }
  return FiniteGroup::from_trusted_table(m, std::move(table), 0);
}

CatalogName CatalogName::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  CatalogName name;
  static const std::map<std::string, CatalogKind> kAliases = {
      {"cyclic", CatalogKind::Cyclic},         {"dihedral", CatalogKind::Dihedral},
      {"quaternion8", CatalogKind::Quaternion8}, {"q8", CatalogKind::Quaternion8},
      {"symmetric", CatalogKind::Symmetric},   {"heisenberg", CatalogKind::Heisenberg},
      {"klein4", CatalogKind::Klein4},         {"null", CatalogKind::NullRing},
      {"null_ring", CatalogKind::NullRing},    {"zn", CatalogKind::ZnRing},
      {"zn_ring", CatalogKind::ZnRing},        {"ut3", CatalogKind::Ut3Ring},
      {"ut3_ring", CatalogKind::Ut3Ring},      {"matrix2", CatalogKind::MatrixRing2},
      {"matrix_ring", CatalogKind::MatrixRing2},
  };
  auto it = kAliases.find(head);
  if (it == kAliases.end()) fail(ErrorCode::UnknownName, "unknown catalog entry '" + head + "'");
  name.kind = it->second;
  if (colon != std::string::npos) {
    std::string_view rest = std::string_view(text).substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      name.params.push_back(parse_param(rest.substr(0, comma), text));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  // matrix_ring:2,p is the long form of matrix2:p
  if (head == "matrix_ring") {
    if (name.params.size() != 2 || name.params[0] != 2) {
      fail(ErrorCode::ParamOutOfRange, "matrix_ring supports only matrix_ring:2,p");
    }
    name.params.erase(name.params.begin());
  }
  return name;
}

std::string CatalogName::str() const {
  std::string out = info(kind).canonical;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  }
  return out;
}

bool CatalogName::is_group() const noexcept {
  switch (kind) {
    case CatalogKind::NullRing:
    case CatalogKind::ZnRing:
    case CatalogKind::Ut3Ring:
    case CatalogKind::MatrixRing2:
      return false;
    default:
      return true;
  }
}

Structure catalog(const CatalogName& name, const Limits& limits) {
  const auto cap = static_cast<std::int64_t>(std::min<std::uint64_t>(limits.order_cap, kMaxElements));
  switch (name.kind) {
    case CatalogKind::Cyclic:
      require_params(name, 1);
      require(name.params[0] >= 1 && name.params[0] <= cap, name, "need 1 <= n <= order cap");
      return cyclic(name.params[0]);
    case CatalogKind::Dihedral:
      require_params(name, 1);
      require(name.params[0] >= 1 && 2 * name.params[0] <= cap, name, "need 1 <= n, 2n <= order cap");
      return dihedral(name.params[0]);
    case CatalogKind::Quaternion8:
      require_params(name, 0);
      return quaternion8();
    case CatalogKind::Symmetric:
      require_params(name, 1);
      require(name.params[0] >= 1 && name.params[0] <= 5, name, "need 1 <= n <= 5");
      return symmetric(name.params[0]);
    case CatalogKind::Heisenberg:
      require_params(name, 1);
      require(is_prime(name.params[0]) && name.params[0] <= 13, name, "need a prime p <= 13");
      return heisenberg_direct(name.params[0]);
    case CatalogKind::Klein4:
      require_params(name, 0);
      return direct_product_group(cyclic(2), cyclic(2), limits);
    case CatalogKind::NullRing: {
      std::int64_t order = 1;
      for (auto d : name.params) {
        require(d >= 2 && d <= cap, name, "invariants must be >= 2");
        order *= d;
        require(order <= cap, name, "order exceeds cap");
      }
      return validate_ring(name.params, zero_structure_constants(name.params), limits);
    }
    case CatalogKind::ZnRing:
      require_params(name, 1);
      require(name.params[0] >= 2 && name.params[0] <= cap, name, "need 2 <= n <= order cap");
      return zn_ring(name.params[0], limits);
    case CatalogKind::Ut3Ring:
      require_params(name, 1);
      require(is_prime(name.params[0]) && name.params[0] * name.params[0] * name.params[0] <= cap,
              name, "need a prime p with p^3 <= order cap");
      return ut3_ring(name.params[0], limits);
    case CatalogKind::MatrixRing2: {
      require_params(name, 1);
      const auto p = name.params[0];
      require(is_prime(p) && p * p * p * p <= cap, name, "need a prime p with p^4 <= order cap");
      return matrix_ring2(p, limits);
    }
  }
  fail(ErrorCode::UnknownName, "unhandled catalog kind");
}

Structure catalog(const std::string& name, const Limits& limits) {
  return catalog(CatalogName::parse(name), limits);
}

FiniteGroup catalog_group(const std::string& name, const Limits& limits) {
  auto s = catalog(name, limits);
  if (auto* g = std::get_if<FiniteGroup>(&s)) return std::move(*g);
  fail(ErrorCode::InvalidArgument, name + " is a ring, not a group");
}

FiniteRing catalog_ring(const std::string& name, const Limits& limits) {
  auto s = catalog(name, limits);
  if (auto* r = std::get_if<FiniteRing>(&s)) return std::move(*r);
  fail(ErrorCode::InvalidArgument, name + " is a group, not a ring");
}

std::vector<std::string> catalog_entries() {
  std::vector<std::string> out;
  for (const auto& k : kKinds) out.emplace_back(k.usage);
  return out;
}

}  // namespace spectra
