#include "spectra/analysis.hpp"

#include <algorithm>
#include <string>

#include "spectra/error.hpp"

namespace spectra {

SubgroupMask::SubgroupMask(std::vector<bool> members) : members_(std::move(members)) {
  size_ = static_cast<std::uint32_t>(std::count(members_.begin(), members_.end(), true));
}

SubgroupMask SubgroupMask::of_group(const FiniteGroup& g, std::vector<bool> members) {
  if (members.size() != g.order()) fail(ErrorCode::InvalidArgument, "mask size mismatch");
  if (!members[g.identity()]) fail(ErrorCode::InvalidArgument, "subgroup lacks the identity");
  for (Element a = 0; a < g.order(); ++a) {
    if (!members[a]) continue;
    if (!members[g.inv(a)]) {
      fail(ErrorCode::InvalidArgument, "subgroup not closed under inverse at " + std::to_string(a));
    }
    for (Element b = 0; b < g.order(); ++b) {
      if (members[b] && !members[g.op(a, b)]) {
        fail(ErrorCode::InvalidArgument, "subgroup not closed: " + std::to_string(a) + "*" +
                                             std::to_string(b));
      }
    }
  }
  return SubgroupMask(std::move(members));
}

SubgroupMask SubgroupMask::of_ring(const FiniteRing& r, std::vector<bool> members) {
  if (members.size() != r.order()) fail(ErrorCode::InvalidArgument, "mask size mismatch");
  if (!members[r.zero()]) fail(ErrorCode::InvalidArgument, "additive subgroup lacks zero");
  for (Element a = 0; a < r.order(); ++a) {
    if (!members[a]) continue;
    for (Element b = 0; b < r.order(); ++b) {
      if (members[b] && !members[r.add(a, b)]) {
        fail(ErrorCode::InvalidArgument, "additive subgroup not closed: " + std::to_string(a) +
                                             "+" + std::to_string(b));
      }
    }
  }
  return SubgroupMask(std::move(members));
}

std::vector<Element> SubgroupMask::elements() const {
  std::vector<Element> out;
  out.reserve(size_);
  for (Element x = 0; x < members_.size(); ++x) {
    if (members_[x]) out.push_back(x);
  }
  return out;
}

bool SubgroupMask::subset_of(const SubgroupMask& other) const noexcept {
  if (members_.size() != other.members_.size()) return false;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] && !other.members_[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Groups

SubgroupMask center_group(const FiniteGroup& g) {
  std::vector<bool> members(g.order(), false);
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element x = 0; x < g.order() && central; ++x) central = g.op(z, x) == g.op(x, z);
    members[z] = central;
  }
  return SubgroupMask::of_group(g, std::move(members));
}

Element commutator(const FiniteGroup& g, Element a, Element b) {
  return g.op(g.op(g.inv(a), g.inv(b)), g.op(a, b));
}

namespace {

std::vector<bool> closure(const FiniteGroup& g, std::span<const Element> seed) {
  std::vector<bool> in_seed(g.order(), false);
  std::vector<Element> gens;
  for (auto s : seed) {
    if (s >= g.order()) fail(ErrorCode::InvalidArgument, "seed element out of range");
    if (!in_seed[s] && s != g.identity()) {
      in_seed[s] = true;
      gens.push_back(s);
    }
  }
  std::vector<bool> members(g.order(), false);
  std::vector<Element> queue{g.identity()};
  members[g.identity()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = queue[head];
    for (auto s : gens) {
      const auto y = g.op(x, s);
      if (!members[y]) {
        members[y] = true;
        queue.push_back(y);
      }
    }
  }
  return members;
}

}  // namespace

SubgroupMask generated_subgroup(const FiniteGroup& g, std::span<const Element> seed) {
  return SubgroupMask::of_group(g, closure(g, seed));
}

bool is_normal(const FiniteGroup& g, const SubgroupMask& n) {
  const auto members = n.elements();
  for (Element x = 0; x < g.order(); ++x) {
    for (auto h : members) {
      if (!n.contains(g.op(g.op(x, h), g.inv(x)))) return false;
    }
  }
  return true;
}

NilpotencyReport lower_central_series(const FiniteGroup& g) {
  NilpotencyReport report;
  report.kind = StructureKind::Group;
  report.series.push_back(SubgroupMask::of_group(g, std::vector<bool>(g.order(), true)));
  if (report.series.back().is_trivial()) {
    report.class_value = 0;
    return report;
  }
  std::vector<bool> seen(g.order(), false);
  while (true) {
    const auto prev = report.series.back().elements();
    std::fill(seen.begin(), seen.end(), false);
    std::vector<Element> seed;
    for (auto x : prev) {
      for (Element y = 0; y < g.order(); ++y) {
        const auto c = commutator(g, x, y);
        if (!seen[c]) {
          seen[c] = true;
          seed.push_back(c);
        }
      }
    }
    auto next = SubgroupMask::of_group(g, closure(g, seed));
    if (next == report.series.back()) return report;  // stabilized above {e}
    report.series.push_back(std::move(next));
    if (report.series.back().is_trivial()) {
      report.class_value = static_cast<int>(report.series.size()) - 1;
      return report;
    }
  }
}

std::uint64_t element_order(const FiniteGroup& g, Element x) {
  std::uint64_t ord = 1;
  for (Element cur = x; cur != g.identity(); cur = g.op(cur, x)) ++ord;
  return ord;
}

Quotient quotient_group(const FiniteGroup& g, const SubgroupMask& n) {
  const auto members = n.elements();
  for (Element x = 0; x < g.order(); ++x) {
    for (auto h : members) {
      const auto conj = g.op(g.op(x, h), g.inv(x));
      if (!n.contains(conj)) {
        fail(ErrorCode::NotNormal, std::to_string(x) + "*" + std::to_string(h) + "*" +
                                       std::to_string(x) + "^-1 = " + std::to_string(conj) +
                                       " is outside the subgroup");
      }
    }
  }
  constexpr Element kUnset = ~Element{0};
  Quotient q;
  q.coset_of.assign(g.order(), kUnset);
  for (Element x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] != kUnset) continue;
    const auto idx = static_cast<Element>(q.representative.size());
    q.representative.push_back(x);
    for (auto h : members) q.coset_of[g.op(x, h)] = idx;
  }
  const auto m = static_cast<std::uint32_t>(q.representative.size());
  std::vector<Element> table(std::size_t{m} * m);
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      table[std::size_t{a} * m + b] = q.coset_of[g.op(q.representative[a], q.representative[b])];
    }
  }
  q.group = FiniteGroup::from_trusted_table(m, std::move(table), q.coset_of[g.identity()]);
  return q;
}

SubgroupTable subgroup_as_group(const FiniteGroup& g, const SubgroupMask& h) {
  SubgroupTable out;
  out.embedding = h.elements();
  std::vector<Element> index(g.order(), 0);
  for (Element i = 0; i < out.embedding.size(); ++i) index[out.embedding[i]] = i;
  const auto m = static_cast<std::uint32_t>(out.embedding.size());
  std::vector<Element> table(std::size_t{m} * m);
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      table[std::size_t{a} * m + b] = index[g.op(out.embedding[a], out.embedding[b])];
    }
  }
  out.group = FiniteGroup::from_trusted_table(m, std::move(table), index[g.identity()]);
  return out;
}

AbelianDecomposition abelian_decomposition(const FiniteGroup& a) {
  if (!a.is_abelian()) fail(ErrorCode::NotAbelian, "abelian_decomposition needs an abelian group");
  AbelianDecomposition out;
  if (a.order() == 1) return out;

  Element best = a.identity();
  std::uint64_t best_order = 1;
  for (Element x = 0; x < a.order(); ++x) {
    const auto o = element_order(a, x);
    if (o > best_order) {
      best_order = o;
      best = x;
    }
  }
  // exponent_of[y] = c with best^c = y, for y in <best>
  std::vector<std::int64_t> exponent_of(a.order(), -1);
  {
    Element cur = a.identity();
    for (std::uint64_t c = 0; c < best_order; ++c) {
      exponent_of[cur] = static_cast<std::int64_t>(c);
      cur = a.op(cur, best);
    }
  }
  if (best_order == a.order()) {
    out.invariants.push_back(static_cast<std::int64_t>(best_order));
    out.basis.push_back(best);
    return out;
  }

  const Element seed[] = {best};
  const auto cyclic = generated_subgroup(a, seed);
  const auto q = quotient_group(a, cyclic);
  const auto rest = abelian_decomposition(q.group);
  for (std::size_t i = 0; i < rest.basis.size(); ++i) {
    const auto k = static_cast<std::uint64_t>(rest.invariants[i]);
    const Element x = q.representative[rest.basis[i]];
    Element xk = a.identity();
    for (std::uint64_t t = 0; t < k; ++t) xk = a.op(xk, x);
    const auto c = exponent_of[xk];
    if (c < 0 || static_cast<std::uint64_t>(c) % k != 0) {
      fail(ErrorCode::Internal, "abelian_decomposition: lift failed");
    }
    // x * best^(-c/k)
    const auto shift = static_cast<std::uint64_t>(c) / k;
    Element correction = a.identity();
    for (std::uint64_t t = 0; t < (best_order - shift) % best_order; ++t) {
      correction = a.op(correction, best);
    }
    out.invariants.push_back(static_cast<std::int64_t>(k));
    out.basis.push_back(a.op(x, correction));
  }
  out.invariants.push_back(static_cast<std::int64_t>(best_order));
  out.basis.push_back(best);
  return out;
}

// ---------------------------------------------------------------------------
// Rings

namespace {

struct Span {
  std::vector<bool> members;
  std::vector<Element> elements;
  std::vector<Element> generators;
};

Span make_span(const FiniteRing& r) {
  Span s;
  s.members.assign(r.order(), false);
  s.members[r.zero()] = true;
  s.elements.push_back(r.zero());
  return s;
}

void extend_span(const FiniteRing& r, Span& s, Element g) {
  if (s.members[g]) return;
  s.generators.push_back(g);
  const auto old_size = s.elements.size();
  for (Element cur = g; !s.members[cur]; cur = r.add(cur, g)) {
    for (std::size_t i = 0; i < old_size; ++i) {
      const auto y = r.add(s.elements[i], cur);
      s.members[y] = true;
      s.elements.push_back(y);
    }
  }
}

}  // namespace

SubgroupMask additive_span(const FiniteRing& r, std::span<const Element> seed) {
  auto s = make_span(r);
  for (auto g : seed) {
    if (g >= r.order()) fail(ErrorCode::InvalidArgument, "seed element out of range");
    extend_span(r, s, g);
  }
  return SubgroupMask::of_ring(r, std::move(s.members));
}

NilpotencyReport ring_powers(const FiniteRing& r) {
  NilpotencyReport report;
  report.kind = StructureKind::Ring;
  std::vector<Span> powers;  // powers[n-1] = R^n
  {
    auto s = make_span(r);
    for (std::size_t i = 0; i < r.rank(); ++i) extend_span(r, s, r.generator(i));
    powers.push_back(std::move(s));
  }
  std::size_t first_equal = 1;  // least index s with R^s == current R^n
  std::size_t n = 1;
  while (true) {
    if (powers[n - 1].elements.size() == 1) {
      report.class_value = static_cast<int>(n);
      break;
    }
    if (n >= 2 * first_equal && n > 1) break;  // constant on [s, 2s]: never reaches 0
    ++n;
    auto next = make_span(r);
    for (std::size_t i = 1; i < n; ++i) {
      const auto& left = powers[i - 1].generators;
      const auto& right = powers[n - i - 1].generators;
      for (auto x : left) {
        for (auto y : right) extend_span(r, next, r.mul(x, y));
      }
    }
    if (next.members != powers[n - 2].members) first_equal = n;
    powers.push_back(std::move(next));
  }
  const auto keep = report.class_value ? powers.size() : first_equal;
  for (std::size_t i = 0; i < keep; ++i) {
    report.series.push_back(SubgroupMask::of_ring(r, powers[i].members));
  }
  return report;
}

bool is_antisymmetric(const FiniteRing& r) {
  for (std::size_t i = 0; i < r.rank(); ++i) {
    for (std::size_t j = i; j < r.rank(); ++j) {
      const auto a = r.generator(i);
      const auto b = r.generator(j);
      if (r.add(r.mul(a, b), r.mul(b, a)) != r.zero()) return false;
    }
  }
  return true;
}

bool is_strongly_antisymmetric(const FiniteRing& r) {
  for (Element x = 0; x < r.order(); ++x) {
    if (r.mul(x, x) != r.zero()) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

OrderInfo parity_and_p(std::uint64_t order) {
  OrderInfo info;
  info.order = order;
  info.is_odd = order % 2 == 1;
  const auto primes = prime_divisors(order);
  if (primes.size() == 1) info.prime = primes.front();
  return info;
}

Element PrimaryComponent::embed(const FiniteRing& parent, Element x) const {
  Element out = parent.zero();
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    out = parent.add(out, parent.scale(ring.digit(x, i), basis[i]));
  }
  return out;
}

std::vector<PrimaryComponent> p_primary_decomposition(const FiniteRing& r, const Limits& limits) {
  std::vector<PrimaryComponent> out;
  const auto dims = r.invariants();
  for (auto p : prime_divisors(r.order())) {
    std::vector<std::size_t> coords;     // parent coordinates with a p-part
    std::vector<std::int64_t> p_parts;   // p^a_i
    std::vector<std::int64_t> cofactor;  // d_i / p^a_i
    for (std::size_t i = 0; i < dims.size(); ++i) {
      std::int64_t pp = 1;
      std::int64_t rest = dims[i];
      while (rest % static_cast<std::int64_t>(p) == 0) {
        rest /= static_cast<std::int64_t>(p);
        pp *= static_cast<std::int64_t>(p);
      }
      if (pp > 1) {
        coords.push_back(i);
        p_parts.push_back(pp);
        cofactor.push_back(rest);
      }
    }
    PrimaryComponent comp;
    comp.prime = p;
    for (std::size_t a = 0; a < coords.size(); ++a) {
      comp.basis.push_back(r.scale(cofactor[a], r.generator(coords[a])));
    }
    auto sc = zero_structure_constants(p_parts);
    for (std::size_t a = 0; a < coords.size(); ++a) {
      for (std::size_t b = 0; b < coords.size(); ++b) {
        const auto prod = r.decode(r.mul(comp.basis[a], comp.basis[b]));
        for (std::size_t c = 0; c < coords.size(); ++c) {
          const auto value = prod[coords[c]];
          if (value % cofactor[c] != 0) {
            fail(ErrorCode::Internal, "p-component product left the p-part");
          }
          sc[a][b][c] = (value / cofactor[c]) % p_parts[c];
        }
      }
    }
    comp.ring = validate_ring(p_parts, sc, limits);
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace spectra
