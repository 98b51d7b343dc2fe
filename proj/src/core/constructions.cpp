#include "spectra/constructions.hpp"

#include <string>

#include "spectra/analysis.hpp"
#include "spectra/error.hpp"

namespace spectra {

namespace {

void check_cap(std::uint64_t order, const Limits& limits, const char* what) {
  if (order > limits.order_cap || order > kMaxElements) {
    fail(ErrorCode::OrderOverflow, std::string(what) + " would have order " +
                                       std::to_string(order) + " (cap " +
                                       std::to_string(limits.order_cap) + ")");
  }
}

/// Calls visit(coords) for every coefficient vector over the given moduli.
template <typename Visit>
void for_each_vector(const std::vector<std::int64_t>& moduli, Visit&& visit) {
  std::vector<std::int64_t> v(moduli.size(), 0);
  while (true) {
    visit(v);
    std::size_t i = 0;
    while (i < v.size() && ++v[i] == moduli[i]) v[i++] = 0;
    if (i == v.size()) return;
  }
}

Element group_power(const FiniteGroup& g, Element x, std::int64_t e) {
  Element out = g.identity();
  for (std::int64_t t = 0; t < e; ++t) out = g.op(out, x);
  return out;
}

}  // namespace

FiniteRing construct_N(const FiniteRing& r, const Limits& limits) {
  check_cap(std::uint64_t{r.order()} * r.order(), limits, "N(R)");
  const auto k = r.rank();
  std::vector<std::int64_t> dims(r.invariants().begin(), r.invariants().end());
  dims.insert(dims.end(), r.invariants().begin(), r.invariants().end());
  auto sc = zero_structure_constants(dims);
  const auto& src = r.structure_constants();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t m = 0; m < k; ++m) sc[i][j][k + m] = src[i][j][m];
    }
  }
  return validate_ring(std::move(dims), sc, limits);
}

FiniteGroup circle_group(const FiniteRing& n, const Limits& limits) {
  if (!n.is_associative()) fail(ErrorCode::NotAssociative, "circle_group needs an associative ring");
  if (!ring_powers(n).nilpotent()) {
    fail(ErrorCode::NotNilpotent, "circle_group needs a nilpotent ring");
  }
  check_cap(n.order(), limits, "circle group");
  const auto order = n.order();
  std::vector<Element> table(std::size_t{order} * order);
  std::vector<Element> products(order);
  for (Element a = 0; a < order; ++a) {
    n.left_products(a, products);
    Element* row = table.data() + std::size_t{a} * order;
    for (Element b = 0; b < order; ++b) row[b] = n.add(n.add(a, b), products[b]);
  }
  return FiniteGroup::from_trusted_table(order, std::move(table), n.zero());
}

CommutatorRing commutator_ring_with_map(const FiniteGroup& g, RepresentativeChoice choice,
                                        const Limits& limits) {
  const auto lcs = lower_central_series(g);
  if (!lcs.class_at_most(2)) {
    fail(ErrorCode::NotClass2, lcs.nilpotent()
                                   ? "group has nilpotency class " + std::to_string(*lcs.class_value)
                                   : std::string("group is not nilpotent"));
  }
  const auto center = center_group(g);
  const auto quotient = quotient_group(g, center);
  const auto dec_q = abelian_decomposition(quotient.group);
  const auto center_table = subgroup_as_group(g, center);
  const auto dec_z = abelian_decomposition(center_table.group);
  const auto center_elems = center.elements();

  std::mt19937_64 rng(choice.random_seed.value_or(0));
  std::vector<Element> reps;
  for (auto q : dec_q.basis) {
    Element rep = quotient.representative[q];
    if (choice.random_seed) {
      std::uniform_int_distribution<std::size_t> pick(0, center_elems.size() - 1);
      rep = g.op(rep, center_elems[pick(rng)]);
    }
    reps.push_back(rep);
  }
  std::vector<Element> z_basis;
  for (auto b : dec_z.basis) z_basis.push_back(center_table.embedding[b]);

  // Coordinates of central elements in the Z basis.
  std::vector<Coefficients> z_coords(g.order());
  for_each_vector(dec_z.invariants, [&](const std::vector<std::int64_t>& v) {
    Element x = g.identity();
    for (std::size_t j = 0; j < v.size(); ++j) x = g.op(x, group_power(g, z_basis[j], v[j]));
    z_coords[x] = v;
  });
  // Coordinates of cosets, and the section s(v) = prod reps_i^v_i.
  std::vector<Coefficients> v_coords(quotient.representative.size());
  std::vector<Element> section(quotient.representative.size(), g.identity());
  for_each_vector(dec_q.invariants, [&](const std::vector<std::int64_t>& v) {
    Element x = g.identity();
    for (std::size_t i = 0; i < v.size(); ++i) x = g.op(x, group_power(g, reps[i], v[i]));
    const auto q = quotient.coset_of[x];
    v_coords[q] = v;
    section[q] = x;
  });

  const auto r = dec_q.invariants.size();
  std::vector<std::int64_t> dims = dec_q.invariants;
  dims.insert(dims.end(), dec_z.invariants.begin(), dec_z.invariants.end());
  auto sc = zero_structure_constants(dims);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const auto c = commutator(g, reps[i], reps[j]);
      if (!center.contains(c)) fail(ErrorCode::Internal, "commutator outside the center");
      for (std::size_t m = 0; m < dec_z.invariants.size(); ++m) sc[i][j][r + m] = z_coords[c][m];
    }
  }

  CommutatorRing out{validate_ring(dims, sc, limits), {}};
  out.image.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    const auto q = quotient.coset_of[x];
    const auto z = g.op(g.inv(section[q]), x);
    Coefficients coords = v_coords[q];
    coords.insert(coords.end(), z_coords[z].begin(), z_coords[z].end());
    out.image[x] = out.ring.encode(coords);
  }
  return out;
}

FiniteRing commutator_ring(const FiniteGroup& g, const Limits& limits) {
  return commutator_ring_with_map(g, {}, limits).ring;
}

FiniteGroup malcev_group(const FiniteRing& r, const Limits& limits) {
  const std::uint64_t n = r.order();
  check_cap(n * n, limits, "Mal'cev group");
  const auto m = static_cast<std::uint32_t>(n * n);
  std::vector<Element> table(std::size_t{m} * m);
  std::vector<Element> products(n);
  for (Element a = 0; a < n; ++a) {
    r.left_products(a, products);
    for (Element b = 0; b < n; ++b) {
      Element* row = table.data() + std::size_t{a + n * b} * m;
      for (Element c = 0; c < n; ++c) {
        const auto first = r.add(a, c);
        const auto partial = r.add(products[c], b);
        for (Element d = 0; d < n; ++d) {
          row[c + n * d] = static_cast<Element>(first + n * r.add(partial, d));
        }
      }
    }
  }
  return FiniteGroup::from_trusted_table(m, std::move(table), 0);
}

FiniteGroup direct_product_group(const FiniteGroup& g1, const FiniteGroup& g2,
                                 const Limits& limits) {
  const std::uint64_t n1 = g1.order();
  const std::uint64_t n2 = g2.order();
  check_cap(n1 * n2, limits, "direct product");
  const auto m = static_cast<std::uint32_t>(n1 * n2);
  std::vector<Element> table(std::size_t{m} * m);
  for (Element x = 0; x < m; ++x) {
    for (Element y = 0; y < m; ++y) {
      const auto first = g1.op(static_cast<Element>(x % n1), static_cast<Element>(y % n1));
      const auto second = g2.op(static_cast<Element>(x / n1), static_cast<Element>(y / n1));
      table[std::size_t{x} * m + y] = static_cast<Element>(first + n1 * second);
    }
  }
  return FiniteGroup::from_trusted_table(
      m, std::move(table), static_cast<Element>(g1.identity() + n1 * g2.identity()));
}

FiniteRing direct_product_ring(const FiniteRing& r1, const FiniteRing& r2, const Limits& limits) {
  check_cap(std::uint64_t{r1.order()} * r2.order(), limits, "direct product");
  const auto k1 = r1.rank();
  const auto k2 = r2.rank();
  std::vector<std::int64_t> dims(r1.invariants().begin(), r1.invariants().end());
  dims.insert(dims.end(), r2.invariants().begin(), r2.invariants().end());
  auto sc = zero_structure_constants(dims);
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t j = 0; j < k1; ++j) {
      for (std::size_t m = 0; m < k1; ++m) sc[i][j][m] = r1.structure_constants()[i][j][m];
    }
  }
  for (std::size_t i = 0; i < k2; ++i) {
    for (std::size_t j = 0; j < k2; ++j) {
      for (std::size_t m = 0; m < k2; ++m) {
        sc[k1 + i][k1 + j][k1 + m] = r2.structure_constants()[i][j][m];
      }
    }
  }
  return validate_ring(std::move(dims), sc, limits);
}

}  // namespace spectra
