#include "spectra/ring.hpp"

#include <numeric>
#include <string>

#include "spectra/error.hpp"

namespace spectra {

struct FiniteRing::Impl {
  std::vector<std::int64_t> dims;
  std::vector<std::uint32_t> strides;
  std::uint32_t order = 1;
  StructureConstants sc;
  std::vector<std::uint32_t> digits;  // order x k
  std::vector<Element> sc_elems;      // k x k, encoded sc[i][j]
  std::vector<Element> left_gen;      // order x k, x*e_j
  std::vector<Element> right_gen;     // order x k, e_j*x
  std::vector<Element> table;         // order x order when materialized

  std::size_t k() const noexcept { return dims.size(); }
  const std::uint32_t* dig(Element x) const noexcept { return digits.data() + std::size_t{x} * k(); }

  Element add(Element x, Element y) const noexcept {
    const auto* dx = dig(x);
    const auto* dy = dig(y);
    Element out = 0;
    for (std::size_t i = 0; i < k(); ++i) {
      auto s = dx[i] + dy[i];
      if (s >= dims[i]) s -= static_cast<std::uint32_t>(dims[i]);
      out += s * strides[i];
    }
    return out;
  }

  Element scale(std::int64_t m, Element x) const noexcept {
    const auto* dx = dig(x);
    Element out = 0;
    for (std::size_t i = 0; i < k(); ++i) {
      std::int64_t mi = m % dims[i];
      if (mi < 0) mi += dims[i];
      out += static_cast<Element>((mi * dx[i]) % dims[i]) * strides[i];
    }
    return out;
  }

  Element mul_slow(Element x, Element y) const noexcept {
    const auto* dy = dig(y);
    Element acc = 0;
    for (std::size_t j = 0; j < k(); ++j) {
      if (dy[j] != 0) acc = add(acc, scale(dy[j], left_gen[std::size_t{x} * k() + j]));
    }
    return acc;
  }

  // Lowest coordinate index with a nonzero digit; y != 0.
  std::size_t low_digit(Element y) const noexcept {
    const auto* dy = dig(y);
    std::size_t j = 0;
    while (dy[j] == 0) ++j;
    return j;
  }

  void products(const std::vector<Element>& gen, Element x, std::span<Element> out) const {
    out[0] = 0;
    const Element* g = gen.data() + std::size_t{x} * k();
    for (Element y = 1; y < order; ++y) {
      auto j = low_digit(y);
      out[y] = add(out[y - strides[j]], g[j]);
    }
  }
};

namespace {

std::int64_t vector_order(std::span<const std::int64_t> c, std::span<const std::int64_t> dims) {
  std::int64_t ord = 1;
  for (std::size_t m = 0; m < dims.size(); ++m) {
    ord = std::lcm(ord, dims[m] / std::gcd(c[m], dims[m]));
  }
  return ord;
}

}  // namespace

StructureConstants zero_structure_constants(std::span<const std::int64_t> invariants) {
  const auto k = invariants.size();
  return StructureConstants(k, std::vector<Coefficients>(k, Coefficients(k, 0)));
}

FiniteRing validate_ring(std::vector<std::int64_t> invariants, const StructureConstants& sc,
                         const Limits& limits) {
  auto impl = std::make_shared<FiniteRing::Impl>();
  const auto k = invariants.size();
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (invariants[i] < 2) {
      fail(ErrorCode::InvalidInvariants,
           "invariant d" + std::to_string(i + 1) + " = " + std::to_string(invariants[i]) +
               " (each invariant must be >= 2)");
    }
    if (static_cast<std::uint64_t>(invariants[i]) > kMaxElements ||
        order * static_cast<std::uint64_t>(invariants[i]) > kMaxElements) {
      fail(ErrorCode::OrderOverflow, "ring order exceeds " + std::to_string(kMaxElements));
    }
    order *= static_cast<std::uint64_t>(invariants[i]);
  }
  if (sc.size() != k) {
    fail(ErrorCode::MalformedVector,
         "sc has " + std::to_string(sc.size()) + " rows, expected " + std::to_string(k));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (sc[i].size() != k) {
      fail(ErrorCode::MalformedVector, "sc row " + std::to_string(i) + " has " +
                                           std::to_string(sc[i].size()) + " entries, expected " +
                                           std::to_string(k));
    }
    for (std::size_t j = 0; j < k; ++j) {
      const auto& c = sc[i][j];
      if (c.size() != k) {
        fail(ErrorCode::MalformedVector, "sc[" + std::to_string(i) + "][" + std::to_string(j) +
                                             "] has length " + std::to_string(c.size()) +
                                             ", expected " + std::to_string(k));
      }
      for (std::size_t m = 0; m < k; ++m) {
        if (c[m] < 0 || c[m] >= invariants[m]) {
          fail(ErrorCode::MalformedVector,
               "sc[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(m) +
                   "] = " + std::to_string(c[m]) + " outside 0.." +
                   std::to_string(invariants[m] - 1));
        }
      }
      const auto ord = vector_order(c, invariants);
      const auto g = std::gcd(invariants[i], invariants[j]);
      if (g % ord != 0) {
        fail(ErrorCode::IncompatibleOrder,
             "sc[" + std::to_string(i) + "][" + std::to_string(j) + "] has additive order " +
                 std::to_string(ord) + ", which does not divide gcd(" +
                 std::to_string(invariants[i]) + "," + std::to_string(invariants[j]) +
                 ") = " + std::to_string(g));
      }
    }
  }

  impl->dims = std::move(invariants);
  impl->order = static_cast<std::uint32_t>(order);
  impl->sc = sc;
  impl->strides.resize(k);
  std::uint32_t stride = 1;
  for (std::size_t i = 0; i < k; ++i) {
    impl->strides[i] = stride;
    stride *= static_cast<std::uint32_t>(impl->dims[i]);
  }
  impl->digits.resize(std::size_t{impl->order} * k);
  for (Element x = 0; x < impl->order; ++x) {
    Element rest = x;
    for (std::size_t i = 0; i < k; ++i) {
      impl->digits[std::size_t{x} * k + i] = rest % static_cast<Element>(impl->dims[i]);
      rest /= static_cast<Element>(impl->dims[i]);
    }
  }
  impl->sc_elems.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Element e = 0;
      for (std::size_t m = 0; m < k; ++m) e += static_cast<Element>(sc[i][j][m]) * impl->strides[m];
      impl->sc_elems[i * k + j] = e;
    }
  }
  impl->left_gen.assign(std::size_t{impl->order} * k, 0);
  impl->right_gen.assign(std::size_t{impl->order} * k, 0);
  for (Element x = 0; x < impl->order; ++x) {
    const auto* dx = impl->dig(x);
    for (std::size_t j = 0; j < k; ++j) {
      Element l = 0;
      Element r = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (dx[i] == 0) continue;
        l = impl->add(l, impl->scale(dx[i], impl->sc_elems[i * k + j]));
        r = impl->add(r, impl->scale(dx[i], impl->sc_elems[j * k + i]));
      }
      impl->left_gen[std::size_t{x} * k + j] = l;
      impl->right_gen[std::size_t{x} * k + j] = r;
    }
  }
  if (order <= limits.table_threshold) {
    impl->table.resize(std::size_t{impl->order} * impl->order);
    for (Element x = 0; x < impl->order; ++x) {
      impl->products(impl->left_gen, x,
                     std::span<Element>(impl->table.data() + std::size_t{x} * impl->order,
                                        impl->order));
    }
  }

  FiniteRing ring;
  ring.impl_ = std::move(impl);
  return ring;
}

std::uint32_t FiniteRing::order() const noexcept { return impl_->order; }
std::size_t FiniteRing::rank() const noexcept { return impl_->k(); }
std::span<const std::int64_t> FiniteRing::invariants() const noexcept { return impl_->dims; }
const StructureConstants& FiniteRing::structure_constants() const noexcept { return impl_->sc; }
Element FiniteRing::generator(std::size_t i) const noexcept { return impl_->strides[i]; }

Element FiniteRing::encode(std::span<const std::int64_t> coords) const {
  if (coords.size() != rank()) {
    fail(ErrorCode::MalformedVector, "coordinate vector has length " +
                                         std::to_string(coords.size()) + ", expected " +
                                         std::to_string(rank()));
  }
  Element out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    std::int64_t c = coords[i] % impl_->dims[i];
    if (c < 0) c += impl_->dims[i];
    out += static_cast<Element>(c) * impl_->strides[i];
  }
  return out;
}

Coefficients FiniteRing::decode(Element x) const {
  const auto* dx = impl_->dig(x);
  return Coefficients(dx, dx + rank());
}

std::uint32_t FiniteRing::digit(Element x, std::size_t i) const noexcept {
  return impl_->dig(x)[i];
}

Element FiniteRing::add(Element x, Element y) const noexcept { return impl_->add(x, y); }
Element FiniteRing::neg(Element x) const noexcept { return impl_->scale(-1, x); }
Element FiniteRing::sub(Element x, Element y) const noexcept { return add(x, neg(y)); }
Element FiniteRing::scale(std::int64_t m, Element x) const noexcept { return impl_->scale(m, x); }

Element FiniteRing::mul(Element x, Element y) const noexcept {
  if (!impl_->table.empty()) return impl_->table[std::size_t{x} * impl_->order + y];
  return impl_->mul_slow(x, y);
}

std::uint64_t FiniteRing::additive_order(Element x) const noexcept {
  std::uint64_t ord = 1;
  const auto* dx = impl_->dig(x);
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto d = static_cast<std::uint64_t>(impl_->dims[i]);
    ord = std::lcm(ord, d / std::gcd<std::uint64_t, std::uint64_t>(dx[i], d));
  }
  return ord;
}

void FiniteRing::left_products(Element x, std::span<Element> out) const {
  if (out.size() != order()) fail(ErrorCode::InvalidArgument, "left_products: wrong span size");
  if (!impl_->table.empty()) {
    const auto* row = impl_->table.data() + std::size_t{x} * impl_->order;
    std::copy(row, row + impl_->order, out.begin());
    return;
  }
  impl_->products(impl_->left_gen, x, out);
}

void FiniteRing::right_products(Element x, std::span<Element> out) const {
  if (out.size() != order()) fail(ErrorCode::InvalidArgument, "right_products: wrong span size");
  impl_->products(impl_->right_gen, x, out);
}

bool FiniteRing::has_product_table() const noexcept { return !impl_->table.empty(); }

bool FiniteRing::is_associative() const {
  const auto k = rank();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Element ij = impl_->sc_elems[i * k + j];
      for (std::size_t l = 0; l < k; ++l) {
        const Element jl = impl_->sc_elems[j * k + l];
        if (mul(ij, generator(l)) != mul(generator(i), jl)) return false;
      }
    }
  }
  return true;
}

bool FiniteRing::is_commutative() const {
  const auto k = rank();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (impl_->sc_elems[i * k + j] != impl_->sc_elems[j * k + i]) return false;
    }
  }
  return true;
}

bool operator==(const FiniteRing& a, const FiniteRing& b) {
  return a.impl_->dims == b.impl_->dims && a.impl_->sc == b.impl_->sc;
}

}  // namespace spectra
