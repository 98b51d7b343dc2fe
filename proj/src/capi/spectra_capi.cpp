#include "spectra/spectra.h"

#include <cstring>
#include <mutex>
#include <new>
#include <string>

#include "spectra/analysis.hpp"
#include "spectra/constructions.hpp"
#include "spectra/error.hpp"
#include "spectra/probability.hpp"
#include "spectra/serialize.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/verify.hpp"

struct spectra_structure {
  spectra::Structure value;
};

namespace {

thread_local std::string g_last_error;
std::mutex g_limits_mutex;
spectra::Limits g_limits;

spectra::Limits current_limits() {
  std::lock_guard lock(g_limits_mutex);
  return g_limits;
}

spectra_status set_error(spectra_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/// Runs body and maps exceptions onto status codes.
template <typename Body>
spectra_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    body();
    return SPECTRA_OK;
  } catch (const spectra::Error& e) {
    return set_error(static_cast<spectra_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SPECTRA_ERR_ORDER_OVERFLOW, "OrderOverflow: out of memory");
  } catch (const std::exception& e) {
    return set_error(SPECTRA_ERR_INTERNAL, e.what());
  }
}

spectra_status require(bool ok, const char* what) {
  return ok ? SPECTRA_OK : set_error(SPECTRA_ERR_INVALID_ARGUMENT, std::string("InvalidArgument: ") + what);
}

const spectra::FiniteGroup& as_group(const spectra_structure* s) {
  if (const auto* g = std::get_if<spectra::FiniteGroup>(&s->value)) return *g;
  spectra::fail(spectra::ErrorCode::InvalidArgument, "expected a group, got a ring");
}

const spectra::FiniteRing& as_ring(const spectra_structure* s) {
  if (const auto* r = std::get_if<spectra::FiniteRing>(&s->value)) return *r;
  spectra::fail(spectra::ErrorCode::InvalidArgument, "expected a ring, got a group");
}

spectra_structure* wrap(spectra::Structure s) { return new spectra_structure{std::move(s)}; }

}  // namespace

extern "C" {

const char* spectra_version(void) { return "0.1.0"; }

const char* spectra_status_name(spectra_status status) {
  return spectra::error_code_name(static_cast<spectra::ErrorCode>(status)).data();
}

const char* spectra_last_error(void) { return g_last_error.c_str(); }

void spectra_string_free(char* s) { std::free(s); }

spectra_status spectra_set_limits(const spectra_limits* limits) {
  if (auto st = require(limits != nullptr, "limits is NULL")) return st;
  std::lock_guard lock(g_limits_mutex);
  if (limits->order_cap) g_limits.order_cap = limits->order_cap;
  if (limits->table_threshold) g_limits.table_threshold = limits->table_threshold;
  if (limits->general_order_cap) g_limits.general_order_cap = limits->general_order_cap;
  if (limits->bilinear_order_cap) g_limits.bilinear_order_cap = limits->bilinear_order_cap;
  if (limits->candidate_budget) g_limits.candidate_budget = limits->candidate_budget;
  return SPECTRA_OK;
}

void spectra_get_limits(spectra_limits* out) {
  if (out == nullptr) return;
  const auto l = current_limits();
  *out = {l.order_cap, l.table_threshold, l.general_order_cap, l.bilinear_order_cap,
          l.candidate_budget};
}

spectra_status spectra_structure_from_json(const char* json, spectra_structure** out) {
  if (auto st = require(json && out, "NULL argument")) return st;
  return guarded([&] { *out = wrap(spectra::parse_structure(json, current_limits())); });
}

spectra_status spectra_catalog(const char* name, spectra_structure** out) {
  if (auto st = require(name && out, "NULL argument")) return st;
  return guarded([&] { *out = wrap(spectra::catalog(std::string(name), current_limits())); });
}

spectra_status spectra_catalog_list(char** out_text) {
  if (auto st = require(out_text != nullptr, "NULL argument")) return st;
  return guarded([&] {
    std::string text;
    for (const auto& line : spectra::catalog_entries()) text += line + "\n";
    *out_text = dup_string(text);
  });
}

spectra_status spectra_structure_to_json(const spectra_structure* s, char** out_json) {
  if (auto st = require(s && out_json, "NULL argument")) return st;
  return guarded([&] { *out_json = dup_string(spectra::canonical(spectra::to_json(s->value))); });
}

void spectra_structure_free(spectra_structure* s) { delete s; }

spectra_kind spectra_structure_kind(const spectra_structure* s) {
  return std::holds_alternative<spectra::FiniteGroup>(s->value) ? SPECTRA_GROUP : SPECTRA_RING;
}

uint64_t spectra_structure_order(const spectra_structure* s) {
  return std::visit([](const auto& x) -> uint64_t { return x.order(); }, s->value);
}

spectra_status spectra_group_pr_c(const spectra_structure* g, const char* method,
                                  char** out_rational) {
  if (auto st = require(g && out_rational, "NULL argument")) return st;
  return guarded([&] {
    auto m = spectra::CountMethod::Brute;
    if (method != nullptr && std::strcmp(method, "brute") != 0) {
      if (std::strcmp(method, "classes") != 0) {
        spectra::fail(spectra::ErrorCode::InvalidArgument,
                      std::string("unknown method '") + method + "'");
      }
      m = spectra::CountMethod::ClassCount;
    }
    *out_rational = dup_string(spectra::pr_c_group(as_group(g), m).value.str());
  });
}

spectra_status spectra_ring_pr_f(const spectra_structure* r, int64_t a, int64_t b,
                                 char** out_rational) {
  if (auto st = require(r && out_rational, "NULL argument")) return st;
  return guarded([&] {
    *out_rational = dup_string(spectra::pr_f_ring(as_ring(r), {a, b}).value.str());
  });
}

spectra_status spectra_construct_nring(const spectra_structure* ring, spectra_structure** out) {
  if (auto st = require(ring && out, "NULL argument")) return st;
  return guarded([&] { *out = wrap(spectra::construct_N(as_ring(ring), current_limits())); });
}

spectra_status spectra_construct_circle(const spectra_structure* ring, spectra_structure** out) {
  if (auto st = require(ring && out, "NULL argument")) return st;
  return guarded([&] { *out = wrap(spectra::circle_group(as_ring(ring), current_limits())); });
}

spectra_status spectra_construct_commring(const spectra_structure* group, spectra_structure** out) {
  if (auto st = require(group && out, "NULL argument")) return st;
  return guarded([&] { *out = wrap(spectra::commutator_ring(as_group(group), current_limits())); });
}

spectra_status spectra_construct_malcev(const spectra_structure* ring, spectra_structure** out) {
  if (auto st = require(ring && out, "NULL argument")) return st;
  return guarded([&] { *out = wrap(spectra::malcev_group(as_ring(ring), current_limits())); });
}

spectra_status spectra_construct_product(const spectra_structure* first,
                                         const spectra_structure* second, spectra_structure** out) {
  if (auto st = require(first && second && out, "NULL argument")) return st;
  return guarded([&] {
    const auto limits = current_limits();
    if (std::holds_alternative<spectra::FiniteGroup>(first->value)) {
      *out = wrap(spectra::direct_product_group(as_group(first), as_group(second), limits));
    } else {
      *out = wrap(spectra::direct_product_ring(as_ring(first), as_ring(second), limits));
    }
  });
}

spectra_status spectra_analyze(const spectra_structure* s, char** out_json) {
  if (auto st = require(s && out_json, "NULL argument")) return st;
  return guarded([&] {
    nlohmann::json doc;
    auto order_info = [&](const spectra::OrderInfo& info) {
      doc["order"] = info.order;
      doc["odd"] = info.is_odd;
      doc["p_power_of"] = info.prime ? nlohmann::json(*info.prime) : nlohmann::json(nullptr);
    };
    if (const auto* g = std::get_if<spectra::FiniteGroup>(&s->value)) {
      doc["type"] = "group";
      order_info(spectra::parity_and_p(*g));
      doc["abelian"] = g->is_abelian();
      doc["center_size"] = spectra::center_group(*g).size();
      doc["nilpotency"] = spectra::to_json(spectra::lower_central_series(*g));
      doc["conjugacy_classes"] = spectra::conjugacy_class_count(*g);
    } else {
      const auto& r = std::get<spectra::FiniteRing>(s->value);
      doc["type"] = "ring";
      order_info(spectra::parity_and_p(r));
      doc["associative"] = r.is_associative();
      doc["commutative"] = r.is_commutative();
      doc["antisymmetric"] = spectra::is_antisymmetric(r);
      doc["strongly_antisymmetric"] = spectra::is_strongly_antisymmetric(r);
      doc["nilpotency"] = spectra::to_json(spectra::ring_powers(r));
      nlohmann::json comps = nlohmann::json::array();
      for (const auto& c : spectra::p_primary_decomposition(r, current_limits())) {
        comps.push_back({{"prime", c.prime}, {"order", c.ring.order()}});
      }
      doc["p_components"] = comps;
    }
    *out_json = dup_string(spectra::canonical(doc));
  });
}

spectra_status spectra_enumerate_bilinear(const int64_t* v_invariants, size_t v_len,
                                          const int64_t* w_invariants, size_t w_len, int alternating,
                                          int64_t a, int64_t b, char** out_json) {
  if (auto st = require(out_json && (v_invariants || v_len == 0) && (w_invariants || w_len == 0),
                        "NULL argument")) {
    return st;
  }
  return guarded([&] {
    spectra::BilinearFamilySpec spec{{v_invariants, v_invariants + v_len},
                                     {w_invariants, w_invariants + w_len},
                                     alternating != 0};
    const auto s = spectra::bilinear_spectrum(spec, {a, b}, current_limits());
    *out_json = dup_string(spectra::canonical(spectra::to_json(s)));
  });
}

spectra_status spectra_enumerate_general(const int64_t* invariants, size_t len,
                                         const spectra_ring_filter* filter, int64_t a, int64_t b,
                                         char** out_json) {
  if (auto st = require(out_json && (invariants || len == 0), "NULL argument")) return st;
  return guarded([&] {
    spectra::RingFilter f;
    if (filter != nullptr) {
      f.associative = filter->associative != 0;
      f.commutative = filter->commutative != 0;
      f.antisymmetric = filter->antisymmetric != 0;
      f.nilpotent = filter->nilpotent != 0;
      if (filter->max_class > 0) f.max_class = filter->max_class;
    }
    const auto s = spectra::general_spectrum({invariants, invariants + len}, f, {a, b},
                                             current_limits());
    *out_json = dup_string(spectra::canonical(spectra::to_json(s)));
  });
}

spectra_status spectra_verify(const char* suite, uint64_t seed, char** out_json, int* out_passed) {
  if (auto st = require(suite && out_json && out_passed, "NULL argument")) return st;
  return guarded([&] {
    const auto report = spectra::run_suite(suite, seed, current_limits());
    *out_json = dup_string(spectra::canonical(spectra::to_json(report)));
    *out_passed = report.passed() ? 1 : 0;
  });
}

spectra_status spectra_suite_list(char** out_text) {
  if (auto st = require(out_text != nullptr, "NULL argument")) return st;
  return guarded([&] {
    std::string text;
    for (const auto& name : spectra::suite_names()) text += name + "\n";
    *out_text = dup_string(text);
  });
}

}  // extern "C"
