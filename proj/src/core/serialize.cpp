#include "spectra/serialize.hpp"

#include "spectra/error.hpp"

namespace spectra {

using nlohmann::json;

json to_json(const FiniteGroup& g) {
  json table = json::array();
  for (Element a = 0; a < g.order(); ++a) {
    auto row = g.row(a);
    table.push_back(json(std::vector<Element>(row.begin(), row.end())));
  }
  return json{{"type", "group"}, {"n", g.order()}, {"identity", g.identity()}, {"table", table}};
}

json to_json(const FiniteRing& r) {
  return json{{"type", "ring"},
              {"invariants", std::vector<std::int64_t>(r.invariants().begin(), r.invariants().end())},
              {"sc", r.structure_constants()}};
}

json to_json(const Structure& s) {
  return std::visit([](const auto& x) { return to_json(x); }, s);
}

json to_json(const NilpotencyReport& report) {
  json sizes = json::array();
  for (const auto& m : report.series) sizes.push_back(m.size());
  json out{{"kind", report.kind == StructureKind::Group ? "group" : "ring"}, {"series_sizes", sizes}};
  if (report.class_value) {
    out["class"] = *report.class_value;
  } else {
    out["class"] = "NotNilpotent";
  }
  return out;
}

json to_json(const GateReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json item{{"p_over_q", v.value.str()}, {"reason", v.reason}};
    if (v.witness) item["witness"] = to_json(*v.witness);
    violations.push_back(item);
  }
  return json{{"pass", report.pass}, {"violations", violations}};
}

json to_json(const Spectrum& s, bool with_gate) {
  json values = json::array();
  for (const auto& v : s.values()) values.push_back({{"p_over_q", v.str()}, {"count", s.count(v)}});
  json out{{"family", s.family()}, {"poly", s.poly().str()}, {"values", values}};
  if (with_gate) out["gate32"] = to_json(gate_check_32(s));
  return out;
}

namespace {

template <typename T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Structure structure_from_json(const json& doc, const Limits& limits) {
  if (!doc.is_object()) fail(ErrorCode::ParseError, "document must be a JSON object");
  const auto type = field<std::string>(doc, "type");
  if (type == "group") {
    const auto n = field<std::int64_t>(doc, "n");
    const auto identity = field<std::int64_t>(doc, "identity");
    const auto table = field<std::vector<std::vector<std::int64_t>>>(doc, "table");
    if (n < 1 || static_cast<std::uint64_t>(n) > kMaxElements) {
      fail(ErrorCode::NotClosed, "group order n = " + std::to_string(n) + " out of range");
    }
    if (table.size() != static_cast<std::size_t>(n)) {
      fail(ErrorCode::NotClosed, "table has " + std::to_string(table.size()) + " rows but n = " +
                                     std::to_string(n));
    }
    return validate_group(table, identity);
  }
  if (type == "ring") {
    auto invariants = field<std::vector<std::int64_t>>(doc, "invariants");
    const auto sc = field<StructureConstants>(doc, "sc");
    return validate_ring(std::move(invariants), sc, limits);
  }
  fail(ErrorCode::ParseError, "unknown document type '" + type + "'");
}

Structure parse_structure(const std::string& text, const Limits& limits) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  return structure_from_json(doc, limits);
}

std::string canonical(const json& doc) { return doc.dump(); }

}  // namespace spectra
