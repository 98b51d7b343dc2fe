#pragma once

#include <string>

#include "json.hpp"
#include "spectra/analysis.hpp"
#include "spectra/constructions.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

// Document formats:
//   {"identity":0,"n":6,"table":[[...],...],"type":"group"}
//   {"invariants":[2,2],"sc":[[[0,0],[1,0]],[[0,0],[0,1]]],"type":"ring"}
// Output is canonical: sorted keys, no whitespace.

nlohmann::json to_json(const FiniteGroup& g);
nlohmann::json to_json(const FiniteRing& r);
nlohmann::json to_json(const Structure& s);
nlohmann::json to_json(const NilpotencyReport& report);
nlohmann::json to_json(const GateReport& report);
/// {"family","gate32","poly","values":[{"count","p_over_q"}]}
nlohmann::json to_json(const Spectrum& s, bool with_gate = true);

/// Throws ParseError on malformed JSON or a wrong "type"; structural problems
/// surface as the validate_group / validate_ring errors.
Structure structure_from_json(const nlohmann::json& doc, const Limits& limits = {});
Structure parse_structure(const std::string& text, const Limits& limits = {});

std::string canonical(const nlohmann::json& doc);

}  // namespace spectra
