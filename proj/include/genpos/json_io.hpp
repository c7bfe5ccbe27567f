#pragma once

#include <string>

#include <json.hpp>

#include "genpos/cases.hpp"
#include "genpos/certify.hpp"
#include "genpos/family.hpp"
#include "genpos/separation.hpp"

namespace genpos {

/// Parses { "dim", "maps": [{"matrix", "offset", "ratio"?}], "hull": {"lo","hi"} }.
/// Ratios are computed from the matrix unless an explicit override is given;
/// an override below the certified operator-norm lower bound is rejected.
IFSystem system_from_json(const nlohmann::json& j);

/// Parses a family descriptor: { "kind": "exact-overlap"|"one-point"|
/// "translation-single"|"translation-all", ... } with kind-specific fields
/// (b / p,r / system+index) and a "domain" box.
FamilyDescriptor family_from_json(const nlohmann::json& j);

nlohmann::json system_to_json(const IFSystem& s);
nlohmann::json to_json(const Certificate& c);
nlohmann::json to_json(const SeparationVerdict& v);
nlohmann::json to_json(const SscReport& r);
nlohmann::json to_json(const SweepReport& r);   // summary; per-cell rows go to CSV
nlohmann::json to_json(const CaseVerdict& v);
nlohmann::json to_json(const WitnessSearchResult& r);
nlohmann::json to_json(const DisplacementReport& r);

/// Canonical serialization: keys sorted, reals printed with 17 significant
/// digits so parse(emit(x)) == x at native precision.
std::string canonical_dump(const nlohmann::json& j);

std::string sweep_csv(const SweepReport& r);
std::string case_csv(const CaseVerdict& v);
std::string witnesses_csv(const WitnessSearchResult& r);

}  // namespace genpos
