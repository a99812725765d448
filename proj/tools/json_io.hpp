#pragma once

#include <json.hpp>

#include "fideal/analysis.hpp"
#include "fideal/complex.hpp"
#include "fideal/decomposition.hpp"
#include "fideal/enumeration.hpp"

namespace fideal::cli {

nlohmann::json to_json(VertexSet set);
nlohmann::json to_json(const FVector& fv);
nlohmann::json to_json(const SimplicialComplex& complex);
nlohmann::json to_json(const Decomposition& decomposition);
nlohmann::json to_json(const HilbertSeries& series, int terms);
nlohmann::json to_json(const SquareFreeIdeal& ideal, const ConditionReport& report);
nlohmann::json to_json(const CensusEntry& entry);
nlohmann::json to_json(const SuiteReport& report);

/// Inverses for the schemas that carry full information.
FVector fvector_from_json(const nlohmann::json& j);
Decomposition decomposition_from_json(const nlohmann::json& j);

}  // namespace fideal::cli
