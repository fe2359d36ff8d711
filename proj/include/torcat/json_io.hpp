#pragma once

// JSON shapes for the public data types. Field names are part of the CLI
// contract and documented in the README.

#include <json.hpp>

#include "torcat/catalog.hpp"
#include "torcat/core.hpp"
#include "torcat/oracle.hpp"

namespace torcat {

nlohmann::json to_json(const GradedGenerator& g);
nlohmann::json to_json(const BlockAlgebra& b);
nlohmann::json to_json(const TensorAlgebra& A);
nlohmann::json to_json(const PoincareSeries& s);
nlohmann::json to_json(const RankTable& t);
nlohmann::json to_json(const CatalogResult& r);

GradedGenerator generator_from_json(const nlohmann::json& j);
BlockAlgebra block_from_json(const nlohmann::json& j);
TensorAlgebra algebra_from_json(const nlohmann::json& j);
PoincareSeries series_from_json(const nlohmann::json& j);

}  // namespace torcat
