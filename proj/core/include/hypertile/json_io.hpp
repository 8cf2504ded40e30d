#pragma once

#include <string>

#include "json.hpp"

#include "hypertile/audit.hpp"
#include "hypertile/isoperimetry.hpp"
#include "hypertile/polygon.hpp"
#include "hypertile/tiling.hpp"

namespace hypertile {

/// Polygon wire format: {"vertices": [[x,y], ...], "model": "poincare-disk"}.
nlohmann::json polygon_to_json(const Polygon& p);
Polygon polygon_from_json(const nlohmann::json& j);

/// Tiling wire format:
///   {"vertices":[{"id", "lift":[x,y]?}],
///    "edges":[{"id","v":[a,b]}],
///    "faces":[{"id","boundary":[+-edge ids],"area"?,"perimeter"?,"lift"?}],
///    "meta":{"genus"? , "total_area"?}}
/// "lift" on a face is the per-face realization, one [x,y] per corner.
nlohmann::json tiling_to_json(const TilingGraph& t);
TilingGraph tiling_from_json(const nlohmann::json& j);

/// AuditReport wire format:
///   {"check","passed","min_slack","witness"?,"grid":{...}}.
nlohmann::json audit_to_json(const AuditReport& r);

nlohmann::json hull_cover_to_json(const HullCoverReport& r);

nlohmann::json optimization_to_json(const OptimizationResult& r);

}  // namespace hypertile
