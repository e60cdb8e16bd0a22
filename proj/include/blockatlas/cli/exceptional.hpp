#pragma once

#include <map>
#include <memory>
#include <string>

#include "blockatlas/cli/serialize.hpp"

namespace blockatlas::cli {

/// Tabulated unipotent data for exceptional types, keyed by type.
///
/// Document layout (schema "exceptional_v1"):
///   { "schema": "exceptional_v1",
///     "types": [ { "type": "F4", "labels": [...],
///                  "series": [ { "d": 1, "blocks": [[label, ...], ...] } ] } ] }
/// Blocks name labels verbatim; each d must partition the label list.
using ExceptionalTables = std::map<GroupType, std::shared_ptr<const TabulatedSeries>>;

/// Structural problems raise InvalidArgument with a JSON path.
ExceptionalTables exceptional_from_json(const Json& json, const std::string& source);
ExceptionalTables load_exceptional(const std::string& path);

}  // namespace blockatlas::cli
