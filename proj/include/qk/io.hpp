#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include <json.hpp>

#include "qk/engine.hpp"
#include "qk/quiver.hpp"
#include "qk/rep.hpp"
#include "qk/resolution.hpp"

namespace qk {

using Json = nlohmann::json;

/// Parse a file as JSON; InputError on I/O or syntax errors.
Json load_json(const std::filesystem::path& path);

/// {"vertices": n, "arrows": [[t, h], ...]}
Quiver quiver_from_json(const Json& j);
Json to_json(const Quiver& q);

/// {"dim": [...], "mults": [{"root": [...], "m": k}, ...]}; validated.
std::pair<DimVector, OrbitSpec> orbit_from_json(const Quiver& q, const Json& j);
Json to_json(const DimVector& e, const OrbitSpec& orbit);

/// {"i": [...], "r": [...]}
ResolutionPair pair_from_json(const Json& j);
Json to_json(const ResolutionPair& pair);

/// {"dim": [...], "maps": [matrix per arrow]}, matrices as lists of rows.
QuiverRep rep_from_json(const Quiver& q, const Json& j);
Json to_json(const QuiverRep& rep);

/// [{"mu": [[...], ...], "coeff": c}, ...] in canonical order.
Json terms_to_json(const TensorElement& t);
TensorElement terms_from_json(const Json& terms, std::size_t arity);

/// {"codim", "caveat", "pair", "terms"}; caveat is null for type A.
Json to_json(const CoefficientTable& table, bool cohomological = false);
CoefficientTable table_from_json(const Json& j, std::size_t arity);

/// Render a table object with one term per line, keys in the order codim, caveat, pair, terms.
std::string dump_table(const Json& table);

/// Aligned plain-text rendering.
std::string table_to_text(const CoefficientTable& table, bool cohomological = false);

}  // namespace qk
