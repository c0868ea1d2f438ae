#pragma once

#include "satake/cells.hpp"
#include "satake/module.hpp"
#include "satake/satake.hpp"
#include "satake/verify.hpp"

#include <json.hpp>

#include <string>

namespace satake {

using Json = nlohmann::json;

/// Malformed documents.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json datum_to_json(const RootDatum& d);
DatumPtr datum_from_json(const Json& j);

Json coweight_to_json(const Coweight& c);
Coweight coweight_from_json(const Json& j, std::size_t rank);

// Modules: weights in lexicographic order as {coords, dim, degree}; each
// operator as {index (1-based), shift, blocks}, a block being {source, rows,
// cols, entries} with sparse [row, col, "p/q"] triplets, 0-based inside the
// block, row-major.
Json module_to_json(const GradedModule& m);
GradedModule module_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);
Json cells_to_json(const RootDatum& d, const CellsTable& t);
Json character_to_json(const Character& ch);

/// Compact, with a trailing newline; key order is fixed, so equal
/// inputs give equal bytes.
std::string dump(const Json& j);

}  // namespace satake
