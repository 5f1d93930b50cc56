#pragma once

#include <string>

#include <json.hpp>

#include "totref/conjugacy.hpp"
#include "totref/modrep.hpp"
#include "totref/normalform.hpp"
#include "totref/trcheck.hpp"
#include "totref/tuples.hpp"

namespace totref {

/// JSON interchange, schema_version "1". Scalars are always strings so no
/// precision is lost; malformed input raises ParseError before any algebra
/// runs.

inline constexpr const char* kSchemaVersion = "1";

nlohmann::json grid_to_json(const KMatrix& m);
KMatrix grid_from_json(const nlohmann::json& j, const FieldSpec& field, std::size_t rows,
                       std::size_t cols);

nlohmann::json to_json(const MatrixTuple& t);
MatrixTuple tuple_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LinearMatrix& m);
LinearMatrix linear_matrix_from_json(const nlohmann::json& j);

/// Ring-element entries are coefficient objects keyed by monomial name
/// ("1", "x", "y1".."yi", "xy1".."xyi"); absent keys are zero.
nlohmann::json to_json(const SMatrix& m);
SMatrix smatrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FDModule& m);

nlohmann::json to_json(const AcyclicityReport& r);
nlohmann::json to_json(const YoshinoReport& r);
nlohmann::json to_json(const ConjugacyDecision& d);
nlohmann::json to_json(const IndecomposabilityAnswer& a);

/// Parses an element expression: terms `c`, `c*x`, `c*yJ`, `x`, `yJ` joined
/// by `+`/`-`, e.g. "x+y1", "2x" is rejected (use "2*x").
SElement parse_element_expression(const RingDescriptor& ring, const std::string& text);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace totref
