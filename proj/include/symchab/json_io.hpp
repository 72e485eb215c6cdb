#pragma once

#include <json.hpp>

#include "symchab/oracle.hpp"
#include "symchab/polytope.hpp"
#include "symchab/series.hpp"
#include "symchab/symbolic.hpp"
#include "symchab/tropics.hpp"

namespace symchab {

using Json = nlohmann::ordered_json;

/// Parse failures throw ParseError naming the offending field, e.g. "components[1].terms[0].val".
PureSeries series_from_json(const Json& j);
Json series_to_json(const PureSeries& f);

BoxPolyhedron box_from_json(const Json& j);
Json box_to_json(const BoxPolyhedron& box);

Json rational_vector_to_json(const RatVector& w);
RatVector rational_vector_from_json(const Json& j, const std::string& field);

Json vertex_set_to_json(const VertexSet& entries);
Json locus_to_json(const TropLocus& locus);

LatticePolytope2 polytope_from_json(const Json& j);
Json polytope_to_json(const LatticePolytope2& p);

RatPoly poly_from_json(const Json& j);
Json poly_to_json(const RatPoly& p);

FiniteFieldSystem system_from_json(const Json& j);
Json system_to_json(const FiniteFieldSystem& sys);

/// Parses JSON text; syntax errors become ParseError.
Json parse_json_text(std::string_view text);

}  // namespace symchab
