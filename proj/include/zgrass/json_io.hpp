#pragma once

#include <json.hpp>

#include "zgrass/checks.hpp"
#include "zgrass/group_action.hpp"

namespace zgr {

using Json = nlohmann::ordered_json;

Json to_json(const Degree& d);
Json to_json(const BlockDims& dims);
Json to_json(const KIndex& index);
/// [[[[var, exp], ...], "p/q"], ...]
Json to_json(const Polynomial& p, const std::vector<std::string>& names);
/// {"num": poly, "den": poly}
Json to_json(const RationalFunction& f, const std::vector<std::string>& names);
/// {"trunc": N, "terms": [{"mono": [[gen, exp], ...], "coeff": ...}, ...], "text": ...}
/// The "text" field is informational and ignored when reading.
Json to_json(const GradedSeries& f);
/// {"rowDims": ..., "colDims": ..., "entries": [[series, ...], ...]}
Json to_json(const SuperMatrix& a);
/// {"index": ..., "generators": [names in fill order]}
Json to_json(const Chart& chart);
/// {"from": ..., "to": ..., "images": {gen: series}, "certificate": poly}
Json to_json(const TransitionMap& map);
/// Matrix schema plus {"chart": index}.
Json to_json(const GrassmannTPoint& psi);
Json to_json(const GLPoint& p);

Json to_json(const CocycleEntry& entry, const Atlas& atlas);
Json to_json(const CheckEntry& entry);

KIndex kindex_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j, const std::vector<std::string>& names);
RationalFunction rational_function_from_json(const Json& j, const std::vector<std::string>& names);
/// Throws ParseError on unknown generators or a truncation mismatch.
GradedSeries series_from_json(const Json& j, const Algebra& algebra);
SuperMatrix matrix_from_json(const Json& j, const Algebra& algebra);

}  // namespace zgr
