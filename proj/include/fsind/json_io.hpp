#pragma once

#include "fsind/abelian.hpp"
#include "fsind/category_spec.hpp"
#include "fsind/center.hpp"
#include "fsind/fusion.hpp"
#include "fsind/indicators.hpp"
#include "fsind/qforms.hpp"

#include "json.hpp"

#include <string>

namespace fsind {

using Json = nlohmann::ordered_json;

// Parsers throw std::invalid_argument with a readable message on malformed input.

/// {"cyclic_factors": [3, 3]}
Json to_json(const FiniteAbelianGroup& group);
FiniteAbelianGroup group_from_json(const Json& j);

/// "g^2/3", "-2g^2/13", "(g^2-h^2)/3" or "0" on the given group.
QuadraticForm parse_form(const FiniteAbelianGroup& group, const std::string& text);

/// {"group": {...}, "monomial": [{"factor": 0, "coeff": 2}]} or {"group": ..., "table": ["0", "1/3", ...]}.
/// "group" may be omitted when `fallback` is given. A string is read with `parse_form`.
/// With "convention": "twist" the given values are <g,g>-phases and the stored form is half of them.
Json to_json(const QuadraticForm& q);
QuadraticForm form_from_json(const Json& j, const FiniteAbelianGroup* fallback = nullptr);

/// {"family": "NG2", "group": ..., "q": ..., "group_prime": ..., "q_prime": ...} and so on per family.
Json to_json(const CategorySpec& spec);
CategorySpec spec_from_json(const Json& j);

Json to_json(const FusionRing& ring);
Json to_json(const CenterPresentation& center);

/// {"period": P, "values": [{"k": 1, "re": 0, "im": 0}, ...]}
Json to_json(const IndicatorVector& v);

Json to_json(const RigidityReport& report, std::span<const CategorySpec> specs);

} // namespace fsind
