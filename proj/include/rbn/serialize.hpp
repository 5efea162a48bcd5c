#pragma once

#include "rbn/decide.hpp"

#include <json.hpp>

#include <string>

namespace rbn {

using Json = nlohmann::ordered_json;

/// Integers fitting in int64 become JSON numbers, larger ones decimal strings.
Json integer_json(const Integer& x);
Integer integer_from_json(const Json& j);
/// "p/q" or "p".
Json rational_json(const Rational& x);

Json to_json(const CohomologyVector& h);
Json to_json(const ChernCharacter& v);
Json to_json(const ResolutionReport& rep);
Json to_json(const GoodSum& sum);
Json to_json(const WBNWitness& w);
Json to_json(const WBNVerdict& verdict);

GoodSum good_sum_from_json(const Json& j);
ChernCharacter character_from_json(const Surface& s, const Json& j);

/// "key: value" lines, one per JSON leaf, with dotted paths.
std::string to_text(const Json& j);

}  // namespace rbn
