#pragma once

#include <nlohmann/json.hpp>

#include "pbw/core_algebra.hpp"
#include "pbw/stuffle.hpp"

namespace pbw {

// {"<word>": "<p/q>", ...}; the empty word is "".
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(AlphabetRef alphabet, const nlohmann::json& j);

// [{"left": "<word>", "right": "<word>", "coeff": "<p/q>"}, ...]
nlohmann::json to_json(const Alphabet& alphabet, const TensorPoly& t);

// {"y1y3": "-1/2", ...}; the empty word is "".
nlohmann::json to_json(const YPoly& p);

}  // namespace pbw
