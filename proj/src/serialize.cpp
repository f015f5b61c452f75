#include "pbw/serialize.hpp"

namespace pbw {

nlohmann::json to_json(const Poly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [w, c] : p.terms()) j[w.empty() ? std::string() : p.alphabet()->format(w)] = to_string(c);
  return j;
}

Poly poly_from_json(AlphabetRef alphabet, const nlohmann::json& j) {
  WordComb terms;
  for (const auto& [k, v] : j.items()) terms.add(alphabet->parse(k), parse_rational(v.get<std::string>()));
  return Poly(std::move(alphabet), std::move(terms));
}

nlohmann::json to_json(const Alphabet& alphabet, const TensorPoly& t) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [k, c] : t)
    j.push_back({{"left", alphabet.format(k.first)}, {"right", alphabet.format(k.second)}, {"coeff", to_string(c)}});
  return j;
}

nlohmann::json to_json(const YPoly& p) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [w, c] : p) j[w.empty() ? std::string() : w.to_string()] = to_string(c);
  return j;
}

}  // namespace pbw
