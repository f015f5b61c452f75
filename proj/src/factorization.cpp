#include "pbw/factorization.hpp"

#include <algorithm>

#include "pbw/lyndon.hpp"
#include "pbw/pbw_dual.hpp"

namespace pbw {

namespace {

auto shuffle_law = [](const Word& u, const Word& v) { return shuffle_words(u, v); };
auto conc_law = [](const Word& u, const Word& v) { return WordComb(u * v); };

}  // namespace

ProductOrder parse_product_order(const std::string& s) {
  if (s == "decreasing") return ProductOrder::decreasing;
  if (s == "increasing") return ProductOrder::increasing;
  throw std::invalid_argument("product order must be 'decreasing' or 'increasing': " + s);
}

std::string to_string(ProductOrder order) { return order == ProductOrder::decreasing ? "decreasing" : "increasing"; }

TensorPoly truncated_exp(const TensorPoly& t, TruncationDegree n) {
  return truncated_exp_with(t, n, shuffle_law, conc_law);
}

std::vector<Word> factor_order(const Alphabet& alphabet, std::size_t n, ProductOrder order) {
  auto lyn = lyndon_up_to(alphabet, n);
  if (order == ProductOrder::decreasing) std::reverse(lyn.begin(), lyn.end());
  return lyn;
}

TensorPoly ordered_exponential_product(const Alphabet& alphabet, const std::vector<Word>& factors,
                                       TruncationDegree n) {
  PbwFamily family(std::make_shared<const Alphabet>(alphabet));
  TensorPoly acc(WordPair{Word{}, Word{}});
  for (const auto& l : factors) {
    TensorPoly generator;
    for (const auto& [s, cs] : family.S(l))
      for (const auto& [p, cp] : family.P(l)) generator.add(WordPair{s, p}, cs * cp);
    acc = tensor_mul(acc, truncated_exp(generator, n), LeftLaw::shuffle, n.n);
  }
  return acc;
}

TensorPoly schuetzenberger_product(const Alphabet& alphabet, TruncationDegree n, ProductOrder order) {
  return ordered_exponential_product(alphabet, factor_order(alphabet, n.n, order), n);
}

TensorPoly diagonal_series(const Alphabet& alphabet, TruncationDegree n) {
  TensorPoly out;
  for (const auto& w : alphabet.words_up_to(n.n)) out.add(WordPair{w, w}, Rational(1));
  return out;
}

Report compare_tensors(const std::string& suite, const TensorPoly& lhs, const TensorPoly& rhs,
                       const std::function<std::string(const WordPair&)>& format_key) {
  Report report;
  report.suite = suite;
  nlohmann::json mismatches = nlohmann::json::array();
  std::map<WordPair, std::pair<Rational, Rational>> keys;
  for (const auto& [k, c] : lhs) keys[k].first = c;
  for (const auto& [k, c] : rhs) keys[k].second = c;
  for (const auto& [k, cc] : keys) {
    const bool ok = cc.first == cc.second;
    report.check(ok, format_key(k), to_string(cc.first), to_string(cc.second));
    if (!ok)
      mismatches.push_back({{"key", format_key(k)}, {"lhs", to_string(cc.first)}, {"rhs", to_string(cc.second)}});
  }
  report.extra["terms_lhs"] = lhs.size();
  report.extra["terms_rhs"] = rhs.size();
  report.extra["mismatches"] = mismatches;
  return report;
}

Report verify_sf_with_factors(const Alphabet& alphabet, TruncationDegree n, const std::vector<Word>& factors) {
  const TensorPoly lhs = diagonal_series(alphabet, n);
  const TensorPoly rhs = ordered_exponential_product(alphabet, factors, n);
  Report report =
      compare_tensors("verify-sf", lhs, rhs, [&](const WordPair& k) { return format_tensor_key(alphabet, k); });
  report.parameters = {{"alphabet", alphabet.letters()}, {"degree", n.n}};
  report.extra["degree"] = n.n;
  report.extra["lyndon_count"] = factors.size();
  return report;
}

Report verify_sf(const Alphabet& alphabet, TruncationDegree n, ProductOrder order) {
  Report r = verify_sf_with_factors(alphabet, n, factor_order(alphabet, n.n, order));
  r.parameters["product_order"] = to_string(order);
  return r;
}

bool commutative_power_check(unsigned k) {
  const Word x{0};
  return shuffle_words(power(x, k), x) == WordComb(power(x, k + 1), Rational(k + 1));
}

}  // namespace pbw
