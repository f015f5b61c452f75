#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pbw/core_algebra.hpp"
#include "pbw/report.hpp"

namespace pbw {

enum class ProductOrder { decreasing, increasing };

ProductOrder parse_product_order(const std::string& s);
std::string to_string(ProductOrder order);

// Maximum word length retained by a truncated computation.
struct TruncationDegree {
  std::size_t n = 0;
};

// Sum over k of t^k / k!, all products truncated at n. Every term of t must
// have equal, positive left and right lengths (std::invalid_argument otherwise).
template <class LeftFn, class RightFn>
TensorPoly truncated_exp_with(const TensorPoly& t, TruncationDegree n, LeftFn&& left, RightFn&& right) {
  std::size_t d = 0;
  for (const auto& [k, c] : t) {
    if (k.first.size() != k.second.size() || k.first.empty())
      throw std::invalid_argument("truncated_exp: terms must be homogeneous of equal positive degree");
    d = d == 0 ? k.first.size() : std::min(d, k.first.size());
  }
  TensorPoly sum(WordPair{Word{}, Word{}});
  if (t.empty()) return sum;
  TensorPoly power = sum;
  for (std::size_t k = 1; k * d <= n.n; ++k) {
    power = tensor_mul_with(power, t, left, right, n.n) * (Rational(1) / Rational(static_cast<unsigned long>(k)));
    if (power.empty()) break;
    sum += power;
  }
  return sum;
}

TensorPoly truncated_exp(const TensorPoly& t, TruncationDegree n);

// S_l (x) P_l for every Lyndon word of length <= n, in the requested order
// (decreasing is the factorization order).
std::vector<Word> factor_order(const Alphabet& alphabet, std::size_t n, ProductOrder order);

// Ordered product of exp(S_l (x) P_l) over the given factor sequence.
TensorPoly ordered_exponential_product(const Alphabet& alphabet, const std::vector<Word>& factors, TruncationDegree n);

TensorPoly schuetzenberger_product(const Alphabet& alphabet, TruncationDegree n,
                                   ProductOrder order = ProductOrder::decreasing);

// Sum of w (x) w over words of length <= n.
TensorPoly diagonal_series(const Alphabet& alphabet, TruncationDegree n);

// Compares two tensors key by key; `lhs` is the diagonal side.
Report compare_tensors(const std::string& suite, const TensorPoly& lhs, const TensorPoly& rhs,
                       const std::function<std::string(const WordPair&)>& format_key);

Report verify_sf(const Alphabet& alphabet, TruncationDegree n, ProductOrder order = ProductOrder::decreasing);
// Same check with an explicit factor sequence (negative controls).
Report verify_sf_with_factors(const Alphabet& alphabet, TruncationDegree n, const std::vector<Word>& factors);

// x^k shuffled with x equals (k+1) x^(k+1).
bool commutative_power_check(unsigned k);

}  // namespace pbw
