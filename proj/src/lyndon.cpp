#include "pbw/lyndon.hpp"

#include <stdexcept>

namespace pbw {

Word LyndonFactorization::product() const {
  Word w;
  for (const auto& [l, k] : factors) w = w * power(l, k);
  return w;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!(w < w.sub(i))) return false;
  return true;
}

std::vector<Word> lyndon_up_to(std::size_t alphabet_size, std::size_t n) {
  std::vector<Word> out;
  if (n == 0 || alphabet_size == 0) return out;
  const Letter top = static_cast<Letter>(alphabet_size - 1);
  std::vector<Letter> w{0};
  while (!w.empty()) {
    out.emplace_back(w);
    const std::size_t m = w.size();
    while (w.size() < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == top) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

StandardFactorization std_factorization(const Word& l) {
  if (l.size() < 2 || !is_lyndon(l))
    throw std::invalid_argument("std_factorization: input must be a Lyndon word of length >= 2");
  for (std::size_t i = 1; i < l.size(); ++i) {
    Word right = l.sub(i);
    if (is_lyndon(right)) return {l.sub(0, i), std::move(right)};
  }
  // The last letter is always a Lyndon right factor.
  throw std::logic_error("std_factorization: unreachable");
}

LyndonFactorization lyndon_factorization(const Word& w) {
  LyndonFactorization f;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && w[k] <= w[j]) {
      k = w[k] < w[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      Word factor = w.sub(i, j - k);
      if (!f.factors.empty() && f.factors.back().first == factor)
        ++f.factors.back().second;
      else
        f.factors.emplace_back(std::move(factor), 1);
      i += j - k;
    }
  }
  return f;
}

}  // namespace pbw
