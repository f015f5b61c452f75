#include "pbw/pbw_dual.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "pbw/lyndon.hpp"

namespace pbw {

namespace {

WordComb bracket(const WordComb& a, const WordComb& b) { return concatenate(a, b) - concatenate(b, a); }

}  // namespace

PbwFamily::PbwFamily(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {}

const WordComb& PbwFamily::P(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = p_memo_.find(w); it != p_memo_.end()) return it->second;
  }
  WordComb value = compute_P(w);
  std::lock_guard lock(mutex_);
  return p_memo_.try_emplace(w, std::move(value)).first->second;
}

const WordComb& PbwFamily::S(const Word& w) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = s_memo_.find(w); it != s_memo_.end()) return it->second;
  }
  WordComb value = compute_S(w);
  std::lock_guard lock(mutex_);
  return s_memo_.try_emplace(w, std::move(value)).first->second;
}

WordComb PbwFamily::compute_P(const Word& w) const {
  if (w.size() <= 1) return WordComb(w);
  if (is_lyndon(w)) {
    auto [l1, l2] = std_factorization(w);
    return bracket(P(l1), P(l2));
  }
  WordComb acc(Word{});
  for (const auto& [l, k] : lyndon_factorization(w).factors)
    for (unsigned i = 0; i < k; ++i) acc = concatenate(acc, P(l));
  return acc;
}

WordComb PbwFamily::compute_S(const Word& w) const {
  if (w.size() <= 1) return WordComb(w);
  if (is_lyndon(w)) return concatenate(WordComb(Word{w.front()}), S(w.sub(1)));
  WordComb acc(Word{});
  Rational denom = 1;
  for (const auto& [l, k] : lyndon_factorization(w).factors) {
    for (unsigned i = 0; i < k; ++i) acc = shuffle(acc, S(l));
    denom *= factorial(k);
  }
  return acc * (Rational(1) / denom);
}

PbwElement PbwFamily::pbw_P(const Word& w) const { return {w, Poly(alphabet_, P(w))}; }

DualElement PbwFamily::dual_S(const Word& w) const { return {w, Poly(alphabet_, S(w))}; }

bool PbwFamily::check_triangular(const Word& w) const {
  const WordComb& p = P(w);
  if (p.coeff(w) != 1) return false;
  for (const auto& [u, c] : p)
    if (u < w) return false;
  return true;
}

Report PbwFamily::check_duality(std::size_t n, bool parallel) const {
  Report report;
  report.suite = "pbw-duality";
  report.parameters = {{"alphabet", alphabet_->letters()}, {"max_len", n}};
  const auto words = alphabet_->words_up_to(n);
  for (const auto& w : words) {
    P(w);
    S(w);
  }

  auto row = [&](std::size_t i) {
    Report r;
    const auto& u = words[i];
    const WordComb& s = S(u);
    for (const auto& v : words) {
      const Rational value = scalar_product(s, P(v));
      const Rational expected = u == v ? 1 : 0;
      r.check(value == expected, "<S_" + alphabet_->format(u) + ", P_" + alphabet_->format(v) + ">",
              to_string(expected), to_string(value));
    }
    return r;
  };

  std::vector<Report> rows(words.size());
  if (parallel) {
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::future<void>> jobs;
    for (std::size_t t = 0; t < workers; ++t)
      jobs.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < words.size(); i += workers) rows[i] = row(i);
      }));
    for (auto& j : jobs) j.get();
  } else {
    for (std::size_t i = 0; i < words.size(); ++i) rows[i] = row(i);
  }
  for (const auto& r : rows) report.absorb(r);

  report.extra["pairs_checked"] = words.size() * words.size();
  return report;
}

Report PbwFamily::check_triangularity(std::size_t n) const {
  Report report;
  report.suite = "pbw-triangularity";
  report.parameters = {{"alphabet", alphabet_->letters()}, {"max_len", n}};
  for (const auto& w : alphabet_->words_up_to(n))
    report.check(check_triangular(w), "P_" + alphabet_->format(w), "w + greater words", Poly(alphabet_, P(w)).to_string());
  return report;
}

WordComb pbw_P_unmemoized(const Word& w) {
  if (w.size() <= 1) return WordComb(w);
  if (is_lyndon(w)) {
    auto [l1, l2] = std_factorization(w);
    return bracket(pbw_P_unmemoized(l1), pbw_P_unmemoized(l2));
  }
  WordComb acc(Word{});
  for (const auto& [l, k] : lyndon_factorization(w).factors)
    for (unsigned i = 0; i < k; ++i) acc = concatenate(acc, pbw_P_unmemoized(l));
  return acc;
}

std::vector<std::size_t> multidegree(const Word& w, std::size_t alphabet_size) {
  std::vector<std::size_t> d(alphabet_size, 0);
  for (Letter x : w) ++d.at(x);
  return d;
}

}  // namespace pbw
