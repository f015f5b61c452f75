#include "pbw/multiindex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pbw {

MultiIndex::MultiIndex(std::map<std::size_t, unsigned> entries) {
  for (const auto& [i, k] : entries)
    if (k != 0) entries_.emplace(i, k);
}

MultiIndex MultiIndex::unit(std::size_t i, unsigned k) { return MultiIndex({{i, k}}); }

unsigned MultiIndex::operator[](std::size_t i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? 0u : it->second;
}

unsigned MultiIndex::degree() const {
  unsigned d = 0;
  for (const auto& [i, k] : entries_) d += k;
  return d;
}

Rational MultiIndex::factorial() const {
  Rational f = 1;
  for (const auto& [i, k] : entries_) f *= pbw::factorial(k);
  return f;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  auto e = a.entries_;
  for (const auto& [i, k] : b.entries_) e[i] += k;
  return MultiIndex(std::move(e));
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  auto e = a.entries_;
  for (const auto& [i, k] : b.entries_) {
    auto it = e.find(i);
    if (it == e.end() || it->second < k) throw std::domain_error("MultiIndex subtraction underflow");
    it->second -= k;
  }
  return MultiIndex(std::move(e));
}

bool MultiIndex::divides(const MultiIndex& other) const {
  return std::all_of(entries_.begin(), entries_.end(), [&](const auto& e) { return other[e.first] >= e.second; });
}

std::vector<std::size_t> MultiIndex::materialize() const {
  std::vector<std::size_t> seq;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) seq.insert(seq.end(), it->second, it->first);
  return seq;
}

MultiIndex MultiIndex::from_sequence(const std::vector<std::size_t>& seq) {
  std::map<std::size_t, unsigned> e;
  for (auto i : seq) ++e[i];
  return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string(const std::vector<std::string>& names) const {
  if (entries_.empty()) return "0";
  std::string s;
  if (!names.empty()) {
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
      s += names.at(it->first);
      if (it->second > 1) s += "^" + std::to_string(it->second);
    }
    return s;
  }
  for (const auto& [i, k] : entries_) {
    if (!s.empty()) s += "+";
    if (k > 1) s += std::to_string(k);
    s += "e" + std::to_string(i);
  }
  return s;
}

Rational multinomial_ratio(const MultiIndex& a, const MultiIndex& b) {
  return (a + b).factorial() / (a.factorial() * b.factorial());
}

std::vector<MultiIndex> multiindices_up_to(std::size_t dim, unsigned max_degree) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> exps(dim, 0);
  for (unsigned d = 0; d <= max_degree; ++d) {
    std::vector<MultiIndex> layer;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
      if (pos + 1 == dim || dim == 0) {
        if (dim == 0) {
          if (left == 0) layer.emplace_back();
          return;
        }
        exps[pos] = left;
        std::map<std::size_t, unsigned> e;
        for (std::size_t i = 0; i < dim; ++i) e[i] = exps[i];
        layer.emplace_back(std::move(e));
        return;
      }
      for (unsigned k = left + 1; k-- > 0;) {
        exps[pos] = k;
        rec(pos + 1, left - k);
      }
    };
    rec(0, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<MultiIndex> sub_multiindices(const MultiIndex& alpha) {
  std::vector<MultiIndex> out{MultiIndex{}};
  for (const auto& [i, k] : alpha.entries()) {
    std::vector<MultiIndex> next;
    for (const auto& b : out)
      for (unsigned j = 0; j <= k; ++j) next.push_back(b + MultiIndex::unit(i, j));
    out = std::move(next);
  }
  return out;
}

}  // namespace pbw
