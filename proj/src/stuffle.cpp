#include "pbw/stuffle.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "pbw/linalg.hpp"

namespace pbw {

YWord::YWord(std::initializer_list<unsigned> indices) : YWord(std::vector<unsigned>(indices)) {}

YWord::YWord(std::vector<unsigned> indices) : indices_(std::move(indices)) {
  for (unsigned s : indices_)
    if (s == 0) throw std::invalid_argument("YWord: letter indices start at 1");
}

unsigned YWord::weight() const {
  unsigned w = 0;
  for (unsigned s : indices_) w += s;
  return w;
}

YWord YWord::tail() const { return YWord(std::vector<unsigned>(indices_.begin() + 1, indices_.end())); }

YWord operator*(const YWord& u, const YWord& v) {
  auto out = u.indices_;
  out.insert(out.end(), v.indices_.begin(), v.indices_.end());
  return YWord(std::move(out));
}

std::string YWord::to_string() const {
  if (indices_.empty()) return "1";
  std::string s;
  for (unsigned i : indices_) s += "y" + std::to_string(i);
  return s;
}

YWord YWord::parse(const std::string& text) {
  std::vector<unsigned> out;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    out.push_back(static_cast<unsigned>(std::stoul(digits)));
    digits.clear();
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
    } else if (c == ',' || c == 'y' || c == ' ') {
      flush();
    } else {
      throw std::invalid_argument("YWord::parse: unexpected character in " + text);
    }
  }
  flush();
  return YWord(std::move(out));
}

std::string to_string(const YPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  bool first = true;
  // Print by length first so the expansion reads degree by degree.
  std::map<std::pair<std::size_t, YWord>, Rational> ordered;
  for (const auto& [w, c] : p) ordered[{w.length(), w}] = c;
  for (const auto& [k, c] : ordered) {
    const Rational mag = abs(c);
    if (first)
      s += sgn(c) < 0 ? "-" : "";
    else
      s += sgn(c) < 0 ? " - " : " + ";
    first = false;
    if (mag != 1 || k.second.empty()) s += pbw::to_string(mag) + (k.second.empty() ? "" : " ");
    if (!k.second.empty()) s += k.second.to_string();
  }
  return s;
}

YPoly stuffle(const YWord& u, const YWord& v) {
  if (u.empty()) return YPoly(v);
  if (v.empty()) return YPoly(u);
  const YWord yi{u.indices().front()};
  const YWord yj{v.indices().front()};
  const YWord yij{u.indices().front() + v.indices().front()};
  YPoly out;
  for (const auto& [w, c] : stuffle(u.tail(), v)) out.add(yi * w, c);
  for (const auto& [w, c] : stuffle(u, v.tail())) out.add(yj * w, c);
  for (const auto& [w, c] : stuffle(u.tail(), v.tail())) out.add(yij * w, c);
  return out;
}

YPoly stuffle(const YPoly& p, const YPoly& q) {
  YPoly out;
  for (const auto& [u, cu] : p)
    for (const auto& [v, cv] : q) out.add_scaled(stuffle(u, v), cu * cv);
  return out;
}

YPoly conc(const YPoly& p, const YPoly& q) {
  YPoly out;
  for (const auto& [u, cu] : p)
    for (const auto& [v, cv] : q) out.add(u * v, cu * cv);
  return out;
}

std::vector<YWord> words_of_weight(unsigned n) {
  if (n == 0) return {YWord{}};
  std::vector<YWord> out;
  for (unsigned first = 1; first <= n; ++first)
    for (const auto& rest : words_of_weight(n - first)) out.push_back(YWord{first} * rest);
  return out;
}

YTensor stuffle_coproduct(const YWord& w) {
  using Key = std::pair<YWord, YWord>;
  YTensor acc(Key{YWord{}, YWord{}});
  for (unsigned s : w.indices()) {
    YTensor letter;
    letter.add(Key{YWord{s}, YWord{}}, 1);
    letter.add(Key{YWord{}, YWord{s}}, 1);
    for (unsigned s1 = 1; s1 < s; ++s1) letter.add(Key{YWord{s1}, YWord{s - s1}}, 1);
    YTensor next;
    for (const auto& [a, ca] : acc)
      for (const auto& [b, cb] : letter) next.add(Key{a.first * b.first, a.second * b.second}, ca * cb);
    acc = std::move(next);
  }
  return acc;
}

YTensor stuffle_coproduct(const YPoly& p) {
  YTensor out;
  for (const auto& [w, c] : p) out.add_scaled(stuffle_coproduct(w), c);
  return out;
}

YPoly stuffle_from_coproduct(const YWord& u, const YWord& v) {
  YPoly out;
  const std::pair<YWord, YWord> key{u, v};
  for (const auto& w : words_of_weight(u.weight() + v.weight())) out.add(w, stuffle_coproduct(w).coeff(key));
  return out;
}

Report check_stuffle_duality(unsigned n) {
  Report report;
  report.suite = "stuffle-duality";
  report.parameters = {{"max_weight", n}};
  for (unsigned total = 0; total <= n; ++total) {
    const auto ws = words_of_weight(total);
    for (unsigned wu = 0; wu <= total; ++wu) {
      for (const auto& u : words_of_weight(wu)) {
        for (const auto& v : words_of_weight(total - wu)) {
          const YPoly prod = stuffle(u, v);
          for (const auto& w : ws) {
            const Rational lhs = prod.coeff(w);
            const Rational rhs = stuffle_coproduct(w).coeff({u, v});
            report.check(lhs == rhs, "<" + u.to_string() + " * " + v.to_string() + ", " + w.to_string() + ">",
                         to_string(rhs), to_string(lhs));
          }
        }
      }
    }
  }
  return report;
}

namespace {

// (I - eta eps)^{*k}(w) with concatenation as the outer product.
class LogStar {
 public:
  const YPoly& power(unsigned k, const YWord& w) {
    auto key = std::make_pair(k, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    YPoly value;
    if (!w.empty()) {
      if (k == 1) {
        value = YPoly(w);
      } else {
        for (const auto& [split, c] : stuffle_coproduct(w)) {
          if (split.first.empty() || split.second.empty()) continue;
          value.add_scaled(conc(power(k - 1, split.first), YPoly(split.second)), c);
        }
      }
    }
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::map<std::pair<unsigned, YWord>, YPoly> memo_;
};

}  // namespace

YPoly log_star_identity(const YWord& w) {
  LogStar ls;
  YPoly out;
  for (unsigned k = 1; k <= w.weight(); ++k) {
    Rational coef(k % 2 == 1 ? 1 : -1, k);
    coef.canonicalize();
    out.add_scaled(ls.power(k, w), coef);
  }
  return out;
}

YPoly log_star_identity(const YPoly& p) {
  YPoly out;
  for (const auto& [w, c] : p) out.add_scaled(log_star_identity(w), c);
  return out;
}

bool check_primitive(const YPoly& p) {
  YTensor expected;
  for (const auto& [w, c] : p) {
    expected.add({w, YWord{}}, c);
    expected.add({YWord{}, w}, c);
  }
  return stuffle_coproduct(p) == expected;
}

std::vector<std::size_t> primitive_dimensions(unsigned n) {
  std::vector<std::size_t> dims;
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<YPoly> rows;
    for (const auto& w : words_of_weight(m)) rows.push_back(log_star_identity(w));
    dims.push_back(rank(std::move(rows)));
  }
  return dims;
}

Report verify_stuffle(unsigned max_weight) {
  Report report;
  report.suite = "stuffle-verify";
  report.parameters = {{"max_weight", max_weight}};

  nlohmann::json counts = nlohmann::json::array();
  for (unsigned n = 0; n <= max_weight; ++n) {
    const std::size_t count = words_of_weight(n).size();
    const std::size_t expected = n == 0 ? 1 : (std::size_t{1} << (n - 1));
    counts.push_back(count);
    report.check(count == expected, "word count at weight " + std::to_string(n), std::to_string(expected),
                 std::to_string(count));
  }
  report.extra["words_per_weight"] = counts;

  report.absorb(check_stuffle_duality(max_weight));

  std::vector<YWord> all;
  for (unsigned n = 0; n <= max_weight; ++n)
    for (const auto& w : words_of_weight(n)) all.push_back(w);

  for (const auto& u : all) {
    for (const auto& v : all) {
      if (u.weight() + v.weight() > max_weight) continue;
      report.check(stuffle(u, v) == stuffle(v, u), "commutativity " + u.to_string() + "," + v.to_string(), "equal",
                   "unequal");
      for (const auto& w : all) {
        if (u.weight() + v.weight() + w.weight() > max_weight) continue;
        report.check(stuffle(stuffle(YPoly(u), YPoly(v)), YPoly(w)) == stuffle(YPoly(u), stuffle(YPoly(v), YPoly(w))),
                     "associativity " + u.to_string() + "," + v.to_string() + "," + w.to_string(), "equal",
                     "unequal");
      }
    }
  }

  using Triple = std::tuple<YWord, YWord, YWord>;
  for (const auto& w : all) {
    const YTensor d = stuffle_coproduct(w);
    YTensor flipped;
    for (const auto& [k, c] : d) flipped.add({k.second, k.first}, c);
    report.check(flipped == d, "cocommutativity " + w.to_string(), "symmetric", "asymmetric");

    std::map<Triple, Rational> left, right;
    for (const auto& [k, c] : d) {
      for (const auto& [k2, c2] : stuffle_coproduct(k.first)) left[{k2.first, k2.second, k.second}] += c * c2;
      for (const auto& [k2, c2] : stuffle_coproduct(k.second)) right[{k.first, k2.first, k2.second}] += c * c2;
    }
    std::erase_if(left, [](const auto& e) { return is_zero(e.second); });
    std::erase_if(right, [](const auto& e) { return is_zero(e.second); });
    report.check(left == right, "coassociativity " + w.to_string(), "equal", "unequal");

    if (!w.empty()) {
      const YPoly p = log_star_identity(w);
      report.check(check_primitive(p), "log_*(I)(" + w.to_string() + ") primitive", "primitive", to_string(p));
    }
  }

  std::vector<std::size_t> dims = max_weight > 0 ? primitive_dimensions(max_weight) : std::vector<std::size_t>{};
  report.extra["primitive_dimensions"] = dims;
  return report;
}

}  // namespace pbw
