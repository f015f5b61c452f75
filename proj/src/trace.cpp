#include "pbw/trace.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "pbw/errors.hpp"
#include "pbw/factorization.hpp"
#include "pbw/linalg.hpp"

namespace pbw {

LyndonRule parse_lyndon_rule(const std::string& s) {
  if (s == "right-factor") return LyndonRule::right_factor;
  if (s == "conjugacy") return LyndonRule::conjugacy;
  throw std::invalid_argument("lyndon rule must be 'right-factor' or 'conjugacy': " + s);
}

std::string to_string(LyndonRule rule) { return rule == LyndonRule::right_factor ? "right-factor" : "conjugacy"; }

NormalForm parse_normal_form(const std::string& s) {
  if (s == "lex-min") return NormalForm::lex_min;
  if (s == "lex-max") return NormalForm::lex_max;
  throw std::invalid_argument("normal form must be 'lex-min' or 'lex-max': " + s);
}

LyndonDual parse_lyndon_dual(const std::string& s) {
  if (s == "recursion") return LyndonDual::recursion;
  if (s == "inversion") return LyndonDual::inversion;
  throw std::invalid_argument("lyndon dual must be 'recursion' or 'inversion': " + s);
}

std::string to_string(LyndonDual d) { return d == LyndonDual::recursion ? "recursion" : "inversion"; }

std::string to_string(NormalForm nf) { return nf == NormalForm::lex_min ? "lex-min" : "lex-max"; }

Independence::Independence(const std::vector<std::pair<Letter, Letter>>& pairs) {
  for (auto [x, y] : pairs) {
    if (x == y) throw std::invalid_argument("independence relation must be antireflexive");
    pairs_.emplace(std::min(x, y), std::max(x, y));
  }
}

Independence Independence::full(std::size_t alphabet_size) {
  std::vector<std::pair<Letter, Letter>> pairs;
  for (std::size_t x = 0; x < alphabet_size; ++x)
    for (std::size_t y = x + 1; y < alphabet_size; ++y)
      pairs.emplace_back(static_cast<Letter>(x), static_cast<Letter>(y));
  return Independence(pairs);
}

Independence Independence::parse(const Alphabet& alphabet, const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ';' || c == ' ') {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(cur);

  std::vector<std::pair<Letter, Letter>> pairs;
  std::vector<Letter> pending;
  for (const auto& tok : tokens) {
    if (tok.size() == 2) {
      if (!pending.empty()) throw std::invalid_argument("malformed theta: " + text);
      pairs.emplace_back(alphabet.index_of(tok[0]), alphabet.index_of(tok[1]));
    } else if (tok.size() == 1) {
      pending.push_back(alphabet.index_of(tok[0]));
      if (pending.size() == 2) {
        pairs.emplace_back(pending[0], pending[1]);
        pending.clear();
      }
    } else {
      throw std::invalid_argument("malformed theta: " + text);
    }
  }
  if (!pending.empty()) throw std::invalid_argument("malformed theta (odd number of letters): " + text);
  return Independence(pairs);
}

bool Independence::commute(Letter x, Letter y) const {
  if (x == y) return false;
  return pairs_.count({std::min(x, y), std::max(x, y)}) > 0;
}

std::string Independence::to_string(const Alphabet& alphabet) const {
  std::string s;
  for (auto [x, y] : pairs_) {
    if (!s.empty()) s += ",";
    s += alphabet.symbol(x);
    s += alphabet.symbol(y);
  }
  return s;
}

TraceMonoid::TraceMonoid(Alphabet alphabet, Independence theta, TraceOptions options)
    : alphabet_(std::move(alphabet)), theta_(std::move(theta)), options_(options) {
  if (alphabet_.size() > options_.max_alphabet)
    throw SizeCapExceeded("trace monoid: alphabet larger than the configured cap");
  for (auto [x, y] : theta_.pairs())
    if (y >= alphabet_.size()) throw std::invalid_argument("independence relation uses letters outside the alphabet");
}

void TraceMonoid::enforce_cap(std::size_t length) const {
  if (length > options_.max_length)
    throw SizeCapExceeded("trace monoid: length " + std::to_string(length) + " above the configured cap " +
                          std::to_string(options_.max_length));
}

Trace TraceMonoid::normal_form(const Word& w) const {
  const bool max = options_.normal_form == NormalForm::lex_max;
  std::vector<Letter> rest(w.begin(), w.end());
  std::vector<Letter> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    for (std::size_t p = 0; p < rest.size(); ++p) {
      bool available = true;
      for (std::size_t q = 0; q < p && available; ++q) available = theta_.commute(rest[q], rest[p]);
      if (!available) continue;
      if (best == rest.size() || (max ? rest[best] < rest[p] : rest[p] < rest[best])) best = p;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return Trace{Word(std::move(out))};
}

bool TraceMonoid::trace_equal(const Word& u, const Word& v) const { return normal_form(u) == normal_form(v); }

Trace TraceMonoid::concat(const Trace& u, const Trace& v) const { return normal_form(u.canonical * v.canonical); }

std::string TraceMonoid::format(const Trace& t) const {
  return t.canonical.empty() ? std::string("1") : alphabet_.format(t.canonical);
}

std::vector<Word> TraceMonoid::representatives(const Trace& t) const {
  enforce_cap(t.size());
  std::set<Word> seen{t.canonical};
  std::deque<Word> queue{t.canonical};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (!theta_.commute(w[i], w[i + 1])) continue;
      std::vector<Letter> s = w.letters();
      std::swap(s[i], s[i + 1]);
      Word next(std::move(s));
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::pair<Trace, Trace>> TraceMonoid::factorizations(const Trace& t) const {
  std::set<std::pair<Trace, Trace>> out;
  for (const auto& r : representatives(t))
    for (std::size_t i = 0; i <= r.size(); ++i) out.emplace(normal_form(r.sub(0, i)), normal_form(r.sub(i)));
  return {out.begin(), out.end()};
}

std::vector<Trace> TraceMonoid::conjugacy_class(const Trace& t) const {
  std::set<Trace> seen{t};
  std::deque<Trace> queue{t};
  while (!queue.empty()) {
    Trace cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& [u, v] : factorizations(cur)) {
      Trace next = concat(v, u);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

bool TraceMonoid::is_primitive(const Trace& t) const {
  const std::size_t n = t.size();
  if (n == 0) return false;
  const auto facts = factorizations(t);
  for (std::size_t k = 2; k <= n; ++k) {
    if (n % k != 0) continue;
    for (const auto& [u, v] : facts)
      if (u.size() == n / k && normal_form(power(u.canonical, static_cast<unsigned>(k))) == t) return false;
  }
  return true;
}

bool TraceMonoid::is_connected(const Trace& t) const {
  std::set<Letter> support(t.canonical.begin(), t.canonical.end());
  if (support.empty()) return false;
  std::set<Letter> reached{*support.begin()};
  std::deque<Letter> queue{*support.begin()};
  while (!queue.empty()) {
    Letter x = queue.front();
    queue.pop_front();
    for (Letter y : support)
      if (y != x && !theta_.commute(x, y) && reached.insert(y).second) queue.push_back(y);
  }
  return reached.size() == support.size();
}

std::set<Letter> TraceMonoid::initial_letters(const Trace& t) const {
  std::set<Letter> out;
  for (const auto& w : representatives(t)) out.insert(w.front());
  return out;
}

bool TraceMonoid::is_pc_lyndon(const Trace& t) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = lyndon_memo_.find(t); it != lyndon_memo_.end()) return it->second;
  }
  bool result = false;
  if (t.size() > 0 && options_.rule == LyndonRule::right_factor) {
    result = initial_letters(t).size() == 1;
    for (const auto& [u, v] : factorizations(t))
      if (result && u.size() > 0 && v.size() > 0 && !(t < v)) result = false;
  } else if (t.size() > 0 && (!options_.connectedness || is_connected(t)) && is_primitive(t)) {
    result = conjugacy_class(t).front() == t;
  }
  std::lock_guard lock(mutex_);
  lyndon_memo_.emplace(t, result);
  return result;
}

std::vector<Trace> TraceMonoid::traces_up_to(std::size_t n) const {
  enforce_cap(n);
  std::set<Trace> out;
  for (const auto& w : alphabet_.words_up_to(n)) out.insert(normal_form(w));
  return {out.begin(), out.end()};
}

std::vector<Trace> TraceMonoid::pc_lyndon_up_to(std::size_t n) const {
  std::vector<Trace> out;
  for (const auto& t : traces_up_to(n))
    if (is_pc_lyndon(t)) out.push_back(t);
  return out;
}

std::pair<Trace, Trace> TraceMonoid::pc_std_factorization(const Trace& w) const {
  if (w.size() < 2) throw std::invalid_argument("pc_std_factorization: length must be >= 2");
  std::optional<std::pair<Trace, Trace>> best;
  for (const auto& [f, n] : factorizations(w)) {
    if (f.size() == 0 || n.size() == 0 || !is_pc_lyndon(n)) continue;
    if (!best || n < best->second) best = std::make_pair(f, n);
  }
  if (!best) throw std::logic_error("pc_std_factorization: no Lyndon right factor");
  return *best;
}

void TraceMonoid::collect_factorizations(const Trace& t, const std::optional<Trace>& bound,
                                         std::vector<Trace>& prefix, std::vector<std::vector<Trace>>& out) const {
  if (t.size() == 0) {
    out.push_back(prefix);
    return;
  }
  for (const auto& [l, rest] : factorizations(t)) {
    if (l.size() == 0 || (bound && *bound < l) || !is_pc_lyndon(l)) continue;
    prefix.push_back(l);
    collect_factorizations(rest, l, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<Trace>> TraceMonoid::nonincreasing_factorizations(const Trace& t) const {
  std::vector<std::vector<Trace>> out;
  std::vector<Trace> prefix;
  collect_factorizations(t, std::nullopt, prefix, out);
  return out;
}

TensorPoly TraceMonoid::coproduct(const Trace& t) const {
  const Word& w = t.canonical;
  if (w.size() > 20) throw SizeCapExceeded("trace coproduct: word too long");
  TensorPoly out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << w.size()); ++mask) {
    Word left, right;
    for (std::size_t i = 0; i < w.size(); ++i) ((mask >> i) & 1 ? left : right).push_back(w[i]);
    out.add(WordPair{normal_form(left).canonical, normal_form(right).canonical}, Rational(1));
  }
  return out;
}

WordComb TraceMonoid::compute_shuffle(const Word& u, const Word& v) const {
  const Trace tu = normal_form(u), tv = normal_form(v);
  std::set<Trace> candidates;
  for (const auto& ru : representatives(tu))
    for (const auto& rv : representatives(tv))
      for (const auto& [w, c] : shuffle_words(ru, rv)) candidates.insert(normal_form(w));
  WordComb out;
  const WordPair key{tu.canonical, tv.canonical};
  for (const auto& t : candidates) out.add(t.canonical, coproduct(t).coeff(key));
  return out;
}

WordComb TraceMonoid::pc_shuffle(const Word& u, const Word& v) const {
  const auto key = std::make_pair(u, v);
  {
    std::lock_guard lock(mutex_);
    if (auto it = shuffle_memo_.find(key); it != shuffle_memo_.end()) return it->second;
  }
  WordComb value = compute_shuffle(u, v);
  std::lock_guard lock(mutex_);
  return shuffle_memo_.try_emplace(key, std::move(value)).first->second;
}

WordComb TraceMonoid::trace_conc(const WordComb& a, const WordComb& b) const {
  WordComb out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) out.add(normal_form(u * v).canonical, cu * cv);
  return out;
}

WordComb TraceMonoid::compute_P(const Trace& t) const {
  if (t.size() <= 1) return WordComb(t.canonical);
  if (is_pc_lyndon(t)) {
    auto [f, n] = pc_std_factorization(t);
    const WordComb& pf = pc_pbw_P(f);
    const WordComb& pn = pc_pbw_P(n);
    return trace_conc(pf, pn) - trace_conc(pn, pf);
  }
  const auto facts = nonincreasing_factorizations(t);
  if (facts.size() != 1)
    throw std::logic_error("trace " + format(t) + " has " + std::to_string(facts.size()) +
                           " nonincreasing Lyndon factorizations");
  WordComb acc(Word{});
  for (const auto& l : facts.front()) acc = trace_conc(acc, pc_pbw_P(l));
  return acc;
}

WordComb TraceMonoid::dual_by_inversion(const Trace& t) const {
  std::vector<Letter> letters = t.canonical.letters();
  std::sort(letters.begin(), letters.end());
  std::set<Trace> cls;
  do {
    cls.insert(normal_form(Word(letters)));
  } while (std::next_permutation(letters.begin(), letters.end()));
  const std::vector<Trace> basis(cls.begin(), cls.end());
  Matrix m(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t v = 0; v < basis.size(); ++v)
    for (std::size_t w = 0; w < basis.size(); ++w) m[v][w] = pc_pbw_P(basis[v]).coeff(basis[w].canonical);
  const auto inv = invert(std::move(m));
  if (!inv) throw std::logic_error("P family is not a basis on the class of " + format(t));
  const std::size_t col = static_cast<std::size_t>(std::find(basis.begin(), basis.end(), t) - basis.begin());
  WordComb out;
  for (std::size_t w = 0; w < basis.size(); ++w) out.add(basis[w].canonical, (*inv)[w][col]);
  return out;
}

WordComb TraceMonoid::compute_S(const Trace& t) const {
  if (t.size() <= 1) return WordComb(t.canonical);
  if (is_pc_lyndon(t) && options_.dual == LyndonDual::inversion) return dual_by_inversion(t);
  if (is_pc_lyndon(t)) {
    const Trace rest = normal_form(t.canonical.sub(1));
    return trace_conc(WordComb(Word{t.canonical.front()}), pc_dual_S(rest));
  }
  const auto facts = nonincreasing_factorizations(t);
  if (facts.size() != 1)
    throw std::logic_error("trace " + format(t) + " has " + std::to_string(facts.size()) +
                           " nonincreasing Lyndon factorizations");
  WordComb acc(Word{});
  Rational denom = 1;
  const auto& ls = facts.front();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const WordComb& s = pc_dual_S(ls[i]);
    for (std::size_t k = i; k < j; ++k) {
      WordComb next;
      for (const auto& [a, ca] : acc)
        for (const auto& [b, cb] : s) next.add_scaled(pc_shuffle(a, b), ca * cb);
      acc = std::move(next);
    }
    denom *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return acc * (Rational(1) / denom);
}

const WordComb& TraceMonoid::pc_pbw_P(const Trace& t) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = p_memo_.find(t); it != p_memo_.end()) return it->second;
  }
  WordComb value = compute_P(t);
  std::lock_guard lock(mutex_);
  return p_memo_.try_emplace(t, std::move(value)).first->second;
}

const WordComb& TraceMonoid::pc_dual_S(const Trace& t) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = s_memo_.find(t); it != s_memo_.end()) return it->second;
  }
  WordComb value = compute_S(t);
  std::lock_guard lock(mutex_);
  return s_memo_.try_emplace(t, std::move(value)).first->second;
}

TracePoly TraceMonoid::to_trace_poly(const WordComb& p) const {
  TracePoly out;
  for (const auto& [w, c] : p) out.add(normal_form(w), c);
  return out;
}

bool TraceMonoid::check_triangular(const Trace& t) const {
  const WordComb& p = pc_pbw_P(t);
  if (p.coeff(t.canonical) != 1) return false;
  for (const auto& [u, c] : p)
    if (u < t.canonical) return false;
  return true;
}

Report TraceMonoid::check_duality(std::size_t n) const {
  Report report;
  report.suite = "trace-duality";
  report.parameters = {{"alphabet", alphabet_.letters()}, {"theta", theta_.to_string(alphabet_)}, {"max_len", n}};
  const auto traces = traces_up_to(n);
  for (const auto& u : traces) {
    const WordComb& s = pc_dual_S(u);
    for (const auto& v : traces) {
      const Rational value = scalar_product(s, pc_pbw_P(v));
      const Rational expected = u == v ? 1 : 0;
      report.check(value == expected, "<S_" + format(u) + ", P_" + format(v) + ">", to_string(expected),
                   to_string(value));
    }
  }
  for (const auto& t : traces)
    report.check(check_triangular(t), "triangularity of P_" + format(t), "t + greater traces", "violated");
  return report;
}

TensorPoly TraceMonoid::diagonal_series(std::size_t n) const {
  TensorPoly out;
  for (const auto& t : traces_up_to(n)) out.add(WordPair{t.canonical, t.canonical}, Rational(1));
  return out;
}

TensorPoly TraceMonoid::schuetzenberger_product(std::size_t n, bool decreasing) const {
  auto lyn = pc_lyndon_up_to(n);
  if (decreasing) std::reverse(lyn.begin(), lyn.end());
  auto left = [this](const Word& u, const Word& v) { return pc_shuffle(u, v); };
  auto right = [this](const Word& u, const Word& v) { return WordComb(normal_form(u * v).canonical); };
  TensorPoly acc(WordPair{Word{}, Word{}});
  for (const auto& l : lyn) {
    TensorPoly generator;
    for (const auto& [s, cs] : pc_dual_S(l))
      for (const auto& [p, cp] : pc_pbw_P(l)) generator.add(WordPair{s, p}, cs * cp);
    acc = tensor_mul_with(acc, truncated_exp_with(generator, TruncationDegree{n}, left, right), left, right, n);
  }
  return acc;
}

Report TraceMonoid::verify_sf_trace(std::size_t n, bool decreasing) const {
  const TensorPoly lhs = diagonal_series(n);
  const TensorPoly rhs = schuetzenberger_product(n, decreasing);
  Report report = compare_tensors("trace-verify", lhs, rhs,
                                  [&](const WordPair& k) { return format_tensor_key(alphabet_, k); });
  const std::size_t lyndon_count = pc_lyndon_up_to(n).size();
  report.parameters = {{"alphabet", alphabet_.letters()},
                       {"theta", theta_.to_string(alphabet_)},
                       {"degree", n},
                       {"normal_form", to_string(options_.normal_form)},
                       {"lyndon_rule", to_string(options_.rule)},
                       {"lyndon_dual", to_string(options_.dual)},
                       {"connectedness", options_.connectedness},
                       {"product_order", decreasing ? "decreasing" : "increasing"}};
  report.extra["degree"] = n;
  report.extra["theta"] = theta_.to_string(alphabet_);
  report.extra["lyndon_count"] = lyndon_count;
  report.extra["pc_lyndon_count"] = lyndon_count;
  return report;
}

}  // namespace pbw
