#include "pbw/enveloping.hpp"

#include <fstream>
#include <set>

#include "pbw/errors.hpp"
#include "pbw/linalg.hpp"

namespace pbw {

namespace {

using Coeffs = LinComb<std::size_t>;

Coeffs bracket_of(const LieAlgebra& g, const Coeffs& a, const Coeffs& b) {
  Coeffs out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) out.add_scaled(g.bracket(i, j), ci * cj);
  return out;
}

std::string coeffs_to_string(const Coeffs& c, const std::vector<std::string>& names) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : c) {
    if (!s.empty()) s += " + ";
    s += to_string(v) + "*" + names.at(k);
  }
  return s;
}

std::string element_to_string(const UElement& u, const std::vector<std::string>& names) {
  if (u.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : u) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*B[" + a.to_string(names) + "]";
  }
  return s;
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> names, const std::vector<Bracket>& brackets)
    : names_(std::move(names)), table_(names_.size() * names_.size()) {
  const std::size_t n = names_.size();
  std::set<std::string> distinct(names_.begin(), names_.end());
  if (distinct.size() != n) throw LieConfigError("duplicate basis names");
  std::set<std::pair<std::size_t, std::size_t>> listed;
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n) throw LieConfigError("bracket index out of range");
    for (const auto& [k, c] : b.value)
      if (k >= n) throw LieConfigError("bracket coefficient index out of range");
    if (!listed.emplace(b.i, b.j).second) throw LieConfigError("bracket listed twice");
    if (b.i == b.j && !b.value.empty())
      throw LieConfigError("antisymmetry violation: [" + names_[b.i] + "," + names_[b.i] + "] != 0");
  }
  for (const auto& b : brackets) {
    table_[b.i * n + b.j] = b.value;
    if (!listed.count({b.j, b.i})) table_[b.j * n + b.i] = -b.value;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(table_[i * n + j] == -table_[j * n + i]))
        throw LieConfigError("antisymmetry violation: [" + names_[i] + "," + names_[j] + "] = " +
                             coeffs_to_string(table_[i * n + j], names_) + " but [" + names_[j] + "," + names_[i] +
                             "] = " + coeffs_to_string(table_[j * n + i], names_));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Coeffs bi(i), bj(j), bk(k);
        Coeffs jac = bracket_of(*this, bi, bracket_of(*this, bj, bk));
        jac += bracket_of(*this, bj, bracket_of(*this, bk, bi));
        jac += bracket_of(*this, bk, bracket_of(*this, bi, bj));
        if (!jac.empty())
          throw LieConfigError("Jacobi violation at (" + names_[i] + "," + names_[j] + "," + names_[k] +
                               "): " + coeffs_to_string(jac, names_));
      }
}

LieAlgebra load_lie_algebra(const nlohmann::json& config) {
  try {
    const auto dim = config.at("dim").get<std::size_t>();
    std::vector<std::string> names;
    if (config.contains("names")) {
      names = config.at("names").get<std::vector<std::string>>();
    } else {
      for (std::size_t i = 0; i < dim; ++i) names.push_back("b" + std::to_string(i));
    }
    if (names.size() != dim) throw LieConfigError("names does not match dim");
    auto index_of = [&](const std::string& key) -> std::size_t {
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == key) return i;
      std::size_t pos = 0;
      const auto v = std::stoul(key, &pos);
      if (pos != key.size()) throw LieConfigError("bad coefficient key: " + key);
      return v;
    };
    std::vector<LieAlgebra::Bracket> brackets;
    if (config.contains("brackets")) {
      for (const auto& b : config.at("brackets")) {
        LieAlgebra::Bracket br{b.at("i").get<std::size_t>(), b.at("j").get<std::size_t>(), {}};
        for (const auto& [k, v] : b.at("coeffs").items()) {
          const Rational c = v.is_string() ? parse_rational(v.get<std::string>())
                                           : Rational(static_cast<long>(v.get<long long>()));
          br.value.add(index_of(k), c);
        }
        brackets.push_back(std::move(br));
      }
    }
    return LieAlgebra(std::move(names), brackets);
  } catch (const LieConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw LieConfigError(std::string("malformed Lie algebra config: ") + e.what());
  }
}

LieAlgebra load_lie_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LieConfigError("cannot open config: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw LieConfigError("malformed JSON in " + path + ": " + e.what());
  }
  return load_lie_algebra(j);
}

nlohmann::json to_json(const LieAlgebra& g) {
  nlohmann::json j = {{"dim", g.dim()}, {"names", g.names()}, {"brackets", nlohmann::json::array()}};
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t jj = i + 1; jj < g.dim(); ++jj) {
      const auto& b = g.bracket(i, jj);
      if (b.empty()) continue;
      nlohmann::json coeffs = nlohmann::json::object();
      for (const auto& [k, c] : b) coeffs[std::to_string(k)] = to_string(c);
      j["brackets"].push_back({{"i", i}, {"j", jj}, {"coeffs", coeffs}});
    }
  return j;
}

Enveloping::Enveloping(LieAlgebra g) : g_(std::move(g)) {}

UElement Enveloping::straighten(const std::vector<std::size_t>& word, const PairChooser* choose) const {
  std::vector<std::size_t> candidates;
  for (std::size_t p = 0; p + 1 < word.size(); ++p)
    if (word[p] < word[p + 1]) candidates.push_back(p);
  if (candidates.empty()) return UElement(MultiIndex::from_sequence(word));

  const std::size_t p = choose ? candidates.at((*choose)(candidates)) : candidates.front();
  auto recurse = [&](const std::vector<std::size_t>& w) {
    return choose ? straighten(w, choose) : normal_order(w);
  };
  std::vector<std::size_t> swapped = word;
  std::swap(swapped[p], swapped[p + 1]);
  UElement out = recurse(swapped);
  for (const auto& [k, c] : g_.bracket(word[p], word[p + 1])) {
    std::vector<std::size_t> shorter(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p));
    shorter.push_back(k);
    shorter.insert(shorter.end(), word.begin() + static_cast<std::ptrdiff_t>(p + 2), word.end());
    out.add_scaled(recurse(shorter), c);
  }
  return out;
}

UElement Enveloping::normal_order(const std::vector<std::size_t>& word) const {
  for (auto i : word)
    if (i >= dim()) throw std::out_of_range("normal_order: generator index out of range");
  {
    std::lock_guard lock(mutex_);
    if (auto it = order_memo_.find(word); it != order_memo_.end()) return it->second;
  }
  UElement value = straighten(word, nullptr);
  std::lock_guard lock(mutex_);
  return order_memo_.try_emplace(word, std::move(value)).first->second;
}

UElement Enveloping::normal_order_with(const std::vector<std::size_t>& word, const PairChooser& choose) const {
  for (auto i : word)
    if (i >= dim()) throw std::out_of_range("normal_order: generator index out of range");
  return straighten(word, &choose);
}

UElement Enveloping::u_mul(const UElement& u, const UElement& v) const {
  UElement out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) {
      auto word = a.materialize();
      auto tail = b.materialize();
      word.insert(word.end(), tail.begin(), tail.end());
      out.add_scaled(normal_order(word), ca * cb);
    }
  return out;
}

UTensor Enveloping::u_coproduct(const UElement& u) const {
  UTensor out;
  for (const auto& [gamma, c] : u) {
    const Rational gf = gamma.factorial();
    for (const auto& g1 : sub_multiindices(gamma)) {
      const MultiIndex g2 = gamma - g1;
      out.add({g1, g2}, c * gf / (g1.factorial() * g2.factorial()));
    }
  }
  return out;
}

UTensor Enveloping::tensor_mul(const UTensor& s, const UTensor& t) const {
  UTensor out;
  for (const auto& [ks, cs] : s)
    for (const auto& [kt, ct] : t) {
      const UElement l = u_mul(UElement(ks.first), UElement(kt.first));
      const UElement r = u_mul(UElement(ks.second), UElement(kt.second));
      for (const auto& [a, ca] : l)
        for (const auto& [b, cb] : r) out.add({a, b}, cs * ct * ca * cb);
    }
  return out;
}

UTensor Enveloping::u_coproduct_multiplicative(const UElement& u) const {
  UTensor out;
  for (const auto& [gamma, c] : u) {
    UTensor acc({MultiIndex{}, MultiIndex{}});
    for (auto i : gamma.materialize()) {
      UTensor letter;
      letter.add({MultiIndex::unit(i), MultiIndex{}}, 1);
      letter.add({MultiIndex{}, MultiIndex::unit(i)}, 1);
      acc = tensor_mul(acc, letter);
    }
    out.add_scaled(acc, c);
  }
  return out;
}

Rational Enveloping::convolution(const DualForm& f, const DualForm& g, const UElement& u) const {
  Rational s = 0;
  for (const auto& [k, c] : u_coproduct(u)) {
    const Rational fa = f.coeff(k.first);
    if (is_zero(fa)) continue;
    s += c * fa * g.coeff(k.second);
  }
  return s;
}

DualForm Enveloping::convolve_forms(const DualForm& f, const DualForm& g, unsigned max_degree) const {
  DualForm out;
  for (const auto& gamma : multiindices_up_to(dim(), max_degree)) out.add(gamma, convolution(f, g, monomial(gamma)));
  return out;
}

Report Enveloping::verify_radford_multiplicativity(unsigned max_degree) const {
  Report report;
  report.suite = "lie-radford";
  report.parameters = {{"dim", dim()}, {"names", g_.names()}, {"degree", max_degree}};
  const auto all = multiindices_up_to(dim(), max_degree);
  const auto& names = g_.names();

  for (const auto& gamma : all)
    report.check(u_coproduct(monomial(gamma)) == u_coproduct_multiplicative(monomial(gamma)),
                 "coproduct routes agree on B[" + gamma.to_string(names) + "]", "equal", "unequal");

  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.degree() + b.degree() > max_degree) continue;
      const MultiIndex sum = a + b;
      const Rational ratio = multinomial_ratio(a, b);
      for (const auto& gamma : all) {
        const Rational value = convolution(DualForm(a), DualForm(b), monomial(gamma));
        const Rational expected = gamma == sum ? ratio : Rational(0);
        report.check(value == expected,
                     "(S[" + a.to_string(names) + "] * S[" + b.to_string(names) + "])(B[" + gamma.to_string(names) +
                         "])",
                     to_string(expected), to_string(value));
        // T_a * T_b = T_{a+b}
        const Rational t_value = value * a.factorial() * b.factorial();
        const Rational t_expected = gamma == sum ? sum.factorial() : Rational(0);
        report.check(t_value == t_expected,
                     "(T[" + a.to_string(names) + "] * T[" + b.to_string(names) + "])(B[" + gamma.to_string(names) +
                         "])",
                     to_string(t_expected), to_string(t_value));
      }
    }
  return report;
}

UTensor Enveloping::theorem1_lhs(unsigned max_degree) const {
  UTensor out;
  for (const auto& a : multiindices_up_to(dim(), max_degree)) out.add({a, a}, 1);
  return out;
}

UTensor Enveloping::theorem1_rhs(unsigned max_degree, ProductOrder order) const {
  std::map<std::pair<MultiIndex, MultiIndex>, DualForm> conv_memo;
  // Left leg: convolution of forms; right leg: product in U(g). Terms whose
  // form leg has degree above max_degree are dropped.
  auto mul = [&](const UTensor& s, const UTensor& t) {
    UTensor out;
    for (const auto& [ks, cs] : s)
      for (const auto& [kt, ct] : t) {
        auto key = std::make_pair(ks.first, kt.first);
        auto it = conv_memo.find(key);
        if (it == conv_memo.end())
          it = conv_memo.emplace(key, convolve_forms(DualForm(ks.first), DualForm(kt.first), max_degree)).first;
        const DualForm& left = it->second;
        if (left.empty()) continue;
        const UElement right = u_mul(UElement(ks.second), UElement(kt.second));
        for (const auto& [a, ca] : left)
          for (const auto& [b, cb] : right) out.add({a, b}, cs * ct * ca * cb);
      }
    return out;
  };

  std::vector<std::size_t> indices(dim());
  for (std::size_t i = 0; i < dim(); ++i) indices[i] = order == ProductOrder::decreasing ? dim() - 1 - i : i;

  UTensor acc({MultiIndex{}, MultiIndex{}});
  for (auto i : indices) {
    const UTensor x({MultiIndex::unit(i), MultiIndex::unit(i)});
    UTensor exp({MultiIndex{}, MultiIndex{}});
    UTensor power = exp;
    for (unsigned k = 1; k <= max_degree; ++k) {
      power = mul(power, x) * (Rational(1) / Rational(k));
      exp += power;
    }
    acc = mul(acc, exp);
  }
  return acc;
}

UElement Enveloping::apply_phi(const UTensor& t, const MultiIndex& beta) {
  UElement out;
  for (const auto& [k, c] : t)
    if (k.first == beta) out.add(k.second, c);
  return out;
}

Report Enveloping::verify_theorem1(unsigned max_degree, ProductOrder order) const {
  const auto& names = g_.names();
  const UTensor lhs = theorem1_lhs(max_degree);
  const UTensor rhs = theorem1_rhs(max_degree, order);

  Report report;
  report.suite = "lie-theorem1";
  report.parameters = {
      {"dim", dim()}, {"names", names}, {"degree", max_degree}, {"product_order", to_string(order)}};

  std::set<std::pair<MultiIndex, MultiIndex>> keys;
  for (const auto& [k, c] : lhs) keys.insert(k);
  for (const auto& [k, c] : rhs) keys.insert(k);
  bool tensor_equal = true;
  for (const auto& k : keys) {
    const Rational l = lhs.coeff(k), r = rhs.coeff(k);
    tensor_equal = tensor_equal && l == r;
    report.check(l == r, "S[" + k.first.to_string(names) + "]⊗B[" + k.second.to_string(names) + "]", to_string(l),
                 to_string(r));
  }

  bool phi_identity = true;
  for (const auto& beta : multiindices_up_to(dim(), max_degree)) {
    const UElement expected = monomial(beta);
    const UElement from_rhs = apply_phi(rhs, beta);
    const UElement from_lhs = apply_phi(lhs, beta);
    phi_identity = phi_identity && from_rhs == expected;
    report.check(from_rhs == expected, "Phi(product)(B[" + beta.to_string(names) + "])",
                 element_to_string(expected, names), element_to_string(from_rhs, names));
    report.check(from_lhs == expected, "Phi(sum)(B[" + beta.to_string(names) + "])",
                 element_to_string(expected, names), element_to_string(from_lhs, names));
  }
  report.extra["tensor_equal"] = tensor_equal;
  report.extra["phi_identity"] = phi_identity;
  report.extra["terms_lhs"] = lhs.size();
  report.extra["terms_rhs"] = rhs.size();
  return report;
}

void Enveloping::validate_family(const RadfordFamily& family) const {
  const auto all = multiindices_up_to(dim(), family.max_degree);
  const auto& names = g_.names();
  for (const auto& a : all)
    if (!family.forms.count(a) || !family.basis.count(a))
      throw FamilyValidationError("family is missing index " + a.to_string(names));
  for (const auto& a : all)
    for (const auto& b : all) {
      const Rational value = evaluate(family.forms.at(a), family.basis.at(b));
      const Rational expected = a == b ? a.factorial() : Rational(0);
      if (value != expected)
        throw FamilyValidationError("duality fails: <T[" + a.to_string(names) + "], B[" + b.to_string(names) +
                                    "]> = " + to_string(value));
    }
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.degree() + b.degree() > family.max_degree) continue;
      const DualForm prod = convolve_forms(family.forms.at(a), family.forms.at(b), family.max_degree);
      if (!(prod == family.forms.at(a + b)))
        throw FamilyValidationError("multiplicativity fails: T[" + a.to_string(names) + "] * T[" +
                                    b.to_string(names) + "] != T[" + (a + b).to_string(names) + "]");
    }
}

Report Enveloping::radford_to_pbw_experiment(const RadfordFamily& family) const {
  validate_family(family);
  const auto& names = g_.names();
  Report report;
  report.suite = "lie-theorem2";
  report.parameters = {{"dim", dim()}, {"names", names}, {"degree", family.max_degree}};

  bool primitive = true;
  std::vector<UElement> generators;
  for (std::size_t i = 0; i < dim(); ++i) {
    const UElement& x = family.basis.at(MultiIndex::unit(i));
    generators.push_back(x);
    UTensor expected;
    for (const auto& [a, c] : x) {
      expected.add({a, MultiIndex{}}, c);
      expected.add({MultiIndex{}, a}, c);
    }
    const bool ok = u_coproduct(x) == expected;
    primitive = primitive && ok;
    report.check(ok, "(a) B^[e_" + names[i] + "] primitive", "primitive", element_to_string(x, names));
  }

  const std::size_t r = rank(generators);
  report.check(r == dim(), "(b) B^[e_i] linearly independent", std::to_string(dim()), std::to_string(r));

  nlohmann::json comparisons = nlohmann::json::array();
  nlohmann::json unequal = nlohmann::json::array();
  for (const auto& alpha : multiindices_up_to(dim(), family.max_degree)) {
    UElement product(MultiIndex{});
    for (auto i : alpha.materialize()) product = u_mul(product, generators[i]);
    const UElement& target = family.basis.at(alpha);
    const bool equal = product == target;
    comparisons.push_back({{"alpha", alpha.to_string(names)}, {"equal", equal}});
    if (!equal) unequal.push_back(alpha.to_string(names));
    report.check(equal, "(c) ordered product for " + alpha.to_string(names), element_to_string(target, names),
                 element_to_string(product, names));
  }
  report.extra["primitive_generators"] = primitive;
  report.extra["independent"] = r == dim();
  report.extra["comparisons"] = comparisons;
  report.extra["unequal"] = unequal;
  return report;
}

RadfordFamily family_from_generators(const Enveloping& u, const std::vector<DualForm>& generator_forms,
                                     unsigned max_degree) {
  if (generator_forms.size() != u.dim()) throw std::invalid_argument("one generator form per basis element");
  RadfordFamily family;
  family.max_degree = max_degree;
  const auto all = multiindices_up_to(u.dim(), max_degree);
  for (const auto& alpha : all) {
    if (alpha.empty()) {
      family.forms[alpha] = DualForm(MultiIndex{});
      continue;
    }
    // all is ordered by degree, so alpha - e_top is already present.
    const std::size_t top = alpha.max_index();
    const MultiIndex rest = alpha - MultiIndex::unit(top);
    family.forms[alpha] = u.convolve_forms(family.forms.at(rest), generator_forms[top], max_degree);
  }

  const std::size_t n = all.size();
  Matrix a(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const Rational inv = Rational(1) / all[r].factorial();
    for (std::size_t c = 0; c < n; ++c) a[r][c] = family.forms[all[r]].coeff(all[c]) * inv;
  }
  const auto inverse = invert(a);
  if (!inverse) throw FamilyValidationError("generator forms do not determine a basis (singular duality matrix)");
  for (std::size_t b = 0; b < n; ++b) {
    UElement e;
    for (std::size_t g = 0; g < n; ++g) e.add(all[g], (*inverse)[g][b]);
    family.basis[all[b]] = std::move(e);
  }
  return family;
}

RadfordFamily pbw_family(const Enveloping& u, unsigned max_degree) {
  std::vector<DualForm> gens;
  for (std::size_t i = 0; i < u.dim(); ++i) gens.emplace_back(MultiIndex::unit(i));
  return family_from_generators(u, gens, max_degree);
}

RadfordFamily perturbed_family(const Enveloping& u, unsigned max_degree, std::size_t i, std::size_t j) {
  if (i == j || i >= u.dim() || j >= u.dim()) throw std::invalid_argument("perturbed_family: need distinct valid i, j");
  std::vector<DualForm> gens;
  for (std::size_t k = 0; k < u.dim(); ++k) gens.emplace_back(MultiIndex::unit(k));
  gens[j].add(MultiIndex::unit(i, 2), Rational(-1));
  return family_from_generators(u, gens, max_degree);
}

}  // namespace pbw
