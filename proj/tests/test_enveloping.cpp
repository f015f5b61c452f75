#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pbw/enveloping.hpp"
#include "pbw/errors.hpp"
#include "support.hpp"

using namespace pbw;

namespace {

using Mat = std::vector<std::vector<Rational>>;

LieAlgebra config(const std::string& name) { return load_lie_algebra_file(std::string(PBW_CONFIG_DIR) + "/" + name); }

Mat identity(std::size_t n) {
  Mat m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

void mat_add_scaled(Mat& a, const Mat& b, const Rational& s) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += s * b[i][j];
}

// Image of a PBW-coordinate element under the representation given on
// generators; B^alpha is the product with the largest index leftmost.
Mat represent(const UElement& u, const std::vector<Mat>& gens) {
  const std::size_t n = gens.at(0).size();
  Mat out(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& [alpha, c] : u) {
    Mat m = identity(n);
    for (auto i : alpha.materialize()) m = mat_mul(m, gens[i]);
    mat_add_scaled(out, m, c);
  }
  return out;
}

Mat represent_word(const std::vector<std::size_t>& w, const std::vector<Mat>& gens) {
  Mat m = identity(gens.at(0).size());
  for (auto i : w) m = mat_mul(m, gens[i]);
  return m;
}

// ad(b_i)(b_j) = [b_i, b_j], column j holds the coordinates.
std::vector<Mat> adjoint(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Mat> out;
  for (std::size_t i = 0; i < n; ++i) {
    Mat m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : g.bracket(i, j)) m[k][j] = c;
    out.push_back(m);
  }
  return out;
}

std::vector<Mat> sl2_defining() {
  const Rational o(0), l(1), m(-1);
  return {{{o, l}, {o, o}}, {{l, o}, {o, m}}, {{o, o}, {l, o}}};
}

std::vector<std::size_t> random_generator_word(std::size_t dim, std::size_t len) {
  std::uniform_int_distribution<std::size_t> d(0, dim - 1);
  std::vector<std::size_t> w(len);
  for (auto& x : w) x = d(test::rng());
  return w;
}

UElement random_element(const Enveloping& u, std::size_t max_len) {
  UElement out;
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 2; ++t) out.add_scaled(u.normal_order(random_generator_word(u.dim(), len(test::rng()))),
                                             Rational(coef(test::rng())));
  return out;
}

LieAlgebra::Bracket br(std::size_t i, std::size_t j, std::map<std::size_t, long> coeffs) {
  LieAlgebra::Bracket b{i, j, {}};
  for (const auto& [k, c] : coeffs) b.value.add(k, Rational(c));
  return b;
}

}  // namespace

TEST_CASE("Lie algebra validation") {
  CHECK_NOTHROW(LieAlgebra({"a", "b", "c"}, {}));
  CHECK_THROWS_AS(LieAlgebra({"x", "y"}, {br(0, 1, {{0, 1}}), br(1, 0, {{0, 1}})}), LieConfigError);
  try {
    LieAlgebra({"x", "y"}, {br(0, 1, {{0, 1}}), br(1, 0, {{0, 1}})});
  } catch (const LieConfigError& e) {
    CHECK(std::string(e.what()).find("antisymmetry") != std::string::npos);
  }
  CHECK_THROWS_AS(LieAlgebra({"x"}, {br(0, 0, {{0, 1}})}), LieConfigError);
  CHECK_THROWS_AS(LieAlgebra({"x", "x"}, {}), LieConfigError);
  CHECK_THROWS_AS(LieAlgebra({"x", "y"}, {br(0, 2, {{0, 1}})}), LieConfigError);
  CHECK_THROWS_AS(LieAlgebra({"x", "y"}, {br(0, 1, {{5, 1}})}), LieConfigError);
  CHECK_THROWS_AS(LieAlgebra({"x", "y"}, {br(0, 1, {{0, 1}}), br(0, 1, {{0, 1}})}), LieConfigError);
  // [x,y]=y, [x,z]=z, [y,z]=x fails Jacobi: the cyclic sum is 2x.
  try {
    LieAlgebra({"x", "y", "z"}, {br(0, 1, {{1, 1}}), br(0, 2, {{2, 1}}), br(1, 2, {{0, 1}})});
    FAIL("Jacobi violation accepted");
  } catch (const LieConfigError& e) {
    CHECK(std::string(e.what()).find("Jacobi violation at (x,y,z)") != std::string::npos);
  }
}

TEST_CASE("Lie algebra configs") {
  for (const char* name : {"sl2.json", "heisenberg.json", "solvable2.json", "abelian1.json", "abelian2.json",
                           "abelian3.json"})
    CHECK_NOTHROW(config(name));
  LieAlgebra sl2 = config("sl2.json");
  CHECK(sl2.names() == std::vector<std::string>{"e", "h", "f"});
  CHECK(sl2.bracket(0, 2) == LinComb<std::size_t>(1));
  CHECK(sl2.bracket(1, 0) == LinComb<std::size_t>(0, Rational(2)));
  CHECK(sl2.bracket(1, 2) == LinComb<std::size_t>(2, Rational(-2)));
  CHECK(sl2.bracket(2, 2).empty());

  auto by_name = load_lie_algebra(nlohmann::json::parse(
      R"({"dim": 2, "names": ["x", "y"], "brackets": [{"i": 0, "j": 1, "coeffs": {"y": "1/2"}}]})"));
  CHECK(by_name.bracket(0, 1) == LinComb<std::size_t>(1, Rational(1, 2)));
  CHECK(by_name.bracket(1, 0) == LinComb<std::size_t>(1, Rational(-1, 2)));
  auto round = load_lie_algebra(to_json(sl2));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(round.bracket(i, j) == sl2.bracket(i, j));

  CHECK_THROWS_AS(load_lie_algebra(nlohmann::json::parse(R"({"names": ["x"]})")), LieConfigError);
  CHECK_THROWS_AS(load_lie_algebra(nlohmann::json::parse(R"({"dim": 2, "names": ["x"]})")), LieConfigError);
  CHECK_THROWS_AS(load_lie_algebra(nlohmann::json::parse(
                      R"({"dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {"q": "1"}}]})")),
                  LieConfigError);
  CHECK_THROWS_AS(load_lie_algebra_file("/nonexistent/x.json"), LieConfigError);
}

TEST_CASE("normal ordering examples") {
  Enveloping u(config("sl2.json"));
  const std::size_t e = 0, h = 1, f = 2;
  // Orientation-free commutation relation.
  CHECK(u.normal_order({f, e}) == u.normal_order({e, f}) - u.generator(h));
  // Coordinates in the convention with the largest index leftmost.
  const MultiIndex ef = MultiIndex::unit(e) + MultiIndex::unit(f);
  CHECK(u.normal_order({f, e}) == u.monomial(ef));
  CHECK(u.normal_order({e, f}) == u.monomial(ef) + u.generator(h));
  CHECK(u.normal_order({e, e}) == u.monomial(MultiIndex::unit(e, 2)));
  CHECK(u.normal_order({}) == u.monomial(MultiIndex{}));
  CHECK_THROWS_AS(u.normal_order({0, 3}), std::out_of_range);

  Enveloping heis(config("heisenberg.json"));
  CHECK(heis.normal_order({1, 0}) == heis.normal_order({0, 1}) - heis.generator(2));
  CHECK(heis.normal_order({1, 0}) == heis.monomial(MultiIndex::unit(0) + MultiIndex::unit(1)));
}

TEST_CASE("normal ordering is a representation-compatible straightening") {
  for (const char* name : {"sl2.json", "heisenberg.json", "solvable2.json"}) {
    LieAlgebra g = config(name);
    Enveloping u(g);
    auto ad = adjoint(g);
    for (int t = 0; t < 60; ++t) {
      auto w = random_generator_word(g.dim(), 1 + t % 5);
      CHECK(represent(u.normal_order(w), ad) == represent_word(w, ad));
    }
  }
  Enveloping u(config("sl2.json"));
  auto rep = sl2_defining();
  for (int t = 0; t < 60; ++t) {
    auto w = random_generator_word(3, 1 + t % 6);
    CHECK(represent(u.normal_order(w), rep) == represent_word(w, rep));
  }
}

TEST_CASE("normal ordering is confluent") {
  for (const char* name : {"sl2.json", "heisenberg.json", "solvable2.json"}) {
    Enveloping u(config(name));
    for (int t = 0; t < 40; ++t) {
      auto w = random_generator_word(u.dim(), 2 + t % 4);
      const UElement reference = u.normal_order(w);
      for (int k = 0; k < 3; ++k) {
        Enveloping::PairChooser chooser = [](const std::vector<std::size_t>& c) {
          return std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(test::rng());
        };
        CHECK(u.normal_order_with(w, chooser) == reference);
      }
      CHECK(u.normal_order_with(w, [](const std::vector<std::size_t>& c) { return c.size() - 1; }) == reference);
    }
  }
}

TEST_CASE("normal ordering respects the filtration") {
  Enveloping u(config("sl2.json"));
  for (int t = 0; t < 80; ++t) {
    auto w = random_generator_word(3, t % 6);
    for (const auto& [alpha, c] : u.normal_order(w)) CHECK(alpha.degree() <= w.size());
  }
}

TEST_CASE("multiplication") {
  Enveloping u(config("sl2.json"));
  const MultiIndex e = MultiIndex::unit(0), h = MultiIndex::unit(1), f = MultiIndex::unit(2);
  CHECK(u.u_mul(u.monomial(f), u.monomial(e)) == u.monomial(e + f));
  CHECK(u.u_mul(u.monomial(e), u.monomial(f)) == u.monomial(e + f) + u.monomial(h));
  CHECK(Enveloping::dual_eval(h, u.u_mul(u.monomial(e), u.monomial(f))) == Rational(1));
  CHECK(Enveloping::dual_eval(h, u.u_mul(u.monomial(f), u.monomial(e))) == Rational(0));
  // Orientation-free form of the same fact.
  CHECK(u.u_mul(u.monomial(f), u.monomial(e)) - u.u_mul(u.monomial(e), u.monomial(f)) == -u.monomial(h));
  UElement one(MultiIndex{});
  for (int t = 0; t < 10; ++t) {
    UElement x = random_element(u, 3);
    CHECK(u.u_mul(one, x) == x);
    CHECK(u.u_mul(x, one) == x);
  }
  CHECK(Enveloping::dual_eval(e, u.monomial(e)) == Rational(1));
  CHECK(Enveloping::dual_eval(e, u.monomial(f)) == Rational(0));
}

TEST_CASE("multiplication is associative and a homomorphism") {
  for (const char* name : {"sl2.json", "heisenberg.json", "solvable2.json"}) {
    LieAlgebra g = config(name);
    Enveloping u(g);
    auto ad = adjoint(g);
    for (int t = 0; t < 25; ++t) {
      UElement x = random_element(u, 3), y = random_element(u, 3), z = random_element(u, 3);
      CHECK(u.u_mul(u.u_mul(x, y), z) == u.u_mul(x, u.u_mul(y, z)));
      CHECK(represent(u.u_mul(x, y), ad) == mat_mul(represent(x, ad), represent(y, ad)));
    }
  }
}

TEST_CASE("coproduct") {
  Enveloping u(config("sl2.json"));
  const MultiIndex e = MultiIndex::unit(0), f = MultiIndex::unit(2), z;
  UTensor prim;
  prim.add({e, z}, Rational(1));
  prim.add({z, e}, Rational(1));
  CHECK(u.u_coproduct(u.monomial(e)) == prim);
  UTensor sq;
  sq.add({e + e, z}, Rational(1));
  sq.add({e, e}, Rational(2));
  sq.add({z, e + e}, Rational(1));
  CHECK(u.u_coproduct(u.monomial(e + e)) == sq);
  UTensor ef = u.u_coproduct(u.monomial(e + f));
  CHECK(ef.size() == 4);
  for (const auto& [k, c] : ef) CHECK(c == Rational(1));
  CHECK(ef.coeff({e, f}) == Rational(1));
  CHECK(ef.coeff({f, e}) == Rational(1));

  for (const char* name : {"sl2.json", "heisenberg.json", "solvable2.json"}) {
    Enveloping v(config(name));
    for (const auto& gamma : multiindices_up_to(v.dim(), 4))
      CHECK(v.u_coproduct(v.monomial(gamma)) == v.u_coproduct_multiplicative(v.monomial(gamma)));
  }
}

TEST_CASE("coproduct is an algebra morphism") {
  Enveloping u(config("sl2.json"));
  for (int t = 0; t < 15; ++t) {
    UElement x = random_element(u, 2), y = random_element(u, 2);
    CHECK(u.u_coproduct(u.u_mul(x, y)) == u.tensor_mul(u.u_coproduct(x), u.u_coproduct(y)));
  }
}

TEST_CASE("convolution") {
  Enveloping u(config("sl2.json"));
  const MultiIndex z, e = MultiIndex::unit(0), h = MultiIndex::unit(1);
  CHECK(u.convolution(DualForm(z), DualForm(z), u.monomial(z)) == Rational(1));
  CHECK(u.convolution(DualForm(e), DualForm(e), u.monomial(e + e)) == Rational(2));
  for (const auto& a : multiindices_up_to(3, 2))
    for (const auto& b : multiindices_up_to(3, 2))
      CHECK(u.convolution(DualForm(a), DualForm(b), u.monomial(a + b)) == multinomial_ratio(a, b));
  CHECK(multinomial_ratio(e + e + h, e) == Rational(3));
  // S_0 is the convolution unit.
  for (const auto& a : multiindices_up_to(3, 3))
    CHECK(u.convolve_forms(DualForm(z), DualForm(a), 3) == DualForm(a));
}

TEST_CASE("Radford multiplicativity") {
  for (auto [name, n] : std::vector<std::pair<const char*, unsigned>>{
           {"sl2.json", 4}, {"heisenberg.json", 4}, {"abelian2.json", 5}, {"solvable2.json", 4}}) {
    Report r = Enveloping(config(name)).verify_radford_multiplicativity(n);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.checks_run > 0);
  }
}

TEST_CASE("factorization of the canonical element") {
  Enveloping one(config("abelian1.json"));
  UTensor lhs = one.theorem1_lhs(4);
  CHECK(lhs.size() == 5);
  for (unsigned k = 0; k <= 4; ++k) {
    const MultiIndex a = k ? MultiIndex::unit(0, k) : MultiIndex{};
    CHECK(lhs.coeff({a, a}) == Rational(1));
  }
  CHECK(one.theorem1_rhs(4, ProductOrder::decreasing) == lhs);

  for (const char* name : {"sl2.json", "heisenberg.json", "solvable2.json", "abelian3.json"}) {
    Enveloping u(config(name));
    Report r = u.verify_theorem1(3);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.extra["tensor_equal"] == true);
    CHECK(r.extra["phi_identity"] == true);
    UTensor rhs = u.theorem1_rhs(3, ProductOrder::decreasing);
    for (const auto& beta : multiindices_up_to(u.dim(), 3)) CHECK(Enveloping::apply_phi(rhs, beta) == u.monomial(beta));
  }
}

TEST_CASE("the increasing product order fails for a noncommutative algebra") {
  Report r = Enveloping(config("sl2.json")).verify_theorem1(2, ProductOrder::increasing);
  CHECK_FALSE(r.passed());
  CHECK(r.extra["tensor_equal"] == false);
  CHECK(r.extra["phi_identity"] == false);
  // For abelian algebras the order is irrelevant.
  CHECK(Enveloping(config("abelian2.json")).verify_theorem1(3, ProductOrder::increasing).passed());
}

TEST_CASE("Radford to PBW experiment") {
  for (const char* name : {"sl2.json", "heisenberg.json", "abelian2.json"}) {
    Enveloping u(config(name));
    RadfordFamily fam = pbw_family(u, 3);
    for (const auto& [a, b] : fam.basis) CHECK(b == u.monomial(a));
    for (const auto& [a, t] : fam.forms) CHECK(t == DualForm(a, a.factorial()));
    Report r = u.radford_to_pbw_experiment(fam);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.extra["unequal"].empty());
  }

  Enveloping ab(config("abelian2.json"));
  const MultiIndex a = MultiIndex::unit(0), b = MultiIndex::unit(1);
  RadfordFamily p2 = perturbed_family(ab, 2, 0, 1);
  CHECK(p2.basis.at(a + a) == ab.monomial(a + a) + ab.monomial(b));
  Report r2 = ab.radford_to_pbw_experiment(p2);
  CHECK(r2.extra["primitive_generators"] == true);
  CHECK(r2.extra["independent"] == true);
  CHECK(r2.extra["unequal"] == nlohmann::json::array({"a^2"}));

  Report r3 = ab.radford_to_pbw_experiment(perturbed_family(ab, 3, 0, 1));
  CHECK(r3.extra["primitive_generators"] == true);
  CHECK(r3.extra["independent"] == true);
  CHECK(r3.extra["unequal"] == nlohmann::json::array({"a^2", "a^3", "ba^2"}));

  Enveloping sl2(config("sl2.json"));
  Report rs = sl2.radford_to_pbw_experiment(perturbed_family(sl2, 2, 0, 2));
  CHECK(rs.extra["unequal"] == nlohmann::json::array({"e^2"}));
  CHECK_THROWS_AS(perturbed_family(sl2, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("family validation") {
  Enveloping u(config("abelian2.json"));
  RadfordFamily fam = pbw_family(u, 2);
  CHECK_NOTHROW(u.validate_family(fam));

  RadfordFamily missing = fam;
  missing.forms.erase(MultiIndex::unit(0, 2));
  CHECK_THROWS_AS(u.validate_family(missing), FamilyValidationError);

  RadfordFamily not_dual = fam;
  not_dual.basis[MultiIndex::unit(0)] = u.monomial(MultiIndex::unit(0)) * Rational(2);
  CHECK_THROWS_AS(u.validate_family(not_dual), FamilyValidationError);

  // Rescaling T_{2e_0} and B^[2e_0] together keeps duality but breaks
  // multiplicativity.
  RadfordFamily not_mult = fam;
  not_mult.forms[MultiIndex::unit(0, 2)] = DualForm(MultiIndex::unit(0, 2), Rational(4));
  not_mult.basis[MultiIndex::unit(0, 2)] = u.monomial(MultiIndex::unit(0, 2)) * Rational(1, 2);
  CHECK_THROWS_AS(u.validate_family(not_mult), FamilyValidationError);
  CHECK_THROWS_AS(u.radford_to_pbw_experiment(not_mult), FamilyValidationError);

  std::vector<DualForm> singular{DualForm(MultiIndex::unit(0)), DualForm(MultiIndex::unit(0))};
  CHECK_THROWS_AS(family_from_generators(u, singular, 2), FamilyValidationError);
}
