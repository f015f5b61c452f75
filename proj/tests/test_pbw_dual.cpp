#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pbw/linalg.hpp"
#include "pbw/lyndon.hpp"
#include "pbw/pbw_dual.hpp"

using namespace pbw;

namespace {

WordComb parse_poly(const Alphabet& a, std::initializer_list<std::pair<const char*, int>> terms) {
  WordComb p;
  for (const auto& [w, c] : terms) p.add(a.parse(w), Rational(c));
  return p;
}

}  // namespace

TEST_CASE("P and S examples") {
  auto ab = make_alphabet("ab");
  const Alphabet& a = *ab;
  PbwFamily fam(ab);
  CHECK(fam.P(a.parse("a")) == parse_poly(a, {{"a", 1}}));
  CHECK(fam.P(a.parse("ab")) == parse_poly(a, {{"ab", 1}, {"ba", -1}}));
  CHECK(fam.P(a.parse("ba")) == parse_poly(a, {{"ba", 1}}));
  CHECK(fam.S(a.parse("a")) == parse_poly(a, {{"a", 1}}));
  CHECK(fam.S(a.parse("ab")) == parse_poly(a, {{"ab", 1}}));
  CHECK(fam.S(a.parse("ba")) == parse_poly(a, {{"ab", 1}, {"ba", 1}}));
  CHECK(fam.S(a.parse("aa")) == parse_poly(a, {{"aa", 1}}));
  CHECK(fam.P(Word{}) == WordComb(Word{}));
  CHECK(fam.S(Word{}) == WordComb(Word{}));
  CHECK(fam.pbw_P(a.parse("ab")).poly.to_string() == "ab - ba");
  CHECK(fam.dual_S(a.parse("ba")).poly.to_string() == "ab + ba");
  CHECK(scalar_product(fam.S(a.parse("ab")), fam.P(a.parse("ab"))) == Rational(1));
  CHECK(scalar_product(fam.S(a.parse("ba")), fam.P(a.parse("ab"))) == Rational(0));
}

TEST_CASE("P_l is primitive for Lyndon l") {
  for (const Word& l : lyndon_up_to(2, 5)) {
    PbwFamily fam(make_alphabet("ab"));
    const WordComb& p = fam.P(l);
    TensorPoly expected;
    for (const auto& [w, c] : p) {
      expected.add({w, Word{}}, c);
      expected.add({Word{}, w}, c);
    }
    CHECK(coproduct(p) == expected);
  }
}

TEST_CASE("triangularity and multihomogeneity") {
  auto ab = make_alphabet("ab");
  PbwFamily fam(ab);
  CHECK(fam.check_triangular(ab->parse("ab")));
  for (const Word& w : ab->words_up_to(5)) {
    CHECK(fam.check_triangular(w));
    auto md = multidegree(w, 2);
    for (const auto& [u, c] : fam.P(w)) CHECK(multidegree(u, 2) == md);
    for (const auto& [u, c] : fam.S(w)) CHECK(multidegree(u, 2) == md);
  }
  CHECK(fam.check_triangularity(5).passed());
}

TEST_CASE("memoized P equals direct expansion") {
  PbwFamily fam(make_alphabet("abc"));
  for (const Word& w : Alphabet("abc").words_up_to(4)) CHECK(fam.P(w) == pbw_P_unmemoized(w));
}

TEST_CASE("S is the dual basis of P") {
  // Oracle: invert the coefficient matrix of P on each length class and
  // read the dual basis off the transpose of the inverse.
  auto ab = make_alphabet("ab");
  PbwFamily fam(ab);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto words = ab->words_of_length(n);
    Matrix m(words.size(), std::vector<Rational>(words.size()));
    for (std::size_t v = 0; v < words.size(); ++v)
      for (std::size_t w = 0; w < words.size(); ++w) m[v][w] = fam.P(words[v]).coeff(words[w]);
    auto inv = invert(m);
    REQUIRE(inv.has_value());
    for (std::size_t u = 0; u < words.size(); ++u) {
      WordComb expected;
      for (std::size_t w = 0; w < words.size(); ++w) expected.add(words[w], (*inv)[w][u]);
      CHECK(fam.S(words[u]) == expected);
    }
  }
}

TEST_CASE("duality reports") {
  PbwFamily fam(make_alphabet("ab"));
  Report r = fam.check_duality(4);
  CHECK(r.passed());
  CHECK(r.extra["pairs_checked"] == 31 * 31);
  Report parallel = fam.check_duality(4, true);
  CHECK(parallel == r);
  CHECK(PbwFamily(make_alphabet("abc")).check_duality(3, true).passed());
}
