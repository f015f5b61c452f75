#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pbw/factorization.hpp"
#include "pbw/lincomb.hpp"
#include "pbw/multiindex.hpp"
#include "pbw/report.hpp"

namespace pbw {

/// Finite-dimensional Lie algebra given by structure constants
/// [b_i, b_j] = sum_k c_ij^k b_k over an ordered basis. Antisymmetry and the
/// Jacobi identity are checked on construction.
class LieAlgebra {
 public:
  struct Bracket {
    std::size_t i;
    std::size_t j;
    LinComb<std::size_t> value;
  };

  // Pairs not listed bracket to zero; a listed (i, j) fixes (j, i) by
  // antisymmetry unless that pair is listed too, in which case the two must
  // agree. Throws LieConfigError naming the offending pair or triple.
  LieAlgebra(std::vector<std::string> names, const std::vector<Bracket>& brackets);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const LinComb<std::size_t>& bracket(std::size_t i, std::size_t j) const { return table_.at(i * dim() + j); }

 private:
  std::vector<std::string> names_;
  std::vector<LinComb<std::size_t>> table_;
};

// {"dim": n, "names": [...], "brackets": [{"i": , "j": , "coeffs": {k: "p/q"}}]}
// Coefficient keys are basis indices or basis names.
LieAlgebra load_lie_algebra(const nlohmann::json& config);
LieAlgebra load_lie_algebra_file(const std::string& path);
nlohmann::json to_json(const LieAlgebra& g);

// Coordinates in the PBW basis B^alpha.
using UElement = LinComb<MultiIndex>;
// sum c_alpha S_alpha, finitely supported on the dual family.
using DualForm = LinComb<MultiIndex>;
// Left leg indexes S_alpha (or B^alpha for coproducts), right leg B^beta.
using UTensor = LinComb<std::pair<MultiIndex, MultiIndex>>;

/// Data of a Radford family: forms T_alpha with T_a * T_b = T_{a+b}, and the
/// basis B^[alpha] with <T_alpha, B^[beta]> = alpha! delta, for |alpha| <= N.
struct RadfordFamily {
  unsigned max_degree = 0;
  std::map<MultiIndex, DualForm> forms;
  std::map<MultiIndex, UElement> basis;
};

class FamilyValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// U(g) in PBW coordinates. B^alpha is the ordered product with the largest
/// basis index leftmost.
class Enveloping {
 public:
  explicit Enveloping(LieAlgebra g);

  const LieAlgebra& algebra() const { return g_; }
  std::size_t dim() const { return g_.dim(); }

  // Straightens a product of generators into PBW coordinates by rewriting
  // b_i b_j -> b_j b_i + [b_i, b_j] for adjacent i < j. Throws
  // std::out_of_range for an invalid index.
  UElement normal_order(const std::vector<std::size_t>& word) const;
  // Same rewriting with the caller choosing which out-of-order pair to
  // rewrite next; `choose` receives the candidate positions and returns an
  // index into them. Not memoized.
  using PairChooser = std::function<std::size_t(const std::vector<std::size_t>&)>;
  UElement normal_order_with(const std::vector<std::size_t>& word, const PairChooser& choose) const;

  UElement monomial(const MultiIndex& alpha) const { return UElement(alpha); }
  UElement generator(std::size_t i) const { return UElement(MultiIndex::unit(i)); }
  UElement u_mul(const UElement& u, const UElement& v) const;

  // Binomial closed form of Delta(B^gamma).
  UTensor u_coproduct(const UElement& u) const;
  // Multiplicative extension of b_i -> b_i (x) 1 + 1 (x) b_i.
  UTensor u_coproduct_multiplicative(const UElement& u) const;
  UTensor tensor_mul(const UTensor& s, const UTensor& t) const;

  static Rational dual_eval(const MultiIndex& alpha, const UElement& u) { return u.coeff(alpha); }
  static Rational evaluate(const DualForm& f, const UElement& u) { return scalar_product(f, u); }
  // (f (x) g)(Delta u)
  Rational convolution(const DualForm& f, const DualForm& g, const UElement& u) const;
  // f * g as a form on span{B^gamma : |gamma| <= max_degree}.
  DualForm convolve_forms(const DualForm& f, const DualForm& g, unsigned max_degree) const;

  // S_a * S_b = (a+b)!/(a! b!) S_{a+b} on every B^gamma, |gamma| <= N, for all
  // |a| + |b| <= N; also cross-checks both coproduct routes.
  Report verify_radford_multiplicativity(unsigned max_degree) const;

  // sum S_alpha (x) B^alpha against the ordered product of
  // exp(S_{e_i} (x) B^{e_i}), truncated at |alpha| <= N on the form leg, plus
  // the resolution-of-identity view on every B^beta.
  Report verify_theorem1(unsigned max_degree, ProductOrder order = ProductOrder::decreasing) const;
  UTensor theorem1_lhs(unsigned max_degree) const;
  UTensor theorem1_rhs(unsigned max_degree, ProductOrder order) const;
  // Phi(T)(B^beta) = sum over terms (S_l (x) v) of S_l(B^beta) v.
  static UElement apply_phi(const UTensor& t, const MultiIndex& beta);

  // Throws FamilyValidationError unless the family is multiplicative and in
  // duality with its basis up to its degree.
  void validate_family(const RadfordFamily& family) const;
  // (a) B^[e_i] primitive, (b) linearly independent, (c) per alpha whether
  // the ordered product of the B^[e_i] equals B^[alpha].
  Report radford_to_pbw_experiment(const RadfordFamily& family) const;

 private:
  LieAlgebra g_;
  mutable std::mutex mutex_;
  mutable std::map<std::vector<std::size_t>, UElement> order_memo_;

  UElement straighten(const std::vector<std::size_t>& word, const PairChooser* choose) const;
};

// T_alpha as ordered convolution products of the generator forms, and the
// basis B^[beta] solved exactly from the duality.
RadfordFamily family_from_generators(const Enveloping& u, const std::vector<DualForm>& generator_forms,
                                     unsigned max_degree);
// T_alpha = alpha! S_alpha, B^[alpha] = B^alpha.
RadfordFamily pbw_family(const Enveloping& u, unsigned max_degree);
// T_{e_j} := S_{e_j} - S_{2 e_i}, other generators unchanged. The resulting
// basis has B^[2 e_i] = B^{2 e_i} + B^{e_j}.
RadfordFamily perturbed_family(const Enveloping& u, unsigned max_degree, std::size_t i, std::size_t j);

}  // namespace pbw
