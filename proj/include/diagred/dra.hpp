// The diagonal reduction algebra D(gl_n) presented by the reflection
// equation, with braided copies, central elements and generator changes.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diagred/algebra.hpp"
#include "diagred/reflection.hpp"
#include "diagred/report.hpp"
#include "diagred/rmatrix.hpp"

namespace diagred {

/// Order of the generators (i, j) inside one copy.
/// triangular: lower off-diagonal, diagonal, upper off-diagonal, each block
/// lexicographic. Rewriting terminates for it.
/// off_diagonal_first: lower off-diagonal, upper off-diagonal, then the diagonal with
/// decreasing i; for n = 2 this is L21 < L12 < L22 < L11, the order of the
/// tabulated n = 2 relations. Rewriting cycles from n = 3 on.
/// lexicographic: plain (i, j) order. Rewriting cycles already at n = 2.
enum class GeneratorOrder { triangular, off_diagonal_first, lexicographic };

/// Generators the algebra is written in: the matrix L itself or the
/// images s of the first tensor factor, related by a triangular change.
enum class DraBasis { L, s };

struct DraConfig {
  int n = 2;
  int copies = 1;
  GeneratorOrder order = GeneratorOrder::triangular;
  DraBasis basis = DraBasis::L;
};

/// Coefficient matrix of a linear change of generators: row p = i*n + j
/// holds the expansion of new^i_j in old generators (coefficients left).
using Transition = std::vector<std::vector<Coeff>>;

/// L in terms of s: L^i_j = s^i_j phi_j (i != j) and
/// L^i_i = (s^i_i - sum_{m>i} s^m_m / (h~_im phi_im)) phi_i, coefficients
/// moved to the left.
Transition l_from_s(int n);

/// Inverse of an upper triangular transition (in the index order p).
/// Throws ArithmeticError if a diagonal entry is not invertible, and
/// std::logic_error if the matrix is not triangular.
Transition invert_triangular(const Transition& m);

class DraAlgebra {
 public:
  explicit DraAlgebra(const DraConfig& config);

  const DraConfig& config() const { return config_; }
  int n() const { return config_.n; }
  int copies() const { return config_.copies; }
  const Alphabet& alphabet() const { return alphabet_; }
  const RewriteSystem& rules() const { return rules_; }
  const Tensor4& r_matrix() const { return r_; }

  Gen gen(int copy, int i, int j) const { return code_[(copy * n() + i) * n() + j]; }
  /// Copy and indices of a generator.
  std::array<int, 3> indices(Gen g) const { return index_[g]; }

  /// The matrix L of a copy written in the generators of this algebra.
  Matrix l_matrix(int copy = 0) const;
  /// L' = H - L with H^i_j = (h~_j + n) delta^i_j.
  Matrix l_prime_matrix(int copy = 0) const;

  NormalFormEngine engine() const { return NormalFormEngine(alphabet_, rules_); }

  /// Reflection relations of one copy in free words (one per component).
  std::vector<Element> reflection_relations(int copy) const;
  /// Braided cross relations R M_a R M_b = M_b R M_a R between copies a < b.
  std::vector<Element> cross_relations(int a, int b) const;
  /// Number of independent relations found for one copy.
  std::size_t independent_relations() const { return independent_; }

  /// Rules ordered by their left-hand word: pairs inside copy 0, or every
  /// rule including the cross-copy ones.
  std::vector<std::pair<Word, Element>> rule_list(bool all_copies = false) const;

  /// L[i,j], L2[i,j], ... (s[i,j] in the s basis), h1.., integers,
  /// + - * / ^ and parentheses; division only by coefficients.
  Element parse(const std::string& text) const;
  std::string format(const Element& e) const { return alphabet_.format(e); }

 private:
  void solve(std::vector<Element> rows, const std::vector<Word>& targets, const std::string& what);

  DraConfig config_;
  Tensor4 r_;
  std::vector<Gen> code_;
  std::vector<std::array<int, 3>> index_;
  Alphabet alphabet_;
  RewriteSystem rules_;
  std::size_t independent_ = 0;
};

/// Substitutes images for generators: f * g1...gk -> f * img(g1)...img(gk).
Element substitute(NormalFormEngine& engine, const Element& e, const std::vector<Element>& images);

/// tr(Lambda^power Q-) in normal form.
Element central_element(const DraAlgebra& a, NormalFormEngine& engine, const Matrix& lambda, int power);

/// Commutators of tr(L^power Q-) and tr(L'^power Q-) with every generator.
Report check_central(const DraAlgebra& a, int power);

/// Substituting the solved rules back into the reflection components.
Report check_round_trip(const DraAlgebra& a);

/// Degree-3 associativity: all triples, or a fixed pseudo-random sample.
Report check_associativity(const DraAlgebra& a, std::size_t sample = 0, unsigned seed = 1);

/// H = diag(h~_j + n) satisfies the reflection equation, and the mixed
/// identity R L R H + R H R L - L R H R - H R L R = 2 R L - 2 L R holds for
/// a formal weight-graded L.
Report check_h_realization(int n);

/// Triangular changes between s, s', L, L' and the identity L + L' = H.
Report check_generator_transforms(int n);

/// M + Mt satisfies the reflection equation in two braided copies, the
/// coproduct respects every rule, and is coassociative in three copies.
Report coproduct_check(int n);

/// The n = 2 tables: ordering relations, central element and the two-copy
/// Weyl relations.
Report rank_two_regression();

}  // namespace diagred
