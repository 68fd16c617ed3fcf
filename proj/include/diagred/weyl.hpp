// The h-deformed Weyl algebra in nN variables x^{i,a} and barred
// derivatives D_{j,a}, its exchange rules and normal form.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diagred/algebra.hpp"
#include "diagred/report.hpp"
#include "diagred/rmatrix.hpp"

namespace diagred {

enum class Statistics { bosonic, fermionic };

/// Constant term of the x-D exchange between different copies: either
/// delta^a_b delta^i_j, or delta^i_j for every pair of copies.
enum class CrossConstant { kronecker, every_copy };

/// Sign of the constant term in the fermionic x-D exchange:
/// minus_delta gives  xi D = -T D xi - delta,  anticommuting gives
/// xi D = -T D xi + delta (the classical {xi, d} = delta).
enum class FermionConstant { minus_delta, anticommuting };

struct WeylConfig {
  int n = 2;
  int copies = 1;  // N
  Statistics stats = Statistics::bosonic;
  CrossConstant cross = CrossConstant::kronecker;
  FermionConstant fermion = FermionConstant::anticommuting;
};

std::string to_string(Statistics s);
std::optional<Statistics> parse_statistics(const std::string& s);

class WeylAlgebra {
 public:
  explicit WeylAlgebra(const WeylConfig& config);

  const WeylConfig& config() const { return config_; }
  int n() const { return config_.n; }
  int copies() const { return config_.copies; }
  const Alphabet& alphabet() const { return alphabet_; }
  const RewriteSystem& rules() const { return rules_; }
  const Tensor4& r_matrix() const { return r_; }

  /// Generator codes (0-based indices). Codes increase in the normal order:
  /// all x before all D, each block lexicographic in (index, copy).
  Gen x(int i, int a) const { return static_cast<Gen>(i * copies() + a); }
  Gen d(int j, int a) const { return static_cast<Gen>((n() + j) * copies() + a); }
  bool is_x(Gen g) const { return g < n() * copies(); }
  int index_of(Gen g) const { return (is_x(g) ? g : g - n() * copies()) / copies(); }
  int copy_of(Gen g) const { return g % copies(); }

  Element gx(int i, int a) const { return Element::word({x(i, a)}); }
  Element gd(int j, int a) const { return Element::word({d(j, a)}); }

  /// +1 or -1 according to the statistics.
  int sign() const { return config_.stats == Statistics::bosonic ? 1 : -1; }
  /// Constant c in  x^{ia} D_{jb} = sign T D x - c delta^i_j (when the
  /// copies qualify).
  int x_d_constant() const;
  bool copies_couple(int a, int b) const {
    return config_.cross == CrossConstant::every_copy || a == b;
  }

  NormalFormEngine engine() const { return NormalFormEngine(alphabet_, rules_); }

  /// Parses x[i,a], D[j,a] (1-based; the copy may be omitted when N = 1),
  /// coefficients h1.., integers, + - * / ^ and parentheses.
  Element parse(const std::string& text) const;
  std::string format(const Element& e) const { return alphabet_.format(e); }

  /// Exchange rules for D x derived by solving the forward x D relations
  /// with Gaussian elimination; used to cross-check the closed form.
  RewriteSystem d_x_rules_by_elimination() const;

  /// The forward relations (each element = 0) of the defining presentation:
  /// x x, D D and x D families.
  std::vector<Element> defining_relations() const;

 private:
  void build_same_kind_rules(bool for_x);
  void build_d_x_rules();

  WeylConfig config_;
  Tensor4 r_;
  Tensor4 t_;
  Tensor4 psi_;
  Alphabet alphabet_;
  RewriteSystem rules_;
};

/// Ltilde^i_j = sum_a x^{ia} D_{ja} over the copies in [first, last).
std::vector<std::vector<Element>> ltilde(const WeylAlgebra& w, int first = 0, int last = -1);

/// Exhaustive associativity check on all words of three generators.
Report check_confluence(const WeylAlgebra& w);

/// Reflection equation for Ltilde: every component normal-forms to zero.
Report verify_reflection(const WeylAlgebra& w);

/// Split realization: M = first nu copies, Mt = the rest. Checks the
/// reflection equation for both and the braided cross relation.
Report split_realization(const WeylAlgebra& w, int nu);

}  // namespace diagred
