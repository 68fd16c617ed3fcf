// Componentwise expansion of reflection-type equations
//   R L_A R L_B - L_C R L_D R = R L - L R
// into symbolic quadratic and linear terms with every coefficient already
// moved to the left (entries of each matrix Lambda^p_q have weight
// e_p - e_q).
#pragma once

#include <array>
#include <functional>
#include <map>
#include <vector>

#include "diagred/algebra.hpp"
#include "diagred/report.hpp"
#include "diagred/rmatrix.hpp"

namespace diagred {

/// Lambda_A^{p0}_{p1} Lambda_B^{q0}_{q1}
using QuadKey = std::array<int, 6>;  // A, p0, p1, B, q0, q1
/// Lambda_A^{p0}_{p1}
using LinKey = std::array<int, 3>;  // A, p0, p1

struct SymbolicComponent {
  std::array<int, 4> free{};  // upper i, j; lower t, s (0-based)
  std::map<QuadKey, Coeff> quadratic;
  std::map<LinKey, Coeff> linear;
};

struct ReflectionShape {
  /// Labels of the four matrix factors: R L_A R L_B - L_C R L_D R.
  std::array<int, 4> labels{0, 0, 0, 0};
  /// Include the linear right-hand side R L - L R (with label labels[0]).
  bool linear = true;
  /// Factor applied to the linear part.
  long linear_factor = 1;
  /// Include the quadratic left-hand side.
  bool quadratic = true;
};

/// All n^4 components (i, j, t, s) in lexicographic order.
std::vector<SymbolicComponent> reflection_symbols(const Tensor4& r, const ReflectionShape& shape);

/// Adds the terms of b to a.
void accumulate(SymbolicComponent& a, const SymbolicComponent& b);

using QuadRealizer = std::function<Element(const QuadKey&)>;
using LinRealizer = std::function<Element(const LinKey&)>;

/// Substitutes realizations of the quadratic and linear symbols.
Element realize(const SymbolicComponent& c, const QuadRealizer& quad, const LinRealizer& lin);

/// Weight of Lambda^p_q, e_p - e_q.
Weight entry_weight(int p, int q);

using Matrix = std::vector<std::vector<Element>>;

/// Realizes label A as mats[A], multiplies with the normal-form engine and
/// reports every component whose residual is nonzero.
Report reflection_residuals(const Alphabet& alphabet, const RewriteSystem& rules,
                            const std::vector<Matrix>& mats,
                            const std::vector<SymbolicComponent>& components,
                            const std::string& identity);

}  // namespace diagred
