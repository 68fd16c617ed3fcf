// Named elements of the localized Cartan ring. All indices are 0-based and
// n is the rank.
#pragma once

#include "diagred/coefficient.hpp"

namespace diagred {

/// prod_{k>j} h~_jk / (h~_jk - 1)
Coeff phi(int j, int n);
/// prod_{k<j} h~_jk / (h~_jk - 1)
Coeff phi_prime(int j, int n);
/// prod_{j<k<m} h~_jk / (h~_jk - 1); requires j < m.
Coeff phi_segment(int j, int m, int n);
/// (h~_ij + 1) / h~_ij
Coeff alpha(int i, int j, int n);
/// 1/(1 - h~_ij) * phi_j[e_j] / phi_i
Coeff beta(int i, int j, int n);
/// -phi_i^{-1}
Coeff mu(int i, int n);
/// prod_{k != i} (h~_ik + 1) / h~_ik
Coeff q_plus(int i, int n);
/// prod_{k != i} (h~_ik - 1) / h~_ik
Coeff q_minus(int i, int n);
/// Unshifted Cartan generator h_i = h~_i + i (1-based i, here i+1).
Coeff h_unshifted(int i, int n);

}  // namespace diagred
