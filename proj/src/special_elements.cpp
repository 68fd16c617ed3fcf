#include "diagred/special_elements.hpp"

#include <string>

namespace diagred {

namespace {

void check_index(int i, int n) {
  if (n < 1 || n > kMaxRank) throw std::out_of_range("rank out of range: " + std::to_string(n));
  if (i < 0 || i >= n) throw std::out_of_range("index out of range: " + std::to_string(i + 1));
}

// h~_jk / (h~_jk - 1)
Coeff ratio(int j, int k) {
  return Coeff::make(1, (Poly::variable(j) - Poly::variable(k)),
                     {{Poly::variable(j) - Poly::variable(k) + Poly(-1), 1}});
}

// (h~_ik + s) / h~_ik
Coeff shifted_ratio(int i, int k, long s) {
  return Coeff::make(1, Poly::variable(i) - Poly::variable(k) + Poly(s),
                     {{Poly::variable(i) - Poly::variable(k), 1}});
}

}  // namespace

Coeff phi(int j, int n) {
  check_index(j, n);
  Coeff r(1);
  for (int k = j + 1; k < n; ++k) r *= ratio(j, k);
  return r;
}

Coeff phi_prime(int j, int n) {
  check_index(j, n);
  Coeff r(1);
  for (int k = 0; k < j; ++k) r *= ratio(j, k);
  return r;
}

Coeff phi_segment(int j, int m, int n) {
  check_index(j, n);
  check_index(m, n);
  if (j >= m) throw std::out_of_range("segment product requires j < m");
  Coeff r(1);
  for (int k = j + 1; k < m; ++k) r *= ratio(j, k);
  return r;
}

Coeff alpha(int i, int j, int n) {
  check_index(i, n);
  check_index(j, n);
  return shifted_ratio(i, j, 1);
}

Coeff beta(int i, int j, int n) {
  check_index(i, n);
  check_index(j, n);
  return (Coeff(1) - Coeff::hdiff(i, j)).inverse() * phi(j, n).shifted(Weight::unit(j)) /
         phi(i, n);
}

Coeff mu(int i, int n) { return -phi(i, n).inverse(); }

Coeff q_plus(int i, int n) {
  check_index(i, n);
  Coeff r(1);
  for (int k = 0; k < n; ++k) {
    if (k != i) r *= shifted_ratio(i, k, 1);
  }
  return r;
}

Coeff q_minus(int i, int n) {
  check_index(i, n);
  Coeff r(1);
  for (int k = 0; k < n; ++k) {
    if (k != i) r *= shifted_ratio(i, k, -1);
  }
  return r;
}

Coeff h_unshifted(int i, int n) {
  check_index(i, n);
  return Coeff::var(i) + Coeff(i + 1);
}

}  // namespace diagred
