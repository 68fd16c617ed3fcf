// Dynamical tensors over the coefficient field and the identities they
// satisfy. Indices are 0-based internally and printed 1-based.
#pragma once

#include <vector>

#include "diagred/coefficient.hpp"
#include "diagred/report.hpp"

namespace diagred {

/// Rank-4 tensor X^{ab}_{cd}: upper pair (a, b), lower pair (c, d). Entries
/// vanish unless {a, b} = {c, d} as multisets.
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n) {}

  int rank() const { return n_; }
  const Coeff& operator()(int a, int b, int c, int d) const { return data_[index(a, b, c, d)]; }
  Coeff& at(int a, int b, int c, int d) { return data_[index(a, b, c, d)]; }

  /// Nonzero lower pairs (c, d) for the upper pair (a, b): at most two.
  std::vector<std::pair<int, int>> lower_support(int a, int b) const;
  /// Nonzero upper pairs (a, b) for the lower pair (c, d).
  std::vector<std::pair<int, int>> upper_support(int c, int d) const;

  /// Every entry shifted by w.
  Tensor4 shifted(const Weight& w) const;
  /// True when all nonzero entries respect the multiset pattern.
  bool sparsity_ok() const;
  std::size_t nonzero_count() const;

 private:
  std::size_t index(int a, int b, int c, int d) const {
    return ((static_cast<std::size_t>(a) * n_ + b) * n_ + c) * n_ + d;
  }
  int n_ = 0;
  std::vector<Coeff> data_;
};

/// Diagonal rank-2 tensor diag(d_0, ..., d_{n-1}).
struct Diagonal {
  std::vector<Coeff> entries;
  int rank() const { return static_cast<int>(entries.size()); }
  const Coeff& operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
};

Tensor4 build_r(int n);
Tensor4 build_t(int n);
Tensor4 build_s(int n);
Tensor4 build_psi(int n);
Diagonal build_q_plus(int n);
Diagonal build_q_minus(int n);
/// H^i_j = (h~_j + n) delta^i_j
Diagonal build_cartan_h(int n);

/// R^2 = Id.
Report check_involutive(int n);
/// Dynamical Yang-Baxter equation.
Report check_dybe(int n);
/// Skew inverse of T together with both partial traces of Psi.
Report check_skew_inverse(int n);
/// T from R, S from R, Psi from S and Q+, transpose symmetry, the two
/// trace identities with Q-, Q-compatibility, traces of Q+ and Q-.
Report check_aux_identities(int n);
/// Sum_i Q+_i = Sum_i Q-_i = n.
Report check_traces(int n);

}  // namespace diagred
