#include "diagred/rmatrix.hpp"

#include "diagred/special_elements.hpp"

namespace diagred {

namespace {

void expect_equal(Report& r, const char* identity, std::vector<int> idx, const Coeff& lhs,
                  const Coeff& rhs) {
  ++r.checks;
  if (lhs == rhs) return;
  for (auto& i : idx) ++i;
  r.fail(identity, std::move(idx), lhs.to_string(), rhs.to_string());
}

Coeff delta(int a, int b) { return Coeff(a == b ? 1 : 0); }

Coeff hd(int i, int j, long s = 0) { return Coeff::hdiff(i, j, s); }

}  // namespace

// ------------------------------------------------------------------ Tensor4

std::vector<std::pair<int, int>> Tensor4::lower_support(int a, int b) const {
  std::vector<std::pair<int, int>> out;
  if (!(*this)(a, b, a, b).is_zero()) out.emplace_back(a, b);
  if (a != b && !(*this)(a, b, b, a).is_zero()) out.emplace_back(b, a);
  return out;
}

std::vector<std::pair<int, int>> Tensor4::upper_support(int c, int d) const {
  std::vector<std::pair<int, int>> out;
  if (!(*this)(c, d, c, d).is_zero()) out.emplace_back(c, d);
  if (c != d && !(*this)(d, c, c, d).is_zero()) out.emplace_back(d, c);
  return out;
}

Tensor4 Tensor4::shifted(const Weight& w) const {
  Tensor4 t = *this;
  for (auto& c : t.data_) c = c.shifted(w);
  return t;
}

bool Tensor4::sparsity_ok() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        for (int d = 0; d < n_; ++d) {
          const bool allowed = (a == c && b == d) || (a == d && b == c);
          if (!allowed && !(*this)(a, b, c, d).is_zero()) return false;
        }
  return true;
}

std::size_t Tensor4::nonzero_count() const {
  std::size_t k = 0;
  for (const auto& c : data_) k += c.is_zero() ? 0 : 1;
  return k;
}

// ----------------------------------------------------------------- builders

Tensor4 build_r(int n) {
  Tensor4 r(n);
  for (int i = 0; i < n; ++i) {
    r.at(i, i, i, i) = Coeff(1);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Coeff h = hd(i, j);
      r.at(i, j, i, j) = h.inverse();
      r.at(i, j, j, i) = i < j ? (h * h - Coeff(1)) / (h * h) : Coeff(1);
    }
  }
  return r;
}

Tensor4 build_t(int n) {
  Tensor4 t(n);
  for (int i = 0; i < n; ++i) {
    t.at(i, i, i, i) = Coeff(1);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Coeff h = hd(i, j);
      t.at(i, j, i, j) = -hd(i, j, -1).inverse();
      t.at(j, i, i, j) = i < j ? h * hd(i, j, 2) / hd(i, j, 1).pow(2) : Coeff(1);
    }
  }
  return t;
}

Tensor4 build_s(int n) {
  Tensor4 s(n);
  for (int i = 0; i < n; ++i) {
    s.at(i, i, i, i) = Coeff(1);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Coeff h = hd(i, j);
      s.at(i, j, i, j) = hd(i, j, 1).inverse();
      s.at(i, j, j, i) = i > j ? Coeff(1) : h * hd(i, j, -2) / hd(i, j, -1).pow(2);
    }
  }
  return s;
}

Tensor4 build_psi(int n) {
  Tensor4 p(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      p.at(i, j, i, j) = q_plus(i, n) * q_minus(j, n) / hd(i, j, 1);
      if (i == j) continue;
      const Coeff h = hd(i, j);
      p.at(i, j, j, i) = i < j ? Coeff(1) : hd(i, j, -1).pow(2) / (h * hd(i, j, -2));
    }
  }
  return p;
}

Diagonal build_q_plus(int n) {
  Diagonal d;
  for (int i = 0; i < n; ++i) d.entries.push_back(q_plus(i, n));
  return d;
}

Diagonal build_q_minus(int n) {
  Diagonal d;
  for (int i = 0; i < n; ++i) d.entries.push_back(q_minus(i, n));
  return d;
}

Diagonal build_cartan_h(int n) {
  Diagonal d;
  for (int i = 0; i < n; ++i) d.entries.push_back(Coeff::var(i) + Coeff(n));
  return d;
}

// ------------------------------------------------------------------- checks

Report check_involutive(int n) {
  const Tensor4 r = build_r(n);
  Report rep;
  rep.suite = "rmatrix";
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int m = 0; m < n; ++m)
        for (int p = 0; p < n; ++p) {
          Coeff sum;
          for (auto [j, l] : r.lower_support(i, k)) sum += r(i, k, j, l) * r(j, l, m, p);
          expect_equal(rep, "R^2=Id", {i, k, m, p}, sum, delta(i, m) * delta(k, p));
        }
  return rep;
}

Report check_dybe(int n) {
  const Tensor4 r = build_r(n);
  std::vector<Tensor4> down;  // down[a] = R[-e_a]
  for (int a = 0; a < n; ++a) down.push_back(r.shifted(-Weight::unit(a)));
  const std::size_t n3 = static_cast<std::size_t>(n) * n * n;
  Report rep = run_indexed(n3, [&](std::size_t flat, Report& out) {
    const int i = static_cast<int>(flat / (n * n));
    const int j = static_cast<int>(flat / n % n);
    const int k = static_cast<int>(flat % n);
    for (int m = 0; m < n; ++m)
      for (int nn = 0; nn < n; ++nn)
        for (int s = 0; s < n; ++s) {
          Coeff lhs;
          for (auto [a, b] : r.lower_support(i, j))
            for (auto [u, rr] : r.lower_support(b, k)) {
              if (rr != s) continue;
              lhs += r(i, j, a, b) * down[a](b, k, u, s) * r(a, u, m, nn);
            }
          Coeff rhs;
          for (auto [a, b] : r.lower_support(j, k))
            for (auto [mm, u] : r.lower_support(i, a)) {
              if (mm != m) continue;
              rhs += down[i](j, k, a, b) * r(i, a, m, u) * down[m](u, b, nn, s);
            }
          expect_equal(out, "dynamical Yang-Baxter", {i, j, k, m, nn, s}, lhs, rhs);
        }
  });
  rep.suite = "rmatrix";
  return rep;
}

Report check_skew_inverse(int n) {
  const Tensor4 t = build_t(n);
  const Tensor4 psi = build_psi(n);
  Report rep;
  rep.suite = "rmatrix";
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m)
      for (int j = 0; j < n; ++j)
        for (int nn = 0; nn < n; ++nn) {
          Coeff sum;
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) sum += psi(i, k, j, l) * t(l, m, k, nn);
          expect_equal(rep, "skew inverse", {i, m, j, nn}, sum, delta(i, nn) * delta(m, j));
        }
  const Diagonal qp = build_q_plus(n);
  const Diagonal qm = build_q_minus(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Coeff second, first;
      for (int k = 0; k < n; ++k) {
        second += psi(i, k, j, k);
        first += psi(k, i, k, j);
      }
      expect_equal(rep, "second partial trace of Psi is Q+", {i, j}, second, qp[i] * delta(i, j));
      expect_equal(rep, "first partial trace of Psi is Q-", {i, j}, first, qm[j] * delta(i, j));
    }
  return rep;
}

Report check_aux_identities(int n) {
  const Tensor4 r = build_r(n);
  const Tensor4 t = build_t(n);
  const Tensor4 s = build_s(n);
  const Tensor4 psi = build_psi(n);
  const Diagonal qp = build_q_plus(n);
  const Diagonal qm = build_q_minus(n);
  const auto e = [](int i) { return Weight::unit(i); };
  Report rep;
  rep.suite = "rmatrix";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          // T^{ab}_{cd}[-e_b] = R^{ba}_{dc}
          expect_equal(rep, "T from R", {a, b, c, d}, t(a, b, c, d).shifted(-e(b)), r(b, a, d, c));
          // S^{ab}_{cd} = R^{ab}_{cd}[e_c]
          expect_equal(rep, "S from R", {a, b, c, d}, s(a, b, c, d), r(a, b, c, d).shifted(e(c)));
          // Psi^{ab}_{cd} = Q+_a[e_b - e_d] S^{ab}_{cd} (Q+_d)^{-1}[-e_d]
          expect_equal(rep, "Psi from S", {a, b, c, d}, psi(a, b, c, d),
                       qp[a].shifted(e(b) - e(d)) * s(a, b, c, d) / qp[d].shifted(-e(d)));
          // R^{ba}_{dc} = R^{cd}_{ab} with h~ -> -h~
          expect_equal(rep, "transpose symmetry", {a, b, c, d}, r(b, a, d, c),
                       r(c, d, a, b).negated_h());
          // Q+_a[-e_a] Q+_b[-e_a-e_b] R^{ab}_{cd} = R^{ab}_{cd} Q+_c[-e_c] Q+_d[-e_c-e_d]
          expect_equal(rep, "Q+ compatibility of R", {a, b, c, d},
                       qp[a].shifted(-e(a)) * qp[b].shifted(-e(a) - e(b)) * r(a, b, c, d),
                       r(a, b, c, d) * qp[c].shifted(-e(c)) * qp[d].shifted(-e(c) - e(d)));
        }
  for (int m = 0; m < n; ++m)
    for (int nn = 0; nn < n; ++nn) {
      Coeff minus, plus;
      for (int a = 0; a < n; ++a) {
        minus += qm[a].shifted(-e(m)) * r(m, a, nn, a);
        plus += qp[a].shifted(e(m)) * r(a, m, a, nn);
      }
      expect_equal(rep, "Q- weighted trace of R", {m, nn}, minus, delta(m, nn));
      expect_equal(rep, "Q+ weighted trace of R", {m, nn}, plus, delta(m, nn));
      expect_equal(rep, "Q- compatibility", {m, nn}, qm[nn] * qm[m].shifted(-e(nn)),
                   qm[m] * qm[nn].shifted(-e(m)));
    }
  rep.absorb(check_traces(n));
  return rep;
}

Report check_traces(int n) {
  Report rep;
  rep.suite = "rmatrix";
  Coeff tp, tm;
  for (int i = 0; i < n; ++i) {
    tp += q_plus(i, n);
    tm += q_minus(i, n);
    expect_equal(rep, "Q-[e_j] Q+_j = 1", {i}, q_minus(i, n).shifted(Weight::unit(i)) * q_plus(i, n),
                 Coeff(1));
  }
  expect_equal(rep, "Tr Q+ = n", {n - 1}, tp, Coeff(n));
  expect_equal(rep, "Tr Q- = n", {n - 1}, tm, Coeff(n));
  return rep;
}

}  // namespace diagred
