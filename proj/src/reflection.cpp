#include "diagred/reflection.hpp"

#include <algorithm>

namespace diagred {

namespace {

template <class Key>
void add_to(std::map<Key, Coeff>& m, const Key& k, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

}  // namespace

Weight entry_weight(int p, int q) { return Weight::unit(p) - Weight::unit(q); }

std::vector<SymbolicComponent> reflection_symbols(const Tensor4& r, const ReflectionShape& shape) {
  const int n = r.rank();
  const auto [la, lb, lc, ld] = shape.labels;
  std::vector<SymbolicComponent> out;
  out.reserve(static_cast<std::size_t>(n) * n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int t = 0; t < n; ++t)
        for (int s = 0; s < n; ++s) {
          SymbolicComponent c;
          c.free = {i, j, t, s};
          if (shape.quadratic) {
            // R^{ij}_{kl} L_A^k_m R^{ml}_{ps} L_B^p_t
            for (auto [k, l] : r.lower_support(i, j))
              for (int m = 0; m < n; ++m)
                for (auto [p, ss] : r.lower_support(m, l)) {
                  if (ss != s) continue;
                  const Coeff coef = r(i, j, k, l) * r(m, l, p, s).shifted(-entry_weight(k, m));
                  add_to(c.quadratic, QuadKey{la, k, m, lb, p, t}, coef);
                }
            // L_C^i_a R^{aj}_{bc} L_D^b_d R^{dc}_{ts}
            for (int a = 0; a < n; ++a)
              for (auto [b, cc] : r.lower_support(a, j))
                for (auto [d, c2] : r.upper_support(t, s)) {
                  if (c2 != cc) continue;
                  const Weight w1 = entry_weight(i, a);
                  const Coeff coef = r(a, j, b, cc).shifted(-w1) *
                                     r(d, cc, t, s).shifted(-(w1 + entry_weight(b, d)));
                  add_to(c.quadratic, QuadKey{lc, i, a, ld, b, d}, -coef);
                }
          }
          if (shape.linear) {
            const Coeff f(shape.linear_factor);
            // - R^{ij}_{ks} L^k_t + L^i_a R^{aj}_{ts}
            for (auto [k, ss] : r.lower_support(i, j)) {
              if (ss == s) add_to(c.linear, LinKey{la, k, t}, -(f * r(i, j, k, s)));
            }
            for (auto [a, jj] : r.upper_support(t, s)) {
              if (jj == j) add_to(c.linear, LinKey{la, i, a}, f * r(a, j, t, s).shifted(-entry_weight(i, a)));
            }
          }
          out.push_back(std::move(c));
        }
  return out;
}

void accumulate(SymbolicComponent& a, const SymbolicComponent& b) {
  for (const auto& [k, c] : b.quadratic) add_to(a.quadratic, k, c);
  for (const auto& [k, c] : b.linear) add_to(a.linear, k, c);
}

Element realize(const SymbolicComponent& c, const QuadRealizer& quad, const LinRealizer& lin) {
  Element out;
  for (const auto& [k, coef] : c.quadratic) out += quad(k).scaled(coef);
  for (const auto& [k, coef] : c.linear) out += lin(k).scaled(coef);
  return out;
}

}  // namespace diagred

namespace diagred {

Report reflection_residuals(const Alphabet& alphabet, const RewriteSystem& rules,
                            const std::vector<Matrix>& mats,
                            const std::vector<SymbolicComponent>& components,
                            const std::string& identity) {
  // Products are computed up front, grouped by the left factor so that each
  // group shares one engine.
  std::map<LinKey, std::vector<LinKey>> groups;
  for (const auto& c : components)
    for (const auto& [k, coef] : c.quadratic) {
      auto& right = groups[LinKey{k[0], k[1], k[2]}];
      const LinKey r{k[3], k[4], k[5]};
      if (std::find(right.begin(), right.end(), r) == right.end()) right.push_back(r);
    }
  std::vector<std::pair<LinKey, std::vector<LinKey>>> work(groups.begin(), groups.end());
  std::vector<std::vector<Element>> results(work.size());
  run_indexed(work.size(), [&](std::size_t g, Report&) {
    NormalFormEngine engine(alphabet, rules);
    const auto& [left, rights] = work[g];
    const Element& a = mats[left[0]][left[1]][left[2]];
    for (const auto& r : rights) results[g].push_back(engine.product(a, mats[r[0]][r[1]][r[2]]));
  });
  std::map<QuadKey, const Element*> products;
  for (std::size_t g = 0; g < work.size(); ++g) {
    const auto& [left, rights] = work[g];
    for (std::size_t k = 0; k < rights.size(); ++k) {
      const auto& r = rights[k];
      products[QuadKey{left[0], left[1], left[2], r[0], r[1], r[2]}] = &results[g][k];
    }
  }
  return run_indexed(components.size(), [&](std::size_t idx, Report& out) {
    const auto& c = components[idx];
    NormalFormEngine engine(alphabet, rules);
    Element residual = realize(
        c, [&](const QuadKey& k) { return *products.at(k); },
        [&](const LinKey& k) { return mats[k[0]][k[1]][k[2]]; });
    residual = engine.normal_form(residual);
    ++out.checks;
    if (!residual.is_zero()) {
      out.fail(identity, {c.free[0] + 1, c.free[1] + 1, c.free[2] + 1, c.free[3] + 1},
               alphabet.format(residual), "0");
    }
  });
}

}  // namespace diagred
