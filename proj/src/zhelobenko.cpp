#include "diagred/zhelobenko.hpp"

#include <numeric>
#include <stdexcept>

#include "diagred/special_elements.hpp"

namespace diagred {

namespace {

std::vector<int> transposition(int i, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[i], p[i + 1]);
  return p;
}

void expect_zero(Report& r, const WeylAlgebra& w, const char* identity, std::vector<int> idx, const Element& e) {
  ++r.checks;
  if (!e.is_zero()) r.fail(identity, std::move(idx), w.format(e), "0");
}

void expect_equal(Report& r, const WeylAlgebra& w, const char* identity, std::vector<int> idx, const Element& a,
                  const Element& b) {
  ++r.checks;
  if (!(a == b)) r.fail(identity, std::move(idx), w.format(a), w.format(b));
}

}  // namespace

Element zhelobenko_generator(const WeylAlgebra& w, int i, Gen g) {
  if (i < 0 || i + 1 >= w.n()) throw std::out_of_range("Zhelobenko index out of range");
  const int j = w.index_of(g);
  const int a = w.copy_of(g);
  const Coeff h = Coeff::hdiff(i, i + 1);
  if (w.is_x(g)) {
    // q(x^i) = -x^{i+1} h/(h-1) = -((h+1)/h) x^{i+1}
    if (j == i) return Element::word({w.x(i + 1, a)}, -(Coeff::hdiff(i, i + 1, 1) / h));
    if (j == i + 1) return w.gx(i, a);
    return w.gx(j, a);
  }
  if (j == i) return Element::word({w.d(i + 1, a)}, -(Coeff::hdiff(i, i + 1, -1) / h));
  if (j == i + 1) return w.gd(i, a);
  return w.gd(j, a);
}

Element zhelobenko(const WeylAlgebra& w, NormalFormEngine& engine, int i, const Element& e) {
  const auto perm = transposition(i, w.n());
  Element out;
  for (const auto& [word, c] : e.terms()) {
    Element image = Element::scalar(c.permuted(perm));
    for (Gen g : word) image = engine.product(image, zhelobenko_generator(w, i, g));
    out += image;
  }
  return out;
}

Report verify_zhelobenko(const WeylAlgebra& w) {
  Report rep;
  rep.suite = "zhelobenko";
  const int n = w.n();
  NormalFormEngine engine = w.engine();
  const auto relations = w.defining_relations();
  for (int i = 0; i + 1 < n; ++i)
    for (std::size_t k = 0; k < relations.size(); ++k) {
      expect_zero(rep, w, "image of a defining relation", {i + 1, static_cast<int>(k) + 1},
                  zhelobenko(w, engine, i, relations[k]));
    }
  for (int i = 0; i + 2 < n; ++i)
    for (Gen g = 0; g < w.alphabet().size(); ++g) {
      const Element x = Element::word({g});
      const Element left = zhelobenko(w, engine, i, zhelobenko(w, engine, i + 1, zhelobenko(w, engine, i, x)));
      const Element right =
          zhelobenko(w, engine, i + 1, zhelobenko(w, engine, i, zhelobenko(w, engine, i + 1, x)));
      expect_equal(rep, w, "braid relation", {i + 1, static_cast<int>(g) + 1}, left, right);
    }
  for (int i = 0; i + 1 < n; ++i)
    for (Gen g = 0; g < w.alphabet().size(); ++g) {
      const Element sq = zhelobenko(w, engine, i, zhelobenko(w, engine, i, Element::word({g})));
      rep.notes.push_back("q" + std::to_string(i + 1) + "^2(" + w.alphabet().name(g) + ") = " + w.format(sq));
    }
  rep.absorb(check_normal_ordered_action(w));
  return rep;
}

std::vector<Coeff> mu_by_propagation(int n) {
  const WeylAlgebra w(WeylConfig{n, 1});
  NormalFormEngine engine = w.engine();
  // d_j = phi_j^{-1}[e_j] D_j
  const auto del = [&](int j) { return Element::word({w.d(j, 0)}, phi(j, n).inverse().shifted(Weight::unit(j))); };
  const auto x = [&](int i) { return w.gx(i, 0); };
  // sum_j beta_ij d_j x^j
  const auto beta_sum = [&](int i) {
    Element s;
    for (int j = 0; j < n; ++j) s += multiply(w.alphabet(), del(j), x(j)).scaled(beta(i, j, n));
    return s;
  };
  const auto scalar_of = [](const Element& e) {
    if (e.is_zero()) return Coeff{};
    if (e.size() != 1 || !e.terms().begin()->first.empty()) {
      throw std::logic_error("propagation left non-scalar terms");
    }
    return e.terms().begin()->second;
  };
  std::vector<Coeff> mu(n);
  mu[n - 1] = scalar_of(engine.normal_form(multiply(w.alphabet(), x(n - 1), del(n - 1)) - beta_sum(n - 1)));
  for (int i = n - 2; i >= 0; --i) {
    // q_i(x^{i+1} d_{i+1}) = q_i(sum_j beta d x) + (s_i o mu_{i+1}); the left side
    // is a multiple k of x^i d_i.
    const Element lhs = zhelobenko(w, engine, i, multiply(w.alphabet(), x(i + 1), del(i + 1)));
    const Element target = engine.normal_form(multiply(w.alphabet(), x(i), del(i)));
    if (lhs.size() != 1 || target.size() != 1 || lhs.terms().begin()->first != target.terms().begin()->first) {
      throw std::logic_error("unexpected image of x d");
    }
    const Coeff k = target.terms().begin()->second / lhs.terms().begin()->second;
    Element rhs = zhelobenko(w, engine, i, beta_sum(i + 1));
    rhs += Element::scalar(mu[i + 1].permuted(transposition(i, n)));
    mu[i] = scalar_of(rhs.scaled(k) - engine.normal_form(beta_sum(i)));
  }
  return mu;
}

Report check_normal_ordered_action(const WeylAlgebra& w) {
  Report rep;
  rep.suite = "zhelobenko";
  const int n = w.n();
  NormalFormEngine engine = w.engine();
  for (int a = 0; a < w.copies(); ++a)
    for (int b = 0; b < w.copies(); ++b) {
      // prod[m] = x^{ma} d_{mb} = phi_m^{-1} x^{ma} D_{mb}
      std::vector<Element> prod(n), colon(n);
      for (int m = 0; m < n; ++m) prod[m] = Element::word({w.x(m, a), w.d(m, b)}, phi(m, n).inverse());
      // x d = :x d: - sum_{m>i} 1/(h_im phi_im) :x^m d_m:, solved from the bottom.
      for (int i = n - 1; i >= 0; --i) {
        colon[i] = prod[i];
        for (int m = i + 1; m < n; ++m) {
          colon[i] += colon[m].scaled((Coeff::hdiff(i, m) * phi_segment(i, m, n)).inverse());
        }
      }
      for (int i = 0; i + 1 < n; ++i) {
        const Coeff h = Coeff::hdiff(i, i + 1);
        const Coeff den = Coeff::hdiff(i, i + 1, -1).inverse();
        const Element first = colon[i].scaled(-den) + colon[i + 1].scaled(h * den);
        const Element second = colon[i].scaled(h * den) - colon[i + 1].scaled(den);
        expect_equal(rep, w, "action on :x^i d_i:", {i + 1, a + 1, b + 1}, zhelobenko(w, engine, i, colon[i]),
                     engine.normal_form(first));
        expect_equal(rep, w, "action on :x^{i+1} d_{i+1}:", {i + 1, a + 1, b + 1},
                     zhelobenko(w, engine, i, colon[i + 1]), engine.normal_form(second));
        for (int j = 0; j < n; ++j) {
          if (j == i || j == i + 1) continue;
          expect_equal(rep, w, "action on :x^j d_j:, j != i, i+1", {i + 1, j + 1, a + 1, b + 1},
                       zhelobenko(w, engine, i, colon[j]), engine.normal_form(colon[j]));
        }
      }
    }
  return rep;
}

Report check_variant_generators(int n) {
  Report rep;
  rep.suite = "zhelobenko";
  const WeylAlgebra w(WeylConfig{n, 1});
  NormalFormEngine engine = w.engine();
  const auto mul = [&](const Element& a, const Element& b) { return multiply(w.alphabet(), a, b); };
  const auto x = [&](int i) { return w.gx(i, 0); };
  const auto del = [&](int j) { return Element::word({w.d(j, 0)}, phi(j, n).inverse().shifted(Weight::unit(j))); };
  const auto dd = [&](int j) { return Element::word({w.d(j, 0)}, q_minus(j, n).shifted(Weight::unit(j))); };
  const auto zero = [&](const char* id, std::vector<int> idx, const Element& e) {
    expect_zero(rep, w, id, std::move(idx), engine.normal_form(e));
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j) {
        zero("x^i x^j = alpha_ij x^j x^i", {i + 1, j + 1}, mul(x(i), x(j)) - mul(x(j), x(i)).scaled(alpha(i, j, n)));
        zero("d_j d_i = alpha_ij d_i d_j", {i + 1, j + 1},
             mul(del(j), del(i)) - mul(del(i), del(j)).scaled(alpha(i, j, n)));
      }
      if (i != j) zero("x^i d_j = d_j x^i", {i + 1, j + 1}, mul(x(i), del(j)) - mul(del(j), x(i)));
    }
  for (int i = 0; i < n; ++i) {
    Element e = mul(x(i), del(i)) - Element::scalar(mu(i, n));
    for (int j = 0; j < n; ++j) e -= mul(del(j), x(j)).scaled(beta(i, j, n));
    zero("x^i d_i = beta_ij d_j x^j + mu_i", {i + 1}, e);
  }
  const Tensor4 r = build_r(n);
  const Tensor4 s = build_s(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element e = mul(dd(i), dd(j));
      for (auto [l, k] : r.upper_support(j, i)) e -= mul(dd(k), dd(l)).scaled(r(l, k, j, i));
      zero("doubly barred D D exchange", {i + 1, j + 1}, e);
      Element f = mul(dd(j), x(i));
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (!s(i, k, j, l).is_zero()) f -= mul(x(l), dd(k)).scaled(s(i, k, j, l));
      if (i == j) f -= Element::scalar(Coeff(1));
      zero("doubly barred D x exchange through S", {i + 1, j + 1}, f);
    }
  // D_i = Q+_i DD_i
  for (int i = 0; i < n; ++i) {
    ++rep.checks;
    const Element back = dd(i).scaled(q_plus(i, n));
    if (!(back == w.gd(i, 0))) rep.fail("D = Q+ DD", {i + 1}, w.format(back), w.format(w.gd(i, 0)));
  }
  return rep;
}

}  // namespace diagred
