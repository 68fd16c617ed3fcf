#include "doctest.h"

#include "diagred/special_elements.hpp"
#include "diagred/zhelobenko.hpp"

using namespace diagred;

namespace {

WeylAlgebra make(int n) { return WeylAlgebra(WeylConfig{n, 1}); }

// prod_{k>i} h~_ik / (h~_ik - 1), written out from differences directly.
Coeff phi_by_hand(int i, int n) {
  Coeff p(1);
  for (int k = i + 1; k < n; ++k) p = p * Coeff::hdiff(i, k) / Coeff::hdiff(i, k, -1);
  return p;
}

}  // namespace

TEST_CASE("q_1 on the generators of rank 2") {
  const WeylAlgebra w = make(2);
  const Coeff h = Coeff::hdiff(0, 1);
  CHECK(zhelobenko_generator(w, 0, w.x(0, 0)) == Element::word({w.x(1, 0)}, -(h + Coeff(1)) / h));
  CHECK(zhelobenko_generator(w, 0, w.x(1, 0)) == w.gx(0, 0));
  CHECK(zhelobenko_generator(w, 0, w.d(0, 0)) == Element::word({w.d(1, 0)}, -(h - Coeff(1)) / h));
  CHECK(zhelobenko_generator(w, 0, w.d(1, 0)) == w.gd(0, 0));
}

TEST_CASE("q_i permutes the Cartan variables of coefficients") {
  const WeylAlgebra w = make(3);
  NormalFormEngine e = w.engine();
  CHECK(zhelobenko(w, e, 0, Element::scalar(Coeff::var(0))) == Element::scalar(Coeff::var(1)));
  CHECK(zhelobenko(w, e, 1, Element::scalar(Coeff::var(0))) == Element::scalar(Coeff::var(0)));
  CHECK(zhelobenko(w, e, 1, Element::scalar(Coeff::hdiff(0, 2))) == Element::scalar(Coeff::hdiff(0, 1)));
}

TEST_CASE("relation images and braid relations") {
  for (int n : {2, 3}) {
    const Report r = verify_zhelobenko(make(n));
    for (const auto& f : r.failures) MESSAGE(f.identity << ": " << f.lhs);
    CHECK(r.passed());
    // The square is recorded, not asserted.
    CHECK_FALSE(r.notes.empty());
  }
}

TEST_CASE("mu constants from propagation") {
  for (int n : {2, 3}) {
    const std::vector<Coeff> m = mu_by_propagation(n);
    REQUIRE(m.size() == static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      CHECK(m[i] == -phi_by_hand(i, n).inverse());
      CHECK(m[i] == mu(i, n));
    }
  }
  CHECK(mu_by_propagation(2)[1] == Coeff(-1));
}

TEST_CASE("normally ordered products and rescaled derivatives") {
  for (int n : {2, 3}) {
    CHECK(check_normal_ordered_action(make(n)).passed());
    CHECK(check_variant_generators(n).passed());
  }
}
