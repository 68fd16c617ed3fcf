#include <random>
#include <vector>

#include "doctest.h"

#include "diagred/coefficient.hpp"
#include "diagred/special_elements.hpp"

using namespace diagred;

namespace {

Coeff h(int i) { return Coeff::var(i - 1); }
Coeff hd(int i, int j, long s = 0) { return Coeff::hdiff(i - 1, j - 1, s); }

std::vector<mpq_class> random_point(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-400, 400);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<mpq_class> p;
  for (int i = 0; i < n; ++i) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

// Random element built from the operations used throughout the library.
Coeff random_coeff(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> op(0, 3);
  Coeff c(small(rng));
  for (int step = 0; step < 4; ++step) {
    int a = pick(rng);
    int b = pick(rng);
    Coeff atom = a == b ? Coeff::var(a) + Coeff(small(rng)) : Coeff::hdiff(a, b, small(rng));
    switch (op(rng)) {
      case 0: c += atom; break;
      case 1: c *= atom; break;
      case 2: c = c - atom * Coeff(small(rng)); break;
      default: c = c + atom.inverse(); break;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("field arithmetic basics") {
  CHECK(hd(1, 2) * hd(1, 2).inverse() == Coeff(1));
  CHECK((hd(1, 2, 1) / hd(1, 2)) - Coeff(1) == hd(1, 2).inverse());
  CHECK((h(1) + Coeff(1)) - h(1) == Coeff(1));
  CHECK(Coeff(0).is_zero());
  CHECK((h(1) - h(1)).is_zero());
  CHECK_THROWS_AS(h(1) / Coeff(0), ArithmeticError);
}

TEST_CASE("phi times mu is -1") {
  CHECK(phi(0, 2) * mu(0, 2) == Coeff(-1));
  CHECK(phi(0, 3) * mu(0, 3) == Coeff(-1));
}

TEST_CASE("shift automorphism") {
  CHECK(hd(1, 2).shifted(Weight::unit(0)) == hd(1, 2, 1));
  CHECK(hd(1, 2).shifted(Weight::unit(1)) == hd(1, 2, -1));
  const Coeff f = hd(1, 2, 3) / (hd(1, 3) * h(2));
  CHECK(f.shifted(Weight{}) == f);
}

TEST_CASE("weyl permutation and sign change") {
  const std::vector<int> swap12 = {1, 0};
  CHECK(hd(1, 2).permuted(swap12) == -hd(1, 2));
  CHECK(hd(1, 2).permuted(swap12) == hd(2, 1));
  CHECK(q_minus(0, 2).negated_h() == q_plus(0, 2));
  CHECK(Coeff(1).negated_h() == Coeff(1));
  CHECK((hd(1, 2) + Coeff(1)).negated_h() == -hd(1, 2) + Coeff(1));
}

TEST_CASE("special elements at rank 2") {
  CHECK(phi(0, 2) == hd(1, 2) / hd(1, 2, -1));
  CHECK(phi(1, 2) == Coeff(1));
  CHECK(q_minus(0, 2) == hd(1, 2, -1) / hd(1, 2));
  CHECK(q_minus(1, 2) == hd(1, 2, 1) / hd(1, 2));
  CHECK(mu(1, 2) == Coeff(-1));
  CHECK(phi_segment(0, 1, 2) == Coeff(1));
  CHECK(alpha(0, 1, 2) == hd(1, 2, 1) / hd(1, 2));
  CHECK_THROWS_AS(phi(2, 2), std::out_of_range);
}

TEST_CASE("shifted Q- times Q+ is 1 and traces equal the rank") {
  for (int n = 1; n <= 6; ++n) {
    Coeff tp, tm;
    for (int j = 0; j < n; ++j) {
      CHECK(q_minus(j, n).shifted(Weight::unit(j)) * q_plus(j, n) == Coeff(1));
      tp += q_plus(j, n);
      tm += q_minus(j, n);
    }
    CHECK(tp == Coeff(n));
    CHECK(tm == Coeff(n));
  }
}

TEST_CASE("serialization") {
  CHECK((hd(1, 2, 1) / hd(1, 2)).to_string() == "(h1-h2+1)/(h1-h2)");
  CHECK(hd(1, 2).pow(-2).to_string() == "1/(h1-h2)^2");
  CHECK(h(1).to_string() == "h1");
  CHECK((Coeff(3) / Coeff(2) * h(1) * h(1)).to_string() == "3*h1^2/2");
  CHECK((hd(1, 2, 1) * hd(1, 2) / (Coeff(2) * hd(1, 2, -1))).to_string() == "(h1^2-2*h1*h2+h2^2+h1-h2)/(2*(h1-h2-1))");
  CHECK((-hd(1, 2).inverse()).to_string() == "-1/(h1-h2)");
}

TEST_CASE("parse round trip") {
  for (const char* text : {"(h1-h2+1)/(h1-h2)", "h1", "1/(h1-h2)^2", "-1/(h1-h2)",
                           "(h1^2-2*h1*h2+h2^2+h1-h2)/(2*(h1-h2-1))", "0", "7/3"}) {
    CAPTURE(text);
    CHECK(parse_coeff(text).to_string() == text);
  }
  CHECK(parse_coeff("(h1-h2)^2/(h1-h2)") == hd(1, 2));
  CHECK(parse_coeff("h1*h1-h2^2") == (h(1) - h(2)) * (h(1) + h(2)));
  CHECK(parse_coeff("1/((h1-h2)*(h1-h2+2))") == (hd(1, 2) * hd(1, 2, 2)).inverse());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_coeff("h1 + * 2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_coeff("h9"), ParseError);
  CHECK_THROWS_AS(parse_coeff("1/(h1-h1)"), ParseError);
  CHECK_THROWS_AS(parse_coeff("(h1"), ParseError);
}

TEST_CASE("inversion requires linear factors") {
  CHECK_THROWS_AS((h(1) * h(1) + Coeff(1)).inverse(), ArithmeticError);
  const Coeff p = hd(1, 2, 3) * hd(2, 3, -5) * (h(1) + Coeff(4));
  CHECK(p * p.inverse() == Coeff(1));
}

TEST_CASE("canonical form agrees with evaluation on random elements") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    const Coeff a = random_coeff(rng, n);
    const Coeff b = random_coeff(rng, n);
    const Coeff c = random_coeff(rng, n);
    const auto pt = random_point(rng, n);
    try {
      const mpq_class va = a.evaluate(pt), vb = b.evaluate(pt), vc = c.evaluate(pt);
      CHECK((a + b).evaluate(pt) == va + vb);
      CHECK((a * b).evaluate(pt) == va * vb);
      CHECK((a - c).evaluate(pt) == va - vc);
      CHECK(((a + b) * c) == (a * c + b * c));
      CHECK(((a - b) + b) == a);
    } catch (const ArithmeticError&) {
      // Sample point hit a pole.
    }
    // Shift is a ring homomorphism and composes additively.
    Weight w1 = Weight::unit(trial % n), w2 = -Weight::unit((trial + 1) % n);
    CHECK((a * b).shifted(w1) == a.shifted(w1) * b.shifted(w1));
    CHECK((a + b).shifted(w1) == a.shifted(w1) + b.shifted(w1));
    CHECK(a.shifted(w1).shifted(w2) == a.shifted(w1 + w2));
    CHECK(a.negated_h().negated_h() == a);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = (i + 1) % n;
    CHECK((a * b).permuted(perm) == a.permuted(perm) * b.permuted(perm));
    CHECK((a - b).permuted(perm) == a.permuted(perm) - b.permuted(perm));
    CHECK(parse_coeff(a.to_string()) == a);
  }
}
