#include "doctest.h"

#include <random>
#include <stdexcept>

#include "diagred/dra.hpp"
#include "diagred/special_elements.hpp"

using namespace diagred;

namespace {

DraAlgebra make(int n, GeneratorOrder order = GeneratorOrder::triangular, int copies = 1) {
  return DraAlgebra(DraConfig{n, copies, order});
}

const Element* rule_for(const DraAlgebra& a, const Element& word) {
  const Word w = word.terms().begin()->first;
  return a.rules().find(w[0], w[1]);
}

}  // namespace

TEST_CASE("tabulated rank 2 rules in their own order") {
  const DraAlgebra a = make(2, GeneratorOrder::off_diagonal_first);
  CHECK(a.independent_relations() == 6);
  const Element* r = rule_for(a, a.parse("L[1,1]*L[1,2]"));
  REQUIRE(r != nullptr);
  CHECK(*r == a.parse("(h1-h2-3)/(h1-h2-2)*L[1,2]*L[1,1] + 1/(h1-h2-2)*L[1,2]*L[2,2] + L[1,2]"));
  r = rule_for(a, a.parse("L[1,1]*L[2,2]"));
  REQUIRE(r != nullptr);
  CHECK(*r == a.parse("L[2,2]*L[1,1]"));
  // Coefficient of L21*L22 in the rule for L11*L21.
  r = rule_for(a, a.parse("L[1,1]*L[2,1]"));
  REQUIRE(r != nullptr);
  CHECK(r->coefficient(a.parse("L[2,1]*L[2,2]").terms().begin()->first) ==
        a.parse("-(h1-h2+3)/((h1-h2-1)*(h1-h2+2))").coefficient(Word{}));
  const Report rep = rank_two_regression();
  for (const auto& f : rep.failures) MESSAGE(f.identity << ": " << f.lhs << " vs " << f.rhs);
  CHECK(rep.passed());
}

TEST_CASE("relation counts") {
  CHECK(make(2).independent_relations() == 6);
  CHECK(make(3).independent_relations() == 36);
  CHECK(make(2).rules().size() == 6);
}

TEST_CASE("rewriting cycles in the plain orders") {
  const DraAlgebra lex = make(2, GeneratorOrder::lexicographic);
  NormalFormEngine e = lex.engine();
  CHECK_THROWS_AS(e.normal_form(lex.parse("L[1,2]*L[1,1]*L[1,2]")), std::runtime_error);
  const DraAlgebra app = make(3, GeneratorOrder::off_diagonal_first);
  NormalFormEngine f = app.engine();
  CHECK_THROWS_AS(f.normal_form(app.parse("L[1,2]*L[2,1]*L[1,3]")), std::runtime_error);
  const DraAlgebra tri = make(3);
  NormalFormEngine g = tri.engine();
  CHECK_NOTHROW(g.normal_form(tri.parse("L[1,2]*L[2,1]*L[1,3]")));
}

TEST_CASE("round trip and associativity") {
  for (int n : {2, 3}) CHECK(check_round_trip(make(n)).passed());
  CHECK(check_associativity(make(2)).passed());
  CHECK(check_associativity(make(2, GeneratorOrder::off_diagonal_first)).passed());
  CHECK(check_associativity(DraAlgebra(DraConfig{2, 1, GeneratorOrder::triangular, DraBasis::s})).passed());
}

TEST_CASE("normal form is idempotent and keeps the weight") {
  const DraAlgebra a = make(3);
  NormalFormEngine e = a.engine();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, 8);
  for (int k = 0; k < 30; ++k) {
    Word w{static_cast<Gen>(pick(rng)), static_cast<Gen>(pick(rng)), static_cast<Gen>(pick(rng))};
    const Element nf = e.normal_form(w);
    CHECK(e.normal_form(nf) == nf);
    for (const auto& [v, c] : nf.terms()) {
      CHECK(a.rules().is_normal(v));
      CHECK(a.alphabet().weight(v) == a.alphabet().weight(w));
    }
  }
}

TEST_CASE("central elements") {
  for (int n : {2, 3}) {
    const DraAlgebra a = make(n);
    NormalFormEngine e = a.engine();
    CHECK(central_element(a, e, a.l_matrix(), 0) == Element::scalar(Coeff(n)));
  }
  const DraAlgebra a = make(2);
  NormalFormEngine e = a.engine();
  CHECK(a.format(central_element(a, e, a.l_matrix(), 1)) ==
        "(h1-h2-1)/(h1-h2)*L[1,1] + (h1-h2+1)/(h1-h2)*L[2,2]");
  for (int power = 1; power <= 3; ++power) CHECK(check_central(a, power).passed());
  CHECK(check_central(make(3), 1).passed());
}

TEST_CASE("generator changes") {
  const Transition t = l_from_s(2);
  const Coeff h = Coeff::hdiff(0, 1);
  CHECK(t[0][0] == h / (h - Coeff(1)));
  CHECK(t[0][3] == -(Coeff(1) / (h - Coeff(1))));
  CHECK(t[1][1] == Coeff(1));
  CHECK(t[3][3] == Coeff(1));
  for (int n : {2, 3}) {
    const Transition m = l_from_s(n);
    const Transition inv = invert_triangular(m);
    const std::size_t k = m.size();
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) {
        Coeff s;
        for (std::size_t r = 0; r < k; ++r) s += m[p][r] * inv[r][q];
        CHECK(s == Coeff(p == q ? 1 : 0));
      }
    CHECK(check_generator_transforms(n).passed());
    CHECK(check_h_realization(n).passed());
  }
  Transition lower = l_from_s(2);
  lower[3][0] = Coeff(1);
  CHECK_THROWS_AS(invert_triangular(lower), std::logic_error);
}

TEST_CASE("L plus L prime is H") {
  const DraAlgebra a = make(3);
  const Matrix l = a.l_matrix();
  const Matrix lp = a.l_prime_matrix();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Element sum = l[i][j];
      sum += lp[i][j];
      CHECK(sum == (i == j ? Element::scalar(Coeff::var(j) + Coeff(3)) : Element{}));
    }
}

TEST_CASE("braided copies") {
  const DraAlgebra two = make(2, GeneratorOrder::triangular, 2);
  NormalFormEngine e = two.engine();
  // Words with the second copy first are reordered by homogeneous rules.
  const Element nf = e.normal_form(two.parse("L2[1,2]*L[1,1]"));
  for (const auto& [w, c] : nf.terms()) {
    CHECK(w.size() == 2);
    CHECK(two.indices(w[0])[0] == 0);
  }
  CHECK(coproduct_check(2).passed());
}

TEST_CASE("parse errors") {
  const DraAlgebra a = make(2);
  CHECK_THROWS_AS(a.parse("L[1,3]"), ParseError);
  CHECK_THROWS_AS(a.parse("L2[1,1]"), ParseError);
  CHECK_THROWS_AS(a.parse("L[1,1]/L[2,2]"), ParseError);
  CHECK_THROWS_AS(a.parse("L[1,1]/(h1*h2+1)"), ParseError);
}
