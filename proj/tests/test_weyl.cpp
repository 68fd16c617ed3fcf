#include "doctest.h"

#include "diagred/reflection.hpp"
#include "diagred/weyl.hpp"

using namespace diagred;

namespace {

Coeff hd(int i, int j, long s = 0) { return Coeff::hdiff(i - 1, j - 1, s); }

WeylAlgebra make(int n, int copies, Statistics stats = Statistics::bosonic,
                 CrossConstant cross = CrossConstant::kronecker,
                 FermionConstant fermion = FermionConstant::anticommuting) {
  return WeylAlgebra(WeylConfig{n, copies, stats, cross, fermion});
}

}  // namespace

TEST_CASE("free multiplication moves coefficients left") {
  const WeylAlgebra w = make(2, 1);
  const Element a = w.gd(0, 0);
  const Element b = Element::word({w.x(0, 0)}, hd(1, 2));
  const Element p = multiply(w.alphabet(), a, b);
  CHECK(p == Element::word({w.d(0, 0), w.x(0, 0)}, hd(1, 2, 1)));
  CHECK(multiply(w.alphabet(), Element::word({w.x(0, 0)}, hd(1, 2)), w.gd(1, 0)) ==
        Element::word({w.x(0, 0), w.d(1, 0)}, hd(1, 2)));
}

TEST_CASE("D x exchange at rank 2") {
  const WeylAlgebra w = make(2, 1);
  NormalFormEngine e = w.engine();
  const Coeff h = hd(1, 2);
  Element expected;
  expected.add(Word{w.x(0, 0), w.d(0, 0)}, (h * h - Coeff(1)) / (h * h));
  expected.add(Word{w.x(1, 0), w.d(1, 0)}, hd(1, 2, 1) / (h * h));
  expected.add(Word{}, hd(1, 2, 1) / h);
  CHECK(e.normal_form(Word{w.d(0, 0), w.x(0, 0)}) == expected);
  CHECK(w.format(expected) == "(h1-h2+1)/(h1-h2) + (h1^2-2*h1*h2+h2^2-1)/(h1-h2)^2*x[1,1]*D[1,1] + (h1-h2+1)/(h1-h2)^2*x[2,1]*D[2,1]");
  // Substituting back into the forward relation gives zero.
  for (const Element& rel : w.defining_relations()) CHECK(e.normal_form(rel).is_zero());
}

TEST_CASE("closed-form D x rules agree with elimination") {
  for (int n = 1; n <= 3; ++n)
    for (int copies = 1; copies <= 2; ++copies)
      for (auto stats : {Statistics::bosonic, Statistics::fermionic})
        for (auto cross : {CrossConstant::kronecker, CrossConstant::every_copy}) {
          const WeylAlgebra w = make(n, copies, stats, cross);
          const RewriteSystem solved = w.d_x_rules_by_elimination();
          for (const auto& [key, rhs] : solved.all()) {
            const Element* mine = w.rules().find(static_cast<Gen>(key >> 16), static_cast<Gen>(key & 0xffff));
            REQUIRE(mine != nullptr);
            CHECK(*mine == rhs);
          }
        }
}

TEST_CASE("same-index exchange across copies") {
  const WeylAlgebra b = make(2, 2);
  NormalFormEngine eb = b.engine();
  CHECK(eb.normal_form(Word{b.x(0, 1), b.x(0, 0)}) == Element::word({b.x(0, 0), b.x(0, 1)}));
  const WeylAlgebra f = make(2, 2, Statistics::fermionic);
  NormalFormEngine ef = f.engine();
  CHECK(ef.normal_form(Word{f.x(0, 1), f.x(0, 0)}) == Element::word({f.x(0, 0), f.x(0, 1)}, Coeff(-1)));
  CHECK(ef.normal_form(Word{f.x(1, 0), f.x(1, 0)}).is_zero());
}

TEST_CASE("normal form is idempotent and weight preserving") {
  const WeylAlgebra w = make(3, 2);
  NormalFormEngine e = w.engine();
  const Element src = w.parse("D[3,2]*x[1,1]*D[1,1]*x[3,2] + h1*D[2,1]*x[2,2]*x[1,2]");
  const Element nf = e.normal_form(src);
  CHECK(e.normal_form(nf) == nf);
  for (const auto& [word, c] : nf.terms()) {
    CHECK(w.rules().is_normal(word));
    const Weight wt = w.alphabet().weight(word);
    CHECK((wt == Weight{} || wt == Weight::unit(0)));
  }
}

TEST_CASE("parser") {
  const WeylAlgebra w = make(2, 1);
  CHECK(w.parse("D[1]*x[1]") == w.parse("D[1,1]*x[1,1]"));
  CHECK(w.parse("x[1]*h1") == Element::word({w.x(0, 0)}, Coeff::var(0) - Coeff(1)));
  CHECK(w.parse("x[1]/(h1-h2)") == Element::word({w.x(0, 0)}, hd(1, 2, -1).inverse()));
  CHECK_THROWS_AS(w.parse("x[3,1]"), ParseError);
  CHECK_THROWS_AS(w.parse("x[1]/x[2]"), ParseError);
  CHECK_THROWS_AS(w.parse("y[1]"), ParseError);
}

TEST_CASE("Ltilde entries") {
  const WeylAlgebra w = make(2, 2);
  const auto l = ltilde(w);
  CHECK(w.format(l[0][1]) == "x[1,1]*D[2,1] + x[1,2]*D[2,2]");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (const auto& [word, c] : l[i][j].terms())
        CHECK(w.alphabet().weight(word) == entry_weight(i, j));
}

TEST_CASE("confluence at small size") {
  for (auto stats : {Statistics::bosonic, Statistics::fermionic}) {
    const Report r = check_confluence(make(2, 2, stats));
    CHECK(r.passed());
    CHECK(r.checks == 512);
  }
}

TEST_CASE("reflection equation for Ltilde at rank 2") {
  const Report r = verify_reflection(make(2, 1));
  for (const auto& f : r.failures) MESSAGE(f.identity << " " << f.lhs);
  CHECK(r.passed());
}

TEST_CASE("split realization in two and three copies") {
  for (int copies : {2, 3}) {
    CHECK(split_realization(make(2, copies), 1).passed());
    // With a constant for every pair of copies the blocks stop commuting.
    CHECK_FALSE(split_realization(make(2, copies, Statistics::bosonic, CrossConstant::every_copy), 1).passed());
  }
}
