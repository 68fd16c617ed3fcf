#include "diagred/weyl.hpp"

#include <stdexcept>

#include "diagred/expression_parser.hpp"
#include "diagred/reflection.hpp"

namespace diagred {

std::string to_string(Statistics s) { return s == Statistics::bosonic ? "bosonic" : "fermionic"; }

std::optional<Statistics> parse_statistics(const std::string& s) {
  if (s == "bosonic") return Statistics::bosonic;
  if (s == "fermionic") return Statistics::fermionic;
  return std::nullopt;
}

namespace {

Alphabet weyl_alphabet(int n, int copies) {
  std::vector<Weight> weights;
  std::vector<std::string> names;
  for (int kind = 0; kind < 2; ++kind)
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < copies; ++a) {
        weights.push_back(kind == 0 ? Weight::unit(i) : -Weight::unit(i));
        names.push_back(std::string(kind == 0 ? "x[" : "D[") + std::to_string(i + 1) + "," +
                        std::to_string(a + 1) + "]");
      }
  return Alphabet(n, std::move(weights), std::move(names));
}

}  // namespace

WeylAlgebra::WeylAlgebra(const WeylConfig& config)
    : config_(config),
      r_(build_r(config.n)),
      t_(build_t(config.n)),
      psi_(build_psi(config.n)),
      alphabet_(weyl_alphabet(config.n, config.copies)) {
  if (config.n < 1 || config.copies < 1) throw std::invalid_argument("n and N must be positive");
  build_same_kind_rules(true);
  build_same_kind_rules(false);
  build_d_x_rules();
}

int WeylAlgebra::x_d_constant() const {
  if (config_.stats == Statistics::fermionic && config_.fermion == FermionConstant::anticommuting) {
    return -1;
  }
  return 1;
}

std::vector<Element> WeylAlgebra::defining_relations() const {
  const int n = this->n(), m = copies();
  const Coeff eps(sign());
  std::vector<Element> out;
  // x^{ia} x^{jb} = eps R^{ij}_{kl} x^{kb} x^{la}
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < m; ++b) {
          Element e = Element::word({x(i, a), x(j, b)});
          for (auto [k, l] : r_.lower_support(i, j)) e.add(Word{x(k, b), x(l, a)}, -(eps * r_(i, j, k, l)));
          out.push_back(std::move(e));
        }
  // D_{ia} D_{jb} = eps R^{lk}_{ji} D_{kb} D_{la}
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < m; ++b) {
          Element e = Element::word({d(i, a), d(j, b)});
          for (auto [l, k] : r_.upper_support(j, i)) e.add(Word{d(k, b), d(l, a)}, -(eps * r_(l, k, j, i)));
          out.push_back(std::move(e));
        }
  // x^{ia} D_{jb} = eps T^{ik}_{jl} D_{kb} x^{la} - c delta
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < m; ++b) {
          Element e = Element::word({x(i, a), d(j, b)});
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) e.add(Word{d(k, b), x(l, a)}, -(eps * t_(i, k, j, l)));
          if (i == j && copies_couple(a, b)) e.add(Word{}, Coeff(x_d_constant()));
          out.push_back(std::move(e));
        }
  return out;
}

void WeylAlgebra::build_same_kind_rules(bool for_x) {
  const auto all = defining_relations();
  const std::size_t block = static_cast<std::size_t>(n()) * n() * copies() * copies();
  std::vector<Element> rows(all.begin() + (for_x ? 0 : block), all.begin() + (for_x ? block : 2 * block));
  std::vector<Word> targets;
  const int count = n() * copies();
  const int base = for_x ? 0 : count;
  for (int p = 0; p < count; ++p)
    for (int q = 0; q <= p; ++q) {
      if (p == q && sign() == 1) continue;
      targets.push_back({static_cast<Gen>(base + p), static_cast<Gen>(base + q)});
    }
  Elimination sol = eliminate(std::move(rows), targets);
  if (!sol.unsolved.empty() || !sol.leftover.empty()) {
    throw std::logic_error("exchange relations of one kind are not solvable for unordered words");
  }
  for (auto& [w, rhs] : sol.solved) rules_.set(w[0], w[1], std::move(rhs));
}

void WeylAlgebra::build_d_x_rules() {
  const int n = this->n(), m = copies();
  const Coeff eps(sign());
  // D_{jb} x^{ia} = eps Psi^{ik}_{jl} (x^{la} D_{kb} + c delta^l_k)
  for (int j = 0; j < n; ++j)
    for (int b = 0; b < m; ++b)
      for (int i = 0; i < n; ++i)
        for (int a = 0; a < m; ++a) {
          Element rhs;
          Coeff constant;
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              const Coeff& p = psi_(i, k, j, l);
              if (p.is_zero()) continue;
              rhs.add(Word{x(l, a), d(k, b)}, eps * p);
              if (k == l) constant += p;
            }
          if (copies_couple(a, b)) rhs.add(Word{}, eps * Coeff(x_d_constant()) * constant);
          rules_.set(d(j, b), x(i, a), std::move(rhs));
        }
}

RewriteSystem WeylAlgebra::d_x_rules_by_elimination() const {
  const int n = this->n(), m = copies();
  const auto all = defining_relations();
  const std::size_t block = static_cast<std::size_t>(n) * n * m * m;
  RewriteSystem out;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<Element> rows;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          // Index of the relation for x^{ia} D_{jb} in defining_relations().
          rows.push_back(all[2 * block + ((static_cast<std::size_t>(i) * m + a) * n + j) * m + b]);
        }
      std::vector<Word> targets;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) targets.push_back({d(j, b), x(i, a)});
      Elimination sol = eliminate(std::move(rows), targets);
      if (!sol.unsolved.empty() || !sol.leftover.empty()) {
        throw std::logic_error("x-D relations are not solvable for D-first words");
      }
      for (auto& [w, rhs] : sol.solved) out.set(w[0], w[1], std::move(rhs));
    }
  return out;
}

// ------------------------------------------------------------------ parsing

namespace {

struct WeylOps {
  using Value = Element;
  const WeylAlgebra* w;

  Value integer(const mpz_class& z) { return Element::scalar(Coeff(mpq_class(z))); }
  Value atom(const std::string& name, const std::vector<long>& idx, std::size_t pos) {
    const auto bad = [&](const std::string& why) {
      return ParseError(why + " at position " + std::to_string(pos), pos);
    };
    if (name == "h") {
      if (idx.size() != 1 || idx[0] < 1 || idx[0] > w->n()) throw bad("bad coefficient variable");
      return Element::scalar(Coeff::var(static_cast<int>(idx[0] - 1)));
    }
    if (name != "x" && name != "D") throw bad("unknown symbol '" + name + "'");
    long i = 0, a = 1;
    if (idx.size() == 2) {
      i = idx[0];
      a = idx[1];
    } else if (idx.size() == 1 && w->copies() == 1) {
      i = idx[0];
    } else {
      throw bad("generator needs [index,copy]");
    }
    if (i < 1 || i > w->n() || a < 1 || a > w->copies()) throw bad("generator index out of range");
    const int ii = static_cast<int>(i - 1), aa = static_cast<int>(a - 1);
    return name == "x" ? w->gx(ii, aa) : w->gd(ii, aa);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return multiply(w->alphabet(), a, b); }
  Value neg(const Value& a) { return -a; }
  Value div(const Value& a, const Value& b, std::size_t pos) {
    if (b.size() != 1 || !b.terms().begin()->first.empty()) {
      throw ParseError("division only by coefficients at position " + std::to_string(pos), pos);
    }
    try {
      return multiply(w->alphabet(), a, Element::scalar(b.terms().begin()->second.inverse()));
    } catch (const ArithmeticError& e) {
      throw ParseError(std::string(e.what()) + " at position " + std::to_string(pos), pos);
    }
  }
  Value pow(const Value& a, long e, std::size_t pos) {
    if (e < 0) {
      if (a.size() == 1 && a.terms().begin()->first.empty()) {
        try {
          return Element::scalar(a.terms().begin()->second.pow(static_cast<int>(e)));
        } catch (const ArithmeticError& err) {
          throw ParseError(std::string(err.what()) + " at position " + std::to_string(pos), pos);
        }
      }
      throw ParseError("negative power of a generator at position " + std::to_string(pos), pos);
    }
    Element out = Element::scalar(Coeff(1));
    for (long k = 0; k < e; ++k) out = multiply(w->alphabet(), out, a);
    return out;
  }
};

}  // namespace

Element WeylAlgebra::parse(const std::string& text) const {
  WeylOps ops{this};
  return ExpressionParser<WeylOps>(text, ops).parse();
}

// ------------------------------------------------------------ verification

std::vector<std::vector<Element>> ltilde(const WeylAlgebra& w, int first, int last) {
  if (last < 0) last = w.copies();
  const int n = w.n();
  std::vector<std::vector<Element>> l(n, std::vector<Element>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = first; a < last; ++a) l[i][j].add(Word{w.x(i, a), w.d(j, a)}, Coeff(1));
  return l;
}

Report check_confluence(const WeylAlgebra& w) {
  const std::size_t g = w.alphabet().size();
  Report rep = run_indexed(g, [&](std::size_t first, Report& out) {
    NormalFormEngine engine = w.engine();
    const Element a = Element::word({static_cast<Gen>(first)});
    for (std::size_t s = 0; s < g; ++s)
      for (std::size_t t = 0; t < g; ++t) {
        const Element b = Element::word({static_cast<Gen>(s)});
        const Element c = Element::word({static_cast<Gen>(t)});
        const Element left = engine.product(engine.product(a, b), c);
        const Element right = engine.product(a, engine.product(b, c));
        ++out.checks;
        if (!(left == right)) {
          out.fail("associativity", {static_cast<int>(first) + 1, static_cast<int>(s) + 1, static_cast<int>(t) + 1},
                   w.format(left), w.format(right));
        }
      }
  });
  rep.suite = "weyl";
  return rep;
}

Report verify_reflection(const WeylAlgebra& w) {
  const auto comps = reflection_symbols(w.r_matrix(), ReflectionShape{});
  Report rep = reflection_residuals(w.alphabet(), w.rules(), {ltilde(w)}, comps, "reflection equation for Ltilde");
  rep.suite = "weyl";
  return rep;
}

Report split_realization(const WeylAlgebra& w, int nu) {
  if (nu < 1 || nu >= w.copies()) throw std::invalid_argument("split point must satisfy 1 <= nu < N");
  const std::vector<Matrix> mats = {ltilde(w, 0, nu), ltilde(w, nu, w.copies())};
  Report rep;
  rep.suite = "weyl";
  rep.absorb(reflection_residuals(w.alphabet(), w.rules(), mats,
                                  reflection_symbols(w.r_matrix(), ReflectionShape{{0, 0, 0, 0}}),
                                  "reflection equation for the first block"));
  rep.absorb(reflection_residuals(w.alphabet(), w.rules(), mats,
                                  reflection_symbols(w.r_matrix(), ReflectionShape{{1, 1, 1, 1}}),
                                  "reflection equation for the second block"));
  rep.absorb(reflection_residuals(w.alphabet(), w.rules(), mats,
                                  reflection_symbols(w.r_matrix(), ReflectionShape{{0, 1, 1, 0}, false}),
                                  "braided cross relation"));
  // M + Mt = Ltilde entrywise.
  const auto full = ltilde(w);
  for (int i = 0; i < w.n(); ++i)
    for (int j = 0; j < w.n(); ++j) {
      ++rep.checks;
      const Element sum = mats[0][i][j] + mats[1][i][j];
      if (!(sum == full[i][j])) rep.fail("block sum is Ltilde", {i + 1, j + 1}, w.format(sum), w.format(full[i][j]));
    }
  return rep;
}

}  // namespace diagred
