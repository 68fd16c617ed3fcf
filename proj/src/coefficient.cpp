#include "diagred/coefficient.hpp"

#include <algorithm>
#include <functional>

#include "diagred/expression_parser.hpp"

namespace diagred {

namespace {

// Arithmetic modulo a Mersenne prime, used to reject non-divisors cheaply.
constexpr std::uint64_t kPrime = 2147483647ull;
constexpr std::array<std::uint64_t, kMaxRank> kSample = {
    1299721ull, 15485867ull, 32452843ull, 49979687ull,
    67867979ull, 86028157ull, 104395303ull};

std::uint64_t mod_prime(const mpz_class& z) {
  return mpz_fdiv_ui(z.get_mpz_t(), kPrime);
}

std::uint64_t pow_mod(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e > 0) {
    if (e & 1u) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

std::uint64_t eval_mod(const Poly& p, const std::array<std::uint64_t, kMaxRank>& at) {
  std::uint64_t sum = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t v = mod_prime(t.coefficient);
    for (int var = 0; var < kMaxRank && v != 0; ++var) {
      const unsigned e = t.monomial.exponent(var);
      if (e != 0) v = v * pow_mod(at[var], e) % kPrime;
    }
    sum = (sum + v) % kPrime;
  }
  return sum;
}

// Coefficient of variable var in a linear form.
mpz_class linear_coefficient(const Poly& form, int var) {
  for (const auto& t : form.terms()) {
    if (t.monomial.degree() == 1 && t.monomial.exponent(var) == 1) return t.coefficient;
  }
  return 0;
}

// Quotient N / form when the linear form divides N.
std::optional<Poly> divide_by_linear(const Poly& n, const Poly& form) {
  for (int v = 0; v < kMaxRank; ++v) {
    const mpz_class a = linear_coefficient(form, v);
    if (a != 1 && a != -1) continue;
    // Put the point on the hyperplane form = 0 and test N there.
    auto at = kSample;
    at[v] = 0;
    const std::uint64_t rest = eval_mod(form, at);
    at[v] = a == 1 ? (kPrime - rest) % kPrime : rest;
    if (eval_mod(n, at) != 0) return std::nullopt;
    break;
  }
  return n.divide_exact(form);
}

bool factor_less(const LinearFactor& a, const LinearFactor& b) {
  return compare(a.form, b.form) < 0;
}

Poly linear(int a, int b, long k) {
  Poly p = Poly::variable(a) + Poly(k);
  if (b >= 0) p -= Poly::variable(b);
  return p;
}

// Sorts, merges, drops zero exponents. Negative exponents stay for the caller.
void merge_factors(std::vector<LinearFactor>& f) {
  std::sort(f.begin(), f.end(), factor_less);
  std::vector<LinearFactor> out;
  for (auto& x : f) {
    if (!out.empty() && out.back().form == x.form) {
      out.back().exponent += x.exponent;
    } else {
      out.push_back(std::move(x));
    }
  }
  std::erase_if(out, [](const LinearFactor& x) { return x.exponent == 0; });
  f = std::move(out);
}

Poly expand(const std::vector<LinearFactor>& factors) {
  Poly p(1);
  for (const auto& f : factors) {
    for (int e = 0; e < f.exponent; ++e) p *= f.form;
  }
  return p;
}

std::size_t combine(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

}  // namespace

// ------------------------------------------------------------ construction

Coeff::Coeff(long value) : Coeff(mpq_class(value)) {}

Coeff::Coeff(const mpq_class& value) {
  if (value != 0) *this = from_rep(Rep{value, Poly(1), {}, 0});
}

Coeff Coeff::var(int k) { return make(1, Poly::variable(k), {}); }

Coeff Coeff::hdiff(int i, int j, long shift) {
  Poly p = Poly::variable(i) - Poly::variable(j) + Poly(shift);
  return make(1, p, {});
}

Coeff Coeff::from_rep(Rep rep) {
  std::size_t h = std::hash<long>{}(mpz_get_si(rep.scalar.get_num_mpz_t()));
  h = combine(h, std::hash<long>{}(mpz_get_si(rep.scalar.get_den_mpz_t())));
  h = combine(h, rep.numerator.hash());
  for (const auto& f : rep.factors) {
    h = combine(h, f.form.hash());
    h = combine(h, static_cast<std::size_t>(f.exponent));
  }
  rep.hash = h;
  return Coeff(std::make_shared<const Rep>(std::move(rep)));
}

Coeff Coeff::make(const mpq_class& scalar, const Poly& numerator,
                  std::vector<LinearFactor> factors) {
  if (scalar == 0 || numerator.is_zero()) return Coeff{};
  Rep rep{scalar, numerator, {}, 0};
  rep.scalar *= rep.numerator.make_primitive();
  for (auto& f : factors) {
    if (f.exponent == 0) continue;
    if (f.form.is_zero()) throw ArithmeticError("division by zero");
    if (f.form.total_degree() > 1) {
      throw std::logic_error("denominator factor is not linear: " + f.form.to_string());
    }
    mpz_class c = f.form.make_primitive();
    mpq_class cq(c);
    if (f.exponent > 0) {
      for (int e = 0; e < f.exponent; ++e) rep.scalar /= cq;
    } else {
      for (int e = 0; e < -f.exponent; ++e) rep.scalar *= cq;
    }
    if (f.form.is_constant()) f.exponent = 0;
  }
  merge_factors(factors);
  for (auto& f : factors) {
    if (f.exponent < 0) {
      for (int e = 0; e < -f.exponent; ++e) rep.numerator *= f.form;
      f.exponent = 0;
    }
  }
  for (auto& f : factors) {
    while (f.exponent > 0) {
      auto q = divide_by_linear(rep.numerator, f.form);
      if (!q) break;
      rep.numerator = std::move(*q);
      --f.exponent;
    }
  }
  std::erase_if(factors, [](const LinearFactor& x) { return x.exponent == 0; });
  rep.factors = std::move(factors);
  rep.scalar.canonicalize();
  return from_rep(std::move(rep));
}

// --------------------------------------------------------------- accessors

namespace {
const mpq_class& zero_scalar() {
  static const mpq_class z(0);
  return z;
}
const Poly& one_poly() {
  static const Poly p(1);
  return p;
}
const std::vector<LinearFactor>& no_factors() {
  static const std::vector<LinearFactor> v;
  return v;
}
}  // namespace

const mpq_class& Coeff::scalar() const { return rep_ ? rep_->scalar : zero_scalar(); }
const Poly& Coeff::numerator() const { return rep_ ? rep_->numerator : one_poly(); }
const std::vector<LinearFactor>& Coeff::factors() const {
  return rep_ ? rep_->factors : no_factors();
}

bool Coeff::is_one() const {
  return rep_ && rep_->scalar == 1 && rep_->numerator.is_one() && rep_->factors.empty();
}

bool Coeff::is_constant() const {
  return !rep_ || (rep_->numerator.is_constant() && rep_->factors.empty());
}

int Coeff::rank_used() const {
  int r = numerator().last_variable();
  for (const auto& f : factors()) r = std::max(r, f.form.last_variable());
  return r + 1;
}

// -------------------------------------------------------------- arithmetic

Coeff Coeff::operator-() const {
  if (!rep_) return *this;
  Rep r = *rep_;
  r.scalar = -r.scalar;
  return from_rep(std::move(r));
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  // Common denominator: maximum exponent of each factor.
  std::vector<LinearFactor> lcm;
  std::vector<LinearFactor> extra_a;
  std::vector<LinearFactor> extra_b;
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && factor_less(fa[i], fb[j]))) {
      lcm.push_back(fa[i]);
      extra_b.push_back(fa[i]);
      ++i;
    } else if (i == fa.size() || factor_less(fb[j], fa[i])) {
      lcm.push_back(fb[j]);
      extra_a.push_back(fb[j]);
      ++j;
    } else {
      const int e = std::max(fa[i].exponent, fb[j].exponent);
      lcm.push_back({fa[i].form, e});
      if (e > fa[i].exponent) extra_a.push_back({fa[i].form, e - fa[i].exponent});
      if (e > fb[j].exponent) extra_b.push_back({fb[j].form, e - fb[j].exponent});
      ++i;
      ++j;
    }
  }
  const mpq_class& sa = a.scalar();
  const mpq_class& sb = b.scalar();
  mpz_class den;
  mpz_lcm(den.get_mpz_t(), sa.get_den_mpz_t(), sb.get_den_mpz_t());
  const mpz_class ka = sa.get_num() * (den / sa.get_den());
  const mpz_class kb = sb.get_num() * (den / sb.get_den());
  Poly na = a.numerator();
  Poly nb = b.numerator();
  if (!extra_a.empty()) na *= expand(extra_a);
  if (!extra_b.empty()) nb *= expand(extra_b);
  Poly sum = na.scaled(ka) + nb.scaled(kb);
  return Coeff::make(mpq_class(1, den), sum, std::move(lcm));
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff operator*(const Coeff& a, const Coeff& b) {
  if (a.is_zero() || b.is_zero()) return Coeff{};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.is_constant() || b.is_constant()) {
    const Coeff& c = a.is_constant() ? a : b;
    const Coeff& other = a.is_constant() ? b : a;
    Coeff::Rep r = *other.rep_;
    r.scalar *= c.scalar();
    return Coeff::from_rep(std::move(r));
  }
  std::vector<LinearFactor> f = a.factors();
  f.insert(f.end(), b.factors().begin(), b.factors().end());
  return Coeff::make(a.scalar() * b.scalar(), a.numerator() * b.numerator(), std::move(f));
}

Coeff operator/(const Coeff& a, const Coeff& b) {
  if (b.is_zero()) throw ArithmeticError("division by zero coefficient");
  return a * b.inverse();
}

Coeff Coeff::inverse() const {
  if (!rep_) throw ArithmeticError("division by zero coefficient");
  std::vector<LinearFactor> split;
  int sign = 1;
  if (!split_linear(rep_->numerator, split, sign)) {
    throw ArithmeticError("cannot invert " + to_string() +
                          ": numerator does not split into linear factors");
  }
  mpq_class s = 1 / rep_->scalar;
  if (sign < 0) s = -s;
  return make(s, expand(rep_->factors), std::move(split));
}

Coeff Coeff::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Coeff r(1);
  Coeff b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// ------------------------------------------------------------ automorphisms

Coeff Coeff::shifted(const Weight& w) const {
  if (is_constant() || w.is_zero()) return *this;
  Rep r{rep_->scalar, rep_->numerator.shifted(w.c), rep_->factors, 0};
  for (auto& f : r.factors) f.form = f.form.shifted(w.c);
  // Shifts keep every form primitive with the same leading term and keep
  // numerator and factors coprime, so only the order can change.
  std::sort(r.factors.begin(), r.factors.end(), factor_less);
  return from_rep(std::move(r));
}

Coeff Coeff::permuted(std::span<const int> image) const {
  if (is_constant()) return *this;
  std::vector<LinearFactor> f = rep_->factors;
  for (auto& x : f) x.form = x.form.permuted(image);
  return make(rep_->scalar, rep_->numerator.permuted(image), std::move(f));
}

Coeff Coeff::negated_h() const {
  if (is_constant()) return *this;
  std::vector<LinearFactor> f = rep_->factors;
  for (auto& x : f) x.form = x.form.negated_variables();
  return make(rep_->scalar, rep_->numerator.negated_variables(), std::move(f));
}

mpq_class Coeff::evaluate(std::span<const mpq_class> point) const {
  if (!rep_) return 0;
  mpq_class v = rep_->scalar * rep_->numerator.evaluate_all(point);
  for (const auto& f : rep_->factors) {
    const mpq_class d = f.form.evaluate_all(point);
    if (d == 0) throw ArithmeticError("evaluation at a pole");
    for (int e = 0; e < f.exponent; ++e) v /= d;
  }
  return v;
}

// ----------------------------------------------------------------- output

std::string Coeff::to_string() const {
  if (!rep_) return "0";
  const Poly top = rep_->numerator.scaled(rep_->scalar.get_num());
  std::vector<std::string> parts;
  if (rep_->scalar.get_den() != 1) parts.push_back(rep_->scalar.get_den().get_str());
  for (const auto& f : rep_->factors) {
    std::string s = f.form.size() > 1 ? "(" + f.form.to_string() + ")" : f.form.to_string();
    if (f.exponent > 1) s += "^" + std::to_string(f.exponent);
    parts.push_back(std::move(s));
  }
  std::string num = top.to_string();
  if (parts.empty()) return num;
  if (top.size() > 1) num = "(" + num + ")";
  std::string den;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) den += "*";
    den += parts[i];
  }
  if (parts.size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (a.rep_ == b.rep_) return true;
  if (!a.rep_ || !b.rep_) return false;
  const auto& x = *a.rep_;
  const auto& y = *b.rep_;
  if (x.hash != y.hash || x.scalar != y.scalar || !(x.numerator == y.numerator)) return false;
  if (x.factors.size() != y.factors.size()) return false;
  for (std::size_t i = 0; i < x.factors.size(); ++i) {
    if (x.factors[i].exponent != y.factors[i].exponent || !(x.factors[i].form == y.factors[i].form)) {
      return false;
    }
  }
  return true;
}

std::size_t Coeff::hash() const { return rep_ ? rep_->hash : 0; }

// -------------------------------------------------------------- factoring

bool split_linear(const Poly& input, std::vector<LinearFactor>& out, int& sign) {
  constexpr long kWindow = 48;
  Poly p = input;
  sign = 1;
  if (p.is_zero()) return false;
  if (p.make_primitive() < 0) sign = -1;
  std::vector<LinearFactor> found;
  while (!p.is_constant()) {
    if (p.total_degree() == 1) {
      found.push_back({p, 1});
      p = Poly(1);
      break;
    }
    std::vector<int> vars;
    for (int v = 0; v < kMaxRank; ++v) {
      if (p.degree_in(v) > 0) vars.push_back(v);
    }
    bool progress = false;
    for (int a : vars) {
      // Univariate image in h_a with the other variables at sample values.
      const unsigned d = p.degree_in(a);
      std::vector<std::uint64_t> u(d + 1, 0);
      for (const auto& t : p.terms()) {
        std::uint64_t v = mod_prime(t.coefficient);
        for (int w = 0; w < kMaxRank; ++w) {
          if (w == a) continue;
          const unsigned e = t.monomial.exponent(w);
          if (e != 0) v = v * pow_mod(kSample[w], e) % kPrime;
        }
        const unsigned e = t.monomial.exponent(a);
        u[e] = (u[e] + v) % kPrime;
      }
      auto root = [&](std::uint64_t x) {
        std::uint64_t r = 0;
        for (unsigned k = d + 1; k-- > 0;) r = (r * x + u[k]) % kPrime;
        return r == 0;
      };
      auto residue = [](long value) {
        long m = value % static_cast<long>(kPrime);
        return static_cast<std::uint64_t>(m < 0 ? m + static_cast<long>(kPrime) : m);
      };
      auto attempt = [&](const Poly& form) {
        auto q = p.divide_exact(form);
        if (!q) return false;
        found.push_back({form, 1});
        p = std::move(*q);
        return true;
      };
      for (long k = -kWindow; k <= kWindow && !progress; ++k) {
        // h_a + k vanishes at h_a = -k.
        if (root(residue(-k)) && attempt(linear(a, -1, k))) progress = true;
      }
      for (int b : vars) {
        if (progress) break;
        if (b == a) continue;
        for (long k = -kWindow; k <= kWindow && !progress; ++k) {
          // h_a - h_b + k vanishes at h_a = h_b - k; for a > b use the form
          // h_b - h_a - k so the leading coefficient stays positive.
          const std::uint64_t x = (kSample[b] + kPrime - residue(k)) % kPrime;
          if (!root(x)) continue;
          Poly form = a < b ? linear(a, b, k) : linear(b, a, -k);
          if (attempt(form)) progress = true;
        }
      }
      if (progress) break;
    }
    if (!progress) return false;
  }
  if (p.leading().coefficient < 0) sign = -sign;
  merge_factors(found);
  out.insert(out.end(), found.begin(), found.end());
  return true;
}

// ---------------------------------------------------------------- parsing

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message), position_(position) {}

namespace {

struct CoeffOps {
  using Value = Coeff;
  Value integer(const mpz_class& z) { return Coeff(mpq_class(z)); }
  Value atom(const std::string& name, const std::vector<long>& idx, std::size_t pos) {
    if (name == "h" && idx.size() == 1 && idx[0] >= 1 && idx[0] <= kMaxRank) {
      return Coeff::var(static_cast<int>(idx[0] - 1));
    }
    throw ParseError("unknown symbol '" + name + "' at position " + std::to_string(pos), pos);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value neg(const Value& a) { return -a; }
  Value div(const Value& a, const Value& b, std::size_t pos) {
    try {
      return a / b;
    } catch (const ArithmeticError& e) {
      throw ParseError(std::string(e.what()) + " at position " + std::to_string(pos), pos);
    }
  }
  Value pow(const Value& a, long e, std::size_t pos) {
    try {
      return a.pow(static_cast<int>(e));
    } catch (const ArithmeticError& err) {
      throw ParseError(std::string(err.what()) + " at position " + std::to_string(pos), pos);
    }
  }
};

}  // namespace

Coeff parse_coeff(std::string_view text) {
  CoeffOps ops;
  return ExpressionParser<CoeffOps>(text, ops).parse();
}

}  // namespace diagred
