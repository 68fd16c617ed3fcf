#include "diagred/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace diagred {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(int var, unsigned exponent) {
  if (var < 0 || var >= kMaxVariables) {
    throw std::out_of_range("variable index out of range");
  }
  if (exponent > 255) throw std::overflow_error("monomial degree overflow");
  return Monomial((std::uint64_t{exponent} << 56) |
                  (std::uint64_t{exponent} << shift_for(var)));
}

int Monomial::last_variable() const {
  for (int v = kMaxVariables - 1; v >= 0; --v) {
    if (exponent(v) != 0) return v;
  }
  return -1;
}

bool Monomial::divides(Monomial other) const {
  for (int v = 0; v < kMaxVariables; ++v) {
    if (exponent(v) > other.exponent(v)) return false;
  }
  return true;
}

Monomial operator*(Monomial a, Monomial b) {
  if (a.degree() + b.degree() > 255) {
    throw std::overflow_error("monomial degree overflow");
  }
  // Bytes cannot carry since every exponent is bounded by the degree.
  return Monomial(a.bits_ + b.bits_);
}

Monomial operator/(Monomial a, Monomial b) { return Monomial(a.bits_ - b.bits_); }

Monomial Monomial::without(int var) const {
  const std::uint64_t e = exponent(var);
  return Monomial(bits_ - (e << 56) - (e << shift_for(var)));
}

// -------------------------------------------------------------------- Poly

bool operator==(const Term& a, const Term& b) {
  return a.monomial == b.monomial && a.coefficient == b.coefficient;
}

Poly::Poly(const mpz_class& constant) {
  if (constant != 0) terms_.push_back({Monomial{}, constant});
}

Poly Poly::variable(int var) {
  Poly p;
  p.terms_.push_back({Monomial::variable(var), mpz_class(1)});
  return p;
}

Poly Poly::from_sorted_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return a.monomial > b.monomial;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient == 0) out.pop_back();
  return from_sorted_terms(std::move(out));
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() &&
         terms_[0].coefficient == 1;
}

mpz_class Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) {
    return terms_.back().coefficient;
  }
  return 0;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

unsigned Poly::degree_in(int var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(var));
  return d;
}

int Poly::last_variable() const {
  int v = -1;
  for (const auto& t : terms_) v = std::max(v, t.monomial.last_variable());
  return v;
}

mpz_class Poly::max_norm() const {
  mpz_class m = 0;
  for (const auto& t : terms_) {
    if (mpz_cmpabs(t.coefficient.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(t.coefficient);
  }
  return m;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

namespace {

template <class Combine>
Poly merge(const Poly& a, const Poly& b, Combine combine_b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].monomial > y[j].monomial)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].monomial > x[i].monomial) {
      out.push_back({y[j].monomial, combine_b(y[j].coefficient)});
      ++j;
    } else {
      mpz_class c = x[i].coefficient + combine_b(y[j].coefficient);
      if (c != 0) out.push_back({x[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return Poly::from_sorted_terms(std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  return merge(a, b, [](const mpz_class& c) { return c; });
}

Poly operator-(const Poly& a, const Poly& b) {
  return merge(a, b, [](const mpz_class& c) { return mpz_class(-c); });
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  if (a.size() == 1) return b.times_monomial(a.terms_[0].monomial, a.terms_[0].coefficient);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].monomial, b.terms_[0].coefficient);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      out.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    }
  }
  return Poly::from_terms(std::move(out));
}

Poly Poly::scaled(const mpz_class& factor) const {
  if (factor == 0) return Poly{};
  Poly p = *this;
  for (auto& t : p.terms_) t.coefficient *= factor;
  return p;
}

Poly Poly::times_monomial(Monomial m, const mpz_class& factor) const {
  if (factor == 0) return Poly{};
  Poly p = *this;
  for (auto& t : p.terms_) {
    t.monomial = t.monomial * m;
    t.coefficient *= factor;
  }
  return p;
}

Poly Poly::divided_exactly(const mpz_class& divisor) const {
  Poly p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), divisor.get_mpz_t());
  return p;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Poly{};
  if (divisor.is_constant()) {
    const mpz_class& d = divisor.terms_[0].coefficient;
    for (const auto& t : terms_) {
      if (!mpz_divisible_p(t.coefficient.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    }
    return divided_exactly(d);
  }
  const Term& lead = divisor.leading();
  std::vector<Term> quotient;
  Poly rest = *this;
  while (!rest.is_zero()) {
    const Term& top = rest.leading();
    if (!lead.monomial.divides(top.monomial)) return std::nullopt;
    if (!mpz_divisible_p(top.coefficient.get_mpz_t(), lead.coefficient.get_mpz_t())) {
      return std::nullopt;
    }
    Term q{top.monomial / lead.monomial, 0};
    mpz_divexact(q.coefficient.get_mpz_t(), top.coefficient.get_mpz_t(),
                 lead.coefficient.get_mpz_t());
    rest = rest - divisor.times_monomial(q.monomial, q.coefficient);
    quotient.push_back(std::move(q));
  }
  return Poly::from_sorted_terms(std::move(quotient));
}

Poly Poly::evaluate(int var, const mpz_class& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  mpz_class power;
  for (const auto& t : terms_) {
    const unsigned e = t.monomial.exponent(var);
    if (e == 0) {
      out.push_back(t);
      continue;
    }
    mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), e);
    out.push_back({t.monomial.without(var), t.coefficient * power});
  }
  return Poly::from_terms(std::move(out));
}

mpq_class Poly::evaluate_all(std::span<const mpq_class> point) const {
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coefficient;
    for (int var = 0; var < Monomial::kMaxVariables; ++var) {
      const unsigned e = t.monomial.exponent(var);
      if (e == 0) continue;
      if (static_cast<std::size_t>(var) >= point.size()) {
        throw std::out_of_range("evaluation point has too few coordinates");
      }
      for (unsigned k = 0; k < e; ++k) v *= point[var];
    }
    sum += v;
  }
  return sum;
}

Poly Poly::shifted(std::span<const int> offsets) const {
  const int nv = static_cast<int>(std::min<std::size_t>(offsets.size(), Monomial::kMaxVariables));
  bool trivial = true;
  for (int v = 0; v < nv; ++v) trivial = trivial && offsets[v] == 0;
  if (trivial || is_constant()) return *this;

  // powers[v][e] = (h_v + offset_v)^e
  std::vector<std::vector<Poly>> powers(nv);
  for (int v = 0; v < nv; ++v) {
    if (offsets[v] == 0) continue;
    const unsigned top = degree_in(v);
    const Poly base = Poly::variable(v) + Poly(mpz_class(offsets[v]));
    powers[v].reserve(top + 1);
    powers[v].push_back(Poly(1));
    for (unsigned e = 1; e <= top; ++e) powers[v].push_back(powers[v].back() * base);
  }
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial kept;
    Poly factor(t.coefficient);
    for (int v = 0; v < Monomial::kMaxVariables; ++v) {
      const unsigned e = t.monomial.exponent(v);
      if (e == 0) continue;
      if (v < nv && offsets[v] != 0) {
        factor = factor * powers[v][e];
      } else {
        kept = kept * Monomial::variable(v, e);
      }
    }
    for (const auto& s : factor.terms_) out.push_back({s.monomial * kept, s.coefficient});
  }
  return Poly::from_terms(std::move(out));
}

Poly Poly::permuted(std::span<const int> image) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int v = 0; v < Monomial::kMaxVariables; ++v) {
      const unsigned e = t.monomial.exponent(v);
      if (e == 0) continue;
      const int target = static_cast<std::size_t>(v) < image.size() ? image[v] : v;
      m = m * Monomial::variable(target, e);
    }
    out.push_back({m, t.coefficient});
  }
  return Poly::from_terms(std::move(out));
}

Poly Poly::negated_variables() const {
  Poly p = *this;
  for (auto& t : p.terms_) {
    if (t.monomial.degree() % 2 == 1) t.coefficient = -t.coefficient;
  }
  return p;
}

Poly Poly::coefficient_of(int var, unsigned exponent) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial.exponent(var) == exponent) out.push_back({t.monomial.without(var), t.coefficient});
  }
  return Poly::from_terms(std::move(out));
}

mpz_class Poly::make_primitive() {
  if (is_zero()) return 0;
  mpz_class c = content();
  if (leading().coefficient < 0) c = -c;
  if (c != 1) {
    for (auto& t : terms_) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), c.get_mpz_t());
  }
  return c;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.coefficient;
    if (c < 0) {
      out += "-";
      c = -c;
    } else if (!first) {
      out += "+";
    }
    first = false;
    std::string mono;
    for (int v = 0; v < Monomial::kMaxVariables; ++v) {
      const unsigned e = t.monomial.exponent(v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "h" + std::to_string(v + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

std::size_t Poly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h ^= std::hash<std::uint64_t>{}(t.monomial.bits()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(mpz_get_si(t.coefficient.get_mpz_t())) + (h << 6) + (h >> 2);
  }
  return h;
}

int compare(const Poly& a, const Poly& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Term& s = a.terms()[i];
    const Term& t = b.terms()[i];
    if (s.monomial != t.monomial) return s.monomial > t.monomial ? -1 : 1;
    const int c = cmp(s.coefficient, t.coefficient);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

}  // namespace diagred
