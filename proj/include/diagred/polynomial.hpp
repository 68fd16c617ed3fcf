// Sparse multivariate polynomials with arbitrary-precision integer
// coefficients in the shifted Cartan variables h~1..h~7.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace diagred {

/// Exponent vector packed into one word: the top byte holds the total
/// degree and byte 6-v holds the exponent of variable v, so unsigned
/// comparison of the packed word is the graded lexicographic order with
/// h1 > h2 > ... > h7.
class Monomial {
 public:
  static constexpr int kMaxVariables = 7;

  constexpr Monomial() = default;

  static Monomial variable(int var, unsigned exponent = 1);

  unsigned exponent(int var) const {
    return static_cast<unsigned>((bits_ >> shift_for(var)) & 0xffu);
  }
  unsigned degree() const { return static_cast<unsigned>(bits_ >> 56); }
  bool is_one() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  /// Highest variable index with a nonzero exponent, or -1.
  int last_variable() const;

  bool divides(Monomial other) const;

  friend Monomial operator*(Monomial a, Monomial b);
  /// Requires b.divides(a).
  friend Monomial operator/(Monomial a, Monomial b);

  Monomial without(int var) const;

  friend auto operator<=>(Monomial, Monomial) = default;

 private:
  static constexpr int shift_for(int var) { return 8 * (6 - var); }
  explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

struct Term {
  Monomial monomial;
  mpz_class coefficient;
};

/// Polynomial over Z, terms sorted strictly decreasing in graded lex order,
/// no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpz_class& constant);
  explicit Poly(long constant) : Poly(mpz_class(constant)) {}

  static Poly variable(int var);
  /// Assumes sorted, combined, nonzero terms.
  static Poly from_sorted_terms(std::vector<Term> terms);
  /// Sorts and combines arbitrary terms.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Leading term in graded lex order. Requires nonzero.
  const Term& leading() const { return terms_.front(); }
  mpz_class constant_term() const;
  unsigned total_degree() const;
  unsigned degree_in(int var) const;
  int last_variable() const;
  /// Largest absolute coefficient.
  mpz_class max_norm() const;
  /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
  mpz_class content() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const mpz_class& factor) const;
  Poly times_monomial(Monomial m, const mpz_class& factor) const;
  /// Divides every coefficient exactly by an integer.
  Poly divided_exactly(const mpz_class& divisor) const;

  /// Quotient when divisor divides this exactly over Z, otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  /// Substitutes var := value.
  Poly evaluate(int var, const mpz_class& value) const;
  /// Value with every variable substituted.
  mpq_class evaluate_all(std::span<const mpq_class> point) const;

  /// Substitutes h_i := h_i + offsets[i].
  Poly shifted(std::span<const int> offsets) const;
  /// Substitutes h_k := h_{image[k]} (0-based).
  Poly permuted(std::span<const int> image) const;
  /// Substitutes h_i := -h_i for all i.
  Poly negated_variables() const;

  /// Coefficient of var^exponent viewed as polynomial in the other variables.
  Poly coefficient_of(int var, unsigned exponent) const;

  /// Divides by content and fixes the leading coefficient positive. Returns
  /// the signed factor removed, so that *this == factor * result.
  mpz_class make_primitive();

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);
  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

bool operator==(const Term& a, const Term& b);

/// Total order used for deterministic output: fewer terms first, then
/// term by term (monomial descending, then coefficient).
int compare(const Poly& a, const Poly& b);

}  // namespace diagred
