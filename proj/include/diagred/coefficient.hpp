// Exact rational functions in the shifted Cartan variables h~1..h~n, with
// the shift, Weyl-permutation and sign automorphisms.
#pragma once

#include <array>
#include <compare>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "diagred/polynomial.hpp"

namespace diagred {

inline constexpr int kMaxRank = Monomial::kMaxVariables;

/// Integer vector sum_i c_i e_i. Components past the rank are zero.
struct Weight {
  std::array<int, kMaxRank> c{};

  static Weight unit(int i) {
    Weight w;
    w.c.at(static_cast<std::size_t>(i)) = 1;
    return w;
  }
  bool is_zero() const {
    for (int x : c) {
      if (x != 0) return false;
    }
    return true;
  }
  Weight operator+(const Weight& o) const {
    Weight w;
    for (std::size_t i = 0; i < c.size(); ++i) w.c[i] = c[i] + o.c[i];
    return w;
  }
  Weight operator-(const Weight& o) const {
    Weight w;
    for (std::size_t i = 0; i < c.size(); ++i) w.c[i] = c[i] - o.c[i];
    return w;
  }
  Weight operator-() const { return Weight{} - *this; }
  Weight& operator+=(const Weight& o) { return *this = *this + o; }
  Weight& operator-=(const Weight& o) { return *this = *this - o; }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Raised for division by zero and for inverting an element whose
/// numerator does not split into linear factors.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A primitive linear form with positive leading coefficient raised to a
/// positive power.
struct LinearFactor {
  Poly form;
  int exponent = 1;
};

/// Canonical form  scalar * numerator / prod(factor^exponent)  where the
/// numerator is primitive with positive leading coefficient, the factors are
/// distinct primitive linear forms sorted by compare(), and no factor divides
/// the numerator. Zero is scalar 0 with numerator 1 and no factors.
///
/// Values are immutable and cheap to copy; the representation is shared.
class Coeff {
 public:
  Coeff() = default;  // zero
  Coeff(long value);  // NOLINT(google-explicit-constructor)
  explicit Coeff(const mpq_class& value);

  /// h~_k for a 0-based variable index.
  static Coeff var(int k);
  /// h~_i - h~_j + shift (0-based indices).
  static Coeff hdiff(int i, int j, long shift = 0);
  /// Builds scalar * numerator / prod factors and brings it to canonical form.
  static Coeff make(const mpq_class& scalar, const Poly& numerator,
                    std::vector<LinearFactor> factors);
  static Coeff from_poly(const Poly& p) { return make(1, p, {}); }

  bool is_zero() const { return rep_ == nullptr; }
  bool is_one() const;
  /// True when the value does not depend on any variable.
  bool is_constant() const;

  const mpq_class& scalar() const;
  const Poly& numerator() const;
  const std::vector<LinearFactor>& factors() const;

  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  /// Throws ArithmeticError for b == 0.
  friend Coeff operator/(const Coeff& a, const Coeff& b);
  Coeff operator-() const;
  Coeff& operator+=(const Coeff& b) { return *this = *this + b; }
  Coeff& operator-=(const Coeff& b) { return *this = *this - b; }
  Coeff& operator*=(const Coeff& b) { return *this = *this * b; }
  Coeff& operator/=(const Coeff& b) { return *this = *this / b; }

  /// Multiplicative inverse. Requires the numerator to factor into linear
  /// forms h~_a - h~_b + k or h~_a + k; throws ArithmeticError otherwise.
  Coeff inverse() const;
  Coeff pow(int e) const;

  /// f[w]: h~_i -> h~_i + w_i.
  Coeff shifted(const Weight& w) const;
  /// h~_k -> h~_{image[k]} (0-based); image must be a permutation.
  Coeff permuted(std::span<const int> image) const;
  /// h~_i -> -h~_i.
  Coeff negated_h() const;

  /// Value at a rational point; throws ArithmeticError at a pole.
  mpq_class evaluate(std::span<const mpq_class> point) const;

  /// Expanded numerator over factored denominator, e.g. "(h1-h2+1)/(h1-h2)".
  std::string to_string() const;
  /// Largest variable index used plus one.
  int rank_used() const;

  friend bool operator==(const Coeff& a, const Coeff& b);
  std::size_t hash() const;

 private:
  struct Rep {
    mpq_class scalar;
    Poly numerator;
    std::vector<LinearFactor> factors;
    std::size_t hash = 0;
  };
  explicit Coeff(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  static Coeff from_rep(Rep rep);

  std::shared_ptr<const Rep> rep_;
};

struct CoeffHash {
  std::size_t operator()(const Coeff& c) const { return c.hash(); }
};

/// Parses the coefficient grammar: h1..h7, integers, + - * / ^ and
/// parentheses. Throws ParseError with the offending position.
Coeff parse_coeff(std::string_view text);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Splits a primitive polynomial into linear factors of the shapes
/// h~_a - h~_b + k and h~_a + k with |k| bounded by a search window.
/// Returns false if some nonconstant part remains; the sign of the
/// remaining unit is returned through sign.
bool split_linear(const Poly& p, std::vector<LinearFactor>& out, int& sign);

}  // namespace diagred
