// Recursive-descent parser for ring expressions built from integers,
// indexed atoms such as x[1,2] or h1, and + - * / ^ with parentheses.
#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "diagred/coefficient.hpp"

namespace diagred {

/// Ops supplies the target ring:
///   using Value = ...;
///   Value integer(const mpz_class&);
///   Value atom(const std::string& name, const std::vector<long>& indices,
///              std::size_t pos);
///   Value add(const Value&, const Value&);
///   Value sub(const Value&, const Value&);
///   Value mul(const Value&, const Value&);
///   Value neg(const Value&);
///   Value div(const Value&, const Value&, std::size_t pos);
///   Value pow(const Value&, long exponent, std::size_t pos);
template <class Ops>
class ExpressionParser {
 public:
  using Value = typename Ops::Value;

  ExpressionParser(std::string_view text, Ops& ops) : text_(text), ops_(ops) {}

  Value parse() {
    Value v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  mpz_class integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  long small_integer() {
    bool negative = accept('-');
    const std::size_t at = pos_;
    mpz_class v = integer_literal();
    if (!v.fits_slong_p()) {
      pos_ = at;
      fail("integer too large");
    }
    return negative ? -v.get_si() : v.get_si();
  }

  Value expression() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = ops_.add(v, term());
      } else if (accept('-')) {
        v = ops_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = ops_.mul(v, unary());
      } else if (accept('/')) {
        const std::size_t at = pos_;
        v = ops_.div(v, unary(), at);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) return ops_.neg(unary());
    if (accept('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (accept('^')) {
      const std::size_t at = pos_;
      bool paren = accept('(');
      long e = small_integer();
      if (paren) expect(')');
      return ops_.pow(base, e, at);
    }
    return base;
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expression();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ops_.integer(integer_literal());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      std::vector<long> indices;
      // A trailing number is an index: h12 is not allowed, h1 means h~_1.
      const std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ > digits) indices.push_back(std::stol(std::string(text_.substr(digits, pos_ - digits))));
      if (accept('[')) {
        do {
          indices.push_back(small_integer());
        } while (accept(','));
        expect(']');
      }
      return ops_.atom(name, indices, start);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  Ops& ops_;
  std::size_t pos_ = 0;
};

}  // namespace diagred
