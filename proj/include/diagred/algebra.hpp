// Words in graded generators with coefficients on the left, and a rewriting
// engine that brings them to normal form using pairwise exchange rules.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "diagred/coefficient.hpp"

namespace diagred {

using Gen = std::uint16_t;
using Word = std::vector<Gen>;

/// Finite sum of coefficient * word, coefficient written on the left.
/// Terms are kept in lexicographic word order; zero coefficients are absent.
class Element {
 public:
  Element() = default;
  static Element scalar(const Coeff& c);
  static Element word(Word w, const Coeff& c = Coeff(1));

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, Coeff>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a word (zero if absent).
  Coeff coefficient(const Word& w) const;
  /// Largest word length.
  std::size_t degree() const;

  void add(const Word& w, const Coeff& c);
  void add(Word&& w, const Coeff& c);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element operator-() const;
  /// c * this (c stays on the left, so no shifts are needed).
  Element scaled(const Coeff& c) const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  std::map<Word, Coeff> terms_;
};

/// Names and weights of generators; codes are 0..size()-1.
class Alphabet {
 public:
  Alphabet(int rank, std::vector<Weight> weights, std::vector<std::string> names)
      : rank_(rank), weights_(std::move(weights)), names_(std::move(names)) {}

  int rank() const { return rank_; }
  std::size_t size() const { return weights_.size(); }
  const Weight& weight(Gen g) const { return weights_[g]; }
  Weight weight(const Word& w) const;
  const std::string& name(Gen g) const { return names_[g]; }

  /// Deterministic text, e.g. "(h1-h2+1)/(h1-h2)*x[1,1]*D[1,1] - 1".
  std::string format(const Element& e) const;
  std::string format(const Word& w) const;

 private:
  int rank_;
  std::vector<Weight> weights_;
  std::vector<std::string> names_;
};

/// (f1 w1)(f2 w2) = f1 f2[-wt(w1)] (w1 w2): the free product with the
/// grading rule g f = f[-wt(g)] g.
Element multiply(const Alphabet& alphabet, const Element& a, const Element& b);

/// Exchange rules: an adjacent pair (a, b) that has a rule is rewritten to
/// the rule's right-hand side. A word is normal when no adjacent pair has a
/// rule.
class RewriteSystem {
 public:
  void set(Gen a, Gen b, Element rhs);
  const Element* find(Gen a, Gen b) const {
    auto it = rules_.find(key(a, b));
    return it == rules_.end() ? nullptr : &it->second;
  }
  std::size_t size() const { return rules_.size(); }
  bool is_normal(const Word& w) const;
  const std::unordered_map<std::uint32_t, Element>& all() const { return rules_; }
  static std::uint32_t key(Gen a, Gen b) { return (std::uint32_t{a} << 16) | b; }

 private:
  std::unordered_map<std::uint32_t, Element> rules_;
};

/// Normal ordering with memoized insertion. Not thread-safe: give each
/// thread its own engine.
class NormalFormEngine {
 public:
  NormalFormEngine(const Alphabet& alphabet, const RewriteSystem& rules)
      : alphabet_(&alphabet), rules_(&rules) {}

  Element normal_form(const Element& e);
  Element normal_form(const Word& w);
  /// Normal form of a * b.
  Element product(const Element& a, const Element& b);

  std::size_t cache_size() const { return cache_.size(); }
  /// Number of rule applications performed so far.
  std::size_t rewrites() const { return rewrites_; }

 private:
  struct WordHash {
    std::size_t operator()(const Word& w) const;
  };
  // Normal form of g * u for a normal word u, memoized.
  const Element& insert(Gen g, const Word& u);
  // Normal form of g * e for a normal element e.
  Element insert(Gen g, const Element& e);
  // Normal form of the concatenation prefix * e for normal e.
  Element prepend(const Word& prefix, Element e);

  const Alphabet* alphabet_;
  const RewriteSystem* rules_;
  std::unordered_map<Word, Element, WordHash> cache_;
  std::unordered_set<Word, WordHash> active_;
  std::size_t rewrites_ = 0;
};

/// Result of solving a set of linear relations for chosen target words.
struct Elimination {
  /// target word -> its expression in non-target words.
  std::map<Word, Element> solved;
  /// Relations left over among non-target words (nonzero means the
  /// relations impose more than the targets absorb).
  std::vector<Element> leftover;
  /// Targets that received no pivot.
  std::vector<Word> unsolved;
};

/// Gaussian elimination over the coefficient field. Rows are relations
/// (element = 0); every target word is solved in terms of non-target words.
/// Targets are pivoted in the given order; among candidate rows the first
/// with an invertible coefficient is used.
Elimination eliminate(std::vector<Element> rows, const std::vector<Word>& targets);

/// The same, run separately on each weight block (all terms of a relation
/// are assumed to share one weight).
Elimination eliminate_graded(const Alphabet& alphabet, const std::vector<Element>& rows,
                             const std::vector<Word>& targets);

}  // namespace diagred
