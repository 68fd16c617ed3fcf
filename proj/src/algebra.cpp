#include "diagred/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace diagred {

// ------------------------------------------------------------------ Element

Element Element::scalar(const Coeff& c) {
  Element e;
  e.add(Word{}, c);
  return e;
}

Element Element::word(Word w, const Coeff& c) {
  Element e;
  e.add(std::move(w), c);
  return e;
}

Coeff Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coeff{} : it->second;
}

std::size_t Element::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

void Element::add(const Word& w, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Element::add(Word&& w, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

Element Element::operator-() const {
  Element e = *this;
  for (auto& [w, c] : e.terms_) c = -c;
  return e;
}

Element Element::scaled(const Coeff& c) const {
  if (c.is_zero()) return Element{};
  Element e = *this;
  for (auto& [w, x] : e.terms_) x = c * x;
  return e;
}

bool operator==(const Element& a, const Element& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  for (; i != a.terms_.end(); ++i, ++j) {
    if (i->first != j->first || !(i->second == j->second)) return false;
  }
  return true;
}

// ----------------------------------------------------------------- Alphabet

Weight Alphabet::weight(const Word& w) const {
  Weight s;
  for (Gen g : w) s += weights_[g];
  return s;
}

std::string Alphabet::format(const Word& w) const {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) s += "*";
    s += names_[w[i]];
  }
  return s;
}

std::string Alphabet::format(const Element& e) const {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    std::string cs = c.to_string();
    bool negative = cs[0] == '-';
    if (negative) cs = (-c).to_string();
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += format(w);
    } else {
      out += cs + "*" + format(w);
    }
  }
  return out;
}

Element multiply(const Alphabet& alphabet, const Element& a, const Element& b) {
  Element out;
  for (const auto& [wa, ca] : a.terms()) {
    const Weight shift = -alphabet.weight(wa);
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(std::move(w), ca * cb.shifted(shift));
    }
  }
  return out;
}

// ------------------------------------------------------------ RewriteSystem

void RewriteSystem::set(Gen a, Gen b, Element rhs) { rules_[key(a, b)] = std::move(rhs); }

bool RewriteSystem::is_normal(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (find(w[i], w[i + 1]) != nullptr) return false;
  }
  return true;
}

// --------------------------------------------------------- NormalFormEngine

std::size_t NormalFormEngine::WordHash::operator()(const Word& w) const {
  std::size_t h = w.size();
  for (Gen g : w) h = h * 1000003u ^ g;
  return h;
}

const Element& NormalFormEngine::insert(Gen g, const Word& u) {
  Word key;
  key.reserve(u.size() + 1);
  key.push_back(g);
  key.insert(key.end(), u.begin(), u.end());
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  Element result;
  const Element* rule = u.empty() ? nullptr : rules_->find(g, u.front());
  if (rule == nullptr) {
    result = Element::word(key);
  } else {
    if (!active_.insert(key).second) {
      throw std::runtime_error("rewriting does not terminate on " + alphabet_->format(key));
    }
    ++rewrites_;
    const Word tail(u.begin() + 1, u.end());
    const Element tail_element = Element::word(tail);
    for (const auto& [v, c] : rule->terms()) {
      Element part = prepend(v, tail_element);
      for (const auto& [w, d] : part.terms()) result.add(w, c * d);
    }
    active_.erase(key);
  }
  return cache_.emplace(std::move(key), std::move(result)).first->second;
}

Element NormalFormEngine::insert(Gen g, const Element& e) {
  const Weight shift = -alphabet_->weight(g);
  Element out;
  for (const auto& [u, c] : e.terms()) {
    const Coeff moved = c.shifted(shift);
    const Element& part = insert(g, u);
    for (const auto& [w, d] : part.terms()) out.add(w, moved * d);
  }
  return out;
}

Element NormalFormEngine::prepend(const Word& prefix, Element e) {
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) e = insert(*it, e);
  return e;
}

Element NormalFormEngine::normal_form(const Word& w) { return prepend(w, Element::scalar(Coeff(1))); }

Element NormalFormEngine::normal_form(const Element& e) {
  Element out;
  for (const auto& [w, c] : e.terms()) {
    const Element part = normal_form(w);
    for (const auto& [v, d] : part.terms()) out.add(v, c * d);
  }
  return out;
}

Element NormalFormEngine::product(const Element& a, const Element& b) {
  // Normalize b first so that only insertions remain.
  const Element nb = normal_form(b);
  Element out;
  for (const auto& [wa, ca] : a.terms()) {
    const Element part = prepend(wa, nb);
    for (const auto& [v, d] : part.terms()) out.add(v, ca * d);
  }
  return out;
}

// -------------------------------------------------------------- elimination

Elimination eliminate(std::vector<Element> rows, const std::vector<Word>& targets) {
  Elimination out;
  std::vector<bool> used(rows.size(), false);
  std::vector<std::pair<Word, std::size_t>> pivots;
  for (const Word& t : targets) {
    std::size_t chosen = rows.size();
    Coeff inverse;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) continue;
      const Coeff c = rows[r].coefficient(t);
      if (c.is_zero()) continue;
      try {
        inverse = c.inverse();
      } catch (const ArithmeticError&) {
        continue;
      }
      chosen = r;
      break;
    }
    if (chosen == rows.size()) {
      out.unsolved.push_back(t);
      continue;
    }
    used[chosen] = true;
    rows[chosen] = rows[chosen].scaled(inverse);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == chosen) continue;
      const Coeff c = rows[r].coefficient(t);
      if (c.is_zero()) continue;
      rows[r] -= rows[chosen].scaled(c);
    }
    pivots.emplace_back(t, chosen);
  }
  for (const auto& [t, r] : pivots) {
    Element rhs = rows[r];
    rhs.add(t, Coeff(-1));
    out.solved[t] = -rhs;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!used[r] && !rows[r].is_zero()) out.leftover.push_back(rows[r]);
  }
  return out;
}

}  // namespace diagred

namespace diagred {

Elimination eliminate_graded(const Alphabet& alphabet, const std::vector<Element>& rows,
                             const std::vector<Word>& targets) {
  std::map<Weight, std::pair<std::vector<Element>, std::vector<Word>>> blocks;
  for (const Element& r : rows) {
    if (r.is_zero()) continue;
    blocks[alphabet.weight(r.terms().begin()->first)].first.push_back(r);
  }
  for (const Word& t : targets) blocks[alphabet.weight(t)].second.push_back(t);
  Elimination out;
  for (auto& [w, block] : blocks) {
    Elimination part = eliminate(std::move(block.first), block.second);
    out.solved.merge(part.solved);
    out.leftover.insert(out.leftover.end(), part.leftover.begin(), part.leftover.end());
    out.unsolved.insert(out.unsolved.end(), part.unsolved.begin(), part.unsolved.end());
  }
  return out;
}

}  // namespace diagred
