#pragma once

#include "racah/scalar.hpp"
#include "racah/word.hpp"

#include <cstddef>
#include <map>
#include <utility>

namespace racah {

/// Element of the free associative algebra on the six letters: a finite map
/// from words to nonzero coefficients. No relations are applied at this
/// layer; `B * A` stays `B A`.
///
/// `Coeff` needs the field operations, `==`, `is_zero()` and construction
/// from `int`.
template <class Coeff>
class Polynomial {
public:
  using coefficient_type = Coeff;
  using term_map = std::map<Word, Coeff>;
  using const_iterator = typename term_map::const_iterator;

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Coeff(c)) {}
  Polynomial(const Coeff& c) { add_term(Word{}, c); }
  Polynomial(Letter l) { add_term(Word(l), Coeff(1)); }
  Polynomial(const Word& w, const Coeff& c = Coeff(1)) { add_term(w, c); }

  static Polynomial monomial(const Word& w, const Coeff& c = Coeff(1)) {
    return Polynomial(w, c);
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const term_map& terms() const { return terms_; }

  /// Coefficient of `w`, zero when absent.
  Coeff coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  /// Adds `c * w`, dropping the entry if it cancels.
  void add_term(const Word& w, const Coeff& c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  /// `*this += c * p`
  void add_scaled(const Polynomial& p, const Coeff& c) {
    if (c.is_zero())
      return;
    for (const auto& [w, a] : p.terms_)
      add_term(w, a * c);
  }

  /// True iff every supported word is normal.
  bool is_normal() const {
    for (const auto& [w, c] : terms_)
      if (!w.is_normal())
        return false;
    return true;
  }

  Polynomial& operator+=(const Polynomial& o) { add_scaled(o, Coeff(1)); return *this; }
  Polynomial& operator-=(const Polynomial& o) { add_scaled(o, Coeff(-1)); return *this; }
  Polynomial& operator*=(const Coeff& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, a] : terms_)
      a *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Coeff(-1); }
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend Polynomial operator*(const Coeff& c, Polynomial a) { return a *= c; }

  /// Concatenation product, extended bilinearly.
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial r;
    for (const auto& [u, a] : p.terms_)
      for (const auto& [v, b] : q.terms_)
        r.add_term(u + v, a * b);
    return r;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  term_map terms_;
};

using NcPoly = Polynomial<Rational>;

/// c1 * p1 + c2 * p2
template <class Coeff>
Polynomial<Coeff> linear_combine(const Coeff& c1, const Polynomial<Coeff>& p1,
                                 const Coeff& c2, const Polynomial<Coeff>& p2) {
  Polynomial<Coeff> r;
  r.add_scaled(p1, c1);
  r.add_scaled(p2, c2);
  return r;
}

template <class Coeff>
Polynomial<Coeff> mul(const Polynomial<Coeff>& p, const Polynomial<Coeff>& q) {
  return p * q;
}

/// pq - qp
template <class Coeff>
Polynomial<Coeff> commutator(const Polynomial<Coeff>& p, const Polynomial<Coeff>& q) {
  return p * q - q * p;
}

/// pq + qp
template <class Coeff>
Polynomial<Coeff> anticommutator(const Polynomial<Coeff>& p, const Polynomial<Coeff>& q) {
  return p * q + q * p;
}

/// n-fold product, p^0 = 1.
template <class Coeff>
Polynomial<Coeff> pow(const Polynomial<Coeff>& p, unsigned n) {
  Polynomial<Coeff> r(Coeff(1));
  for (unsigned i = 0; i < n; ++i)
    r = r * p;
  return r;
}

} // namespace racah
