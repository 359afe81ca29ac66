#pragma once

#include "racah/polynomial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace racah::linear {

/// Integer vector as (column, value) pairs, sorted by column, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, mpz_class>>;

/// a*x + b*y
inline SparseVector combine(const mpz_class& a, const SparseVector& x, const mpz_class& b,
                            const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  auto i = x.begin(), j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, b * j->second);
      ++j;
    } else {
      mpz_class v = a * i->second + b * j->second;
      if (v != 0)
        out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Divides out the gcd of the entries and makes the leading entry positive.
inline void make_primitive(SparseVector& v) {
  if (v.empty())
    return;
  mpz_class g = 0;
  for (const auto& [col, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1)
      break;
  }
  if (v.front().second < 0)
    g = -g;
  if (g != 1)
    for (auto& [col, x] : v)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Row echelon basis built incrementally. Elimination is fraction-free:
/// a row is cross-multiplied against the pivot and then reduced to its
/// primitive part, which keeps entries small.
class EchelonBasis {
public:
  /// Eliminates leading entries of `v` against the stored pivots. The
  /// result is zero iff `v` lies in the span.
  SparseVector reduce(SparseVector v) const {
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end())
        break;
      const SparseVector& p = it->second;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p.front().second.get_mpz_t(), v.front().second.get_mpz_t());
      mpz_class a = p.front().second / g;
      mpz_class b = -(v.front().second / g);
      v = combine(a, v, b, p);
      make_primitive(v);
    }
    return v;
  }

  /// Adds `v`; returns false if it was already in the span.
  bool insert(SparseVector v) {
    make_primitive(v);
    v = reduce(std::move(v));
    if (v.empty())
      return false;
    std::size_t lead = v.front().first;
    pivots_.emplace(lead, std::move(v));
    return true;
  }

  bool contains(SparseVector v) const {
    make_primitive(v);
    return reduce(std::move(v)).empty();
  }

  std::size_t rank() const { return pivots_.size(); }

private:
  std::map<std::size_t, SparseVector> pivots_;
};

/// Basis of { c : sum_i c_i * images[i] = 0 }, as integer coefficient
/// vectors indexed by source position.
inline std::vector<SparseVector> nullspace(const std::vector<SparseVector>& images) {
  std::size_t base = 0;
  for (const auto& v : images)
    if (!v.empty())
      base = std::max(base, v.back().first + 1);

  EchelonBasis echelon;
  std::vector<SparseVector> kernel;
  for (std::size_t i = 0; i < images.size(); ++i) {
    SparseVector v = images[i];
    v.emplace_back(base + i, 1);
    make_primitive(v);
    v = echelon.reduce(std::move(v));
    if (v.front().first >= base) {
      SparseVector k;
      for (auto& [col, x] : v)
        k.emplace_back(col - base, std::move(x));
      kernel.push_back(std::move(k));
    } else {
      echelon.insert(std::move(v));
    }
  }
  return kernel;
}

/// Assigns dense column numbers to words on first sight.
class WordIndex {
public:
  std::size_t operator()(const Word& w) {
    auto [it, inserted] = index_.try_emplace(w, index_.size());
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

private:
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

/// Coordinates of several polynomials interleaved into one integer vector
/// (part s of word w goes to column index(w) * parts.size() + s). All
/// parts are multiplied by the lcm of their denominators, which is
/// written to `scale` when given.
inline SparseVector to_sparse(const std::vector<const NcPoly*>& parts, WordIndex& index,
                              mpz_class* scale = nullptr) {
  mpz_class l = 1;
  for (const NcPoly* p : parts)
    for (const auto& [w, c] : *p)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  SparseVector v;
  const std::size_t slots = parts.size();
  for (std::size_t s = 0; s < slots; ++s)
    for (const auto& [w, c] : *parts[s])
      v.emplace_back(index(w) * slots + s, c.raw().get_num() * (l / c.raw().get_den()));
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (scale)
    *scale = l;
  return v;
}

inline SparseVector to_sparse(const NcPoly& p, WordIndex& index, mpz_class* scale = nullptr) {
  return to_sparse(std::vector<const NcPoly*>{&p}, index, scale);
}

/// Rank of a family of polynomials over the rationals.
inline std::size_t rank(const std::vector<NcPoly>& family) {
  WordIndex index;
  EchelonBasis echelon;
  for (const NcPoly& p : family)
    echelon.insert(to_sparse(p, index));
  return echelon.rank();
}

} // namespace racah::linear
