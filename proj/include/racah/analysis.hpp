#pragma once

#include "racah/algebra.hpp"
#include "racah/linear.hpp"
#include "racah/polynomial.hpp"
#include "racah/rewrite.hpp"
#include "racah/word.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace racah {

class ZeroPolynomial : public std::domain_error {
public:
  ZeroPolynomial() : std::domain_error("leading term of the zero polynomial") {}
};

class BoundTooLarge : public std::out_of_range {
public:
  BoundTooLarge(unsigned bound, unsigned maximum)
      : std::out_of_range("bound " + std::to_string(bound) + " exceeds configured maximum " +
                          std::to_string(maximum)) {}
};

/// Upper limits for the dense verification routines.
struct AnalysisLimits {
  unsigned center_bound = 6;
  unsigned independence_bound = 8;
  unsigned pbw_bound = 5;
};

/// Filtration degree. The zero polynomial has a sentinel degree below
/// every natural number; it satisfies `d <= n` for all n.
class FiltrationDegree {
public:
  FiltrationDegree() = default; // the zero sentinel
  explicit FiltrationDegree(unsigned n) : value_(n) {}

  static FiltrationDegree of_zero() { return {}; }

  bool is_zero_sentinel() const { return !value_; }
  /// Throws std::bad_optional_access for the sentinel.
  unsigned value() const { return *value_; }

  bool at_most(unsigned n) const { return !value_ || *value_ <= n; }

  friend bool operator==(const FiltrationDegree&, const FiltrationDegree&) = default;
  friend std::strong_ordering operator<=>(const FiltrationDegree& a, const FiltrationDegree& b) {
    if (!a.value_ || !b.value_)
      return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

private:
  std::optional<unsigned> value_;
};

/// Degree of `p` with respect to the filtration; reduces `p` first when it
/// is not already in normal form.
inline FiltrationDegree degree(const NcPoly& p) {
  const NcPoly& q = p.is_normal() ? p : reduce(p);
  if (q.is_zero())
    return FiltrationDegree::of_zero();
  unsigned d = 0;
  for (const auto& [w, c] : q)
    d = std::max(d, w.weight());
  return FiltrationDegree(d);
}

/// All exponent tuples of weight at most n, by weight then lexicographically.
inline std::vector<ExponentTuple> normal_tuples(unsigned n) {
  std::vector<ExponentTuple> out;
  for (unsigned weight = 0; weight <= n; ++weight) {
    ExponentTuple t;
    for (t[0] = 0; t[0] <= weight; ++t[0])
      for (t[1] = 0; t[0] + 2 * t[1] <= weight; ++t[1])
        for (t[2] = 0; t[0] + 2 * t[1] + t[2] <= weight; ++t[2])
          for (t[3] = 0; t[0] + 2 * t[1] + t[2] + t[3] <= weight; ++t[3])
            for (t[4] = 0; t[0] + 2 * t[1] + t[2] + t[3] + t[4] <= weight; ++t[4]) {
              t[5] = weight - (t[0] + 2 * t[1] + t[2] + t[3] + t[4]);
              out.push_back(t);
            }
  }
  return out;
}

/// Dimension of the n-th filtration piece.
inline std::size_t monomial_count(unsigned n) { return normal_tuples(n).size(); }

/// (l, r, s, t) with 4l + r + s + t <= n: exponents of Omega^l alpha^r delta^s beta^t.
inline std::vector<std::array<unsigned, 4>> center_tuples(unsigned n) {
  std::vector<std::array<unsigned, 4>> out;
  for (unsigned l = 0; 4 * l <= n; ++l)
    for (unsigned r = 0; 4 * l + r <= n; ++r)
      for (unsigned s = 0; 4 * l + r + s <= n; ++s)
        for (unsigned t = 0; 4 * l + r + s + t <= n; ++t)
          out.push_back({l, r, s, t});
  return out;
}

struct LeadingTerm {
  ExponentTuple tuple;
  Rational coefficient;
};

/// Lexicographically greatest exponent tuple among the terms of maximal
/// filtration degree.
inline LeadingTerm leading_term(const NcPoly& p) {
  const NcPoly& q = p.is_normal() ? p : reduce(p);
  if (q.is_zero())
    throw ZeroPolynomial();
  const Word* best = nullptr;
  unsigned best_weight = 0;
  ExponentTuple best_tuple;
  for (const auto& [w, c] : q) {
    unsigned wt = w.weight();
    ExponentTuple t = w.exponents();
    if (!best || wt > best_weight || (wt == best_weight && t > best_tuple)) {
      best = &w;
      best_weight = wt;
      best_tuple = t;
    }
  }
  return LeadingTerm{best_tuple, q.coefficient(*best)};
}

/// Reduced Omega_A^0 .. Omega_A^max, each from the previous one.
inline std::vector<NcPoly> omega_powers(unsigned max) {
  std::vector<NcPoly> out{NcPoly(1)};
  const NcPoly omega = named("Omega_A");
  for (unsigned l = 1; l <= max; ++l)
    out.push_back(reduce(out.back() * omega));
  return out;
}

inline Word central_word(unsigned r, unsigned s, unsigned t) {
  return Word::power(Letter::Alpha, r) + Word::power(Letter::Delta, s) +
         Word::power(Letter::Beta, t);
}

/// Random nonzero reduced polynomial supported on normal words of degree
/// at most `max_degree`.
template <class Rng>
NcPoly random_normal_polynomial(Rng& rng, unsigned max_degree, unsigned max_terms = 4) {
  static thread_local std::vector<std::vector<ExponentTuple>> cache;
  if (cache.size() <= max_degree)
    cache.resize(max_degree + 1);
  if (cache[max_degree].empty())
    cache[max_degree] = normal_tuples(max_degree);
  const auto& tuples = cache[max_degree];

  std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  NcPoly p;
  while (p.is_zero()) {
    unsigned n = nterms(rng);
    for (unsigned i = 0; i < n; ++i) {
      int a = num(rng);
      if (a == 0)
        a = 1;
      p.add_term(Word::from_exponents(tuples[pick(rng)]), Rational(a, den(rng)));
    }
  }
  return p;
}

/// Samples pairs of nonzero reduced polynomials and checks that the
/// reduced product is nonzero with leading tuple equal to the sum of the
/// factors' leading tuples.
inline bool leading_multiplicativity_check(unsigned samples, unsigned max_degree,
                                           std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  for (unsigned i = 0; i < samples; ++i) {
    NcPoly u = random_normal_polynomial(rng, max_degree);
    NcPoly v = random_normal_polynomial(rng, max_degree);
    NcPoly uv = reduce(u * v);
    if (uv.is_zero())
      return false;
    if (leading_term(uv).tuple != leading_term(u).tuple + leading_term(v).tuple)
      return false;
  }
  return true;
}

inline Word adb_word(unsigned i, unsigned j, unsigned k) {
  return Word::power(Letter::A, i) + Word::power(Letter::D, j) + Word::power(Letter::B, k);
}

/// Degree estimates for [A, A^i D^j B^k] and [B, A^i D^j B^k] over
/// 0 <= i <= max_i, 0 <= j <= max_j, 0 <= k <= max_k.
inline bool commutator_degree_checks(unsigned max_i, unsigned max_j, unsigned max_k) {
  const NcPoly a(Letter::A), b(Letter::B);
  for (unsigned i = 0; i <= max_i; ++i)
    for (unsigned j = 0; j <= max_j; ++j)
      for (unsigned k = 0; k <= max_k; ++k) {
        const NcPoly x(adb_word(i, j, k));
        const unsigned n = i + 2 * j + k;

        NcPoly ca = reduce(commutator(a, x));
        if (k != 0)
          ca -= NcPoly(adb_word(i, j + 1, k - 1), Rational(2 * static_cast<long>(k)));
        if (!degree(ca).at_most(n))
          return false;

        NcPoly cb = reduce(commutator(b, x));
        if (i != 0)
          cb += NcPoly(adb_word(i - 1, j + 1, k), Rational(2 * static_cast<long>(i)));
        if (!degree(cb).at_most(n))
          return false;
      }
  return true;
}

/// degree(Omega^n - D^{2n}) <= 4n - 1 for 1 <= n <= max_n, Omega = Omega_A.
inline bool omega_power_congruence(unsigned max_n) {
  std::vector<NcPoly> powers = omega_powers(max_n);
  for (unsigned n = 1; n <= max_n; ++n) {
    NcPoly diff = powers[n] - NcPoly(Word::power(Letter::D, 2 * n));
    if (!degree(diff).at_most(4 * n - 1))
      return false;
  }
  return true;
}

struct CenterReport {
  unsigned bound = 0;
  std::size_t kernel_dimension = 0;
  std::size_t expected_dimension = 0;
  std::vector<NcPoly> basis;
  bool matches = false;
};

/// Computes the kernel of x -> ([A, x], [B, x]) on the n-th filtration
/// piece, n = `bound`. A and B together with the central delta generate
/// the algebra, so the kernel is exactly the center intersected with that
/// piece. It is compared with the span of Omega^l alpha^r delta^s beta^t,
/// 4l + r + s + t <= bound.
inline CenterReport center_basis(unsigned bound, const AnalysisLimits& limits = {}) {
  if (bound > limits.center_bound)
    throw BoundTooLarge(bound, limits.center_bound);

  const NcPoly a(Letter::A), b(Letter::B);
  const std::vector<ExponentTuple> tuples = normal_tuples(bound);

  linear::WordIndex image_index;
  std::vector<linear::SparseVector> images;
  std::vector<mpz_class> scales(tuples.size());
  images.reserve(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const NcPoly x(Word::from_exponents(tuples[i]));
    NcPoly ca = reduce(commutator(a, x));
    NcPoly cb = reduce(commutator(b, x));
    images.push_back(linear::to_sparse({&ca, &cb}, image_index, &scales[i]));
  }

  CenterReport report;
  report.bound = bound;
  for (const linear::SparseVector& k : linear::nullspace(images)) {
    NcPoly element;
    for (const auto& [i, c] : k)
      element.add_term(Word::from_exponents(tuples[i]), Rational(mpq_class(c * scales[i])));
    report.basis.push_back(std::move(element));
  }
  report.kernel_dimension = report.basis.size();

  const auto expected = center_tuples(bound);
  report.expected_dimension = expected.size();

  linear::WordIndex kernel_index;
  linear::EchelonBasis kernel_span;
  for (const NcPoly& k : report.basis)
    kernel_span.insert(linear::to_sparse(k, kernel_index));

  bool all_in_kernel = true;
  const std::vector<NcPoly> powers = omega_powers(bound / 4);
  for (const auto& [l, r, s, t] : expected) {
    NcPoly e = reduce(powers[l] * NcPoly(central_word(r, s, t)));
    if (!kernel_span.contains(linear::to_sparse(e, kernel_index))) {
      all_in_kernel = false;
      break;
    }
  }
  report.matches = report.kernel_dimension == report.expected_dimension && all_in_kernel;
  return report;
}

/// Reduced Omega^l alpha^r delta^s beta^t for 4l + r + s + t <= weight_bound.
inline std::vector<NcPoly> omega_central_monomials(unsigned weight_bound) {
  const std::vector<NcPoly> powers = omega_powers(weight_bound / 4);
  std::vector<NcPoly> out;
  for (const auto& [l, r, s, t] : center_tuples(weight_bound))
    out.push_back(reduce(powers[l] * NcPoly(central_word(r, s, t))));
  return out;
}

/// The monomials Omega^l alpha^r delta^s beta^t with 4l + r + s + t <=
/// weight_bound are linearly independent.
inline bool algebraic_independence_check(unsigned weight_bound, const AnalysisLimits& limits = {}) {
  if (weight_bound > limits.independence_bound)
    throw BoundTooLarge(weight_bound, limits.independence_bound);
  std::vector<NcPoly> family = omega_central_monomials(weight_bound);
  return linear::rank(family) == family.size();
}

/// Exponents (i, j, k, l, r, s, t) with j in {0, 1} and
/// i + 2j + k + 4l + r + s + t <= bound.
inline std::vector<std::array<unsigned, 7>> pbw_omega_tuples(unsigned bound) {
  std::vector<std::array<unsigned, 7>> out;
  for (unsigned j = 0; j <= 1 && 2 * j <= bound; ++j)
    for (unsigned l = 0; 2 * j + 4 * l <= bound; ++l) {
      const unsigned rest = bound - 2 * j - 4 * l;
      for (unsigned i = 0; i <= rest; ++i)
        for (unsigned k = 0; i + k <= rest; ++k)
          for (unsigned r = 0; i + k + r <= rest; ++r)
            for (unsigned s = 0; i + k + r + s <= rest; ++s)
              for (unsigned t = 0; i + k + r + s + t <= rest; ++t)
                out.push_back({i, j, k, l, r, s, t});
    }
  return out;
}

/// A^i D^j B^k Omega^l alpha^r delta^s beta^t, j in {0, 1}, reduced.
inline std::vector<NcPoly> pbw_omega_monomials(unsigned bound) {
  const std::vector<NcPoly> powers = omega_powers(bound / 4);
  std::vector<NcPoly> out;
  for (const auto& [i, j, k, l, r, s, t] : pbw_omega_tuples(bound))
    out.push_back(
        reduce(NcPoly(adb_word(i, j, k)) * powers[l] * NcPoly(central_word(r, s, t))));
  return out;
}

/// The Omega-adapted monomials up to `bound` are independent and as many
/// as the normal words up to `bound`.
inline bool pbw_omega_basis_check(unsigned bound, const AnalysisLimits& limits = {}) {
  if (bound > limits.pbw_bound)
    throw BoundTooLarge(bound, limits.pbw_bound);
  std::vector<NcPoly> family = pbw_omega_monomials(bound);
  return family.size() == monomial_count(bound) && linear::rank(family) == family.size();
}

} // namespace racah
