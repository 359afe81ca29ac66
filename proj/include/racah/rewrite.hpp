#pragma once

#include "racah/polynomial.hpp"
#include "racah/word.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace racah {

class FuelExhausted : public std::runtime_error {
public:
  explicit FuelExhausted(std::uint64_t fuel)
      : std::runtime_error("reduction exceeded fuel of " + std::to_string(fuel) + " steps"),
        fuel_(fuel) {}
  std::uint64_t fuel() const { return fuel_; }

private:
  std::uint64_t fuel_;
};

inline constexpr std::uint64_t kDefaultFuel = 10'000'000;

/// Which non-normal adjacent pair a rewrite step picks.
enum class Strategy { Leftmost, Rightmost };

template <class Coeff>
struct ReductionRule {
  Word lhs; // two letters, strictly decreasing rank
  Polynomial<Coeff> rhs;
};

template <class Coeff>
struct AmbiguityReport {
  Word overlap_word;
  Polynomial<Coeff> left_path_result;  // (xy)z rewritten first
  Polynomial<Coeff> right_path_result; // x(yz) rewritten first
  bool resolvable = false;
};

/// The fifteen rules that sort adjacent letters into the order
/// A, D, B, alpha, delta, beta. Normal forms are the PBW monomials
/// A^i D^j B^k alpha^r delta^s beta^t.
///
/// Every step replaces a word by a combination of words that are either
/// shorter or have fewer rank inversions at the same length, so each
/// reduction halts. The fuel bound turns a violation of that into an
/// error instead of a hang.
template <class Coeff>
class BasicReductionSystem {
public:
  using Poly = Polynomial<Coeff>;
  using Rule = ReductionRule<Coeff>;

  explicit BasicReductionSystem(std::uint64_t fuel = kDefaultFuel) : fuel_(fuel) {
    using L = Letter;
    auto w = [](std::initializer_list<Letter> ls) { return Word(ls); };
    auto c = [](int v) { return Coeff(v); };

    Poly ab = Poly(w({L::A, L::B}));
    Poly d = Poly(L::D);

    // BA = AB - 2D
    define(L::B, L::A, ab - d * c(2));
    // DA = AD + A delta - A^2 - 2AB + 2D - alpha
    define(L::D, L::A,
           Poly(w({L::A, L::D})) + Poly(w({L::A, L::Delta})) - Poly(w({L::A, L::A})) -
               ab * c(2) + d * c(2) - Poly(L::Alpha));
    // BD = DB + B delta - B^2 - 2AB + 2D + beta
    define(L::B, L::D,
           Poly(w({L::D, L::B})) + Poly(w({L::B, L::Delta})) - Poly(w({L::B, L::B})) -
               ab * c(2) + d * c(2) + Poly(L::Beta));
    // alpha, delta, beta commute with everything.
    for (Letter x : kAllLetters)
      for (Letter y : kAllLetters)
        if (rank(x) > rank(y) && is_central_letter(x))
          define(x, y, Poly(w({y, x})));
  }

  std::uint64_t fuel() const { return fuel_; }

  const std::vector<Rule>& rules() const { return rules_; }

  /// Rule with left-hand side `x y`, if any.
  const Rule* rule_for(Letter x, Letter y) const {
    auto i = table_[index(x, y)];
    return i < 0 ? nullptr : &rules_[static_cast<std::size_t>(i)];
  }

  Poly reduce(const Poly& p, Strategy strategy = Strategy::Leftmost) const {
    Session s(*this, strategy);
    Poly out;
    for (const auto& [w, c] : p)
      out.add_scaled(s.normal_form(w), c);
    return out;
  }

  Poly reduce_word(const Word& w, Strategy strategy = Strategy::Leftmost) const {
    Session s(*this, strategy);
    return s.normal_form(w);
  }

  /// Number of rule applications `reduce` performs on `p`.
  std::uint64_t count_steps(const Poly& p, Strategy strategy = Strategy::Leftmost) const {
    Session s(*this, strategy);
    for (const auto& [w, c] : p)
      s.normal_form(w);
    return s.steps();
  }

  static bool is_normal(const Poly& p) { return p.is_normal(); }

  /// Every length-three word whose two length-two factors are both rule
  /// left-hand sides, resolved both ways.
  std::vector<AmbiguityReport<Coeff>> check_confluence() const {
    std::vector<AmbiguityReport<Coeff>> reports;
    for (const Rule& first : rules_) {
      for (const Rule& second : rules_) {
        if (first.lhs[1] != second.lhs[0])
          continue;
        Letter x = first.lhs[0], y = first.lhs[1], z = second.lhs[1];
        AmbiguityReport<Coeff> r;
        r.overlap_word = Word{x, y, z};
        r.left_path_result = reduce(first.rhs * Poly(z));
        r.right_path_result = reduce(Poly(x) * second.rhs);
        r.resolvable = r.left_path_result == r.right_path_result;
        reports.push_back(std::move(r));
      }
    }
    return reports;
  }

  /// Inclusion ambiguities need one left-hand side to be a subword of
  /// another; with distinct length-two left-hand sides that only happens
  /// for duplicates.
  std::size_t inclusion_ambiguity_count() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      for (std::size_t j = 0; j < rules_.size(); ++j)
        if (i != j && rules_[i].lhs == rules_[j].lhs)
          ++n;
    return n;
  }

private:
  static constexpr std::size_t index(Letter x, Letter y) {
    return static_cast<std::size_t>(rank(x)) * kLetterCount + static_cast<std::size_t>(rank(y));
  }

  void define(Letter x, Letter y, Poly rhs) {
    table_[index(x, y)] = static_cast<int>(rules_.size());
    rules_.push_back(Rule{Word{x, y}, std::move(rhs)});
  }

  // One reduction call. Normal forms of intermediate words are memoized so
  // shared subterms are rewritten once.
  class Session {
  public:
    Session(const BasicReductionSystem& sys, Strategy strategy)
        : sys_(sys), strategy_(strategy) {}

    Poly normal_form(const Word& w) {
      std::optional<std::size_t> pos = redex(w);
      if (!pos)
        return Poly(w);
      if (auto it = memo_.find(w); it != memo_.end())
        return it->second;

      if (++steps_ > sys_.fuel_)
        throw FuelExhausted(sys_.fuel_);

      const Rule* rule = sys_.rule_for(w[*pos], w[*pos + 1]);
      Word prefix = w.substr(0, *pos);
      Word suffix = w.substr(*pos + 2);
      Poly out;
      for (const auto& [v, c] : rule->rhs)
        out.add_scaled(normal_form(prefix + v + suffix), c);
      return memo_.emplace(w, std::move(out)).first->second;
    }

    std::uint64_t steps() const { return steps_; }

  private:
    std::optional<std::size_t> redex(const Word& w) const {
      const std::size_t n = w.size();
      if (n < 2)
        return std::nullopt;
      if (strategy_ == Strategy::Leftmost) {
        for (std::size_t i = 0; i + 1 < n; ++i)
          if (rank(w[i]) > rank(w[i + 1]))
            return i;
      } else {
        for (std::size_t i = n - 1; i-- > 0;)
          if (rank(w[i]) > rank(w[i + 1]))
            return i;
      }
      return std::nullopt;
    }

    const BasicReductionSystem& sys_;
    Strategy strategy_;
    std::unordered_map<Word, Poly, WordHash> memo_;
    std::uint64_t steps_ = 0;
  };

  std::vector<Rule> rules_;
  std::array<int, kLetterCount * kLetterCount> table_ = [] {
    std::array<int, kLetterCount * kLetterCount> t{};
    t.fill(-1);
    return t;
  }();
  std::uint64_t fuel_;
};

using ReductionSystem = BasicReductionSystem<Rational>;

/// Shared default-fuel system.
inline const ReductionSystem& default_system() {
  static const ReductionSystem sys;
  return sys;
}

inline NcPoly reduce(const NcPoly& p) { return default_system().reduce(p); }
inline NcPoly reduce_word(const Word& w) { return default_system().reduce_word(w); }
inline bool is_normal(const NcPoly& p) { return p.is_normal(); }
inline std::vector<AmbiguityReport<Rational>> check_confluence() {
  return default_system().check_confluence();
}

} // namespace racah
