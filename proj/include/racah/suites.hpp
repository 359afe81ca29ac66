#pragma once

#include "racah/algebra.hpp"
#include "racah/analysis.hpp"
#include "racah/polynomial.hpp"
#include "racah/rewrite.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace racah::suites {

struct CheckResult {
  std::string name;
  bool pass = false;
  double elapsed_ms = 0;
};

struct SuiteConfig {
  AnalysisLimits limits;
  std::uint64_t seed = 20170101;
};

struct Suite {
  std::string_view name;
  std::function<std::vector<CheckResult>(const SuiteConfig&)> run;
};

/// Normal form of B D A, which both overlap paths must reach.
inline NcPoly expected_bda_normal_form() {
  using L = Letter;
  struct T { int c; std::vector<Letter> w; };
  const T terms[] = {
      {1, {L::A, L::D, L::B}},  {-2, {L::D, L::D}},        {-3, {L::A, L::A, L::B}},
      {-3, {L::A, L::B, L::B}}, {6, {L::A, L::D}},          {6, {L::D, L::B}},
      {2, {L::A, L::B, L::Delta}}, {-2, {L::D, L::Delta}},  {-2, {L::A, L::A}},
      {-2, {L::B, L::B}},       {-8, {L::A, L::B}},         {1, {L::A, L::Beta}},
      {2, {L::A, L::Delta}},    {-1, {L::B, L::Alpha}},     {2, {L::B, L::Delta}},
      {8, {L::D}},              {-2, {L::Alpha}},           {2, {L::Beta}},
  };
  NcPoly p;
  for (const T& t : terms) {
    Word w;
    for (Letter l : t.w)
      w.push_back(l);
    p.add_term(w, Rational(t.c));
  }
  return p;
}

namespace detail {

template <class F>
CheckResult timed(std::string name, F&& f) {
  auto start = std::chrono::steady_clock::now();
  bool pass = f();
  auto stop = std::chrono::steady_clock::now();
  return {std::move(name), pass,
          std::chrono::duration<double, std::milli>(stop - start).count()};
}

inline bool all_reduce_to_zero(const std::vector<NcPoly>& ps) {
  for (const NcPoly& p : ps)
    if (!reduce(p).is_zero())
      return false;
  return true;
}

inline std::vector<NcPoly> generator_tuple() {
  using namespace gen;
  return {A(), B(), D(), alpha(), beta(), delta()};
}

inline std::vector<NcPoly> images_of_generators(const Morphism& m) {
  std::vector<NcPoly> out;
  for (const NcPoly& g : generator_tuple())
    out.push_back(apply(m, g));
  return out;
}

inline bool acts_as_identity(const Morphism& m) {
  return images_of_generators(m) == generator_tuple();
}

} // namespace detail

inline std::vector<CheckResult> presentations(const SuiteConfig&) {
  using detail::timed;
  using detail::all_reduce_to_zero;
  return {
      timed("definition relations reduce to 0",
            [] { return all_reduce_to_zero(presentation_relations(Presentation::Definition)); }),
      timed("presentation 1 relations reduce to 0",
            [] { return all_reduce_to_zero(presentation_relations(Presentation::Pres1)); }),
      timed("presentation 2 relations reduce to 0",
            [] { return all_reduce_to_zero(presentation_relations(Presentation::Pres2)); }),
      timed("presentation 3 relations reduce to 0",
            [] { return all_reduce_to_zero(presentation_relations(Presentation::Pres3)); }),
  };
}

inline std::vector<CheckResult> alternate_identities_suite(const SuiteConfig&) {
  return {detail::timed("D, alpha, beta through A, B, delta",
                        [] { return detail::all_reduce_to_zero(alternate_identities()); })};
}

inline std::vector<CheckResult> d6_group(const SuiteConfig&) {
  using detail::timed;
  std::vector<CheckResult> out;
  out.push_back(timed("sigma^2 = 1", [] {
    return detail::acts_as_identity(compose(sigma(), sigma()));
  }));
  out.push_back(timed("tau^6 = 1", [] {
    Morphism m = Morphism::identity();
    for (int i = 0; i < 6; ++i)
      m = compose(m, tau());
    return detail::acts_as_identity(m);
  }));
  out.push_back(timed("(sigma tau)^2 = 1", [] {
    Morphism st = compose(sigma(), tau());
    return detail::acts_as_identity(compose(st, st));
  }));
  out.push_back(timed("group law on 144 pairs", [] {
    std::vector<D6Element> els = d6_elements();
    std::vector<Morphism> real;
    for (const D6Element& g : els)
      real.push_back(g.realized());
    for (std::size_t x = 0; x < els.size(); ++x)
      for (std::size_t y = 0; y < els.size(); ++y) {
        D6Element xy = els[x] * els[y];
        std::size_t idx = static_cast<std::size_t>((xy.reflected() ? 6 : 0) + xy.power());
        if (detail::images_of_generators(compose(real[x], real[y])) !=
            detail::images_of_generators(real[idx]))
          return false;
      }
    return true;
  }));
  out.push_back(timed("sigma, tau preserve presentation 2", [] {
    for (const Morphism& m : {sigma(), tau()})
      for (const NcPoly& rel : presentation_relations(Presentation::Pres2))
        if (!apply(m, rel).is_zero())
          return false;
    return true;
  }));
  return out;
}

inline std::vector<CheckResult> d6_faithful(const SuiteConfig&) {
  return {detail::timed("12 distinct realized morphisms", [] {
    std::set<std::vector<std::string>> seen;
    for (const D6Element& g : d6_elements()) {
      std::vector<std::string> key;
      for (const NcPoly& img : detail::images_of_generators(g.realized())) {
        std::string s;
        for (const auto& [w, c] : img)
          s += c.to_string() + ":" + w.bytes() + ";";
        key.push_back(std::move(s));
      }
      seen.insert(std::move(key));
    }
    return seen.size() == 12;
  })};
}

inline std::vector<CheckResult> casimir_centrality(const SuiteConfig&) {
  std::vector<CheckResult> out;
  for (std::string_view omega : {"Omega_A", "Omega_B", "Omega_C", "CasRep"}) {
    out.push_back(detail::timed(std::string(omega) + " commutes with generators", [omega] {
      const NcPoly o = named(omega);
      for (std::string_view g : {"A", "B", "C", "D", "alpha", "beta", "gamma", "delta"})
        if (!reduce(commutator(o, named(g))).is_zero())
          return false;
      return true;
    }));
  }
  return out;
}

inline std::vector<CheckResult> casimir_class(const SuiteConfig&) {
  using detail::timed;
  std::vector<CheckResult> out;
  out.push_back(timed("Omega_C = CasRep", [] {
    return reduce(named("Omega_C") - named("CasRep")).is_zero();
  }));
  out.push_back(timed("Omega_B - Omega_C = alpha + alpha delta", [] {
    using namespace gen;
    return reduce(named("Omega_B") - named("Omega_C")) == reduce(alpha() + alpha() * delta());
  }));
  out.push_back(timed("Omega_A, Omega_B, Omega_C are Casimir elements", [] {
    return is_casimir(named("Omega_A")) && is_casimir(named("Omega_B")) &&
           is_casimir(named("Omega_C"));
  }));
  out.push_back(timed("sigma, tau permute Omega_A, Omega_B, Omega_C", [] {
    const NcPoly oa = named("Omega_A"), ob = named("Omega_B"), oc = named("Omega_C");
    const Morphism s = sigma(), t = tau();
    return apply(s, oa) == ob && apply(s, ob) == oa && apply(s, oc) == oc &&
           apply(t, oa) == ob && apply(t, ob) == oc && apply(t, oc) == oa;
  }));
  out.push_back(timed("Casimir class is D6-stable", [] {
    const NcPoly oa = named("Omega_A");
    for (const D6Element& g : d6_elements())
      if (!is_casimir(apply(g.realized(), oa)))
        return false;
    return true;
  }));
  return out;
}

inline std::vector<CheckResult> confluence(const SuiteConfig&) {
  return {detail::timed("20 overlaps, all resolvable", [] {
    auto reports = check_confluence();
    if (reports.size() != 20)
      return false;
    for (const auto& r : reports)
      if (!r.resolvable)
        return false;
    return default_system().inclusion_ambiguity_count() == 0;
  })};
}

inline std::vector<CheckResult> bda(const SuiteConfig&) {
  return {detail::timed("B D A normal form", [] {
    const NcPoly expected = expected_bda_normal_form();
    if (reduce_word(Word{Letter::B, Letter::D, Letter::A}) != expected)
      return false;
    for (const auto& r : check_confluence())
      if (r.overlap_word == Word{Letter::B, Letter::D, Letter::A})
        return r.left_path_result == expected && r.right_path_result == expected;
    return false;
  })};
}

inline std::vector<CheckResult> filtration(const SuiteConfig& cfg) {
  using detail::timed;
  std::vector<CheckResult> out;
  out.push_back(timed("dim R_0 = 1, dim R_1 = 6", [] {
    return monomial_count(0) == 1 && monomial_count(1) == 6;
  }));
  out.push_back(timed("R_m R_n within R_{m+n}", [seed = cfg.seed] {
    std::mt19937_64 rng(seed);
    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned n = 0; n <= 3; ++n)
        for (int rep = 0; rep < 5; ++rep) {
          NcPoly u = random_normal_polynomial(rng, m);
          NcPoly v = random_normal_polynomial(rng, n);
          if (!degree(reduce(u * v)).at_most(m + n))
            return false;
        }
    return true;
  }));
  out.push_back(timed("R_n is D6-stable", [seed = cfg.seed] {
    std::mt19937_64 rng(seed + 1);
    std::vector<Morphism> ms;
    for (const D6Element& g : d6_elements())
      ms.push_back(g.realized());
    for (int rep = 0; rep < 10; ++rep) {
      NcPoly p = random_normal_polynomial(rng, 3);
      FiltrationDegree d = degree(p);
      for (const Morphism& m : ms)
        if (degree(apply(m, p)) > d)
          return false;
    }
    return true;
  }));
  out.push_back(timed("commutator degree estimates up to (2,1,2)",
                      [] { return commutator_degree_checks(2, 1, 2); }));
  return out;
}

inline std::vector<CheckResult> leading_terms(const SuiteConfig& cfg) {
  return {detail::timed("200 sampled products: nonzero, additive leading tuples",
                        [seed = cfg.seed] { return leading_multiplicativity_check(200, 4, seed); })};
}

inline std::vector<CheckResult> omega_powers_suite(const SuiteConfig&) {
  return {
      detail::timed("Omega_A has degree 4", [] { return degree(named("Omega_A")) == FiltrationDegree(4); }),
      detail::timed("Omega^n = D^{2n} mod R_{4n-1}, n <= 2", [] { return omega_power_congruence(2); }),
  };
}

inline std::vector<CheckResult> center(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  const unsigned top = std::min(5u, cfg.limits.center_bound);
  for (unsigned n = 0; n <= top; ++n)
    out.push_back(detail::timed("center at bound " + std::to_string(n), [n, &cfg] {
      return center_basis(n, cfg.limits).matches;
    }));
  return out;
}

inline std::vector<CheckResult> independence(const SuiteConfig& cfg) {
  const unsigned b = cfg.limits.independence_bound;
  return {detail::timed("Omega^l alpha^r delta^s beta^t independent, weight <= " + std::to_string(b),
                        [b, &cfg] { return algebraic_independence_check(b, cfg.limits); })};
}

inline std::vector<CheckResult> pbw_omega(const SuiteConfig& cfg) {
  const unsigned b = std::min(4u, cfg.limits.pbw_bound);
  return {detail::timed("Omega-adapted PBW basis at bound " + std::to_string(b),
                        [b, &cfg] { return pbw_omega_basis_check(b, cfg.limits); })};
}

/// Catalogue order; `verify all` runs these in sequence.
inline const std::vector<Suite>& catalogue() {
  static const std::vector<Suite> suites = {
      {"presentations", presentations},
      {"alternate-identities", alternate_identities_suite},
      {"d6-group", d6_group},
      {"d6-faithful", d6_faithful},
      {"casimir-centrality", casimir_centrality},
      {"casimir-class", casimir_class},
      {"confluence", confluence},
      {"bda", bda},
      {"filtration", filtration},
      {"leading-terms", leading_terms},
      {"omega-powers", omega_powers_suite},
      {"center", center},
      {"independence", independence},
      {"pbw-omega", pbw_omega},
  };
  return suites;
}

inline const Suite* find_suite(std::string_view name) {
  for (const Suite& s : catalogue())
    if (s.name == name)
      return &s;
  return nullptr;
}

} // namespace racah::suites
