#pragma once

#include "racah/polynomial.hpp"
#include "racah/rewrite.hpp"
#include "racah/word.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace racah {

class UnknownName : public std::invalid_argument {
public:
  explicit UnknownName(const std::string& name)
      : std::invalid_argument("unknown element name '" + name + "'") {}
};

class PowerOutOfRange : public std::out_of_range {
public:
  explicit PowerOutOfRange(int power)
      : std::out_of_range("D6 power " + std::to_string(power) + " outside 0..5") {}
};

namespace gen {

inline NcPoly A() { return NcPoly(Letter::A); }
inline NcPoly B() { return NcPoly(Letter::B); }
inline NcPoly D() { return NcPoly(Letter::D); }
inline NcPoly alpha() { return NcPoly(Letter::Alpha); }
inline NcPoly beta() { return NcPoly(Letter::Beta); }
inline NcPoly delta() { return NcPoly(Letter::Delta); }
/// C = delta - A - B
inline NcPoly C() { return delta() - A() - B(); }
/// gamma = -alpha - beta
inline NcPoly gamma() { return -alpha() - beta(); }

} // namespace gen

inline constexpr std::array<std::string_view, 12> kElementNames = {
    "A", "B", "C", "D", "alpha", "beta", "gamma", "delta",
    "Omega_A", "Omega_B", "Omega_C", "CasRep"};

namespace detail {

inline Rational half() { return Rational(mpz_class(1), mpz_class(2)); }

// D^2 + (X Y Z + Z Y X)/2 + Y^2 + ... ; the three cyclic Casimir forms.
inline NcPoly omega_a() {
  using namespace gen;
  return D() * D() + (B() * A() * C() + C() * A() * B()) * half() + A() * A() +
         B() * gamma() - C() * beta() - A() * delta();
}

inline NcPoly omega_b() {
  using namespace gen;
  return D() * D() + (C() * B() * A() + A() * B() * C()) * half() + B() * B() +
         C() * alpha() - A() * gamma() - B() * delta();
}

inline NcPoly omega_c() {
  using namespace gen;
  return D() * D() + (A() * C() * B() + B() * C() * A()) * half() + C() * C() +
         A() * beta() - B() * alpha() - C() * delta();
}

// Representative of the Casimir class written in A, D, B and the central
// letters: Omega_C with C = delta - A - B eliminated. The B term is
// -B(delta + alpha); with +B(delta - alpha) the element differs from
// Omega_C by 2 B delta and is not central.
inline NcPoly casimir_representative() {
  using namespace gen;
  NcPoly ab = anticommutator(A(), B());
  NcPoly inner = (delta() + NcPoly(2)) * ab - anticommutator(A() * A(), B()) -
                 anticommutator(A(), B() * B());
  return D() * D() + A() * A() + B() * B() + inner * half() + A() * (beta() - delta()) -
         B() * (delta() + alpha());
}

} // namespace detail

/// Named element of the algebra, reduced to normal form.
inline NcPoly named(std::string_view name) {
  using namespace gen;
  if (name == "A") return A();
  if (name == "B") return B();
  if (name == "C") return C();
  if (name == "D") return D();
  if (name == "alpha") return alpha();
  if (name == "beta") return beta();
  if (name == "gamma") return gamma();
  if (name == "delta") return delta();
  if (name == "Omega_A") {
    static const NcPoly v = reduce(detail::omega_a());
    return v;
  }
  if (name == "Omega_B") {
    static const NcPoly v = reduce(detail::omega_b());
    return v;
  }
  if (name == "Omega_C") {
    static const NcPoly v = reduce(detail::omega_c());
    return v;
  }
  if (name == "CasRep") {
    static const NcPoly v = reduce(detail::casimir_representative());
    return v;
  }
  throw UnknownName(std::string(name));
}

inline bool is_named(std::string_view name) {
  for (auto n : kElementNames)
    if (n == name)
      return true;
  return false;
}

/// An algebra homomorphism (or antihomomorphism when `reversing`) of the
/// free algebra, given by the images of the six letters. Scalars are fixed.
struct Morphism {
  std::array<NcPoly, kLetterCount> images;
  bool reversing = false;

  const NcPoly& image(Letter l) const { return images[static_cast<std::size_t>(rank(l))]; }

  static Morphism identity() {
    Morphism m;
    for (Letter l : kAllLetters)
      m.images[static_cast<std::size_t>(rank(l))] = NcPoly(l);
    return m;
  }

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Image of `p` under `m`, reduced to normal form.
inline NcPoly apply(const Morphism& m, const NcPoly& p,
                    const ReductionSystem& sys = default_system()) {
  NcPoly out;
  for (const auto& [w, c] : p) {
    NcPoly img(1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      Letter l = m.reversing ? w[w.size() - 1 - i] : w[i];
      img = sys.reduce(img * m.image(l));
    }
    out.add_scaled(img, c);
  }
  return out;
}

/// outer after inner: x -> outer(inner(x)).
inline Morphism compose(const Morphism& outer, const Morphism& inner) {
  Morphism m;
  m.reversing = outer.reversing != inner.reversing;
  for (Letter l : kAllLetters)
    m.images[static_cast<std::size_t>(rank(l))] = apply(outer, inner.image(l));
  return m;
}

/// The antiautomorphism swapping A and B.
inline Morphism sigma() {
  using namespace gen;
  Morphism m;
  m.reversing = true;
  m.images = {B(), D(), A(), -beta(), delta(), -alpha()};
  return m;
}

/// The antiautomorphism cycling A -> B -> C -> A with D -> -D.
inline Morphism tau() {
  using namespace gen;
  Morphism m;
  m.reversing = true;
  m.images = {B(), -D(), C(), beta(), delta(), gamma()};
  return m;
}

/// sigma^reflected * tau^power in the dihedral group of order 12, with
/// sigma^2 = tau^6 = (sigma tau)^2 = 1.
class D6Element {
public:
  D6Element() = default;
  D6Element(bool reflected, int power) : reflected_(reflected), power_(power) {
    if (power < 0 || power > 5)
      throw PowerOutOfRange(power);
  }

  bool reflected() const { return reflected_; }
  int power() const { return power_; }

  /// Group product; tau^b sigma = sigma tau^-b.
  friend D6Element operator*(const D6Element& x, const D6Element& y) {
    int b = y.reflected_ ? -x.power_ : x.power_;
    int p = ((b + y.power_) % 6 + 6) % 6;
    return D6Element(x.reflected_ != y.reflected_, p);
  }

  D6Element inverse() const {
    if (reflected_)
      return *this;
    return D6Element(false, (6 - power_) % 6);
  }

  /// The composite morphism sigma^reflected o tau^power.
  Morphism realized() const {
    Morphism m = Morphism::identity();
    const Morphism t = tau();
    for (int i = 0; i < power_; ++i)
      m = compose(m, t);
    if (reflected_)
      m = compose(sigma(), m);
    return m;
  }

  /// "id", "tau^2", "sigma", "sigma*tau^3", ...
  std::string name() const {
    std::string t = power_ == 0 ? "" : power_ == 1 ? "tau" : "tau^" + std::to_string(power_);
    if (!reflected_)
      return t.empty() ? "id" : t;
    return t.empty() ? "sigma" : "sigma*" + t;
  }

  static std::optional<D6Element> parse(std::string_view text) {
    if (text == "id")
      return D6Element();
    bool reflected = false;
    if (text.starts_with("sigma")) {
      reflected = true;
      text.remove_prefix(5);
      if (text.empty())
        return D6Element(true, 0);
      if (!text.starts_with("*"))
        return std::nullopt;
      text.remove_prefix(1);
    }
    if (!text.starts_with("tau"))
      return std::nullopt;
    text.remove_prefix(3);
    int power = 1;
    if (!text.empty()) {
      if (text.size() != 2 || text[0] != '^' || text[1] < '0' || text[1] > '5')
        return std::nullopt;
      power = text[1] - '0';
    }
    return D6Element(reflected, power);
  }

  friend bool operator==(const D6Element&, const D6Element&) = default;

private:
  bool reflected_ = false;
  int power_ = 0;
};

inline D6Element d6_element(bool reflected, int power) { return D6Element(reflected, power); }

/// All twelve elements, rotations first.
inline std::vector<D6Element> d6_elements() {
  std::vector<D6Element> out;
  for (bool r : {false, true})
    for (int p = 0; p < 6; ++p)
      out.emplace_back(r, p);
  return out;
}

enum class Presentation { Definition, Pres1, Pres2, Pres3 };

/// Relations of a presentation, each as lhs - rhs in the free algebra with
/// C and gamma expanded. Every entry reduces to zero.
inline std::vector<NcPoly> presentation_relations(Presentation which) {
  using namespace gen;
  auto comm = [](const NcPoly& x, const NcPoly& y) { return commutator(x, y); };
  const NcPoly two(2);
  std::vector<NcPoly> rel;

  switch (which) {
  case Presentation::Definition: {
    rel.push_back(comm(A(), B()) - two * D());
    rel.push_back(comm(B(), C()) - two * D());
    rel.push_back(comm(C(), A()) - two * D());
    NcPoly alpha_def = comm(A(), D()) + A() * C() - B() * A();
    NcPoly beta_def = comm(B(), D()) + B() * A() - C() * B();
    NcPoly gamma_def = comm(C(), D()) + C() * B() - A() * C();
    rel.push_back(alpha_def - alpha());
    rel.push_back(beta_def - beta());
    rel.push_back(gamma_def - gamma());
    rel.push_back(A() + B() + C() - delta());
    // each of the three defining expressions is central
    for (const NcPoly* x : {&alpha_def, &beta_def, &gamma_def})
      for (const NcPoly& g : {A(), B(), C(), D()})
        rel.push_back(comm(*x, g));
    break;
  }
  case Presentation::Pres1:
    rel.push_back(B() * A() - (A() * B() - two * D()));
    rel.push_back(C() * B() - (B() * C() - two * D()));
    rel.push_back(C() * A() - (A() * C() + two * D()));
    rel.push_back(D() * A() - (A() * D() - B() * A() + A() * C() - alpha()));
    rel.push_back(D() * B() - (B() * D() - C() * B() + B() * A() - beta()));
    for (const NcPoly& x : {alpha(), beta()})
      for (const NcPoly& g : {A(), B(), C()})
        rel.push_back(x * g - g * x);
    break;
  case Presentation::Pres2:
    rel.push_back(B() * A() - (A() * B() - two * D()));
    rel.push_back(D() * A() - (A() * D() + A() * delta() - A() * A() - two * A() * B() +
                               two * D() - alpha()));
    rel.push_back(B() * D() - (D() * B() + B() * delta() - B() * B() - two * A() * B() +
                               two * D() + beta()));
    for (const NcPoly& g : {A(), B()})
      for (const NcPoly& x : {alpha(), beta(), delta()})
        rel.push_back(x * g - g * x);
    rel.push_back(alpha() * delta() - delta() * alpha());
    rel.push_back(beta() * delta() - delta() * beta());
    break;
  case Presentation::Pres3: {
    NcPoly a2 = A() * A(), b2 = B() * B();
    rel.push_back(comm(A(), comm(A(), comm(A(), B()))) - two * comm(a2, B()));
    rel.push_back(comm(B(), comm(B(), comm(B(), A()))) - two * comm(b2, A()));
    rel.push_back(comm(B(), comm(A(), comm(B(), A()))) -
                  (two * comm(A(), b2) - two * comm(B(), a2) - two * comm(A(), B()) * delta()));
    rel.push_back(comm(A(), comm(B(), comm(A(), B()))) -
                  (two * comm(B(), a2) - two * comm(A(), b2) - two * comm(B(), A()) * delta()));
    rel.push_back(delta() * A() - A() * delta());
    rel.push_back(delta() * B() - B() * delta());
    break;
  }
  }
  return rel;
}

/// D, alpha and beta written through A, B and delta, as lhs - rhs.
inline std::vector<NcPoly> alternate_identities() {
  using namespace gen;
  const NcPoly h(detail::half());
  NcPoly ab = commutator(A(), B());
  return {
      D() - h * ab,
      alpha() - (h * commutator(A(), ab) + A() * delta() - A() * A() - anticommutator(A(), B())),
      beta() - (h * commutator(B(), ab) - B() * delta() + B() * B() + anticommutator(A(), B())),
  };
}

/// reduce(p) lies in the subalgebra spanned by words in alpha, delta, beta.
inline bool is_central_subalgebra_element(const NcPoly& p) {
  for (const auto& [w, c] : reduce(p))
    for (std::size_t i = 0; i < w.size(); ++i)
      if (!is_central_letter(w[i]))
        return false;
  return true;
}

/// p lies in the Casimir class: p - CasRep is in the central subalgebra.
inline bool is_casimir(const NcPoly& p) {
  static const NcPoly rep = named("CasRep");
  return is_central_subalgebra_element(p - rep);
}

} // namespace racah
