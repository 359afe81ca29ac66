#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace racah {

/// The six primitive letters, declared in normal-form order. The enumerator
/// value is the letter's rank.
enum class Letter : std::uint8_t { A = 0, D = 1, B = 2, Alpha = 3, Delta = 4, Beta = 5 };

inline constexpr std::size_t kLetterCount = 6;

inline constexpr std::array<Letter, kLetterCount> kAllLetters = {
    Letter::A, Letter::D, Letter::B, Letter::Alpha, Letter::Delta, Letter::Beta};

constexpr int rank(Letter l) { return static_cast<int>(l); }

constexpr Letter letter_from_rank(int r) {
  if (r < 0 || r >= static_cast<int>(kLetterCount))
    throw std::out_of_range("letter rank out of range");
  return static_cast<Letter>(r);
}

constexpr std::string_view letter_name(Letter l) {
  switch (l) {
  case Letter::A: return "A";
  case Letter::D: return "D";
  case Letter::B: return "B";
  case Letter::Alpha: return "alpha";
  case Letter::Delta: return "delta";
  case Letter::Beta: return "beta";
  }
  return "?";
}

/// Filtration weight of a letter: D counts twice.
constexpr unsigned letter_weight(Letter l) { return l == Letter::D ? 2u : 1u; }

/// True for the letters that span the central subalgebra (alpha, delta, beta).
constexpr bool is_central_letter(Letter l) { return rank(l) >= rank(Letter::Alpha); }

/// Exponents (i, j, k, r, s, t) of A^i D^j B^k alpha^r delta^s beta^t.
struct ExponentTuple {
  std::array<unsigned, kLetterCount> e{};

  unsigned& operator[](std::size_t i) { return e[i]; }
  unsigned operator[](std::size_t i) const { return e[i]; }

  unsigned weight() const {
    unsigned w = 0;
    for (std::size_t i = 0; i < kLetterCount; ++i)
      w += e[i] * letter_weight(static_cast<Letter>(i));
    return w;
  }

  friend ExponentTuple operator+(const ExponentTuple& a, const ExponentTuple& b) {
    ExponentTuple r;
    for (std::size_t i = 0; i < kLetterCount; ++i)
      r.e[i] = a.e[i] + b.e[i];
    return r;
  }

  friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ExponentTuple& t) {
    os << '(';
    for (std::size_t i = 0; i < kLetterCount; ++i)
      os << (i ? ", " : "") << t.e[i];
    return os << ')';
  }
};

/// Element of the free monoid on the six letters. Stored as a byte string
/// of ranks so that short words stay inline and compare cheaply.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) {
    for (Letter l : letters)
      push_back(l);
  }
  explicit Word(Letter l) { push_back(l); }

  static Word from_exponents(const ExponentTuple& t) {
    Word w;
    for (std::size_t i = 0; i < kLetterCount; ++i)
      w.data_.append(t[i], static_cast<char>(i));
    return w;
  }

  /// Letter repeated n times.
  static Word power(Letter l, unsigned n) {
    Word w;
    w.data_.assign(n, static_cast<char>(rank(l)));
    return w;
  }

  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(data_[i]); }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[size() - 1]; }

  void push_back(Letter l) { data_.push_back(static_cast<char>(rank(l))); }
  Word& operator+=(const Word& o) { data_ += o.data_; return *this; }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    Word w;
    w.data_ = data_.substr(pos, len);
    return w;
  }

  Word reversed() const {
    Word w;
    w.data_.assign(data_.rbegin(), data_.rend());
    return w;
  }

  /// Ranks are nondecreasing left to right.
  bool is_normal() const {
    for (std::size_t i = 1; i < data_.size(); ++i)
      if (data_[i - 1] > data_[i])
        return false;
    return true;
  }

  /// Letter counts. Only a bijection on normal words.
  ExponentTuple exponents() const {
    ExponentTuple t;
    for (char c : data_)
      ++t[static_cast<std::size_t>(c)];
    return t;
  }

  unsigned weight() const {
    unsigned w = 0;
    for (char c : data_)
      w += letter_weight(static_cast<Letter>(c));
    return w;
  }

  const std::string& bytes() const { return data_; }

  friend bool operator==(const Word&, const Word&) = default;

  /// Words are ordered by length first, then rank-lexicographically.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size())
      return a.size() <=> b.size();
    int c = a.data_.compare(b.data_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  /// Space separated letter names, e.g. "B D A"; the empty word is "1".
  std::string to_string() const {
    if (empty())
      return "1";
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (i)
        out += ' ';
      out += letter_name((*this)[i]);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.to_string();
  }

private:
  std::string data_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string>{}(w.bytes());
  }
};

} // namespace racah
