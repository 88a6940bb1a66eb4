#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace cgt {

// Tri-state outcome of oracle queries and bounded searches.
// nullopt means "indeterminate" (budget exhausted, never a definite answer).
using TriBool = std::optional<bool>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

// A word references a letter outside the presentation's alphabet.
struct AlphabetError : Error {
  using Error::Error;
};

// Empty relator where a nonempty one is required.
struct DegenerateRelatorError : Error {
  using Error::Error;
};

// An operation requiring a C'(1/6) certificate was called without one.
struct CertificateMissingError : Error {
  using Error::Error;
};

struct InputError : Error {
  using Error::Error;
};

// Exact rational, normalized with positive denominator.
struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw InputError("fraction with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  friend bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) { return a < b || a == b; }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  // Accepts "p/q" or a plain integer.
  static Fraction parse(const std::string& s);
};

}  // namespace cgt
