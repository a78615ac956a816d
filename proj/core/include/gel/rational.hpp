#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gel {

// Exact rational on int64 with reduced representation (den > 0). Probability
// and bound arithmetic must be exact; floats appear only at the presentation
// layer. Intermediates run through __int128, and results that no longer fit
// int64 throw instead of overflowing silently.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(std::int64_t num, std::int64_t den) {
    *this = reduce128(num, den);
  }

  static Rational reduce128(__int128 num, __int128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    __int128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr __int128 lo = -static_cast<__int128>(INT64_MAX) - 1;
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("rational magnitude exceeds 64 bits");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return reduce128(static_cast<__int128>(num_) * o.den_ +
                         static_cast<__int128>(o.num_) * den_,
                     static_cast<__int128>(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const { return *this + (-o); }
  Rational operator*(const Rational& o) const {
    return reduce128(static_cast<__int128>(num_) * o.num_,
                     static_cast<__int128>(den_) * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::invalid_argument("rational division by zero");
    return reduce128(static_cast<__int128>(num_) * o.den_,
                     static_cast<__int128>(den_) * o.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ <
           static_cast<__int128>(o.num_) * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  bool is_integer() const { return den_ == 1; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "3/7"; integers print without the slash.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "3/7", "0.125", "2", "-0.5"; decimal digits convert exactly.
  static Rational parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      return Rational(std::stoll(text.substr(0, slash)),
                      std::stoll(text.substr(slash + 1)));
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    bool neg = text[0] == '-';
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (neg) digits = digits.substr(1);
    std::size_t frac = text.size() - dot - 1;
    if (frac > 18) throw std::invalid_argument("decimal literal too precise");
    __int128 den = 1;
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    __int128 num = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("bad rational literal: " + text);
      num = num * 10 + (ch - '0');
    }
    return reduce128(neg ? -num : num, den);
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace gel
