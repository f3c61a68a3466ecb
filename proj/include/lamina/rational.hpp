#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lamina {

// Exact rational on int64 with __int128 intermediates. Always normalized:
// gcd(num, den) == 1, den > 0. Throws std::overflow_error if a result leaves
// the int64 range; weights in this library are desk-scale, so that is a bug
// trap rather than an expected path.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from128(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return from128(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // Canonical form "p/q", or just "p" when q == 1. parse() accepts both.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  static Rational parse(std::string_view s);

  double to_double() const { return double(num_) / double(den_); }

 private:
  static Rational from128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = (std::int64_t)n;
    r.den_ = (std::int64_t)d;
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void normalize() { *this = from128(num_, den_); }

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational Rational::parse(std::string_view s) {
  auto bad = [&]() -> std::invalid_argument {
    return std::invalid_argument("bad rational: '" + std::string(s) + "'");
  };
  if (s.empty()) throw bad();
  size_t slash = s.find('/');
  auto to_i64 = [&](std::string_view t) {
    if (t.empty()) throw bad();
    size_t pos = 0;
    std::int64_t v;
    try {
      v = std::stoll(std::string(t), &pos);
    } catch (const std::exception&) {
      throw bad();
    }
    if (pos != t.size()) throw bad();
    return v;
  };
  if (slash == std::string_view::npos) return Rational(to_i64(s));
  return Rational(to_i64(s.substr(0, slash)), to_i64(s.substr(slash + 1)));
}

// Nonnegative extended rational: a finite value or +infinity. Infinity is a
// symbolic value barred from arithmetic; only comparison and printing see it.
class ExtRational {
 public:
  ExtRational() : inf_(false) {}
  ExtRational(Rational v) : inf_(false), val_(v) {}
  static ExtRational infinity() {
    ExtRational e;
    e.inf_ = true;
    return e;
  }
  bool is_infinite() const { return inf_; }
  const Rational& finite() const {
    if (inf_) throw std::domain_error("infinite value used as finite");
    return val_;
  }
  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.val_ == b.val_;
  }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.val_ < b.val_;
  }
  std::string str() const { return inf_ ? "inf" : val_.str(); }

 private:
  bool inf_;
  Rational val_;
};

}  // namespace lamina
