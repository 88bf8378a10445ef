#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pgq {

// Exact rational scalar over arbitrary-precision integers.
// Canonical form invariant: denominator > 0, gcd(|num|, den) = 1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "p", "-p", "p/q" with decimal digits; q must be nonzero.
  static std::optional<Rational> parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return std::nullopt;
    bool seen_slash = false;
    std::size_t digits_before = 0, digits_after = 0;
    for (; i < s.size(); ++i) {
      char ch = s[i];
      if (ch == '/') {
        if (seen_slash) return std::nullopt;
        seen_slash = true;
      } else if (ch >= '0' && ch <= '9') {
        (seen_slash ? digits_after : digits_before)++;
      } else {
        return std::nullopt;
      }
    }
    if (digits_before == 0 || (seen_slash && digits_after == 0)) return std::nullopt;
    std::string text(s[0] == '+' ? s.substr(1) : s);
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
    if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0) return std::nullopt;
    v.canonicalize();
    return Rational(std::move(v));
  }

  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

private:
  mpq_class v_;
};

}  // namespace pgq
