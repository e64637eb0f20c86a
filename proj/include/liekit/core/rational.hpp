#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace liekit {

using BigInt = mpz_class;

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always canonical: lowest terms, positive denominator. Backed by GMP's
/// mpq_class; this wrapper exists so the rest of the code never sees raw
/// mpq expression templates.
class Rational {
public:
  Rational() = default;
  Rational(long v) : v_(v) {}                   // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}                    // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {}          // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n, const BigInt& d);
  Rational(std::int64_t n, std::int64_t d);

  static Rational parse(const std::string& s);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace liekit
