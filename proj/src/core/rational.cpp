#include "liekit/core/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace liekit {

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(std::int64_t n, std::int64_t d)
    : Rational(BigInt(static_cast<long>(n)), BigInt(static_cast<long>(d))) {}

Rational Rational::parse(const std::string& s) {
  Rational r;
  if (r.v_.set_str(s, 10) != 0 || r.v_.get_den() == 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  r.v_.canonicalize();
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace liekit
