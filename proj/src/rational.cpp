#include "yperiod/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "yperiod/errors.hpp"

namespace yperiod {

Rational::Rational(long num, long den) {
  *this = normalize(mpz_class(num), mpz_class(den));
}

Rational Rational::normalize(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) {
    throw ZeroDenominator("rational with zero denominator");
  }
  Rational q;
  q.value_ = mpq_class(num, den);
  q.value_.canonicalize();
  return q;
}

Rational Rational::parse(std::string_view num, std::string_view den) {
  mpz_class n;
  mpz_class d;
  if (num.empty() || n.set_str(std::string(num), 10) != 0) {
    throw std::invalid_argument("bad numerator: " + std::string(num));
  }
  if (den.empty() || d.set_str(std::string(den), 10) != 0) {
    throw std::invalid_argument("bad denominator: " + std::string(den));
  }
  return normalize(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw DivisionByZero("inverse of zero");
  }
  Rational q;
  mpq_inv(q.value_.get_mpq_t(), value_.get_mpq_t());
  return q;
}

Rational Rational::operator-() const {
  Rational q;
  q.value_ = -value_;
  return q;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DivisionByZero("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (denominator() == 1) {
    return numerator().get_str();
  }
  return numerator().get_str() + "/" + denominator().get_str();
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(numerator().get_mpz_t(), 2) + mpz_sizeinbase(denominator().get_mpz_t(), 2);
}

std::size_t Rational::hash() const {
  const std::hash<std::string> h;
  return h(numerator().get_str(16)) * 31u + h(denominator().get_str(16));
}

Rational arith(ArithOp op, const Rational& a, const Rational& b) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
    case ArithOp::Div:
      return a / b;
  }
  throw std::logic_error("unknown arithmetic op");
}

Rational sample_positive(Rng& rng, std::uint32_t bound) {
  if (bound < 1) {
    throw std::invalid_argument("sample bound must be >= 1");
  }
  std::uniform_int_distribution<long> dist(1, static_cast<long>(bound));
  const long p = dist(rng);
  const long q = dist(rng);
  return Rational(p, q);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace yperiod
