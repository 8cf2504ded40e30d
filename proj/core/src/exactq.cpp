#include "hypertile/exactq.hpp"

#include <numeric>

namespace hypertile {

namespace {

long long checked_mul(long long x, long long y) {
  long long out;
  if (__builtin_mul_overflow(x, y, &out)) throw DomainError("exact arithmetic: 64-bit overflow");
  return out;
}

long long checked_add(long long x, long long y) {
  long long out;
  if (__builtin_add_overflow(x, y, &out)) throw DomainError("exact arithmetic: 64-bit overflow");
  return out;
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den_ == 0) throw DomainError("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational operator+(const Rational& x, const Rational& y) {
  return Rational(checked_add(checked_mul(x.num_, y.den_), checked_mul(y.num_, x.den_)),
                  checked_mul(x.den_, y.den_));
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  return Rational(checked_mul(x.num_, y.num_), checked_mul(x.den_, y.den_));
}

int QSqrt3::sign() const {
  const int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with 3 b^2 exactly.
  const Rational lhs = a_ * a_;
  const Rational rhs = Rational(3) * (b_ * b_);
  const Rational diff = lhs - rhs;  // sign(a + b sqrt3) = sa * sign(a^2 - 3 b^2)
  if (diff.is_zero()) return 0;
  return sa * diff.sign();
}

double QSqrt3::to_double() const {
  return a_.to_double() + b_.to_double() * 1.7320508075688772935;
}

std::string QSqrt3::str() const {
  if (b_.is_zero()) return a_.str();
  if (a_.is_zero()) return b_.str() + "*sqrt(3)";
  return a_.str() + (b_.sign() > 0 ? " + " : " - ") +
         (b_.sign() > 0 ? b_ : -b_).str() + "*sqrt(3)";
}

QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y) {
  // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + 3 b1 b2) + (a1 b2 + a2 b1) s
  return {x.a_ * y.a_ + Rational(3) * (x.b_ * y.b_), x.a_ * y.b_ + y.a_ * x.b_};
}

}  // namespace hypertile
